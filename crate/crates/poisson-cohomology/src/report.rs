//! Machine-readable reports for the batch interface: named pass/fail checks
//! plus Betti cells, serialized to JSON or CSV. Reports are deterministic
//! functions of (model, command, seed) — no timestamps, no environment.

use serde::Serialize;

use crate::calc4::identities;
use crate::coboundary::{d_apply, CoboundaryKind};
use crate::cohomology::{
    betti_table, default_kind, generators_for, graded_matrix, lefschetz_module_generator_counts,
    module_generators, product_is_zero, verify_generators, BettiCell,
};
use crate::models::PoissonModel;
use crate::mvfield::schouten;
use crate::sampling::{random_homogeneous_mvec, rng};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub model: String,
    pub command: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub betti: Vec<BettiCell>,
}

impl Report {
    fn new(model: &str, command: &str, seed: u64) -> Self {
        Report {
            model: model.to_string(),
            command: command.to_string(),
            seed,
            checks: Vec::new(),
            betti: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        let cells_ok = self
            .betti
            .iter()
            .all(|c| c.predicted.map_or(true, |p| p == c.computed));
        self.checks.iter().all(|c| c.pass) && cells_ok
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Betti cells as CSV; commands without a table emit just the header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,degree,computed,predicted,match\n");
        for c in &self.betti {
            let (p, m) = match c.predicted {
                Some(p) => (p.to_string(), (p == c.computed).to_string()),
                None => (String::new(), "na".to_string()),
            };
            out.push_str(&format!("{},{},{},{},{}\n", c.k, c.degree, c.computed, p, m));
        }
        out
    }

    fn push(&mut self, name: impl Into<String>, pass: bool, details: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, details: details.into() });
    }

    /// Merge another report's checks and cells.
    pub fn absorb(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.betti.extend(other.betti);
    }
}

/// The coboundary formula families that apply to a model, besides the
/// Schouten oracle itself.
pub fn applicable_kinds(model: &PoissonModel) -> Vec<CoboundaryKind> {
    let mut out = Vec::new();
    if model.name == "fold" {
        out.push(CoboundaryKind::FoldDirect);
    }
    if model.jacobian.is_some() {
        if let Some(CoboundaryKind::JacobianConstQuarter) = default_kind(model) {
            out.push(CoboundaryKind::JacobianConstQuarter);
        }
        out.push(CoboundaryKind::JacobianGeneral);
    }
    out
}

fn kind_name(kind: CoboundaryKind) -> &'static str {
    match kind {
        CoboundaryKind::JacobianGeneral => "jacobian-general",
        CoboundaryKind::JacobianConstQuarter => "jacobian-const-quarter",
        CoboundaryKind::FoldDirect => "fold-direct",
    }
}

/// Run the thirteen vector-calculus identities on seeded random inputs.
pub fn identities_report(seed: u64, trials: usize, maxdeg: usize) -> Report {
    let mut rep = Report::new("-", "verify identities", seed);
    for r in identities::run_suite(seed, trials, maxdeg) {
        rep.push(r.name, r.pass, format!("{trials} random trials, degree <= {maxdeg}"));
    }
    rep
}

/// Compare every applicable closed-form coboundary against the Schouten
/// bracket on random homogeneous inputs.
pub fn oracle_report(model: &PoissonModel, seed: u64, trials: usize, d_max: usize) -> Report {
    let mut rep = Report::new(&model.name, "oracle", seed);
    let r = &mut rng(seed);
    for kind in applicable_kinds(model) {
        for k in 0..model.nvars.min(4) {
            let mut pass = true;
            let mut witness = String::new();
            for d in 0..=d_max {
                for _ in 0..trials {
                    let x = random_homogeneous_mvec(r, model.nvars, k, d);
                    let lhs = d_apply(kind, model, &x).expect("applicable kind");
                    let rhs = schouten(&model.pi, &x);
                    if lhs != rhs {
                        pass = false;
                        witness = format!("mismatch at k={k} degree={d}");
                    }
                }
            }
            rep.push(
                format!("oracle_{}_k{k}", kind_name(kind)),
                pass,
                if pass {
                    format!("{trials} inputs per degree <= {d_max} agree with the bracket")
                } else {
                    witness
                },
            );
        }
    }
    rep
}

/// Matrix-level d∘d = 0 on every graded slice up to `d_max`.
pub fn complex_report(model: &PoissonModel, k_max: usize, d_max: usize) -> Report {
    let mut rep = Report::new(&model.name, "verify complex", 0);
    let kind = default_kind(model);
    let shift = model.coeff_degree - 1;
    for k in 0..k_max.min(model.nvars) {
        let mut pass = true;
        for d in 0..=d_max {
            let a = graded_matrix(model, kind, k, d);
            let next = d as i64 + shift;
            if next < 0 {
                continue;
            }
            let b = graded_matrix(model, kind, k + 1, next as usize);
            if !product_is_zero(&b, &a) {
                pass = false;
            }
        }
        rep.push(
            format!("d{}_then_d{}_is_zero", k, k + 1),
            pass,
            format!("all degree slices <= {d_max}"),
        );
    }
    rep
}

/// Graded Betti table with predictions where on record.
pub fn betti_report(model: &PoissonModel, k_max: usize, d_max: usize) -> Report {
    let mut rep = Report::new(&model.name, "betti", 0);
    let table = betti_table(model, default_kind(model), k_max, d_max);
    let pass = table.all_match();
    rep.betti = table.cells;
    rep.push(
        "betti_matches_predictions",
        pass,
        format!("k <= {k_max}, degree <= {d_max}; cells without a prediction are informational"),
    );
    rep
}

/// Generator verification: complete spanning lists where the cohomology is a
/// finitely generated Casimir module, cocycle/nontriviality plus
/// kernel-completion counts elsewhere.
pub fn generators_report(model: &PoissonModel, k_max: usize, d_max: usize) -> Report {
    let mut rep = Report::new(&model.name, "generators", 0);
    let kind = default_kind(model);
    for k in 0..=k_max.min(model.nvars) {
        let gens = generators_for(model, k);
        if gens.is_empty() && !(model.name == "fold" && k == 2) {
            continue;
        }
        let check = verify_generators(model, kind, k, &gens, d_max);
        let cocycles_ok = check.cocycles.iter().all(|&b| b);
        rep.push(
            format!("h{k}_generators_are_cocycles"),
            cocycles_ok,
            format!("{} named classes", gens.len()),
        );
        let finitely_generated = model.name == "fold" || k <= 1;
        if finitely_generated {
            rep.push(
                format!("h{k}_generators_span"),
                check.all_ok(),
                format!("Casimir multiples match every dimension, degree <= {d_max}"),
            );
        } else {
            let dm = d_max.min(5);
            let ms = module_generators(model, kind, k, dm);
            let expected = lefschetz_module_generator_counts(k)
                .map(|row| row[..=dm].to_vec())
                .unwrap_or_default();
            rep.push(
                format!("h{k}_module_generator_counts"),
                ms.new_generators == expected,
                format!("fresh generators per degree {:?}", ms.new_generators),
            );
        }
    }
    rep
}

/// Everything at once, for one model.
pub fn report_all(model: &PoissonModel, seed: u64, trials: usize, k_max: usize, d_max: usize) -> Report {
    let mut rep = Report::new(&model.name, "report-all", seed);
    rep.absorb(identities_report(seed, trials, 3));
    rep.absorb(oracle_report(model, seed, trials.min(25), 3));
    rep.absorb(complex_report(model, k_max, d_max));
    rep.absorb(betti_report(model, k_max, d_max));
    rep.absorb(generators_report(model, k_max, d_max));
    rep
}
