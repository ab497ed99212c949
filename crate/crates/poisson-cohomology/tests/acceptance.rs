//! End-to-end acceptance suite. Each test prints one line for its criterion;
//! all comparisons are exact (no floating point, no tolerances).

use std::time::Instant;

use poisson_cohomology::calc4::identities;
use poisson_cohomology::coboundary::{d_fold_split, FoldPart};
use poisson_cohomology::cohomology::{
    betti, exact_rank, generators_for, graded_matrix, hilbert_free_module,
    lefschetz_module_generator_counts, milnor_quotient_dims, module_generators, predicted_betti,
    product_is_zero, verify_generators, GradedMatrix,
};
use poisson_cohomology::models::{
    involution_pushforward, model_fold, model_lefschetz, restrict_to_3d, PoissonModel,
};
use poisson_cohomology::mvfield::{modular_vf, schouten, wedge, MVec, VolumeForm};
use poisson_cohomology::polyalg::{homogeneous_dim, monomial_basis, Poly, Rational};
use poisson_cohomology::report::{generators_report, oracle_report};

fn announce(n: usize, name: &str, started: Instant) {
    println!("acceptance {n} ({name}): PASS [{:.1}s]", started.elapsed().as_secs_f64());
}

#[test]
fn criterion_1_identities() {
    let t = Instant::now();
    let results = identities::run_suite(20260826, 200, 3);
    assert_eq!(results.len(), 13);
    for r in &results {
        assert!(r.pass, "identity {} failed", r.name);
    }
    assert!(t.elapsed().as_secs() < 10, "identity suite exceeded 10s");
    announce(1, "thirteen identities, 200 trials each", t);
}

#[test]
fn criterion_2_oracle_equivalence() {
    let t = Instant::now();
    for model in [model_fold(), model_lefschetz()] {
        let rep = oracle_report(&model, 20260826, 100, 4);
        assert!(!rep.checks.is_empty());
        for c in &rep.checks {
            assert!(c.pass, "{}: {} — {}", model.name, c.name, c.details);
        }
    }
    assert!(t.elapsed().as_secs() < 60, "oracle suite exceeded 60s");
    announce(2, "closed formulas equal the bracket on both models", t);
}

#[test]
fn criterion_3_complex_property() {
    let t = Instant::now();
    for (model, d_max) in [(model_fold(), 8usize), (model_lefschetz(), 6)] {
        let kind = poisson_cohomology::cohomology::default_kind(&model);
        let shift = model.coeff_degree - 1;
        for k in 0..3usize {
            for d in 0..=d_max {
                let a = graded_matrix(&model, kind, k, d);
                let b = graded_matrix(&model, kind, k + 1, (d as i64 + shift) as usize);
                assert!(product_is_zero(&b, &a), "{} d∘d != 0 at k={k} d={d}", model.name);
            }
        }
    }
    assert!(t.elapsed().as_secs() < 120, "complex check exceeded 120s");
    announce(3, "matrix-level d∘d = 0", t);
}

#[test]
fn criterion_4_fold_betti_table() {
    let t = Instant::now();
    let m = model_fold();
    let kind = poisson_cohomology::cohomology::default_kind(&m);
    let row = hilbert_free_module(&[0], &[1, 2], 8);
    assert_eq!(row, vec![1, 1, 2, 2, 3, 3, 4, 4, 5]);
    for d in 0..=8usize {
        for k in [0usize, 1, 3, 4] {
            assert_eq!(betti(&m, kind, k, d), row[d], "fold H^{k} degree {d}");
        }
        assert_eq!(betti(&m, kind, 2, d), 0, "fold H^2 degree {d}");
    }
    announce(4, "fold Betti table, degrees 0..8", t);
}

#[test]
fn criterion_5_lefschetz_betti_table() {
    let t = Instant::now();
    let m = model_lefschetz();
    let kind = poisson_cohomology::cohomology::default_kind(&m);
    let expected: [[usize; 6]; 5] = [
        [1, 0, 2, 0, 3, 0],
        [0, 4, 0, 8, 0, 12],
        [2, 4, 12, 8, 22, 12],
        [4, 8, 12, 20, 20, 32],
        [1, 4, 6, 8, 11, 12],
    ];
    for k in 0..=4usize {
        for d in 0..=5usize {
            let b = betti(&m, kind, k, d);
            assert_eq!(b, expected[k][d], "lefschetz H^{k} degree {d}");
            assert_eq!(predicted_betti(&m, k, d), Some(expected[k][d]));
        }
    }
    // hand-checkable witnesses for the two lowest entries that exceed a
    // rank-one-module count: the quaternionic rotations and the constant
    // holomorphic bivector parts
    let diff = |x: &MVec| schouten(&m.pi, x);
    for y in poisson_cohomology::cohomology::lefschetz_vector_classes() {
        assert!(diff(&y).is_zero());
    }
    for c in poisson_cohomology::cohomology::lefschetz_constant_bivectors() {
        assert!(diff(&c).is_zero());
    }
    assert!(t.elapsed().as_secs() < 600, "lefschetz table exceeded 10 min");
    announce(5, "lefschetz Betti table, degrees 0..5", t);
}

#[test]
fn criterion_6_generators() {
    let t = Instant::now();
    let fold = model_fold();
    let fkind = poisson_cohomology::cohomology::default_kind(&fold);
    for k in 0..=4usize {
        let rep = verify_generators(&fold, fkind, k, &generators_for(&fold, k), 8);
        assert!(rep.all_ok(), "fold H^{k}: {rep:?}");
    }
    let lef = model_lefschetz();
    let lkind = poisson_cohomology::cohomology::default_kind(&lef);
    let diff = |x: &MVec| schouten(&lef.pi, x);
    for k in 0..=4usize {
        let gens = generators_for(&lef, k);
        for g in &gens {
            assert!(diff(g).is_zero(), "lefschetz H^{k} generator not closed");
        }
        if k <= 1 {
            let rep = verify_generators(&lef, lkind, k, &gens, 5);
            assert!(rep.all_ok(), "lefschetz H^{k}: {rep:?}");
        } else {
            let ms = module_generators(&lef, lkind, k, 5);
            assert_eq!(
                ms.new_generators,
                lefschetz_module_generator_counts(k).unwrap().to_vec(),
                "lefschetz H^{k} module generator counts"
            );
        }
    }
    let rep = generators_report(&lef, 4, 5);
    assert!(rep.all_pass(), "{rep:?}");
    announce(6, "generator verification", t);
}

fn scaled(model: &PoissonModel, num: i64, den: i64) -> PoissonModel {
    let c = Rational::new(num.into(), den.into());
    let mut m = model.clone();
    m.pi = m.pi.scale(&c);
    m.jacobian = None;
    m
}

#[test]
fn criterion_7_structural() {
    let t = Instant::now();
    for model in [model_fold(), model_lefschetz()] {
        assert!(schouten(&model.pi, &model.pi).is_zero(), "[pi,pi] != 0 for {}", model.name);
        assert!(wedge(&model.pi, &model.pi).is_zero(), "pi∧pi != 0 for {}", model.name);
        let vol = VolumeForm::standard(model.nvars);
        assert!(modular_vf(&model.pi, &vol).is_zero(), "modular field of {}", model.name);
    }
    let fold = model_fold();
    assert_eq!(involution_pushforward(&fold.pi), fold.pi);
    // Betti tables are invariant under rescaling the bivector
    for model in [model_fold(), model_lefschetz()] {
        let kind = poisson_cohomology::cohomology::default_kind(&model);
        for scaled_model in [scaled(&model, 3, 1), scaled(&model, -1, 4)] {
            for k in 0..=4usize {
                for d in 0..=2usize {
                    assert_eq!(
                        betti(&scaled_model, None, k, d),
                        betti(&model, kind, k, d),
                        "{} scaled, k={k} d={d}",
                        model.name
                    );
                }
            }
        }
    }
    announce(7, "structural checks and scaling invariance", t);
}

/// Matrix of a slot-tuple operator on homogeneous degree-`d` inputs, for the
/// fold splitting comparisons (coefficient degree shift 0).
fn operator_matrix(
    slots_in: usize,
    slots_out: usize,
    d: usize,
    op: &dyn Fn(&[Poly]) -> Vec<Poly>,
) -> GradedMatrix {
    let basis = monomial_basis(4, d);
    let dim = homogeneous_dim(4, d);
    let mut columns = Vec::new();
    for s in 0..slots_in {
        for mono in &basis {
            let mut input = vec![Poly::zero(4); slots_in];
            input[s] = Poly::monomial(4, mono.clone(), Rational::from_integer(1.into()));
            let out = op(&input);
            assert_eq!(out.len(), slots_out);
            let mut col: Vec<(usize, Rational)> = Vec::new();
            for (slot, p) in out.iter().enumerate() {
                for (e, v) in p.terms() {
                    let i = basis.iter().position(|m| m == e).expect("degree preserved");
                    col.push((slot * dim + i, v.clone()));
                }
            }
            col.sort_by_key(|(r, _)| *r);
            columns.push(col);
        }
    }
    GradedMatrix::from_columns(slots_out * dim, columns)
}

#[test]
fn criterion_8_cone_milnor_and_splitting() {
    let t = Instant::now();
    let cone = restrict_to_3d();
    for d in 0..=8usize {
        assert_eq!(betti(&cone, None, 1, d), 0, "cone H^1 degree {d}");
        assert_eq!(betti(&cone, None, 2, d), 0, "cone H^2 degree {d}");
    }
    let dims = milnor_quotient_dims(&cone.casimirs[0], 2);
    assert_eq!(dims.iter().sum::<usize>(), 1, "Milnor number");

    // splitting of the fold coboundaries: the mixed blocks agree up to a
    // global sign, and the pure block is the cone differential with x0 as a
    // parameter (again up to sign)
    let split = |part: FoldPart| {
        move |input: &[Poly]| d_fold_split(part, input).expect("valid shapes")
    };
    // cone operator with x0 as a parameter: (d0 g)_l = sum_m pi_lm ∂_m g with
    // pi_12 = −x3, pi_13 = x2, pi_23 = x1 in the fold coordinates x1..x3
    let cone_d0 = |input: &[Poly]| -> Vec<Poly> {
        let f = &input[0];
        let x = |i: usize| Poly::var(4, i);
        vec![
            x(3).neg().mul(&f.partial(2)).add(&x(2).mul(&f.partial(3))),
            x(3).mul(&f.partial(1)).add(&x(1).mul(&f.partial(3))),
            x(2).neg().mul(&f.partial(1)).sub(&x(1).mul(&f.partial(2))),
        ]
    };
    for d in 0..=8usize {
        let d11 = operator_matrix(1, 3, d, &split(FoldPart::D11));
        let d12 = operator_matrix(3, 3, d, &split(FoldPart::D12));
        let d21 = operator_matrix(3, 3, d, &split(FoldPart::D21));
        let cone_m = operator_matrix(1, 3, d, &cone_d0);
        for (a, b) in d21.columns.iter().zip(&d12.columns) {
            let neg: Vec<(usize, Rational)> = b.iter().map(|(r, e)| (*r, -e.clone())).collect();
            assert_eq!(*a, neg, "d21 != -d12 at degree {d}");
        }
        for (a, b) in d11.columns.iter().zip(&cone_m.columns) {
            let neg: Vec<(usize, Rational)> = b.iter().map(|(r, e)| (*r, -e.clone())).collect();
            assert_eq!(*a, neg, "d11 != -(cone d0) at degree {d}");
        }
        // split Betti agreement: ker d1 = ker d11 ⊕ ker d12, im d0 lies in
        // the mixed block and has the rank of d11
        let fold = model_fold();
        let h1 = betti(&fold, poisson_cohomology::cohomology::default_kind(&fold), 1, d);
        let n11 = d11.cols - exact_rank(&d11);
        let n12 = d12.cols - exact_rank(&d12);
        assert_eq!(h1, n11 + n12 - exact_rank(&d11), "split H^1 at degree {d}");
    }
    announce(8, "cone subcomplex, Milnor number, fold splitting", t);
}
