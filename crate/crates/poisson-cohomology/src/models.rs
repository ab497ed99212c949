//! The Poisson structures under study: the general Jacobian constructor in
//! four variables, the Lefschetz-point model, the fold-circle model, the
//! tubular-neighbourhood involution, and the 3-variable cone restriction.

use num::Zero;

use crate::mvfield::{basis_indices, schouten, sort_sign, MVec};
use crate::polyalg::{rat, Poly, Rational};
use crate::Error;

/// Data of a Jacobian structure `π_{ij} = -μ · (dx_i ∧ dx_j ∧ dP1 ∧ dP2)/vol`.
#[derive(Clone, Debug)]
pub struct JacobianData {
    pub mu: Poly,
    pub p1: Poly,
    pub p2: Poly,
}

/// A validated Poisson structure with its Casimirs and grading metadata.
#[derive(Clone, Debug)]
pub struct PoissonModel {
    pub name: String,
    pub nvars: usize,
    pub pi: MVec,
    pub casimirs: Vec<Poly>,
    /// Common homogeneity degree of the bivector coefficients; `-1` when the
    /// coefficients are not jointly homogeneous (such a model is excluded
    /// from the graded cohomology pipeline).
    pub coeff_degree: i64,
    pub var_names: Vec<String>,
    pub jacobian: Option<JacobianData>,
}

impl PoissonModel {
    fn validate(&self) -> Result<(), Error> {
        if self.pi.k() != 2 || self.pi.nvars() != self.nvars {
            return Err(Error::Model("pi must be a bivector on the model's variables".into()));
        }
        if !schouten(&self.pi, &self.pi).is_zero() {
            return Err(Error::Model(format!("[pi,pi] != 0 for model {}", self.name)));
        }
        for c in &self.casimirs {
            if !schouten(&self.pi, &MVec::scalar(c.clone())).is_zero() {
                return Err(Error::Model(format!("non-Casimir listed for model {}", self.name)));
            }
        }
        Ok(())
    }

    /// Names usable for rendering coefficients of this model.
    pub fn names(&self) -> Vec<&str> {
        self.var_names.iter().map(|s| s.as_str()).collect()
    }

    pub fn is_graded(&self) -> bool {
        self.coeff_degree >= 0
    }
}

fn common_degree(pi: &MVec) -> i64 {
    let mut deg: Option<i64> = None;
    for c in pi.coeffs() {
        match c.homogeneous_degree() {
            Some(-1) => {}
            Some(d) => match deg {
                None => deg = Some(d),
                Some(e) if e != d => return -1,
                _ => {}
            },
            None => return -1,
        }
    }
    deg.unwrap_or(0)
}

fn default_names(nvars: usize, zero_based: bool) -> Vec<String> {
    let off = if zero_based { 0 } else { 1 };
    (0..nvars).map(|i| format!("x{}", i + off)).collect()
}

/// `π_{ij} = -μ · minor_{ij}` where `minor_{ij}` is the coefficient of the
/// volume form in `dx_i ∧ dx_j ∧ dP1 ∧ dP2`. Both `P1` and `P2` are Casimirs
/// by construction, and `[π,π] = 0` holds for every choice of data.
pub fn jacobian_bivector(mu: Rational, p1: Poly, p2: Poly) -> Result<PoissonModel, Error> {
    jacobian_bivector_poly(Poly::constant(4, mu), p1, p2)
}

/// The same constructor with a polynomial conformal factor. Models whose
/// coefficients come out non-homogeneous are built but flagged ungraded.
pub fn jacobian_bivector_poly(mu: Poly, p1: Poly, p2: Poly) -> Result<PoissonModel, Error> {
    for p in [&mu, &p1, &p2] {
        if p.nvars() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: p.nvars() });
        }
    }
    let mut coeffs = Vec::with_capacity(6);
    for idx in basis_indices(4, 2) {
        let (i, j) = (idx[0], idx[1]);
        let comp: Vec<u8> = (0..4).filter(|t| *t != i && *t != j).collect();
        let (k, l) = (comp[0] as usize, comp[1] as usize);
        let perm = [i, j, comp[0], comp[1]];
        let (sign, _) = sort_sign(&perm).expect("distinct indices");
        let minor = p1.partial(k).mul(&p2.partial(l)).sub(&p1.partial(l).mul(&p2.partial(k)));
        coeffs.push(minor.mul(&mu).scale(&crate::polyalg::rint(-sign as i64)));
    }
    let pi = MVec::from_coeffs(4, 2, coeffs)?;
    let model = PoissonModel {
        name: "jacobian".into(),
        nvars: 4,
        coeff_degree: common_degree(&pi),
        pi,
        casimirs: vec![p1.clone(), p2.clone()],
        var_names: default_names(4, false),
        jacobian: Some(JacobianData { mu, p1, p2 }),
    };
    model.validate()?;
    Ok(model)
}

/// The Lefschetz-point model: the Jacobian structure of the two quadratic
/// Casimirs `P1 = x1² - x2² + x3² - x4²` and `P2 = 2(x1 x2 + x3 x4)` with
/// conformal factor `-1/4`. Brackets: `{x1,x2} = x3² + x4²`,
/// `{x3,x4} = x1² + x2²`, mixed brackets bilinear.
pub fn model_lefschetz() -> PoissonModel {
    let x = |i: usize| Poly::var(4, i);
    let p1 = x(0).pow(2).sub(&x(1).pow(2)).add(&x(2).pow(2)).sub(&x(3).pow(2));
    let p2 = x(0).mul(&x(1)).add(&x(2).mul(&x(3))).scale(&rat(2, 1));
    let mut m = jacobian_bivector(rat(-1, 4), p1, p2).expect("lefschetz model is valid");
    m.name = "lefschetz".into();
    m
}

/// The fold-circle model `π_Γ = x1 ∂2∧∂3 + x2 ∂1∧∂3 - x3 ∂1∧∂2` in variables
/// `(x0, x1, x2, x3)`, with Casimirs `Q1 = x0` and `Q2 = -x1² + x2² + x3²`.
/// It coincides with the Jacobian structure of `(1/2, Q1, Q2)`.
pub fn model_fold() -> PoissonModel {
    let x = |i: usize| Poly::var(4, i);
    let q2 = x(1).pow(2).neg().add(&x(2).pow(2)).add(&x(3).pow(2));
    let mut m = jacobian_bivector(rat(1, 2), x(0), q2).expect("fold model is valid");
    m.name = "fold".into();
    m.var_names = default_names(4, true);
    m
}

/// Pushforward of a multivector field along the involution
/// `(x0, x1, x2, x3) -> (x0, -x1, x2, -x3)` of the fold model's tubular
/// neighbourhood: negate the variables `x1, x3` in every coefficient and
/// flip the sign of every slot containing `∂1` or `∂3` an odd number of
/// times.
pub fn involution_pushforward(x: &MVec) -> MVec {
    assert_eq!(x.nvars(), 4);
    let flips: [u8; 2] = [1, 3];
    let mut coeffs = Vec::with_capacity(x.coeffs().len());
    for (pos, idx) in basis_indices(4, x.k()).iter().enumerate() {
        let odd = idx.iter().filter(|i| flips.contains(i)).count();
        let c = x.coeffs()[pos].flip_vars(&[1, 3]);
        coeffs.push(if odd % 2 == 1 { c.neg() } else { c });
    }
    MVec::from_coeffs(4, x.k(), coeffs).expect("slot count preserved")
}

/// The cone restriction of the fold model to the slice `x0 = const`: the
/// structure `π_φ` on polynomials in `(x1, x2, x3)` with
/// `{x1,x2} = -x3`, `{x1,x3} = x2`, `{x2,x3} = x1`, so that the brackets of
/// the coordinates match those of `π_Γ` on the nose. Its Casimir is
/// `φ = (x1² - x2² - x3²)/2`, and `π_φ` is the structure
/// `{x_i, x_j} = ε_{ijk} ∂φ/∂x_k` attached to that potential.
pub fn restrict_to_3d() -> PoissonModel {
    let x = |i: usize| Poly::var(3, i);
    let phi = x(0).pow(2).sub(&x(1).pow(2)).sub(&x(2).pow(2)).scale(&rat(1, 2));
    let coeffs = vec![x(2).neg(), x(1), x(0)];
    let pi = MVec::from_coeffs(3, 2, coeffs).expect("three slots");
    let model = PoissonModel {
        name: "fold-3d".into(),
        nvars: 3,
        coeff_degree: common_degree(&pi),
        pi,
        casimirs: vec![phi],
        var_names: default_names(3, false),
        jacobian: None,
    };
    model.validate().expect("cone restriction is valid");
    model
}

/// Parse a model designator: "fold", "lefschetz", or
/// "jacobian:<mu>:<P1>:<P2>" with `mu` a rational `n` or `n/d` and the
/// polynomials in the text syntax of `parse_poly` (variables `x1..x4`).
pub fn parse_model(s: &str) -> Result<PoissonModel, Error> {
    match s {
        "fold" => Ok(model_fold()),
        "lefschetz" => Ok(model_lefschetz()),
        _ => {
            let rest = s
                .strip_prefix("jacobian:")
                .ok_or_else(|| Error::Model(format!("unknown model '{s}'")))?;
            let parts: Vec<&str> = rest.splitn(3, ':').collect();
            if parts.len() != 3 {
                return Err(Error::Model("expected jacobian:<mu>:<P1>:<P2>".into()));
            }
            let mu = parse_rational(parts[0])?;
            let p1 = crate::polyalg::parse_poly(4, parts[1])?;
            let p2 = crate::polyalg::parse_poly(4, parts[2])?;
            jacobian_bivector(mu, p1, p2)
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
            let d: i64 = d.trim().parse().map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
            rat(n, d)
        }
        None => {
            let n: i64 = s.trim().parse().map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
            rat(n, 1)
        }
    };
    if r.is_zero() {
        return Err(Error::Model("conformal factor must be nonzero".into()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mvfield::{lichnerowicz_d, modular_vf, VolumeForm};
    use crate::polyalg::rint;

    fn x(i: usize) -> Poly {
        Poly::var(4, i)
    }

    #[test]
    fn fold_slots() {
        let m = model_fold();
        assert_eq!(*m.pi.coeff(&[1, 2]), x(3).neg());
        assert_eq!(*m.pi.coeff(&[1, 3]), x(2));
        assert_eq!(*m.pi.coeff(&[2, 3]), x(1));
        assert!(m.pi.coeff(&[0, 1]).is_zero());
        assert!(m.pi.coeff(&[0, 2]).is_zero());
        assert!(m.pi.coeff(&[0, 3]).is_zero());
        assert_eq!(m.coeff_degree, 1);
    }

    #[test]
    fn fold_hamiltonian_of_x1() {
        let m = model_fold();
        let h = lichnerowicz_d(&m.pi, &MVec::scalar(x(1)));
        let expect = MVec::basis(4, &[2]).mul_poly(&x(3)).sub(&MVec::basis(4, &[3]).mul_poly(&x(2)));
        assert_eq!(h, expect);
    }

    #[test]
    fn lefschetz_brackets() {
        let m = model_lefschetz();
        assert_eq!(*m.pi.coeff(&[0, 1]), x(2).pow(2).add(&x(3).pow(2)));
        assert_eq!(*m.pi.coeff(&[2, 3]), x(0).pow(2).add(&x(1).pow(2)));
        assert_eq!(*m.pi.coeff(&[0, 2]), x(1).mul(&x(2)).sub(&x(0).mul(&x(3))));
        assert_eq!(m.coeff_degree, 2);
    }

    #[test]
    fn constant_casimir_pair_gives_constant_bivector() {
        let m = jacobian_bivector(rint(1), x(2), x(3)).unwrap();
        assert_eq!(*m.pi.coeff(&[0, 1]), Poly::one(4).neg());
        for idx in [[0u8, 2], [0, 3], [1, 2], [1, 3], [2, 3]] {
            assert!(m.pi.coeff(&idx).is_zero());
        }
        assert_eq!(m.coeff_degree, 0);
    }

    #[test]
    fn models_are_poisson_with_vanishing_modular_field() {
        let vol = VolumeForm::standard(4);
        for m in [model_fold(), model_lefschetz()] {
            assert!(schouten(&m.pi, &m.pi).is_zero());
            assert!(crate::mvfield::wedge(&m.pi, &m.pi).is_zero(), "rank > 2 in {}", m.name);
            assert!(modular_vf(&m.pi, &vol).is_zero());
            for c in &m.casimirs {
                assert!(lichnerowicz_d(&m.pi, &MVec::scalar(c.clone())).is_zero());
            }
        }
    }

    #[test]
    fn involution_fixes_fold_bivector() {
        let m = model_fold();
        assert_eq!(involution_pushforward(&m.pi), m.pi);
    }

    #[test]
    fn involution_on_basis_fields_and_square() {
        assert_eq!(involution_pushforward(&MVec::basis(4, &[1])), MVec::basis(4, &[1]).neg());
        assert_eq!(involution_pushforward(&MVec::basis(4, &[2])), MVec::basis(4, &[2]));
        let w = MVec::basis(4, &[0, 3]).mul_poly(&x(1).mul(&x(2))).add(&MVec::basis(4, &[1, 2]).mul_poly(&x(3).pow(2)));
        assert_eq!(involution_pushforward(&involution_pushforward(&w)), w);
    }

    #[test]
    fn cone_restriction_matches_fold_brackets() {
        let m = restrict_to_3d();
        let y = |i: usize| Poly::var(3, i);
        assert_eq!(*m.pi.coeff(&[0, 1]), y(2).neg());
        assert_eq!(*m.pi.coeff(&[0, 2]), y(1));
        assert_eq!(*m.pi.coeff(&[1, 2]), y(0));
        assert!(schouten(&m.pi, &m.pi).is_zero());
        assert!(lichnerowicz_d(&m.pi, &MVec::scalar(m.casimirs[0].clone())).is_zero());
    }

    #[test]
    fn parse_model_round_trips() {
        assert_eq!(parse_model("fold").unwrap().pi, model_fold().pi);
        assert_eq!(parse_model("lefschetz").unwrap().pi, model_lefschetz().pi);
        let m = parse_model("jacobian:-1/4:x1^2 - x2^2 + x3^2 - x4^2:2 x1 x2 + 2 x3 x4").unwrap();
        assert_eq!(m.pi, model_lefschetz().pi);
        assert!(parse_model("jacobian:0:x1:x2").is_err());
        assert!(parse_model("nope").is_err());
    }
}
