//! Closed-form coboundary operators: the general conformal-factor formulas
//! for Jacobian structures in four variables, their specialization to the
//! constant factor -1/4, the explicit fold-model equations, and the splitting
//! of the fold differentials that isolates the 3-variable cone.

use crate::calc4::{
    apply_d, apply_k, apply_k_inv, apply_phi, barcross, barcross_with, cross, cross_with, div,
    dot4, dot6, from_mvec1, from_mvec2, from_mvec3, grad, nabla_barcross, nabla_cross, to_mvec1,
    to_mvec2, to_mvec3, boxtimes, CrossTuple6, Tuple4,
};
use crate::models::{model_fold, PoissonModel};
use crate::mvfield::{basis_position, MVec};
use crate::polyalg::{rat, Poly};
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoboundaryKind {
    /// The general-factor closed formulas; any Jacobian model.
    JacobianGeneral,
    /// The specialization to constant factor -1/4.
    JacobianConstQuarter,
    /// The explicit equations of the fold-circle model.
    FoldDirect,
}

/// Entry `(l, m)` of the antisymmetric coefficient matrix of a bivector.
pub fn pi_entry(pi: &MVec, l: usize, m: usize) -> Poly {
    use std::cmp::Ordering;
    match l.cmp(&m) {
        Ordering::Equal => Poly::zero(pi.nvars()),
        Ordering::Less => pi.coeffs()[basis_position(pi.nvars(), &[l as u8, m as u8])].clone(),
        Ordering::Greater => {
            pi.coeffs()[basis_position(pi.nvars(), &[m as u8, l as u8])].neg()
        }
    }
}

/// Slot `i` of the degree-0 coboundary as an operator on functions:
/// `g -> sum_m pi_im ∂_m g`. This is the operator-valued vector that the
/// closed d1 and d2 formulas contract against.
fn d0_slot(pi: &MVec, i: usize, g: &Poly) -> Poly {
    let mut acc = Poly::zero(pi.nvars());
    for m in 0..pi.nvars() {
        if m != i {
            acc = acc.add(&pi_entry(pi, i, m).mul(&g.partial(m)));
        }
    }
    acc
}

fn scale6(f: &Poly, v: &[Poly]) -> Vec<Poly> {
    v.iter().map(|p| p.mul(f)).collect()
}

fn add6(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

/// Entrywise directional derivative `Y(v)` of a 6-entry tuple.
fn dir6(y: &Tuple4, v: &[Poly]) -> Vec<Poly> {
    v.iter()
        .map(|e| {
            let mut acc = Poly::zero(4);
            for (i, f) in y.0.iter().enumerate() {
                acc = acc.add(&f.mul(&e.partial(i)));
            }
            acc
        })
        .collect()
}

fn jacobian_data(model: &PoissonModel) -> Result<(&Poly, CrossTuple6), Error> {
    let data = model
        .jacobian
        .as_ref()
        .ok_or_else(|| Error::Model(format!("model {} carries no Jacobian data", model.name)))?;
    Ok((&data.mu, cross(&grad(&data.p1), &grad(&data.p2))))
}

fn check_input(model: &PoissonModel, x: &MVec) -> Result<(), Error> {
    if x.nvars() != 4 || model.nvars != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: x.nvars() });
    }
    if x.k() > 3 {
        return Err(Error::Model(format!("no coboundary in degree {}", x.k())));
    }
    Ok(())
}

/// Dispatch on the formula family. Every branch returns exactly
/// `schouten(model.pi, x)`.
pub fn d_apply(kind: CoboundaryKind, model: &PoissonModel, x: &MVec) -> Result<MVec, Error> {
    match kind {
        CoboundaryKind::JacobianGeneral => d_jacobian_general(model, x),
        CoboundaryKind::JacobianConstQuarter => d_jacobian_const_quarter(model, x),
        CoboundaryKind::FoldDirect => {
            if model.pi != model_fold().pi {
                return Err(Error::Model("fold equations require the fold model".into()));
            }
            d_fold(x)
        }
    }
}

/// The general-factor formulas, valid for polynomial `mu`:
/// d0(g) = -mu ∇g ×̄ (∇P1 × ∇P2);
/// d1(Y) = K⁻¹[Y(mu ∇P1 × ∇P2) + φ(d0 × Y)];
/// d2(W) = -D[d0 ×̄ u + (∇mu ×̄ (∇P1 × ∇P2)) ×̄ u + ∂̄(mu ∇P1 × ∇P2) ⊠ u]
///         with u = φ(K(W));
/// d3(Z) = mu (∇ × D(Z)) · φ(∇P1 × ∇P2) + D(Z) · (∇mu ×̄ (∇P1 × ∇P2)).
pub fn d_jacobian_general(model: &PoissonModel, x: &MVec) -> Result<MVec, Error> {
    check_input(model, x)?;
    let (mu, cp) = jacobian_data(model)?;
    let mucp = scale6(mu, cp.raw());
    let pi = &model.pi;
    match x.k() {
        0 => {
            let g = &x.coeffs()[0];
            let t = barcross(&grad(g), cp.raw()).mul_poly(mu);
            Ok(to_mvec1(&t.scale(&rat(-1, 1))))
        }
        1 => {
            let y = from_mvec1(x);
            let t1 = dir6(&y, &mucp);
            let t2 = apply_phi(cross_with(&|i, g: &Poly| d0_slot(pi, i, g), &y.0).raw());
            Ok(to_mvec2(apply_k_inv(&add6(&t1, &t2))))
        }
        2 => {
            let w = from_mvec2(x);
            let u = apply_phi(&apply_k(&w.0));
            let a = barcross_with(&|i, g: &Poly| d0_slot(pi, i, g), &u);
            let b = barcross(&barcross(&grad(mu), cp.raw()), &u);
            let jet: [Vec<Poly>; 4] =
                std::array::from_fn(|i| mucp.iter().map(|e| e.partial(i)).collect());
            let c = boxtimes(&jet, &u);
            let total = a.add(&b).add(&c);
            Ok(to_mvec3(&apply_d(&total).scale(&rat(-1, 1))))
        }
        3 => {
            let dz = apply_d(&from_mvec3(x));
            let s = dot6(nabla_cross(&dz).raw(), &apply_phi(cp.raw()))
                .mul(mu)
                .add(&dot4(&dz, &barcross(&grad(mu), cp.raw())));
            Ok(MVec::from_coeffs(4, 4, vec![s])?)
        }
        _ => unreachable!(),
    }
}

/// The constant-factor -1/4 specialization:
/// d0(g) = 1/4 ∇g ×̄ (∇P1 × ∇P2);
/// d1(Y) = 1/4 K⁻¹[Div(Y)(∇P1 × ∇P2) + ∇ × (Y ×̄ φ(∇P1 × ∇P2))];
/// d2(W) = 1/4 D[(∇ ×̄ K(W)) ×̄ φ(∇P1 × ∇P2) + ∇(K(W) · φ(∇P1 × ∇P2))];
/// d3(Z) = -1/4 (∇ × D(Z)) · φ(∇P1 × ∇P2).
pub fn d_jacobian_const_quarter(model: &PoissonModel, x: &MVec) -> Result<MVec, Error> {
    check_input(model, x)?;
    let (mu, cp) = jacobian_data(model)?;
    if *mu != Poly::constant(4, rat(-1, 4)) {
        return Err(Error::Model("specialized formulas require constant factor -1/4".into()));
    }
    let q = rat(1, 4);
    let phicp = apply_phi(cp.raw());
    match x.k() {
        0 => {
            let g = &x.coeffs()[0];
            Ok(to_mvec1(&barcross(&grad(g), cp.raw()).scale(&q)))
        }
        1 => {
            let y = from_mvec1(x);
            let t1 = scale6(&div(&y), cp.raw());
            let t2 = nabla_cross(&barcross(&y, &phicp));
            let combined = apply_k_inv(&add6(&t1, t2.raw()));
            Ok(to_mvec2(combined.iter().map(|p| p.scale(&q)).collect()))
        }
        2 => {
            let kw = apply_k(&from_mvec2(x).0);
            let a = barcross(&nabla_barcross(&kw), &phicp);
            let b = grad(&dot6(&kw, &phicp));
            Ok(to_mvec3(&apply_d(&a.add(&b)).scale(&q)))
        }
        3 => {
            let dz = apply_d(&from_mvec3(x));
            let s = dot6(nabla_cross(&dz).raw(), &phicp).scale(&rat(-1, 4));
            Ok(MVec::from_coeffs(4, 4, vec![s])?)
        }
        _ => unreachable!(),
    }
}

/// The alternative top-degree form `d3(Z) = -1/4 Div[D(Z) ×̄ (∇P1 × ∇P2)]`.
pub fn d3_const_quarter_alt(model: &PoissonModel, z: &MVec) -> Result<MVec, Error> {
    check_input(model, z)?;
    if z.k() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: z.k() });
    }
    let (mu, cp) = jacobian_data(model)?;
    if *mu != Poly::constant(4, rat(-1, 4)) {
        return Err(Error::Model("specialized formulas require constant factor -1/4".into()));
    }
    let s = div(&barcross(&apply_d(&from_mvec3(z)), cp.raw())).scale(&rat(-1, 4));
    Ok(MVec::from_coeffs(4, 4, vec![s])?)
}

/// Hamiltonian fields of the fold coordinates applied to a function:
/// `X0 = 0`, `X1 = x3 ∂2 - x2 ∂3`, `X2 = -x1 ∂3 - x3 ∂1`,
/// `X3 = x1 ∂2 + x2 ∂1`.
fn x_op(i: usize, g: &Poly) -> Poly {
    let x = |j: usize| Poly::var(4, j);
    match i {
        0 => Poly::zero(4),
        1 => x(3).mul(&g.partial(2)).sub(&x(2).mul(&g.partial(3))),
        2 => x(1).mul(&g.partial(3)).add(&x(3).mul(&g.partial(1))).neg(),
        3 => x(1).mul(&g.partial(2)).add(&x(2).mul(&g.partial(1))),
        _ => unreachable!(),
    }
}

/// The explicit coboundary equations of the fold model, coordinates
/// `(x0, x1, x2, x3)`:
/// d0(f) = -Σ X_i(f) ∂_i;
/// d1(Y) = Σ X_i(f0) ∂_{0i} + Σ_{i<j} (X_j(f_i) - X_i(f_j) ± f_k) ∂_{ij};
/// d2(W) = Σ_{i<j} (X_i(f_{0j}) - X_j(f_{0i}) ± f_{0k}) ∂_{0ij}
///         + (-X1(f_{23}) + X2(f_{13}) - X3(f_{12})) ∂_{123};
/// d3(Z) = (X1(f_{023}) - X2(f_{013}) + X3(f_{012})) ∂_{0123},
/// the alternating signs being the integral-part exponents of the displayed
/// equations.
pub fn d_fold(x: &MVec) -> Result<MVec, Error> {
    if x.nvars() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: x.nvars() });
    }
    if x.k() > 3 {
        return Err(Error::Model(format!("no coboundary in degree {}", x.k())));
    }
    let c = x.coeffs();
    let out = match x.k() {
        0 => {
            let f = &c[0];
            vec![
                Poly::zero(4),
                x_op(1, f).neg(),
                x_op(2, f).neg(),
                x_op(3, f).neg(),
            ]
        }
        1 => {
            // c = (f0, f1, f2, f3); slots (01, 02, 03, 12, 13, 23)
            vec![
                x_op(1, &c[0]),
                x_op(2, &c[0]),
                x_op(3, &c[0]),
                x_op(2, &c[1]).sub(&x_op(1, &c[2])).add(&c[3]),
                x_op(3, &c[1]).sub(&x_op(1, &c[3])).sub(&c[2]),
                x_op(3, &c[2]).sub(&x_op(2, &c[3])).sub(&c[1]),
            ]
        }
        2 => {
            // c = (f01, f02, f03, f12, f13, f23); slots (012, 013, 023, 123)
            vec![
                x_op(1, &c[1]).sub(&x_op(2, &c[0])).sub(&c[2]),
                x_op(1, &c[2]).sub(&x_op(3, &c[0])).add(&c[1]),
                x_op(2, &c[2]).sub(&x_op(3, &c[1])).add(&c[0]),
                x_op(1, &c[5]).neg().add(&x_op(2, &c[4])).sub(&x_op(3, &c[3])),
            ]
        }
        3 => {
            // c = (f012, f013, f023, f123)
            vec![x_op(1, &c[2]).sub(&x_op(2, &c[1])).add(&x_op(3, &c[0]))]
        }
        _ => unreachable!(),
    };
    Ok(MVec::from_coeffs(4, x.k() + 1, out)?)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FoldPart {
    /// `f0 -> (f01, f02, f03)`.
    D11,
    /// `(f1, f2, f3) -> (f12, f13, f23)`.
    D12,
    /// `(f01, f02, f03) -> (f012, f013, f023)`.
    D21,
    /// `(f12, f13, f23) -> f123`.
    D22,
}

/// The splitting of the fold d1 and d2 into the pieces that decouple the
/// `x0`-line from the 3-variable cone. Reassembly is exact:
/// d1 = D11 ⊕ D12 and d2 = D21 ⊕ D22 on the respective slot groups, and the
/// operator matrix of D21 is the slotwise negative of that of D12.
pub fn d_fold_split(part: FoldPart, input: &[Poly]) -> Result<Vec<Poly>, Error> {
    let expect = match part {
        FoldPart::D11 => 1,
        _ => 3,
    };
    if input.len() != expect {
        return Err(Error::DimensionMismatch { expected: expect, found: input.len() });
    }
    for p in input {
        if p.nvars() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: p.nvars() });
        }
    }
    let f = input;
    Ok(match part {
        FoldPart::D11 => vec![x_op(1, &f[0]), x_op(2, &f[0]), x_op(3, &f[0])],
        FoldPart::D12 => vec![
            x_op(2, &f[0]).sub(&x_op(1, &f[1])).add(&f[2]),
            x_op(3, &f[0]).sub(&x_op(1, &f[2])).sub(&f[1]),
            x_op(3, &f[1]).sub(&x_op(2, &f[2])).sub(&f[0]),
        ],
        FoldPart::D21 => vec![
            x_op(1, &f[1]).sub(&x_op(2, &f[0])).sub(&f[2]),
            x_op(1, &f[2]).sub(&x_op(3, &f[0])).add(&f[1]),
            x_op(2, &f[2]).sub(&x_op(3, &f[1])).add(&f[0]),
        ],
        FoldPart::D22 => vec![x_op(1, &f[2]).neg().add(&x_op(2, &f[1])).sub(&x_op(3, &f[0]))],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{jacobian_bivector_poly, model_fold, model_lefschetz, restrict_to_3d};
    use crate::mvfield::schouten;
    use crate::sampling::{random_homogeneous_mvec, rng};

    fn x(i: usize) -> Poly {
        Poly::var(4, i)
    }

    fn oracle_matches(
        model: &PoissonModel,
        apply: &dyn Fn(&MVec) -> MVec,
        seed: u64,
        trials: usize,
    ) {
        let r = &mut rng(seed);
        for k in 0..=3usize {
            for d in 0..=3usize {
                for _ in 0..trials {
                    let input = if k == 0 {
                        MVec::scalar(crate::sampling::random_homogeneous_poly(r, 4, d))
                    } else {
                        random_homogeneous_mvec(r, 4, k, d)
                    };
                    let expect = schouten(&model.pi, &input);
                    assert_eq!(apply(&input), expect, "mismatch at k={k} d={d} ({})", model.name);
                }
            }
        }
    }

    #[test]
    fn general_formulas_match_oracle_on_lefschetz() {
        let m = model_lefschetz();
        oracle_matches(&m, &|v| d_jacobian_general(&m, v).unwrap(), 11, 2);
    }

    #[test]
    fn general_formulas_match_oracle_on_fold() {
        let m = model_fold();
        oracle_matches(&m, &|v| d_jacobian_general(&m, v).unwrap(), 12, 2);
    }

    #[test]
    fn general_formulas_match_oracle_with_polynomial_factor() {
        let mu = Poly::one(4).add(&x(0));
        let p1 = x(2).pow(2).add(&x(3));
        let p2 = x(1);
        let m = jacobian_bivector_poly(mu, p1, p2).unwrap();
        oracle_matches(&m, &|v| d_jacobian_general(&m, v).unwrap(), 13, 2);
    }

    #[test]
    fn const_quarter_formulas_match_oracle() {
        let m = model_lefschetz();
        oracle_matches(&m, &|v| d_jacobian_const_quarter(&m, v).unwrap(), 14, 2);
    }

    #[test]
    fn const_quarter_rejects_other_factors() {
        let m = model_fold();
        let e = d_jacobian_const_quarter(&m, &MVec::scalar(x(1)));
        assert!(e.is_err());
    }

    #[test]
    fn alternative_top_degree_form_agrees() {
        let m = model_lefschetz();
        let r = &mut rng(15);
        for d in 0..=4usize {
            let z = random_homogeneous_mvec(r, 4, 3, d);
            assert_eq!(
                d3_const_quarter_alt(&m, &z).unwrap(),
                d_jacobian_const_quarter(&m, &z).unwrap()
            );
        }
    }

    #[test]
    fn casimirs_are_closed() {
        let m = model_lefschetz();
        for c in &m.casimirs {
            let d = d_jacobian_const_quarter(&m, &MVec::scalar(c.clone())).unwrap();
            assert!(d.is_zero());
        }
    }

    #[test]
    fn euler_field_is_closed_on_lefschetz() {
        let m = model_lefschetz();
        let mut e = MVec::zero(4, 1);
        for i in 0..4 {
            e = e.add(&MVec::basis(4, &[i as u8]).mul_poly(&x(i)));
        }
        assert!(d_jacobian_const_quarter(&m, &e).unwrap().is_zero());
        assert!(d_jacobian_general(&m, &e).unwrap().is_zero());
    }

    #[test]
    fn fold_equations_match_oracle() {
        let m = model_fold();
        oracle_matches(&m, &|v| d_fold(v).unwrap(), 16, 2);
    }

    #[test]
    fn fold_hamiltonians_and_first_examples() {
        let m = model_fold();
        for i in 0..4usize {
            // X_i applied to a coordinate reproduces the bracket {x_l, x_i}
            for l in 0..4usize {
                assert_eq!(x_op(i, &x(l)), pi_entry(&m.pi, l, i));
            }
        }
        let d0 = d_fold(&MVec::scalar(x(1))).unwrap();
        let expect = MVec::basis(4, &[2]).mul_poly(&x(3)).sub(&MVec::basis(4, &[3]).mul_poly(&x(2)));
        assert_eq!(d0, expect);
        assert!(d_fold(&MVec::basis(4, &[0])).unwrap().is_zero());
    }

    #[test]
    fn fold_split_reassembles() {
        let r = &mut rng(17);
        for d in 0..=3usize {
            let y = random_homogeneous_mvec(r, 4, 1, d);
            let c = y.coeffs();
            let top = d_fold_split(FoldPart::D11, &c[0..1]).unwrap();
            let bottom = d_fold_split(FoldPart::D12, &c[1..4]).unwrap();
            let full = d_fold(&y).unwrap();
            assert_eq!(&full.coeffs()[0..3], &top[..]);
            assert_eq!(&full.coeffs()[3..6], &bottom[..]);

            let w = random_homogeneous_mvec(r, 4, 2, d);
            let cw = w.coeffs();
            let top2 = d_fold_split(FoldPart::D21, &cw[0..3]).unwrap();
            let bottom2 = d_fold_split(FoldPart::D22, &cw[3..6]).unwrap();
            let full2 = d_fold(&w).unwrap();
            assert_eq!(&full2.coeffs()[0..3], &top2[..]);
            assert_eq!(&full2.coeffs()[3..4], &bottom2[..]);
        }
    }

    #[test]
    fn split_pieces_relate_by_a_sign() {
        // the same slot triple fed to both middle pieces comes out negated
        let r = &mut rng(18);
        for d in 0..=3usize {
            let f: Vec<Poly> =
                (0..3).map(|_| crate::sampling::random_homogeneous_poly(r, 4, d)).collect();
            let a = d_fold_split(FoldPart::D12, &f).unwrap();
            let b = d_fold_split(FoldPart::D21, &f).unwrap();
            let negated: Vec<Poly> = a.iter().map(|p| p.neg()).collect();
            assert_eq!(b, negated);
        }
    }

    #[test]
    fn d11_is_the_negated_cone_differential() {
        // D11 on a function of (x1,x2,x3) equals the negative of the cone
        // model's degree-0 differential, lifted slotwise
        let m3 = restrict_to_3d();
        let r = &mut rng(19);
        for d in 0..=3usize {
            let f3 = crate::sampling::random_homogeneous_poly(r, 3, d);
            let lift = lift_poly(&f3);
            let top = d_fold_split(FoldPart::D11, &[lift]).unwrap();
            let d0 = schouten(&m3.pi, &MVec::scalar(f3));
            for i in 0..3usize {
                assert_eq!(top[i], lift_poly(&d0.coeffs()[i]).neg());
            }
        }
    }

    fn lift_poly(p: &Poly) -> Poly {
        // embed R[x1,x2,x3] into the fold coordinates as the last three slots
        let mut out = Poly::zero(4);
        for (e, c) in p.terms() {
            let mut e4 = vec![0u8; 4];
            e4[1..4].copy_from_slice(e);
            out = out.add(&Poly::monomial(4, e4, c.clone()));
        }
        out
    }

    #[test]
    fn compact_formulas_square_to_zero() {
        let m = model_lefschetz();
        let r = &mut rng(21);
        for k in 0..=2usize {
            for d in 0..=3usize {
                let input = if k == 0 {
                    MVec::scalar(crate::sampling::random_homogeneous_poly(r, 4, d))
                } else {
                    random_homogeneous_mvec(r, 4, k, d)
                };
                let once = d_jacobian_const_quarter(&m, &input).unwrap();
                assert!(d_jacobian_const_quarter(&m, &once).unwrap().is_zero());
                let once = d_jacobian_general(&m, &input).unwrap();
                assert!(d_jacobian_general(&m, &once).unwrap().is_zero());
            }
        }
        let mf = model_fold();
        let y = random_homogeneous_mvec(&mut rng(22), 4, 1, 2);
        let once = d_fold(&y).unwrap();
        assert!(d_fold(&once).unwrap().is_zero());
        let _ = mf;
    }

    #[test]
    fn dispatch_checks_kinds() {
        let m = model_fold();
        let f = MVec::scalar(x(1));
        assert!(d_apply(CoboundaryKind::FoldDirect, &m, &f).is_ok());
        assert!(d_apply(CoboundaryKind::JacobianGeneral, &m, &f).is_ok());
        assert!(d_apply(CoboundaryKind::JacobianConstQuarter, &m, &f).is_err());
        let ml = model_lefschetz();
        assert!(d_apply(CoboundaryKind::FoldDirect, &ml, &f).is_err());
        assert!(d_apply(CoboundaryKind::JacobianGeneral, &ml, &MVec::zero(4, 4)).is_err());
    }
}
