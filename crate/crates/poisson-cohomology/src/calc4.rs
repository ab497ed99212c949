//! The 4-variable operator calculus on flattened coefficient tuples: gradient,
//! divergence, the cross products `×` and `×̄`, the degree-2 Hodge star, the
//! rotations `D` and `K`, the involution `φ`, their derivative variants
//! `∇×` / `∇×̄`, and the `⊠` pairing.

use crate::mvfield::MVec;
use crate::polyalg::{rint, Poly, Rational};

/// Coefficient tuple of a 1- or 3-vector field (under the flattening of
/// either degree).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tuple4(pub Vec<Poly>);

/// Coefficient tuple of a 2-vector field in slot order (12,13,14,23,24,34).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tuple6(pub Vec<Poly>);

/// Output tuple of `×`, whose six rows are the wedge components
/// (∂14, ∂12, -∂23, ∂34, -∂13, ∂24) in that order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossTuple6(pub Vec<Poly>);

impl Tuple4 {
    pub fn new(v: Vec<Poly>) -> Self {
        assert_eq!(v.len(), 4);
        Tuple4(v)
    }

    pub fn zero() -> Self {
        Tuple4(vec![Poly::zero(4); 4])
    }

    pub fn add(&self, o: &Tuple4) -> Tuple4 {
        Tuple4(self.0.iter().zip(&o.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Tuple4 {
        Tuple4(self.0.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_poly(&self, f: &Poly) -> Tuple4 {
        Tuple4(self.0.iter().map(|p| p.mul(f)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_zero())
    }
}

impl Tuple6 {
    pub fn new(v: Vec<Poly>) -> Self {
        assert_eq!(v.len(), 6);
        Tuple6(v)
    }

    pub fn zero() -> Self {
        Tuple6(vec![Poly::zero(4); 6])
    }

    pub fn add(&self, o: &Tuple6) -> Tuple6 {
        Tuple6(self.0.iter().zip(&o.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Tuple6 {
        Tuple6(self.0.iter().map(|p| p.scale(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_zero())
    }
}

impl CrossTuple6 {
    pub fn raw(&self) -> &[Poly] {
        &self.0
    }

    pub fn add(&self, o: &CrossTuple6) -> CrossTuple6 {
        CrossTuple6(self.0.iter().zip(&o.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn scale(&self, c: &Rational) -> CrossTuple6 {
        CrossTuple6(self.0.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_poly(&self, f: &Poly) -> CrossTuple6 {
        CrossTuple6(self.0.iter().map(|p| p.mul(f)).collect())
    }
}

pub fn dot4(a: &Tuple4, b: &Tuple4) -> Poly {
    let mut acc = Poly::zero(4);
    for (x, y) in a.0.iter().zip(&b.0) {
        acc = acc.add(&x.mul(y));
    }
    acc
}

pub fn dot6(a: &[Poly], b: &[Poly]) -> Poly {
    let mut acc = Poly::zero(4);
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y));
    }
    acc
}

/// `∇f = (∂1 f, ∂2 f, ∂3 f, ∂4 f)`.
pub fn grad(f: &Poly) -> Tuple4 {
    assert_eq!(f.nvars(), 4);
    Tuple4((0..4).map(|i| f.partial(i)).collect())
}

/// `Div X = Σ ∂_i f_i`.
pub fn div(x: &Tuple4) -> Poly {
    let mut acc = Poly::zero(4);
    for (i, f) in x.0.iter().enumerate() {
        acc = acc.add(&f.partial(i));
    }
    acc
}

/// `X × Y` with rows
/// (f1g4-f4g1, f1g2-f2g1, f3g2-f2g3, f3g4-f4g3, f3g1-f1g3, f2g4-f4g2).
pub fn cross(x: &Tuple4, y: &Tuple4) -> CrossTuple6 {
    cross_with(&|i, g: &Poly| x.0[i].mul(g), &y.0)
}

/// `×` with the left slots replaced by arbitrary linear operators; row
/// `f_i g_j` becomes `op(i, g_j)`.
pub fn cross_with(op: &dyn Fn(usize, &Poly) -> Poly, g: &[Poly]) -> CrossTuple6 {
    let t = |i: usize, j: usize| op(i, &g[j]);
    CrossTuple6(vec![
        t(0, 3).sub(&t(3, 0)),
        t(0, 1).sub(&t(1, 0)),
        t(2, 1).sub(&t(1, 2)),
        t(2, 3).sub(&t(3, 2)),
        t(2, 0).sub(&t(0, 2)),
        t(1, 3).sub(&t(3, 1)),
    ])
}

/// `∇ × Y`: the rows of `×` with the left slots acting as partials.
pub fn nabla_cross(y: &Tuple4) -> CrossTuple6 {
    cross_with(&|i, g: &Poly| g.partial(i), &y.0)
}

/// `X ×̄ Y` for a 6-entry right factor, with rows
/// (-f4g3+f2g4-f3g6, f3g1-f1g4+f4g5, -f2g1+f4g2+f1g6, -f3g2+f1g3-f2g5).
pub fn barcross(x: &Tuple4, y: &[Poly]) -> Tuple4 {
    barcross_with(&|i, g: &Poly| x.0[i].mul(g), y)
}

pub fn barcross_with(op: &dyn Fn(usize, &Poly) -> Poly, g: &[Poly]) -> Tuple4 {
    assert_eq!(g.len(), 6);
    let t = |i: usize, j: usize| op(i, &g[j]);
    Tuple4(vec![
        t(3, 2).neg().add(&t(1, 3)).sub(&t(2, 5)),
        t(2, 0).sub(&t(0, 3)).add(&t(3, 4)),
        t(1, 0).neg().add(&t(3, 1)).add(&t(0, 5)),
        t(2, 1).neg().add(&t(0, 2)).sub(&t(1, 4)),
    ])
}

/// `∇ ×̄ Y` on a 6-entry tuple.
pub fn nabla_barcross(y: &[Poly]) -> Tuple4 {
    barcross_with(&|i, g: &Poly| g.partial(i), y)
}

fn apply6(m: [[i64; 6]; 6], v: &[Poly]) -> Vec<Poly> {
    assert_eq!(v.len(), 6);
    m.iter()
        .map(|row| {
            let mut acc = Poly::zero(4);
            for (c, p) in row.iter().zip(v) {
                if *c != 0 {
                    acc = acc.add(&p.scale(&rint(*c)));
                }
            }
            acc
        })
        .collect()
}

const HODGE2: [[i64; 6]; 6] = [
    [0, 0, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [-1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 0],
];

const K_MAT: [[i64; 6]; 6] = [
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1],
    [0, 0, -1, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, -1, 0, 0, 0, 0],
];

const K_INV_MAT: [[i64; 6]; 6] = [
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, -1],
    [0, 0, -1, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0],
];

/// The degree-2 Hodge star on the 6-slot encoding; an involution.
pub fn hodge2(v: &[Poly]) -> Vec<Poly> {
    apply6(HODGE2, v)
}

/// The involution `φ`; its matrix coincides with the degree-2 Hodge star.
pub fn apply_phi(v: &[Poly]) -> Vec<Poly> {
    apply6(HODGE2, v)
}

/// The rotation `K` of the 6-slot encoding.
pub fn apply_k(v: &[Poly]) -> Vec<Poly> {
    apply6(K_MAT, v)
}

pub fn apply_k_inv(v: &[Poly]) -> Vec<Poly> {
    apply6(K_INV_MAT, v)
}

/// The right-isoclinic rotation `D` on 4-slot tuples; `D² = -Id`.
pub fn apply_d(x: &Tuple4) -> Tuple4 {
    let v = &x.0;
    Tuple4(vec![v[3].clone(), v[2].neg(), v[1].clone(), v[0].neg()])
}

/// `⊠`: entry `i` is the dot product of `jet[i]` (a 6-entry tuple) with `w`.
pub fn boxtimes(jet: &[Vec<Poly>; 4], w: &[Poly]) -> Tuple4 {
    Tuple4(jet.iter().map(|row| dot6(row, w)).collect())
}

/// The audited re-indexing from the `×` output ordering to the slot order of
/// 2-vector fields, so that `wedge(X, Y) == cross_to_bivector(cross(X, Y))`.
pub fn cross_to_bivector(c: &CrossTuple6) -> MVec {
    let v = &c.0;
    let coeffs = vec![
        v[1].clone(),  // slot 12
        v[4].neg(),    // slot 13
        v[0].clone(),  // slot 14
        v[2].neg(),    // slot 23
        v[5].clone(),  // slot 24
        v[3].clone(),  // slot 34
    ];
    MVec::from_coeffs(4, 2, coeffs).expect("six slots")
}

/// Flatten a 1-vector field.
pub fn from_mvec1(x: &MVec) -> Tuple4 {
    assert_eq!((x.nvars(), x.k()), (4, 1));
    Tuple4(x.coeffs().to_vec())
}

/// Flatten a 2-vector field to its slot tuple.
pub fn from_mvec2(x: &MVec) -> Tuple6 {
    assert_eq!((x.nvars(), x.k()), (4, 2));
    Tuple6(x.coeffs().to_vec())
}

/// Flatten a 3-vector field (slots 123,124,134,234).
pub fn from_mvec3(x: &MVec) -> Tuple4 {
    assert_eq!((x.nvars(), x.k()), (4, 3));
    Tuple4(x.coeffs().to_vec())
}

pub fn to_mvec1(t: &Tuple4) -> MVec {
    MVec::from_coeffs(4, 1, t.0.clone()).expect("four slots")
}

pub fn to_mvec2(v: Vec<Poly>) -> MVec {
    MVec::from_coeffs(4, 2, v).expect("six slots")
}

pub fn to_mvec3(t: &Tuple4) -> MVec {
    MVec::from_coeffs(4, 3, t.0.clone()).expect("four slots")
}

/// Randomized verification of the algebraic identities tying together the
/// operators above. Every identity is checked exactly (polynomial equality
/// over the rationals) on seeded random inputs.
pub mod identities {
    use super::*;
    use crate::sampling::{random_poly_with_density, rng};
    use rand_chacha::ChaCha8Rng;

    #[derive(Clone, Debug)]
    pub struct IdentityResult {
        pub name: &'static str,
        pub pass: bool,
    }

    // sparse inputs: the identities are multilinear, so a few monomials per
    // polynomial exercise them just as well and keep the suite fast
    fn t4(r: &mut ChaCha8Rng, maxdeg: usize) -> Tuple4 {
        Tuple4((0..4).map(|_| random_poly_with_density(r, 4, maxdeg, 0.1)).collect())
    }

    fn t6(r: &mut ChaCha8Rng, maxdeg: usize) -> Vec<Poly> {
        (0..6).map(|_| random_poly_with_density(r, 4, maxdeg, 0.1)).collect()
    }

    fn scale6(f: &Poly, v: &[Poly]) -> Vec<Poly> {
        v.iter().map(|p| p.mul(f)).collect()
    }

    /// Run every identity `trials` times on random inputs with coefficient
    /// degree at most `maxdeg`; a single counterexample fails the identity.
    pub fn run_suite(seed: u64, trials: usize, maxdeg: usize) -> Vec<IdentityResult> {
        let r = &mut rng(seed);
        type Case = (&'static str, fn(&mut ChaCha8Rng, usize) -> bool);
        let cases: Vec<Case> = vec![
            ("phi_shifts_across_dot", |r, m| {
                let (u, y) = (t6(r, m), t6(r, m));
                dot6(&apply_phi(&u), &y) == dot6(&u, &apply_phi(&y))
            }),
            ("phi_is_an_involution", |r, m| {
                let u = t6(r, m);
                apply_phi(&apply_phi(&u)) == u
            }),
            ("phi_is_an_isometry", |r, m| {
                let (u, y) = (t6(r, m), t6(r, m));
                dot6(&apply_phi(&u), &apply_phi(&y)) == dot6(&u, &y)
            }),
            ("triple_product_shift", |r, m| {
                let (u, y, z) = (t6(r, m), t4(r, m), t4(r, m));
                dot6(&u, cross(&y, &z).raw()) == dot4(&y, &barcross(&z, &apply_phi(&u)))
            }),
            ("cross_phi_cross_orthogonal", |r, m| {
                let (u, y, z) = (t4(r, m), t4(r, m), t4(r, m));
                dot6(cross(&u, &z).raw(), &apply_phi(cross(&u, &y).raw())).is_zero()
            }),
            ("barcross_of_cross_cycles", |r, m| {
                let (u, y, z) = (t4(r, m), t4(r, m), t4(r, m));
                barcross(&u, cross(&y, &z).raw()) == barcross(&y, cross(&z, &u).raw())
            }),
            ("barcross_phi_cross_expands", |r, m| {
                let (u, y, z) = (t4(r, m), t4(r, m), t4(r, m));
                let lhs = barcross(&z, &apply_phi(cross(&u, &y).raw()));
                let rhs = y.mul_poly(&dot4(&z, &u).neg()).add(&u.mul_poly(&dot4(&z, &y)));
                lhs == rhs
            }),
            ("barcross_barcross_phi_cross", |r, m| {
                let (u, y, z) = (t4(r, m), t4(r, m), t6(r, m));
                let phi_uy = apply_phi(cross(&u, &y).raw());
                let lhs = barcross(&barcross(&u, &z), &phi_uy);
                let rhs = u.mul_poly(&dot6(&z, &phi_uy).neg());
                lhs == rhs
            }),
            ("curl_of_cross", |r, m| {
                let (u, y) = (t4(r, m), t4(r, m));
                let lhs = nabla_barcross(cross(&u, &y).raw());
                let rhs = barcross(&y, nabla_cross(&u).raw())
                    .add(&barcross(&u, nabla_cross(&y).raw()).scale(&rint(-1)));
                lhs == rhs
            }),
            ("cross_leibniz", |r, m| {
                let u = t4(r, m);
                let f = crate::sampling::random_poly(r, 4, m);
                let lhs = nabla_cross(&u.mul_poly(&f));
                let rhs = cross(&grad(&f), &u).add(&nabla_cross(&u).mul_poly(&f));
                lhs == rhs
            }),
            ("barcross_leibniz", |r, m| {
                let y = t6(r, m);
                let f = crate::sampling::random_poly(r, 4, m);
                let lhs = nabla_barcross(&scale6(&f, &y));
                let rhs = barcross(&grad(&f), &y).add(&nabla_barcross(&y).mul_poly(&f));
                lhs == rhs
            }),
            ("div_leibniz", |r, m| {
                let u = t4(r, m);
                let f = crate::sampling::random_poly(r, 4, m);
                div(&u.mul_poly(&f)) == dot4(&grad(&f), &u).add(&div(&u).mul(&f))
            }),
            ("div_of_barcross", |r, m| {
                let (u, y) = (t4(r, m), t6(r, m));
                let lhs = div(&barcross(&u, &y));
                let rhs = dot6(&y, &apply_phi(nabla_cross(&u).raw()))
                    .sub(&dot4(&u, &nabla_barcross(&y)));
                lhs == rhs
            }),
        ];
        cases
            .into_iter()
            .map(|(name, f)| {
                let pass = (0..trials).all(|_| f(r, maxdeg));
                IdentityResult { name, pass }
            })
            .collect()
    }

}
