//! Multivector fields with polynomial coefficients, flattened to ordered
//! coefficient tuples over the lexicographic index sets, together with the
//! wedge product, the Schouten-Nijenhuis bracket, contraction against a
//! volume form, and the modular vector field.

use num::{One, Zero};

use crate::polyalg::{binomial, rint, Poly, Rational};
use crate::Error;

/// Index sets of size `k` in `{0, .., nvars-1}`, lexicographically ordered.
/// For `nvars = 4, k = 2` this is (01, 02, 03, 12, 13, 23), i.e. the slot
/// order (12, 13, 14, 23, 24, 34) in 1-based variable labels.
pub fn basis_indices(nvars: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen(&mut out, &mut cur, 0, k, nvars);
    out
}

fn gen(out: &mut Vec<Vec<u8>>, cur: &mut Vec<u8>, start: usize, k: usize, n: usize) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i as u8);
        gen(out, cur, i + 1, k, n);
        cur.pop();
    }
}

/// Position of a sorted index set in `basis_indices(nvars, k)`.
pub fn basis_position(nvars: usize, indices: &[u8]) -> usize {
    // Small sizes; a ranking loop is plenty.
    let k = indices.len();
    let mut rank = 0usize;
    let mut prev: i32 = -1;
    for (pos, &idx) in indices.iter().enumerate() {
        for j in (prev + 1) as usize..idx as usize {
            rank += binomial(nvars - j - 1, k - pos - 1);
        }
        prev = idx as i32;
    }
    rank
}

/// Sign of the permutation sorting `indices`; `None` when two entries repeat.
pub fn sort_sign(indices: &[u8]) -> Option<(i32, Vec<u8>)> {
    let mut v = indices.to_vec();
    let mut sign = 1i32;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            match v[j].cmp(&v[i]) {
                std::cmp::Ordering::Less => {
                    v.swap(i, j);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return None,
                _ => {}
            }
        }
    }
    Some((sign, v))
}

/// A `k`-vector field on a coordinate patch, encoded as the ordered tuple of
/// its coefficient polynomials. `k > nvars` is permitted and carries an empty
/// tuple (the space is zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MVec {
    nvars: usize,
    k: usize,
    coeffs: Vec<Poly>,
}

impl MVec {
    pub fn zero(nvars: usize, k: usize) -> Self {
        let len = if k <= nvars { binomial(nvars, k) } else { 0 };
        MVec {
            nvars,
            k,
            coeffs: vec![Poly::zero(nvars); len],
        }
    }

    pub fn from_coeffs(nvars: usize, k: usize, coeffs: Vec<Poly>) -> Result<Self, Error> {
        let expect = if k <= nvars { binomial(nvars, k) } else { 0 };
        if coeffs.len() != expect {
            return Err(Error::DimensionMismatch { expected: expect, found: coeffs.len() });
        }
        for c in &coeffs {
            if c.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: c.nvars() });
            }
        }
        Ok(MVec { nvars, k, coeffs })
    }

    /// A scalar (0-vector) field.
    pub fn scalar(f: Poly) -> Self {
        let nvars = f.nvars();
        MVec { nvars, k: 0, coeffs: vec![f] }
    }

    /// The coordinate multivector `∂_{i1} ∧ … ∧ ∂_{ik}` for strictly
    /// increasing indices.
    pub fn basis(nvars: usize, indices: &[u8]) -> Self {
        let mut m = MVec::zero(nvars, indices.len());
        let pos = basis_position(nvars, indices);
        m.coeffs[pos] = Poly::one(nvars);
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, indices: &[u8]) -> &Poly {
        &self.coeffs[basis_position(self.nvars, indices)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &MVec) -> MVec {
        assert_eq!((self.nvars, self.k), (other.nvars, other.k));
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        MVec { nvars: self.nvars, k: self.k, coeffs }
    }

    pub fn sub(&self, other: &MVec) -> MVec {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MVec {
        MVec {
            nvars: self.nvars,
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MVec {
        MVec {
            nvars: self.nvars,
            k: self.k,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Poly) -> MVec {
        MVec {
            nvars: self.nvars,
            k: self.k,
            coeffs: self.coeffs.iter().map(|p| p.mul(f)).collect(),
        }
    }

    /// Maximum total degree among coefficients; `-1` when zero.
    pub fn degree(&self) -> i64 {
        self.coeffs.iter().map(|c| c.degree()).max().unwrap_or(-1)
    }

    /// Coefficient-wise degree-`d` part.
    pub fn homogeneous_component(&self, d: i64) -> MVec {
        MVec {
            nvars: self.nvars,
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| c.homogeneous_component(d)).collect(),
        }
    }

    /// Coefficient-wise partial derivative in `x_i`.
    pub fn x_deriv(&self, i: usize) -> MVec {
        MVec {
            nvars: self.nvars,
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| c.partial(i)).collect(),
        }
    }

    /// Right derivative with respect to the odd basis direction `i`: removes
    /// `∂_i` from every term containing it, with the sign of commuting it past
    /// the later factors.
    pub fn xi_rderiv(&self, i: u8) -> MVec {
        if self.k == 0 {
            return MVec::zero(self.nvars, 0);
        }
        let mut out = MVec::zero(self.nvars, self.k - 1);
        for (pos, idx) in basis_indices(self.nvars, self.k).iter().enumerate() {
            if self.coeffs[pos].is_zero() {
                continue;
            }
            if let Some(p) = idx.iter().position(|&j| j == i) {
                let mut rem = idx.clone();
                rem.remove(p);
                let sign = if (self.k - 1 - p) % 2 == 0 { 1 } else { -1 };
                let target = basis_position(self.nvars, &rem);
                let term = self.coeffs[pos].scale(&rint(sign));
                out.coeffs[target] = out.coeffs[target].add(&term);
            }
        }
        out
    }
}

/// Exterior product in the tuple encoding. When `k_X + k_Y > nvars` the
/// result is the zero multivector (its coefficient tuple is empty).
pub fn wedge(x: &MVec, y: &MVec) -> MVec {
    assert_eq!(x.nvars, y.nvars);
    let n = x.nvars;
    let mut out = MVec::zero(n, x.k + y.k);
    if x.k + y.k > n {
        return out;
    }
    let xb = basis_indices(n, x.k);
    let yb = basis_indices(n, y.k);
    for (px, ix) in xb.iter().enumerate() {
        if x.coeffs[px].is_zero() {
            continue;
        }
        for (py, iy) in yb.iter().enumerate() {
            if y.coeffs[py].is_zero() {
                continue;
            }
            let mut cat = ix.clone();
            cat.extend_from_slice(iy);
            if let Some((sign, sorted)) = sort_sign(&cat) {
                let target = basis_position(n, &sorted);
                let term = x.coeffs[px].mul(&y.coeffs[py]).scale(&rint(sign as i64));
                out.coeffs[target] = out.coeffs[target].add(&term);
            }
        }
    }
    out
}

/// The Schouten-Nijenhuis bracket, extending the Lie bracket of vector fields
/// to multivector fields. The sign convention is fixed so that for a bivector
/// `pi` and a function `f`, `schouten(pi, f)` is the Hamiltonian vector field
/// of `f` matching `d0(x1) = x3 ∂2 - x2 ∂3` on the fold-circle model.
pub fn schouten(p: &MVec, q: &MVec) -> MVec {
    assert_eq!(p.nvars, q.nvars);
    let n = p.nvars;
    let (kp, kq) = (p.k, q.k);
    if kp + kq == 0 {
        return MVec::zero(n, 0);
    }
    let mut out = MVec::zero(n, kp + kq - 1);
    for i in 0..n {
        if kp > 0 {
            let a = p.xi_rderiv(i as u8);
            let b = q.x_deriv(i);
            out = out.add(&wedge(&a, &b));
        }
        if kq > 0 {
            let a = q.xi_rderiv(i as u8);
            let b = p.x_deriv(i);
            let term = wedge(&a, &b);
            // graded antisymmetry factor -(-1)^{(kp-1)(kq-1)}
            let sign = if (kp + 1) * (kq + 1) % 2 == 1 { 1 } else { -1 };
            out = out.add(&term.scale(&rint(sign)));
        }
    }
    out
}

/// Lichnerowicz differential `X -> [pi, X]`.
pub fn lichnerowicz_d(pi: &MVec, x: &MVec) -> MVec {
    assert_eq!(pi.k, 2, "differential requires a bivector");
    schouten(pi, x)
}

/// A constant-coefficient volume form `scale · dx_1 ∧ … ∧ dx_n`.
#[derive(Clone, Debug)]
pub struct VolumeForm {
    pub nvars: usize,
    pub scale: Rational,
}

impl VolumeForm {
    pub fn standard(nvars: usize) -> Self {
        VolumeForm { nvars, scale: Rational::one() }
    }
}

/// Contraction `⋆X = ι_X Ω`, with the resulting `(n-k)`-form encoded on the
/// same flattened tuple basis as multivectors. Degree-wise a linear
/// isomorphism.
pub fn star_contract(x: &MVec, omega: &VolumeForm) -> MVec {
    assert!(!omega.scale.is_zero());
    assert_eq!(x.nvars, omega.nvars);
    let n = x.nvars;
    let mut out = MVec::zero(n, n - x.k);
    for (pos, idx) in basis_indices(n, x.k).iter().enumerate() {
        if x.coeffs[pos].is_zero() {
            continue;
        }
        let comp: Vec<u8> = (0..n as u8).filter(|i| !idx.contains(i)).collect();
        let mut cat = idx.clone();
        cat.extend_from_slice(&comp);
        let (sign, _) = sort_sign(&cat).expect("complement is disjoint");
        let target = basis_position(n, &comp);
        let term = x.coeffs[pos].scale(&(omega.scale.clone() * rint(sign as i64)));
        out.coeffs[target] = out.coeffs[target].add(&term);
    }
    out
}

/// Inverse of `star_contract` on each degree.
pub fn star_invert(form: &MVec, omega: &VolumeForm) -> MVec {
    let n = form.nvars;
    let mut out = MVec::zero(n, n - form.k);
    for (pos, idx) in basis_indices(n, form.k).iter().enumerate() {
        if form.coeffs[pos].is_zero() {
            continue;
        }
        let comp: Vec<u8> = (0..n as u8).filter(|i| !idx.contains(i)).collect();
        let mut cat = comp.clone();
        cat.extend_from_slice(idx);
        let (sign, _) = sort_sign(&cat).expect("complement is disjoint");
        let target = basis_position(n, &comp);
        let term = form.coeffs[pos]
            .scale(&(rint(sign as i64) / omega.scale.clone()));
        out.coeffs[target] = out.coeffs[target].add(&term);
    }
    out
}

/// Modular vector field of a bivector with respect to a constant-scale volume
/// form: component `j` is `Σ_i ∂_i(π_{ij})` with `π` the antisymmetric
/// coefficient matrix.
pub fn modular_vf(pi: &MVec, omega: &VolumeForm) -> MVec {
    assert_eq!(pi.k, 2);
    assert!(!omega.scale.is_zero());
    let n = pi.nvars;
    let mut out = MVec::zero(n, 1);
    for (pos, idx) in basis_indices(n, 2).iter().enumerate() {
        let (i, j) = (idx[0] as usize, idx[1] as usize);
        let c = &pi.coeffs[pos];
        if c.is_zero() {
            continue;
        }
        // slot (i,j) contributes +∂_i c to component j and -∂_j c to component i
        out.coeffs[j] = out.coeffs[j].add(&c.partial(i));
        out.coeffs[i] = out.coeffs[i].sub(&c.partial(j));
    }
    out
}
