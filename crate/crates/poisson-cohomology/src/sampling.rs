//! Deterministic random inputs for identity and oracle checks. All
//! randomness flows through a seeded ChaCha stream so every reported check is
//! reproducible from its seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::mvfield::MVec;
use crate::polyalg::{monomial_basis, rint, Poly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Homogeneous polynomial of degree `d` with integer coefficients in
/// `[-9, 9]`; each monomial is kept with probability `density`.
pub fn random_homogeneous_poly_with_density(
    r: &mut ChaCha8Rng,
    nvars: usize,
    d: usize,
    density: f64,
) -> Poly {
    let mut p = Poly::zero(nvars);
    for e in monomial_basis(nvars, d) {
        if r.gen_bool(density) {
            let c: i64 = r.gen_range(-9..=9);
            p = p.add(&Poly::monomial(nvars, e, rint(c)));
        }
    }
    p
}

/// Homogeneous polynomial of degree `d`; roughly half the monomials kept.
pub fn random_homogeneous_poly(r: &mut ChaCha8Rng, nvars: usize, d: usize) -> Poly {
    random_homogeneous_poly_with_density(r, nvars, d, 0.5)
}

/// Inhomogeneous polynomial of total degree at most `maxdeg`.
pub fn random_poly(r: &mut ChaCha8Rng, nvars: usize, maxdeg: usize) -> Poly {
    random_poly_with_density(r, nvars, maxdeg, 0.5)
}

/// Sparse variant: keeps each monomial with probability `density`.
pub fn random_poly_with_density(
    r: &mut ChaCha8Rng,
    nvars: usize,
    maxdeg: usize,
    density: f64,
) -> Poly {
    let mut p = Poly::zero(nvars);
    for d in 0..=maxdeg {
        p = p.add(&random_homogeneous_poly_with_density(r, nvars, d, density));
    }
    p
}

/// `k`-vector field with homogeneous coefficients of degree `d`.
pub fn random_homogeneous_mvec(r: &mut ChaCha8Rng, nvars: usize, k: usize, d: usize) -> MVec {
    let len = MVec::zero(nvars, k).coeffs().len();
    let coeffs = (0..len).map(|_| random_homogeneous_poly(r, nvars, d)).collect();
    MVec::from_coeffs(nvars, k, coeffs).expect("matching slot count")
}

/// Plain tuple of polynomials of degree at most `maxdeg`.
pub fn random_tuple(r: &mut ChaCha8Rng, nvars: usize, len: usize, maxdeg: usize) -> Vec<Poly> {
    (0..len).map(|_| random_poly(r, nvars, maxdeg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_streams_are_reproducible() {
        let a = random_poly(&mut rng(7), 4, 3);
        let b = random_poly(&mut rng(7), 4, 3);
        assert_eq!(a, b);
        let c = random_poly(&mut rng(8), 4, 3);
        assert!(a != c || a.is_zero());
    }

    #[test]
    fn homogeneous_samples_are_homogeneous() {
        let r = &mut rng(42);
        for d in 0..5 {
            let p = random_homogeneous_poly(r, 4, d);
            let h = p.homogeneous_degree().unwrap();
            assert!(h == d as i64 || h == -1);
            let m = random_homogeneous_mvec(r, 4, 2, d);
            assert_eq!(m.coeffs().len(), 6);
        }
    }
}
