//! Sparse multivariate polynomials over exact rationals, with homogeneous
//! degree bookkeeping and a deterministic graded-lexicographic monomial order.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::Error;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (guaranteed by `BigRational` itself).
pub type Rational = BigRational;

/// Rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// Exponent tuple; length equals the variable count of the owning `Poly`.
pub type Exponents = Vec<u8>;

/// Sparse polynomial in `nvars` variables with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    /// The coordinate function with index `i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0u8; nvars];
        e[i] = 1;
        Poly::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u8]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Poly) -> Result<(), Error> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_same_vars(other).expect("variable count mismatch in add");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_same_vars(other).expect("variable count mismatch in sub");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_same_vars(other).expect("variable count mismatch in mul");
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
            .unwrap_or(-1)
    }

    /// The degree-`d` homogeneous part.
    pub fn homogeneous_component(&self, d: i64) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().map(|&x| x as i64).sum::<i64>() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// `Some(d)` when every stored term has total degree `d` (zero counts as
    /// homogeneous of every degree and reports `Some(-1)`).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d: i64 = e.iter().map(|&x| x as i64).sum();
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(-1))
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Poly {
        assert!(i < self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.insert(e2, c * rint(e[i] as i64));
        }
        out
    }

    /// Substitute `x_i -> -x_i` for every variable index in `flips`.
    pub fn flip_vars(&self, flips: &[usize]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let odd: u32 = flips.iter().map(|&i| e[i] as u32).sum();
            let c2 = if odd % 2 == 1 { -c.clone() } else { c.clone() };
            out.terms.insert(e.clone(), c2);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Render with explicit variable names, terms in graded-lex order.
    pub fn format_with(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Exponents> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex_cmp(b, a));
        let mut parts = Vec::new();
        for e in keys {
            let c = &self.terms[e];
            let mut factors = vec![format!("{}/{}", c.numer(), c.denom())];
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(names[i].to_string()),
                    _ => factors.push(format!("{}^{}", names[i], p)),
                }
            }
            parts.push(factors.join(" * "));
        }
        parts.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.format_with(&refs))
    }
}

/// Graded-lexicographic comparison: first by total degree, then lex with the
/// earlier variable more significant.
pub fn grlex_cmp(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    let da: u32 = a.iter().map(|&x| x as u32).sum();
    let db: u32 = b.iter().map(|&x| x as u32).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// All exponent tuples of total degree `d` over `nvars` variables, ordered so
/// that the first variable carries the highest power first. Length is
/// C(d + nvars - 1, nvars - 1).
pub fn monomial_basis(nvars: usize, d: usize) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut current = vec![0u8; nvars];
    fill(&mut out, &mut current, 0, d, nvars);
    out
}

fn fill(out: &mut Vec<Exponents>, current: &mut Exponents, pos: usize, rem: usize, nvars: usize) {
    if pos == nvars - 1 {
        current[pos] = rem as u8;
        out.push(current.clone());
        current[pos] = 0;
        return;
    }
    for p in (0..=rem).rev() {
        current[pos] = p as u8;
        fill(out, current, pos + 1, rem - p, nvars);
    }
    current[pos] = 0;
}

/// Dimension of the space of homogeneous polynomials of degree `d`.
pub fn homogeneous_dim(nvars: usize, d: usize) -> usize {
    binomial(d + nvars - 1, nvars - 1)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Parse the text form produced by `format_with` / `Display`: a sum of terms,
/// each a `*`-separated product of a rational (`n` or `n/d`) and powers
/// `x<i>^<p>`. Variables `x1..x<nvars>` map to indices `0..nvars-1`; `x0` is
/// accepted as index 0 alongside `x1..` for circle-model coordinates.
pub fn parse_poly(nvars: usize, input: &str) -> Result<Poly, Error> {
    let mut acc = Poly::zero(nvars);
    let mut rest = input.trim();
    let mut sign = 1i64;
    let mut first = true;
    // x0-based naming is detected from the presence of "x0".
    let zero_based = input.contains("x0");
    while !rest.is_empty() {
        if !first {
            if let Some(r) = rest.strip_prefix('+') {
                sign = 1;
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r.trim_start();
            } else {
                return Err(Error::Parse(format!("expected '+' or '-' at '{rest}'")));
            }
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        }
        first = false;
        let end = rest
            .find(|c| c == '+' || c == '-')
            .unwrap_or(rest.len());
        let (term_str, tail) = rest.split_at(end);
        rest = tail.trim_start();
        let term = parse_term(nvars, term_str.trim(), zero_based)?;
        acc = if sign < 0 { acc.sub(&term) } else { acc.add(&term) };
        sign = 1;
    }
    Ok(acc)
}

fn parse_term(nvars: usize, s: &str, zero_based: bool) -> Result<Poly, Error> {
    if s.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = Rational::one();
    let mut exps = vec![0u8; nvars];
    for factor in s.split('*').flat_map(|f| f.split_whitespace()) {
        let f = factor.trim();
        if f.is_empty() {
            continue;
        }
        if let Some(varpart) = f.strip_prefix('x') {
            let (idx_str, pow) = match varpart.split_once('^') {
                Some((i, p)) => (i, p.parse::<u8>().map_err(|_| bad(f))?),
                None => (varpart, 1),
            };
            let raw: usize = idx_str.parse().map_err(|_| bad(f))?;
            let idx = if zero_based { raw } else { raw.checked_sub(1).ok_or_else(|| bad(f))? };
            if idx >= nvars {
                return Err(Error::Parse(format!("variable {f} out of range for {nvars} variables")));
            }
            exps[idx] += pow;
        } else {
            let c = match f.split_once('/') {
                Some((n, d)) => {
                    let n: i64 = n.parse().map_err(|_| bad(f))?;
                    let d: i64 = d.parse().map_err(|_| bad(f))?;
                    rat(n, d)
                }
                None => rint(f.parse().map_err(|_| bad(f))?),
            };
            coeff *= c;
        }
    }
    Ok(Poly::monomial(nvars, exps, coeff))
}

fn bad(tok: &str) -> Error {
    Error::Parse(format!("bad token '{tok}'"))
}

/// True when |numer| and denom are below the given bound; used by pivoting
/// heuristics, not by any arithmetic.
pub fn rational_size(r: &Rational) -> usize {
    r.numer().abs().bits() as usize + r.denom().bits() as usize
}
