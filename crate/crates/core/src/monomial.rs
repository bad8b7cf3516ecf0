//! Exponent vectors in three variables, degree enumeration, the Γ-invariance
//! congruence and a small sparse polynomial type keyed by exponent vectors.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactmath::Ring;

/// Exponents `(a0, a1, a2)` of `x0^a0 x1^a1 x2^a2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(pub [u32; 3]);

impl ExponentVector {
    pub const fn new(a0: u32, a1: u32, a2: u32) -> Self {
        Self([a0, a1, a2])
    }

    pub fn a0(&self) -> u32 {
        self.0[0]
    }

    pub fn a1(&self) -> u32 {
        self.0[1]
    }

    pub fn a2(&self) -> u32 {
        self.0[2]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }

    pub fn divides(&self, rhs: &Self) -> bool {
        self.0.iter().zip(rhs.0.iter()).all(|(a, b)| a <= b)
    }

    /// Componentwise difference, `None` if `rhs` does not divide `self`.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.divides(self)
            .then(|| Self([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]]))
    }

    pub fn is_symmetric(&self) -> bool {
        self.0[1] == self.0[2]
    }

    /// Canonical sort key: graded, then a0 descending, then a1 descending.
    pub fn canonical_key(&self) -> (u32, std::cmp::Reverse<u32>, std::cmp::Reverse<u32>) {
        (
            self.degree(),
            std::cmp::Reverse(self.0[0]),
            std::cmp::Reverse(self.0[1]),
        )
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_monomial(f, &self.0, "x")
    }
}

pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, exps: &[u32; 3], var: &str) -> fmt::Result {
    let mut wrote = false;
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => continue,
            1 => write!(f, "{var}{i}")?,
            _ => write!(f, "{var}{i}^{e}")?,
        }
        wrote = true;
    }
    if !wrote {
        write!(f, "1")?;
    }
    Ok(())
}

/// All `C(n+2, 2)` exponent vectors of degree `n`, a0 descending then a1
/// descending.
pub fn enumerate_degree(n: u32) -> Vec<ExponentVector> {
    let mut out = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
    for a0 in (0..=n).rev() {
        for a1 in (0..=n - a0).rev() {
            out.push(ExponentVector::new(a0, a1, n - a0 - a1));
        }
    }
    out
}

/// Invariance under Γ = ⟨diag(1, e, e^{d-1})⟩: `a1 + (d-1) a2 ≡ 0 (mod d)`,
/// equivalently `a1 ≡ a2 (mod d)`.
pub fn is_gamma_invariant(m: &ExponentVector, d: u32) -> bool {
    (m.a1() % d) == (m.a2() % d)
}

/// The action of σ: swap the exponents of x1 and x2.
pub fn sigma_mirror(m: &ExponentVector) -> ExponentVector {
    ExponentVector::new(m.a0(), m.a2(), m.a1())
}

/// Sparse polynomial in three variables with coefficients in `C`.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C> {
    terms: BTreeMap<ExponentVector, C>,
}

impl<C> Default for Polynomial<C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<C: Ring> Polynomial<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: ExponentVector, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ExponentVector, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: ExponentVector, c: C) {
        if c.is_zero_elem() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                let s = old.add_ref(&c);
                if s.is_zero_elem() {
                    self.terms.remove(&exp);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> Option<&C> {
        self.terms.get(exp)
    }

    /// Degree when every term has the same degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(ExponentVector::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.neg_ref());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.mul_ref(c))))
    }

    pub fn pow(&self, k: u32, one: &C) -> Self {
        let mut acc = Self::monomial(ExponentVector::new(0, 0, 0), one.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<C: fmt::Debug> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c:?}*{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_degree(0), vec![ExponentVector::new(0, 0, 0)]);
        assert_eq!(enumerate_degree(2).len(), 6);
        assert_eq!(enumerate_degree(6).len(), 28);
        let e = enumerate_degree(3);
        assert_eq!(e[0], ExponentVector::new(3, 0, 0));
        assert_eq!(e[1], ExponentVector::new(2, 1, 0));
        assert_eq!(*e.last().unwrap(), ExponentVector::new(0, 0, 3));
    }

    #[test]
    fn gamma_invariance() {
        assert!(is_gamma_invariant(&ExponentVector::new(4, 1, 1), 3));
        assert!(!is_gamma_invariant(&ExponentVector::new(5, 1, 0), 3));
        for t in 1..=3u32 {
            for d in 3..=8u32 {
                for k in 0..=d * t {
                    let m = ExponentVector::new(2 * d * t - 2 * k, k, k);
                    assert!(is_gamma_invariant(&m, d));
                }
            }
        }
    }

    #[test]
    fn mirror() {
        assert_eq!(
            sigma_mirror(&ExponentVector::new(4, 1, 1)),
            ExponentVector::new(4, 1, 1)
        );
        assert_eq!(
            sigma_mirror(&ExponentVector::new(3, 3, 0)),
            ExponentVector::new(3, 0, 3)
        );
        for m in enumerate_degree(12) {
            assert_eq!(sigma_mirror(&sigma_mirror(&m)), m);
        }
    }

    #[test]
    fn polynomial_cancellation() {
        let x1 = Polynomial::monomial(ExponentVector::new(0, 1, 0), BigInt::from(1));
        let x2 = Polynomial::monomial(ExponentVector::new(0, 0, 1), BigInt::from(1));
        let sum = x1.add(&x2);
        let diff = x1.sub(&x2);
        // (x1 + x2)(x1 - x2) = x1^2 - x2^2
        let p = sum.mul(&diff);
        assert_eq!(p.len(), 2);
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert!(p.sub(&p).is_zero());
    }
}
