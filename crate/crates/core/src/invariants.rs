//! Graded bases of the invariant ring, the y-variable description
//! `R^{D_2d} = k[y0, y1, y2]` with `y0 = x0`, `y1 = x1 x2`, `y2 = x1^d + x2^d`,
//! and factorization of invariants into degree-one generators.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, GtError, Result};
use crate::exactmath::Ring;
use crate::group::check_d;
use crate::monomial::{fmt_monomial, is_gamma_invariant, sigma_mirror, ExponentVector, Polynomial};
use crate::par::Strategy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    Monomial,
    Binomial,
}

/// A basis element of the invariant space: a σ-symmetric monomial, or a
/// binomial `m + σ(m)` whose lead has `a1 > a2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymInvariant {
    pub kind: InvariantKind,
    pub lead: ExponentVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mirror: Option<ExponentVector>,
}

impl SymInvariant {
    /// The basis element whose support contains `m`.
    pub fn from_exponent(m: ExponentVector) -> Self {
        if m.is_symmetric() {
            Self {
                kind: InvariantKind::Monomial,
                lead: m,
                mirror: None,
            }
        } else {
            let other = sigma_mirror(&m);
            let (lead, mirror) = if m.a1() > m.a2() { (m, other) } else { (other, m) };
            Self {
                kind: InvariantKind::Binomial,
                lead,
                mirror: Some(mirror),
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.lead.degree()
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        std::iter::once(self.lead).chain(self.mirror).collect()
    }

    /// The form itself, each support monomial with coefficient `one`.
    pub fn to_polynomial<C: Ring>(&self, one: &C) -> Polynomial<C> {
        Polynomial::from_terms(self.support().into_iter().map(|m| (m, one.clone())))
    }

    /// Structural check of the type invariants for a given `d`.
    pub fn is_well_formed(&self, d: u32) -> bool {
        match (self.kind, self.mirror) {
            (InvariantKind::Monomial, None) => self.lead.is_symmetric(),
            (InvariantKind::Binomial, Some(m)) => {
                self.lead.a1() > self.lead.a2() && m == sigma_mirror(&self.lead) && is_gamma_invariant(&self.lead, d)
            }
            _ => false,
        }
    }
}

impl fmt::Display for SymInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lead)?;
        if let Some(m) = self.mirror {
            write!(f, " + {m}")?;
        }
        Ok(())
    }
}

/// A k-basis of the degree-`t` piece `R_{2dt} ∩ R^{D_2d}`, in the canonical
/// order of the leads (a0 descending, then a1 descending).
pub fn graded_basis(d: u32, t: u32) -> Result<Vec<SymInvariant>> {
    graded_basis_with(d, t, Strategy::default())
}

pub fn graded_basis_with(d: u32, t: u32, strategy: Strategy) -> Result<Vec<SymInvariant>> {
    check_d(d)?;
    if t < 1 {
        return Err(invalid("t must be ≥ 1"));
    }
    let n = 2 * d * t;
    // one slice per value of a0, scanned independently
    let slices = strategy.map_range(0..n + 1, |k| {
        let a0 = n - k;
        let rest = n - a0;
        (0..=rest)
            .rev()
            .map(|a1| ExponentVector::new(a0, a1, rest - a1))
            .filter(|m| m.a1() >= m.a2() && is_gamma_invariant(m, d))
            .map(SymInvariant::from_exponent)
            .collect::<Vec<_>>()
    });
    Ok(slices.into_iter().flatten().collect())
}

/// The fundamental invariants: the degree-one basis B_{2d}.
pub fn fundamental_invariants(d: u32) -> Result<Vec<SymInvariant>> {
    graded_basis(d, 1)
}

/// `y0^b0 y1^b1 y2^b2`, with `deg y0 = 1`, `deg y1 = 2`, `deg y2 = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YMonomial(pub [u32; 3]);

impl YMonomial {
    pub const fn new(b0: u32, b1: u32, b2: u32) -> Self {
        Self([b0, b1, b2])
    }

    pub fn b0(&self) -> u32 {
        self.0[0]
    }

    pub fn b1(&self) -> u32 {
        self.0[1]
    }

    pub fn b2(&self) -> u32 {
        self.0[2]
    }

    pub fn weighted_degree(&self, d: u32) -> u32 {
        self.0[0] + 2 * self.0[1] + d * self.0[2]
    }

    pub fn divides(&self, rhs: &Self) -> bool {
        self.0.iter().zip(&rhs.0).all(|(a, b)| a <= b)
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.divides(self)
            .then(|| Self([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]]))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_monomial(f, &self.0, "y")
    }
}

/// Monomial basis A_{2dt} of `k[y0, y1, y2]_{2dt}`, b2 ascending then b1
/// ascending.
pub fn y_basis(d: u32, t: u32) -> Result<Vec<YMonomial>> {
    check_d(d)?;
    if t < 1 {
        return Err(invalid("t must be ≥ 1"));
    }
    let n = 2 * d * t;
    let mut out = Vec::new();
    for b2 in 0..=n / d {
        let rest = n - d * b2;
        for b1 in 0..=rest / 2 {
            out.push(YMonomial::new(rest - 2 * b1, b1, b2));
        }
    }
    Ok(out)
}

/// Substitutes `y0 = x0`, `y1 = x1 x2`, `y2 = x1^d + x2^d`.
pub fn y_to_x(y: &YMonomial, d: u32) -> Polynomial<BigInt> {
    let one = BigInt::one();
    let base = Polynomial::monomial(ExponentVector::new(y.b0(), y.b1(), y.b1()), one.clone());
    let y2 = Polynomial::from_terms([
        (ExponentVector::new(0, d, 0), one.clone()),
        (ExponentVector::new(0, 0, d), one.clone()),
    ]);
    base.mul(&y2.pow(y.b2(), &one))
}

/// Linear extension of [`y_to_x`] to polynomials in the y-variables (stored
/// with exponent vectors `(b0, b1, b2)`).
pub fn y_poly_to_x(p: &Polynomial<BigInt>, d: u32) -> Polynomial<BigInt> {
    let mut out = Polynomial::zero();
    for (e, c) in p.terms() {
        out = out.add(&y_to_x(&YMonomial(e.0), d).scale(c));
    }
    out
}

/// The change of basis ρ on `k[y0, y1, y2]_{2d}`.
pub fn rho_map(y: &YMonomial, d: u32) -> Result<Polynomial<BigInt>> {
    check_d(d)?;
    if y.weighted_degree(d) != 2 * d {
        return Err(invalid(format!("{y} does not have weighted degree 2d = {}", 2 * d)));
    }
    debug_assert!(y.b2() <= 2);
    Ok(y_to_x(y, d))
}

/// Coordinates of a D_2d-invariant polynomial in the symmetric basis.
pub fn decompose_symmetric(p: &Polynomial<BigInt>, d: u32) -> Result<Vec<(BigInt, SymInvariant)>> {
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        if m.a1() < m.a2() {
            continue;
        }
        if !is_gamma_invariant(m, d) {
            return Err(GtError::Consistency(format!("{m} is not Γ-invariant")));
        }
        let inv = SymInvariant::from_exponent(*m);
        if let Some(mirror) = inv.mirror {
            if p.coeff(&mirror) != Some(c) {
                return Err(GtError::Consistency(format!(
                    "{m} and its mirror have different coefficients"
                )));
            }
        }
        out.push((c.clone(), inv));
    }
    if out.iter().map(|(_, s)| s.support().len()).sum::<usize>() != p.len() {
        return Err(GtError::Consistency("polynomial is not σ-symmetric".into()));
    }
    Ok(out)
}

/// `ρ(y)` written in the basis B_{2d}.
pub fn rho_in_basis(y: &YMonomial, d: u32) -> Result<Vec<(BigInt, SymInvariant)>> {
    decompose_symmetric(&rho_map(y, d)?, d)
}

/// Writes a basis invariant as a polynomial in y0, y1, y2 using the power
/// sum recursion `s_k = y2 s_{k-1} - y1^d s_{k-2}` for `x1^{kd} + x2^{kd}`.
pub fn sym_to_y(inv: &SymInvariant, d: u32) -> Result<Polynomial<BigInt>> {
    if !inv.is_well_formed(d) {
        return Err(invalid(format!("{inv} is not a basis invariant for d = {d}")));
    }
    let one = BigInt::one();
    let low = inv.lead.a2();
    let prefix = Polynomial::monomial(ExponentVector::new(inv.lead.a0(), low, 0), one.clone());
    match inv.kind {
        InvariantKind::Monomial => Ok(prefix),
        InvariantKind::Binomial => {
            let k = (inv.lead.a1() - low) / d;
            let y2 = Polynomial::monomial(ExponentVector::new(0, 0, 1), one.clone());
            let y1d = Polynomial::monomial(ExponentVector::new(0, d, 0), one.clone());
            let mut prev = Polynomial::monomial(ExponentVector::new(0, 0, 0), BigInt::from(2));
            let mut cur = y2.clone();
            for _ in 1..k {
                let next = y2.mul(&cur).sub(&y1d.mul(&prev));
                prev = std::mem::replace(&mut cur, next);
            }
            Ok(prefix.mul(&cur))
        }
    }
}

/// A degree-2d divisor of an element of A_{2dt}, `t >= 2`, chosen in the
/// order y0^{2d}, y1^d, y2^2, y0^d y2.
pub fn factor_invariant(y: &YMonomial, d: u32) -> Result<YMonomial> {
    check_d(d)?;
    let w = y.weighted_degree(d);
    if !w.is_multiple_of(2 * d) {
        return Err(invalid(format!("{y} has weighted degree {w}, not a multiple of 2d")));
    }
    if w / (2 * d) < 2 {
        return Err(invalid("factor_invariant needs t ≥ 2"));
    }
    let candidates = [
        YMonomial::new(2 * d, 0, 0),
        YMonomial::new(0, d, 0),
        YMonomial::new(0, 0, 2),
        YMonomial::new(d, 0, 1),
    ];
    candidates
        .into_iter()
        .find(|c| c.divides(y))
        .ok_or_else(|| GtError::Consistency(format!("{y} has no degree-one divisor")))
}

/// Repeated [`factor_invariant`] until the cofactor has degree one.
pub fn factor_completely(y: &YMonomial, d: u32) -> Result<Vec<YMonomial>> {
    let w = y.weighted_degree(d);
    if w == 0 || !w.is_multiple_of(2 * d) {
        return Err(invalid(format!(
            "{y} has weighted degree {w}, not a positive multiple of 2d"
        )));
    }
    let mut factors = Vec::new();
    let mut rest = *y;
    while rest.weighted_degree(d) > 2 * d {
        let f = factor_invariant(&rest, d)?;
        rest = rest.checked_div(&f).expect("divisor divides");
        factors.push(f);
    }
    factors.push(rest);
    Ok(factors)
}

/// Integer transition matrix from `ρ(A_{2d})` to B_{2d}: entry (i, j) is the
/// coefficient of the j-th basis invariant in ρ of the i-th y-monomial.
pub fn rho_transition_matrix(d: u32) -> Result<Vec<Vec<BigInt>>> {
    let basis = fundamental_invariants(d)?;
    y_basis(d, 1)?
        .iter()
        .map(|y| {
            let coords = rho_in_basis(y, d)?;
            let mut row = vec![BigInt::zero(); basis.len()];
            for (c, inv) in coords {
                let j = basis
                    .iter()
                    .position(|b| *b == inv)
                    .ok_or_else(|| GtError::Consistency(format!("{inv} not in B_2d")))?;
                row[j] = c;
            }
            Ok(row)
        })
        .collect()
}
