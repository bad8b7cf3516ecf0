//! Togliatti certificate for `I_{2d} = (B_{2d})`: the generator bound, the
//! rank deficiency of `×L : R_{2d-1} -> (R/I)_{2d}` for random `L`, and the
//! explicit kernel element `F = ∏_{g ≠ Id} g(L)`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{invalid, GtError, Result};
use crate::exactmath::{fraction_free_rank, CycloElement, CycloField, Matrix, Rational, Ring};
use crate::group::{act_on_monomial, check_d, elements, GroupElement, GroupParams};
use crate::hilbert::mu;
use crate::invariants::{fundamental_invariants, SymInvariant};
use crate::monomial::{enumerate_degree, is_gamma_invariant, ExponentVector, Polynomial};
use crate::par::Strategy;

/// Inclusive range of the random coefficients of `L`.
pub const COEFF_RANGE: (i64, i64) = (1, 100);

pub const DEFAULT_TRIALS: u32 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialResult {
    pub l: [i64; 3],
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WlpReport {
    pub d: u32,
    pub a: u32,
    pub mu: u32,
    pub bound_ok: bool,
    pub source_dim: usize,
    pub target_dim: usize,
    /// Largest rank over all trials.
    pub observed_rank: usize,
    pub trial_results: Vec<TrialResult>,
    /// Witness check for the first trial's `L`.
    pub witness_verified: bool,
    pub trials: u32,
    pub seed: u64,
    pub certified: bool,
}

/// `μ_{2d} <= 2d + 1`, with the closed formula checked against the
/// enumerated fundamental invariants.
pub fn mu_bound_check(d: u32) -> Result<bool> {
    check_d(d)?;
    let m = mu(d);
    let enumerated = fundamental_invariants(d)?.len();
    if enumerated != m as usize {
        return Err(GtError::Consistency(format!(
            "μ formula gives {m} but {enumerated} fundamental invariants were enumerated"
        )));
    }
    Ok(m <= 2 * d + 1)
}

/// `dim R_{2d-1} = d(2d+1)`.
pub fn source_dim(d: u32) -> usize {
    (d * (2 * d + 1)) as usize
}

/// `dim R_{2d} - μ_{2d}`.
pub fn target_dim(d: u32) -> usize {
    let n = 2 * d as usize;
    (n + 1) * (n + 2) / 2 - mu(d) as usize
}

/// Where a degree-2d monomial goes in `R_{2d} / span(B_{2d})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Image {
    Zero,
    Basis(usize),
    NegBasis(usize),
}

/// The quotient `R_{2d} -> R_{2d}/span(B_{2d})` in coordinates of a
/// complement basis.
///
/// Column reduction of `B_{2d}` with columns in reverse canonical order puts
/// the pivot of every generator on its last support monomial, so the
/// complement consists of the lexicographically first monomials: every
/// non-Γ-invariant monomial and the lead `a1 > a2` of every binomial. The
/// mirror of a lead is congruent to minus the lead, and symmetric monomials
/// vanish.
#[derive(Clone, Debug)]
pub struct Quotient {
    complement: Vec<ExponentVector>,
    images: HashMap<ExponentVector, Image>,
}

impl Quotient {
    pub fn new(d: u32) -> Self {
        let monomials = enumerate_degree(2 * d);
        let mut complement = Vec::new();
        let mut index = HashMap::new();
        for m in &monomials {
            let is_pivot = is_gamma_invariant(m, d) && m.a1() <= m.a2();
            if !is_pivot {
                index.insert(*m, complement.len());
                complement.push(*m);
            }
        }
        let images = monomials
            .iter()
            .map(|m| {
                let img = if let Some(&i) = index.get(m) {
                    Image::Basis(i)
                } else if m.is_symmetric() {
                    Image::Zero
                } else {
                    let lead = SymInvariant::from_exponent(*m).lead;
                    Image::NegBasis(index[&lead])
                };
                (*m, img)
            })
            .collect();
        Self { complement, images }
    }

    pub fn complement(&self) -> &[ExponentVector] {
        &self.complement
    }

    fn image(&self, m: &ExponentVector) -> Image {
        self.images[m]
    }
}

fn validate_l<T: Zero>(l: &[T; 3]) -> Result<()> {
    if l.iter().all(Zero::is_zero) {
        Err(invalid("L must be nonzero"))
    } else {
        Ok(())
    }
}

/// Matrix of `×L` with rows indexed by [`Quotient::complement`] and columns by
/// `enumerate_degree(2d - 1)`.
pub fn multiplication_matrix(d: u32, l: &[Rational; 3]) -> Result<Matrix<Rational>> {
    check_d(d)?;
    validate_l(l)?;
    let q = Quotient::new(d);
    let source = enumerate_degree(2 * d - 1);
    let zero = Rational::zero();
    let mut m = Matrix::zeros(q.complement().len(), source.len(), zero);
    for (j, s) in source.iter().enumerate() {
        for (var, c) in l.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = s.0;
            e[var] += 1;
            match q.image(&ExponentVector(e)) {
                Image::Zero => {}
                Image::Basis(i) => m.set(i, j, m.get(i, j) + c),
                Image::NegBasis(i) => m.set(i, j, m.get(i, j) - c),
            }
        }
    }
    Ok(m)
}

/// Exact rank of `×L` for integer `L`, through sparse fraction-free
/// elimination. Rows are ordered by target monomial so the matrix is banded.
pub fn multiplication_rank(d: u32, l: &[i64; 3], q: &Quotient) -> usize {
    let source = enumerate_degree(2 * d - 1);
    let mut rows: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); q.complement().len()];
    for (j, s) in source.iter().enumerate() {
        for (var, &c) in l.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut e = s.0;
            e[var] += 1;
            match q.image(&ExponentVector(e)) {
                Image::Zero => {}
                Image::Basis(i) => push_entry(&mut rows[i], j, c),
                Image::NegBasis(i) => push_entry(&mut rows[i], j, -c),
            }
        }
    }
    fraction_free_rank(rows)
}

fn push_entry(row: &mut Vec<(usize, BigInt)>, col: usize, v: i64) {
    match row.iter_mut().find(|(j, _)| *j == col) {
        Some((_, x)) => *x += v,
        None => row.push((col, BigInt::from(v))),
    }
}

/// The `3 * trials` coefficients drawn from a single seeded stream.
pub fn random_forms(seed: u64, trials: u32) -> Vec<[i64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = COEFF_RANGE;
    (0..trials)
        .map(|_| [rng.gen_range(lo..=hi), rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)])
        .collect()
}

pub fn wlp_failure_check(p: &GroupParams, seed: u64, trials: u32) -> Result<WlpReport> {
    wlp_failure_check_with(p, seed, trials, Strategy::default())
}

pub fn wlp_failure_check_with(p: &GroupParams, seed: u64, trials: u32, strategy: Strategy) -> Result<WlpReport> {
    if trials == 0 {
        return Err(invalid("trials must be ≥ 1"));
    }
    let d = p.d();
    let bound_ok = mu_bound_check(d)?;
    let q = Quotient::new(d);
    let forms = random_forms(seed, trials);
    let ranks = strategy.map(&forms, |l| multiplication_rank(d, l, &q));
    let (src, tgt) = (source_dim(d), target_dim(d));
    let bound = src.min(tgt);
    let observed_rank = ranks.iter().copied().max().unwrap_or(0);
    let witness_verified = witness_verify(p, &forms[0].map(|c| Rational::from_integer(BigInt::from(c))))?;
    let trial_results: Vec<TrialResult> = forms
        .iter()
        .zip(&ranks)
        .map(|(l, &rank)| TrialResult { l: *l, rank })
        .collect();
    Ok(WlpReport {
        d,
        a: p.a(),
        mu: mu(d),
        bound_ok,
        source_dim: src,
        target_dim: tgt,
        observed_rank,
        certified: bound_ok && observed_rank < bound && witness_verified,
        trial_results,
        witness_verified,
        trials,
        seed,
    })
}

/// Clears denominators and content, returning a primitive integer triple
/// proportional to `l`. Scaling `L` scales `F` and `L·F` by a nonzero
/// constant, which changes neither membership nor invariance.
fn primitive_integer_form(l: &[Rational; 3]) -> [BigInt; 3] {
    let lcm = l.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints = l.clone().map(|q| q.numer() * (&lcm / q.denom()));
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.abs().is_one() {
        ints
    } else {
        ints.map(|v| v / &g)
    }
}

/// Polynomial whose coefficients live in `Z[x]/(x^n - 1)`; multiplying by a
/// power of ζ_n is a rotation.
type CyclicPoly = HashMap<ExponentVector, Vec<BigInt>>;

fn cyclic_mul_linear(f: &CyclicPoly, lin: &[(ExponentVector, usize, BigInt)], n: usize) -> CyclicPoly {
    let mut out: CyclicPoly = HashMap::with_capacity(f.len() * 3);
    for (m, coeffs) in f {
        for (x, shift, c) in lin {
            let target = out.entry(m.mul(x)).or_insert_with(|| vec![BigInt::zero(); n]);
            for (k, v) in coeffs.iter().enumerate() {
                if !v.is_zero() {
                    target[(k + shift) % n] += v * c;
                }
            }
        }
    }
    out
}

/// `g(L)` as a list of `(variable, power of ζ_{2d}, coefficient)`.
fn image_of_linear_form(g: &GroupElement, l: &[BigInt; 3], p: &GroupParams) -> Vec<(ExponentVector, usize, BigInt)> {
    (0..3)
        .filter(|&i| !l[i].is_zero())
        .map(|i| {
            let mut e = [0u32; 3];
            e[i] = 1;
            let (s, image) = act_on_monomial(g, &ExponentVector(e), p);
            // e = ζ_{2d}^2
            (image, 2 * s.exponent as usize, l[i].clone())
        })
        .collect()
}

fn cyclic_to_field(f: &CyclicPoly, field: &Arc<CycloField>) -> Polynomial<CycloElement> {
    Polynomial::from_terms(f.iter().map(|(m, coeffs)| (*m, field.from_cyclic_int(coeffs))))
}

/// `F_{2d-1} = ∏_{g ≠ Id} g(L)` and `L·F_{2d-1}` over Q(ζ_{2d}), for the
/// primitive integer multiple of `L`.
pub fn witness_polynomials(
    p: &GroupParams,
    l: &[Rational; 3],
) -> Result<(Polynomial<CycloElement>, Polynomial<CycloElement>)> {
    validate_l(l)?;
    let n = p.order() as usize;
    let lz = primitive_integer_form(l);
    let mut one = vec![BigInt::zero(); n];
    one[0] = BigInt::one();
    let mut f: CyclicPoly = HashMap::from([(ExponentVector::new(0, 0, 0), one)]);
    for g in elements(p).iter().filter(|g| !g.is_identity()) {
        f = cyclic_mul_linear(&f, &image_of_linear_form(g, &lz, p), n);
    }
    let lf = cyclic_mul_linear(&f, &image_of_linear_form(&GroupElement::IDENTITY, &lz, p), n);
    let field = CycloField::new(p.order());
    Ok((cyclic_to_field(&f, &field), cyclic_to_field(&lf, &field)))
}

/// Solves for `L·F` in the Q(ζ_{2d})-span of `B_{2d}`; `None` if it is not
/// in the span.
pub fn span_coordinates(p: &GroupParams, poly: &Polynomial<CycloElement>) -> Result<Option<Vec<CycloElement>>> {
    let d = p.d();
    let field = CycloField::new(p.order());
    let basis = fundamental_invariants(d)?;
    let monomials = enumerate_degree(2 * d);
    if poly.terms().any(|(m, _)| m.degree() != 2 * d) {
        return Ok(None);
    }
    let rows: Vec<Vec<CycloElement>> = monomials
        .iter()
        .map(|m| {
            basis
                .iter()
                .map(|b| {
                    if b.support().contains(m) {
                        field.one()
                    } else {
                        field.zero()
                    }
                })
                .collect()
        })
        .collect();
    let matrix = Matrix::from_rows(rows, basis.len(), field.zero());
    let rhs: Vec<CycloElement> = monomials
        .iter()
        .map(|m| poly.coeff(m).cloned().unwrap_or_else(|| field.zero()))
        .collect();
    Ok(matrix.solve(&rhs))
}

/// `F ≠ 0` and `L·F ∈ span(B_{2d})`.
pub fn witness_verify(p: &GroupParams, l: &[Rational; 3]) -> Result<bool> {
    let (f, lf) = witness_polynomials(p, l)?;
    if f.is_zero() {
        return Ok(false);
    }
    Ok(span_coordinates(p, &lf)?.is_some())
}

/// Coordinates of a degree `2d - 1` polynomial in the source basis of
/// [`multiplication_matrix`].
pub fn source_vector(d: u32, f: &Polynomial<CycloElement>, field: &Arc<CycloField>) -> Vec<CycloElement> {
    enumerate_degree(2 * d - 1)
        .iter()
        .map(|m| f.coeff(m).cloned().unwrap_or_else(|| field.zero()))
        .collect()
}

/// `M·v` for a rational matrix and a vector over Q(ζ_n).
pub fn apply_rational_matrix(m: &Matrix<Rational>, v: &[CycloElement], field: &Arc<CycloField>) -> Vec<CycloElement> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(field.zero(), |acc, (a, b)| acc.add_ref(&b.scale(a)))
        })
        .collect()
}
