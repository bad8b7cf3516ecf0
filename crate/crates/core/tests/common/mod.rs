//! Property checks shared by the proptest suites and the acceptance harness.
//! Each check returns `Err` with a description of the first violation.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use gt_core::exactmath::{rat, CycloElement, CycloField, Field, Matrix, Ring};
use gt_core::group::{act_on_polynomial, elements, valid_a_values, GroupElement, GroupParams};
use gt_core::hilbert::{hf_closed, hf_count_oracle, hf_trace_oracle_with, mu};
use gt_core::invariants::{graded_basis, y_basis};
use gt_core::monomial::{enumerate_degree, ExponentVector, Polynomial};
use gt_core::syzygy::{psi_d, w_index_set};
use gt_core::Strategy as Exec;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

pub type Check = Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Euler's totient by direct count.
pub fn totient(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

pub fn cyclo_degree(n: u32) -> Check {
    let f = CycloField::new(n);
    ensure(f.degree() == totient(n), || {
        format!("deg Q(ζ_{n}) = {} ≠ φ({n})", f.degree())
    })?;
    ensure(f.zeta_pow(n as i64) == f.one(), || format!("ζ_{n}^{n} ≠ 1"))?;
    ensure((1..n).all(|k| f.zeta_pow(k as i64) != f.one()), || {
        format!("ζ_{n} is not primitive")
    })
}

pub fn cyclo_element(field: &Arc<CycloField>, coeffs: &[i64]) -> CycloElement {
    field.from_poly(coeffs.iter().map(|&c| rat(c)).collect())
}

/// Ring and field axioms on three elements of Q(ζ_n).
pub fn cyclo_axioms(n: u32, a: &[i64], b: &[i64], c: &[i64]) -> Check {
    let f = CycloField::new(n);
    let (a, b, c) = (cyclo_element(&f, a), cyclo_element(&f, b), cyclo_element(&f, c));
    ensure(a.add_ref(&b) == b.add_ref(&a), || "addition not commutative".into())?;
    ensure(a.mul_ref(&b) == b.mul_ref(&a), || {
        "multiplication not commutative".into()
    })?;
    ensure(a.add_ref(&b).add_ref(&c) == a.add_ref(&b.add_ref(&c)), || {
        "addition not associative".into()
    })?;
    ensure(a.mul_ref(&b).mul_ref(&c) == a.mul_ref(&b.mul_ref(&c)), || {
        "multiplication not associative".into()
    })?;
    ensure(
        a.mul_ref(&b.add_ref(&c)) == a.mul_ref(&b).add_ref(&a.mul_ref(&c)),
        || "distributivity fails".into(),
    )?;
    ensure(a.sub_ref(&a).is_zero(), || "a - a ≠ 0".into())?;
    ensure(a.mul_ref(&f.one()) == a, || "a·1 ≠ a".into())?;
    if !a.is_zero() {
        let inv = a.inv().map_err(|e| e.to_string())?;
        ensure(a.mul_ref(&inv) == f.one(), || "a·a⁻¹ ≠ 1".into())?;
    }
    Ok(())
}

/// Rank over F_p of an integer matrix, as an independent oracle for the
/// rational rank.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = powmod(m[rank][col], p - 2);
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let factor = mulmod(row[col], inv);
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = (*x + p - mulmod(factor, y)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The Mersenne prime 2^61 - 1.
pub const ORACLE_PRIME: u64 = (1 << 61) - 1;

pub fn rank_nullity(rows: &[Vec<i64>]) -> Check {
    let cols = rows.first().map_or(0, Vec::len);
    let m = Matrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect(),
        cols,
        rat(0),
    );
    let (rank, kernel) = m.rank_and_kernel();
    ensure(rank + kernel.len() == cols, || {
        format!("rank {rank} + nullity {} ≠ {cols}", kernel.len())
    })?;
    for v in &kernel {
        ensure(m.mul_vec(v).iter().all(Zero::is_zero), || {
            "kernel vector not in kernel".into()
        })?;
    }
    ensure(m.fraction_free_rank() == rank, || "fraction-free rank disagrees".into())?;
    ensure(m.transpose().rank() == rank, || "row rank ≠ column rank".into())?;
    let oracle = rank_mod_p(rows, ORACLE_PRIME);
    ensure(oracle == rank, || format!("rank {rank} but rank mod p = {oracle}"))
}

/// τ(f) computed by direct substitution x1 -> e^a x1, x2 -> e^{d-a} x2.
fn tau_by_substitution(
    f: &Polynomial<CycloElement>,
    p: &GroupParams,
    field: &Arc<CycloField>,
) -> Polynomial<CycloElement> {
    let (d, a) = (p.d() as i64, p.a() as i64);
    Polynomial::from_terms(f.terms().map(|(m, c)| {
        let k = 2 * (a * m.a1() as i64 + (d - a) * m.a2() as i64);
        (*m, c.mul_ref(&field.zeta_pow(k)))
    }))
}

fn eta_by_substitution(f: &Polynomial<CycloElement>) -> Polynomial<CycloElement> {
    Polynomial::from_terms(
        f.terms()
            .map(|(m, c)| (ExponentVector::new(m.a0(), m.a2(), m.a1()), c.clone())),
    )
}

/// Polynomial of degree `deg` with small integer coefficients drawn from
/// `coeffs` cyclically.
pub fn sample_polynomial(deg: u32, coeffs: &[i64], field: &Arc<CycloField>) -> Polynomial<CycloElement> {
    Polynomial::from_terms(
        enumerate_degree(deg)
            .into_iter()
            .zip(coeffs.iter().cycle())
            .map(|(m, &c)| (m, field.from_rational(rat(c)))),
    )
}

/// The action is a homomorphism and satisfies τ^d = η² = 1, ητη = τ⁻¹;
/// τ and η agree with direct substitution.
pub fn group_relations(p: &GroupParams, coeffs: &[i64]) -> Check {
    let field = CycloField::new(p.order());
    let f = sample_polynomial(3, coeffs, &field);
    let act = |g: &GroupElement, f: &Polynomial<CycloElement>| act_on_polynomial(g, f, p).map_err(|e| e.to_string());
    let (tau, eta) = (GroupElement::TAU, GroupElement::ETA);
    ensure(act(&tau, &f)? == tau_by_substitution(&f, p, &field), || {
        "τ ≠ substitution".into()
    })?;
    ensure(act(&eta, &f)? == eta_by_substitution(&f), || {
        "η ≠ swap of x1, x2".into()
    })?;
    ensure(tau.pow(p.d(), p).is_identity(), || "τ^d ≠ 1".into())?;
    ensure(eta.compose(&eta, p).is_identity(), || "η² ≠ 1".into())?;
    ensure(eta.compose(&tau, p).compose(&eta, p) == tau.inverse(p), || {
        "ητη ≠ τ⁻¹".into()
    })?;
    let group = elements(p);
    ensure(group.iter().collect::<HashSet<_>>().len() == 2 * p.d() as usize, || {
        "group elements not distinct".into()
    })?;
    for g in &group {
        ensure(g.compose(&g.inverse(p), p).is_identity(), || {
            format!("{g:?}·{g:?}⁻¹ ≠ 1")
        })?;
        for h in [tau, eta] {
            let lhs = act(&g.compose(&h, p), &f)?;
            let rhs = act(g, &act(&h, &f)?)?;
            ensure(lhs == rhs, || format!("action of {g:?}∘{h:?} is not a composition"))?;
        }
    }
    Ok(())
}

/// `B_{2dt}` does not depend on `a`: every element is fixed by the group for
/// every valid `a`, and the Γ-invariant monomials are the same set.
pub fn basis_a_independence(d: u32, t: u32) -> Check {
    let basis = graded_basis(d, t).map_err(|e| e.to_string())?;
    let monomials = enumerate_degree(2 * d * t);
    let mut reference: Option<Vec<ExponentVector>> = None;
    for a in valid_a_values(d) {
        let p = GroupParams::new(d, a).map_err(|e| e.to_string())?;
        let field = CycloField::new(p.order());
        for b in &basis {
            let f = b.to_polynomial(&field.one());
            for g in [GroupElement::TAU, GroupElement::ETA] {
                let image = act_on_polynomial(&g, &f, &p).map_err(|e| e.to_string())?;
                ensure(image == f, || format!("d={d}, a={a}: {b:?} not fixed"))?;
            }
        }
        let fixed: Vec<ExponentVector> = monomials
            .iter()
            .filter(|m| (a as u64 * m.a1() as u64 + (d - a) as u64 * m.a2() as u64).is_multiple_of(d as u64))
            .copied()
            .collect();
        match &reference {
            None => reference = Some(fixed),
            Some(r) => ensure(*r == fixed, || format!("d={d}: τ-fixed monomials depend on a={a}"))?,
        }
    }
    Ok(())
}

/// Closed formula, trace average, orbit count and enumerated basis agree.
pub fn hf_three_way(p: &GroupParams, t: u32) -> Check {
    let d = p.d();
    let closed = hf_closed(d, t);
    let trace = hf_trace_oracle_with(p, t, Exec::Sequential).map_err(|e| e.to_string())?;
    let count = hf_count_oracle(d, t).map_err(|e| e.to_string())?;
    let basis = graded_basis(d, t).map_err(|e| e.to_string())?.len() as u64;
    let ybasis = y_basis(d, t).map_err(|e| e.to_string())?.len() as u64;
    ensure(
        closed == trace && trace == count && count == basis && basis == ybasis,
        || format!("d={d}, a={}, t={t}: {closed}/{trace}/{count}/{basis}/{ybasis}", p.a()),
    )
}

/// ψ_d is injective on W_d and |W_d| = μ.
pub fn psi_injective(d: u32) -> Check {
    let w = w_index_set(d).map_err(|e| e.to_string())?;
    ensure(w.len() == mu(d) as usize, || {
        format!("d={d}: |W| = {} ≠ μ = {}", w.len(), mu(d))
    })?;
    let images: HashSet<_> = w.iter().map(|z| psi_d(z, d)).collect();
    ensure(images.len() == w.len(), || format!("d={d}: ψ_d not injective"))?;
    ensure(images.iter().all(|y| y.weighted_degree(d) == 2 * d), || {
        format!("d={d}: ψ_d image outside degree 2d")
    })
}

pub fn small_vec(len: usize, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(range, len)
}

/// `(d, a)` with `d` in `ds` and `a` valid for `d`.
pub fn params(ds: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = GroupParams> {
    ds.prop_flat_map(|d| {
        let valid = valid_a_values(d);
        proptest::sample::select(valid).prop_map(move |a| GroupParams::new(d, a).expect("valid a"))
    })
}

/// A random integer matrix with at most `max` rows and columns; a low-rank
/// product is mixed in so that rank deficiency is common.
pub fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max, 0..=max, any::<bool>()).prop_flat_map(|(r, c, k, low)| {
        let k = k.max(1);
        (
            proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r),
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, k), r),
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), k),
        )
            .prop_map(move |(dense, u, v)| {
                if !low {
                    return dense;
                }
                (0..r)
                    .map(|i| (0..c).map(|j| (0..k).map(|l| u[i][l] * v[l][j]).sum()).collect())
                    .collect()
            })
    })
}
