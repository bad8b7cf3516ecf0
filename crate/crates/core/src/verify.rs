//! End-to-end cross-checks for a range of `d`.

use serde::Serialize;

use crate::betti::{betti_structural_checks, betti_table, kpolynomial_check, NamedCheck};
use crate::error::Result;
use crate::exactmath::CycloField;
use crate::group::{act_on_polynomial, GroupElement, GroupParams};
use crate::hilbert::{hf_closed, hf_count_oracle, hf_trace_oracle_with};
use crate::invariants::{fundamental_invariants, graded_basis_with};
use crate::par::Strategy;
use crate::syzygy::{expected_quadric_count, kernel_quadrics, surface_generators, verify_relation};
use crate::wlp::wlp_failure_check_with;

/// Degrees `t` used for the Hilbert function comparison.
pub const HF_DEGREES: std::ops::RangeInclusive<u32> = 1..=2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DReport {
    pub d: u32,
    pub a: u32,
    pub passed: bool,
    pub checks: Vec<NamedCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: u32,
    pub passed: bool,
    pub results: Vec<DReport>,
}

impl VerifyReport {
    pub fn failures(&self) -> Vec<(u32, &str)> {
        self.results
            .iter()
            .flat_map(|r| {
                r.checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(move |c| (r.d, c.name.as_str()))
            })
            .collect()
    }
}

/// Betti columns `(b[·][1], b[·][2])` for d = 3, 4, 5.
fn betti_fixture(d: u32) -> Option<(Vec<u128>, Vec<u128>)> {
    match d {
        3 => Some((vec![9, 16, 9, 0], vec![0, 0, 0, 1])),
        4 => Some((vec![20, 64, 90, 64, 20, 0], vec![0, 0, 0, 0, 0, 1])),
        5 => Some((vec![26, 98, 168, 154, 70, 6, 0], vec![0, 0, 0, 0, 0, 7, 2])),
        _ => None,
    }
}

fn hf_check(p: &GroupParams, strategy: Strategy) -> Result<NamedCheck> {
    let d = p.d();
    let mut details = Vec::new();
    let mut ok = true;
    for t in HF_DEGREES {
        let closed = hf_closed(d, t);
        let trace = hf_trace_oracle_with(p, t, strategy)?;
        let count = hf_count_oracle(d, t)?;
        let basis = graded_basis_with(d, t, strategy)?.len() as u64;
        ok &= closed == trace && trace == count && count == basis;
        details.push(format!("t={t}: {closed}/{trace}/{count}/{basis}"));
    }
    Ok(NamedCheck::new("hf_three_way", ok, details.join(", ")))
}

/// τ and η fix the first, a middle and the last fundamental invariant.
fn invariance_check(p: &GroupParams) -> Result<NamedCheck> {
    let field = CycloField::new(p.order());
    let basis = fundamental_invariants(p.d())?;
    let picks = [0, basis.len() / 2, basis.len() - 1];
    let mut ok = true;
    for &i in &picks {
        let f = basis[i].to_polynomial(&field.one());
        for g in [GroupElement::TAU, GroupElement::ETA] {
            ok &= act_on_polynomial(&g, &f, p)? == f;
        }
    }
    Ok(NamedCheck::new(
        "basis_invariance",
        ok,
        format!("{} elements under τ and η", picks.len()),
    ))
}

pub fn verify_d(p: &GroupParams, seed: u64, trials: u32, strategy: Strategy) -> Result<DReport> {
    let d = p.d();
    let mut checks = vec![hf_check(p, strategy)?];

    let wlp = wlp_failure_check_with(p, seed, trials, strategy)?;
    checks.push(NamedCheck::new(
        "mu_bound",
        wlp.bound_ok,
        format!("μ = {} <= {}", wlp.mu, 2 * d + 1),
    ));
    checks.push(invariance_check(p)?);
    checks.push(NamedCheck::new(
        "wlp_certificate",
        wlp.certified,
        format!(
            "rank {} < min({}, {}), witness {}",
            wlp.observed_rank, wlp.source_dim, wlp.target_dim, wlp.witness_verified
        ),
    ));

    let quadrics = kernel_quadrics(d)?;
    let expected = expected_quadric_count(d);
    checks.push(NamedCheck::new(
        "quadric_count",
        quadrics.len() as u64 == expected,
        format!("{} quadrics, expected {expected}", quadrics.len()),
    ));

    let generators = surface_generators(d)?;
    let relations_ok =
        quadrics.iter().all(|r| verify_relation(r, d)) && generators.iter().all(|r| verify_relation(r, d));
    checks.push(NamedCheck::new(
        "relations",
        relations_ok,
        format!("{} z-relations and {} w-relations", quadrics.len(), generators.len()),
    ));

    if let Some((col1, col2)) = betti_fixture(d) {
        let t = betti_table(d)?;
        let got1: Vec<u128> = (1..=t.codim).map(|i| t.get(i, 1)).collect();
        let got2: Vec<u128> = (1..=t.codim).map(|i| t.get(i, 2)).collect();
        checks.push(NamedCheck::new(
            "betti_fixture",
            got1 == col1 && got2 == col2,
            format!("{got1:?} / {got2:?}"),
        ));
    }
    checks.push(NamedCheck::new(
        "k_polynomial",
        kpolynomial_check(d)?,
        "B(z) = HS numerator · (1 - z)^(μ-3)".into(),
    ));
    let structural = betti_structural_checks(d)?;
    let failed: Vec<&str> = structural
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    checks.push(NamedCheck::new(
        "betti_structure",
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} structural checks", structural.checks.len())
        } else {
            format!("failed: {}", failed.join(", "))
        },
    ));

    Ok(DReport {
        d,
        a: p.a(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Runs [`verify_d`] for every `d` in `ds` with the smallest valid `a` (or
/// `a` when given). Each `d` runs sequentially inside; the fan-out across `d`
/// follows `strategy`. Results are sorted by `d`.
pub fn verify_range(ds: &[u32], a: Option<u32>, seed: u64, trials: u32, strategy: Strategy) -> Result<VerifyReport> {
    let params = ds
        .iter()
        .map(|&d| match a {
            Some(a) => GroupParams::new(d, a),
            None => GroupParams::with_default_a(d),
        })
        .collect::<Result<Vec<_>>>()?;
    let mut results = strategy
        .map(&params, |p| verify_d(p, seed, trials, Strategy::Sequential))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|r| r.d);
    Ok(VerifyReport {
        seed,
        trials,
        passed: results.iter().all(|r| r.passed),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        let r = verify_range(&[3, 4, 5], None, 0, 2, Strategy::default()).unwrap();
        assert!(r.passed, "{:?}", r.failures());
        assert_eq!(r.results.iter().map(|x| x.d).collect::<Vec<_>>(), vec![3, 4, 5]);
        assert!(r.results[0].checks.iter().any(|c| c.name == "betti_fixture"));
    }
}
