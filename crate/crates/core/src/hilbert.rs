//! Hilbert function, polynomial and series of the extended invariant ring,
//! with two independent oracles for the Hilbert function and the derived
//! invariants of the GT-surface.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{invalid, GtError, Result};
use crate::exactmath::{rat, CycloElement, CycloField, IntPolynomial, Rational, Ring};
use crate::group::{act_on_monomial, check_d, elements, GroupParams};
use crate::monomial::{enumerate_degree, is_gamma_invariant};
use crate::par::Strategy;

fn gcd2(d: u32) -> u32 {
    d.gcd(&2)
}

/// `(2dt^2 + (d + gcd(d,2) + 2) t + 2) / 2`, or `None` past 64 bits.
pub fn hf_checked(d: u32, t: u32) -> Option<u64> {
    let (d, t, g) = (d as u128, t as u128, gcd2(d) as u128);
    u64::try_from((2 * d * t * t + (d + g + 2) * t + 2) / 2).ok()
}

/// [`hf_checked`] for arguments whose value is known to fit in 64 bits.
///
/// # Panics
///
/// If the value exceeds `u64::MAX`.
pub fn hf_closed(d: u32, t: u32) -> u64 {
    hf_checked(d, t).expect("Hilbert function exceeds 64 bits")
}

/// μ_{2d}, the number of fundamental invariants.
pub fn mu(d: u32) -> u32 {
    hf_closed(d, 1) as u32
}

/// Number of Γ-invariant monomials of degree 2dt, by enumeration.
pub fn gamma_invariant_count(d: u32, t: u32) -> u64 {
    enumerate_degree(2 * d * t)
        .iter()
        .filter(|m| is_gamma_invariant(m, d))
        .count() as u64
}

/// Trace of every group element (in [`elements`] order) on `R_{2dt}`, as
/// elements of Q(ζ_{2d}).
///
/// The action is diagonal up to σ, so each trace is a character sum over the
/// monomials fixed up to scalar; the sum is accumulated as a histogram of
/// exponents of `e` and converted once.
pub fn group_traces(p: &GroupParams, t: u32, strategy: Strategy) -> Vec<CycloElement> {
    let d = p.d();
    let field = CycloField::new(2 * d);
    let monomials = enumerate_degree(2 * d * t);
    let group = elements(p);
    strategy.map(&group, |g| {
        let mut hist = vec![0u64; d as usize];
        for m in &monomials {
            let (s, image) = act_on_monomial(g, m, p);
            if image == *m {
                hist[s.exponent as usize] += 1;
            }
        }
        let mut cyclic = vec![BigInt::zero(); 2 * d as usize];
        for (k, &c) in hist.iter().enumerate() {
            cyclic[2 * k] = BigInt::from(c);
        }
        field.from_cyclic_int(&cyclic)
    })
}

/// Hilbert function through the averaging formula
/// `dim R_{2dt}^G = (1/|G|) Σ_g trace(g | R_{2dt})`, computed exactly in Q(ζ_{2d}).
pub fn hf_trace_oracle(p: &GroupParams, t: u32) -> Result<u64> {
    hf_trace_oracle_with(p, t, Strategy::default())
}

pub fn hf_trace_oracle_with(p: &GroupParams, t: u32, strategy: Strategy) -> Result<u64> {
    let traces = group_traces(p, t, strategy);
    let total = traces.iter().skip(1).fold(traces[0].clone(), |acc, x| acc.add_ref(x));
    let value = total
        .as_rational()
        .ok_or_else(|| GtError::Consistency("trace sum is not rational".into()))?
        / rat(p.order() as i64);
    if !value.is_integer() || value.is_negative() {
        return Err(GtError::Consistency(format!(
            "trace average {value} is not a nonnegative integer"
        )));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| GtError::Consistency("trace average overflows u64".into()))
}

/// Hilbert function by counting: `td + 1` symmetric monomials plus one
/// binomial for each σ-orbit of size two among the Γ-invariant monomials.
pub fn hf_count_oracle(d: u32, t: u32) -> Result<u64> {
    check_d(d)?;
    let mu_c = gamma_invariant_count(d, t);
    let sym = (t * d + 1) as u64;
    let rest = mu_c
        .checked_sub(sym)
        .ok_or_else(|| GtError::Consistency("fewer Γ-invariants than symmetric monomials".into()))?;
    if rest % 2 != 0 {
        return Err(GtError::Consistency(format!(
            "odd number ({rest}) of non-symmetric Γ-invariant monomials"
        )));
    }
    Ok(sym + rest / 2)
}

/// Hilbert function, polynomial and series package.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertData {
    pub d: u32,
    /// Coefficients of HP in ascending powers of t.
    pub hp_coeffs: [Rational; 3],
    /// Numerator of HS over `(1 - z)^3`.
    pub hs_numerator: IntPolynomial,
}

impl HilbertData {
    pub fn hf(&self, t: u32) -> u64 {
        hf_closed(self.d, t)
    }

    pub fn hf_values(&self, tmax: u32) -> Vec<u64> {
        (0..=tmax).map(|t| self.hf(t)).collect()
    }

    pub fn hp(&self, t: &Rational) -> Rational {
        &self.hp_coeffs[0] + t * &self.hp_coeffs[1] + t * t * &self.hp_coeffs[2]
    }

    /// Taylor coefficients of the Hilbert series up to `z^tmax`.
    pub fn series_coefficients(&self, tmax: usize) -> Vec<BigInt> {
        self.hs_numerator.series_over_one_minus_x(3, tmax)
    }
}

pub fn hilbert_series(d: u32) -> Result<HilbertData> {
    check_d(d)?;
    let g = gcd2(d) as i64;
    let d64 = d as i64;
    Ok(HilbertData {
        d,
        hp_coeffs: [rat(1), rat(d64 + g + 2) / rat(2), rat(d64)],
        hs_numerator: IntPolynomial::from_i64(&[1, (3 * d64 + g - 2) / 2, (d64 - g) / 2]),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub degree: u32,
    /// Codimension C.
    pub codim: u32,
    pub cm_type: u32,
    /// `h = degree - C - 2`.
    pub h: u32,
    pub regularity: u32,
    pub gorenstein: bool,
}

pub fn surface_invariants(d: u32) -> Result<SurfaceInvariants> {
    check_d(d)?;
    let g = gcd2(d);
    let degree = 2 * d;
    let codim = (3 * d + g - 2) / 2;
    let cm_type = (d - g) / 2;
    Ok(SurfaceInvariants {
        degree,
        codim,
        cm_type,
        h: degree - codim - 2,
        regularity: 3,
        gorenstein: d == 3 || d == 4,
    })
}

/// Serializable Hilbert summary for a given `d`.
#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    pub d: u32,
    /// Degrees at which `hf` is evaluated.
    pub t: Vec<u32>,
    pub hf: Vec<u64>,
    pub hs_numerator: IntPolynomial,
    pub hp: [String; 3],
    pub surface: SurfaceInvariants,
}

pub fn hilbert_report(d: u32, t_values: impl IntoIterator<Item = u32>) -> Result<HilbertReport> {
    let data = hilbert_series(d)?;
    let t: Vec<u32> = t_values.into_iter().collect();
    let hf = t
        .iter()
        .map(|&t| hf_checked(d, t).ok_or_else(|| invalid(format!("HF({d}, {t}) exceeds 64 bits"))))
        .collect::<Result<_>>()?;
    Ok(HilbertReport {
        d,
        hf,
        t,
        hp: data.hp_coeffs.clone().map(|c| c.to_string()),
        hs_numerator: data.hs_numerator,
        surface: surface_invariants(d)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        assert_eq!(hf_closed(3, 1), 7);
        assert_eq!(hf_closed(3, 2), 19);
        assert_eq!(hf_closed(4, 2), 25);
        assert_eq!(hf_closed(7, 0), 1);
        let hs: Vec<u64> = (0..=4).map(|t| hf_closed(3, t)).collect();
        assert_eq!(hs, vec![1, 7, 19, 37, 61]);
        assert_eq!(hf_checked(u32::MAX, u32::MAX), None);
        assert!(hilbert_report(3, [u32::MAX]).is_err());
    }

    #[test]
    fn oracles_small() {
        assert_eq!(hf_trace_oracle(&GroupParams::new(3, 1).unwrap(), 1).unwrap(), 7);
        assert_eq!(hf_trace_oracle(&GroupParams::new(4, 1).unwrap(), 1).unwrap(), 9);
        assert_eq!(hf_trace_oracle(&GroupParams::new(5, 2).unwrap(), 1).unwrap(), 10);
        // d = 3 sextics: 4 symmetric, plus x1^3, x1^6, x1^4x2 and their mirrors
        assert_eq!(gamma_invariant_count(3, 1), 10);
        assert_eq!(hf_count_oracle(3, 1).unwrap(), 7);
        assert_eq!(hf_count_oracle(4, 1).unwrap(), 9);
    }

    #[test]
    fn series_numerators() {
        assert_eq!(
            hilbert_series(3).unwrap().hs_numerator,
            IntPolynomial::from_i64(&[1, 4, 1])
        );
        assert_eq!(
            hilbert_series(4).unwrap().hs_numerator,
            IntPolynomial::from_i64(&[1, 6, 1])
        );
    }

    #[test]
    fn surface_examples() {
        let s = surface_invariants(5).unwrap();
        assert_eq!((s.codim, s.h, s.cm_type, s.degree), (7, 1, 2, 10));
        assert!(!s.gorenstein);
        let s = surface_invariants(3).unwrap();
        assert_eq!((s.codim, s.h, s.cm_type), (4, 0, 1));
        assert!(s.gorenstein);
        let s = surface_invariants(4).unwrap();
        assert_eq!((s.codim, s.h), (6, 0));
        assert!(s.gorenstein);
    }

    #[test]
    fn reflection_traces_are_counts() {
        for d in 3..=8 {
            let p = GroupParams::new(d, 1).unwrap();
            for t in 1..=2 {
                let traces = group_traces(&p, t, Strategy::Sequential);
                let refl: Rational = traces[d as usize..]
                    .iter()
                    .map(|x| x.as_rational().expect("reflection traces are integers"))
                    .sum();
                assert_eq!(refl, rat((d * (t * d + 1)) as i64));
            }
        }
    }
}
