//! The dihedral representation ρ_a on k[x0, x1, x2].
//!
//! `τ ↦ M = diag(1, e^a, e^{d-a})` and `η ↦ σ` (swap of x1 and x2), where
//! `e` is a primitive d-th root of unity. Every group element is written
//! uniquely as `M^l` or `M^l σ` with `0 <= l < d`. The scalar extension by
//! `ε Id` is never materialized; callers restrict to degrees divisible by 2d
//! where it acts trivially.

use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{invalid, GtError, Result};
use crate::exactmath::{CycloElement, CycloField, Ring};
use crate::monomial::{sigma_mirror, ExponentVector, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupParams {
    d: u32,
    a: u32,
}

impl GroupParams {
    /// Requires `d >= 3`, `0 < a < d/2` and `gcd(d, a) = 1`.
    pub fn new(d: u32, a: u32) -> Result<Self> {
        check_d(d)?;
        if a == 0 || 2 * a >= d {
            return Err(invalid(format!("a must satisfy 0 < a < d/2 (d = {d}, a = {a})")));
        }
        if d.gcd(&a) != 1 {
            return Err(invalid(format!("a must be coprime to d (d = {d}, a = {a})")));
        }
        Ok(Self { d, a })
    }

    /// Parameters with the smallest valid `a`, which is always 1.
    pub fn with_default_a(d: u32) -> Result<Self> {
        Self::new(d, 1)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    /// Group order 2d.
    pub fn order(&self) -> u32 {
        2 * self.d
    }
}

pub(crate) fn check_d(d: u32) -> Result<()> {
    if d < 3 {
        Err(invalid("d must be ≥ 3"))
    } else {
        Ok(())
    }
}

/// Every `a` valid for the given `d`, ascending.
pub fn valid_a_values(d: u32) -> Vec<u32> {
    (1..d).filter(|&a| GroupParams::new(d, a).is_ok()).collect()
}

/// `M^rotation` or `M^rotation σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    pub rotation: u32,
    pub reflected: bool,
}

impl GroupElement {
    pub const IDENTITY: Self = Self {
        rotation: 0,
        reflected: false,
    };

    /// ρ_a(τ)
    pub const TAU: Self = Self {
        rotation: 1,
        reflected: false,
    };

    /// ρ_a(η) = σ
    pub const ETA: Self = Self {
        rotation: 0,
        reflected: true,
    };

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// `self * rhs`, using `σ M σ = M^{-1}`.
    pub fn compose(&self, rhs: &Self, p: &GroupParams) -> Self {
        let d = p.d as i64;
        let shift = if self.reflected {
            -(rhs.rotation as i64)
        } else {
            rhs.rotation as i64
        };
        Self {
            rotation: (self.rotation as i64 + shift).rem_euclid(d) as u32,
            reflected: self.reflected ^ rhs.reflected,
        }
    }

    pub fn inverse(&self, p: &GroupParams) -> Self {
        if self.reflected {
            // reflections are involutions
            *self
        } else {
            Self {
                rotation: (p.d - self.rotation) % p.d,
                reflected: false,
            }
        }
    }

    pub fn pow(&self, k: u32, p: &GroupParams) -> Self {
        (0..k).fold(Self::IDENTITY, |acc, _| acc.compose(self, p))
    }
}

/// All 2d elements: rotations `M^0..M^{d-1}`, then `M^0 σ..M^{d-1} σ`.
pub fn elements(p: &GroupParams) -> Vec<GroupElement> {
    let rot = (0..p.d).map(|l| GroupElement {
        rotation: l,
        reflected: false,
    });
    let refl = (0..p.d).map(|l| GroupElement {
        rotation: l,
        reflected: true,
    });
    rot.chain(refl).collect()
}

/// A power `e^k` of the primitive d-th root of unity `e = ε^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EPower {
    pub exponent: u32,
    pub d: u32,
}

impl EPower {
    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    /// The value inside Q(ζ_n) for any `n` divisible by `d`.
    pub fn to_cyclo(&self, field: &Arc<CycloField>) -> Result<CycloElement> {
        let n = field.order();
        if !n.is_multiple_of(self.d) {
            return Err(GtError::OrderMismatch {
                expected: self.d,
                found: n,
            });
        }
        Ok(field.zeta_pow((self.exponent * (n / self.d)) as i64))
    }
}

/// `g(m) = scalar * image`.
pub fn act_on_monomial(g: &GroupElement, m: &ExponentVector, p: &GroupParams) -> (EPower, ExponentVector) {
    let image = if g.reflected { sigma_mirror(m) } else { *m };
    let d = p.d as u64;
    let weight = (p.a as u64 * image.a1() as u64 + (d - p.a as u64) * image.a2() as u64) % d;
    let exponent = (g.rotation as u64 * weight % d) as u32;
    (EPower { exponent, d: p.d }, image)
}

/// Linear extension of [`act_on_monomial`] to polynomials over Q(ζ_n),
/// `d | n`.
pub fn act_on_polynomial(
    g: &GroupElement,
    f: &Polynomial<CycloElement>,
    p: &GroupParams,
) -> Result<Polynomial<CycloElement>> {
    let Some((_, c0)) = f.terms().next() else {
        return Ok(Polynomial::zero());
    };
    let field = Arc::clone(c0.field());
    if field.order() % p.d != 0 {
        return Err(GtError::OrderMismatch {
            expected: p.d,
            found: field.order(),
        });
    }
    let mut out = Polynomial::zero();
    for (m, c) in f.terms() {
        let (s, image) = act_on_monomial(g, m, p);
        out.add_term(image, c.mul_ref(&s.to_cyclo(&field)?));
    }
    Ok(out)
}
