use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{cyclotomic_polynomial, Field, Rational, Ring};
use crate::error::{GtError, Result};

/// The cyclotomic field Q(ζ_n), realized as Q[x] / Φ_n(x).
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    /// Φ_n, monic, ascending coefficients.
    modulus: Vec<BigInt>,
    /// Reduced coordinates of ζ^k for k in 0..n (integral, since Φ_n is
    /// monic).
    int_powers: Vec<Vec<BigInt>>,
    powers: Vec<Vec<Rational>>,
}

impl CycloField {
    pub fn new(order: u32) -> Arc<Self> {
        assert!(order >= 1, "cyclotomic field needs order >= 1");
        let modulus = cyclotomic_polynomial(order).coeffs().to_vec();
        let deg = modulus.len() - 1;
        let mut int_powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); deg];
        cur[0] = BigInt::one();
        for _ in 0..order {
            int_powers.push(cur.clone());
            // multiply by x, then fold x^deg back using Φ_n
            let top = cur[deg - 1].clone();
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c -= &top * &modulus[i];
                }
            }
        }
        let powers = int_powers
            .iter()
            .map(|p| p.iter().cloned().map(Rational::from_integer).collect())
            .collect();
        Arc::new(Self {
            order,
            modulus,
            int_powers,
            powers,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of Φ_n, i.e. Euler's totient of n.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(self: &Arc<Self>) -> CycloElement {
        CycloElement {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> CycloElement {
        let mut e = self.zero();
        e.coeffs[0] = q;
        e
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CycloElement {
        let idx = k.rem_euclid(self.order as i64) as usize;
        CycloElement {
            field: Arc::clone(self),
            coeffs: self.powers[idx].clone(),
        }
    }

    /// Builds an element from polynomial coordinates of any length,
    /// reducing modulo Φ_n.
    pub fn from_poly(self: &Arc<Self>, mut coeffs: Vec<Rational>) -> CycloElement {
        self.reduce(&mut coeffs);
        CycloElement {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// Reduces an element of Q[x]/(x^n - 1), given by its n coordinates,
    /// into the field.
    pub fn from_cyclic(self: &Arc<Self>, cyclic: &[Rational]) -> CycloElement {
        let mut out = vec![Rational::zero(); self.degree()];
        for (k, c) in cyclic.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.powers[k % self.order as usize]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        CycloElement {
            field: Arc::clone(self),
            coeffs: out,
        }
    }

    /// [`CycloField::from_cyclic`] for integer coordinates; the reduction
    /// runs in the integers.
    pub fn from_cyclic_int(self: &Arc<Self>, cyclic: &[BigInt]) -> CycloElement {
        let mut out = vec![BigInt::zero(); self.degree()];
        for (k, c) in cyclic.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.int_powers[k % self.order as usize]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        CycloElement {
            field: Arc::clone(self),
            coeffs: out.into_iter().map(Rational::from_integer).collect(),
        }
    }

    fn reduce(&self, coeffs: &mut Vec<Rational>) {
        let deg = self.degree();
        for k in (deg..coeffs.len()).rev() {
            if coeffs[k].is_zero() {
                continue;
            }
            let top = std::mem::take(&mut coeffs[k]);
            for (j, m) in self.modulus[..deg].iter().enumerate() {
                if !m.is_zero() {
                    coeffs[k - deg + j] -= &top * Rational::from_integer(m.clone());
                }
            }
        }
        coeffs.resize(deg, Rational::zero());
    }
}

/// An element of Q(ζ_n): coordinates in the power basis 1, ζ, …, ζ^{φ(n)-1}.
#[derive(Clone)]
pub struct CycloElement {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl CycloElement {
    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero_elem()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            k >>= 1;
        }
        acc
    }

    fn check_same(&self, rhs: &Self) {
        assert_eq!(
            self.field.order, rhs.field.order,
            "cyclotomic elements from different fields"
        );
    }
}

impl PartialEq for CycloElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElement {}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})[", self.field.order)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Ring for CycloElement {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn is_zero_elem(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let deg = self.field.degree();
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.from_poly(prod)
    }

    fn neg_ref(&self) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Field for CycloElement {
    /// Inverse through the extended Euclidean algorithm in Q[x] against Φ_n.
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(GtError::CycloDivisionByZero);
        }
        let modulus: Vec<Rational> = self
            .field
            .modulus
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // invariant: s * self ≡ r (mod Φ_n)
        let (mut r0, mut r1) = (modulus, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = qpoly_div_rem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant because Φ_n is irreducible
        let c = r1[0].recip();
        let s: Vec<Rational> = s1.into_iter().map(|x| x * &c).collect();
        Ok(self.field.from_poly(s))
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn qpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let z = Rational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn qpoly_div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = &rem[k] * &lead_inv;
        for (j, bc) in b.iter().enumerate() {
            rem[k - db + j] -= &q * bc;
        }
        quot[k - db] = q;
    }
    (trim(quot), trim(rem))
}
