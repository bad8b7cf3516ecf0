//! Closed-form graded Betti numbers of the ideal of the GT-surface, and their
//! consistency with the Hilbert series.
//!
//! With `C` the codimension and `h = 2d - C - 2`:
//!
//! * `b[i][1] = i·binom(C, i+1) + (C-i-h)·binom(C, i-1)` for `1 <= i <= C-h-1`,
//! * `b[i][1] = i·binom(C, i+1)` for `C-h <= i <= C`,
//! * `b[i][2] = (i-C+h+1)·binom(C, i)` for `C-h <= i <= C`,
//!
//! and zero otherwise. The upper index of the second case is `C`; that
//! reading reproduces the resolutions for d = 3, 4, 5.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{GtError, Result};
use crate::exactmath::IntPolynomial;
use crate::hilbert::{hilbert_series, mu, surface_invariants};
use crate::syzygy::kernel_quadrics;

/// `binom(n, k)`, zero for `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub d: u32,
    pub codim: u32,
    pub h: u32,
    /// `entries[i - 1] = [b[i][1], b[i][2]]` for `i` in `1..=C`; the module
    /// `b[i][l]` sits in degree `i + l`.
    pub entries: Vec<[u128; 2]>,
}

impl BettiTable {
    /// `b[i][l]` for `l` in `{1, 2}`; zero outside the table.
    pub fn get(&self, i: u32, l: u32) -> u128 {
        if i == 0 || i > self.codim || !(1..=2).contains(&l) {
            return 0;
        }
        self.entries[(i - 1) as usize][(l - 1) as usize]
    }

    /// Total rank of the i-th free module.
    pub fn rank(&self, i: u32) -> u128 {
        self.get(i, 1) + self.get(i, 2)
    }

    /// `1 + Σ (-1)^i (b[i][1] z^{i+1} + b[i][2] z^{i+2})`.
    pub fn k_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::from(0); self.codim as usize + 3];
        coeffs[0] = BigInt::from(1);
        for i in 1..=self.codim {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for l in 1..=2 {
                coeffs[(i + l) as usize] += BigInt::from(self.get(i, l)) * sign;
            }
        }
        IntPolynomial::new(coeffs)
    }

    /// Largest `l` with a nonzero entry; the regularity of the ideal is one
    /// more.
    pub fn max_twist_class(&self) -> u32 {
        (1..=self.codim)
            .flat_map(|i| (1..=2).map(move |l| (i, l)))
            .filter(|&(i, l)| self.get(i, l) != 0)
            .map(|(_, l)| l)
            .max()
            .unwrap_or(0)
    }

    /// The resolution `0 -> ... -> S^{b}(-j) -> ... -> S` as LaTeX.
    pub fn resolution_latex(&self) -> String {
        let module = |rank: u128, twist: u32| {
            if rank == 1 {
                format!("S(-{twist})")
            } else {
                format!("S^{{{rank}}}(-{twist})")
            }
        };
        let mut parts = vec!["0".to_string()];
        for i in (1..=self.codim).rev() {
            let summands: Vec<String> = (1..=2)
                .rev()
                .filter(|&l| self.get(i, l) != 0)
                .map(|l| module(self.get(i, l), i + l))
                .collect();
            if !summands.is_empty() {
                parts.push(summands.join(" \\oplus "));
            }
        }
        parts.push("S".into());
        parts.join(" \\to ")
    }

    /// Macaulay2-style grid: columns are homological degrees, rows are the
    /// twist classes 0, 1, 2.
    pub fn grid_latex(&self) -> String {
        let n = self.codim as usize + 1;
        let mut s = format!("\\begin{{array}}{{r|{}}}\n", "r".repeat(n));
        let cols: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        s.push_str(&format!(" & {}\\\\\n\\hline\n", cols.join(" & ")));
        let totals: Vec<String> = std::iter::once("1".to_string())
            .chain((1..=self.codim).map(|i| self.rank(i).to_string()))
            .collect();
        s.push_str(&format!("\\text{{total}} & {}\\\\\n", totals.join(" & ")));
        for l in 0..=2u32 {
            let row: Vec<String> = (0..=self.codim)
                .map(|i| {
                    let v = if i == 0 {
                        u128::from(l == 0)
                    } else if l == 0 {
                        0
                    } else {
                        self.get(i, l)
                    };
                    if v == 0 {
                        ".".to_string()
                    } else {
                        v.to_string()
                    }
                })
                .collect();
            s.push_str(&format!("{l} & {}\\\\\n", row.join(" & ")));
        }
        s.push_str("\\end{array}");
        s
    }
}

pub fn betti_table(d: u32) -> Result<BettiTable> {
    let s = surface_invariants(d)?;
    let (c, h) = (s.codim, s.h);
    let narrow = |v: BigInt| {
        v.to_u128()
            .ok_or_else(|| GtError::InvalidParams(format!("Betti numbers for d = {d} exceed 128 bits")))
    };
    let entries = (1..=c)
        .map(|i| {
            let [b1, b2] = if i + h < c {
                [
                    i * binomial(c, i + 1) + (c - i - h) * binomial(c, i - 1),
                    BigInt::zero(),
                ]
            } else {
                [i * binomial(c, i + 1), (i + h + 1 - c) * binomial(c, i)]
            };
            Ok([narrow(b1)?, narrow(b2)?])
        })
        .collect::<Result<_>>()?;
    Ok(BettiTable {
        d,
        codim: c,
        h,
        entries,
    })
}

/// `B(z) = hs_numerator(z) · (1 - z)^{μ - 3}` as an exact polynomial identity.
pub fn kpolynomial_check(d: u32) -> Result<bool> {
    let table = betti_table(d)?;
    let rhs = &hilbert_series(d)?.hs_numerator * &IntPolynomial::one_minus_x_pow(mu(d) - 3);
    Ok(table.k_polynomial() == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl NamedCheck {
    pub fn new(name: &str, passed: bool, detail: String) -> Self {
        Self {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub table: BettiTable,
    pub resolution: String,
    pub checks: Vec<NamedCheck>,
    /// `C + 3 <= 2d <= 2C`, reported only.
    pub yanagawa_hypothesis: bool,
}

impl BettiReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn betti_structural_checks(d: u32) -> Result<BettiReport> {
    let table = betti_table(d)?;
    let s = surface_invariants(d)?;
    let c = s.codim;
    let quadrics = kernel_quadrics(d)?.len() as u128;
    let mut checks = Vec::new();
    checks.push(NamedCheck::new(
        "quadric_count",
        table.get(1, 1) == quadrics,
        format!("b[1][1] = {}, quadrics = {quadrics}", table.get(1, 1)),
    ));
    checks.push(NamedCheck::new(
        "generated_by_quadrics",
        table.get(1, 2) == 0,
        format!("b[1][2] = {}", table.get(1, 2)),
    ));
    checks.push(NamedCheck::new(
        "last_module_is_cm_type",
        table.rank(c) == s.cm_type as u128,
        format!("rank F_C = {}, cm_type = {}", table.rank(c), s.cm_type),
    ));
    let reg = table.max_twist_class() + 1;
    checks.push(NamedCheck::new(
        "regularity",
        reg == s.regularity,
        format!("regularity {reg}"),
    ));
    let shape = (1..=c).all(|i| {
        let b2 = table.get(i, 2);
        if i + s.h < c {
            b2 == 0
        } else {
            b2 > 0
        }
    });
    checks.push(NamedCheck::new(
        "second_strand_shape",
        shape,
        format!("b[i][2] > 0 exactly for i >= {}", c - s.h),
    ));
    checks.push(NamedCheck::new(
        "k_polynomial",
        kpolynomial_check(d)?,
        format!("B(z) = HS numerator · (1 - z)^{}", mu(d) - 3),
    ));
    Ok(BettiReport {
        resolution: table.resolution_latex(),
        table,
        checks,
        yanagawa_hypothesis: c + 3 <= 2 * d && 2 * d <= 2 * c,
    })
}
