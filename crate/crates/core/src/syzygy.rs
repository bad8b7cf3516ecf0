//! The index set `W_d`, the maps `φ_d` (to x-invariants) and `ψ_d` (to
//! y-monomials), the quadratic generators of `ker ψ_d` and their images
//! under the change of variables `z_(2,0) = w_(2,0) + 2 w_(d,d)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::Result;
use crate::exactmath::fraction_free_rank;
use crate::group::check_d;
use crate::invariants::{y_to_x, YMonomial};
use crate::monomial::{ExponentVector, Polynomial};

/// Index `(r, γ)` of a variable `w_(r,γ)` (or `z_(r,γ)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "[u32; 2]")]
pub struct WIndex {
    pub r: u32,
    pub gamma: u32,
}

impl From<WIndex> for [u32; 2] {
    fn from(w: WIndex) -> Self {
        [w.r, w.gamma]
    }
}

impl WIndex {
    pub const fn new(r: u32, gamma: u32) -> Self {
        Self { r, gamma }
    }

    /// The variable that is replaced by `w_(2,0) + 2 w_(d,d)`.
    pub const SPECIAL: Self = Self::new(2, 0);

    pub fn is_valid(&self, d: u32) -> bool {
        self.r <= 2 * (d - 1) && gamma_lower_bound(self.r, d) <= self.gamma && self.gamma <= self.r
    }

    /// Exponent of `x0` (equivalently of `y0`): `d(2 - r) + (d - 2)γ`.
    pub fn x0_exponent(&self, d: u32) -> u32 {
        let v = d as i64 * (2 - self.r as i64) + (d as i64 - 2) * self.gamma as i64;
        assert!(v >= 0, "invalid index {self} for d = {d}");
        v as u32
    }
}

impl fmt::Display for WIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.gamma)
    }
}

/// `max(0, ⌈(r - 2)d / (d - 2)⌉)`.
fn gamma_lower_bound(r: u32, d: u32) -> u32 {
    if r <= 2 {
        0
    } else {
        ((r - 2) * d).div_ceil(d - 2)
    }
}

/// All valid indices in lexicographic order on `(r, γ)`.
pub fn w_index_set(d: u32) -> Result<Vec<WIndex>> {
    check_d(d)?;
    Ok((0..=2 * (d - 1))
        .flat_map(|r| (gamma_lower_bound(r, d)..=r).map(move |g| WIndex::new(r, g)))
        .collect())
}

/// `φ_d(w_(r,γ))`: `x0^{2d-2γ}(x1 x2)^γ` if `r = γ`, otherwise
/// `x0^{(2-r)d+(d-2)γ}(x1^{rd-(d-1)γ} x2^γ + x1^γ x2^{rd-(d-1)γ})`.
pub fn phi_d(w: &WIndex, d: u32) -> Polynomial<BigInt> {
    let a0 = w.x0_exponent(d);
    if w.r == w.gamma {
        Polynomial::monomial(ExponentVector::new(a0, w.gamma, w.gamma), BigInt::one())
    } else {
        let big = w.r * d - (d - 1) * w.gamma;
        Polynomial::from_terms([
            (ExponentVector::new(a0, big, w.gamma), BigInt::one()),
            (ExponentVector::new(a0, w.gamma, big), BigInt::one()),
        ])
    }
}

/// `ψ_d(z_(r,γ)) = y0^{d(2-r)+(d-2)γ} y1^γ y2^{r-γ}`.
pub fn psi_d(z: &WIndex, d: u32) -> YMonomial {
    let y = YMonomial([z.x0_exponent(d), z.gamma, z.r - z.gamma]);
    debug_assert_eq!(y.weighted_degree(d), 2 * d);
    y
}

/// Unordered pair of variables, stored with the smaller index first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Pair(pub WIndex, pub WIndex);

impl Pair {
    pub fn new(a: WIndex, b: WIndex) -> Self {
        if a <= b {
            Self(a, b)
        } else {
            Self(b, a)
        }
    }

    pub fn contains(&self, w: &WIndex) -> bool {
        self.0 == *w || self.1 == *w
    }

    /// The collision key `(r1 + r2, γ1 + γ2)`; two pairs have the same ψ_d
    /// image iff their keys agree.
    pub fn key(&self) -> (u32, u32) {
        (self.0.r + self.1.r, self.0.gamma + self.1.gamma)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, name: char, latex: bool) -> fmt::Result {
        let var = |w: &WIndex| {
            if latex {
                format!("{name}_{{({},{})}}", w.r, w.gamma)
            } else {
                format!("{name}{w}")
            }
        };
        if self.0 == self.1 {
            if latex {
                write!(f, "{}^{{2}}", var(&self.0))
            } else {
                write!(f, "{}^2", var(&self.0))
            }
        } else {
            write!(f, "{}{}", var(&self.0), var(&self.1))
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, 'w', false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    /// Variables of the polynomial ring mapped by ψ_d.
    Z,
    /// Variables mapped by φ_d.
    W,
}

impl Space {
    pub fn var(&self) -> char {
        match self {
            Space::Z => 'z',
            Space::W => 'w',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    Binomial,
    Trinomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Term {
    pub coeff: i64,
    pub pair: Pair,
}

/// A quadratic relation `Σ coeff · (product of a pair of variables)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadricRelation {
    pub space: Space,
    pub kind: RelationKind,
    pub terms: Vec<Term>,
}

impl QuadricRelation {
    fn binomial(space: Space, a: Pair, b: Pair) -> Self {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Self {
            space,
            kind: RelationKind::Binomial,
            terms: vec![Term { coeff: 1, pair: a }, Term { coeff: -1, pair: b }],
        }
    }

    /// `w_p w_q - (w_(2,0) + 2 w_(d,d)) w_b`.
    fn trinomial(p: Pair, b: WIndex, d: u32) -> Self {
        let dd = WIndex::new(d, d);
        Self {
            space: Space::W,
            kind: RelationKind::Trinomial,
            terms: vec![
                Term { coeff: 1, pair: p },
                Term {
                    coeff: -1,
                    pair: Pair::new(WIndex::SPECIAL, b),
                },
                Term {
                    coeff: -2,
                    pair: Pair::new(b, dd),
                },
            ],
        }
    }

    /// Coefficients keyed by pair, with repeated pairs merged.
    pub fn coefficients(&self) -> BTreeMap<Pair, i64> {
        let mut out = BTreeMap::new();
        for t in &self.terms {
            *out.entry(t.pair).or_insert(0) += t.coeff;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Same relation up to an overall sign and the order of terms.
    pub fn equivalent(&self, other: &Self) -> bool {
        let a = self.coefficients();
        let b = other.coefficients();
        a == b || a == b.iter().map(|(k, v)| (*k, -v)).collect::<BTreeMap<_, _>>()
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.abs();
            if i > 0 {
                s.push_str(if t.coeff < 0 { " & - & " } else { " & + & " });
            } else if t.coeff < 0 {
                s.push('-');
            }
            if mag != 1 {
                s.push_str(&mag.to_string());
            }
            s.push_str(&PairText(t.pair, self.space.var(), true).to_string());
        }
        s
    }
}

struct PairText(Pair, char, bool);

impl fmt::Display for PairText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, self.1, self.2)
    }
}

impl fmt::Display for QuadricRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.abs();
            if i > 0 {
                write!(f, " {} ", if t.coeff < 0 { '-' } else { '+' })?;
            } else if t.coeff < 0 {
                write!(f, "-")?;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{}", PairText(t.pair, self.space.var(), false))?;
        }
        Ok(())
    }
}

/// All unordered pairs of indices grouped by collision key, each class in
/// lexicographic order of its pairs.
pub fn collision_classes(d: u32) -> Result<BTreeMap<(u32, u32), Vec<Pair>>> {
    let idx = w_index_set(d)?;
    let mut classes: BTreeMap<(u32, u32), Vec<Pair>> = BTreeMap::new();
    for (i, a) in idx.iter().enumerate() {
        for b in &idx[i..] {
            let p = Pair::new(*a, *b);
            classes.entry(p.key()).or_default().push(p);
        }
    }
    Ok(classes)
}

/// The centre of the star used inside a collision class: the pair containing
/// `(1,0)` when there is one (at most one pair can), otherwise the
/// lexicographically smallest pair.
fn star_center(class: &[Pair]) -> Pair {
    let w10 = WIndex::new(1, 0);
    class.iter().find(|p| p.contains(&w10)).copied().unwrap_or(class[0])
}

fn sort_relations(rels: &mut [QuadricRelation]) {
    rels.sort_by(|a, b| {
        let ka: Vec<Pair> = a.terms.iter().map(|t| t.pair).collect();
        let kb: Vec<Pair> = b.terms.iter().map(|t| t.pair).collect();
        ka.cmp(&kb)
    });
}

/// Binomial quadrics generating `ker ψ_d` minimally: within each collision
/// class of size `s`, the `s - 1` differences between a centre pair and every
/// other pair. Any star is a spanning tree of the class, so the differences
/// are independent and span the class's part of the kernel.
pub fn kernel_quadrics(d: u32) -> Result<Vec<QuadricRelation>> {
    let mut out = Vec::new();
    for class in collision_classes(d)?.values() {
        let center = star_center(class);
        for p in class.iter().filter(|p| **p != center) {
            out.push(QuadricRelation::binomial(Space::Z, center, *p));
        }
    }
    sort_relations(&mut out);
    Ok(out)
}

/// Every difference of two pairs in the same class (not minimal).
pub fn kernel_quadrics_all_pairs(d: u32) -> Result<Vec<QuadricRelation>> {
    let mut out = Vec::new();
    for class in collision_classes(d)?.values() {
        for (i, a) in class.iter().enumerate() {
            for b in &class[i + 1..] {
                out.push(QuadricRelation::binomial(Space::Z, *a, *b));
            }
        }
    }
    sort_relations(&mut out);
    Ok(out)
}

/// Image of a z-relation under `z_(2,0) -> w_(2,0) + 2 w_(d,d)`.
///
/// A binomial touching `z_(2,0)` has the shape `z_p z_q - z_(2,0) z_b` and
/// becomes the trinomial `w_p w_q - w_(2,0) w_b - 2 w_b w_(d,d)`. The square
/// `z_(2,0)^2` is alone in its class and never occurs.
pub fn substitute(rel: &QuadricRelation, d: u32) -> QuadricRelation {
    assert_eq!(rel.space, Space::Z);
    let special: Vec<&Term> = rel.terms.iter().filter(|t| t.pair.contains(&WIndex::SPECIAL)).collect();
    match special.as_slice() {
        [] => QuadricRelation {
            space: Space::W,
            ..rel.clone()
        },
        [t] => {
            let other = rel.terms.iter().find(|u| u.pair != t.pair).expect("binomial");
            let b = if t.pair.0 == WIndex::SPECIAL {
                t.pair.1
            } else {
                t.pair.0
            };
            assert_ne!(b, WIndex::SPECIAL, "z_(2,0)^2 does not occur in a relation");
            QuadricRelation::trinomial(other.pair, b, d)
        }
        _ => panic!("relation {rel} uses z_(2,0) in both terms"),
    }
}

/// Minimal generators of the ideal of the surface in the w-variables.
pub fn surface_generators(d: u32) -> Result<Vec<QuadricRelation>> {
    let mut out: Vec<QuadricRelation> = kernel_quadrics(d)?.iter().map(|r| substitute(r, d)).collect();
    out.sort_by_key(|r| r.kind == RelationKind::Trinomial);
    let split = out
        .iter()
        .position(|r| r.kind == RelationKind::Trinomial)
        .unwrap_or(out.len());
    sort_relations(&mut out[..split]);
    sort_relations(&mut out[split..]);
    Ok(out)
}

/// The full generating families of the two displayed sets: every binomial
/// `w_1 w_2 - w_3 w_4` with equal keys and no index `(2,0)`, and every
/// `(w_(2,0) + 2 w_(d,d)) w_(γ,γ) - w_2 w_3` with matching key.
pub fn full_generating_set(d: u32) -> Result<Vec<QuadricRelation>> {
    let mut out = Vec::new();
    for class in collision_classes(d)?.values() {
        let plain: Vec<&Pair> = class.iter().filter(|p| !p.contains(&WIndex::SPECIAL)).collect();
        for (i, a) in plain.iter().enumerate() {
            for b in &plain[i + 1..] {
                out.push(QuadricRelation::binomial(Space::W, **a, **b));
            }
        }
        for sp in class.iter().filter(|p| p.contains(&WIndex::SPECIAL)) {
            let b = if sp.0 == WIndex::SPECIAL { sp.1 } else { sp.0 };
            if b.r != b.gamma {
                continue;
            }
            for p in &plain {
                out.push(QuadricRelation::trinomial(**p, b, d));
            }
        }
    }
    Ok(out)
}

/// Substitutes `φ_d` (w-relations) or `ψ_d` (z-relations) and checks that
/// the expansion vanishes identically.
pub fn verify_relation(rel: &QuadricRelation, d: u32) -> bool {
    let all_valid = rel.terms.iter().all(|t| t.pair.0.is_valid(d) && t.pair.1.is_valid(d));
    if !all_valid {
        return false;
    }
    match rel.space {
        Space::W => {
            let mut sum: Polynomial<BigInt> = Polynomial::zero();
            for t in &rel.terms {
                let prod = phi_d(&t.pair.0, d).mul(&phi_d(&t.pair.1, d));
                sum = sum.add(&prod.scale(&BigInt::from(t.coeff)));
            }
            sum.is_zero()
        }
        Space::Z => {
            let mut sum: HashMap<YMonomial, i64> = HashMap::new();
            for t in &rel.terms {
                let y = psi_d(&t.pair.0, d).mul(&psi_d(&t.pair.1, d));
                *sum.entry(y).or_insert(0) += t.coeff;
            }
            sum.values().all(|v| *v == 0)
        }
    }
}

/// `ρ(ψ_d(z))` expanded in the x-variables, for checking the commutative
/// square `φ_d ∘ ρ̃ = ρ ∘ ψ_d`.
pub fn rho_psi(z: &WIndex, d: u32) -> Polynomial<BigInt> {
    y_to_x(&psi_d(z, d), d)
}

/// Rank of the coefficient vectors of `rels` in the space of degree-two
/// monomials in the variables.
pub fn relations_rank(rels: &[QuadricRelation]) -> usize {
    let mut index: HashMap<Pair, usize> = HashMap::new();
    let rows: Vec<Vec<(usize, BigInt)>> = rels
        .iter()
        .map(|r| {
            let mut row: Vec<(usize, BigInt)> = r
                .coefficients()
                .into_iter()
                .map(|(p, c)| {
                    let n = index.len();
                    (*index.entry(p).or_insert(n), BigInt::from(c))
                })
                .collect();
            row.sort_by_key(|(j, _)| *j);
            row
        })
        .collect();
    fraction_free_rank(rows)
}

/// Dimension of the degree-two part of `ker ψ_d`: the number of pairs minus
/// the number of distinct images.
pub fn degree_two_kernel_dim(d: u32) -> Result<usize> {
    let classes = collision_classes(d)?;
    Ok(classes.values().map(Vec::len).sum::<usize>() - classes.len())
}

/// `(9d² + 2d + 8)/8` for even `d`, `(9d² - 4d + 3)/8` for odd `d`.
pub fn expected_quadric_count(d: u32) -> u64 {
    let d = d as u64;
    if d.is_multiple_of(2) {
        (9 * d * d + 2 * d + 8) / 8
    } else {
        (9 * d * d - 4 * d + 3) / 8
    }
}

/// Whether every relation of `extra` lies in the span of `basis`.
pub fn spans(basis: &[QuadricRelation], extra: &[QuadricRelation]) -> bool {
    let base = relations_rank(basis);
    let mut all = basis.to_vec();
    all.extend_from_slice(extra);
    relations_rank(&all) == base
}

/// LaTeX for a list of w-relations: binomials in two aligned columns, then
/// trinomials in a separate block.
pub fn relations_to_latex(rels: &[QuadricRelation]) -> String {
    let bin: Vec<&QuadricRelation> = rels.iter().filter(|r| r.kind == RelationKind::Binomial).collect();
    let tri: Vec<&QuadricRelation> = rels.iter().filter(|r| r.kind == RelationKind::Trinomial).collect();
    let mut s = String::new();
    if !bin.is_empty() {
        let half = bin.len().div_ceil(2);
        s.push_str("$$\\begin{array}{lcllllcl}\n");
        for i in 0..half {
            s.push_str(&bin[i].to_latex());
            if let Some(r) = bin.get(half + i) {
                s.push_str(" & \\quad \\quad \\quad & ");
                s.push_str(&r.to_latex());
            } else {
                s.push_str(" & \\quad \\quad \\quad & ");
            }
            s.push_str("\\\\\n");
        }
        s.push_str("\\end{array}$$\n");
    }
    if !tri.is_empty() {
        s.push_str("$$\\begin{array}{lclcl}\n");
        for r in tri {
            s.push_str(&r.to_latex());
            s.push_str("\\\\\n");
        }
        s.push_str("\\end{array}$$\n");
    }
    s
}
