use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Field, Rational, Ring};

/// Dense row-major matrix over an exact ring.
///
/// The matrix keeps a zero element of its coefficient ring so that empty
/// matrices and kernel vectors can still be built for rings whose constants
/// depend on runtime data (cyclotomic fields).
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
    zero: F,
}

/// Reduced row echelon form plus the pivot column of each nonzero row.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Ring> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, zero: F) -> Self {
        Self {
            rows,
            cols,
            entries: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize, zero: F) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r);
        }
        Self {
            rows: nrows,
            cols,
            entries,
            zero,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn zero_element(&self) -> &F {
        &self.zero
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.zero.clone());
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero_elem() && !b.is_zero_elem())
                    .fold(self.zero.clone(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F: Field> Matrix<F> {
    /// Gauss-Jordan elimination. The pivot in each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero_elem()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                if !m.get(r, j).is_zero_elem() {
                    let v = m.get(r, j).mul_ref(&inv);
                    m.set(r, j, v);
                }
            }
            let pivot_row: Vec<(usize, F)> = (c..m.cols)
                .filter(|&j| !m.get(r, j).is_zero_elem())
                .map(|j| (j, m.get(r, j).clone()))
                .collect();
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero_elem() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for (j, pv) in &pivot_row {
                    let v = m.get(i, *j).sub_ref(&factor.mul_ref(pv));
                    m.set(i, *j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Rank and a basis of the right kernel `{v : M v = 0}`.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<F>>) {
        let Echelon { matrix: e, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let one = self.zero.one_like();
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![self.zero.clone(); self.cols];
            v[free] = one.clone();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = e.get(i, free).neg_ref();
            }
            kernel.push(v);
        }
        (pivots.len(), kernel)
    }

    /// Some solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1, self.zero.clone());
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let Echelon { matrix: e, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.zero.clone(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = e.get(i, self.cols).clone();
        }
        Some(x)
    }
}

impl Matrix<Rational> {
    /// Rank through fraction-free elimination on integer rows (each row is
    /// first cleared of denominators). Agrees with [`Matrix::rank`] but keeps
    /// sparse rows sparse, which matters for banded matrices.
    pub fn fraction_free_rank(&self) -> usize {
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .filter(|q| !q.is_zero())
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter()
                    .enumerate()
                    .filter(|(_, q)| !q.is_zero())
                    .map(|(j, q)| (j, q.numer() * (&lcm / q.denom())))
                    .collect()
            })
            .collect();
        fraction_free_rank(rows)
    }
}

type SparseRow = Vec<(usize, BigInt)>;

/// Rank of an integer matrix given as sparse rows (column-sorted
/// `(column, value)` pairs, zeros omitted).
///
/// Rows are eliminated pairwise, `row <- (p/g) row - (a/g) pivot_row`, and
/// then divided by their content, so no division ever leaves the integers.
pub fn fraction_free_rank(rows: Vec<SparseRow>) -> usize {
    let mut active: Vec<SparseRow> = rows
        .into_iter()
        .map(|mut r| {
            r.retain(|(_, v)| !v.is_zero());
            r.sort_by_key(|(j, _)| *j);
            r
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut rank = 0;
    while !active.is_empty() {
        let col = active.iter().map(|r| r[0].0).min().expect("nonempty");
        let pivot_idx = active.iter().position(|r| r[0].0 == col).expect("exists");
        let pivot = active.remove(pivot_idx);
        rank += 1;
        let mut next = Vec::with_capacity(active.len());
        for row in active.drain(..) {
            if row[0].0 != col {
                next.push(row);
                continue;
            }
            let reduced = eliminate(&row, &pivot);
            if !reduced.is_empty() {
                next.push(reduced);
            }
        }
        active = next;
    }
    rank
}

fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let p = &pivot[0].1;
    let a = &row[0].1;
    let g = p.gcd(a);
    let (rs, ps) = (p / &g, a / &g);
    let mut out: SparseRow = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut k) = (1, 1);
    while i < row.len() || k < pivot.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let ck = pivot.get(k).map(|e| e.0).unwrap_or(usize::MAX);
        let (col, v) = if ci < ck {
            i += 1;
            (ci, &row[i - 1].1 * &rs)
        } else if ck < ci {
            k += 1;
            (ck, -(&pivot[k - 1].1 * &ps))
        } else {
            i += 1;
            k += 1;
            (ci, &row[i - 1].1 * &rs - &pivot[k - 1].1 * &ps)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    let content = out.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !content.is_zero() && !content.abs().is_one() {
        for (_, v) in out.iter_mut() {
            *v /= &content;
        }
    }
    out
}
