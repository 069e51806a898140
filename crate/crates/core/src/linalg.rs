//! Dense exact-rational linear algebra.
//!
//! Everything in this crate lives in dimension ≤ a few dozen, so plain
//! Gaussian elimination over the rationals covers all needs: reduced row
//! echelon form, rank, nullspace bases, affine solves, inverses and
//! determinants. Results are canonical (pivot-normalized), which makes
//! downstream outputs deterministic.

use num_traits::{One, Zero};

use crate::scalar::Rat;

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        Mat { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        Mat::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).map(|k| self.at(r, k) * other.at(k, c)).sum()
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix/vector dimension mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|k| self.at(r, k) * &v[k]).sum())
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| -self.at(r, c).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            for c in 0..m.cols {
                m.data.swap(row * m.cols + c, p * m.cols + c);
            }
            let inv = m.at(row, col).recip();
            for c in 0..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.at(r, c) - &factor * m.at(row, c);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical nullspace basis: one vector per free column, with that free
    /// coordinate set to 1.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !pivot_set[c]) {
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One particular solution of `self * x = rhs` with free variables set to
    /// zero, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, rhs.len());
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols { self.at(r, c).clone() } else { rhs[r].clone() }
        });
        aug = aug.rref().0;
        let mut x = vec![Rat::zero(); self.cols];
        for r in 0..self.rows {
            let Some(lead) = (0..=self.cols).find(|&c| !aug.at(r, c).is_zero()) else {
                continue;
            };
            if lead == self.cols {
                return None;
            }
            x[lead] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |r, c| red.at(r, n + c).clone()))
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                for c in 0..n {
                    m.data.swap(col * n + c, p * n + c);
                }
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det *= &pivot;
            let inv = pivot.recip();
            for r in col + 1..n {
                if !m.at(r, col).is_zero() {
                    let factor = m.at(r, col) * &inv;
                    for c in col..n {
                        let v = m.at(r, c) - &factor * m.at(col, c);
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }
}

/// Incrementally maintained reduced basis of a subspace, used for image and
/// kernel computations. Rows are kept fully reduced with unit pivots, so the
/// basis of a given span is canonical.
#[derive(Clone, Debug)]
pub struct RowBasis {
    dim: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn new(dim: usize) -> Self {
        RowBasis { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(dim: usize, vs: impl IntoIterator<Item = Vec<Rat>>) -> Self {
        let mut b = RowBasis::new(dim);
        for v in vs {
            b.insert(v);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Reduce `v` against the basis; the remainder is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        assert_eq!(v.len(), self.dim);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for c in 0..self.dim {
                    let x = &v[c] - &factor * &row[c];
                    v[c] = x;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = (0..self.dim).find(|&c| !v[c].is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for c in 0..self.dim {
            let x = &v[c] * &inv;
            v[c] = x;
        }
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            debug_assert_ne!(rp, p);
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for c in 0..self.dim {
                    let x = &row[c] - &factor * &v[c];
                    row[c] = x;
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    pub fn same_span(&self, other: &RowBasis) -> bool {
        self.rank() == other.rank() && self.rows.iter().all(|r| other.contains(r))
    }
}
