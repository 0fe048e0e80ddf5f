//! Dense and sparse exact linear algebra over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entries",
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row length",
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&x| crate::rational::int(x)).collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Result of exact Gauss-Jordan elimination.
#[derive(Debug, Clone, PartialEq)]
pub struct Rref {
    pub rank: usize,
    pub rref: Matrix,
    pub pivot_columns: Vec<usize>,
}

/// Reduced row echelon form over the rationals.
///
/// Columns are scanned left to right; the pivot for a column is the topmost
/// remaining row with a nonzero entry there. No magnitude-based pivoting, so
/// the output is a deterministic function of the input.
pub fn rref_rank(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_columns = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a[(r, c)].recip();
        let support: Vec<usize> = (c..cols).filter(|&j| !a[(r, j)].is_zero()).collect();
        for &j in &support {
            a[(r, j)] *= &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for &j in &support {
                let delta = &factor * &a[(r, j)];
                a[(i, j)] -= delta;
            }
        }
        pivot_columns.push(c);
        r += 1;
    }
    Rref {
        rank: r,
        rref: a,
        pivot_columns,
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref_rank(m).rank
}

/// Basis of `{x : m x = 0}`, one vector per free column, in increasing free-column order.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let Rref {
        rref,
        pivot_columns,
        ..
    } = rref_rank(m);
    let cols = m.cols();
    let mut is_pivot = vec![None; cols];
    for (row, &c) in pivot_columns.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    (0..cols)
        .filter(|&f| is_pivot[f].is_none())
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &c) in pivot_columns.iter().enumerate() {
                v[c] = -rref[(row, free)].clone();
            }
            v
        })
        .collect()
}

/// Nonzero rows of the RREF of the stacked vectors: a canonical basis of their span.
pub fn row_space_basis(vectors: &[Vec<Rational>], width: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let m = if vectors.is_empty() {
        Matrix::zeros(0, width)
    } else {
        Matrix::from_rows(vectors.to_vec()).expect("vectors of equal length")
    };
    let r = rref_rank(&m);
    let basis = (0..r.rank).map(|i| r.rref.row(i).to_vec()).collect();
    (basis, r.pivot_columns)
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    assert!(m.is_square());
    let n = m.rows();
    let augmented = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let r = rref_rank(&augmented);
    if r.pivot_columns.iter().take(n).copied().ne(0..n) || r.pivot_columns.len() < n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| r.rref[(i, j + n)].clone()))
}

/// Sparse matrix stored as sorted `(column, value)` rows with no explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    /// Builds from per-row accumulators, dropping cancelled entries.
    pub fn from_row_maps(rows: usize, cols: usize, maps: Vec<BTreeMap<usize, Rational>>) -> Self {
        assert_eq!(maps.len(), rows);
        let entries = maps
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let entries = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row {
                m[(i, *j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.entries[i]
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "sparse product shape");
        let maps = self
            .entries
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.entries[*k] {
                        *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc
            })
            .collect();
        SparseMatrix::from_row_maps(self.rows, other.cols, maps)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut entries = vec![Vec::new(); self.cols];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row {
                entries[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        self.entries
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for (j, a) in row {
                    if !v[*j].is_zero() {
                        acc += a * &v[*j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact rank by incremental sparse elimination.
    ///
    /// Rows are inserted one at a time and fully reduced against the pivots
    /// collected so far; a row that survives contributes its leading column
    /// as a new pivot.
    pub fn rank(&self) -> usize {
        let mut pivots: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for row in &self.entries {
            let mut work: BTreeMap<usize, Rational> = row.iter().cloned().collect();
            loop {
                let Some(lead) = work
                    .iter()
                    .find(|(c, _)| pivots.contains_key(c))
                    .map(|(c, v)| (*c, v.clone()))
                else {
                    break;
                };
                let (col, factor) = lead;
                for (j, pv) in &pivots[&col] {
                    let e = work.entry(*j).or_insert_with(Rational::zero);
                    *e -= &factor * pv;
                    if e.is_zero() {
                        work.remove(j);
                    }
                }
            }
            if let Some((&lead, lead_val)) = work.iter().next() {
                let inv = lead_val.recip();
                let normalized: Vec<(usize, Rational)> =
                    work.into_iter().map(|(j, v)| (j, v * &inv)).collect();
                pivots.insert(lead, normalized);
            }
        }
        pivots.len()
    }
}
