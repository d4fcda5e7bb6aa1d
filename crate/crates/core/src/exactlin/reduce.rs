//! Incremental exact row reduction on sparse rows.
//!
//! [`RowReducer`] keeps its rows in reduced row echelon form at all times: every
//! stored row has a leading 1 in its pivot column and zeros in every other pivot
//! column. Reducing an incoming row therefore needs one pass over its own pivot
//! entries, and fill-in only lands on free columns.

use super::matrix::{zero_vec, Matrix};
use super::scalar::Scalar;
use crate::error::{Error, Result};

pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct RowReducer {
    width: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
    work: Vec<Scalar>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

fn sub_scaled(a: &SparseRow, s: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(s * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(s * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl RowReducer {
    pub fn new(width: usize) -> Self {
        RowReducer {
            width,
            rows: Vec::new(),
            pivot_row: vec![None; width],
            work: zero_vec(width),
            touched: Vec::new(),
            mark: vec![false; width],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn touch(&mut self, c: usize) {
        if !self.mark[c] {
            self.mark[c] = true;
            self.touched.push(c);
        }
    }

    /// Reduces `row` against the stored basis, returning the residual (sparse, sorted).
    fn residual(&mut self, row: &[(usize, Scalar)]) -> SparseRow {
        for (c, v) in row {
            assert!(*c < self.width, "column {c} out of range {}", self.width);
            if v.is_zero() {
                continue;
            }
            self.touch(*c);
            self.work[*c] += v;
        }
        let pivots: Vec<(usize, usize)> = self
            .touched
            .iter()
            .filter_map(|&c| self.pivot_row[c].map(|r| (c, r)))
            .collect();
        for (c, r) in pivots {
            let coef = self.work[c].clone();
            if coef.is_zero() {
                continue;
            }
            for k in 0..self.rows[r].len() {
                let (j, x) = {
                    let e = &self.rows[r][k];
                    (e.0, e.1.clone())
                };
                self.touch(j);
                self.work[j] -= &coef.mul_ref(&x);
            }
        }
        let mut out: SparseRow = Vec::new();
        let touched = std::mem::take(&mut self.touched);
        for c in touched {
            self.mark[c] = false;
            let v = std::mem::replace(&mut self.work[c], Scalar::zero());
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        out.sort_by_key(|e| e.0);
        out
    }

    /// Adds a row; returns its new pivot column, or `None` if it was dependent.
    pub fn insert_sparse(&mut self, row: &[(usize, Scalar)]) -> Option<usize> {
        let mut res = self.residual(row);
        let (p, lead) = match res.first() {
            Some((p, v)) => (*p, v.clone()),
            None => return None,
        };
        if !lead.is_one() {
            let inv = lead.inv();
            for e in res.iter_mut() {
                e.1 = &e.1 * &inv;
            }
        }
        for r in 0..self.rows.len() {
            if let Ok(k) = self.rows[r].binary_search_by_key(&p, |e| e.0) {
                let s = self.rows[r][k].1.clone();
                self.rows[r] = sub_scaled(&self.rows[r], &s, &res);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(res);
        Some(p)
    }

    pub fn insert_dense(&mut self, row: &[Scalar]) -> Option<usize> {
        let sparse: SparseRow =
            row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        self.insert_sparse(&sparse)
    }

    /// True when `row` lies in the span of the stored rows.
    pub fn contains(&mut self, row: &[Scalar]) -> bool {
        let sparse: SparseRow =
            row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        self.residual(&sparse).is_empty()
    }

    /// Residual of a dense vector modulo the row space.
    pub fn reduce_dense(&mut self, row: &[Scalar]) -> Vec<Scalar> {
        let sparse: SparseRow =
            row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        let mut out = zero_vec(self.width);
        for (c, v) in self.residual(&sparse) {
            out[c] = v;
        }
        out
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.width).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// Rows sorted by pivot column, as sparse rows.
    pub fn sorted_rows(&self) -> Vec<&SparseRow> {
        self.pivots().into_iter().map(|c| &self.rows[self.pivot_row[c].unwrap()]).collect()
    }

    /// The canonical RREF basis as a dense `rank x width` matrix.
    pub fn to_matrix(&self) -> Matrix {
        let rows = self.sorted_rows();
        let mut m = Matrix::zeros(rows.len(), self.width);
        for (i, r) in rows.iter().enumerate() {
            for (c, v) in r.iter() {
                m[(i, *c)] = v.clone();
            }
        }
        m
    }
}

/// Reduced row echelon form with zero rows dropped, plus pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut red = RowReducer::new(m.cols());
    for i in 0..m.rows() {
        red.insert_dense(m.row(i));
    }
    (red.to_matrix(), red.pivots())
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Kernel basis (column-null-space vectors) read off the RREF, one per free column.
pub fn kernel_vectors_from_rref(rows: &[&SparseRow], pivots: &[usize], width: usize) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; width];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..width).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(width);
        v[f] = Scalar::one();
        for (row, &p) in rows.iter().zip(pivots) {
            if let Ok(k) = row.binary_search_by_key(&f, |e| e.0) {
                v[p] = -&row[k].1;
            }
        }
        out.push(v);
    }
    out
}

pub fn kernel(m: &Matrix) -> Vec<Vec<Scalar>> {
    let mut red = RowReducer::new(m.cols());
    for i in 0..m.rows() {
        red.insert_dense(m.row(i));
    }
    let pivots = red.pivots();
    kernel_vectors_from_rref(&red.sorted_rows(), &pivots, m.cols())
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("inverse of non-square {:?}", m.shape())));
    }
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(n));
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::Invalid("matrix is singular".into()));
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = r[(i, n + j)].clone();
        }
    }
    Ok(inv)
}

/// A (non-unique) right inverse `X` of a surjective `m`, i.e. `m·X = I`, read off the
/// RREF of `[m | I]`. `None` when `m` does not have full row rank.
pub fn right_inverse(m: &Matrix) -> Option<Matrix> {
    let (rows, cols) = m.shape();
    let aug = m.hstack(&Matrix::identity(rows));
    let (r, pivots) = rref(&aug);
    if pivots.len() < rows || pivots.iter().any(|&p| p >= cols) {
        return None;
    }
    let mut x = Matrix::zeros(cols, rows);
    for (k, &p) in pivots.iter().enumerate() {
        for c in 0..rows {
            x[(p, c)] = r[(k, cols + c)].clone();
        }
    }
    Some(x)
}

/// Solution set of an affine system: one particular solution plus a kernel basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

/// Accumulates sparse linear equations `Σ coef·x_i = rhs` over a fixed unknown count.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    unknowns: usize,
    red: RowReducer,
    inconsistent: bool,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem { unknowns, red: RowReducer::new(unknowns + 1), inconsistent: false }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Terms may repeat an index; they are summed.
    pub fn add_equation(&mut self, terms: &[(usize, Scalar)], rhs: &Scalar) {
        if self.inconsistent {
            return;
        }
        let mut row: SparseRow = terms.iter().filter(|t| !t.1.is_zero()).cloned().collect();
        if !rhs.is_zero() {
            row.push((self.unknowns, rhs.clone()));
        }
        if row.is_empty() {
            return;
        }
        if let Some(p) = self.red.insert_sparse(&row) {
            if p == self.unknowns {
                self.inconsistent = true;
            }
        }
    }

    pub fn add_dense_equation(&mut self, coeffs: &[Scalar], rhs: &Scalar) {
        let terms: SparseRow =
            coeffs.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        self.add_equation(&terms, rhs);
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// The canonical particular solution sets every free unknown to zero.
    pub fn solve(&self) -> Option<AffineSolution> {
        if self.inconsistent {
            return None;
        }
        let n = self.unknowns;
        let pivots = self.red.pivots();
        let rows = self.red.sorted_rows();
        let mut particular = zero_vec(n);
        for (row, &p) in rows.iter().zip(&pivots) {
            if let Some((c, v)) = row.last() {
                if *c == n {
                    particular[p] = v.clone();
                }
            }
        }
        // drop the augmented column before reading the kernel
        let trimmed: Vec<SparseRow> =
            rows.iter().map(|r| r.iter().filter(|e| e.0 < n).cloned().collect()).collect();
        let refs: Vec<&SparseRow> = trimmed.iter().collect();
        let kernel = kernel_vectors_from_rref(&refs, &pivots, n);
        Some(AffineSolution { particular, kernel })
    }
}

/// Solves `a·x = b`; `None` when inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Result<Option<AffineSolution>> {
    if a.rows() != b.len() {
        return Err(Error::Dimension(format!("{} rows but rhs length {}", a.rows(), b.len())));
    }
    let mut sys = LinearSystem::new(a.cols());
    for i in 0..a.rows() {
        sys.add_dense_equation(a.row(i), &b[i]);
    }
    Ok(sys.solve())
}
