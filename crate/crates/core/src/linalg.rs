//! Dense exact linear algebra over a [`FieldDescriptor`].
//!
//! Vectors are plain `[Scalar]` slices. A [`Subspace`] is stored by its
//! reduced row-echelon basis with zero rows dropped, which is unique, so two
//! subspaces are equal exactly when their stored bases are.

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::index_set::IndexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of row reduction: the nonzero rows of the RREF and their pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldDescriptor,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, entries }
    }

    /// Rows must share one length and every entry must belong to `field`.
    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            for s in row {
                check_field(field, &s)?;
                entries.push(s);
            }
        }
        Ok(Matrix { field, rows: nrows, cols, entries })
    }

    /// Integer entries, handy for tests and examples.
    pub fn from_i64_rows(field: FieldDescriptor, rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect(),
        )
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|r| dot(self.field, self.row(r), v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        Ok(Matrix::from_fn(self.field, self.rows, other.cols, |r, c| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                acc = acc + self.get(r, k) * other.get(k, c);
            }
            acc
        }))
    }

    /// Reduced row-echelon form, zero rows dropped.
    pub fn rref(&self) -> Rref {
        let mut rows = self.row_vecs();
        let pivots = reduce_rows(&mut rows, self.cols);
        rows.truncate(pivots.len());
        let reduced = Matrix {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            entries: rows.into_iter().flatten().collect(),
        };
        Rref { rank: pivots.len(), reduced, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Determinant by Gaussian elimination.
    #[allow(clippy::needless_range_loop)]
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det = det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &inv;
                for c in col..n {
                    let sub = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &sub;
                }
            }
        }
        Ok(det)
    }

    /// Basis of `{ v : self * v = 0 }`.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![self.field.zero(); self.cols];
                v[fc] = self.field.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -reduced.get(r, fc);
                }
                v
            })
            .collect()
    }

    /// Inverse, or `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Some(self.clone()));
        }
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| {
                    if c == r { self.field.one() } else { self.field.zero() }
                }));
                row
            })
            .collect();
        let pivots = reduce_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        Ok(Some(Matrix::from_fn(self.field, n, n, |r, c| rows[r][n + c].clone())))
    }
}

fn check_field(field: FieldDescriptor, s: &Scalar) -> Result<()> {
    if field.contains(s) {
        Ok(())
    } else {
        Err(Error::InvalidScalar { value: s.to_string(), field: field.to_string() })
    }
}

/// In-place Gauss-Jordan on the first `width` columns. Returns pivot columns;
/// the first `pivots.len()` rows hold the reduced basis afterwards.
fn reduce_rows(rows: &mut [Vec<Scalar>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        if next == rows.len() {
            break;
        }
        let Some(p) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(p, next);
        let inv = rows[next][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[next].iter_mut() {
                *x = &*x * &inv;
            }
        }
        for r in 0..rows.len() {
            if r == next || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..rows[r].len() {
                let sub = &factor * &rows[next][c];
                rows[r][c] = &rows[r][c] - &sub;
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

pub fn dot(field: FieldDescriptor, a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_vector(s: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| s * x).collect()
}

pub fn unit_vector(field: FieldDescriptor, n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { field.one() } else { field.zero() }).collect()
}

/// A linear subspace of `field^ambient_dim` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldDescriptor,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldDescriptor, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldDescriptor, ambient_dim: usize) -> Self {
        Subspace::coordinate(field, ambient_dim, &IndexSet::full(ambient_dim))
    }

    /// `lin{ e_i : i in indices }`.
    pub fn coordinate(field: FieldDescriptor, ambient_dim: usize, indices: &IndexSet) -> Self {
        let basis = indices.iter().map(|i| unit_vector(field, ambient_dim, i)).collect();
        Subspace { field, ambient_dim, basis, pivots: indices.to_vec() }
    }

    pub fn from_vectors<V: AsRef<[Scalar]>>(
        field: FieldDescriptor,
        ambient_dim: usize,
        vectors: &[V],
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
            for s in v {
                check_field(field, s)?;
            }
            rows.push(v.to_vec());
        }
        let pivots = reduce_rows(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Ok(Subspace { field, ambient_dim, basis: rows, pivots })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.basis.len(),
            cols: self.ambient_dim,
            entries: self.basis.iter().flatten().cloned().collect(),
        }
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: n });
        }
        Ok(())
    }

    /// Remainder of `v` after reduction against the echelon basis; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(v.len())?;
        let mut r = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if r[pc].is_zero() {
                continue;
            }
            let factor = r[pc].clone();
            for (x, b) in r.iter_mut().zip(row) {
                *x = &*x - &(&factor * b);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    pub fn is_subset_of(&self, other: &Subspace) -> Result<bool> {
        other.check_len(self.ambient_dim)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        let vectors: Vec<&Vec<Scalar>> = self.basis.iter().chain(&other.basis).collect();
        Subspace::from_vectors(self.field, self.ambient_dim, &vectors)
    }

    /// Intersection through the kernel of `[U | -W]`: each kernel vector `(a, b)`
    /// gives the common element `sum a_i u_i`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient_dim));
        }
        let r = self.dim();
        let s = other.dim();
        let stacked = Matrix::from_fn(self.field, self.ambient_dim, r + s, |row, col| {
            if col < r {
                self.basis[col][row].clone()
            } else {
                -&other.basis[col - r][row]
            }
        });
        let common: Vec<Vec<Scalar>> = stacked
            .null_space()
            .iter()
            .map(|k| {
                let mut acc = vec![self.field.zero(); self.ambient_dim];
                for (a, u) in k[..r].iter().zip(&self.basis) {
                    if !a.is_zero() {
                        acc = add_vectors(&acc, &scale_vector(a, u));
                    }
                }
                acc
            })
            .collect();
        Subspace::from_vectors(self.field, self.ambient_dim, &common)
    }

    /// When the canonical basis consists of standard basis vectors, the indices they pick.
    pub fn coordinate_indices(&self) -> Option<IndexSet> {
        let all_unit = self
            .basis
            .iter()
            .zip(&self.pivots)
            .all(|(row, &pc)| row.iter().enumerate().all(|(c, x)| (c == pc) == !x.is_zero()));
        all_unit.then(|| self.pivots.iter().copied().collect())
    }
}
