//! Evolution algebras given by a structure matrix relative to a fixed natural basis.
//!
//! Column `i` of the structure matrix holds the coordinates of `e_i^2`, i.e.
//! entry `(k, i)` is the coefficient of `e_k` in `e_i^2`. Everything else in
//! the crate reads the matrix through this convention.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::index_set::IndexSet;
use crate::linalg::{add_vectors, is_zero_vector, scale_vector, unit_vector, Matrix};

/// Coordinates of an element relative to the distinguished natural basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn zero(field: FieldDescriptor, n: usize) -> Self {
        Element(vec![field.zero(); n])
    }

    pub fn basis(field: FieldDescriptor, n: usize, i: usize) -> Self {
        Element(unit_vector(field, n, i))
    }

    pub fn from_i64(field: FieldDescriptor, coords: &[i64]) -> Self {
        Element(coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.0)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element(add_vectors(&self.0, &other.0))
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element(scale_vector(s, &self.0))
    }

    /// Indices with a nonzero coordinate.
    pub fn support(&self) -> IndexSet {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
    }
}

impl AsRef<[Scalar]> for Element {
    fn as_ref(&self) -> &[Scalar] {
        &self.0
    }
}

impl fmt::Display for Element {
    /// Linear-combination notation, e.g. `e2 + -2*e4`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "e{}", i + 1)?;
            } else {
                write!(f, "{}*e{}", c, i + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvolutionAlgebra {
    structure: Matrix,
}

impl EvolutionAlgebra {
    /// Algebra whose structure matrix is `structure` (column `i` = `e_i^2`).
    pub fn new(structure: Matrix) -> Result<Self> {
        if !structure.is_square() {
            return Err(Error::NotSquare { rows: structure.rows(), cols: structure.cols() });
        }
        Ok(EvolutionAlgebra { structure })
    }

    /// Algebra given by the list of basis squares `e_1^2, .., e_n^2`.
    pub fn from_squares(field: FieldDescriptor, squares: &[Vec<Scalar>]) -> Result<Self> {
        let n = squares.len();
        for sq in squares {
            if sq.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: sq.len() });
            }
        }
        let rows = (0..n).map(|k| squares.iter().map(|sq| sq[k].clone()).collect()).collect();
        EvolutionAlgebra::new(Matrix::from_rows(field, rows)?)
    }

    /// Integer version of [`from_squares`](Self::from_squares).
    pub fn from_i64_squares(field: FieldDescriptor, squares: &[&[i64]]) -> Result<Self> {
        let squares: Vec<Vec<Scalar>> =
            squares.iter().map(|sq| sq.iter().map(|&c| field.from_i64(c)).collect()).collect();
        EvolutionAlgebra::from_squares(field, &squares)
    }

    /// The algebra of a graph: entry `(j, i)` is 1 iff the adjacency records `i -> j`.
    pub fn from_graph(field: FieldDescriptor, adjacency: &[Vec<bool>]) -> Result<Self> {
        let n = adjacency.len();
        for row in adjacency {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
        }
        let m = Matrix::from_fn(field, n, n, |j, i| {
            if adjacency[i][j] { field.one() } else { field.zero() }
        });
        EvolutionAlgebra::new(m)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.structure.field()
    }

    pub fn dim(&self) -> usize {
        self.structure.rows()
    }

    pub fn structure(&self) -> &Matrix {
        &self.structure
    }

    /// Coefficient of `e_k` in `e_i^2`.
    pub fn omega(&self, k: usize, i: usize) -> &Scalar {
        self.structure.get(k, i)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.dim() {
            return Err(Error::IndexOutOfRange { index: i, dim: self.dim() });
        }
        Ok(())
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: len });
        }
        Ok(())
    }

    pub fn basis_element(&self, i: usize) -> Result<Element> {
        self.check_index(i)?;
        Ok(Element::basis(self.field(), self.dim(), i))
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.field(), self.dim())
    }

    pub fn square_of_basis(&self, i: usize) -> Result<Element> {
        self.check_index(i)?;
        Ok(Element(self.structure.column(i)))
    }

    /// True iff `e_i^2 = 0`.
    pub fn square_is_zero(&self, i: usize) -> bool {
        (0..self.dim()).all(|k| self.omega(k, i).is_zero())
    }

    /// `ab = sum_i a_i b_i e_i^2`.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_len(a.len())?;
        self.check_len(b.len())?;
        let n = self.dim();
        let mut out = vec![self.field().zero(); n];
        for i in 0..n {
            let (x, y) = (&a.0[i], &b.0[i]);
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let c = x * y;
            for (k, o) in out.iter_mut().enumerate() {
                let w = self.omega(k, i);
                if !w.is_zero() {
                    *o = &*o + &(&c * w);
                }
            }
        }
        Ok(Element(out))
    }

    /// Indices `i` where `e_i^2 e_i^2` and `(e_i^2 e_i) e_i` differ. An empty
    /// result is necessary for power-associativity, not sufficient.
    pub fn power_associativity_witnesses(&self) -> IndexSet {
        (0..self.dim())
            .filter(|&i| {
                let e = Element::basis(self.field(), self.dim(), i);
                let sq = self.multiply(&e, &e).expect("own dimension");
                let fourth = self.multiply(&sq, &sq).expect("own dimension");
                let left_nested = self.multiply(&sq, &e).expect("own dimension");
                let nested = self.multiply(&left_nested, &e).expect("own dimension");
                fourth != nested
            })
            .collect()
    }

    /// Sub-structure on `indices` (in ascending order). Only an algebra
    /// *of* the ideal when `indices` is closed under descendents.
    pub fn restrict(&self, indices: &IndexSet) -> EvolutionAlgebra {
        let idx = indices.to_vec();
        let m = Matrix::from_fn(self.field(), idx.len(), idx.len(), |r, c| {
            self.omega(idx[r], idx[c]).clone()
        });
        EvolutionAlgebra { structure: m }
    }

    /// Relabel the basis: new index `t` is old index `order[t]`.
    pub fn reindex(&self, order: &[usize]) -> Result<EvolutionAlgebra> {
        let n = self.dim();
        self.check_len(order.len())?;
        let mut seen = vec![false; n];
        for &o in order {
            self.check_index(o)?;
            if std::mem::replace(&mut seen[o], true) {
                return Err(Error::Internal(format!("index {} repeated in reordering", o + 1)));
            }
        }
        let m = Matrix::from_fn(self.field(), n, n, |s, t| self.omega(order[s], order[t]).clone());
        Ok(EvolutionAlgebra { structure: m })
    }
}
