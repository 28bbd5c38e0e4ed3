//! Ideals of an evolution algebra: annihilator, absorption, the absorption
//! radical, principal ideals, and quotients.
//!
//! The workhorse identity is `x e_i = x_i e_i^2`, so multiplying anything by a
//! basis element only ever produces multiples of a basis square.

use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::graph::AssociatedGraph;
use crate::index_set::IndexSet;
use crate::linalg::{unit_vector, Matrix, Subspace};

/// A subspace known to satisfy `I A ⊆ I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal(Subspace);

impl Ideal {
    /// Validates the ideal property.
    pub fn new(a: &EvolutionAlgebra, carrier: Subspace) -> Result<Ideal> {
        if is_ideal(a, &carrier)? {
            Ok(Ideal(carrier))
        } else {
            Err(Error::NotAnIdeal)
        }
    }

    pub fn carrier(&self) -> &Subspace {
        &self.0
    }

    pub fn into_carrier(self) -> Subspace {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Indices `B_1` such that `{e_i : i in B_1}` is a basis of the ideal, if
    /// such a subset of the natural basis exists. A `Some` certifies an
    /// evolution ideal with the extension property; `None` decides nothing.
    pub fn basis_indices(&self) -> Option<IndexSet> {
        self.0.coordinate_indices()
    }
}

fn squares_subspace(a: &EvolutionAlgebra, indices: impl IntoIterator<Item = usize>) -> Subspace {
    let vectors: Vec<Vec<_>> = indices.into_iter().map(|j| a.structure().column(j)).collect();
    Subspace::from_vectors(a.field(), a.dim(), &vectors).expect("columns have algebra dimension")
}

fn check_ambient(a: &EvolutionAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: s.ambient_dim() });
    }
    Ok(())
}

/// `ann(A) = lin{ e_i : e_i^2 = 0 }`.
pub fn annihilator(a: &EvolutionAlgebra) -> Ideal {
    let sinks: IndexSet = (0..a.dim()).filter(|&i| a.square_is_zero(i)).collect();
    Ideal(Subspace::coordinate(a.field(), a.dim(), &sinks))
}

/// No basis element squares to zero; equivalently `ann(A) = 0`.
pub fn is_nondegenerate(a: &EvolutionAlgebra) -> bool {
    (0..a.dim()).all(|i| !a.square_is_zero(i))
}

/// `S A ⊆ S`. Since `v e_i = v_i e_i^2`, it suffices that `e_i^2 ∈ S` for every
/// index `i` in the support of `S`.
pub fn is_ideal(a: &EvolutionAlgebra, s: &Subspace) -> Result<bool> {
    check_ambient(a, s)?;
    let support: IndexSet = s
        .basis()
        .iter()
        .flat_map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i))
        .collect();
    for i in &support {
        if !s.contains(&a.structure().column(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{ x : x A ⊆ I } = lin{ e_i : e_i^2 ∈ I }`.
pub fn absorption_preimage(a: &EvolutionAlgebra, ideal: &Ideal) -> Result<Subspace> {
    check_ambient(a, ideal.carrier())?;
    let mut indices = IndexSet::new();
    for i in 0..a.dim() {
        if ideal.carrier().contains(&a.structure().column(i))? {
            indices.insert(i);
        }
    }
    Ok(Subspace::coordinate(a.field(), a.dim(), &indices))
}

/// `x A ⊆ I` forces `x ∈ I`.
pub fn has_absorption_property(a: &EvolutionAlgebra, ideal: &Ideal) -> Result<bool> {
    absorption_preimage(a, ideal)?.is_subset_of(ideal.carrier())
}

/// Indices of the absorption radical: the least fixpoint of
/// `S -> { i : D^1(i) ⊆ S }`, i.e. the indices none of whose paths reach a cycle.
pub fn radical_indices(a: &EvolutionAlgebra) -> IndexSet {
    let g = AssociatedGraph::from_algebra(a);
    let n = a.dim();
    let mut inside = vec![false; n];
    loop {
        let next: Vec<usize> = (0..n)
            .filter(|&i| !inside[i] && g.out_edges(i).iter().all(|&j| inside[j]))
            .collect();
        if next.is_empty() {
            break;
        }
        for i in next {
            inside[i] = true;
        }
    }
    (0..n).filter(|&i| inside[i]).collect()
}

/// The smallest ideal with the absorption property.
pub fn radical(a: &EvolutionAlgebra) -> Ideal {
    Ideal(Subspace::coordinate(a.field(), a.dim(), &radical_indices(a)))
}

/// `⟨e_k^2⟩ = lin{ e_j^2 : j ∈ D(k) ∪ {k} }`.
pub fn ideal_generated_by_square(a: &EvolutionAlgebra, k: usize) -> Result<Ideal> {
    a.check_index(k)?;
    let g = AssociatedGraph::from_algebra(a);
    let mut idx = g.descendents(k)?;
    idx.insert(k);
    Ok(Ideal(squares_subspace(a, &idx)))
}

/// `Λ^x = { i : e_i x ≠ 0 } = { i : x_i ≠ 0 and e_i^2 ≠ 0 }`.
pub fn lambda_x(a: &EvolutionAlgebra, x: &Element) -> Result<IndexSet> {
    a.check_len(x.len())?;
    Ok(x.support().iter().filter(|&i| !a.square_is_zero(i)).collect())
}

/// `μ_A^n(x)`, the span of all `a_1(a_2(..(a_n x)))`, from the descendent sets.
pub fn mu_n(a: &EvolutionAlgebra, x: &Element, n: usize) -> Result<Subspace> {
    let lam = lambda_x(a, x)?;
    if n == 0 {
        return Subspace::from_vectors(a.field(), a.dim(), &[x.coords()]);
    }
    if n == 1 {
        return Ok(squares_subspace(a, &lam));
    }
    let g = AssociatedGraph::from_algebra(a);
    let mut idx = IndexSet::new();
    for i in &lam {
        idx.extend(&g.descendents_m(i, n - 1)?);
    }
    Ok(squares_subspace(a, &idx))
}

/// `⟨x⟩ = K x + lin{ e_j^2 : j ∈ Λ^x ∪ D(Λ^x) }`.
pub fn ideal_generated_by(a: &EvolutionAlgebra, x: &Element) -> Result<Ideal> {
    let lam = lambda_x(a, x)?;
    let g = AssociatedGraph::from_algebra(a);
    let mut idx = lam.clone();
    for i in &lam {
        idx.extend(&g.descendents(i)?);
    }
    let line = Subspace::from_vectors(a.field(), a.dim(), &[x.coords()])?;
    Ok(Ideal(line.sum(&squares_subspace(a, &idx))?))
}

/// `⟨x⟩` by brute closure: multiply the current span by every basis element
/// until nothing new appears. Independent of the graph machinery.
pub fn ideal_closure(a: &EvolutionAlgebra, x: &Element) -> Result<Ideal> {
    a.check_len(x.len())?;
    let mut current = Subspace::from_vectors(a.field(), a.dim(), &[x.coords()])?;
    loop {
        let mut products: Vec<Vec<_>> = current.basis().to_vec();
        for v in current.basis() {
            let v = Element::new(v.clone());
            for i in 0..a.dim() {
                products.push(a.multiply(&v, &a.basis_element(i)?)?.into_coords());
            }
        }
        let next = Subspace::from_vectors(a.field(), a.dim(), &products)?;
        if next.dim() == current.dim() {
            return Ok(Ideal(current));
        }
        current = next;
    }
}

/// `A / I` with a natural basis drawn from the images of the `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    /// Indices whose images form the chosen natural basis of the quotient.
    pub chosen: IndexSet,
    pub quotient: EvolutionAlgebra,
    /// `|chosen| x n` matrix taking coordinates in `A` to coordinates in `A / I`.
    pub projection: Matrix,
}

impl QuotientPresentation {
    pub fn project(&self, x: &Element) -> Result<Element> {
        Ok(Element::new(self.projection.mul_vec(x.coords())?))
    }
}

/// Quotient by an ideal. The basis images are picked greedily by ascending
/// index among those independent modulo `I`; distinct images multiply to
/// zero automatically, so the pick is a natural basis.
pub fn quotient(a: &EvolutionAlgebra, ideal: &Ideal) -> Result<QuotientPresentation> {
    let field = a.field();
    let n = a.dim();
    let carrier = ideal.carrier();
    check_ambient(a, carrier)?;
    if !is_ideal(a, carrier)? {
        return Err(Error::NotAnIdeal);
    }

    let mut span = carrier.clone();
    let mut chosen = IndexSet::new();
    for i in 0..n {
        let e = unit_vector(field, n, i);
        if !span.contains(&e)? {
            span = span.sum(&Subspace::from_vectors(field, n, &[e])?)?;
            chosen.insert(i);
        }
    }

    // Columns: basis of I followed by the chosen e_i; invert to read off coordinates.
    let d = carrier.dim();
    let picks = chosen.to_vec();
    let change = Matrix::from_fn(field, n, n, |r, c| {
        if c < d {
            carrier.basis()[c][r].clone()
        } else if r == picks[c - d] {
            field.one()
        } else {
            field.zero()
        }
    });
    let inv = change
        .inverse()?
        .ok_or_else(|| Error::Internal("quotient basis completion is singular".into()))?;
    let m = picks.len();
    let projection = Matrix::from_fn(field, m, n, |r, c| inv.get(d + r, c).clone());
    let structure = Matrix::from_fn(field, m, m, |r, c| {
        let sq = a.structure().column(picks[c]);
        crate::linalg::dot(field, projection.row(r), &sq)
    });
    Ok(QuotientPresentation { chosen, quotient: EvolutionAlgebra::new(structure)?, projection })
}
