//! Simplicity, irreducibility, the canonical decomposition of the index set and
//! its optimal fragmentation into a direct sum of evolution ideals.

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::graph::AssociatedGraph;
use crate::ideals::{is_ideal, is_nondegenerate, Ideal};
use crate::index_set::IndexSet;
use crate::linalg::Subspace;
use crate::union_find::UnionFind;

/// `Λ(S) = S ∪ ⋃_{i∈S} D(i)`.
pub fn derived_index_set(g: &AssociatedGraph, s: &IndexSet) -> Result<IndexSet> {
    let mut out = s.clone();
    for i in s {
        out.extend(&g.descendents(i)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartKind {
    PrincipalCycle,
    ChainStart,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPart {
    pub kind: PartKind,
    /// The principal cycle, or the single chain-start index.
    pub seed: IndexSet,
    pub derived: IndexSet,
}

/// Parts for every principal cycle and every chain-start index, sorted by the
/// least seed index.
pub fn canonical_decomposition(a: &EvolutionAlgebra) -> Result<Vec<CanonicalPart>> {
    canonical_decomposition_of(&AssociatedGraph::from_algebra(a))
}

pub fn canonical_decomposition_of(g: &AssociatedGraph) -> Result<Vec<CanonicalPart>> {
    let mut parts = Vec::new();
    for cycle in g.principal_cycles() {
        let derived = derived_index_set(g, &cycle)?;
        parts.push(CanonicalPart { kind: PartKind::PrincipalCycle, seed: cycle, derived });
    }
    for i in &g.chain_start_indices() {
        let seed = IndexSet::singleton(i);
        let derived = derived_index_set(g, &seed)?;
        parts.push(CanonicalPart { kind: PartKind::ChainStart, seed, derived });
    }
    parts.sort_by_key(|p| p.seed.first());

    let mut covered = IndexSet::new();
    for p in &parts {
        covered.extend(&p.derived);
    }
    if covered != IndexSet::full(g.vertex_count()) {
        return Err(Error::Internal(format!("canonical parts cover only {covered}")));
    }
    Ok(parts)
}

/// Components of the intersection graph of `parts`, as lists of part positions.
fn intersection_components(parts: &[IndexSet]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(parts.len());
    for (x, p) in parts.iter().enumerate() {
        for (y, q) in parts.iter().enumerate().skip(x + 1) {
            if !p.is_disjoint(q) {
                uf.union(x, y);
            }
        }
    }
    uf.groups()
}

/// Whether the union of `parts` splits into two nonempty unions with no
/// common index.
pub fn is_fragmentable(parts: &[IndexSet]) -> Result<bool> {
    if parts.is_empty() {
        return Err(Error::EmptyParts);
    }
    Ok(intersection_components(parts).len() > 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragmentation {
    /// Pairwise disjoint, sorted by least element.
    pub blocks: Vec<IndexSet>,
    /// For each block, the positions (in the input list) of the parts it absorbed.
    pub block_members: Vec<Vec<usize>>,
}

pub fn optimal_fragmentation(parts: &[IndexSet]) -> Result<Fragmentation> {
    if parts.is_empty() {
        return Err(Error::EmptyParts);
    }
    let mut merged: Vec<(IndexSet, Vec<usize>)> = intersection_components(parts)
        .into_iter()
        .map(|members| {
            let mut block = IndexSet::new();
            for &m in &members {
                block.extend(&parts[m]);
            }
            (block, members)
        })
        .collect();
    merged.sort_by_key(|(b, _)| b.first());
    let (blocks, block_members) = merged.into_iter().unzip();
    Ok(Fragmentation { blocks, block_members })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub indices: IndexSet,
    pub ideal: Ideal,
    pub nondegenerate: bool,
    pub simple: bool,
    /// Determinant of the structure matrix restricted to the block.
    pub det: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub canonical: Vec<CanonicalPart>,
    pub fragmentation: Fragmentation,
    pub blocks: Vec<BlockReport>,
    pub algebra_nondegenerate: bool,
    /// Uniqueness and irreducibility of the blocks are only guaranteed for
    /// non-degenerate algebras.
    pub optimal_certified: bool,
}

/// `A = ⊕ lin{e_i : i ∈ block}` over the optimal fragmentation of the
/// canonical decomposition. Every structural guarantee is rechecked and a
/// failure is reported as [`Error::Internal`].
pub fn optimal_decomposition(a: &EvolutionAlgebra) -> Result<DecompositionReport> {
    let n = a.dim();
    let field = a.field();
    let g = AssociatedGraph::from_algebra(a);
    let canonical = canonical_decomposition_of(&g)?;
    let fragmentation = if canonical.is_empty() {
        Fragmentation { blocks: Vec::new(), block_members: Vec::new() }
    } else {
        let derived: Vec<IndexSet> = canonical.iter().map(|p| p.derived.clone()).collect();
        optimal_fragmentation(&derived)?
    };

    let mut owner = vec![usize::MAX; n];
    for (b, block) in fragmentation.blocks.iter().enumerate() {
        for i in block {
            if owner[i] != usize::MAX {
                return Err(Error::Internal(format!("index {} lies in two blocks", i + 1)));
            }
            owner[i] = b;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::Internal("blocks do not cover the index set".into()));
    }
    // e_i e_j = 0 for i ≠ j, so cross-block products vanish iff no square
    // leaves its block.
    for i in 0..n {
        for &j in g.out_edges(i) {
            if owner[j] != owner[i] {
                return Err(Error::Internal(format!(
                    "e{}^2 has a component outside its block",
                    i + 1
                )));
            }
        }
    }
    if fragmentation.blocks != g.weak_components() {
        return Err(Error::Internal("fragmentation differs from the weak components".into()));
    }

    let mut blocks = Vec::with_capacity(fragmentation.blocks.len());
    let mut total = Subspace::zero(field, n);
    for indices in &fragmentation.blocks {
        let carrier = Subspace::coordinate(field, n, indices);
        if !is_ideal(a, &carrier)? {
            return Err(Error::Internal(format!("block {indices} is not an ideal")));
        }
        total = total.sum(&carrier)?;
        let sub = a.restrict(indices);
        let verdict = is_simple(&sub);
        blocks.push(BlockReport {
            indices: indices.clone(),
            ideal: Ideal::new(a, carrier)?,
            nondegenerate: is_nondegenerate(&sub),
            simple: verdict.simple,
            det: sub.structure().det()?,
        });
    }
    if !total.is_full() {
        return Err(Error::Internal("blocks do not span the algebra".into()));
    }

    let algebra_nondegenerate = is_nondegenerate(a);
    Ok(DecompositionReport {
        canonical,
        fragmentation,
        blocks,
        algebra_nondegenerate,
        optimal_certified: algebra_nondegenerate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SimplicityReason {
    ZeroAlgebra,
    SingularStructure,
    /// `D(k) ≠ Λ` for the stored index.
    NotAllReachable(usize),
}

impl std::fmt::Display for SimplicityReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SimplicityReason::ZeroAlgebra => f.write_str("zero algebra"),
            SimplicityReason::SingularStructure => f.write_str("singular structure matrix"),
            SimplicityReason::NotAllReachable(k) => write!(f, "D({}) ≠ Λ", k + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub simple: bool,
    /// Empty exactly when `simple`.
    pub reasons: Vec<SimplicityReason>,
}

/// Simple iff the structure matrix is nonsingular and `D(i) = Λ` for every `i`.
pub fn is_simple(a: &EvolutionAlgebra) -> SimplicityVerdict {
    let n = a.dim();
    let mut reasons = Vec::new();
    if n == 0 {
        reasons.push(SimplicityReason::ZeroAlgebra);
    } else {
        if a.structure().rank() < n {
            reasons.push(SimplicityReason::SingularStructure);
        }
        let g = AssociatedGraph::from_algebra(a);
        if let Some(k) = (0..n).find(|&k| (0..n).any(|j| !g.reaches(k, j))) {
            reasons.push(SimplicityReason::NotAllReachable(k));
        }
    }
    SimplicityVerdict { simple: reasons.is_empty(), reasons }
}

/// The same decision from the other characterisation: `A = lin{e_i^2}` and
/// `⟨e_i^2⟩ = A` for every `i`.
pub fn is_simple_by_square_ideals(a: &EvolutionAlgebra) -> Result<bool> {
    let n = a.dim();
    if n == 0 || a.structure().rank() < n {
        return Ok(false);
    }
    for i in 0..n {
        if !crate::ideals::ideal_generated_by_square(a, i)?.carrier().is_full() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    /// The associated graph is weakly connected.
    pub connected: bool,
    /// Connectivity decides irreducibility only for non-degenerate algebras.
    pub conclusive: bool,
}

impl IrreducibilityVerdict {
    pub fn irreducible(&self) -> Option<bool> {
        self.conclusive.then_some(self.connected)
    }
}

pub fn is_irreducible(a: &EvolutionAlgebra) -> IrreducibilityVerdict {
    let g = AssociatedGraph::from_algebra(a);
    IrreducibilityVerdict {
        connected: g.weak_components().len() == 1,
        conclusive: is_nondegenerate(a),
    }
}

/// For a non-degenerate algebra, the optimal blocks if each of them is simple.
pub fn simple_sum_report(a: &EvolutionAlgebra) -> Result<Option<Vec<IndexSet>>> {
    if !is_nondegenerate(a) {
        return Err(Error::Degenerate);
    }
    let report = optimal_decomposition(a)?;
    if report.blocks.iter().all(|b| b.simple) {
        Ok(Some(report.fragmentation.blocks))
    } else {
        Ok(None)
    }
}
