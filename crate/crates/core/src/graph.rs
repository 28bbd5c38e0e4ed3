//! The directed graph attached to an evolution algebra and its natural basis.
//!
//! There is an edge `i -> j` exactly when `e_j` occurs in `e_i^2`. Descendents
//! are vertices reachable by paths of length at least one, so `i` is its own
//! descendent only when it sits on a closed path. The full reachability
//! relation is computed once at construction.

use std::collections::VecDeque;

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::index_set::IndexSet;
use crate::union_find::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedGraph {
    out: Vec<Vec<usize>>,
    reach: Vec<Vec<bool>>,
}

impl AssociatedGraph {
    pub fn from_algebra(a: &EvolutionAlgebra) -> Self {
        let n = a.dim();
        let out = (0..n)
            .map(|i| (0..n).filter(|&j| !a.omega(j, i).is_zero()).collect())
            .collect();
        Self::with_out_edges(out)
    }

    /// `adjacency[i][j]` records an edge `i -> j`.
    pub fn from_adjacency(adjacency: &[Vec<bool>]) -> Result<Self> {
        let n = adjacency.len();
        let mut out = Vec::with_capacity(n);
        for row in adjacency {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
            out.push((0..n).filter(|&j| row[j]).collect());
        }
        Ok(Self::with_out_edges(out))
    }

    fn with_out_edges(out: Vec<Vec<usize>>) -> Self {
        let n = out.len();
        let reach = (0..n)
            .map(|s| {
                let mut seen = vec![false; n];
                let mut queue: VecDeque<usize> = VecDeque::new();
                for &j in &out[s] {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
                while let Some(v) = queue.pop_front() {
                    for &j in &out[v] {
                        if !seen[j] {
                            seen[j] = true;
                            queue.push_back(j);
                        }
                    }
                }
                seen
            })
            .collect();
        AssociatedGraph { out, reach }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.vertex_count() {
            return Err(Error::IndexOutOfRange { index: i, dim: self.vertex_count() });
        }
        Ok(())
    }

    /// First-generation descendents `D^1(i)`, ascending.
    pub fn out_edges(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.out[i].binary_search(&j).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// `adjacency[i][j]` is true iff `i -> j`.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        (0..n).map(|i| (0..n).map(|j| self.has_edge(i, j)).collect()).collect()
    }

    /// True iff there is a path of length >= 1 from `i` to `j`.
    pub fn reaches(&self, i: usize, j: usize) -> bool {
        self.reach[i][j]
    }

    /// `D^m(i)`: endpoints of paths of length exactly `m >= 1`.
    pub fn descendents_m(&self, i: usize, m: usize) -> Result<IndexSet> {
        self.check(i)?;
        if m == 0 {
            return Err(Error::ZeroGeneration);
        }
        let n = self.vertex_count();
        let mut layer = vec![false; n];
        layer[i] = true;
        for _ in 0..m {
            let mut next = vec![false; n];
            for (v, _) in layer.iter().enumerate().filter(|(_, &on)| on) {
                for &j in &self.out[v] {
                    next[j] = true;
                }
            }
            layer = next;
        }
        Ok(layer.iter().enumerate().filter(|(_, &on)| on).map(|(v, _)| v).collect())
    }

    /// `D(i)`: everything reachable from `i` by a path of length >= 1.
    pub fn descendents(&self, i: usize) -> Result<IndexSet> {
        self.check(i)?;
        Ok(self.reach[i].iter().enumerate().filter(|(_, &r)| r).map(|(j, _)| j).collect())
    }

    /// `{ j : i in D(j) }`.
    pub fn ascendents(&self, i: usize) -> Result<IndexSet> {
        self.check(i)?;
        Ok((0..self.vertex_count()).filter(|&j| self.reach[j][i]).collect())
    }

    pub fn is_cyclic_index(&self, i: usize) -> Result<bool> {
        self.check(i)?;
        Ok(self.reach[i][i])
    }

    /// `C(i)`: the vertices mutually reachable with a cyclic index `i`.
    pub fn cycle_of(&self, i: usize) -> Result<IndexSet> {
        if !self.is_cyclic_index(i)? {
            return Err(Error::NotCyclic { index: i });
        }
        Ok((0..self.vertex_count()).filter(|&j| self.reach[i][j] && self.reach[j][i]).collect())
    }

    /// A cyclic index is principal when all its ascendents lie in its cycle.
    pub fn is_principal_cyclic(&self, i: usize) -> Result<bool> {
        let cycle = self.cycle_of(i)?;
        Ok(self.ascendents(i)?.is_subset(&cycle))
    }

    /// Distinct principal cycles, ordered by least element.
    pub fn principal_cycles(&self) -> Vec<IndexSet> {
        let mut cycles: Vec<IndexSet> = Vec::new();
        for i in 0..self.vertex_count() {
            if !self.reach[i][i] || cycles.iter().any(|c| c.contains(i)) {
                continue;
            }
            if self.is_principal_cyclic(i).expect("cyclic index") {
                cycles.push(self.cycle_of(i).expect("cyclic index"));
            }
        }
        cycles
    }

    /// Sources: indices with no ascendents (zero rows of the structure matrix).
    pub fn chain_start_indices(&self) -> IndexSet {
        let n = self.vertex_count();
        let mut has_in = vec![false; n];
        for targets in &self.out {
            for &j in targets {
                has_in[j] = true;
            }
        }
        (0..n).filter(|&i| !has_in[i]).collect()
    }

    /// Vertices emitting no edge (zero columns of the structure matrix).
    pub fn sinks(&self) -> IndexSet {
        (0..self.vertex_count()).filter(|&i| self.out[i].is_empty()).collect()
    }

    /// Connected components of the underlying undirected graph, ordered by least element.
    pub fn weak_components(&self) -> Vec<IndexSet> {
        let mut uf = UnionFind::new(self.vertex_count());
        for (i, targets) in self.out.iter().enumerate() {
            for &j in targets {
                uf.union(i, j);
            }
        }
        uf.groups().into_iter().map(|g| g.into_iter().collect()).collect()
    }

    /// Strongly connected components by Tarjan's algorithm, each sorted and
    /// the list ordered by least element. Singletons without a loop are included.
    pub fn strongly_connected_components(&self) -> Vec<IndexSet> {
        let n = self.vertex_count();
        let mut state = Tarjan {
            counter: 0,
            index: vec![None; n],
            low: vec![0; n],
            on_stack: vec![false; n],
            stack: Vec::new(),
            comps: Vec::new(),
        };
        for v in 0..n {
            if state.index[v].is_none() {
                state.visit(v, &self.out);
            }
        }
        let mut comps: Vec<IndexSet> =
            state.comps.into_iter().map(|c| c.into_iter().collect()).collect();
        comps.sort_by_key(|c| c.first());
        comps
    }
}

struct Tarjan {
    counter: usize,
    index: Vec<Option<usize>>,
    low: Vec<usize>,
    on_stack: Vec<bool>,
    stack: Vec<usize>,
    comps: Vec<Vec<usize>>,
}

impl Tarjan {
    // Iterative to keep deep chains off the call stack.
    fn visit(&mut self, root: usize, out: &[Vec<usize>]) {
        let mut work: Vec<(usize, usize)> = vec![(root, 0)];
        self.open(root);
        while let Some(top) = work.last_mut() {
            let v = top.0;
            if let Some(&w) = out[v].get(top.1) {
                top.1 += 1;
                match self.index[w] {
                    None => {
                        self.open(w);
                        work.push((w, 0));
                    }
                    Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                    Some(_) => {}
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                self.low[parent] = self.low[parent].min(self.low[v]);
            }
            if Some(self.low[v]) == self.index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = self.stack.pop().expect("tarjan stack");
                    self.on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                self.comps.push(comp);
            }
        }
    }

    fn open(&mut self, v: usize) {
        self.index[v] = Some(self.counter);
        self.low[v] = self.counter;
        self.counter += 1;
        self.stack.push(v);
        self.on_stack[v] = true;
    }
}

/// A shortest path `i = k_0 -> .. -> k_m = j` with the product of the
/// structure constants along it, which is nonzero by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPath {
    pub path: Vec<usize>,
    pub weight: Scalar,
}

pub fn witness_path(a: &EvolutionAlgebra, i: usize, j: usize) -> Result<Option<WitnessPath>> {
    a.check_index(i)?;
    a.check_index(j)?;
    let g = AssociatedGraph::from_algebra(a);
    let n = a.dim();
    let mut prev: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &k in g.out_edges(i) {
        if !seen[k] {
            seen[k] = true;
            prev[k] = Some(i);
            queue.push_back(k);
        }
    }
    while let Some(v) = queue.pop_front() {
        if v == j {
            break;
        }
        for &k in g.out_edges(v) {
            if !seen[k] {
                seen[k] = true;
                prev[k] = Some(v);
                queue.push_back(k);
            }
        }
    }
    if !seen[j] {
        return Ok(None);
    }
    let mut path = vec![j];
    let mut cur = j;
    loop {
        let p = prev[cur].expect("bfs predecessor");
        path.push(p);
        if p == i {
            break;
        }
        cur = p;
    }
    path.reverse();
    let weight = path
        .windows(2)
        .fold(a.field().one(), |acc, w| acc * a.omega(w[1], w[0]));
    Ok(Some(WitnessPath { path, weight }))
}
