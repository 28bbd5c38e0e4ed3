//! Serializable reports and their plain-text rendering.
//!
//! Every index in a report is 1-based and every scalar is a string, so the
//! JSON is exact and field order is the declaration order below.

use std::fmt::Write as _;

use evolalg_core::decompose::{self, PartKind, SimplicityReason};
use evolalg_core::oracle::{CrossCheck, EnumerationBudget};
use evolalg_core::{
    ideals, AssociatedGraph, Element, EvolutionAlgebra, IndexSet, Matrix, QuotientPresentation,
    Result, Scalar, Subspace,
};
use serde::{Deserialize, Serialize};

fn one_based(s: &IndexSet) -> Vec<usize> {
    s.to_one_based()
}

fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| scalars(r)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceReport {
    pub dim: usize,
    /// Reduced echelon basis.
    pub basis: Vec<Vec<String>>,
}

impl SubspaceReport {
    pub fn new(s: &Subspace) -> Self {
        SubspaceReport { dim: s.dim(), basis: s.basis().iter().map(|v| scalars(v)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartReport {
    /// `principal_cycle` or `chain_start`.
    pub kind: String,
    pub seed: Vec<usize>,
    pub derived: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub indices: Vec<usize>,
    pub nondegenerate: bool,
    pub simple: bool,
    pub det: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReasonReport {
    /// `zero_algebra`, `singular_structure` or `not_all_reachable`.
    pub code: String,
    pub message: String,
}

impl ReasonReport {
    fn new(r: &SimplicityReason) -> Self {
        let code = match r {
            SimplicityReason::ZeroAlgebra => "zero_algebra",
            SimplicityReason::SingularStructure => "singular_structure",
            SimplicityReason::NotAllReachable(_) => "not_all_reachable",
        };
        ReasonReport { code: code.into(), message: r.to_string() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityReport {
    pub connected: bool,
    /// False for degenerate algebras, where connectivity depends on the basis.
    pub conclusive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub field: String,
    pub dim: usize,
    pub nondegenerate: bool,
    pub annihilator: SubspaceReport,
    pub radical: SubspaceReport,
    pub sinks: Vec<usize>,
    pub chain_start_indices: Vec<usize>,
    pub principal_cycles: Vec<Vec<usize>>,
    pub canonical_parts: Vec<PartReport>,
    pub fragmentation_blocks: Vec<Vec<usize>>,
    pub blocks: Vec<BlockEntry>,
    pub simple: bool,
    pub simple_reasons: Vec<ReasonReport>,
    pub irreducible: IrreducibilityReport,
    pub optimal_certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSection {
    pub algebra_nondegenerate: bool,
    pub optimal_certified: bool,
    pub canonical_parts: Vec<PartReport>,
    pub fragmentation_blocks: Vec<Vec<usize>>,
    pub blocks: Vec<BlockEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleSection {
    pub simple: bool,
    pub reasons: Vec<ReasonReport>,
    pub irreducible: IrreducibilityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalSection {
    pub nondegenerate: bool,
    pub annihilator: SubspaceReport,
    pub radical: SubspaceReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSection {
    pub generator: Vec<String>,
    pub lambda: Vec<usize>,
    pub ideal: SubspaceReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSection {
    pub ideal: SubspaceReport,
    pub chosen: Vec<usize>,
    pub dim: usize,
    /// Structure matrix of the quotient in the chosen basis, rows first.
    pub structure: Vec<Vec<String>>,
    pub projection: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSection {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub descendents: Vec<Vec<usize>>,
    pub cyclic_indices: Vec<usize>,
    pub principal_cycles: Vec<Vec<usize>>,
    pub chain_start_indices: Vec<usize>,
    pub sinks: Vec<usize>,
    pub weak_components: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    pub field: String,
    pub budget: u64,
    pub ideal_count: usize,
    pub radical: SubspaceReport,
    pub radical_by_enumeration: SubspaceReport,
    pub simple: bool,
    pub simple_by_enumeration: bool,
    pub absorption_mismatches: usize,
    pub semiprime: bool,
    pub classically_nondegenerate: bool,
    pub nondegenerate: bool,
    pub agrees: bool,
}

fn part_reports(parts: &[decompose::CanonicalPart]) -> Vec<PartReport> {
    parts
        .iter()
        .map(|p| PartReport {
            kind: match p.kind {
                PartKind::PrincipalCycle => "principal_cycle",
                PartKind::ChainStart => "chain_start",
            }
            .into(),
            seed: one_based(&p.seed),
            derived: one_based(&p.derived),
        })
        .collect()
}

pub fn decomposition_section(a: &EvolutionAlgebra) -> Result<DecompositionSection> {
    let r = decompose::optimal_decomposition(a)?;
    Ok(DecompositionSection {
        algebra_nondegenerate: r.algebra_nondegenerate,
        optimal_certified: r.optimal_certified,
        canonical_parts: part_reports(&r.canonical),
        fragmentation_blocks: r.fragmentation.blocks.iter().map(one_based).collect(),
        blocks: r
            .blocks
            .iter()
            .map(|b| BlockEntry {
                indices: one_based(&b.indices),
                nondegenerate: b.nondegenerate,
                simple: b.simple,
                det: b.det.to_string(),
            })
            .collect(),
    })
}

pub fn simple_section(a: &EvolutionAlgebra) -> SimpleSection {
    let v = decompose::is_simple(a);
    let irr = decompose::is_irreducible(a);
    SimpleSection {
        simple: v.simple,
        reasons: v.reasons.iter().map(ReasonReport::new).collect(),
        irreducible: IrreducibilityReport { connected: irr.connected, conclusive: irr.conclusive },
    }
}

pub fn radical_section(a: &EvolutionAlgebra) -> RadicalSection {
    RadicalSection {
        nondegenerate: ideals::is_nondegenerate(a),
        annihilator: SubspaceReport::new(ideals::annihilator(a).carrier()),
        radical: SubspaceReport::new(ideals::radical(a).carrier()),
    }
}

pub fn analyze(a: &EvolutionAlgebra) -> Result<ReportDocument> {
    let g = AssociatedGraph::from_algebra(a);
    let dec = decomposition_section(a)?;
    let rad = radical_section(a);
    let simple = simple_section(a);
    Ok(ReportDocument {
        field: a.field().to_string(),
        dim: a.dim(),
        nondegenerate: rad.nondegenerate,
        annihilator: rad.annihilator,
        radical: rad.radical,
        sinks: one_based(&g.sinks()),
        chain_start_indices: one_based(&g.chain_start_indices()),
        principal_cycles: g.principal_cycles().iter().map(one_based).collect(),
        canonical_parts: dec.canonical_parts,
        fragmentation_blocks: dec.fragmentation_blocks,
        blocks: dec.blocks,
        simple: simple.simple,
        simple_reasons: simple.reasons,
        irreducible: simple.irreducible,
        optimal_certified: dec.optimal_certified,
    })
}

pub fn ideal_section(a: &EvolutionAlgebra, x: &Element) -> Result<IdealSection> {
    let ideal = ideals::ideal_generated_by(a, x)?;
    if ideal != ideals::ideal_closure(a, x)? {
        return Err(evolalg_core::Error::Internal(
            "closed form and iterative closure of the generated ideal differ".into(),
        ));
    }
    Ok(IdealSection {
        generator: scalars(x.coords()),
        lambda: one_based(&ideals::lambda_x(a, x)?),
        ideal: SubspaceReport::new(ideal.carrier()),
    })
}

pub fn quotient_section(ideal: &Subspace, q: &QuotientPresentation) -> QuotientSection {
    QuotientSection {
        ideal: SubspaceReport::new(ideal),
        chosen: one_based(&q.chosen),
        dim: q.quotient.dim(),
        structure: matrix_rows(q.quotient.structure()),
        projection: matrix_rows(&q.projection),
    }
}

pub fn graph_section(g: &AssociatedGraph) -> GraphSection {
    let n = g.vertex_count();
    GraphSection {
        vertices: n,
        edges: (0..n).flat_map(|i| g.out_edges(i).iter().map(move |&j| [i + 1, j + 1])).collect(),
        descendents: (0..n)
            .map(|i| one_based(&g.descendents(i).expect("vertex in range")))
            .collect(),
        cyclic_indices: (0..n)
            .filter(|&i| g.is_cyclic_index(i).expect("vertex in range"))
            .map(|i| i + 1)
            .collect(),
        principal_cycles: g.principal_cycles().iter().map(one_based).collect(),
        chain_start_indices: one_based(&g.chain_start_indices()),
        sinks: one_based(&g.sinks()),
        weak_components: g.weak_components().iter().map(one_based).collect(),
    }
}

pub fn oracle_section(a: &EvolutionAlgebra, budget: EnumerationBudget, c: &CrossCheck) -> OracleSection {
    OracleSection {
        field: a.field().to_string(),
        budget: budget.max_vectors,
        ideal_count: c.ideal_count,
        radical: SubspaceReport::new(&c.radical_fast),
        radical_by_enumeration: SubspaceReport::new(&c.radical_oracle),
        simple: c.simple_fast,
        simple_by_enumeration: c.simple_oracle,
        absorption_mismatches: c.absorption_mismatches,
        semiprime: c.classical.semiprime,
        classically_nondegenerate: c.classical.classically_nondegenerate,
        nondegenerate: c.nondegenerate,
        agrees: c.agrees(),
    }
}

// Text rendering.

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set_text(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn sets_text(xss: &[Vec<usize>]) -> String {
    let items: Vec<String> = xss.iter().map(|x| set_text(x)).collect();
    format!("[{}]", items.join(", "))
}

fn vector_text(v: &[String]) -> String {
    let mut terms = Vec::new();
    for (i, c) in v.iter().enumerate() {
        match c.as_str() {
            "0" => {}
            "1" => terms.push(format!("e{}", i + 1)),
            _ => terms.push(format!("{c}*e{}", i + 1)),
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn subspace_text(s: &SubspaceReport) -> String {
    if s.dim == 0 {
        return "0".into();
    }
    let items: Vec<String> = s.basis.iter().map(|v| vector_text(v)).collect();
    format!("lin{{{}}} (dim {})", items.join(", "), s.dim)
}

fn reasons_text(rs: &[ReasonReport]) -> String {
    let items: Vec<&str> = rs.iter().map(|r| r.message.as_str()).collect();
    items.join("; ")
}

fn irreducible_text(r: &IrreducibilityReport) -> String {
    match (r.connected, r.conclusive) {
        (c, true) => yes_no(c).to_string(),
        (true, false) => "graph connected (inconclusive: degenerate)".into(),
        (false, false) => "graph disconnected (inconclusive: degenerate)".into(),
    }
}

fn row(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<22}{value}");
}

fn parts_text(out: &mut String, parts: &[PartReport]) {
    let _ = writeln!(out, "canonical parts");
    for p in parts {
        let seed = if p.kind == "chain_start" {
            format!("chain-start {}", p.seed[0])
        } else {
            format!("cycle {}", set_text(&p.seed))
        };
        let _ = writeln!(out, "  {seed:<20}-> {}", set_text(&p.derived));
    }
}

fn blocks_text(out: &mut String, blocks: &[BlockEntry]) {
    let width = blocks.iter().map(|b| set_text(&b.indices).len()).max().unwrap_or(0).max(7);
    let _ = writeln!(out, "blocks");
    let _ = writeln!(out, "  {:<width$}  {:<13}  {:<6}  det", "indices", "nondegenerate", "simple");
    for b in blocks {
        let _ = writeln!(
            out,
            "  {:<width$}  {:<13}  {:<6}  {}",
            set_text(&b.indices),
            yes_no(b.nondegenerate),
            yes_no(b.simple),
            b.det
        );
    }
}

fn simple_text(simple: bool, reasons: &[ReasonReport]) -> String {
    if simple {
        "yes".into()
    } else {
        format!("no ({})", reasons_text(reasons))
    }
}

impl ReportDocument {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        row(&mut out, "field", &self.field);
        row(&mut out, "dimension", self.dim);
        row(&mut out, "nondegenerate", yes_no(self.nondegenerate));
        row(&mut out, "annihilator", subspace_text(&self.annihilator));
        row(&mut out, "radical", subspace_text(&self.radical));
        row(&mut out, "sinks", set_text(&self.sinks));
        row(&mut out, "chain-start indices", set_text(&self.chain_start_indices));
        row(&mut out, "principal cycles", sets_text(&self.principal_cycles));
        parts_text(&mut out, &self.canonical_parts);
        row(&mut out, "fragmentation", sets_text(&self.fragmentation_blocks));
        blocks_text(&mut out, &self.blocks);
        row(&mut out, "simple", simple_text(self.simple, &self.simple_reasons));
        row(&mut out, "irreducible", irreducible_text(&self.irreducible));
        row(&mut out, "optimal certified", yes_no(self.optimal_certified));
        out
    }
}

impl DecompositionSection {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        parts_text(&mut out, &self.canonical_parts);
        row(&mut out, "fragmentation", sets_text(&self.fragmentation_blocks));
        blocks_text(&mut out, &self.blocks);
        row(&mut out, "nondegenerate", yes_no(self.algebra_nondegenerate));
        row(&mut out, "optimal certified", yes_no(self.optimal_certified));
        out
    }
}

impl SimpleSection {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        row(&mut out, "simple", simple_text(self.simple, &self.reasons));
        row(&mut out, "irreducible", irreducible_text(&self.irreducible));
        out
    }
}

impl RadicalSection {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        row(&mut out, "nondegenerate", yes_no(self.nondegenerate));
        row(&mut out, "annihilator", subspace_text(&self.annihilator));
        row(&mut out, "radical", subspace_text(&self.radical));
        out
    }
}

impl IdealSection {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        row(&mut out, "generator", vector_text(&self.generator));
        row(&mut out, "lambda", set_text(&self.lambda));
        row(&mut out, "generated ideal", subspace_text(&self.ideal));
        row(&mut out, "dimension", self.ideal.dim);
        out
    }
}

impl QuotientSection {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        row(&mut out, "ideal", subspace_text(&self.ideal));
        row(&mut out, "chosen basis", set_text(&self.chosen));
        row(&mut out, "quotient dimension", self.dim);
        let _ = writeln!(out, "quotient structure");
        for r in &self.structure {
            let _ = writeln!(out, "  {}", r.join(" "));
        }
        let _ = writeln!(out, "projection");
        for r in &self.projection {
            let _ = writeln!(out, "  {}", r.join(" "));
        }
        out
    }
}

impl GraphSection {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        row(&mut out, "vertices", self.vertices);
        let edges: Vec<String> = self.edges.iter().map(|[i, j]| format!("{i}->{j}")).collect();
        row(&mut out, "edges", edges.join(" "));
        for (i, d) in self.descendents.iter().enumerate() {
            row(&mut out, &format!("D({})", i + 1), set_text(d));
        }
        row(&mut out, "cyclic indices", set_text(&self.cyclic_indices));
        row(&mut out, "principal cycles", sets_text(&self.principal_cycles));
        row(&mut out, "chain-start indices", set_text(&self.chain_start_indices));
        row(&mut out, "sinks", set_text(&self.sinks));
        row(&mut out, "weak components", sets_text(&self.weak_components));
        out
    }
}

impl OracleSection {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        row(&mut out, "field", &self.field);
        row(&mut out, "ideals enumerated", self.ideal_count);
        row(&mut out, "radical", subspace_text(&self.radical));
        row(&mut out, "radical (enumerated)", subspace_text(&self.radical_by_enumeration));
        row(&mut out, "simple", yes_no(self.simple));
        row(&mut out, "simple (enumerated)", yes_no(self.simple_by_enumeration));
        row(&mut out, "absorption mismatches", self.absorption_mismatches);
        row(&mut out, "semiprime", yes_no(self.semiprime));
        row(&mut out, "classically nondeg.", yes_no(self.classically_nondegenerate));
        row(&mut out, "nondegenerate", yes_no(self.nondegenerate));
        row(&mut out, "agreement", if self.agrees { "ok" } else { "MISMATCH" });
        out
    }
}
