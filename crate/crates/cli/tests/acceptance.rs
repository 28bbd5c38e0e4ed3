//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Random corpora come from fixed ChaCha seeds, so every run checks the same
//! instances.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;

use evolalg_cli::{app, emit_document, export_dot, parse_document};
use evolalg_core::decompose;
use evolalg_core::ideals::{self, Ideal};
use evolalg_core::oracle::{self, EnumerationBudget};
use evolalg_core::{
    AssociatedGraph, Element, EvolutionAlgebra, FieldDescriptor, IndexSet, Matrix, Scalar,
    Subspace,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldDescriptor = FieldDescriptor::Rational;
const F2: FieldDescriptor = FieldDescriptor::Prime(2);
const F3: FieldDescriptor = FieldDescriptor::Prime(3);
const F5: FieldDescriptor = FieldDescriptor::Prime(5);

#[derive(Default)]
struct Checker {
    checks: usize,
    failures: Vec<String>,
}

impl Checker {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        let ok = got == want;
        self.check(ok, || format!("{what}: got {got:?}, want {want:?}"));
    }
}

// Corpus construction.

fn alg(field: FieldDescriptor, squares: &[&[i64]]) -> EvolutionAlgebra {
    EvolutionAlgebra::from_i64_squares(field, squares).unwrap()
}

fn graph_algebra(field: FieldDescriptor, n: usize, edges: &[(usize, usize)]) -> EvolutionAlgebra {
    let mut adj = vec![vec![false; n]; n];
    for &(i, j) in edges {
        adj[i - 1][j - 1] = true;
    }
    EvolutionAlgebra::from_graph(field, &adj).unwrap()
}

fn set(xs: &[usize]) -> IndexSet {
    IndexSet::from_one_based(xs)
}

fn span(field: FieldDescriptor, n: usize, vs: &[&[i64]]) -> Subspace {
    let vs: Vec<Vec<Scalar>> =
        vs.iter().map(|v| v.iter().map(|&x| field.from_i64(x)).collect()).collect();
    Subspace::from_vectors(field, n, &vs).unwrap()
}

/// The worked examples with integer structure constants, read in `field`.
fn worked_examples(field: FieldDescriptor) -> Vec<(&'static str, EvolutionAlgebra)> {
    vec![
        ("four-dim", alg(field, &[&[0, 1, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, -2], &[0, 0, 5, 0]])),
        (
            "six-dim",
            alg(
                field,
                &[
                    &[0; 6],
                    &[1, 0, 1, 0, 0, 0],
                    &[0; 6],
                    &[0, 0, 1, 0, 1, 0],
                    &[0, 0, 0, 0, 0, 1],
                    &[0, 0, 0, 0, 1, 0],
                ],
            ),
        ),
        ("non-basis ideal", alg(field, &[&[0, 1, 1], &[1, 1, 0], &[-1, -1, 0]])),
        ("two-cycle plus loop", alg(field, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])),
        ("two idempotents", alg(field, &[&[1, 0], &[0, 1]])),
        ("shared square", alg(field, &[&[0, 1], &[0, 1]])),
        ("basis-dependent", alg(field, &[&[1, 1], &[0, 0]])),
        ("five-dim degenerate", five_dim(field)),
        ("no extension", alg(field, &[&[1, 0], &[1, 0]])),
        (
            "acyclic six-dim",
            alg(
                field,
                &[
                    &[0; 6],
                    &[0; 6],
                    &[0; 6],
                    &[1, 1, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 1, 0],
                ],
            ),
        ),
        ("sink plus loop", alg(field, &[&[0, 0], &[1, 1]])),
        ("fibonacci", alg(field, &[&[0, 1], &[1, 1]])),
        ("isotropic", alg(field, &[&[0, 1, 1], &[0, 1, 1], &[0, -1, -1]])),
        ("reachable but singular", alg(field, &[&[1, 1, 0], &[0, 0, 1], &[1, 1, 0]])),
        ("graph E", graph_algebra(field, 4, &[(3, 1), (3, 2), (1, 1), (1, 2), (2, 1), (2, 3), (2, 4)])),
        ("graph F", graph_algebra(field, 5, &graph_f_edges())),
        ("graph G", graph_algebra(field, 6, &graph_g_edges())),
    ]
}

fn five_dim(field: FieldDescriptor) -> EvolutionAlgebra {
    alg(field, &[&[1, 0, 0, 0, 0], &[1, 0, 0, 0, 0], &[0, 0, 1, 0, 1], &[0; 5], &[0; 5]])
}

fn graph_f_edges() -> Vec<(usize, usize)> {
    vec![(5, 2), (5, 3), (1, 2), (2, 5), (2, 3), (3, 2), (3, 5), (4, 3), (4, 4)]
}

fn graph_g_edges() -> Vec<(usize, usize)> {
    vec![(6, 2), (6, 3), (1, 2), (2, 6), (2, 3), (3, 2), (3, 6), (3, 4), (4, 4), (4, 5)]
}

fn random_scalar(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> Scalar {
    match field {
        FieldDescriptor::Rational => {
            let mut num = rng.random_range(1..=4i64);
            if rng.random_bool(0.5) {
                num = -num;
            }
            let den = if rng.random_bool(0.2) { rng.random_range(2..=3i64) } else { 1 };
            &field.from_i64(num) / &field.from_i64(den)
        }
        FieldDescriptor::Prime(p) => field.from_i64(rng.random_range(1..p as i64)),
    }
}

fn random_algebra(rng: &mut ChaCha8Rng, field: FieldDescriptor, n: usize, density: f64) -> EvolutionAlgebra {
    let m = Matrix::from_fn(field, n, n, |_, _| {
        if rng.random_bool(density) {
            random_scalar(rng, field)
        } else {
            field.zero()
        }
    });
    EvolutionAlgebra::new(m).unwrap()
}

/// A direct sum of random blocks, shuffled, so that decompositions are not trivial.
fn random_block_sum(rng: &mut ChaCha8Rng, field: FieldDescriptor, n: usize) -> EvolutionAlgebra {
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let s = rng.random_range(1..=left.min(4));
        sizes.push(s);
        left -= s;
    }
    let mut m = Matrix::zeros(field, n, n);
    let mut offset = 0;
    for s in sizes {
        let density = rng.random_range(0.3..0.8);
        let block = random_algebra(rng, field, s, density);
        for r in 0..s {
            for c in 0..s {
                m.set(offset + r, offset + c, block.structure().get(r, c).clone());
            }
        }
        offset += s;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    EvolutionAlgebra::new(m).unwrap().reindex(&order).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng, a: &EvolutionAlgebra) -> Element {
    let f = a.field();
    Element::new(
        (0..a.dim())
            .map(|_| if rng.random_bool(0.4) { f.zero() } else { random_scalar(rng, f) })
            .collect(),
    )
}

/// 200 algebras of dimension at most 3 over F2 and F3.
fn small_prime_corpus() -> Vec<EvolutionAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    (0..200)
        .map(|k| {
            let field = if k % 2 == 0 { F2 } else { F3 };
            let n = rng.random_range(1..=3);
            let density = rng.random_range(0.2..0.9);
            random_algebra(&mut rng, field, n, density)
        })
        .collect()
}

/// 500 algebras of dimension 2 to 8 over Q and F5.
fn decomposition_corpus() -> Vec<EvolutionAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    (0..500)
        .map(|k| {
            let field = if k % 2 == 0 { Q } else { F5 };
            let n = rng.random_range(2..=8);
            if rng.random_bool(0.5) {
                random_block_sum(&mut rng, field, n)
            } else {
                let density = rng.random_range(0.1..0.5);
                random_algebra(&mut rng, field, n, density)
            }
        })
        .collect()
}

// Criteria.

fn golden_examples(c: &mut Checker) {
    let four = alg(Q, &[&[0, 1, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, -2], &[0, 0, 5, 0]]);
    let adj: Vec<Vec<u8>> = AssociatedGraph::from_algebra(&four)
        .adjacency()
        .iter()
        .map(|r| r.iter().map(|&b| b as u8).collect())
        .collect();
    c.eq(adj, vec![vec![0, 1, 1, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]], "adjacency P");

    let six = &worked_examples(Q)[1].1;
    c.eq(ideals::annihilator(six).into_carrier(), Subspace::coordinate(Q, 6, &set(&[1, 3])), "annihilator");

    let e = AssociatedGraph::from_algebra(&graph_algebra(Q, 4, &[(1, 2), (1, 3), (3, 4), (4, 3)]));
    c.eq(e.descendents_m(2, 1).unwrap(), set(&[4]), "D^1_E(3)");
    c.eq(e.descendents(2).unwrap(), set(&[3, 4]), "D_E(3)");
    let f = AssociatedGraph::from_algebra(&graph_algebra(Q, 4, &[(1, 2), (2, 3), (3, 4), (4, 2)]));
    c.eq(f.descendents(1).unwrap(), set(&[2, 3, 4]), "D_F(2)");

    let classify = |g: &AssociatedGraph| {
        let n = g.vertex_count();
        let cyclic: IndexSet = (0..n).filter(|&i| g.is_cyclic_index(i).unwrap()).collect();
        let principal: IndexSet = cyclic.iter().filter(|&i| g.is_principal_cyclic(i).unwrap()).collect();
        (cyclic, principal, g.chain_start_indices())
    };
    let ge = AssociatedGraph::from_algebra(&worked_examples(Q)[14].1);
    c.eq(classify(&ge), (set(&[1, 2, 3]), set(&[1, 2, 3]), set(&[])), "graph E classification");
    let gf = AssociatedGraph::from_algebra(&graph_algebra(Q, 5, &graph_f_edges()));
    c.eq(classify(&gf), (set(&[2, 3, 4, 5]), set(&[4]), set(&[1])), "graph F classification");
    c.eq(gf.cycle_of(1).unwrap(), set(&[2, 3, 5]), "C(2) in graph F");
    let gg = AssociatedGraph::from_algebra(&graph_algebra(Q, 6, &graph_g_edges()));
    c.eq(classify(&gg), (set(&[2, 3, 4, 6]), set(&[]), set(&[1])), "graph G classification");

    let ev = alg(Q, &[&[0, 1, 1], &[1, 1, 0], &[-1, -1, 0]]);
    let sq = ideals::ideal_generated_by_square(&ev, 0).unwrap();
    c.eq(sq.dim(), 2, "dim <e1^2>");
    c.eq(ideals::is_ideal(&ev, sq.carrier()).unwrap(), true, "<e1^2> is an ideal");

    let dife = alg(Q, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    c.eq(ideals::is_ideal(&dife, &span(Q, 3, &[&[1, 1, 0], &[0, 0, 1]])).unwrap(), false, "subalgebra is not an ideal");

    c.eq(decompose::is_simple(&alg(Q, &[&[1, 0], &[0, 1]])).simple, false, "two idempotents simple");
    c.eq(
        decompose::is_irreducible(&alg(Q, &[&[0, 1], &[0, 1]])).irreducible(),
        Some(true),
        "shared square irreducible",
    );
}

fn oracle_equivalence(c: &mut Checker) {
    let budget = EnumerationBudget::default();
    let mut corpus: Vec<(String, EvolutionAlgebra)> =
        small_prime_corpus().into_iter().enumerate().map(|(k, a)| (format!("random #{k}"), a)).collect();
    for field in [F2, F3] {
        for (name, a) in worked_examples(field) {
            corpus.push((format!("{name} over {field}"), a));
        }
    }
    for (name, a) in &corpus {
        let all = oracle::enumerate_ideals(a, budget).unwrap();
        let rad = ideals::radical(a);
        c.eq(rad.carrier().clone(), oracle::radical_oracle(a, budget).unwrap(), &format!("{name}: radical"));
        c.eq(
            decompose::is_simple(a).simple,
            oracle::simple_oracle(a, budget).unwrap(),
            &format!("{name}: simplicity"),
        );
        for s in &all {
            let ideal = Ideal::new(a, s.clone()).unwrap();
            let by_vectors = oracle::absorption_by_enumeration(a, s, budget).unwrap();
            c.eq(
                ideals::has_absorption_property(a, &ideal).unwrap(),
                by_vectors.is_subset_of(s).unwrap(),
                &format!("{name}: absorption of {s:?}"),
            );
        }
    }
}

fn decomposition_validity(c: &mut Checker) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0033);
    for (k, a) in decomposition_corpus().iter().enumerate() {
        let n = a.dim();
        let r = decompose::optimal_decomposition(a).unwrap();
        let blocks = &r.fragmentation.blocks;
        let mut seen = IndexSet::new();
        let mut disjoint = true;
        for b in blocks {
            disjoint &= seen.is_disjoint(b);
            seen.extend(b);
        }
        c.check(disjoint && seen == IndexSet::full(n), || format!("#{k}: blocks do not partition"));
        for b in &r.blocks {
            c.check(ideals::is_ideal(a, b.ideal.carrier()).unwrap(), || format!("#{k}: block not an ideal"));
        }
        let mut cross_ok = true;
        for (x, bx) in blocks.iter().enumerate() {
            for by in blocks.iter().skip(x + 1) {
                for i in bx {
                    for j in by {
                        let p = a.multiply(&a.basis_element(i).unwrap(), &a.basis_element(j).unwrap()).unwrap();
                        cross_ok &= p.is_zero();
                    }
                }
            }
        }
        c.check(cross_ok, || format!("#{k}: cross-block product nonzero"));
        c.eq(blocks.clone(), AssociatedGraph::from_algebra(a).weak_components(), &format!("#{k}: weak components"));

        if ideals::is_nondegenerate(a) {
            for _ in 0..20 {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut rng);
                let b = a.reindex(&order).unwrap();
                let mut mapped: Vec<IndexSet> = decompose::optimal_decomposition(&b)
                    .unwrap()
                    .fragmentation
                    .blocks
                    .iter()
                    .map(|blk| blk.iter().map(|t| order[t]).collect())
                    .collect();
                mapped.sort_by_key(|s| s.first());
                c.eq(mapped, blocks.clone(), &format!("#{k}: permuted partition"));
            }
        }
    }
}

fn degenerate_regression(c: &mut Checker) {
    let a = five_dim(Q);
    let r = decompose::optimal_decomposition(&a).unwrap();
    c.eq(r.fragmentation.blocks, vec![set(&[1, 2]), set(&[3, 5]), set(&[4])], "blocks");
    c.eq(r.optimal_certified, false, "optimal_certified");
    c.eq(ideals::is_ideal(&a, &span(Q, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]])).unwrap(), true, "lin{e1, e2}");
    c.eq(ideals::is_ideal(&a, &span(Q, 5, &[&[0, 0, 1, 0, 1]])).unwrap(), true, "lin{e3 + e5}");
}

/// `μ^n(x)` by repeated multiplication with every basis element.
fn mu_by_multiplication(a: &EvolutionAlgebra, x: &Element, n: usize) -> Subspace {
    let f = a.field();
    let mut cur = Subspace::from_vectors(f, a.dim(), &[x.coords()]).unwrap();
    for _ in 0..n {
        let mut next = Vec::new();
        for v in cur.basis() {
            for i in 0..a.dim() {
                next.push(a.multiply(&a.basis_element(i).unwrap(), &Element::new(v.clone())).unwrap().into_coords());
            }
        }
        cur = Subspace::from_vectors(f, a.dim(), &next).unwrap();
    }
    cur
}

fn generated_ideals(c: &mut Checker) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for k in 0..200 {
        let field = if k % 2 == 0 { Q } else { F5 };
        let n = rng.random_range(2..=6);
        let density = rng.random_range(0.15..0.6);
        let a = random_algebra(&mut rng, field, n, density);
        let x = random_element(&mut rng, &a);
        c.eq(
            ideals::ideal_generated_by(&a, &x).unwrap(),
            ideals::ideal_closure(&a, &x).unwrap(),
            &format!("#{k}: <x> closed form"),
        );
        let g = AssociatedGraph::from_algebra(&a);
        for i in 0..n {
            let sq = a.square_of_basis(i).unwrap();
            for m in 1..=n {
                let cols: Vec<Vec<Scalar>> =
                    g.descendents_m(i, m).unwrap().iter().map(|j| a.structure().column(j)).collect();
                let layer = Subspace::from_vectors(field, n, &cols).unwrap();
                let mu = ideals::mu_n(&a, &sq, m).unwrap();
                c.eq(mu.clone(), layer, &format!("#{k}: mu^{m}(e{}^2) layer", i + 1));
                c.eq(mu, mu_by_multiplication(&a, &sq, m), &format!("#{k}: mu^{m}(e{}^2) products", i + 1));
            }
        }
    }
}

fn radical_tower(c: &mut Checker) {
    let corpus = small_prime_corpus().into_iter().chain(decomposition_corpus());
    for (k, a) in corpus.enumerate() {
        let ann = ideals::annihilator(&a);
        let rad = ideals::radical(&a);
        c.check(ann.carrier().is_subset_of(rad.carrier()).unwrap(), || format!("#{k}: ann ⊄ rad"));
        c.eq(rad.is_zero(), ann.is_zero(), &format!("#{k}: rad = 0 iff ann = 0"));
        let q = ideals::quotient(&a, &rad).unwrap();
        c.check(ideals::annihilator(&q.quotient).is_zero(), || format!("#{k}: A/rad has a nonzero annihilator"));
    }
}

fn classical_chain(c: &mut Checker) {
    let budget = EnumerationBudget::default();
    for (k, a) in small_prime_corpus().iter().enumerate() {
        let v = oracle::classical_checks(a, budget).unwrap();
        c.check(!v.classically_nondegenerate || v.semiprime, || format!("#{k}: nondegenerate but not semiprime"));
        c.check(!v.semiprime || ideals::is_nondegenerate(a), || format!("#{k}: semiprime but degenerate"));
    }
    let fib = alg(F2, &[&[0, 1], &[1, 1]]);
    let v = oracle::classical_checks(&fib, budget).unwrap();
    c.eq((v.semiprime, v.classically_nondegenerate), (true, false), "F2 counterexample");
    let iso = alg(F3, &[&[0, 1, 1], &[0, 1, 1], &[0, -1, -1]]);
    let v = oracle::classical_checks(&iso, budget).unwrap();
    c.eq((ideals::is_nondegenerate(&iso), v.semiprime), (true, false), "F3 counterexample");
}

/// `e_i^2 e_i^2 = Σ_k ω_ki^2 e_k^2` against `(e_i^2 e_i) e_i = ω_ii^2 e_i^2`,
/// straight from the structure constants.
fn witness_by_formula(a: &EvolutionAlgebra, i: usize) -> bool {
    let f = a.field();
    let n = a.dim();
    let m = a.structure();
    let lhs: Vec<Scalar> = (0..n)
        .map(|j| (0..n).fold(f.zero(), |acc, k| acc + &(m.get(k, i) * m.get(k, i)) * m.get(j, k)))
        .collect();
    let w = m.get(i, i) * m.get(i, i);
    let rhs: Vec<Scalar> = (0..n).map(|j| &w * m.get(j, i)).collect();
    lhs != rhs
}

fn algebra_laws(c: &mut Checker) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for k in 0..1000 {
        let field = [Q, F2, F3, F5][k % 4];
        let n = rng.random_range(1..=6);
        let density = rng.random_range(0.1..0.7);
        let a = random_algebra(&mut rng, field, n, density);
        let (x, y, z) = (random_element(&mut rng, &a), random_element(&mut rng, &a), random_element(&mut rng, &a));
        let s = random_scalar(&mut rng, field);
        let mul = |u: &Element, v: &Element| a.multiply(u, v).unwrap();
        c.eq(mul(&x, &y), mul(&y, &x), &format!("#{k}: commutativity"));
        c.eq(mul(&x, &mul(&y, &x)), mul(&mul(&x, &y), &x), &format!("#{k}: flexibility"));
        c.eq(mul(&x.add(&z), &y), mul(&x, &y).add(&mul(&z, &y)), &format!("#{k}: additivity"));
        c.eq(mul(&x.scale(&s), &y), mul(&x, &y).scale(&s), &format!("#{k}: homogeneity"));
        let formula: IndexSet = (0..n).filter(|&i| witness_by_formula(&a, i)).collect();
        c.eq(a.power_associativity_witnesses(), formula, &format!("#{k}: witnesses"));
    }
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["evolalg"];
    argv.extend_from_slice(args);
    let code = app::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn cli_contract(c: &mut Checker) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for k in 0..100 {
        let field = [Q, F2, F3, F5][k % 4];
        let n = rng.random_range(1..=7);
        let a = random_algebra(&mut rng, field, n, 0.5);
        let text = emit_document(&a);
        let back = parse_document(&text, None).unwrap();
        c.eq(&back, &a, &format!("#{k}: parse(emit(A)) = A"));
        c.eq(emit_document(&back), text.clone(), &format!("#{k}: emit is byte-stable"));
        let noisy: String = text.lines().map(|l| format!("\t{}  # row\n\n", l.replace(' ', "  "))).collect();
        c.eq(parse_document(&format!("# noisy\n{noisy}"), None).ok().as_ref(), Some(&a), &format!("#{k}: noisy parse"));
        let g = AssociatedGraph::from_algebra(&a);
        c.eq(export_dot(&g), export_dot(&AssociatedGraph::from_algebra(&back)), &format!("#{k}: DOT stable"));
    }

    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_owned()
    };
    let good = write("fib.txt", "field rational\ndim 2\n0 1\n1 1\n");
    let five = write("five.txt", &emit_document(&five_dim(Q)));
    let zero13 = EvolutionAlgebra::new(Matrix::zeros(F2, 13, 13)).unwrap();
    let big = write("big.txt", &emit_document(&zero13));
    let zero_den = write("zero_den.txt", "field rational\ndim 1\n1/0\n");
    let dim0 = write("dim0.txt", "field rational\ndim 0\n");
    let not_prime = write("p4.txt", "field prime 4\ndim 1\n1\n");
    let ragged = write("ragged.txt", "field rational\ndim 2\n1 0\n1\n");
    let not_ideal = write("line.txt", "1 1\n");
    let missing = dir.path().join("absent.txt").to_str().unwrap().to_owned();
    let dot_path = dir.path().join("g.dot").to_str().unwrap().to_owned();

    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["analyze", "--input", &good], 0),
        (vec!["analyze", "--input", &good, "--json"], 0),
        (vec!["graph", "--input", &good, "--dot", &dot_path], 0),
        (vec!["oracle", "--input", &good, "--p", "2"], 0),
        (vec!["analyze", "--input", &missing], 1),
        (vec!["analyze", "--input", &zero_den], 1),
        (vec!["analyze", "--input", &dim0], 1),
        (vec!["analyze", "--input", &not_prime], 1),
        (vec!["analyze", "--input", &ragged], 1),
        (vec!["analyze", "--input", &good, "--bogus"], 1),
        (vec!["transmogrify"], 1),
        (vec!["oracle", "--input", &big], 1),
        (vec!["oracle", "--input", &good], 1),
        (vec!["ideal", "--input", &good, "--vector", "1,2,3"], 1),
        (vec!["quotient", "--input", &good, "--ideal-basis", &not_ideal], 1),
        (vec!["analyze", "--input", &good, "--field", "prime"], 1),
    ];
    for (args, want) in &cases {
        let (code, _, err) = run_cli(args);
        c.check(code == *want, || format!("{args:?}: exit {code}, want {want} ({})", err.trim()));
    }
    c.eq(app::exit_code(&evolalg_core::Error::Internal("x".into())), 2, "internal failure exit code");
    c.eq(app::exit_code(&evolalg_core::Error::NotAnIdeal), 1, "validation exit code");

    let (_, first, _) = run_cli(&["graph", "--input", &good, "--dot", "-"]);
    let (_, second, _) = run_cli(&["graph", "--input", &good, "--dot", "-"]);
    c.check(!first.is_empty() && first == second, || "DOT output differs between runs".into());
    c.eq(std::fs::read_to_string(&dot_path).unwrap(), first, "DOT file matches stdout");

    let (_, j1, _) = run_cli(&["analyze", "--input", &five, "--json"]);
    let (_, j2, _) = run_cli(&["analyze", "--input", &five, "--json"]);
    c.eq(&j1, &j2, "JSON report byte-stable");
    let schema: serde_json::Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for path in [&good, &five, &big] {
        let (code, body, _) = run_cli(&["analyze", "--input", path, "--json"]);
        let report: serde_json::Value = serde_json::from_str(&body).unwrap();
        let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
        c.check(code == 0 && errors.is_empty(), || format!("schema violations: {errors:?}"));
    }

    // The real binary, so process exit statuses are observed too.
    let bin = env!("CARGO_BIN_EXE_evolalg");
    for (args, want) in [(vec!["simple", "--input", good.as_str()], 0), (vec!["simple", "--input", missing.as_str()], 1)] {
        let status = Command::new(bin).args(&args).output().unwrap().status.code();
        c.eq(status, Some(want), &format!("process exit for {args:?}"));
    }
}

type Criterion = (&'static str, fn(&mut Checker));

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("worked-example golden suite", golden_examples),
        ("oracle equivalence over F2/F3", oracle_equivalence),
        ("decomposition validity and permutation uniqueness", decomposition_validity),
        ("degenerate five-dimensional regression", degenerate_regression),
        ("generated ideals and multiplication layers", generated_ideals),
        ("annihilator/radical tower", radical_tower),
        ("classical nondegeneracy chain", classical_chain),
        ("algebra laws and power-associativity witnesses", algebra_laws),
        ("document, DOT and exit-code contract", cli_contract),
    ];
    let total = criteria.len();
    let mut failed = 0;
    panic::set_hook(Box::new(|_| {}));
    for (k, (name, f)) in criteria.into_iter().enumerate() {
        let mut c = Checker::default();
        let result = panic::catch_unwind(AssertUnwindSafe(|| f(&mut c)));
        let line = match result {
            Err(p) => {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL [{}/{total}] {name}: panicked after {} checks: {msg}", k + 1, c.checks)
            }
            Ok(()) if c.failures.is_empty() => {
                format!("PASS [{}/{total}] {name} ({} checks)", k + 1, c.checks)
            }
            Ok(()) => format!(
                "FAIL [{}/{total}] {name}: {} of {} checks failed; first: {}",
                k + 1,
                c.failures.len(),
                c.checks,
                c.failures[0]
            ),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    println!("{} of {total} criteria passed", total - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
