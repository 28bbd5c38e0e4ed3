//! Exhaustive verifiers over small prime fields.
//!
//! Nothing here uses the graph: ideals are found by enumerating every subspace
//! in reduced echelon form and testing `S A ⊆ S` directly, and absorption is
//! checked by running through every vector of `F_p^n`.

use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::linalg::Subspace;

/// Cap on `p^n`, the number of vectors an enumeration may touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_vectors: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_vectors: 4096 }
    }
}

impl EnumerationBudget {
    pub fn new(max_vectors: u64) -> Self {
        EnumerationBudget { max_vectors }
    }

    /// Returns `p` after checking that `p^n` fits.
    fn admit(&self, a: &EvolutionAlgebra) -> Result<u32> {
        let p = match a.field() {
            FieldDescriptor::Prime(p) => p,
            FieldDescriptor::Rational => return Err(Error::RequiresPrimeField),
        };
        let needed = (0..a.dim()).try_fold(1u128, |acc, _| acc.checked_mul(p as u128));
        match needed {
            Some(v) if v <= self.max_vectors as u128 => Ok(p),
            Some(v) => Err(Error::BudgetExceeded { needed: v, budget: self.max_vectors }),
            None => Err(Error::BudgetExceeded { needed: u128::MAX, budget: self.max_vectors }),
        }
    }
}

fn residue(field: FieldDescriptor, v: u32) -> Scalar {
    field.from_i64(v as i64)
}

/// Every vector of `F_p^n`, in lexicographic order of coordinates.
fn all_vectors(field: FieldDescriptor, p: u32, n: usize) -> Vec<Vec<Scalar>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..p).map(move |d| {
                    let mut v = prefix.clone();
                    v.push(residue(field, d));
                    v
                })
            })
            .collect();
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            go(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All subspaces of `F_p^n`, each produced once from its reduced echelon basis.
pub fn enumerate_subspaces(a: &EvolutionAlgebra, budget: EnumerationBudget) -> Result<Vec<Subspace>> {
    let p = budget.admit(a)?;
    let field = a.field();
    let n = a.dim();
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // Free slots: row r, column c > pivots[r] that is not a pivot column.
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            for fill in all_vectors(field, p, free.len()) {
                let mut rows: Vec<Vec<Scalar>> = pivots
                    .iter()
                    .map(|&pc| {
                        let mut row = vec![field.zero(); n];
                        row[pc] = field.one();
                        row
                    })
                    .collect();
                for (&(r, c), v) in free.iter().zip(fill) {
                    rows[r][c] = v;
                }
                out.push(Subspace::from_vectors(field, n, &rows)?);
            }
        }
    }
    Ok(out)
}

fn closed_under_basis_products(a: &EvolutionAlgebra, s: &Subspace) -> Result<bool> {
    for v in s.basis() {
        let v = Element::new(v.clone());
        for i in 0..a.dim() {
            if !s.contains(a.multiply(&v, &a.basis_element(i)?)?.coords())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every ideal of `A`, in the enumeration order of [`enumerate_subspaces`].
pub fn enumerate_ideals(a: &EvolutionAlgebra, budget: EnumerationBudget) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for s in enumerate_subspaces(a, budget)? {
        if closed_under_basis_products(a, &s)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// `{ x : x A ⊆ I }` by testing every vector of `F_p^n`.
pub fn absorption_by_enumeration(
    a: &EvolutionAlgebra,
    ideal: &Subspace,
    budget: EnumerationBudget,
) -> Result<Subspace> {
    let p = budget.admit(a)?;
    let field = a.field();
    let n = a.dim();
    let mut hits = Vec::new();
    for x in all_vectors(field, p, n) {
        let xe = Element::new(x);
        let mut inside = true;
        for i in 0..n {
            if !ideal.contains(a.multiply(&xe, &a.basis_element(i)?)?.coords())? {
                inside = false;
                break;
            }
        }
        if inside {
            hits.push(xe.into_coords());
        }
    }
    Subspace::from_vectors(field, n, &hits)
}

/// Intersection of all ideals having the absorption property.
pub fn radical_oracle(a: &EvolutionAlgebra, budget: EnumerationBudget) -> Result<Subspace> {
    let mut rad = Subspace::full(a.field(), a.dim());
    for ideal in enumerate_ideals(a, budget)? {
        if absorption_by_enumeration(a, &ideal, budget)?.is_subset_of(&ideal)? {
            rad = rad.intersection(&ideal)?;
        }
    }
    Ok(rad)
}

/// `A^2 ≠ 0` and the only ideals are `0` and `A`.
pub fn simple_oracle(a: &EvolutionAlgebra, budget: EnumerationBudget) -> Result<bool> {
    let ideals = enumerate_ideals(a, budget)?;
    let nonzero_product = (0..a.dim()).any(|i| !a.square_is_zero(i));
    Ok(nonzero_product && ideals.iter().all(|s| s.is_zero() || s.is_full()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalVerdict {
    /// No nonzero ideal `I` with `I^2 = 0`.
    pub semiprime: bool,
    /// `a(Aa) = 0` only for `a = 0`.
    pub classically_nondegenerate: bool,
}

pub fn classical_checks(a: &EvolutionAlgebra, budget: EnumerationBudget) -> Result<ClassicalVerdict> {
    let p = budget.admit(a)?;
    let n = a.dim();

    let mut semiprime = true;
    'ideals: for ideal in enumerate_ideals(a, budget)? {
        if ideal.is_zero() {
            continue;
        }
        let basis: Vec<Element> = ideal.basis().iter().cloned().map(Element::new).collect();
        for u in &basis {
            for v in &basis {
                if !a.multiply(u, v)?.is_zero() {
                    continue 'ideals;
                }
            }
        }
        semiprime = false;
        break;
    }

    // a(Aa) is spanned by the a(e_j a).
    let mut classically_nondegenerate = true;
    for x in all_vectors(a.field(), p, n) {
        let x = Element::new(x);
        if x.is_zero() {
            continue;
        }
        let mut kills = true;
        for j in 0..n {
            let ej_x = a.multiply(&a.basis_element(j)?, &x)?;
            if !a.multiply(&x, &ej_x)?.is_zero() {
                kills = false;
                break;
            }
        }
        if kills {
            classically_nondegenerate = false;
            break;
        }
    }
    Ok(ClassicalVerdict { semiprime, classically_nondegenerate })
}

/// Fast algorithms set against their brute-force counterparts on one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub ideal_count: usize,
    pub radical_fast: Subspace,
    pub radical_oracle: Subspace,
    pub simple_fast: bool,
    pub simple_oracle: bool,
    /// Enumerated ideals whose absorption verdicts differ between the closed
    /// form and exhaustive vector enumeration.
    pub absorption_mismatches: usize,
    pub classical: ClassicalVerdict,
    pub nondegenerate: bool,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.radical_fast == self.radical_oracle
            && self.simple_fast == self.simple_oracle
            && self.absorption_mismatches == 0
            && (!self.classical.classically_nondegenerate || self.classical.semiprime)
            && (!self.classical.semiprime || self.nondegenerate)
    }
}

pub fn cross_check(a: &EvolutionAlgebra, budget: EnumerationBudget) -> Result<CrossCheck> {
    use crate::ideals;
    let all = enumerate_ideals(a, budget)?;
    let mut absorption_mismatches = 0;
    for s in &all {
        let fast = ideals::absorption_preimage(a, &ideals::Ideal::new(a, s.clone())?)?;
        if fast != absorption_by_enumeration(a, s, budget)? {
            absorption_mismatches += 1;
        }
    }
    Ok(CrossCheck {
        ideal_count: all.len(),
        radical_fast: ideals::radical(a).into_carrier(),
        radical_oracle: radical_oracle(a, budget)?,
        simple_fast: crate::decompose::is_simple(a).simple,
        simple_oracle: simple_oracle(a, budget)?,
        absorption_mismatches,
        classical: classical_checks(a, budget)?,
        nondegenerate: ideals::is_nondegenerate(a),
    })
}
