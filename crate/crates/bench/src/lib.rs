//! Deterministic algebra families used by the benchmarks.

use evolalg_core::{EvolutionAlgebra, FieldDescriptor, Matrix};

/// `blocks` disjoint directed cycles of length `len`, each with a loop on its
/// first vertex, interleaved so that blocks are not contiguous in the basis.
pub fn interleaved_cycles(field: FieldDescriptor, blocks: usize, len: usize) -> EvolutionAlgebra {
    let n = blocks * len;
    let mut m = Matrix::zeros(field, n, n);
    let at = |b: usize, t: usize| t * blocks + b;
    for b in 0..blocks {
        for t in 0..len {
            let (i, j) = (at(b, t), at(b, (t + 1) % len));
            m.set(j, i, field.from_i64((t + 2) as i64));
        }
        m.set(at(b, 0), at(b, 0), field.one());
    }
    EvolutionAlgebra::new(m).expect("square structure matrix")
}

/// A chain `e_1 -> e_2 -> ... -> e_n` ending in a sink, so the radical is the
/// whole algebra and is reached only after `n` refinement rounds.
pub fn nilpotent_chain(field: FieldDescriptor, n: usize) -> EvolutionAlgebra {
    let m = Matrix::from_fn(field, n, n, |r, c| if r == c + 1 { field.one() } else { field.zero() });
    EvolutionAlgebra::new(m).expect("square structure matrix")
}

/// A dense matrix with a fixed pseudo-random zero pattern.
pub fn dense(field: FieldDescriptor, n: usize) -> EvolutionAlgebra {
    let m = Matrix::from_fn(field, n, n, |r, c| {
        let h = (r * 31 + c * 17 + r * c) % 7;
        if h < 2 {
            field.zero()
        } else {
            field.from_i64(h as i64 - 3)
        }
    });
    EvolutionAlgebra::new(m).expect("square structure matrix")
}
