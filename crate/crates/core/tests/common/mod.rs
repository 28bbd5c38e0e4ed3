#![allow(dead_code)]

use evolalg_core::{Element, EvolutionAlgebra, FieldDescriptor, Matrix};
use proptest::prelude::*;

pub const Q: FieldDescriptor = FieldDescriptor::Rational;

pub fn field() -> impl Strategy<Value = FieldDescriptor> {
    prop_oneof![
        2 => Just(Q),
        1 => Just(FieldDescriptor::Prime(2)),
        1 => Just(FieldDescriptor::Prime(3)),
        1 => Just(FieldDescriptor::Prime(5)),
    ]
}

/// Mostly zeros, so the graphs have interesting structure.
pub fn entry() -> impl Strategy<Value = i64> {
    prop_oneof![3 => Just(0i64), 2 => -3i64..=3]
}

pub fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (field(), 1..=max, 1..=max).prop_flat_map(|(f, r, c)| {
        prop::collection::vec(entry(), r * c)
            .prop_map(move |v| Matrix::from_fn(f, r, c, |i, j| f.from_i64(v[i * c + j])))
    })
}

pub fn square_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (field(), 1..=max).prop_flat_map(|(f, n)| {
        prop::collection::vec(entry(), n * n)
            .prop_map(move |v| Matrix::from_fn(f, n, n, |i, j| f.from_i64(v[i * n + j])))
    })
}

pub fn algebra(max: usize) -> impl Strategy<Value = EvolutionAlgebra> {
    square_matrix(max).prop_map(|m| EvolutionAlgebra::new(m).unwrap())
}

pub fn element(a: &EvolutionAlgebra) -> impl Strategy<Value = Element> {
    let f = a.field();
    prop::collection::vec(-3i64..=3, a.dim()).prop_map(move |v| Element::from_i64(f, &v))
}

pub fn with_elements(max: usize, k: usize) -> impl Strategy<Value = (EvolutionAlgebra, Vec<Element>)> {
    algebra(max).prop_flat_map(move |a| {
        let xs = prop::collection::vec(element(&a), k);
        (Just(a), xs)
    })
}

pub fn with_permutation(max: usize) -> impl Strategy<Value = (EvolutionAlgebra, Vec<usize>)> {
    algebra(max).prop_flat_map(|a| {
        let order: Vec<usize> = (0..a.dim()).collect();
        (Just(a), Just(order).prop_shuffle())
    })
}
