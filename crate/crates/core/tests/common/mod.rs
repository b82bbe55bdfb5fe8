#![allow(dead_code)]

use proptest::prelude::*;
use regulab::graph::SimpleGraph;
use regulab::ideal::{minimalize, Monomial, MonomialIdeal, Variable};
use regulab::verify::graph_from_pairs;

/// Labelled graphs on `min..=max` vertices, every edge set equally likely.
pub fn graphs(min: usize, max: usize) -> impl Strategy<Value = SimpleGraph> {
    (min..=max, any::<u64>()).prop_map(|(n, mask)| {
        let pairs = n * n.saturating_sub(1) / 2;
        graph_from_pairs(n, mask & ((1u64 << pairs) - 1))
    })
}

pub fn monomials(vars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, vars).prop_map(|exps| {
        Monomial::from_factors(exps.into_iter().enumerate().map(|(k, e)| {
            let name = ((b'a' + k as u8) as char).to_string();
            (Variable::new(name, 0), e)
        }))
    })
}

/// Nonzero proper monomial ideals in `vars` variables.
pub fn ideals(vars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomials(vars, max_exp), 1..=max_gens)
        .prop_map(minimalize)
        .prop_filter("proper", |i| !i.is_unit())
}

/// Brute-force induced-subgraph test on the vertex subset `mask`.
pub fn induced_is(g: &SimpleGraph, mask: u64, pred: impl Fn(&SimpleGraph) -> bool) -> bool {
    pred(&g.induced_by_mask(mask))
}

pub fn is_cycle(h: &SimpleGraph) -> bool {
    h.n() >= 3 && h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
}
