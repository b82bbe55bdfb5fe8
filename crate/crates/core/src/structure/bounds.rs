//! Regularity shortcuts: the colon-ideal sufficiency test for linear powers
//! and the recursive star bound.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::dominating_max_cliques;
use crate::betti::{
    froberg_linear_check, regularity, regularity_exceeds, FieldSpec, RegularityWitness,
};
use crate::even::{colon_graph, SFoldProduct};
use crate::graph::{bit, bits, clique_number, contains_induced, Pattern, SimpleGraph, VertexSet};
use crate::ideal::edge_ideal;
use crate::Result;

/// `reg(I^{s+1} : m)` for one generator `m` of `I^s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonCase {
    pub s: u32,
    pub generator: String,
    /// Settled by a chordal complement of the colon graph.
    pub froberg: bool,
    pub regularity_at_most_2: bool,
    /// Homology forcing regularity above 2, when found.
    pub witness: Option<RegularityWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SufficiencyVerdict {
    pub s_max: u32,
    pub base_regularity: i64,
    pub cases: Vec<ColonCase>,
    /// `reg(I) ≤ 4` and every colon has regularity 2, for `s ≤ s_max`.
    pub certified: bool,
}

impl SufficiencyVerdict {
    pub fn offending(&self) -> impl Iterator<Item = &ColonCase> {
        self.cases.iter().filter(|c| !c.regularity_at_most_2)
    }

    /// Share of colon cases settled without homology.
    pub fn froberg_fraction(&self) -> f64 {
        if self.cases.is_empty() {
            return 1.0;
        }
        self.cases.iter().filter(|c| c.froberg).count() as f64 / self.cases.len() as f64
    }
}

/// Checks the hypotheses of the colon criterion for linear powers up to
/// `s_max`: `reg(I(G)) ≤ 4` and `reg(I^{s+1} : m) ≤ 2` for every minimal
/// generator `m` of `I^s`. Each colon is first tried through its colon graph
/// and Fröberg; otherwise the colon ideal itself goes to the homology oracle.
/// A certificate covers only the powers that were checked.
pub fn banerjee_sufficiency_check(g: &SimpleGraph, s_max: u32) -> Result<SufficiencyVerdict> {
    if g.edge_count() == 0 {
        return Ok(SufficiencyVerdict {
            s_max,
            base_regularity: 1,
            cases: Vec::new(),
            certified: true,
        });
    }
    let i = edge_ideal(g);
    let base_regularity = if froberg_linear_check(g)? {
        2
    } else {
        regularity(&i, FieldSpec::RATIONALS)?
    };
    let mut cases = Vec::new();
    for s in 1..=s_max {
        let next = i.power(s + 1);
        let gens = i.power(s);
        let found: Vec<ColonCase> = gens
            .gens()
            .par_iter()
            .map(|m| {
                let product = SFoldProduct::from_monomial(g, m)?;
                let cg = colon_graph(g, &product)?;
                if froberg_linear_check(&cg)? {
                    return Ok(ColonCase {
                        s,
                        generator: m.to_string(),
                        froberg: true,
                        regularity_at_most_2: true,
                        witness: None,
                    });
                }
                let witness = regularity_exceeds(&next.colon(m), 2, FieldSpec::RATIONALS)?;
                Ok(ColonCase {
                    s,
                    generator: m.to_string(),
                    froberg: false,
                    regularity_at_most_2: witness.is_none(),
                    witness,
                })
            })
            .collect::<Result<_>>()?;
        cases.extend(found);
    }
    let certified = base_regularity <= 4 && cases.iter().all(|c| c.regularity_at_most_2);
    Ok(SufficiencyVerdict {
        s_max,
        base_regularity,
        cases,
        certified,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarStep {
    pub vertices: Vec<String>,
    /// Vertex split off; absent at base cases.
    pub x: Option<String>,
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarBound {
    pub bound: i64,
    /// Every subgraph visited, in the order its bound was settled.
    pub trace: Vec<StarStep>,
}

/// Upper bound on `reg(I(G))` from `reg(I(G)) ≤ max{reg(I(G − st x)) + 1, reg(I(G − x))}`.
///
/// `x` is the least-labelled vertex of a dominating maximum clique when the
/// subgraph (without isolated vertices) is gap-free with `ω ≥ 3`, otherwise
/// a vertex of maximum degree. An edgeless subgraph has bound 1 and one with
/// chordal complement has bound 2.
pub fn reg_upper_bound_via_star(g: &SimpleGraph) -> StarBound {
    let mut memo = HashMap::new();
    let mut trace = Vec::new();
    let bound = star(g, g.all(), &mut memo, &mut trace);
    StarBound { bound, trace }
}

fn star(
    g: &SimpleGraph,
    mask: VertexSet,
    memo: &mut HashMap<VertexSet, i64>,
    trace: &mut Vec<StarStep>,
) -> i64 {
    // isolated vertices do not change the edge ideal
    let mask = bits(mask)
        .filter(|&v| g.neighbors(v) & mask != 0)
        .fold(0, |m, v| m | bit(v));
    if let Some(&b) = memo.get(&mask) {
        return b;
    }
    let h = g.induced_by_mask(mask);
    let labels = || h.labels().to_vec();
    let (bound, x) = if mask == 0 {
        (1, None)
    } else if froberg_linear_check(&h).expect("has edges") {
        (2, None)
    } else {
        let local = pick_vertex(&h);
        let x = bits(mask).nth(local).expect("vertex of the subgraph");
        let closed = g.neighbors(x) & mask | bit(x);
        let star_part = star(g, mask & !closed, memo, trace) + 1;
        let rest = star(g, mask & !bit(x), memo, trace);
        (star_part.max(rest), Some(h.label(local).to_string()))
    };
    memo.insert(mask, bound);
    trace.push(StarStep {
        vertices: labels(),
        x,
        bound,
    });
    bound
}

fn pick_vertex(h: &SimpleGraph) -> usize {
    if clique_number(h) >= 3 && contains_induced(h, Pattern::Gap).is_none() {
        if let Some(&k) = dominating_max_cliques(h).first() {
            return bits(k)
                .min_by(|&a, &b| h.label(a).cmp(h.label(b)))
                .expect("nonempty clique");
        }
    }
    (0..h.n())
        .max_by(|&a, &b| {
            h.degree(a)
                .cmp(&h.degree(b))
                .then_with(|| h.label(b).cmp(h.label(a)))
        })
        .expect("nonempty graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ideal::Monomial;

    #[test]
    fn star_bound_on_small_graphs() {
        assert_eq!(reg_upper_bound_via_star(&catalog::path(3)).bound, 2);
        assert_eq!(reg_upper_bound_via_star(&catalog::complete(3)).bound, 2);
        assert_eq!(reg_upper_bound_via_star(&SimpleGraph::new()).bound, 1);
        // P3 through the recursion: a graph that is not co-chordal, built of P3s
        let c5 = reg_upper_bound_via_star(&catalog::cycle(5));
        assert_eq!(c5.bound, 3);
        assert!(c5.trace.iter().any(|s| s.x.is_some()));
    }

    #[test]
    fn star_bound_at_most_three_on_indexed_graphs() {
        for e in catalog::indexed_entries()
            .iter()
            .filter(|e| e.flags.gap_free)
        {
            let b = reg_upper_bound_via_star(&e.graph).bound;
            assert!(b <= 3, "{}: {b}", e.name);
        }
    }

    #[test]
    fn single_edge_is_certified() {
        let v = banerjee_sufficiency_check(&catalog::path(2), 3).unwrap();
        assert!(v.certified);
        assert_eq!(v.base_regularity, 2);
        assert!(v.cases.iter().all(|c| c.froberg));
    }

    #[test]
    fn g0_is_inconclusive_at_y_a2() {
        let g = catalog::get("G_0").unwrap();
        let v = banerjee_sufficiency_check(&g, 1).unwrap();
        assert!(!v.certified);
        let bad: Vec<&str> = v.offending().map(|c| c.generator.as_str()).collect();
        let ya2 = Monomial::from_labels(&["y", "a_2"]).to_string();
        assert!(bad.contains(&ya2.as_str()), "{bad:?}");
        assert!(v.offending().all(|c| c.witness.is_some()));
    }

    #[test]
    fn g1_is_certified_to_square() {
        let v = banerjee_sufficiency_check(&catalog::get("G_1").unwrap(), 2).unwrap();
        assert!(v.certified, "{:?}", v.offending().collect::<Vec<_>>());
        assert!(v.base_regularity <= 3);
    }
}
