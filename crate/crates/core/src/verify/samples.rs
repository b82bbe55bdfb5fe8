//! Graph samples for the suites: exhaustive small graphs, seeded random
//! graphs, gap-free bipartite graphs and multiplied family members.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::catalog::{self, enumerate_family, multipliable_vertices, FamilyFilter};
use crate::graph::{are_isomorphic, bits, multiply_vertices, Replacement, SimpleGraph};
use crate::structure::classification_base;
use crate::Result;

/// Edgeless graph on `a, b, …`.
fn letters(n: usize) -> SimpleGraph {
    SimpleGraph::with_vertices(catalog::path(n).labels().to_vec()).expect("distinct")
}

/// The graph on vertices `a, b, …` whose edges are the pairs `i < j` (in
/// lexicographic order) selected by the bits of `mask`.
pub fn graph_from_pairs(n: usize, mask: u64) -> SimpleGraph {
    let mut g = letters(n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                g.add_edge_idx(i, j).expect("simple");
            }
            k += 1;
        }
    }
    g
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(|m| graph_from_pairs(n, m)).collect()
}

/// One graph per isomorphism class on `n` vertices.
pub fn iso_classes(n: usize) -> Vec<SimpleGraph> {
    let mut out: Vec<SimpleGraph> = Vec::new();
    let mut buckets: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
    for g in all_graphs(n) {
        let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        let b = buckets.entry((g.edge_count(), degs)).or_default();
        if !b.iter().any(|&i| are_isomorphic(&out[i], &g).is_some()) {
            b.push(out.len());
            out.push(g);
        }
    }
    out
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimpleGraph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mask = (0..pairs).fold(0u64, |m, k| if rng.gen_bool(p) { m | 1 << k } else { m });
    graph_from_pairs(n, mask)
}

/// Random bipartite graph with nested neighbourhoods on one side, which is
/// exactly the shape of a gap-free bipartite graph. Vertices are shuffled.
pub fn chain_graph<R: Rng>(rng: &mut R, max_n: usize) -> SimpleGraph {
    let n = rng.gen_range(2..=max_n.max(2));
    let left = rng.gen_range(1..n);
    let right = n - left;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = letters(n);
    for l in 0..left {
        let reach = rng.gen_range(0..=right);
        for r in 0..reach {
            g.add_edge_idx(order[l], order[left + r]).expect("simple");
        }
    }
    g
}

/// A random multiplication of a classification base by at most
/// `max_multiplicity` copies per triangle-free vertex, with the plan used.
pub fn admissible_multiplication<R: Rng>(
    rng: &mut R,
    base: &str,
    max_multiplicity: usize,
) -> Result<(SimpleGraph, BTreeMap<String, usize>)> {
    let g = classification_base(base)?;
    let mut plan = BTreeMap::new();
    for v in bits(multipliable_vertices(&g)) {
        let k = rng.gen_range(1..=max_multiplicity.max(1));
        if k > 1 {
            plan.insert(g.label(v).to_string(), k);
        }
    }
    let reps = plan
        .iter()
        .map(|(v, &k)| (v.clone(), Replacement::Copies(k)))
        .collect();
    Ok((multiply_vertices(&g, &reps)?, plan))
}

/// `count` non-trivial multiplied members (multiplicity at most 2) of the
/// given bases, taken round-robin so every base contributes.
pub fn family_sample(bases: &[&str], count: usize) -> Result<Vec<(String, SimpleGraph)>> {
    let mut pools: Vec<Vec<(String, SimpleGraph)>> = Vec::new();
    for &b in bases {
        let members = enumerate_family(b, 2, FamilyFilter::GapDiamondFree)?;
        pools.push(
            members
                .into_iter()
                .filter(|m| !m.plan.is_empty())
                .map(|m| {
                    let plan: Vec<String> =
                        m.plan.iter().map(|(v, k)| format!("{v}x{k}")).collect();
                    (format!("{b}[{}]", plan.join(",")), m.graph)
                })
                .collect(),
        );
    }
    let mut out = Vec::new();
    let mut round = 0;
    while out.len() < count && pools.iter().any(|p| p.len() > round) {
        for p in &pools {
            if out.len() < count {
                if let Some(m) = p.get(round) {
                    out.push(m.clone());
                }
            }
        }
        round += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{contains_induced, is_bipartite, Pattern};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_graph_counts() {
        assert_eq!(all_graphs(4).len(), 64);
        // OEIS A000088
        let counts: Vec<usize> = (1..=5).map(|n| iso_classes(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
    }

    #[test]
    fn chain_graphs_are_gap_free_bipartite() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let g = chain_graph(&mut rng, 8);
            assert!(is_bipartite(&g).0 && contains_induced(&g, Pattern::Gap).is_none());
        }
    }

    #[test]
    fn family_sample_is_round_robin() {
        let s = family_sample(&["G_1", "G_2"], 3).unwrap();
        assert_eq!(s.len(), 3);
        assert!(
            s[0].0.starts_with("G_1[") && s[1].0.starts_with("G_2[") && s[2].0.starts_with("G_1[")
        );
    }
}
