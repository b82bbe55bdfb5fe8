use std::collections::BTreeMap;

use super::{bit, bits, SimpleGraph};
use crate::{Error, Result};

/// What a vertex is replaced by in [`multiply_vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Replacement {
    /// Independent set of `k` copies named `v^1`..`v^k` (`k = 1` keeps `v`).
    Copies(usize),
    /// Arbitrary graph whose vertices all inherit `N(v)`.
    Graph(SimpleGraph),
}

/// Substitutes each planned vertex by its replacement; every new vertex is
/// adjacent to all of `N(v)`. Unplanned vertices are kept as they are.
pub fn multiply_vertices(
    g: &SimpleGraph,
    plan: &BTreeMap<String, Replacement>,
) -> Result<SimpleGraph> {
    for (v, r) in plan {
        g.require(v)?;
        if *r == Replacement::Copies(0) {
            return Err(Error::ZeroMultiplicity(v.clone()));
        }
    }
    // Substitute labels must not collide with surviving host labels.
    for i in 0..g.n() {
        if let Some(Replacement::Graph(f)) = plan.get(g.label(i)) {
            if let Some(l) = f
                .labels()
                .iter()
                .find(|l| g.index_of(l).is_some_and(|j| j != i))
            {
                return Err(Error::LabelClash(l.clone()));
            }
        }
    }
    let mut out = SimpleGraph::new();
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(g.n());
    for i in 0..g.n() {
        let label = g.label(i);
        let ids = match plan.get(label) {
            None | Some(Replacement::Copies(1)) => vec![out.add_vertex(label)?],
            Some(Replacement::Copies(k)) => (1..=*k)
                .map(|c| out.add_vertex(format!("{label}^{c}")))
                .collect::<Result<Vec<_>>>()?,
            Some(Replacement::Graph(f)) => {
                let ids = f
                    .labels()
                    .iter()
                    .map(|l| match out.add_vertex(l.clone()) {
                        Err(Error::DuplicateVertex(l)) => Err(Error::LabelClash(l)),
                        other => other,
                    })
                    .collect::<Result<Vec<_>>>()?;
                for (a, b) in f.edges() {
                    out.add_edge_idx(ids[a], ids[b])?;
                }
                ids
            }
        };
        blocks.push(ids);
    }
    for (i, j) in g.edges() {
        for &a in &blocks[i] {
            for &b in &blocks[j] {
                out.add_edge_idx(a, b)?;
            }
        }
    }
    Ok(out)
}

/// Merges false twins (non-adjacent vertices with equal open neighbourhoods).
///
/// Returns the twin-free base and the multiplicity of each base vertex, so that
/// multiplying the base back yields a graph isomorphic to `g`. Each class is
/// represented by its least label; if all members are copies `s^1`, `s^2`, …
/// of a common stem `s`, the base vertex is named `s`.
pub fn collapse_false_twins(g: &SimpleGraph) -> (SimpleGraph, BTreeMap<String, usize>) {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<u64> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
    for &v in &order {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = 0u64;
        for &w in &order {
            if class_of[w] == usize::MAX && g.neighbors(w) == g.neighbors(v) {
                class_of[w] = id;
                members |= bit(w);
            }
        }
        classes.push(members);
    }
    // Representatives in host order so the base keeps the original vertex order.
    let mut reps: Vec<usize> = classes
        .iter()
        .map(|&m| bits(m).min_by(|&a, &b| g.label(a).cmp(g.label(b))).unwrap())
        .collect();
    let class_mask = |rep: usize| classes[class_of[rep]];
    reps.sort_unstable();
    let keep = reps.iter().fold(0u64, |m, &r| m | bit(r));
    let base = g.induced_by_mask(keep);
    let mut names = Vec::with_capacity(reps.len());
    let mut mult = BTreeMap::new();
    for &r in &reps {
        let members: Vec<&str> = bits(class_mask(r)).map(|v| g.label(v)).collect();
        let name = common_stem(&members)
            .filter(|stem| g.index_of(stem).is_none_or(|i| class_mask(r) & bit(i) != 0))
            .filter(|stem| !mult.contains_key(stem))
            .unwrap_or_else(|| g.label(r).to_string());
        mult.insert(name.clone(), members.len());
        names.push(name);
    }
    let mut it = names.into_iter();
    let base = base
        .relabel(|_| it.next().unwrap())
        .expect("class names are distinct");
    (base, mult)
}

fn common_stem(members: &[&str]) -> Option<String> {
    if members.len() < 2 {
        return None;
    }
    let stem = members[0].rsplit_once('^')?.0;
    members
        .iter()
        .all(|m| {
            m.rsplit_once('^').is_some_and(|(s, k)| {
                s == stem && !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit())
            })
        })
        .then(|| stem.to_string())
}
