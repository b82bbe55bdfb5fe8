//! Dominating cliques, recognition of multiplied five-cycles, the
//! classification of connected (gap, diamond)-free graphs with an induced
//! `C5`, and executable checks of the structural lemmas built on them.

mod bounds;
mod lemmas;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::{self, mask_labels};
use crate::graph::{
    all_isomorphisms, bit, bits, clique_number, contains_induced, is_bipartite, max_cliques,
    Pattern, SimpleGraph, VertexSet,
};
use crate::{Error, Result};

pub use bounds::{
    banerjee_sufficiency_check, reg_upper_bound_via_star, ColonCase, StarBound, StarStep,
    SufficiencyVerdict,
};
pub use lemmas::{
    check_colon_lemmas, check_computer_aided_lemma, check_structure_lemmas, ClauseCheck,
    CycleEdgeCheck, CycleEdgeReport, Status, StructureReport,
};

fn dominates(g: &SimpleGraph, k: VertexSet) -> bool {
    bits(g.all() & !k).all(|v| g.neighbors(v) & k != 0)
}

fn sorted_labels(g: &SimpleGraph, m: VertexSet) -> Vec<String> {
    let mut l = mask_labels(g, m);
    l.sort();
    l
}

/// Maximum cliques that dominate `g`, least first by sorted labels.
pub(crate) fn dominating_max_cliques(g: &SimpleGraph) -> Vec<VertexSet> {
    let mut found: Vec<VertexSet> = max_cliques(g)
        .into_iter()
        .filter(|&k| dominates(g, k))
        .collect();
    found.sort_by_cached_key(|&k| sorted_labels(g, k));
    found
}

/// A maximum clique with every other vertex adjacent to it.
///
/// Requires `g` gap-free with no isolated vertices and `ω(g) ≥ 3`; such a
/// clique then always exists, so `None` is a counterexample. Among several,
/// the least by sorted labels is returned.
pub fn dominating_clique(g: &SimpleGraph) -> Result<Option<VertexSet>> {
    if contains_induced(g, Pattern::Gap).is_some() {
        return Err(Error::Precondition("graph has a gap".into()));
    }
    if g.isolated() != 0 {
        return Err(Error::Precondition("graph has isolated vertices".into()));
    }
    if clique_number(g) < 3 {
        return Err(Error::Precondition("clique number is below 3".into()));
    }
    Ok(dominating_max_cliques(g).first().copied())
}

/// Partition of the vertices into false-twin classes, in order of each
/// class's first vertex.
fn twin_classes(g: &SimpleGraph) -> Vec<VertexSet> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for v in 0..g.n() {
        if seen & bit(v) != 0 {
            continue;
        }
        let class = bits(g.all())
            .filter(|&w| g.neighbors(w) == g.neighbors(v))
            .fold(0, |m, w| m | bit(w));
        seen |= class;
        out.push(class);
    }
    out
}

/// True when every member is `name` or a copy `name^k`.
fn class_named(g: &SimpleGraph, class: VertexSet, name: &str) -> bool {
    bits(class).all(|v| {
        let l = g.label(v);
        l == name
            || l.rsplit_once('^').is_some_and(|(s, k)| {
                s == name && !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit())
            })
    })
}

/// How `g` arises from `base` by multiplying vertices.
#[derive(Clone, Debug)]
struct Multiplication {
    /// Multiplicity of every base vertex.
    multiplicities: BTreeMap<String, usize>,
    /// Base vertex of each vertex of `g`.
    witness: BTreeMap<String, String>,
}

/// Matches the twin quotient of `g` against `base`. Among all isomorphisms
/// the one agreeing with the most vertex names is taken (ties broken by the
/// multiplicity map), so multiplied graphs map back onto the labels they
/// were built from.
fn match_quotient(
    g: &SimpleGraph,
    classes: &[VertexSet],
    base: &SimpleGraph,
) -> Option<Multiplication> {
    if classes.len() != base.n() {
        return None;
    }
    let reps = classes
        .iter()
        .fold(0u64, |m, c| m | bit(c.trailing_zeros() as usize));
    let quotient = g.induced_by_mask(reps);
    // quotient vertex k is the k-th class in index order, as are `classes`
    let best = all_isomorphisms(&quotient, base)
        .into_iter()
        .map(|iso| {
            let agree = classes
                .iter()
                .zip(&iso)
                .filter(|(&c, &b)| class_named(g, c, base.label(b)))
                .count();
            let mults: BTreeMap<String, usize> = classes
                .iter()
                .zip(&iso)
                .map(|(&c, &b)| (base.label(b).to_string(), c.count_ones() as usize))
                .collect();
            (agree, mults, iso)
        })
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)))?;
    let (_, multiplicities, iso) = best;
    let mut witness = BTreeMap::new();
    for (&c, &b) in classes.iter().zip(&iso) {
        for v in bits(c) {
            witness.insert(g.label(v).to_string(), base.label(b).to_string());
        }
    }
    Some(Multiplication {
        multiplicities,
        witness,
    })
}

/// Multiplicities `m` with `g ≅ multiply(C5, m)`, keyed by the labels
/// `u1..u5` of the catalog five-cycle.
///
/// Requires `g` gap-free, triangle-free, not bipartite and without isolated
/// vertices; such a graph is always a multiplied five-cycle, so `None` is a
/// counterexample.
pub fn c5_multiplication_recognizer(g: &SimpleGraph) -> Result<Option<BTreeMap<String, usize>>> {
    if contains_induced(g, Pattern::Gap).is_some() {
        return Err(Error::Precondition("graph has a gap".into()));
    }
    if clique_number(g) != 2 {
        return Err(Error::Precondition("clique number is not 2".into()));
    }
    if is_bipartite(g).0 {
        return Err(Error::Precondition("graph is bipartite".into()));
    }
    if g.isolated() != 0 {
        return Err(Error::Precondition("graph has isolated vertices".into()));
    }
    Ok(match_quotient(g, &twin_classes(g), &catalog::cycle(5)).map(|m| m.multiplicities))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    /// Catalog name of the base graph.
    pub base: String,
    /// Multiplicity of every base vertex.
    pub multiplicities: BTreeMap<String, usize>,
    /// Base vertex that each input vertex collapses to.
    pub witness: BTreeMap<String, String>,
    /// Later catalog bases isomorphic to the matched one.
    pub also_isomorphic_to: Vec<String>,
    /// Every multiplied base vertex lies in no triangle of the base.
    pub multiplied_triangle_free: bool,
}

impl ClassificationResult {
    /// The entries with multiplicity above 1.
    pub fn plan(&self) -> BTreeMap<String, usize> {
        self.multiplicities
            .iter()
            .filter(|(_, &k)| k > 1)
            .map(|(v, &k)| (v.clone(), k))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Classification {
    Classified(ClassificationResult),
    NoInducedC5,
    NotGapDiamondFree {
        pattern: String,
        vertices: Vec<String>,
    },
    /// A connected (gap, diamond)-free graph with an induced `C5` whose twin
    /// quotient matches no base: a counterexample to the classification.
    Unmatched {
        quotient_vertices: usize,
    },
}

/// Identifies the base graph and multiplicities of a connected
/// (gap, diamond)-free graph containing an induced five-cycle. Bases are tried
/// in [`catalog::CLASSIFICATION_BASES`] order and the first match is returned.
pub fn classify_gap_diamond_free(g: &SimpleGraph) -> Result<Classification> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for pattern in [Pattern::Gap, Pattern::Diamond] {
        if let Some(e) = contains_induced(g, pattern) {
            return Ok(Classification::NotGapDiamondFree {
                pattern: pattern.to_string(),
                vertices: e.labels(g).into_iter().map(String::from).collect(),
            });
        }
    }
    if contains_induced(g, Pattern::Cycle(5)).is_none() {
        return Ok(Classification::NoInducedC5);
    }
    let classes = twin_classes(g);
    let bases: Vec<(&str, SimpleGraph)> = catalog::CLASSIFICATION_BASES
        .iter()
        .map(|&name| Ok((name, classification_base(name)?)))
        .collect::<Result<_>>()?;
    for (k, (name, base)) in bases.iter().enumerate() {
        let Some(m) = match_quotient(g, &classes, base) else {
            continue;
        };
        let also = bases[k + 1..]
            .iter()
            .filter(|(_, other)| {
                other.n() == base.n() && crate::graph::are_isomorphic(base, other).is_some()
            })
            .map(|(n, _)| n.to_string())
            .collect();
        let free = catalog::multipliable_vertices(base);
        let multiplied_triangle_free = m
            .multiplicities
            .iter()
            .filter(|(_, &c)| c > 1)
            .all(|(v, _)| base.index_of(v).is_some_and(|i| free & bit(i) != 0));
        return Ok(Classification::Classified(ClassificationResult {
            base: name.to_string(),
            multiplicities: m.multiplicities,
            witness: m.witness,
            also_isomorphic_to: also,
            multiplied_triangle_free,
        }));
    }
    Ok(Classification::Unmatched {
        quotient_vertices: classes.len(),
    })
}

/// A classification base as the classifier labels it: the indexed graphs
/// as in the catalog and `C5` on `u_0..u_4` like the indexed graphs.
pub fn classification_base(name: &str) -> Result<SimpleGraph> {
    if name == "C5" {
        return Ok(catalog::cycle(5)
            .relabel(|l| format!("u_{}", l[1..].parse::<usize>().expect("u1..u5") - 1))
            .expect("distinct"));
    }
    catalog::get(name)
}
