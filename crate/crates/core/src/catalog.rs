//! Named graphs: cycles, anticycles, cliques, paths, `2K2` and the graphs
//! `G_0`..`G_10`. Together with `C5`, the `G_i` other than `G_4` generate every
//! connected (gap, diamond)-free graph with an induced five-cycle by vertex
//! multiplication; `G_4` has a gap.
//!
//! The `G_i` edge lists are literal data using the labels `u_i` (the induced
//! five-cycle `u_0..u_4`), `a_i`, `b_i` and `y`. Each entry carries expected
//! flags that are re-derived from the graph when the table is first loaded;
//! a mismatch means a transcription error and aborts loudly.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use crate::graph::{
    are_isomorphic, bits, clique_number, contains_induced, is_clique, is_diamond_free, is_gap_free,
    max_cliques, multiply_vertices, triangles, Pattern, Replacement, SimpleGraph, VertexSet,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub gap_free: bool,
    pub diamond_free: bool,
    pub induced_c5: bool,
    pub clique_number: usize,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: SimpleGraph,
    pub flags: Flags,
}

const C5_EDGES: [(&str, &str); 5] = [
    ("u_0", "u_1"),
    ("u_1", "u_2"),
    ("u_2", "u_3"),
    ("u_3", "u_4"),
    ("u_4", "u_0"),
];

struct Raw {
    name: &'static str,
    extra: &'static [(&'static str, &'static str)],
    flags: Flags,
}

const fn flags(
    gap_free: bool,
    diamond_free: bool,
    induced_c5: bool,
    clique_number: usize,
) -> Flags {
    Flags {
        gap_free,
        diamond_free,
        induced_c5,
        clique_number,
    }
}

// Edges beyond the five-cycle u_0u_1u_2u_3u_4.
const INDEXED_GRAPHS: &[Raw] = &[
    Raw {
        name: "G_0",
        extra: &[
            ("a_0", "y"),
            ("y", "a_2"),
            ("a_0", "u_0"),
            ("a_0", "u_2"),
            ("a_0", "u_3"),
            ("a_2", "u_0"),
            ("a_2", "u_4"),
            ("a_2", "u_2"),
        ],
        flags: flags(true, true, true, 3),
    },
    Raw {
        name: "G_1",
        extra: &[("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3")],
        flags: flags(true, true, true, 3),
    },
    Raw {
        name: "G_2",
        extra: &[
            ("a_0", "u_0"),
            ("a_0", "u_2"),
            ("a_0", "u_3"),
            ("a_2", "u_0"),
            ("a_2", "u_4"),
            ("a_2", "u_2"),
        ],
        flags: flags(true, true, true, 3),
    },
    Raw {
        name: "G_3",
        extra: &[
            ("b_0", "u_4"),
            ("b_0", "u_1"),
            ("b_0", "b_2"),
            ("b_2", "u_1"),
            ("b_2", "u_3"),
        ],
        flags: flags(true, true, true, 3),
    },
    Raw {
        name: "G_4",
        extra: &[
            ("b_0", "u_4"),
            ("b_0", "u_1"),
            ("b_2", "u_1"),
            ("b_2", "u_3"),
            ("a_0", "u_0"),
            ("a_0", "u_2"),
            ("a_0", "u_3"),
            ("b_0", "b_2"),
        ],
        flags: flags(false, true, true, 3),
    },
    Raw {
        name: "G_5",
        extra: &[
            ("b_1", "u_0"),
            ("b_4", "u_0"),
            ("a_0", "u_0"),
            ("a_0", "u_2"),
            ("a_0", "u_3"),
            ("b_1", "u_2"),
            ("b_4", "u_3"),
            ("b_1", "b_4"),
        ],
        flags: flags(true, true, true, 3),
    },
    Raw {
        name: "G_6",
        extra: &[
            ("b_2", "u_3"),
            ("b_2", "u_1"),
            ("b_1", "u_0"),
            ("b_4", "u_0"),
            ("a_0", "u_0"),
            ("a_0", "u_2"),
            ("a_0", "u_3"),
            ("b_1", "b_2"),
            ("b_1", "u_2"),
            ("b_4", "u_3"),
            ("b_1", "b_4"),
        ],
        flags: flags(true, true, true, 3),
    },
    Raw {
        name: "G_7",
        extra: &[
            ("b_4", "u_0"),
            ("b_4", "u_3"),
            ("b_3", "u_4"),
            ("b_3", "u_2"),
            ("a_0", "u_0"),
            ("a_0", "u_2"),
            ("a_0", "u_3"),
            ("a_2", "u_0"),
            ("a_2", "u_4"),
            ("a_2", "u_2"),
            ("b_4", "b_3"),
        ],
        flags: flags(true, true, true, 3),
    },
    Raw {
        name: "G_8",
        extra: &[
            ("b_4", "u_0"),
            ("b_4", "u_3"),
            ("b_2", "a_2"),
            ("b_2", "u_1"),
            ("b_2", "u_3"),
            ("a_0", "u_0"),
            ("a_0", "u_2"),
            ("a_0", "u_3"),
            ("a_2", "u_0"),
            ("a_2", "u_4"),
            ("a_2", "u_2"),
        ],
        flags: flags(true, true, true, 3),
    },
    Raw {
        name: "G_9",
        extra: &[
            ("b_0", "u_4"),
            ("b_0", "u_1"),
            ("b_2", "a_2"),
            ("b_2", "u_1"),
            ("b_2", "u_3"),
            ("a_0", "u_0"),
            ("a_0", "u_2"),
            ("a_0", "u_3"),
            ("a_2", "u_0"),
            ("a_2", "u_4"),
            ("a_2", "u_2"),
            ("b_0", "a_0"),
            ("b_0", "b_2"),
        ],
        flags: flags(true, true, true, 3),
    },
    Raw {
        name: "G_10",
        extra: &[("a_0", "y"), ("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3")],
        flags: flags(true, true, true, 3),
    },
];

fn indexed_graph(raw: &Raw) -> SimpleGraph {
    let mut g = SimpleGraph::from_edges(&C5_EDGES).expect("static data");
    for &(u, v) in raw.extra {
        g.ensure_vertex(u).expect("static data");
        g.ensure_vertex(v).expect("static data");
        g.add_edge(u, v).expect("static data");
    }
    g
}

fn compute_flags(g: &SimpleGraph) -> Flags {
    Flags {
        gap_free: is_gap_free(g),
        diamond_free: is_diamond_free(g),
        induced_c5: contains_induced(g, Pattern::Cycle(5)).is_some(),
        clique_number: clique_number(g),
    }
}

/// A maximum clique dominating the graph with every outside vertex adjacent to
/// exactly one clique vertex.
fn has_exactly_one_dominating_clique(g: &SimpleGraph) -> bool {
    max_cliques(g)
        .into_iter()
        .any(|k| bits(g.all() & !k).all(|v| (g.neighbors(v) & k).count_ones() == 1))
}

fn load() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for raw in INDEXED_GRAPHS {
        let graph = indexed_graph(raw);
        let found = compute_flags(&graph);
        assert_eq!(
            found, raw.flags,
            "catalog self-check failed for {}",
            raw.name
        );
        if found.gap_free && found.diamond_free {
            assert!(
                has_exactly_one_dominating_clique(&graph),
                "catalog self-check failed for {}: no dominating triangle with unique attachments",
                raw.name
            );
        }
        out.push(CatalogEntry {
            name: raw.name,
            graph,
            flags: found,
        });
    }
    out
}

fn entries() -> &'static [CatalogEntry] {
    static TABLE: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    TABLE.get_or_init(load)
}

/// The indexed graphs `G_0`..`G_10` with their verified flags.
pub fn indexed_entries() -> &'static [CatalogEntry] {
    entries()
}

/// Names listed by `catalog list`.
pub fn names() -> Vec<&'static str> {
    let mut v = vec!["C5", "C6", "C6^c", "K3", "K4", "K5", "P3", "P4", "2K2"];
    v.extend(entries().iter().map(|e| e.name));
    v
}

/// Bases of the classification in the order the classifier tries them.
pub const CLASSIFICATION_BASES: [&str; 11] = [
    "C5", "G_0", "G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9", "G_10",
];

pub fn cycle(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::with_vertices((1..=n).map(|i| format!("u{i}"))).expect("distinct");
    if n >= 3 {
        for i in 0..n {
            g.add_edge_idx(i, (i + 1) % n).expect("no loops");
        }
    }
    g
}

fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{i}")
            }
        })
        .collect()
}

pub fn complete(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::with_vertices(letters(n)).expect("distinct");
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge_idx(i, j).expect("no loops");
        }
    }
    g
}

pub fn path(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::with_vertices(letters(n)).expect("distinct");
    for i in 1..n {
        g.add_edge_idx(i - 1, i).expect("no loops");
    }
    g
}

fn parse_family(name: &str, prefix: char) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    let n: usize = rest.parse().ok()?;
    (1..=crate::graph::MAX_VERTICES).contains(&n).then_some(n)
}

/// Looks up a catalog graph. Accepts `C5`/`C_5`, `C6^c`, `K3`, `P4`, `2K2`,
/// `G_0`..`G_10` (also `G0`..`G10`).
pub fn get(name: &str) -> Result<SimpleGraph> {
    let unknown = || Error::UnknownCatalogName(name.to_string());
    if name == "2K2" {
        return SimpleGraph::from_edges(&[("a", "b"), ("c", "d")]);
    }
    if let Some(base) = name.strip_suffix("^c") {
        let n = parse_family(base, 'C')
            .filter(|&n| n >= 3)
            .ok_or_else(unknown)?;
        return Ok(cycle(n).complement());
    }
    if let Some(n) = parse_family(name, 'C') {
        return if n >= 3 { Ok(cycle(n)) } else { Err(unknown()) };
    }
    if let Some(n) = parse_family(name, 'K') {
        return Ok(complete(n));
    }
    if let Some(n) = parse_family(name, 'P') {
        return Ok(path(n));
    }
    let canonical = match name.strip_prefix("G_").or_else(|| name.strip_prefix('G')) {
        Some(k) if !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()) => {
            format!("G_{}", k.parse::<u32>().map_err(|_| unknown())?)
        }
        _ => return Err(unknown()),
    };
    entries()
        .iter()
        .find(|e| e.name == canonical)
        .map(|e| e.graph.clone())
        .ok_or_else(unknown)
}

/// Vertices lying in no triangle: the only ones that may be multiplied
/// without creating a diamond.
pub fn multipliable_vertices(g: &SimpleGraph) -> VertexSet {
    let in_triangle = triangles(g).into_iter().fold(0u64, |m, t| m | t);
    g.all() & !in_triangle
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyFilter {
    All,
    GapDiamondFree,
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub graph: SimpleGraph,
    /// Multiplicity of each base vertex (only entries above 1).
    pub plan: BTreeMap<String, usize>,
}

/// All multiplications of `base` with per-vertex multiplicity at most
/// `max_multiplicity`, restricted to vertices in no triangle, deduplicated up
/// to isomorphism. Members are emitted in lexicographic order of their
/// multiplicity vectors; the first representative of each class is kept.
pub fn enumerate_family(
    base: &str,
    max_multiplicity: usize,
    filter: FamilyFilter,
) -> Result<Vec<FamilyMember>> {
    let g = get(base)?;
    let m = max_multiplicity.max(1);
    let free: Vec<usize> = bits(multipliable_vertices(&g)).collect();
    let mut counts = vec![1usize; free.len()];
    let mut out: Vec<FamilyMember> = Vec::new();
    let mut buckets: HashMap<(usize, usize, Vec<usize>), Vec<usize>> = HashMap::new();
    loop {
        let plan: BTreeMap<String, usize> = free
            .iter()
            .zip(&counts)
            .filter(|(_, &k)| k > 1)
            .map(|(&v, &k)| (g.label(v).to_string(), k))
            .collect();
        let reps = plan
            .iter()
            .map(|(v, &k)| (v.clone(), Replacement::Copies(k)))
            .collect();
        let h = multiply_vertices(&g, &reps)?;
        let keep = match filter {
            FamilyFilter::All => true,
            FamilyFilter::GapDiamondFree => is_gap_free(&h) && is_diamond_free(&h),
        };
        if keep {
            let mut degs: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
            degs.sort_unstable();
            let bucket = buckets.entry((h.n(), h.edge_count(), degs)).or_default();
            if !bucket
                .iter()
                .any(|&i| are_isomorphic(&out[i].graph, &h).is_some())
            {
                bucket.push(out.len());
                out.push(FamilyMember { graph: h, plan });
            }
        }
        // odometer over 1..=m
        let mut i = 0;
        loop {
            if i == counts.len() {
                return Ok(out);
            }
            counts[i] += 1;
            if counts[i] <= m {
                break;
            }
            counts[i] = 1;
            i += 1;
        }
    }
}

/// Triangle cliques that dominate `g`.
pub fn dominating_triangles(g: &SimpleGraph) -> Vec<VertexSet> {
    triangles(g)
        .into_iter()
        .filter(|&t| is_clique(g, t) && bits(g.all() & !t).all(|v| g.neighbors(v) & t != 0))
        .collect()
}

pub(crate) fn mask_labels(g: &SimpleGraph, m: VertexSet) -> Vec<String> {
    bits(m).map(|v| g.label(v).to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{collapse_false_twins, is_bipartite};

    #[test]
    fn sizes_of_the_indexed_graphs() {
        let expect = [
            ("G_0", 8, 13),
            ("G_1", 6, 8),
            ("G_2", 7, 11),
            ("G_3", 7, 10),
            ("G_4", 8, 13),
            ("G_5", 8, 13),
            ("G_6", 9, 16),
            ("G_7", 9, 16),
            ("G_8", 9, 16),
            ("G_9", 9, 18),
            ("G_10", 7, 9),
        ];
        for (name, n, m) in expect {
            let g = get(name).unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, m), "{name}");
        }
    }

    #[test]
    fn g4_is_the_only_indexed_graph_with_a_gap() {
        for e in indexed_entries() {
            assert_eq!(e.flags.gap_free, e.name != "G_4", "{}", e.name);
            assert!(e.flags.diamond_free && e.flags.induced_c5);
            assert_eq!(e.flags.clique_number, 3);
        }
    }

    #[test]
    fn indexed_graphs_are_twin_free_and_distinct_except_one_class() {
        // G_6, G_7 and G_8 are drawn differently but are the same graph.
        let same = ["G_6", "G_7", "G_8"];
        let gs: Vec<_> = CLASSIFICATION_BASES
            .iter()
            .map(|n| get(n).unwrap())
            .collect();
        for (i, g) in gs.iter().enumerate() {
            assert_eq!(
                collapse_false_twins(g).0.n(),
                g.n(),
                "{}",
                CLASSIFICATION_BASES[i]
            );
            for (j, h) in gs.iter().enumerate().skip(i + 1) {
                let (a, b) = (CLASSIFICATION_BASES[i], CLASSIFICATION_BASES[j]);
                let expect = same.contains(&a) && same.contains(&b);
                assert_eq!(are_isomorphic(g, h).is_some(), expect, "{a} {b}");
            }
        }
    }

    #[test]
    fn name_parsing() {
        assert_eq!(get("C_5").unwrap(), get("C5").unwrap());
        assert_eq!(get("G10").unwrap(), get("G_10").unwrap());
        assert_eq!(get("C6^c").unwrap().edge_count(), 9);
        assert_eq!(get("K3").unwrap().edge_count(), 3);
        for bad in ["G_11", "C2", "X", "G_", "C0^c", "K0"] {
            assert!(
                matches!(get(bad), Err(Error::UnknownCatalogName(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn family_of_c5_with_multiplicity_one() {
        let f = enumerate_family("C5", 1, FamilyFilter::All).unwrap();
        assert_eq!(f.len(), 1);
        assert!(are_isomorphic(&f[0].graph, &get("C5").unwrap()).is_some());
    }

    #[test]
    fn family_of_g2_only_multiplies_u1() {
        let g2 = get("G_2").unwrap();
        assert_eq!(mask_labels(&g2, multipliable_vertices(&g2)), vec!["u_1"]);
        let f = enumerate_family("G_2", 2, FamilyFilter::All).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[1].plan, BTreeMap::from([("u_1".to_string(), 2)]));
    }

    #[test]
    fn filtered_family_members_pass_predicates() {
        for base in ["G_1", "G_10", "G_0", "C5"] {
            for m in enumerate_family(base, 2, FamilyFilter::GapDiamondFree).unwrap() {
                assert!(is_gap_free(&m.graph) && is_diamond_free(&m.graph));
            }
        }
    }

    #[test]
    fn c5_multiplications_stay_non_bipartite() {
        for m in enumerate_family("C5", 2, FamilyFilter::All).unwrap() {
            assert!(!is_bipartite(&m.graph).0);
        }
    }
}
