use std::collections::HashSet;
use std::fmt;

use super::{bit, bits, SimpleGraph, VertexSet};

/// Named induced-subgraph patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// Two disjoint edges with no edge between them (induced `2K2`).
    Gap,
    /// `K4` minus an edge.
    Diamond,
    /// Triangle with two pendant vertices on one apex.
    Cricket,
    Cycle(usize),
    Anticycle(usize),
    Clique(usize),
    Path(usize),
}

impl Pattern {
    pub fn graph(self) -> SimpleGraph {
        let names = |n: usize| (0..n).map(|i| format!("p{i}")).collect::<Vec<_>>();
        let from = |n: usize, edges: &[(usize, usize)]| {
            let mut g = SimpleGraph::with_vertices(names(n)).expect("distinct labels");
            for &(i, j) in edges {
                g.add_edge_idx(i, j).expect("no loops");
            }
            g
        };
        match self {
            Pattern::Gap => from(4, &[(0, 1), (2, 3)]),
            Pattern::Diamond => from(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (2, 3)]),
            Pattern::Cricket => from(5, &[(0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
            Pattern::Cycle(n) => {
                let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                from(n, &e)
            }
            Pattern::Anticycle(n) => Pattern::Cycle(n).graph().complement(),
            Pattern::Clique(n) => {
                let e: Vec<_> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect();
                from(n, &e)
            }
            Pattern::Path(n) => {
                let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                from(n, &e)
            }
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Gap => write!(f, "gap"),
            Pattern::Diamond => write!(f, "diamond"),
            Pattern::Cricket => write!(f, "cricket"),
            Pattern::Cycle(n) => write!(f, "C{n}"),
            Pattern::Anticycle(n) => write!(f, "C{n}^c"),
            Pattern::Clique(n) => write!(f, "K{n}"),
            Pattern::Path(n) => write!(f, "P{n}"),
        }
    }
}

/// An injective map from pattern vertices to host vertices realising the
/// pattern as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedEmbedding {
    pub pattern: Pattern,
    /// `mapping[p]` is the host vertex index of pattern vertex `p`.
    pub mapping: Vec<usize>,
}

impl InducedEmbedding {
    pub fn image(&self) -> VertexSet {
        self.mapping.iter().fold(0, |m, &i| m | bit(i))
    }

    pub fn labels<'g>(&self, host: &'g SimpleGraph) -> Vec<&'g str> {
        self.mapping.iter().map(|&i| host.label(i)).collect()
    }

    /// Checks edges and non-edges of the pattern against the host.
    pub fn is_valid(&self, host: &SimpleGraph) -> bool {
        let p = self.pattern.graph();
        let m = &self.mapping;
        m.len() == p.n()
            && self.image().count_ones() as usize == m.len()
            && (0..p.n())
                .all(|a| (a + 1..p.n()).all(|b| p.adjacent(a, b) == host.adjacent(m[a], m[b])))
    }
}

/// Backtracking search for induced copies of `pattern` in `host`.
///
/// Calls `visit` with every injective induced embedding (all automorphic
/// images included); stops early when `visit` returns `false`.
fn search<F: FnMut(&[usize]) -> bool>(pattern: &SimpleGraph, host: &SimpleGraph, mut visit: F) {
    let k = pattern.n();
    if k > host.n() {
        return;
    }
    if k == 0 {
        visit(&[]);
        return;
    }
    // Order pattern vertices so each one after the first touches an earlier one when possible.
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| placed & bit(p) == 0)
            .max_by_key(|&p| {
                (
                    (pattern.neighbors(p) & placed).count_ones(),
                    pattern.degree(p),
                    std::cmp::Reverse(p),
                )
            })
            .unwrap();
        order.push(next);
        placed |= bit(next);
    }
    let mut map = vec![usize::MAX; k];
    fn rec<F: FnMut(&[usize]) -> bool>(
        depth: usize,
        order: &[usize],
        pattern: &SimpleGraph,
        host: &SimpleGraph,
        map: &mut Vec<usize>,
        used: u64,
        visit: &mut F,
    ) -> bool {
        if depth == order.len() {
            return visit(map);
        }
        let p = order[depth];
        let mut cand = host.all() & !used;
        for &q in &order[..depth] {
            let h = map[q];
            if pattern.adjacent(p, q) {
                cand &= host.neighbors(h);
            } else {
                cand &= !host.neighbors(h);
            }
        }
        let need = pattern.degree(p);
        for h in bits(cand) {
            if host.degree(h) < need {
                continue;
            }
            map[p] = h;
            if !rec(depth + 1, order, pattern, host, map, used | bit(h), visit) {
                return false;
            }
        }
        map[p] = usize::MAX;
        true
    }
    rec(0, &order, pattern, host, &mut map, 0, &mut visit);
}

/// Finds one induced copy of an arbitrary pattern graph; `mapping[p]` is the host index.
pub fn find_induced_copy(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Vec<usize>> {
    let mut found = None;
    search(pattern, host, |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

pub fn contains_induced(host: &SimpleGraph, pattern: Pattern) -> Option<InducedEmbedding> {
    find_induced_copy(host, &pattern.graph()).map(|mapping| InducedEmbedding { pattern, mapping })
}

/// Every induced copy of `pattern`, one embedding per image vertex set
/// (embeddings differing by a pattern automorphism are identified).
pub fn enumerate_induced(host: &SimpleGraph, pattern: Pattern) -> Vec<InducedEmbedding> {
    let pg = pattern.graph();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    search(&pg, host, |m| {
        let img = m.iter().fold(0u64, |a, &i| a | bit(i));
        if seen.insert(img) {
            out.push(InducedEmbedding {
                pattern,
                mapping: m.to_vec(),
            });
        }
        true
    });
    out
}

pub fn is_gap_free(g: &SimpleGraph) -> bool {
    contains_induced(g, Pattern::Gap).is_none()
}

pub fn is_diamond_free(g: &SimpleGraph) -> bool {
    contains_induced(g, Pattern::Diamond).is_none()
}

/// All chordless cycles of length at least `min_len` (and at least 3), each
/// reported once as a vertex sequence starting at its least vertex.
pub fn induced_cycles(g: &SimpleGraph, min_len: usize) -> Vec<Vec<usize>> {
    let min_len = min_len.max(3);
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 0..g.n() {
        let above = !super::low_mask(s + 1);
        path.clear();
        path.push(s);
        for w in bits(g.neighbors(s) & above) {
            path.push(w);
            extend(g, s, above, &mut path, bit(s) | bit(w), min_len, &mut out);
            path.pop();
        }
    }
    out
}

fn extend(
    g: &SimpleGraph,
    s: usize,
    above: u64,
    path: &mut Vec<usize>,
    on_path: u64,
    min_len: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    let interior = on_path & !bit(s) & !bit(last);
    for w in bits(g.neighbors(last) & above & !on_path) {
        if g.neighbors(w) & interior != 0 {
            continue;
        }
        if g.adjacent(w, s) {
            if path.len() + 1 >= min_len && path[1] < w {
                let mut c = path.clone();
                c.push(w);
                out.push(c);
            }
        } else {
            path.push(w);
            extend(g, s, above, path, on_path | bit(w), min_len, out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn gap_in_2k2() {
        let g = catalog::get("2K2").unwrap();
        let e = contains_induced(&g, Pattern::Gap).unwrap();
        assert!(e.is_valid(&g));
    }

    #[test]
    fn c5_has_no_gap_and_no_diamond() {
        let c5 = catalog::get("C5").unwrap();
        assert!(contains_induced(&c5, Pattern::Gap).is_none());
        assert!(contains_induced(&c5, Pattern::Diamond).is_none());
    }

    #[test]
    fn g4_gap_between_u0a0_and_b0b2() {
        let g4 = catalog::get("G_4").unwrap();
        let gaps = enumerate_induced(&g4, Pattern::Gap);
        assert!(!gaps.is_empty());
        let want = g4.mask_of(&["u_0", "a_0", "b_0", "b_2"]).unwrap();
        assert!(gaps.iter().any(|e| e.image() == want));
        // The witness pairs exactly the edges u_0a_0 and b_0b_2.
        let w = gaps.iter().find(|e| e.image() == want).unwrap();
        let l = w.labels(&g4);
        let mut pairs = vec![[l[0], l[1]], [l[2], l[3]]];
        for p in &mut pairs {
            p.sort();
        }
        pairs.sort();
        assert_eq!(pairs, vec![["a_0", "u_0"], ["b_0", "b_2"]]);
    }

    #[test]
    fn pattern_larger_than_host_is_absent() {
        let k3 = catalog::get("K3").unwrap();
        assert!(contains_induced(&k3, Pattern::Cycle(5)).is_none());
    }

    #[test]
    fn enumerate_counts_images_once() {
        let c5 = catalog::get("C5").unwrap();
        assert_eq!(enumerate_induced(&c5, Pattern::Path(3)).len(), 5);
        assert_eq!(enumerate_induced(&c5, Pattern::Cycle(5)).len(), 1);
        let k4 = catalog::get("K4").unwrap();
        assert_eq!(enumerate_induced(&k4, Pattern::Clique(3)).len(), 4);
    }

    #[test]
    fn chordless_cycles_of_the_prism() {
        // complement(C6) is the triangular prism: two triangles and three squares.
        let g = catalog::get("C6^c").unwrap();
        let cycles = induced_cycles(&g, 3);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 2);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
        assert_eq!(cycles.len(), 5);
        let squares: Vec<_> = enumerate_induced(&g, Pattern::Cycle(4));
        assert_eq!(squares.len(), 3);
    }

    #[test]
    fn cricket_pattern_shape() {
        let c = Pattern::Cricket.graph();
        assert_eq!(c.edge_count(), 5);
        assert_eq!(c.degree(2), 4);
    }
}
