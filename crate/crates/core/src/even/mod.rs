//! Even-connections and the graphs of colon ideals `(I(G)^{s+1} : e_1⋯e_s)`.
//!
//! A sequence `p_0 p_1 … p_{2l+1}` (`l ≥ 1`) is an even-connection between
//! `p_0` and `p_{2l+1}` when consecutive vertices are adjacent, each pair
//! `p_{2j+1} p_{2j+2}` is one of the product's edges, and no edge is used more
//! often than it occurs in the product. The minimal generators of the colon
//! are the host edges plus `uv` for every even-connected pair.

mod order;

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::graph::{bit, SimpleGraph};
use crate::ideal::{Monomial, Variable};
use crate::{Error, Result};

pub use order::{
    maximal_expression, ordered_generators, verify_all_ordered_colons,
    verify_ordered_colon_decomposition, EdgeOrder, GeneratorOrder, OrderedColonReport,
};

/// A multiset `e_1, …, e_s` of host edges and its product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFoldProduct {
    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    edges: Vec<(usize, usize)>,
    product: Monomial,
}

impl SFoldProduct {
    pub fn from_index_edges(host: &SimpleGraph, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::Precondition(
                "an s-fold product needs s ≥ 1 edges".into(),
            ));
        }
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= host.n() || b >= host.n() || !host.adjacent(a, b) {
                return Err(Error::Precondition(format!(
                    "({a}, {b}) is not an edge of the host"
                )));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        let product = Monomial::from_factors(
            out.iter()
                .flat_map(|&(a, b)| [a, b])
                .map(|v| (Variable::from_label(host.label(v)), 1)),
        );
        Ok(SFoldProduct {
            edges: out,
            product,
        })
    }

    pub fn from_edges(host: &SimpleGraph, edges: &[(&str, &str)]) -> Result<Self> {
        let idx = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (host.require(u)?, host.require(v)?);
                if !host.adjacent(a, b) {
                    return Err(Error::Precondition(format!(
                        "{u}{v} is not an edge of the host"
                    )));
                }
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        SFoldProduct::from_index_edges(host, &idx)
    }

    /// Parses `u1u2,u1u2` (or `u1-u2`, `u1 u2`). Concatenated labels are split
    /// at the unique point where both halves are host vertices.
    pub fn parse(host: &SimpleGraph, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for part in text.split([',', ';']) {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let toks: Vec<&str> = part
                .split(|c: char| c == '-' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect();
            let pair = match toks.as_slice() {
                [u, v] => (u.to_string(), v.to_string()),
                [uv] => {
                    let splits: Vec<(usize, usize)> = uv
                        .char_indices()
                        .skip(1)
                        .filter_map(|(k, _)| {
                            Some((host.index_of(&uv[..k])?, host.index_of(&uv[k..])?))
                        })
                        .collect();
                    match splits.as_slice() {
                        [(a, b)] => (host.label(*a).to_string(), host.label(*b).to_string()),
                        [] => {
                            return Err(Error::Precondition(format!(
                                "cannot read `{uv}` as two vertices"
                            )))
                        }
                        _ => {
                            return Err(Error::Precondition(format!(
                                "`{uv}` splits into vertices in several ways"
                            )))
                        }
                    }
                }
                _ => {
                    return Err(Error::Precondition(format!(
                        "cannot read `{part}` as an edge"
                    )))
                }
            };
            pairs.push(pair);
        }
        let refs: Vec<(&str, &str)> = pairs
            .iter()
            .map(|(u, v)| (u.as_str(), v.as_str()))
            .collect();
        SFoldProduct::from_edges(host, &refs)
    }

    /// Some factorization of `m` into host edges (the maximal one for the
    /// default edge order).
    pub fn from_monomial(host: &SimpleGraph, m: &Monomial) -> Result<Self> {
        let order = EdgeOrder::default_for(host);
        let exps = maximal_expression(host, m, &order)?;
        let mut edges = Vec::new();
        for (k, &a) in exps.iter().enumerate() {
            edges.extend(std::iter::repeat_n(order.edges()[k], a as usize));
        }
        SFoldProduct::from_index_edges(host, &edges)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn s(&self) -> usize {
        self.edges.len()
    }

    pub fn product(&self) -> &Monomial {
        &self.product
    }

    /// Distinct edges with their multiplicities.
    fn distinct(&self) -> (Vec<(usize, usize)>, Vec<u8>) {
        let mut e: Vec<(usize, usize)> = Vec::new();
        let mut c: Vec<u8> = Vec::new();
        for &x in &self.edges {
            if e.last() == Some(&x) {
                *c.last_mut().unwrap() += 1;
            } else {
                e.push(x);
                c.push(1);
            }
        }
        (e, c)
    }

    pub fn display(&self, host: &SimpleGraph) -> String {
        self.edges
            .iter()
            .map(|&(a, b)| format!("{}{}", host.label(a), host.label(b)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Witness sequence `p_0 … p_{2l+1}` with, for each `j < l`, the index into
/// the product's edge list of the edge `{p_{2j+1}, p_{2j+2}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenConnection {
    pub sequence: Vec<usize>,
    pub uses: Vec<usize>,
}

impl EvenConnection {
    pub fn labels(&self, host: &SimpleGraph) -> Vec<String> {
        self.sequence
            .iter()
            .map(|&v| host.label(v).to_string())
            .collect()
    }

    /// Checks the four defining conditions verbatim.
    pub fn is_valid(&self, host: &SimpleGraph, m: &SFoldProduct) -> bool {
        let p = &self.sequence;
        if p.len() < 4 || !p.len().is_multiple_of(2) || self.uses.len() != p.len() / 2 - 1 {
            return false;
        }
        if !p.windows(2).all(|w| host.adjacent(w[0], w[1])) {
            return false;
        }
        for (j, &k) in self.uses.iter().enumerate() {
            let Some(&(a, b)) = m.edges.get(k) else {
                return false;
            };
            let (x, y) = (p[2 * j + 1], p[2 * j + 2]);
            if (x.min(y), x.max(y)) != (a, b) {
                return false;
            }
        }
        // usage of each distinct edge bounded by its multiplicity
        let mut used: Vec<(usize, usize)> = self.uses.iter().map(|&k| m.edges[k]).collect();
        used.sort_unstable();
        used.dedup();
        used.iter().all(|e| {
            let times = (0..self.uses.len())
                .filter(|&j| {
                    let (x, y) = (p[2 * j + 1], p[2 * j + 2]);
                    (x.min(y), x.max(y)) == *e
                })
                .count();
            times <= m.edges.iter().filter(|f| *f == e).count()
        })
    }
}

impl fmt::Display for EvenConnection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.sequence)
    }
}

/// Depth-first search over (current vertex, remaining edge multiplicities).
/// Complete: a failed state is never revisited.
pub fn find_even_connection(
    host: &SimpleGraph,
    m: &SFoldProduct,
    u: usize,
    v: usize,
) -> Option<EvenConnection> {
    let (edges, counts) = m.distinct();
    let mut dead: HashSet<(usize, Vec<u8>)> = HashSet::new();
    let mut seq = vec![u];
    let mut used = Vec::new();
    if dfs(
        host,
        &edges,
        &mut counts.clone(),
        v,
        &mut seq,
        &mut used,
        &mut dead,
    ) {
        // Map distinct-edge ids back to positions in the product's list.
        let uses = used
            .iter()
            .map(|&d| {
                m.edges
                    .iter()
                    .position(|e| *e == edges[d])
                    .expect("edge of the product")
            })
            .collect();
        Some(EvenConnection {
            sequence: seq,
            uses,
        })
    } else {
        None
    }
}

fn dfs(
    host: &SimpleGraph,
    edges: &[(usize, usize)],
    counts: &mut Vec<u8>,
    target: usize,
    seq: &mut Vec<usize>,
    used: &mut Vec<usize>,
    dead: &mut HashSet<(usize, Vec<u8>)>,
) -> bool {
    let x = *seq.last().unwrap();
    if !used.is_empty() && host.adjacent(x, target) {
        seq.push(target);
        return true;
    }
    if dead.contains(&(x, counts.clone())) {
        return false;
    }
    for d in 0..edges.len() {
        if counts[d] == 0 {
            continue;
        }
        let (a, b) = edges[d];
        for (p, q) in [(a, b), (b, a)] {
            if !host.adjacent(x, p) {
                continue;
            }
            counts[d] -= 1;
            seq.push(p);
            seq.push(q);
            used.push(d);
            if dfs(host, edges, counts, target, seq, used, dead) {
                return true;
            }
            used.pop();
            seq.truncate(seq.len() - 2);
            counts[d] += 1;
        }
    }
    dead.insert((x, counts.clone()));
    false
}

pub fn even_connected(host: &SimpleGraph, m: &SFoldProduct, u: usize, v: usize) -> bool {
    find_even_connection(host, m, u, v).is_some()
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub u: String,
    pub v: String,
    pub sequence: Vec<String>,
}

/// The colon graph together with what was added to the host.
#[derive(Clone, Debug)]
pub struct ColonGraph {
    pub graph: SimpleGraph,
    /// Even-connected pairs `u ≠ v` that are not host edges.
    pub new_edges: Vec<(usize, usize)>,
    /// Vertices even-connected to themselves (whiskered in the graph).
    pub squares: Vec<usize>,
    pub witnesses: Vec<Witness>,
}

/// Label of the polarized copy carried by a square's whisker.
pub fn whisker_label(v: &str) -> String {
    Variable::new(
        Variable::from_label(v).name(),
        Variable::from_label(v).index() + 1,
    )
    .label()
}

/// Builds `G'` with `edge_ideal(G') = polarize(I^{s+1} : e_1⋯e_s)`: all host
/// vertices and edges, every even-connected pair, and a whisker `v – v#1` for
/// each `v` even-connected to itself.
pub fn colon_graph_report(host: &SimpleGraph, m: &SFoldProduct) -> Result<ColonGraph> {
    let n = host.n();
    let mut graph = host.clone();
    let mut new_edges = Vec::new();
    let mut squares = Vec::new();
    let mut witnesses = Vec::new();
    for u in 0..n {
        for v in u..n {
            if u != v && host.adjacent(u, v) {
                continue;
            }
            if let Some(w) = find_even_connection(host, m, u, v) {
                witnesses.push(Witness {
                    u: host.label(u).to_string(),
                    v: host.label(v).to_string(),
                    sequence: w.labels(host),
                });
                if u == v {
                    squares.push(u);
                } else {
                    new_edges.push((u, v));
                    graph.add_edge_idx(u, v)?;
                }
            }
        }
    }
    for &v in &squares {
        let w = whisker_label(host.label(v));
        let id = match graph.add_vertex(w) {
            Err(Error::DuplicateVertex(l)) => return Err(Error::LabelClash(l)),
            other => other?,
        };
        graph.add_edge_idx(v, id)?;
    }
    Ok(ColonGraph {
        graph,
        new_edges,
        squares,
        witnesses,
    })
}

pub fn colon_graph(host: &SimpleGraph, m: &SFoldProduct) -> Result<SimpleGraph> {
    Ok(colon_graph_report(host, m)?.graph)
}

/// Vertices of the host touched by the product.
pub fn product_support(m: &SFoldProduct) -> u64 {
    m.edges.iter().fold(0, |acc, &(a, b)| acc | bit(a) | bit(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ideal::edge_ideal;

    fn product(host: &SimpleGraph, edges: &[(&str, &str)]) -> SFoldProduct {
        SFoldProduct::from_edges(host, edges).unwrap()
    }

    #[test]
    fn path_ends_are_even_connected() {
        let p4 = catalog::get("P4").unwrap();
        let m = product(&p4, &[("b", "c")]);
        let w = find_even_connection(&p4, &m, 0, 3).unwrap();
        assert_eq!(w.labels(&p4), ["a", "b", "c", "d"]);
        assert!(w.is_valid(&p4, &m));
    }

    #[test]
    fn five_cycle_chord() {
        let c5 = catalog::get("C5").unwrap();
        let m = product(&c5, &[("u1", "u2")]);
        let (u3, u5) = (c5.index_of("u3").unwrap(), c5.index_of("u5").unwrap());
        let w = find_even_connection(&c5, &m, u3, u5).unwrap();
        assert_eq!(w.labels(&c5), ["u3", "u2", "u1", "u5"]);
        let g = colon_graph_report(&c5, &m).unwrap();
        assert_eq!(g.new_edges, vec![(u3, u5)]);
        assert!(g.squares.is_empty());
    }

    #[test]
    fn triangle_square_gets_a_whisker() {
        let k3 = catalog::get("K3").unwrap();
        let m = product(&k3, &[("b", "c")]);
        let w = find_even_connection(&k3, &m, 0, 0).unwrap();
        assert_eq!(w.labels(&k3), ["a", "b", "c", "a"]);
        let g = colon_graph(&k3, &m).unwrap();
        assert!(g.has_edge("a", "a#1"));
    }

    #[test]
    fn bare_edge_is_not_an_even_connection() {
        // ab is a host edge of P4 but no walk from a reaches the product edge cd.
        let p4 = catalog::get("P4").unwrap();
        let m = product(&p4, &[("c", "d")]);
        assert!(find_even_connection(&p4, &m, 0, 1).is_none());
        // On a single edge the walk a,b,a,b is a genuine even-connection.
        let p2 = catalog::get("P2").unwrap();
        let w = find_even_connection(&p2, &product(&p2, &[("a", "b")]), 0, 1).unwrap();
        assert_eq!(w.sequence, vec![0, 1, 0, 1]);
    }

    #[test]
    fn multiplicity_bounds_edge_reuse() {
        // On P6 = a-b-c-d-e-f, joining a and f needs both bc and de.
        let p6 = catalog::get("P6").unwrap();
        let one = product(&p6, &[("b", "c"), ("d", "e")]);
        assert!(find_even_connection(&p6, &one, 0, 5).is_some());
        let twice = product(&p6, &[("b", "c"), ("b", "c")]);
        assert!(find_even_connection(&p6, &twice, 0, 5).is_none());
    }

    #[test]
    fn colon_graph_matches_polarized_colon_ideal() {
        for (name, edges) in [
            ("C5", vec![("u1", "u2")]),
            ("K3", vec![("b", "c")]),
            ("G_1", vec![("a_0", "u_0"), ("u_2", "u_3")]),
        ] {
            let g = catalog::get(name).unwrap();
            let m = product(&g, &edges);
            let i = edge_ideal(&g);
            let colon = i.power(m.s() as u32 + 1).colon(m.product());
            assert_eq!(
                edge_ideal(&colon_graph(&g, &m).unwrap()),
                colon.polarize().0,
                "{name}"
            );
        }
    }

    #[test]
    fn parse_concatenated_edges() {
        let c5 = catalog::get("C5").unwrap();
        let m = SFoldProduct::parse(&c5, "u1u2, u2-u3,u1 u2").unwrap();
        assert_eq!(m.s(), 3);
        assert_eq!(m.display(&c5), "u1u2,u1u2,u2u3");
        assert!(SFoldProduct::parse(&c5, "u1u3").is_err());
        assert!(SFoldProduct::parse(&c5, "").is_err());
    }

    #[test]
    fn invalid_witnesses_rejected() {
        let p4 = catalog::get("P4").unwrap();
        let m = product(&p4, &[("b", "c")]);
        let bad = EvenConnection {
            sequence: vec![0, 2, 1, 3],
            uses: vec![0],
        };
        assert!(!bad.is_valid(&p4, &m));
        let short = EvenConnection {
            sequence: vec![0, 1],
            uses: vec![],
        };
        assert!(!short.is_valid(&p4, &m));
    }
}
