//! Finite simple graphs on at most 64 labelled vertices.
//!
//! Adjacency is a dense symmetric bit matrix: row `i` is a `u64` whose bit `j`
//! is set iff `i` and `j` are adjacent. Every algorithm in this module is a
//! scan over vertex subsets, so the bit representation keeps them cheap.

mod bipartite;
mod chordal;
mod clique;
mod distance;
mod induced;
mod io;
mod iso;
mod multiply;

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

pub use bipartite::{is_bipartite, BipartiteWitness};
pub use chordal::{
    find_induced_long_cycle, is_chordal, is_perfect_elimination_order, ChordalWitness,
};
pub use clique::{clique_number, is_clique, max_cliques, maximal_cliques, triangles};
pub use distance::{distance_partition, Distances};
pub use induced::{
    contains_induced, enumerate_induced, find_induced_copy, induced_cycles, is_diamond_free,
    is_gap_free, InducedEmbedding, Pattern,
};
pub use io::GraphJson;
pub use iso::{all_isomorphisms, are_isomorphic, automorphisms};
pub use multiply::{collapse_false_twins, multiply_vertices, Replacement};

/// Vertex subset as a bit mask over vertex indices.
pub type VertexSet = u64;

pub const MAX_VERTICES: usize = 64;

/// Iterates the indices of the set bits of `mask` in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<u64>,
    index: HashMap<String, usize>,
}

impl SimpleGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Self::new();
        for l in labels {
            g.add_vertex(l)?;
        }
        Ok(g)
    }

    /// Builds a graph from an edge list; vertices appear in order of first mention.
    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = Self::new();
        for &(u, v) in edges {
            g.ensure_vertex(u)?;
            g.ensure_vertex(v)?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(Error::DuplicateVertex(label));
        }
        if self.labels.len() == MAX_VERTICES {
            return Err(Error::TooManyVertices(MAX_VERTICES + 1));
        }
        let i = self.labels.len();
        self.index.insert(label.clone(), i);
        self.labels.push(label);
        self.adj.push(0);
        Ok(i)
    }

    /// Returns the index of `label`, adding it as a new vertex when absent.
    pub fn ensure_vertex(&mut self, label: &str) -> Result<usize> {
        match self.index.get(label) {
            Some(&i) => Ok(i),
            None => self.add_vertex(label),
        }
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<()> {
        let i = self.require(u)?;
        let j = self.require(v)?;
        self.add_edge_idx(i, j)
    }

    pub fn add_edge_idx(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::SelfLoop(self.labels[i].clone()));
        }
        self.adj[i] |= bit(j);
        self.adj[j] |= bit(i);
        Ok(())
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn all(&self) -> VertexSet {
        low_mask(self.n())
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] & bit(j) != 0
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    /// Open neighbourhood `N(i)` as a mask.
    #[inline]
    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in bits(self.adj[i] & !low_mask(i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_labels(&self) -> Vec<(&str, &str)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.label(i), self.label(j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn isolated(&self) -> VertexSet {
        bits(self.all())
            .filter(|&i| self.adj[i] == 0)
            .fold(0, |m, i| m | bit(i))
    }

    pub fn mask_of(&self, labels: &[&str]) -> Result<VertexSet> {
        labels
            .iter()
            .try_fold(0u64, |m, l| Ok(m | bit(self.require(l)?)))
    }

    pub fn labels_of(&self, mask: VertexSet) -> Vec<&str> {
        bits(mask).map(|i| self.label(i)).collect()
    }

    /// Number of edges with both endpoints inside `mask`.
    pub fn edges_within(&self, mask: VertexSet) -> usize {
        bits(mask)
            .map(|i| (self.adj[i] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn complement(&self) -> SimpleGraph {
        let all = self.all();
        let adj = (0..self.n())
            .map(|i| !self.adj[i] & all & !bit(i))
            .collect();
        SimpleGraph {
            labels: self.labels.clone(),
            adj,
            index: self.index.clone(),
        }
    }

    /// Induced subgraph on the given labels; vertex order follows the host.
    pub fn induced_subgraph(&self, labels: &[&str]) -> Result<SimpleGraph> {
        Ok(self.induced_by_mask(self.mask_of(labels)?))
    }

    pub fn induced_by_mask(&self, mask: VertexSet) -> SimpleGraph {
        let keep: Vec<usize> = bits(mask & self.all()).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let adj = keep
            .iter()
            .map(|&i| bits(self.adj[i] & mask).fold(0u64, |m, j| m | bit(pos[j])))
            .collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(k, l)| (l.clone(), k))
            .collect();
        SimpleGraph { labels, adj, index }
    }

    /// `G − v`.
    pub fn remove_vertex(&self, label: &str) -> Result<SimpleGraph> {
        let i = self.require(label)?;
        Ok(self.induced_by_mask(self.all() & !bit(i)))
    }

    /// `G − st x` where `st x = N(x) ∪ {x}`.
    pub fn remove_star(&self, label: &str) -> Result<SimpleGraph> {
        let i = self.require(label)?;
        Ok(self.induced_by_mask(self.all() & !(self.adj[i] | bit(i))))
    }

    pub fn without_isolated(&self) -> SimpleGraph {
        self.induced_by_mask(self.all() & !self.isolated())
    }

    /// Connected components as vertex masks, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let next = bits(frontier).fold(0u64, |m, v| m | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Renames vertices through `f`, keeping adjacency and order.
    pub fn relabel<F: FnMut(&str) -> String>(&self, mut f: F) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::with_vertices(self.labels.iter().map(|l| f(l)))?;
        g.adj = self.adj.clone();
        Ok(g)
    }

    /// Reorders vertices: new vertex `k` is old vertex `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> SimpleGraph {
        let mut pos = vec![0usize; self.n()];
        for (k, &i) in order.iter().enumerate() {
            pos[i] = k;
        }
        let labels: Vec<String> = order.iter().map(|&i| self.labels[i].clone()).collect();
        let adj = order
            .iter()
            .map(|&i| bits(self.adj[i]).fold(0u64, |m, j| m | bit(pos[j])))
            .collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(k, l)| (l.clone(), k))
            .collect();
        SimpleGraph { labels, adj, index }
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
