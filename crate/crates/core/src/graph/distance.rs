use super::{bit, bits, SimpleGraph};
use crate::{Error, Result};

/// Distances from a vertex set `H`; `None` means unreachable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distances {
    dist: Vec<Option<usize>>,
    labels: Vec<String>,
}

impl Distances {
    pub fn get(&self, label: &str) -> Option<Option<usize>> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.dist[i])
    }

    pub fn by_index(&self) -> &[Option<usize>] {
        &self.dist
    }

    /// `D_k`: labels at distance exactly `k`.
    pub fn layer(&self, k: usize) -> Vec<&str> {
        self.labels
            .iter()
            .zip(&self.dist)
            .filter(|(_, d)| **d == Some(k))
            .map(|(l, _)| l.as_str())
            .collect()
    }
}

pub fn distance_partition(g: &SimpleGraph, h: &[&str]) -> Result<Distances> {
    if h.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let start = g.mask_of(h)?;
    let mut dist = vec![None; g.n()];
    let mut seen = start;
    let mut frontier = start;
    let mut k = 0;
    while frontier != 0 {
        for v in bits(frontier) {
            dist[v] = Some(k);
        }
        let next = bits(frontier).fold(0u64, |m, v| m | g.neighbors(v)) & !seen;
        seen |= next;
        frontier = next;
        k += 1;
    }
    debug_assert!(bits(start).all(|v| dist[v] == Some(0) && start & bit(v) != 0));
    Ok(Distances {
        dist,
        labels: g.labels().to_vec(),
    })
}
