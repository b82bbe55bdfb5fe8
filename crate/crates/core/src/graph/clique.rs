use super::{bit, bits, SimpleGraph, VertexSet};

pub fn is_clique(g: &SimpleGraph, mask: VertexSet) -> bool {
    bits(mask).all(|v| g.neighbors(v) & mask == mask & !bit(v))
}

/// Bron–Kerbosch with pivoting; every maximal clique as a mask, sorted.
pub fn maximal_cliques(g: &SimpleGraph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() > 0 {
        bron_kerbosch(g, 0, g.all(), 0, &mut out);
    }
    out.sort_unstable();
    out
}

fn bron_kerbosch(g: &SimpleGraph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (g.neighbors(u) & p).count_ones())
        .unwrap();
    for v in bits(p & !g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r | bit(v), p & nv, x & nv, out);
        p &= !bit(v);
        x |= bit(v);
    }
}

/// All cliques of size `ω(g)`, sorted by mask.
pub fn max_cliques(g: &SimpleGraph) -> Vec<VertexSet> {
    let all = maximal_cliques(g);
    let w = all.iter().map(|c| c.count_ones()).max().unwrap_or(0);
    all.into_iter().filter(|c| c.count_ones() == w).collect()
}

/// `ω(g)`: 0 for the graph without vertices, 1 for an edgeless graph.
pub fn clique_number(g: &SimpleGraph) -> usize {
    max_cliques(g)
        .first()
        .map_or(0, |c| c.count_ones() as usize)
}

pub fn triangles(g: &SimpleGraph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for (i, j) in g.edges() {
        for k in bits(g.neighbors(i) & g.neighbors(j) & !super::low_mask(j + 1)) {
            out.push(bit(i) | bit(j) | bit(k));
        }
    }
    out
}
