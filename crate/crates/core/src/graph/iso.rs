use std::collections::HashMap;

use super::{bit, bits, SimpleGraph};

/// Colour refinement run jointly on both graphs so colour ids are comparable.
fn refine(g: &SimpleGraph, h: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let sig = |gr: &SimpleGraph, col: &[usize], v: usize| {
            let mut nb: Vec<usize> = bits(gr.neighbors(v)).map(|w| col[w]).collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.n()).map(|v| sig(h, &ch, v)).collect();
        let mut keys: Vec<_> = sg.iter().chain(sh.iter()).cloned().collect();
        keys.sort();
        keys.dedup();
        for (i, k) in keys.into_iter().enumerate() {
            ids.insert(k, i);
        }
        cg = sg.into_iter().map(|k| ids[&k]).collect();
        ch = sh.into_iter().map(|k| ids[&k]).collect();
        if ids.len() == classes {
            return (cg, ch);
        }
        classes = ids.len();
    }
}

/// Backtracking over refined colour classes; `visit` receives each
/// isomorphism `g → h` (as `map[v_g] = v_h`) and returns `false` to stop.
fn search<F: FnMut(&[usize]) -> bool>(g: &SimpleGraph, h: &SimpleGraph, mut visit: F) {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return;
    }
    let (cg, ch) = refine(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return;
    }
    // Map rarest colour classes first, then follow adjacency.
    let mut count: HashMap<usize, usize> = HashMap::new();
    for &c in &cg {
        *count.entry(c).or_default() += 1;
    }
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .min_by_key(|&v| {
                (
                    std::cmp::Reverse((g.neighbors(v) & placed).count_ones()),
                    count[&cg[v]],
                    v,
                )
            })
            .unwrap();
        order.push(v);
        placed |= bit(v);
    }
    let mut map = vec![usize::MAX; n];
    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&[usize]) -> bool>(
        depth: usize,
        order: &[usize],
        g: &SimpleGraph,
        h: &SimpleGraph,
        cg: &[usize],
        ch: &[usize],
        map: &mut Vec<usize>,
        used: u64,
        visit: &mut F,
    ) -> bool {
        if depth == order.len() {
            return visit(map);
        }
        let v = order[depth];
        let mut cand = h.all() & !used;
        for &u in &order[..depth] {
            if g.adjacent(u, v) {
                cand &= h.neighbors(map[u]);
            } else {
                cand &= !h.neighbors(map[u]);
            }
        }
        for w in bits(cand) {
            if ch[w] != cg[v] {
                continue;
            }
            map[v] = w;
            if !rec(depth + 1, order, g, h, cg, ch, map, used | bit(w), visit) {
                return false;
            }
        }
        map[v] = usize::MAX;
        true
    }
    rec(0, &order, g, h, &cg, &ch, &mut map, 0, &mut visit);
}

/// A vertex bijection `g → h` preserving adjacency and non-adjacency, if one exists.
pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    let mut found = None;
    search(g, h, |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

pub fn all_isomorphisms(g: &SimpleGraph, h: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search(g, h, |m| {
        out.push(m.to_vec());
        true
    });
    out
}

pub fn automorphisms(g: &SimpleGraph) -> Vec<Vec<usize>> {
    all_isomorphisms(g, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check(g: &SimpleGraph, h: &SimpleGraph, m: &[usize]) -> bool {
        (0..g.n()).all(|a| (0..g.n()).all(|b| g.adjacent(a, b) == h.adjacent(m[a], m[b])))
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = catalog::get("C5").unwrap();
        let m = are_isomorphic(&c5, &c5.complement()).unwrap();
        assert!(check(&c5, &c5.complement(), &m));
    }

    #[test]
    fn different_orders_are_not_isomorphic() {
        let g1 = catalog::get("G_1").unwrap();
        let g2 = catalog::get("G_2").unwrap();
        assert!(are_isomorphic(&g1, &g2).is_none());
    }

    #[test]
    fn random_relabelling_round_trip() {
        let g3 = catalog::get("G_3").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut order: Vec<usize> = (0..g3.n()).collect();
            order.shuffle(&mut rng);
            let h = g3.permuted(&order).relabel(|l| format!("x{l}")).unwrap();
            let m = are_isomorphic(&g3, &h).unwrap();
            assert!(check(&g3, &h, &m));
        }
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(automorphisms(&catalog::get("C5").unwrap()).len(), 10);
        assert_eq!(automorphisms(&catalog::get("K4").unwrap()).len(), 24);
        assert_eq!(automorphisms(&catalog::get("P4").unwrap()).len(), 2);
    }

    #[test]
    fn same_degree_sequence_but_not_isomorphic() {
        // C6 versus two disjoint triangles.
        let c6 = catalog::get("C6").unwrap();
        let two_k3 = SimpleGraph::from_edges(&[
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("d", "e"),
            ("e", "f"),
            ("d", "f"),
        ])
        .unwrap();
        assert!(are_isomorphic(&c6, &two_k3).is_none());
    }
}
