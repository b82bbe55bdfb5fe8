use std::collections::VecDeque;

use super::{bit, bits, SimpleGraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteWitness {
    /// One side of a bipartition; the other side is its complement.
    Bipartition(VertexSet),
    /// A closed walk of odd length that is a simple cycle.
    OddCycle(Vec<usize>),
}

impl BipartiteWitness {
    pub fn is_valid(&self, g: &SimpleGraph) -> bool {
        match self {
            BipartiteWitness::Bipartition(a) => {
                let b = g.all() & !a;
                bits(*a).all(|v| g.neighbors(v) & a == 0)
                    && bits(b).all(|v| g.neighbors(v) & b == 0)
            }
            BipartiteWitness::OddCycle(c) => {
                let k = c.len();
                let distinct = c.iter().fold(0u64, |m, &v| m | bit(v)).count_ones() as usize == k;
                k % 2 == 1 && k >= 3 && distinct && (0..k).all(|i| g.adjacent(c[i], c[(i + 1) % k]))
            }
        }
    }
}

/// Breadth-first 2-colouring.
pub fn is_bipartite(g: &SimpleGraph) -> (bool, BipartiteWitness) {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in bits(g.neighbors(x)) {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return (
                        false,
                        BipartiteWitness::OddCycle(odd_cycle(x, y, &parent, &depth)),
                    );
                }
            }
        }
    }
    let side = (0..n)
        .filter(|&v| color[v] == 0)
        .fold(0u64, |m, v| m | bit(v));
    (true, BipartiteWitness::Bipartition(side))
}

/// Joins the tree paths from `x` and `y` to their lowest common ancestor.
fn odd_cycle(mut x: usize, mut y: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
