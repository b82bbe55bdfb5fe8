//! Simplicial complexes on at most 32 vertices, faces stored as bitmasks
//! grouped by dimension, and their reduced homology over an exact field.

use super::rank::{reduce_signed, SignedCol};

/// Faces grouped by size: `by_size[k]` holds the faces with `k` vertices
/// (dimension `k − 1`), sorted. `by_size[0] = [0]` is the empty face.
#[derive(Clone, Debug, Default)]
pub struct Complex {
    pub by_size: Vec<Vec<u32>>,
}

impl Complex {
    pub fn face_count(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    /// All subsets of `ground` accepted by `keep`, which must be closed under
    /// taking subsets. Stops and returns `None` once more than `cap` faces
    /// have been produced.
    pub fn enumerate(ground: u32, cap: usize, keep: impl Fn(u32, u32) -> bool) -> Option<Complex> {
        let verts: Vec<u32> = (0..32).filter(|&v| ground & (1 << v) != 0).collect();
        let mut by_size: Vec<Vec<u32>> = vec![vec![0]];
        let mut count = 1usize;
        // Extend each face only by vertices above its largest one.
        let mut stack: Vec<(u32, usize)> = vec![(0, 0)];
        while let Some((face, from)) = stack.pop() {
            for (k, &v) in verts.iter().enumerate().skip(from) {
                let bigger = face | (1 << v);
                if keep(bigger, v) {
                    let size = bigger.count_ones() as usize;
                    if by_size.len() <= size {
                        by_size.resize(size + 1, Vec::new());
                    }
                    by_size[size].push(bigger);
                    count += 1;
                    if count > cap {
                        return None;
                    }
                    stack.push((bigger, k + 1));
                }
            }
        }
        for layer in &mut by_size {
            layer.sort_unstable();
        }
        while by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        Some(Complex { by_size })
    }

    /// Reduced Betti numbers `h[k + 1] = dim H̃_k` for `k = −1 … dim`,
    /// computed top-down with clearing: a face that is the pivot of a
    /// higher boundary column contributes a zero column one level down.
    pub fn reduced_homology(&self, p: u32) -> Vec<usize> {
        let top = self.by_size.len();
        // rank[k] = rank of the boundary from size-k faces to size-(k−1) faces
        let mut rank = vec![0usize; top + 1];
        let mut cleared: Vec<bool> = Vec::new();
        for size in (1..top).rev() {
            let faces = &self.by_size[size];
            let rows = &self.by_size[size - 1];
            let mut cols: Vec<SignedCol> = Vec::with_capacity(faces.len());
            for (i, &f) in faces.iter().enumerate() {
                if cleared.get(i).copied().unwrap_or(false) {
                    continue;
                }
                let mut col = Vec::with_capacity(size);
                let mut pos = 0;
                let mut rest = f;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    let g = f & !(1 << v);
                    let r = rows
                        .binary_search(&g)
                        .expect("complex is closed under subsets");
                    col.push((r as u32, pos % 2 == 1));
                    pos += 1;
                }
                col.sort_unstable_by_key(|e| e.0);
                cols.push(col);
            }
            let red = reduce_signed(&cols, rows.len(), p);
            rank[size] = red.rank;
            cleared = vec![false; rows.len()];
            for r in red.pivot_rows {
                cleared[r as usize] = true;
            }
        }
        (0..top)
            .map(|size| self.by_size[size].len() - rank[size] - rank[size + 1])
            .collect()
    }
}

/// `dim H̃_k` for `k ≥ −1`, from a homology vector as returned above.
pub fn dims_map(h: &[usize]) -> Vec<(i32, usize)> {
    h.iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(i, &d)| (i as i32 - 1, d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full_simplex_boundary(n: u32) -> Complex {
        let all = (1u32 << n) - 1;
        Complex::enumerate(all, usize::MAX, |f, _| f != all).unwrap()
    }

    #[test]
    fn spheres() {
        for n in 2..=6u32 {
            let h = full_simplex_boundary(n).reduced_homology(0);
            let mut expect = vec![0; n as usize];
            expect[n as usize - 1] = 1;
            assert_eq!(h, expect, "boundary of the {}-simplex", n - 1);
        }
    }

    #[test]
    fn empty_complex_has_minus_one_homology() {
        let c = Complex::enumerate(0b111, usize::MAX, |_, _| false).unwrap();
        assert_eq!(c.reduced_homology(0), vec![1]);
    }

    #[test]
    fn simplex_is_acyclic() {
        let c = Complex::enumerate(0b1111, usize::MAX, |_, _| true).unwrap();
        assert!(c.reduced_homology(3).iter().all(|&d| d == 0));
    }

    #[test]
    fn cap_stops_enumeration() {
        assert!(Complex::enumerate(0b1111, 5, |_, _| true).is_none());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // Six-vertex triangulation of RP^2.
        let tris = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let masks: Vec<u32> = tris
            .iter()
            .map(|t| t.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let c = Complex::enumerate(0b111111, usize::MAX, |f, _| {
            masks.iter().any(|&t| f & t == f)
        })
        .unwrap();
        assert_eq!(c.reduced_homology(0), vec![0, 0, 0, 0]);
        assert_eq!(c.reduced_homology(3), vec![0, 0, 0, 0]);
        assert_eq!(c.reduced_homology(2), vec![0, 0, 1, 1]);
    }
}
