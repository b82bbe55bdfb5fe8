//! Exact ranks of sparse matrices by column reduction.
//!
//! Columns are sparse vectors sorted by row; the pivot of a column is its
//! largest row. Over `F_p` a column is reduced by subtracting a scalar multiple
//! of the earlier column owning its pivot. Over `Q` the combination is
//! fraction-free (`a·col − b·other`) followed by division by the content, in
//! `i128` first and in arbitrary precision if that overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type SparseCol = Vec<u32>;

/// Which columns were reduced to a nonzero vector and their pivot rows.
#[derive(Clone, Debug, Default)]
pub struct Reduction {
    pub rank: usize,
    pub pivot_rows: Vec<u32>,
}

trait Coef: Clone {
    fn one() -> Self;
    fn neg_one() -> Self;
}

trait Eliminate {
    type C: Coef;
    /// Replaces `col` by a combination with zero entry at the common pivot.
    fn eliminate(
        &self,
        col: &[(u32, Self::C)],
        piv: &[(u32, Self::C)],
    ) -> Option<Vec<(u32, Self::C)>>;
}

impl Coef for u32 {
    fn one() -> Self {
        1
    }
    fn neg_one() -> Self {
        u32::MAX
    }
}

impl Coef for i128 {
    fn one() -> Self {
        1
    }
    fn neg_one() -> Self {
        -1
    }
}

impl Coef for BigInt {
    fn one() -> Self {
        BigInt::from(1)
    }
    fn neg_one() -> Self {
        BigInt::from(-1)
    }
}

fn combine<C: Clone, F: FnMut(Option<&C>, Option<&C>) -> Option<C>>(
    a: &[(u32, C)],
    b: &[(u32, C)],
    mut f: F,
    is_zero: impl Fn(&C) -> bool,
) -> Option<Vec<(u32, C)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (row, v) = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, f(Some(&x.1), Some(&y.1))?)
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                (x.0, f(Some(&x.1), None)?)
            }
            (Some(x), None) => {
                i += 1;
                (x.0, f(Some(&x.1), None)?)
            }
            (_, Some(y)) => {
                j += 1;
                (y.0, f(None, Some(&y.1))?)
            }
            (None, None) => unreachable!(),
        };
        if !is_zero(&v) {
            out.push((row, v));
        }
    }
    Some(out)
}

struct ModP(u32);

impl ModP {
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    fn inv(&self, a: u32) -> u32 {
        // Fermat; p is prime
        let (mut base, mut e, mut acc) = (a as u64, self.0 as u64 - 2, 1u64);
        let p = self.0 as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }
}

impl Eliminate for ModP {
    type C = u32;
    fn eliminate(&self, col: &[(u32, u32)], piv: &[(u32, u32)]) -> Option<Vec<(u32, u32)>> {
        let p = self.0;
        let factor = self.mul(col.last()?.1, self.inv(piv.last()?.1));
        combine(
            col,
            piv,
            |x, y| {
                let x = x.copied().unwrap_or(0);
                let y = self.mul(y.copied().unwrap_or(0), factor);
                Some((x + p - y) % p)
            },
            |v| *v == 0,
        )
    }
}

struct FracFree;

impl Eliminate for FracFree {
    type C = i128;
    fn eliminate(&self, col: &[(u32, i128)], piv: &[(u32, i128)]) -> Option<Vec<(u32, i128)>> {
        let a = piv.last()?.1;
        let b = col.last()?.1;
        let g = a.gcd(&b);
        let (a, b) = (a / g, b / g);
        let mut out = combine(
            col,
            piv,
            |x, y| {
                let x = x.copied().unwrap_or(0).checked_mul(a)?;
                let y = y.copied().unwrap_or(0).checked_mul(b)?;
                x.checked_sub(y)
            },
            |v| *v == 0,
        )?;
        let content = out.iter().fold(0i128, |g, e| g.gcd(&e.1));
        if content > 1 {
            for e in &mut out {
                e.1 /= content;
            }
        }
        Some(out)
    }
}

struct BigFracFree;

impl Eliminate for BigFracFree {
    type C = BigInt;
    fn eliminate(
        &self,
        col: &[(u32, BigInt)],
        piv: &[(u32, BigInt)],
    ) -> Option<Vec<(u32, BigInt)>> {
        let a = &piv.last()?.1;
        let b = &col.last()?.1;
        let g = a.gcd(b);
        let (a, b) = (a / &g, b / &g);
        let mut out = combine(
            col,
            piv,
            |x, y| {
                let x = x.map_or_else(BigInt::zero, |x| x * &a);
                let y = y.map_or_else(BigInt::zero, |y| y * &b);
                Some(x - y)
            },
            Zero::is_zero,
        )?;
        let content = out.iter().fold(BigInt::zero(), |g, e| g.gcd(&e.1));
        if content.abs() > BigInt::from(1) {
            for e in &mut out {
                e.1 = &e.1 / &content;
            }
        }
        Some(out)
    }
}

/// Boundary-style input: each column lists `(row, sign)` with sign ±1.
pub type SignedCol = Vec<(u32, bool)>;

fn lift<C: Coef>(col: &SignedCol) -> Vec<(u32, C)> {
    col.iter()
        .map(|&(r, neg)| (r, if neg { C::neg_one() } else { C::one() }))
        .collect()
}

fn reduce<E: Eliminate>(
    e: &E,
    cols: &[SignedCol],
    nrows: usize,
    fix: impl Fn(Vec<(u32, E::C)>) -> Vec<(u32, E::C)>,
) -> Option<Reduction> {
    let mut owner: Vec<u32> = vec![u32::MAX; nrows];
    let mut reduced: Vec<Vec<(u32, E::C)>> = Vec::with_capacity(cols.len());
    let mut out = Reduction::default();
    for c in cols {
        let mut col = fix(lift::<E::C>(c));
        while let Some(&(low, _)) = col.last() {
            let o = owner[low as usize];
            if o == u32::MAX {
                break;
            }
            col = e.eliminate(&col, &reduced[o as usize])?;
        }
        if let Some(&(low, _)) = col.last() {
            owner[low as usize] = reduced.len() as u32;
            out.rank += 1;
            out.pivot_rows.push(low);
        }
        reduced.push(col);
    }
    Some(out)
}

/// GF(2) reduction on plain row lists using symmetric difference.
fn reduce_gf2(cols: &[SignedCol], nrows: usize) -> Reduction {
    let mut owner: Vec<u32> = vec![u32::MAX; nrows];
    let mut reduced: Vec<SparseCol> = Vec::with_capacity(cols.len());
    let mut out = Reduction::default();
    for c in cols {
        let mut col: SparseCol = c.iter().map(|e| e.0).collect();
        while let Some(&low) = col.last() {
            let o = owner[low as usize];
            if o == u32::MAX {
                break;
            }
            let other = &reduced[o as usize];
            let mut merged = Vec::with_capacity(col.len() + other.len());
            let (mut i, mut j) = (0, 0);
            while i < col.len() || j < other.len() {
                match (col.get(i), other.get(j)) {
                    (Some(a), Some(b)) if a == b => {
                        i += 1;
                        j += 1;
                    }
                    (Some(a), Some(b)) if a < b => {
                        merged.push(*a);
                        i += 1;
                    }
                    (Some(a), None) => {
                        merged.push(*a);
                        i += 1;
                    }
                    (_, Some(b)) => {
                        merged.push(*b);
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            col = merged;
        }
        if let Some(&low) = col.last() {
            owner[low as usize] = reduced.len() as u32;
            out.rank += 1;
            out.pivot_rows.push(low);
        }
        reduced.push(col);
    }
    out
}

/// Column reduction of a ±1 matrix over the field of characteristic `p`
/// (`p = 0` for the rationals). Rows in each column must be increasing.
pub fn reduce_signed(cols: &[SignedCol], nrows: usize, p: u32) -> Reduction {
    match p {
        0 => reduce(&FracFree, cols, nrows, |c| c)
            .or_else(|| reduce(&BigFracFree, cols, nrows, |c| c))
            .expect("arbitrary precision cannot overflow"),
        2 => reduce_gf2(cols, nrows),
        _ => {
            let m = ModP(p);
            reduce(&m, cols, nrows, |c| {
                c.into_iter()
                    .map(|(r, v)| (r, if v == u32::MAX { p - 1 } else { v }))
                    .collect()
            })
            .expect("field elimination is total")
        }
    }
}

#[cfg(test)]
pub(crate) fn reduce_signed_bigint(cols: &[SignedCol], nrows: usize) -> Reduction {
    reduce(&BigFracFree, cols, nrows, |c| c).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_rank_rational(m: &[Vec<i64>]) -> usize {
        // Bareiss-free Gaussian elimination on BigInt rows with cross-multiplication.
        let mut rows: Vec<Vec<BigInt>> = m
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..rows.len()).find(|&r| !Zero::is_zero(&rows[r][c])) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && !Zero::is_zero(&row[c]) {
                    let (a, b) = (pivot[c].clone(), row[c].clone());
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x = &*x * &a - y * &b;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn to_cols(m: &[Vec<i64>], nrows: usize, ncols: usize) -> Vec<SignedCol> {
        (0..ncols)
            .map(|c| {
                (0..nrows)
                    .filter(|&r| m[r][c] != 0)
                    .map(|r| (r as u32, m[r][c] < 0))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn triangle_boundary_has_rank_two() {
        // vertices 0,1,2; edges 01, 02, 12 as columns
        let cols = vec![
            vec![(0, true), (1, false)],
            vec![(0, true), (2, false)],
            vec![(1, true), (2, false)],
        ];
        for p in [0, 2, 3, 5] {
            assert_eq!(reduce_signed(&cols, 3, p).rank, 2);
        }
    }

    #[test]
    fn characteristic_two_can_drop_rank() {
        // [[1,1],[1,-1]] has rank 2 over Q and F_3 but 1 over F_2.
        let cols = vec![vec![(0, false), (1, false)], vec![(0, false), (1, true)]];
        assert_eq!(reduce_signed(&cols, 2, 0).rank, 2);
        assert_eq!(reduce_signed(&cols, 2, 3).rank, 2);
        assert_eq!(reduce_signed(&cols, 2, 2).rank, 1);
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense_oracle(entries in proptest::collection::vec(-1i64..=1, 30)) {
            let (nrows, ncols) = (5, 6);
            let m: Vec<Vec<i64>> = (0..nrows).map(|r| entries[r * ncols..(r + 1) * ncols].to_vec()).collect();
            let cols = to_cols(&m, nrows, ncols);
            let expect = dense_rank_rational(&m);
            prop_assert_eq!(reduce_signed(&cols, nrows, 0).rank, expect);
            prop_assert_eq!(reduce_signed_bigint(&cols, nrows).rank, expect);
            prop_assert!(reduce_signed(&cols, nrows, 3).rank <= expect);
            prop_assert!(reduce_signed(&cols, nrows, 2).rank <= expect);
        }
    }
}
