//! Graded Betti numbers and regularity of monomial ideals.
//!
//! The main engine is Hochster's formula on the polarization,
//! `b_{i,j}(I) = Σ_{|W| = j} dim H̃_{j−i−2}(Δ|_W)`, where `Δ` is the
//! Stanley–Reisner complex. Only sets `W` that are unions of generator
//! supports are visited: otherwise some vertex of `W` lies in no non-face
//! inside `W` and `Δ|_W` is a cone. Each restriction is built either directly
//! or through its Alexander dual inside `W`, whichever has fewer faces.
//!
//! A second, independent route works on the ideal itself through the upper
//! Koszul complexes `K^α = {F ⊆ supp α : x^{α−F} ∈ I}`, with
//! `b_{i,α}(I) = dim H̃_{i−1}(K^α)`.

mod complex;
mod rank;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{is_chordal, SimpleGraph};
use crate::ideal::{MonomialIdeal, Variable};
use crate::{Error, Result};

pub use complex::Complex;

/// Refusal threshold on the number of polarized variables.
pub const VERTEX_LIMIT: usize = 24;

/// Characteristic of the coefficient field: 0 for the rationals or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FieldSpec(u32);

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec(0);

    pub fn new(characteristic: u32) -> Result<Self> {
        let prime = characteristic >= 2
            && (2..)
                .take_while(|d| d * d <= characteristic)
                .all(|d| !characteristic.is_multiple_of(d));
        if characteristic == 0 || prime {
            Ok(FieldSpec(characteristic))
        } else {
            Err(Error::BadCharacteristic(characteristic))
        }
    }

    pub fn characteristic(self) -> u32 {
        self.0
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::RATIONALS
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("QQ"),
            p => write!(f, "GF({p})"),
        }
    }
}

/// Squarefree ideal seen as a simplicial complex: the faces are the vertex
/// sets containing no generator support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonFaceSystem {
    pub vertices: Vec<Variable>,
    /// Minimal non-faces as masks over `vertices`.
    pub nonfaces: Vec<u32>,
}

impl NonFaceSystem {
    pub fn is_face(&self, mask: u32) -> bool {
        self.nonfaces.iter().all(|&n| mask & n != n)
    }

    pub fn all(&self) -> u32 {
        low_mask(self.vertices.len())
    }

    pub fn mask_of(&self, vars: &[Variable]) -> Option<u32> {
        vars.iter().try_fold(0u32, |m, v| {
            Some(m | 1 << self.vertices.iter().position(|w| w == v)?)
        })
    }
}

fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn stanley_reisner(i: &MonomialIdeal) -> Result<NonFaceSystem> {
    if let Some(g) = i.gens().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree(g.to_string()));
    }
    let vertices: Vec<Variable> = i.variables().into_iter().collect();
    if vertices.len() > 32 {
        return Err(Error::TooLarge {
            vertices: vertices.len(),
            limit: 32,
        });
    }
    let index: HashMap<&Variable, usize> =
        vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let nonfaces = i
        .gens()
        .iter()
        .map(|g| g.support().fold(0u32, |m, v| m | 1 << index[v]))
        .collect();
    Ok(NonFaceSystem { vertices, nonfaces })
}

/// Reduced homology of `Δ|_W` as `(degree, rank)` pairs with nonzero rank.
pub fn reduced_homology_dims(nf: &NonFaceSystem, w: u32, field: FieldSpec) -> BTreeMap<i32, usize> {
    let inside: Vec<u32> = nf
        .nonfaces
        .iter()
        .copied()
        .filter(|&n| n & w == n)
        .collect();
    let c = Complex::enumerate(w, usize::MAX, |f, _| inside.iter().all(|&n| f & n != n))
        .expect("no cap");
    complex::dims_map(&c.reduced_homology(field.characteristic()))
        .into_iter()
        .collect()
}

/// Nonzero graded Betti numbers `b_{i,j}` of an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub field: FieldSpec,
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    fn new(field: FieldSpec) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, i: usize, j: usize, b: u64) {
        *self.entries.entry((i, j)).or_insert(0) += b;
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `max{j − i}`; 1 for the zero ideal by convention.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .unwrap_or(1)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Same numbers, ignoring the field label.
    pub fn same_numbers(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    pub fn rows(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(i, j), &b)| BettiEntry { i, j, b })
            .collect()
    }

    /// Macaulay-style table: rows `j − i`, columns `i`.
    pub fn pretty(&self) -> String {
        let pd = self.projective_dimension();
        let lo = self
            .entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .min()
            .unwrap_or(0);
        let hi = self.regularity();
        let width = self
            .entries
            .values()
            .map(|b| b.to_string().len())
            .max()
            .unwrap_or(1)
            .max(pd.to_string().len())
            + 1;
        let mut s = format!("{:>5}", "");
        for i in 0..=pd {
            s.push_str(&format!("{i:>width$}"));
        }
        s.push('\n');
        for r in lo..=hi {
            s.push_str(&format!("{:>4}:", r));
            for i in 0..=pd {
                let b = if r + i as i64 >= 0 {
                    self.get(i, (r + i as i64) as usize)
                } else {
                    0
                };
                if b == 0 {
                    s.push_str(&format!("{:>width$}", "."));
                } else {
                    s.push_str(&format!("{b:>width$}"));
                }
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub b: u64,
}

/// All unions of non-empty families of the given masks.
fn union_closure(gens: &[u32]) -> Vec<u32> {
    let mut seen: HashSet<u32> = HashSet::new();
    let mut list: Vec<u32> = Vec::new();
    for &g in gens {
        let mut fresh = Vec::new();
        if seen.insert(g) {
            fresh.push(g);
        }
        for &x in &list {
            let u = x | g;
            if seen.insert(u) {
                fresh.push(u);
            }
        }
        list.extend(fresh);
    }
    list.sort_unstable_by_key(|&w| (w.count_ones(), w));
    list
}

/// Homology contributions `(i, j, b)` of one restriction, per field.
fn restriction_contributions(
    nf: &NonFaceSystem,
    w: u32,
    fields: &[FieldSpec],
) -> Vec<Vec<(usize, usize, u64)>> {
    let size = w.count_ones() as usize;
    let inside: Vec<u32> = nf
        .nonfaces
        .iter()
        .copied()
        .filter(|&n| n & w == n)
        .collect();
    let half = 1usize << (size.max(1) - 1);
    let direct = Complex::enumerate(w, half, |f, _| inside.iter().all(|&n| f & n != n));
    let (c, dual) = match direct {
        Some(c) => (c, false),
        None => {
            // F is a face of the dual when W \ F still contains a non-face.
            let c = Complex::enumerate(w, usize::MAX, |f, _| {
                let rest = w & !f;
                inside.iter().any(|&n| n & !rest == 0)
            })
            .expect("no cap");
            (c, true)
        }
    };
    fields
        .iter()
        .map(|fs| {
            complex::dims_map(&c.reduced_homology(fs.characteristic()))
                .into_iter()
                .map(|(k, d)| {
                    // direct: k ↦ i = |W| − k − 2; dual degree k' ↦ i = k' + 1
                    let i = if dual { k + 1 } else { size as i32 - k - 2 };
                    debug_assert!(i >= 0);
                    (i as usize, size, d as u64)
                })
                .collect()
        })
        .collect()
}

fn unit_table(field: FieldSpec) -> BettiTable {
    let mut t = BettiTable::new(field);
    t.add(0, 0, 1);
    t
}

/// Betti tables of `i` over each field, via Hochster on the polarization.
pub fn betti_tables(i: &MonomialIdeal, fields: &[FieldSpec]) -> Result<Vec<BettiTable>> {
    if i.is_unit() {
        return Ok(fields.iter().map(|&f| unit_table(f)).collect());
    }
    let pol = if i.is_squarefree() {
        i.clone()
    } else {
        i.polarize().0
    };
    let n = pol.variables().len();
    if n > VERTEX_LIMIT {
        return Err(Error::TooLarge {
            vertices: n,
            limit: VERTEX_LIMIT,
        });
    }
    let nf = stanley_reisner(&pol)?;
    let candidates = union_closure(&nf.nonfaces);
    let parts: Vec<Vec<Vec<(usize, usize, u64)>>> = candidates
        .par_iter()
        .map(|&w| restriction_contributions(&nf, w, fields))
        .collect();
    let mut tables: Vec<BettiTable> = fields.iter().map(|&f| BettiTable::new(f)).collect();
    for per_field in parts {
        for (t, contrib) in tables.iter_mut().zip(per_field) {
            for (i, j, b) in contrib {
                t.add(i, j, b);
            }
        }
    }
    Ok(tables)
}

pub fn betti_table(i: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    Ok(betti_tables(i, &[field])?.pop().expect("one field"))
}

/// `reg(I)`; the zero ideal and ideals generated by variables have regularity 1.
pub fn regularity(i: &MonomialIdeal, field: FieldSpec) -> Result<i64> {
    Ok(betti_table(i, field)?.regularity())
}

/// A restriction carrying homology that forces `reg(I) > r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityWitness {
    pub subset: Vec<String>,
    pub i: usize,
    pub j: usize,
}

/// Scans only the restrictions able to contribute `j − i > r` and stops at
/// the first one that does. `None` certifies `reg(I) ≤ r`.
pub fn regularity_exceeds(
    i: &MonomialIdeal,
    r: i64,
    field: FieldSpec,
) -> Result<Option<RegularityWitness>> {
    if i.is_zero() || i.is_unit() {
        let reg = if i.is_zero() { 1 } else { 0 };
        return Ok((reg > r).then(|| RegularityWitness {
            subset: vec![],
            i: 0,
            j: reg as usize,
        }));
    }
    let pol = if i.is_squarefree() {
        i.clone()
    } else {
        i.polarize().0
    };
    let n = pol.variables().len();
    if n > VERTEX_LIMIT {
        return Err(Error::TooLarge {
            vertices: n,
            limit: VERTEX_LIMIT,
        });
    }
    let nf = stanley_reisner(&pol)?;
    let candidates: Vec<u32> = union_closure(&nf.nonfaces)
        .into_iter()
        .filter(|w| w.count_ones() as i64 > r)
        .collect();
    Ok(candidates.par_iter().find_map_first(|&w| {
        let hit = restriction_contributions(&nf, w, &[field])
            .pop()
            .unwrap()
            .into_iter()
            .find(|&(i, j, _)| j as i64 - i as i64 > r)?;
        Some(RegularityWitness {
            subset: (0..32)
                .filter(|v| w & (1 << v) != 0)
                .map(|v| nf.vertices[v].label())
                .collect(),
            i: hit.0,
            j: hit.1,
        })
    }))
}

/// Betti table of `i` from upper Koszul complexes over the lcm lattice,
/// without polarizing. Independent of [`betti_table`].
pub fn koszul_betti_table(i: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if i.is_unit() {
        return Ok(unit_table(field));
    }
    let vars: Vec<Variable> = i.variables().into_iter().collect();
    if vars.len() > 32 {
        return Err(Error::TooLarge {
            vertices: vars.len(),
            limit: 32,
        });
    }
    let exps: Vec<Vec<u32>> = i
        .gens()
        .iter()
        .map(|g| vars.iter().map(|v| g.exponent(v)).collect())
        .collect();
    // lcm lattice: closure of the generators under lcm
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut lattice: Vec<Vec<u32>> = Vec::new();
    for g in &exps {
        let mut fresh = Vec::new();
        if seen.insert(g.clone()) {
            fresh.push(g.clone());
        }
        for x in &lattice {
            let l: Vec<u32> = x.iter().zip(g).map(|(a, b)| *a.max(b)).collect();
            if seen.insert(l.clone()) {
                fresh.push(l);
            }
        }
        lattice.extend(fresh);
        if lattice.len() > 1 << 22 {
            return Err(Error::TooLarge {
                vertices: vars.len(),
                limit: VERTEX_LIMIT,
            });
        }
    }
    lattice.sort();
    let in_ideal = |alpha: &[u32]| {
        exps.iter()
            .any(|g| g.iter().zip(alpha).all(|(a, b)| a <= b))
    };
    let parts: Vec<Vec<(usize, usize, u64)>> = lattice
        .par_iter()
        .map(|alpha| {
            let support: Vec<usize> = (0..vars.len()).filter(|&k| alpha[k] > 0).collect();
            let ground = low_mask(support.len());
            let c = Complex::enumerate(ground, usize::MAX, |f, _| {
                let mut beta = alpha.clone();
                for (pos, &k) in support.iter().enumerate() {
                    if f & (1 << pos) != 0 {
                        beta[k] -= 1;
                    }
                }
                in_ideal(&beta)
            })
            .expect("no cap");
            let deg: u32 = alpha.iter().sum();
            complex::dims_map(&c.reduced_homology(field.characteristic()))
                .into_iter()
                .map(|(k, d)| ((k + 1) as usize, deg as usize, d as u64))
                .collect()
        })
        .collect();
    let mut t = BettiTable::new(field);
    for (i, j, b) in parts.into_iter().flatten() {
        t.add(i, j, b);
    }
    Ok(t)
}

/// Linear resolution test for edge ideals: `reg(I(G)) = 2` exactly when the
/// complement of `G` is chordal.
pub fn froberg_linear_check(g: &SimpleGraph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(is_chordal(&g.complement()).0)
}
