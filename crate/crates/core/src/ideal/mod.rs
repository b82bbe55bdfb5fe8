//! Monomial ideals kept as canonical minimal generating sets.
//!
//! Variables are `(name, index)` pairs where index 0 is the original variable
//! and higher indices are polarized copies (`x#1`, `x#2`, …). Graph vertex
//! labels map to variables through [`Variable::from_label`].

mod polarize;
mod text;

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::graph::SimpleGraph;
use crate::{Error, Result};

pub use polarize::PolarizationMap;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    name: Arc<str>,
    index: u32,
}

impl Variable {
    pub fn new(name: impl AsRef<str>, index: u32) -> Self {
        Variable {
            name: Arc::from(name.as_ref()),
            index,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// `a#3` becomes `(a, 3)`; anything else is an original variable.
    pub fn from_label(label: &str) -> Self {
        if let Some((stem, k)) = label.rsplit_once('#') {
            let digits =
                !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()) && !k.starts_with('0');
            if digits && !stem.is_empty() {
                if let Ok(i) = k.parse() {
                    return Variable::new(stem, i);
                }
            }
        }
        Variable::new(label, 0)
    }

    /// Inverse of [`Variable::from_label`].
    pub fn label(&self) -> String {
        if self.index == 0 {
            self.name.to_string()
        } else {
            format!("{}#{}", self.name, self.index)
        }
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse monomial: strictly increasing variables with positive exponents.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    terms: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial {
            terms: vec![(v, 1)],
        }
    }

    /// Builds from arbitrary factors; repeated variables accumulate and zero
    /// exponents are dropped.
    pub fn from_factors(factors: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut terms: Vec<(Variable, u32)> = factors.into_iter().filter(|(_, e)| *e > 0).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Variable, u32)> = Vec::with_capacity(terms.len());
        for (v, e) in terms {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { terms: out }
    }

    /// Product of the variables named by `labels`.
    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Self {
        Monomial::from_factors(labels.iter().map(|l| (Variable::from_label(l.as_ref()), 1)))
    }

    pub fn terms(&self) -> &[(Variable, u32)] {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.1).sum()
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.terms
            .binary_search_by(|t| t.0.cmp(v))
            .map_or(0, |i| self.terms[i].1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.terms.iter().all(|t| t.1 == 1)
    }

    pub fn support(&self) -> impl Iterator<Item = &Variable> {
        self.terms.iter().map(|t| &t.0)
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let (v, e) = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    i += 1;
                    j += 1;
                    (&x.0, f(x.1, y.1))
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    i += 1;
                    (&x.0, f(x.1, 0))
                }
                (Some(x), None) => {
                    i += 1;
                    (&x.0, f(x.1, 0))
                }
                (_, Some(y)) => {
                    j += 1;
                    (&y.0, f(0, y.1))
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                out.push((v.clone(), e));
            }
        }
        Monomial { terms: out }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |x, y| x + y)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            terms: self.terms.iter().map(|(v, e)| (v.clone(), e * k)).collect(),
        }
    }

    /// `self / gcd(self, other)`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        self.merge(other, |x, y| x.saturating_sub(y))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        let b = &other.terms;
        for (v, e) in &self.terms {
            while j < b.len() && b[j].0 < *v {
                j += 1;
            }
            if j == b.len() || b[j].0 != *v || b[j].1 < *e {
                return false;
            }
        }
        true
    }

    fn canonical_key(&self) -> (u32, &Monomial) {
        (self.degree(), self)
    }
}

/// Monomial ideal with its minimal generators sorted by degree, then by the
/// monomial order induced from the variable order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

/// Reduces to a minimal generating set in canonical order. The unit monomial
/// yields the unit ideal `(1)`.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut cand: Vec<Monomial> = gens.into_iter().collect();
    cand.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    cand.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(cand.len());
    for m in cand {
        let deg = m.degree();
        if !kept
            .iter()
            .take_while(|k| k.degree() < deg)
            .any(|k| k.divides(&m))
        {
            kept.push(m);
        }
    }
    MonomialIdeal { gens: kept }
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal::default()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators; see [`MonomialIdeal::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Variables occurring in some generator, in variable order.
    pub fn variables(&self) -> BTreeSet<Variable> {
        self.gens
            .iter()
            .flat_map(|g| g.support().cloned())
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut seen = HashSet::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                seen.insert(a.mul(b));
            }
        }
        minimalize(seen)
    }

    /// `I^s`; `s = 0` gives the unit ideal.
    pub fn power(&self, s: u32) -> MonomialIdeal {
        let mut acc = minimalize([Monomial::one()]);
        for _ in 0..s {
            acc = acc.product(self);
        }
        acc
    }

    /// `(I : m)` generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        minimalize(self.gens.iter().map(|g| g.quotient(m)))
    }

    /// `(I, m_1, …, m_k)`.
    pub fn add<'a>(&self, ms: impl IntoIterator<Item = &'a Monomial>) -> MonomialIdeal {
        minimalize(self.gens.iter().cloned().chain(ms.into_iter().cloned()))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.add(&other.gens)
    }

    /// Syntactic equality of canonical minimal generators.
    pub fn equals(&self, other: &MonomialIdeal) -> bool {
        self == other
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Generators of degree 1 as variables.
    pub fn linear_part(&self) -> Vec<Variable> {
        self.gens
            .iter()
            .filter(|g| g.degree() == 1)
            .map(|g| g.terms[0].0.clone())
            .collect()
    }
}

impl FromIterator<Monomial> for MonomialIdeal {
    fn from_iter<T: IntoIterator<Item = Monomial>>(iter: T) -> Self {
        minimalize(iter)
    }
}

/// `(xy : xy an edge)`. Isolated vertices contribute nothing.
pub fn edge_ideal(g: &SimpleGraph) -> MonomialIdeal {
    minimalize(
        g.edge_labels()
            .into_iter()
            .map(|(u, v)| Monomial::from_labels(&[u, v])),
    )
}

/// The graph whose edge ideal is `i`; vertices are the occurring variables
/// (labelled by [`Variable::label`]) in variable order.
pub fn graph_of(i: &MonomialIdeal) -> Result<SimpleGraph> {
    for g in i.gens() {
        if g.degree() != 2 || !g.is_squarefree() {
            return Err(Error::NotQuadraticSquarefree(g.to_string()));
        }
    }
    let mut out = SimpleGraph::with_vertices(i.variables().iter().map(Variable::label))?;
    for g in i.gens() {
        out.add_edge(&g.terms[0].0.label(), &g.terms[1].0.label())?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::are_isomorphic;

    pub(crate) fn ideal(s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(s).unwrap()
    }

    fn mono(s: &str) -> Monomial {
        Monomial::parse(s).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal("x^2, x^2*y"), ideal("x^2"));
        assert_eq!(ideal("x*y, y*z, x*y").len(), 2);
        let c4 = edge_ideal(&catalog::get("C4").unwrap());
        let raw: Vec<Monomial> = (0..4)
            .flat_map(|i| (i..4).map(move |j| (i, j)))
            .map(|(i, j)| c4.gens()[i].mul(&c4.gens()[j]))
            .collect();
        assert_eq!(raw.len(), 10);
        assert_eq!(minimalize(raw.clone()).len(), 9);
        assert_eq!(minimalize(minimalize(raw).gens().to_vec()).len(), 9);
    }

    #[test]
    fn powers() {
        assert_eq!(ideal("x*y").power(3), ideal("x^3*y^3"));
        let p3 = edge_ideal(&catalog::get("P3").unwrap());
        assert_eq!(p3.power(2), ideal("a^2*b^2, a*b^2*c, b^2*c^2"));
        assert_eq!(edge_ideal(&catalog::get("C4").unwrap()).power(2).len(), 9);
    }

    #[test]
    fn colons() {
        let i = ideal("a*b, b*c");
        assert_eq!(i.colon(&Monomial::one()), i);
        assert_eq!(ideal("x^2*y").colon(&mono("x")), ideal("x*y"));
        let p4 = edge_ideal(&catalog::get("P4").unwrap());
        assert_eq!(p4.power(2).colon(&mono("b*c")), ideal("a*b, b*c, c*d, a*d"));
    }

    #[test]
    fn colon_matches_membership_oracle() {
        // u ∈ (I : m) iff u·m ∈ I, for every monomial of degree ≤ 2.
        let p4 = edge_ideal(&catalog::get("P4").unwrap());
        let sq = p4.power(2);
        let m = mono("b*c");
        let colon = sq.colon(&m);
        let vars = ["a", "b", "c", "d"];
        for x in vars {
            assert_eq!(colon.contains(&mono(x)), sq.contains(&mono(x).mul(&m)));
            for y in vars {
                let u = Monomial::from_labels(&[x, y]);
                assert_eq!(colon.contains(&u), sq.contains(&u.mul(&m)), "{u}");
            }
        }
    }

    #[test]
    fn sums() {
        assert_eq!(ideal("x*y").add(&[mono("x")]), ideal("x"));
        let i = ideal("x*y, y*z");
        assert_eq!(i.add(i.gens()), i);
        assert_eq!(ideal("y*z").add(&[mono("x")]), ideal("y*z, x"));
    }

    #[test]
    fn edge_ideal_round_trip() {
        assert_eq!(
            edge_ideal(&catalog::get("K3").unwrap()),
            ideal("a*b, b*c, a*c")
        );
        let g1 = catalog::get("G_1").unwrap();
        assert!(are_isomorphic(&graph_of(&edge_ideal(&g1)).unwrap(), &g1).is_some());
        let mut g = catalog::get("P3").unwrap();
        g.add_vertex("z").unwrap();
        assert_eq!(graph_of(&edge_ideal(&g)).unwrap().n(), 3);
        assert!(matches!(
            graph_of(&ideal("x^2")),
            Err(Error::NotQuadraticSquarefree(_))
        ));
        assert!(graph_of(&ideal("x*y*z")).is_err());
    }

    #[test]
    fn labels_and_polarized_variables() {
        assert_eq!(Variable::from_label("a#2"), Variable::new("a", 2));
        assert_eq!(Variable::from_label("a#0"), Variable::new("a#0", 0));
        assert_eq!(Variable::from_label("#1"), Variable::new("#1", 0));
        for l in ["u^1", "a#1", "x", "a#0", "b#12"] {
            assert_eq!(Variable::from_label(l).label(), l);
        }
    }

    #[test]
    fn equality_is_order_free() {
        assert!(ideal("x*y, y*z").equals(&ideal("y*z, x*y")));
        assert!(!ideal("x").equals(&ideal("x^2")));
    }
}
