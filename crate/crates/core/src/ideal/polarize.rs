use std::collections::{BTreeMap, HashSet};

use super::{minimalize, Monomial, MonomialIdeal, Variable};

/// Lineage of the variables of a polarized ideal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolarizationMap {
    origin: BTreeMap<Variable, Variable>,
}

impl PolarizationMap {
    /// The variable of the original ideal that `v` was split from.
    pub fn origin(&self, v: &Variable) -> Option<&Variable> {
        self.origin.get(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &Variable)> {
        self.origin.iter()
    }
}

impl MonomialIdeal {
    /// Replaces `x^e` by `x·x#1⋯x#(e-1)`. Copies whose index is already taken
    /// by another variable of the ideal move up to the next free index.
    /// Squarefree ideals are returned unchanged.
    pub fn polarize(&self) -> (MonomialIdeal, PolarizationMap) {
        let vars = self.variables();
        let mut used: HashSet<Variable> = vars.iter().cloned().collect();
        // Highest exponent of each variable decides how many copies it needs.
        let mut need: BTreeMap<&Variable, u32> = BTreeMap::new();
        for g in self.gens() {
            for (v, e) in g.terms() {
                let n = need.entry(v).or_insert(0);
                *n = (*n).max(*e);
            }
        }
        let mut copies: BTreeMap<&Variable, Vec<Variable>> = BTreeMap::new();
        let mut map = PolarizationMap::default();
        for (v, e) in need {
            let mut list = vec![v.clone()];
            for k in 1..e {
                let mut idx = if v.index() == 0 { k } else { v.index() + k };
                while used.contains(&Variable::new(v.name(), idx)) {
                    idx += 1;
                }
                used.insert(Variable::new(v.name(), idx));
                list.push(Variable::new(v.name(), idx));
            }
            for c in &list {
                map.origin.insert(c.clone(), v.clone());
            }
            copies.insert(v, list);
        }
        let gens = self.gens().iter().map(|g| {
            Monomial::from_factors(
                g.terms()
                    .iter()
                    .flat_map(|(v, e)| copies[v][..*e as usize].iter().map(|c| (c.clone(), 1))),
            )
        });
        (minimalize(gens), map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(s).unwrap()
    }

    #[test]
    fn standard_polarization() {
        let (p, map) = ideal("x^2*y").polarize();
        assert_eq!(p, ideal("x*x#1*y"));
        assert_eq!(
            map.origin(&Variable::new("x", 1)),
            Some(&Variable::new("x", 0))
        );
    }

    #[test]
    fn squarefree_is_fixed() {
        let j = ideal("a*b, b*c, c*d#1");
        assert_eq!(j.polarize().0, j);
    }

    #[test]
    fn sum_with_disjoint_squarefree_part() {
        let i = ideal("x^2*y, y^3");
        let j = ideal("z*w");
        assert_eq!(i.sum(&j).polarize().0, i.polarize().0.sum(&j));
    }

    #[test]
    fn preserves_generator_count_and_degrees() {
        let i = ideal("a^2*b, a*b^2*c, c^3, a*c");
        let p = i.polarize().0;
        assert!(p.is_squarefree());
        let mut d1: Vec<u32> = i.gens().iter().map(Monomial::degree).collect();
        let mut d2: Vec<u32> = p.gens().iter().map(Monomial::degree).collect();
        d1.sort();
        d2.sort();
        assert_eq!(d1, d2);
    }

    #[test]
    fn indexed_variables_get_fresh_copies() {
        let (p, _) = ideal("x#1^2*x").polarize();
        assert!(p.is_squarefree());
        assert_eq!(p.gens()[0].degree(), 3);
        let (p, map) = ideal("x^3*x#1").polarize();
        assert_eq!(p.gens()[0].degree(), 4);
        assert_eq!(map.iter().count(), 4);
    }
}
