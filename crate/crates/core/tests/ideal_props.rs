mod common;

use common::{graphs, ideals, monomials};
use proptest::prelude::*;
use regulab::betti::{betti_table, koszul_betti_table, regularity, FieldSpec};
use regulab::ideal::{edge_ideal, graph_of, minimalize, Variable};

const Q: FieldSpec = FieldSpec::RATIONALS;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn minimalization_is_a_fixpoint(i in ideals(4, 3, 6)) {
        prop_assert_eq!(&minimalize(i.gens().to_vec()), &i);
        let mut rev = i.gens().to_vec();
        rev.reverse();
        prop_assert_eq!(&minimalize(rev), &i);
    }

    #[test]
    fn products_of_powers(i in ideals(4, 2, 4), s in 1u32..=2, t in 1u32..=2) {
        prop_assert!(i.power(s).product(&i.power(t)).equals(&i.power(s + t)));
    }

    #[test]
    fn colon_membership(i in ideals(4, 2, 5), m in monomials(4, 2), x in monomials(4, 2)) {
        let c = i.colon(&m);
        prop_assert_eq!(c.contains(&x), i.contains(&x.mul(&m)));
        prop_assert!(i.is_subset_of(&c));
    }

    #[test]
    fn polarization_keeps_generator_count_and_degrees(i in ideals(4, 3, 6)) {
        let (p, _) = i.polarize();
        prop_assert!(p.is_squarefree());
        let mut a: Vec<u32> = i.gens().iter().map(|m| m.degree()).collect();
        let mut b: Vec<u32> = p.gens().iter().map(|m| m.degree()).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn graph_of_edge_ideal(g in graphs(1, 6)) {
        prop_assert_eq!(graph_of(&edge_ideal(&g)).unwrap(), g.without_isolated());
    }

    /// Lcm-lattice Koszul complexes on `I` against Hochster on its polarization.
    #[test]
    fn polarization_preserves_betti_numbers(i in ideals(4, 2, 5)) {
        for f in [Q, FieldSpec::new(2).unwrap()] {
            let direct = koszul_betti_table(&i, f).unwrap();
            let polar = betti_table(&i.polarize().0, f).unwrap();
            prop_assert!(direct.same_numbers(&polar), "{:?}\n{}\n{}", i, direct.pretty(), polar.pretty());
        }
    }

    #[test]
    fn adding_a_variable_does_not_raise_regularity(i in ideals(4, 2, 5), k in 0usize..5) {
        let x = regulab::ideal::Monomial::var(Variable::new(((b'a' + k as u8) as char).to_string(), 0));
        prop_assert!(regularity(&i.add([&x]), Q).unwrap() <= regularity(&i, Q).unwrap());
    }

    #[test]
    fn colon_bound(i in ideals(4, 2, 5), m in monomials(4, 1)) {
        prop_assume!(!m.is_one());
        let reg = regularity(&i, Q).unwrap();
        let colon = regularity(&i.colon(&m), Q).unwrap() + m.degree() as i64;
        let sum = regularity(&i.add([&m]), Q).unwrap();
        prop_assert!(reg <= colon.max(sum));
        if m.degree() == 1 && i.variables().contains(&m.terms()[0].0) {
            prop_assert!(reg == colon || reg == sum, "reg {reg}, colon term {colon}, sum term {sum}");
        }
    }
}
