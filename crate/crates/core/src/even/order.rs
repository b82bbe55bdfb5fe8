//! Total order on the minimal generators of `I(G)^s` induced by an edge order
//! `L_1 > L_2 > … > L_k`: each generator is compared through its
//! lexicographically greatest exponent vector `M = L_1^{a_1}⋯L_k^{a_k}`.

use serde::Serialize;

use crate::graph::SimpleGraph;
use crate::ideal::{edge_ideal, Monomial, MonomialIdeal, Variable};
use crate::{Error, Result};

/// Edges of the host listed from greatest to least.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrder {
    edges: Vec<(usize, usize)>,
}

impl EdgeOrder {
    /// Edges in the host's `(i, j)`, `i < j` order.
    pub fn default_for(host: &SimpleGraph) -> Self {
        EdgeOrder {
            edges: host.edges(),
        }
    }

    /// Must list every host edge exactly once.
    pub fn new(host: &SimpleGraph, edges: &[(&str, &str)]) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let (a, b) = (host.require(u)?, host.require(v)?);
            if !host.adjacent(a, b) {
                return Err(Error::Precondition(format!(
                    "{u}{v} is not an edge of the host"
                )));
            }
            out.push((a.min(b), a.max(b)));
        }
        let mut sorted = out.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != out.len() || sorted.len() != host.edge_count() {
            return Err(Error::Precondition(
                "edge order must list every edge exactly once".into(),
            ));
        }
        Ok(EdgeOrder { edges: out })
    }

    pub fn from_index_edges(host: &SimpleGraph, edges: Vec<(usize, usize)>) -> Result<Self> {
        let labels: Vec<(String, String)> = edges
            .iter()
            .map(|&(a, b)| (host.label(a).to_string(), host.label(b).to_string()))
            .collect();
        let refs: Vec<(&str, &str)> = labels
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        EdgeOrder::new(host, &refs)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

fn exponents_on_host(host: &SimpleGraph, m: &Monomial) -> Option<Vec<u32>> {
    let mut e = vec![0u32; host.n()];
    for (v, k) in m.terms() {
        e[host.index_of(&v.label())?] = *k;
    }
    Some(e)
}

/// Lexicographically greatest `(a_1, …, a_k)` with `m = Π L_i^{a_i}`.
pub fn maximal_expression(host: &SimpleGraph, m: &Monomial, order: &EdgeOrder) -> Result<Vec<u32>> {
    let deg = m.degree();
    let s = (deg / 2) as usize;
    let not_product = || Error::NotAProduct(m.to_string(), s);
    let mut rem = exponents_on_host(host, m).ok_or_else(not_product)?;
    if deg % 2 == 1 || deg == 0 {
        return Err(not_product());
    }
    let edges = order.edges();
    // Past the last edge at a vertex, that vertex must already be used up.
    let mut last = vec![usize::MAX; host.n()];
    for (k, &(a, b)) in edges.iter().enumerate() {
        last[a] = k;
        last[b] = k;
    }
    if rem
        .iter()
        .enumerate()
        .any(|(v, &x)| x > 0 && last[v] == usize::MAX)
    {
        return Err(not_product());
    }
    let mut exps = vec![0u32; edges.len()];
    if search(edges, &last, 0, &mut rem, &mut exps) {
        Ok(exps)
    } else {
        Err(not_product())
    }
}

// Trying large exponents first makes the first solution the lex-greatest one.
fn search(
    edges: &[(usize, usize)],
    last: &[usize],
    k: usize,
    rem: &mut [u32],
    exps: &mut [u32],
) -> bool {
    if k == edges.len() {
        return rem.iter().all(|&x| x == 0);
    }
    let (a, b) = edges[k];
    let hi = rem[a].min(rem[b]);
    for t in (0..=hi).rev() {
        rem[a] -= t;
        rem[b] -= t;
        let ok = (last[a] != k || rem[a] == 0) && (last[b] != k || rem[b] == 0);
        if ok {
            exps[k] = t;
            if search(edges, last, k + 1, rem, exps) {
                return true;
            }
        }
        rem[a] += t;
        rem[b] += t;
    }
    exps[k] = 0;
    false
}

/// Minimal generators of `I^s`, greatest first, with their maximal expressions.
#[derive(Clone, Debug)]
pub struct GeneratorOrder {
    pub edge_order: EdgeOrder,
    pub s: u32,
    pub generators: Vec<(Monomial, Vec<u32>)>,
}

impl GeneratorOrder {
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().map(|g| &g.0)
    }
}

pub fn ordered_generators(host: &SimpleGraph, s: u32, order: &EdgeOrder) -> Result<GeneratorOrder> {
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    let gens = edge_ideal(host).power(s);
    let mut out = gens
        .gens()
        .iter()
        .map(|g| Ok((g.clone(), maximal_expression(host, g, order)?)))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|x, y| y.1.cmp(&x.1));
    Ok(GeneratorOrder {
        edge_order: order.clone(),
        s,
        generators: out,
    })
}

/// One instance of `((I^{s+1}, L_1, …, L_l) : L_{l+1}) = ((I^{s+1} : L_{l+1}), V)`.
#[derive(Clone, Debug, Serialize)]
pub struct OrderedColonReport {
    pub ell: usize,
    pub generator: String,
    pub lhs: Vec<String>,
    pub colon: Vec<String>,
    /// Variables `V`: the degree-one generators of the left side.
    pub variables: Vec<String>,
    pub holds: bool,
}

fn strings(i: &MonomialIdeal) -> Vec<String> {
    i.gens().iter().map(ToString::to_string).collect()
}

/// Computes both sides for `1 ≤ ℓ ≤ r − 1`. The left side equals the colon
/// plus some variables exactly when it equals the colon plus its own
/// degree-one generators, since the colon is generated in degree two.
pub fn verify_ordered_colon_decomposition(
    host: &SimpleGraph,
    s: u32,
    order: &EdgeOrder,
    ell: usize,
) -> Result<OrderedColonReport> {
    let go = ordered_generators(host, s, order)?;
    report_for(host, &go, ell)
}

fn report_for(host: &SimpleGraph, go: &GeneratorOrder, ell: usize) -> Result<OrderedColonReport> {
    let r = go.generators.len();
    if ell == 0 || ell >= r {
        return Err(Error::Precondition(format!(
            "need 1 ≤ ℓ ≤ {} but got {ell}",
            r.saturating_sub(1)
        )));
    }
    let next = edge_ideal(host).power(go.s + 1);
    let target = &go.generators[ell].0;
    let lhs = next
        .add(go.generators[..ell].iter().map(|g| &g.0))
        .colon(target);
    let colon = next.colon(target);
    let vars: Vec<Variable> = lhs.linear_part();
    let rhs = colon.add(&vars.iter().cloned().map(Monomial::var).collect::<Vec<_>>());
    Ok(OrderedColonReport {
        ell,
        generator: target.to_string(),
        holds: lhs == rhs,
        lhs: strings(&lhs),
        colon: strings(&colon),
        variables: vars.iter().map(ToString::to_string).collect(),
    })
}

/// Every `ℓ` in `1..r`; empty when `I^s` has a single generator.
pub fn verify_all_ordered_colons(
    host: &SimpleGraph,
    s: u32,
    order: &EdgeOrder,
) -> Result<Vec<OrderedColonReport>> {
    let go = ordered_generators(host, s, order)?;
    (1..go.generators.len())
        .map(|ell| report_for(host, &go, ell))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn cycle4() -> (SimpleGraph, EdgeOrder) {
        let c4 =
            SimpleGraph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        let order = EdgeOrder::new(&c4, &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        (c4, order)
    }

    /// Every factorization of `m` into `s` edges, by brute force over multisets.
    fn all_expressions(host: &SimpleGraph, m: &Monomial, order: &EdgeOrder) -> Vec<Vec<u32>> {
        let k = order.edges().len();
        let s = m.degree() / 2;
        let mut out = Vec::new();
        let mut cur = vec![0u32; k];
        fn rec(
            i: usize,
            left: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
            f: &dyn Fn(&[u32]) -> bool,
        ) {
            if i == cur.len() {
                if left == 0 && f(cur) {
                    out.push(cur.clone());
                }
                return;
            }
            for t in 0..=left {
                cur[i] = t;
                rec(i + 1, left - t, cur, out, f);
            }
            cur[i] = 0;
        }
        let check = |a: &[u32]| {
            let prod = a
                .iter()
                .zip(order.edges())
                .fold(Monomial::one(), |acc, (&t, &(x, y))| {
                    acc.mul(&Monomial::from_labels(&[host.label(x), host.label(y)]).pow(t))
                });
            prod == *m
        };
        rec(0, s, &mut cur, &mut out, &check);
        out
    }

    #[test]
    fn four_cycle_prefers_the_first_edge() {
        let (c4, order) = cycle4();
        let m = Monomial::parse("a*b*c*d").unwrap();
        assert_eq!(
            maximal_expression(&c4, &m, &order).unwrap(),
            vec![1, 0, 1, 0]
        );
        let all = all_expressions(&c4, &m, &order);
        assert_eq!(all.len(), 2);
        assert_eq!(all.iter().max().unwrap(), &vec![1, 0, 1, 0]);
    }

    #[test]
    fn unique_expressions() {
        let g = SimpleGraph::from_edges(&[("x", "y")]).unwrap();
        let order = EdgeOrder::default_for(&g);
        assert_eq!(
            maximal_expression(&g, &Monomial::parse("x^3*y^3").unwrap(), &order).unwrap(),
            vec![3]
        );
        let p3 = catalog::get("P3").unwrap();
        let order = EdgeOrder::new(&p3, &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(
            maximal_expression(&p3, &Monomial::parse("a^2*b^2").unwrap(), &order).unwrap(),
            vec![2, 0]
        );
    }

    #[test]
    fn non_products_rejected() {
        let p3 = catalog::get("P3").unwrap();
        let order = EdgeOrder::default_for(&p3);
        for bad in ["a*c", "a*b*c", "a^2*c^2", "z*a"] {
            let m = Monomial::parse(bad).unwrap();
            assert!(
                matches!(
                    maximal_expression(&p3, &m, &order),
                    Err(Error::NotAProduct(..))
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn maximal_expression_matches_brute_force() {
        for name in ["C5", "G_1", "K4"] {
            let g = catalog::get(name).unwrap();
            let order = EdgeOrder::default_for(&g);
            for m in edge_ideal(&g).power(2).gens() {
                let best = all_expressions(&g, m, &order).into_iter().max().unwrap();
                assert_eq!(
                    maximal_expression(&g, m, &order).unwrap(),
                    best,
                    "{name} {m}"
                );
            }
        }
    }

    #[test]
    fn ordered_generators_of_small_powers() {
        let p3 = catalog::get("P3").unwrap();
        let order = EdgeOrder::new(&p3, &[("a", "b"), ("b", "c")]).unwrap();
        let go = ordered_generators(&p3, 2, &order).unwrap();
        let names: Vec<String> = go.monomials().map(ToString::to_string).collect();
        assert_eq!(names, ["a^2*b^2", "a*b^2*c", "b^2*c^2"]);

        let (c4, order) = cycle4();
        let go = ordered_generators(&c4, 2, &order).unwrap();
        assert_eq!(go.generators.len(), 9);
        assert_eq!(go.generators[0].0.to_string(), "a^2*b^2");
        assert!(go.generators.windows(2).all(|w| w[0].1 > w[1].1));
    }

    #[test]
    fn ordered_colon_identity_on_small_hosts() {
        for name in ["P4", "C5"] {
            let g = catalog::get(name).unwrap();
            let reports = verify_all_ordered_colons(&g, 1, &EdgeOrder::default_for(&g)).unwrap();
            assert_eq!(reports.len(), g.edge_count() - 1);
            assert!(reports.iter().all(|r| r.holds), "{name}");
        }
        let one = SimpleGraph::from_edges(&[("x", "y")]).unwrap();
        assert!(
            verify_all_ordered_colons(&one, 1, &EdgeOrder::default_for(&one))
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn edge_order_must_be_a_permutation() {
        let p3 = catalog::get("P3").unwrap();
        assert!(EdgeOrder::new(&p3, &[("a", "b")]).is_err());
        assert!(EdgeOrder::new(&p3, &[("a", "b"), ("b", "a")]).is_err());
        assert!(EdgeOrder::new(&p3, &[("a", "c"), ("b", "c")]).is_err());
    }
}
