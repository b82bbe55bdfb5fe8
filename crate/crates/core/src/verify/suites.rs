use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::samples::{
    admissible_multiplication, all_graphs, chain_graph, family_sample, random_graph,
};
use super::{case, Case, Outcome, VerifyOptions};
use crate::betti::{betti_table, betti_tables, froberg_linear_check, BettiTable, FieldSpec};
use crate::catalog;
use crate::even::{
    colon_graph, even_connected, verify_all_ordered_colons, EdgeOrder, SFoldProduct,
};
use crate::graph::{are_isomorphic, multiply_vertices, Replacement, SimpleGraph};
use crate::ideal::{edge_ideal, Monomial, MonomialIdeal, Variable};
use crate::structure::{
    banerjee_sufficiency_check, check_colon_lemmas, check_computer_aided_lemma,
    check_structure_lemmas, classification_base, classify_gap_diamond_free,
    reg_upper_bound_via_star, Classification, Status,
};
use crate::Result;

type Builder = fn(&VerifyOptions) -> Result<Vec<Case>>;

pub(super) const REGISTRY: &[(&str, Builder)] = &[
    ("froberg-n5", froberg_n5),
    ("froberg", froberg),
    ("reg-le-3", reg_le_3),
    ("main-theorem-s2", main_theorem_s2),
    ("main-theorem-c5-s3", main_theorem_c5_s3),
    ("colon-values", colon_values),
    ("banerjee-sufficiency", banerjee_sufficiency),
    ("even-connection-oracle", even_connection_oracle),
    ("ordered-colon", ordered_colon),
    ("structure-lemmas", structure_lemmas),
    ("c5-edge-lemma", c5_edge_lemma),
    ("classification", classification),
    ("field-robustness", field_robustness),
];

pub(super) const ALIASES: &[(&str, &str)] = &[("lemma-4.4", "c5-edge-lemma")];

const SEED: u64 = 0x5eed_2024;

fn get(name: &str) -> SimpleGraph {
    catalog::get(name).expect("catalog name")
}

/// Gap-free indexed graphs with a triangle.
const TRIANGLE_BASES: [&str; 8] = ["G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9"];
const ALL_BASES: [&str; 11] = catalog::CLASSIFICATION_BASES;

/// 500 random labelled graphs on six vertices with at least one edge.
fn six_vertex_sample() -> Vec<SimpleGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    while out.len() < 500 {
        let g = random_graph(&mut rng, 6, 0.5);
        if g.edge_count() > 0 {
            out.push(g);
        }
    }
    out
}

fn small_graphs(max_n: usize) -> Vec<(String, Vec<SimpleGraph>)> {
    (2..=max_n)
        .map(|n| {
            let gs: Vec<SimpleGraph> = all_graphs(n)
                .into_iter()
                .filter(|g| g.edge_count() > 0)
                .collect();
            (format!("all graphs on {n} vertices ({})", gs.len()), gs)
        })
        .collect()
}

fn froberg_group(id: String, graphs: Vec<SimpleGraph>, field: FieldSpec) -> Case {
    case(id, move || {
        let mut bad = Vec::new();
        for g in &graphs {
            let oracle = betti_table(&edge_ideal(g), field)?.regularity() == 2;
            if oracle != froberg_linear_check(g)? {
                bad.push(
                    g.edge_labels()
                        .iter()
                        .map(|(a, b)| format!("{a}{b}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                );
            }
        }
        let o = Outcome::new("0 mismatches", format!("{} mismatches", bad.len()));
        Ok(match bad.first() {
            Some(first) => o.detail(format!("first mismatch: {first}")),
            None => o,
        })
    })
}

fn froberg_n5(opts: &VerifyOptions) -> Result<Vec<Case>> {
    Ok(small_graphs(5)
        .into_iter()
        .map(|(id, gs)| froberg_group(id, gs, opts.field))
        .collect())
}

fn froberg(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = froberg_n5(opts)?;
    for (k, chunk) in six_vertex_sample().chunks(100).enumerate() {
        cases.push(froberg_group(
            format!(
                "random 6-vertex graphs {}..{}",
                100 * k,
                100 * k + chunk.len()
            ),
            chunk.to_vec(),
            opts.field,
        ));
    }
    Ok(cases)
}

/// The graphs on which `reg(I(G)) ≤ 3` is checked.
fn gap_diamond_free_suite() -> Result<Vec<(String, SimpleGraph)>> {
    let mut out = vec![
        ("C5".to_string(), get("C5")),
        ("C6^c".to_string(), get("C6^c")),
    ];
    out.extend(ALL_BASES[1..].iter().map(|&n| (n.to_string(), get(n))));
    out.extend(family_sample(&ALL_BASES, 30)?);
    Ok(out)
}

fn reg_le_3(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let field = opts.field;
    let mut cases: Vec<Case> = gap_diamond_free_suite()?
        .into_iter()
        .map(|(id, g)| {
            case(id, move || {
                let reg = betti_table(&edge_ideal(&g), field)?.regularity();
                let star = reg_upper_bound_via_star(&g).bound;
                let computed = match (reg <= 3, star >= reg) {
                    (true, true) => "reg ≤ 3, star bound ≥ reg".to_string(),
                    (false, _) => format!("reg = {reg}"),
                    (true, false) => format!("star bound {star} < reg {reg}"),
                };
                Ok(Outcome::new("reg ≤ 3, star bound ≥ reg", computed)
                    .detail(format!("reg = {reg}, star bound = {star}")))
            })
        })
        .collect();
    cases.push(case("K3 exact", move || {
        let reg = betti_table(&edge_ideal(&get("K3")), field)?.regularity();
        Ok(Outcome::new("reg = 2", format!("reg = {reg}")))
    }));
    Ok(cases)
}

fn power_case(name: &'static str, s: u32, expected: i64, field: FieldSpec, note: &str) -> Case {
    case(format!("{name}^{s}{note}"), move || {
        let i = edge_ideal(&get(name)).power(s);
        let reg = betti_table(&i, field)?.regularity();
        Ok(Outcome::new(
            format!("reg = {expected}"),
            format!("reg = {reg}"),
        ))
    })
}

fn main_theorem_s2(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases: Vec<Case> = ["C5", "G_1", "G_2", "G_3", "G_10", "G_0"]
        .iter()
        .map(|&n| power_case(n, 2, 4, opts.field, ""))
        .collect();
    cases.extend(
        ["G_5", "G_6", "G_7", "G_8", "G_9"]
            .iter()
            .map(|&n| power_case(n, 2, 4, opts.field, " (direct)")),
    );
    Ok(cases)
}

fn main_theorem_c5_s3(opts: &VerifyOptions) -> Result<Vec<Case>> {
    Ok(vec![power_case("C5", 3, 6, opts.field, "")])
}

fn colon_ideal(name: &str, s: u32, m: &[&str]) -> (SimpleGraph, MonomialIdeal, Monomial) {
    let g = get(name);
    let m = Monomial::from_labels(m);
    let colon = edge_ideal(&g).power(s + 1).colon(&m);
    (g, colon, m)
}

fn colon_values(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let field = opts.field;
    let one = |name: &'static str, m: [&'static str; 2]| {
        case(format!("({name})^2 : {}{}", m[0], m[1]), move || {
            let (g, colon, mono) = colon_ideal(name, 1, &m);
            let reg = betti_table(&colon, field)?.regularity();
            let via_graph = betti_table(
                &edge_ideal(&colon_graph(&g, &SFoldProduct::from_monomial(&g, &mono)?)?),
                field,
            )?
            .regularity();
            Ok(Outcome::new("reg = 3", format!("reg = {reg}"))
                .detail(format!("colon graph gives {via_graph}")))
        })
    };
    Ok(vec![one("G_0", ["y", "a_2"]), one("G_10", ["a_0", "y"])])
}

fn stem(label: &str) -> &str {
    label.split('^').next().unwrap_or(label)
}

/// Generators of `I^s` all of whose factorizations use only edges touching
/// a vertex copied from `special`.
fn residual_generators(g: &SimpleGraph, s: u32, special: &[&str]) -> BTreeSet<String> {
    let i = edge_ideal(g);
    let lower = i.power(s - 1);
    let plain: Vec<Monomial> = g
        .edge_labels()
        .into_iter()
        .filter(|(a, b)| !special.contains(&stem(a)) && !special.contains(&stem(b)))
        .map(|(a, b)| Monomial::from_labels(&[a, b]))
        .collect();
    i.power(s)
        .gens()
        .iter()
        .filter(|m| {
            !plain
                .iter()
                .any(|e| e.divides(m) && lower.contains(&m.quotient(e)))
        })
        .map(ToString::to_string)
        .collect()
}

fn banerjee_sufficiency(_: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    let mut certify: Vec<(String, SimpleGraph)> = TRIANGLE_BASES
        .iter()
        .map(|&n| (n.to_string(), get(n)))
        .collect();
    certify.extend(family_sample(&TRIANGLE_BASES, 20)?);
    for (id, g) in certify.clone() {
        cases.push(case(format!("{id} s≤2"), move || {
            let v = banerjee_sufficiency_check(&g, 2)?;
            let first = v
                .offending()
                .next()
                .map(|c| format!(", first offending generator {}", c.generator))
                .unwrap_or_default();
            Ok(Outcome::new(
                "certified",
                if v.certified {
                    "certified"
                } else {
                    "inconclusive"
                },
            )
            .detail(format!(
                "reg(I) = {}, {} colons, {:.1}% by Fröberg{first}",
                v.base_regularity,
                v.cases.len(),
                100.0 * v.froberg_fraction()
            )))
        }));
    }
    cases.push(case("Fröberg fast path share", move || {
        let (mut fast, mut total) = (0usize, 0usize);
        for (_, g) in &certify {
            let v = banerjee_sufficiency_check(g, 2)?;
            total += v.cases.len();
            fast += v.cases.iter().filter(|c| c.froberg).count();
        }
        let share = fast as f64 / total.max(1) as f64;
        Ok(Outcome::new(
            "≥ 95%",
            if share >= 0.95 {
                "≥ 95%".to_string()
            } else {
                format!("{:.1}%", 100.0 * share)
            },
        )
        .detail(format!("{fast} of {total} colons")))
    }));
    let mut split: Vec<(String, SimpleGraph, &'static [&'static str])> = vec![
        ("G_0".into(), get("G_0"), &["y", "u_1"]),
        ("G_10".into(), get("G_10"), &["y"]),
    ];
    for (id, g) in family_sample(&["G_0"], 3)? {
        split.push((id, g, &["y", "u_1"]));
    }
    for (id, g) in family_sample(&["G_10"], 3)? {
        split.push((id, g, &["y"]));
    }
    const WANT: &str = "inconclusive, all offenders in the multiplied-class case";
    for (id, g, special) in split {
        cases.push(case(format!("{id} s≤2"), move || {
            let v = banerjee_sufficiency_check(&g, 2)?;
            let mut outside = Vec::new();
            let (mut offenders, mut residual) = (0, 0);
            for s in 1..=2 {
                let res = residual_generators(&g, s, special);
                residual += res.len();
                for c in v.offending().filter(|c| c.s == s) {
                    offenders += 1;
                    if !res.contains(&c.generator) {
                        outside.push(c.generator.clone());
                    }
                }
            }
            let computed = if v.certified {
                "certified".to_string()
            } else if outside.is_empty() {
                WANT.to_string()
            } else {
                format!("offenders outside the case: {}", outside.join(", "))
            };
            Ok(Outcome::new(WANT, computed).detail(format!(
                "{offenders} inconclusive of {residual} generators in the case, {} colons",
                v.cases.len()
            )))
        }));
    }
    for name in ["G_5", "G_6", "G_7", "G_8", "G_9"] {
        cases.push(case(format!("{name}^2 (indirect)"), move || {
            let v = banerjee_sufficiency_check(&get(name), 1)?;
            let ok = v.certified && v.base_regularity <= 4;
            Ok(
                Outcome::new("reg = 4", if ok { "reg = 4" } else { "not certified" })
                    .detail("linear resolution of I^2 from reg(I) ≤ 4 and linear colons at s = 1"),
            )
        }));
    }
    Ok(cases)
}

/// Mismatches between even-connections and membership of `uv` in the colon,
/// plus colon ideals not generated in degree 2 or not matching their graph.
fn even_connection_mismatches(g: &SimpleGraph, s: u32) -> Result<Vec<String>> {
    let i = edge_ideal(g);
    let next = i.power(s + 1);
    let mut bad = Vec::new();
    for m in i.power(s).gens() {
        let colon = next.colon(m);
        if colon.gens().iter().any(|x| x.degree() != 2) {
            bad.push(format!("colon by {m} has a generator of degree ≠ 2"));
        }
        let product = SFoldProduct::from_monomial(g, m)?;
        for u in 0..g.n() {
            for v in u..g.n() {
                if u != v && g.adjacent(u, v) {
                    continue;
                }
                let uv = Monomial::from_factors([
                    (Variable::from_label(g.label(u)), 1),
                    (Variable::from_label(g.label(v)), 1),
                ]);
                if even_connected(g, &product, u, v) != colon.contains(&uv) {
                    bad.push(format!("{m}: pair {} {}", g.label(u), g.label(v)));
                }
            }
        }
        if edge_ideal(&colon_graph(g, &product)?) != colon.polarize().0 {
            bad.push(format!("{m}: colon graph differs from the polarized colon"));
        }
    }
    Ok(bad)
}

fn even_group(id: String, graphs: Vec<SimpleGraph>) -> Case {
    case(id, move || {
        let mut bad = Vec::new();
        for g in &graphs {
            for s in 1..=2 {
                bad.extend(even_connection_mismatches(g, s)?);
            }
        }
        let o = Outcome::new("0 mismatches", format!("{} mismatches", bad.len()));
        Ok(match bad.first() {
            Some(b) => o.detail(b.clone()),
            None => o,
        })
    })
}

fn even_connection_oracle(_: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in 2..=5 {
        let gs: Vec<SimpleGraph> = all_graphs(n)
            .into_iter()
            .filter(|g| g.edge_count() > 0)
            .collect();
        for (k, chunk) in gs.chunks(128).enumerate() {
            let end = 128 * k + chunk.len();
            cases.push(even_group(
                format!(
                    "labelled graphs on {n} vertices {}..{end} of {}",
                    128 * k,
                    gs.len()
                ),
                chunk.to_vec(),
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut sample = Vec::new();
    while sample.len() < 200 {
        let g = random_graph(&mut rng, 7, 0.5);
        if g.edge_count() > 0 {
            sample.push(g);
        }
    }
    for (k, chunk) in sample.chunks(50).enumerate() {
        cases.push(even_group(
            format!(
                "random 7-vertex graphs {}..{}",
                50 * k,
                50 * k + chunk.len()
            ),
            chunk.to_vec(),
        ));
    }
    Ok(cases)
}

fn ordered_colon(_: &VerifyOptions) -> Result<Vec<Case>> {
    let runs = [
        ("P4", 1),
        ("C5", 1),
        ("G_1", 1),
        ("G_10", 1),
        ("P4", 2),
        ("C5", 2),
    ];
    Ok(runs
        .iter()
        .map(|&(name, s)| {
            case(format!("{name} s={s}"), move || {
                let g = get(name);
                let reports = verify_all_ordered_colons(&g, s, &EdgeOrder::default_for(&g))?;
                let failed: Vec<usize> =
                    reports.iter().filter(|r| !r.holds).map(|r| r.ell).collect();
                Ok(
                    Outcome::new("0 failures", format!("{} failures", failed.len())).detail(
                        format!(
                            "{} values of ℓ checked{}",
                            reports.len(),
                            if failed.is_empty() {
                                String::new()
                            } else {
                                format!(", failing ℓ {failed:?}")
                            }
                        ),
                    ),
                )
            })
        })
        .collect())
}

/// Graphs whose colon graphs the sufficiency suite generates.
fn colon_suite_graphs() -> Result<Vec<(String, SimpleGraph)>> {
    let mut out: Vec<(String, SimpleGraph)> = TRIANGLE_BASES
        .iter()
        .map(|&n| (n.to_string(), get(n)))
        .collect();
    out.extend(family_sample(&TRIANGLE_BASES, 20)?);
    out.push(("G_0".into(), get("G_0")));
    out.push(("G_10".into(), get("G_10")));
    out.extend(family_sample(&["G_0"], 3)?);
    out.extend(family_sample(&["G_10"], 3)?);
    Ok(out)
}

fn structure_lemmas(_: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for name in TRIANGLE_BASES {
        cases.push(case(format!("{name} dominating triangle"), move || {
            let r = check_structure_lemmas(&get(name));
            let applied = [
                "dominating-clique-exactly-one",
                "triangle-neighbourhoods-independent",
            ]
            .iter()
            .all(|c| r.get(c).is_some_and(|x| x.status == Status::Pass));
            let computed = if applied && r.passes() {
                "pass"
            } else {
                "fail"
            };
            Ok(Outcome::new("pass", computed)
                .detail(format!("{:?}", r.failures().collect::<Vec<_>>())))
        }));
    }
    cases.push(case("100 random gap-free bipartite graphs", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
        let mut failed = 0;
        for _ in 0..100 {
            let n = rng.gen_range(2..=8);
            let g = chain_graph(&mut rng, n);
            if check_structure_lemmas(&g)
                .get("bipartite-complement-chordal")
                .map(|c| c.status)
                != Some(Status::Pass)
            {
                failed += 1;
            }
        }
        Ok(Outcome::new("0 failures", format!("{failed} failures")))
    }));
    cases.push(case("C6^c", || {
        let r = check_structure_lemmas(&get("C6^c"));
        let c = r
            .get("c5-free-triangle-anticycle-or-chordal")
            .expect("clause");
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        };
        Ok(Outcome::new(
            "pass: G = C6^c",
            format!("{status}: {}", c.detail),
        ))
    }));
    for (id, g) in colon_suite_graphs()? {
        cases.push(case(format!("{id} colon graphs s≤2"), move || {
            let i = edge_ideal(&g);
            let (mut checked, mut triangle, mut failures) = (0, 0, Vec::new());
            for s in 1..=2 {
                for m in i.power(s).gens() {
                    let r = check_colon_lemmas(&g, &SFoldProduct::from_monomial(&g, m)?)?;
                    checked += 1;
                    if r.get("dominating-triangle-colon-linear")
                        .is_some_and(|c| c.status != Status::Skip)
                    {
                        triangle += 1;
                    }
                    failures.extend(
                        r.failures()
                            .map(|c| format!("{m}: {} ({})", c.clause, c.detail)),
                    );
                }
            }
            Ok(
                Outcome::new("0 failures", format!("{} failures", failures.len())).detail(format!(
                    "{checked} colon graphs, {triangle} by dominating-triangle products{}",
                    failures
                        .first()
                        .map(|f| format!("; first: {f}"))
                        .unwrap_or_default()
                )),
            )
        }));
    }
    Ok(cases)
}

fn c5_edge_lemma(_: &VerifyOptions) -> Result<Vec<Case>> {
    let mut graphs: Vec<(String, SimpleGraph)> = TRIANGLE_BASES
        .iter()
        .map(|&n| (n.to_string(), get(n)))
        .collect();
    graphs.extend(family_sample(&TRIANGLE_BASES, 20)?);
    Ok(graphs
        .into_iter()
        .map(|(id, g)| {
            case(id, move || {
                let r = check_computer_aided_lemma(&g);
                let failing = r.checks.iter().filter(|c| !c.holds).count();
                let by_triangle = r
                    .checks
                    .iter()
                    .filter(|c| !c.dominating_triangles.is_empty())
                    .count();
                Ok(Outcome::new(
                    "every pair holds",
                    if r.holds {
                        "every pair holds".to_string()
                    } else {
                        format!("{failing} pairs fail")
                    },
                )
                .detail(format!(
                    "{} (C5, edge) pairs, {by_triangle} in a dominating triangle",
                    r.checks.len()
                )))
            })
        })
        .collect())
}

fn show_plan(base: &str, plan: &std::collections::BTreeMap<String, usize>) -> String {
    let p: Vec<String> = plan.iter().map(|(v, k)| format!("{v}x{k}")).collect();
    format!("{base} [{}]", p.join(","))
}

fn classification(_: &VerifyOptions) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11);
    let mut cases = Vec::new();
    for k in 0..100 {
        let base = ALL_BASES[rng.gen_range(0..ALL_BASES.len())];
        let (g, plan) = admissible_multiplication(&mut rng, base, 3)?;
        let expected = show_plan(base, &plan);
        cases.push(case(format!("#{k:03} {expected}"), move || {
            let Classification::Classified(r) = classify_gap_diamond_free(&g)? else {
                return Ok(Outcome::new(&expected, "not classified"));
            };
            let reps = r
                .plan()
                .iter()
                .map(|(v, &k)| (v.clone(), Replacement::Copies(k)))
                .collect();
            let rebuilt = multiply_vertices(&classification_base(&r.base)?, &reps)?;
            let round_trip = are_isomorphic(&rebuilt, &g).is_some() && r.multiplied_triangle_free;
            let got = show_plan(&r.base, &r.plan());
            if got == expected {
                return Ok(Outcome::new(
                    &expected,
                    if round_trip {
                        got
                    } else {
                        format!("{got} without round trip")
                    },
                ));
            }
            if r.also_isomorphic_to.iter().any(|b| b == base) && round_trip {
                return Ok(Outcome::new(&expected, &expected)
                    .detail(format!("resolved to the isomorphic base as {got}")));
            }
            Ok(Outcome::new(&expected, got))
        }));
    }
    cases.push(case("G_4", || {
        let got = match classify_gap_diamond_free(&get("G_4"))? {
            Classification::NotGapDiamondFree { pattern, vertices } => {
                return Ok(Outcome::new("not gap-free", format!("not {pattern}-free"))
                    .detail(vertices.join(" ")));
            }
            other => format!("{other:?}"),
        };
        Ok(Outcome::new("not gap-free", got))
    }));
    Ok(cases)
}

fn tables_agree(tables: &[BettiTable]) -> bool {
    tables.windows(2).all(|w| w[0].same_numbers(&w[1]))
}

fn fields() -> [FieldSpec; 3] {
    [
        FieldSpec::RATIONALS,
        FieldSpec::new(2).expect("prime"),
        FieldSpec::new(3).expect("prime"),
    ]
}

fn field_group(id: String, ideals: Vec<MonomialIdeal>) -> Case {
    case(id, move || {
        let mut bad = 0;
        for i in &ideals {
            if !tables_agree(&betti_tables(i, &fields())?) {
                bad += 1;
            }
        }
        Ok(Outcome::new(
            "identical over QQ, GF(2), GF(3)",
            if bad == 0 {
                "identical over QQ, GF(2), GF(3)".to_string()
            } else {
                format!("{bad} tables differ")
            },
        )
        .detail(format!("{} ideals", ideals.len())))
    })
}

fn field_robustness(_: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (id, gs) in small_graphs(5) {
        cases.push(field_group(id, gs.iter().map(edge_ideal).collect()));
    }
    cases.push(field_group(
        "random 6-vertex graphs".into(),
        six_vertex_sample().iter().map(edge_ideal).collect(),
    ));
    for (id, g) in gap_diamond_free_suite()? {
        cases.push(field_group(id, vec![edge_ideal(&g)]));
    }
    cases.push(field_group("K3".into(), vec![edge_ideal(&get("K3"))]));
    for name in [
        "C5", "G_1", "G_2", "G_3", "G_10", "G_0", "G_5", "G_6", "G_7", "G_8", "G_9",
    ] {
        cases.push(field_group(
            format!("{name}^2"),
            vec![edge_ideal(&get(name)).power(2)],
        ));
    }
    cases.push(field_group(
        "C5^3".into(),
        vec![edge_ideal(&get("C5")).power(3)],
    ));
    cases.push(field_group(
        "colon values".into(),
        vec![
            colon_ideal("G_0", 1, &["y", "a_2"]).1,
            colon_ideal("G_10", 1, &["a_0", "y"]).1,
        ],
    ));
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_case_of_g10() {
        let g = get("G_10");
        let want = Monomial::from_labels(&["a_0", "y"]).to_string();
        assert_eq!(residual_generators(&g, 1, &["y"]), BTreeSet::from([want]));
        assert_eq!(residual_generators(&g, 2, &["y"]).len(), 1);
    }

    #[test]
    fn every_suite_builds() {
        for (name, build) in REGISTRY {
            assert!(
                !build(&VerifyOptions::default()).unwrap().is_empty(),
                "{name}"
            );
        }
    }
}
