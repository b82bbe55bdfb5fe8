use std::io::{self, Read as _, Write as _};
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use regulab::betti::{betti_table, FieldSpec};
use regulab::catalog;
use regulab::even::{colon_graph_report, SFoldProduct};
use regulab::graph::{
    clique_number, contains_induced, induced_cycles, is_bipartite, is_chordal, Pattern, SimpleGraph,
};
use regulab::ideal::{edge_ideal, MonomialIdeal};
use regulab::structure::{
    check_structure_lemmas, classify_gap_diamond_free, dominating_clique, reg_upper_bound_via_star,
    Classification,
};
use regulab::verify::{run_suite, suite_names, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "regulab",
    version,
    about = "Regularity of edge ideals and their powers"
)]
struct Cli {
    /// Worker threads for suites and the homology oracle.
    #[arg(long, global = true, env = "REGULAB_JOBS")]
    jobs: Option<usize>,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Leave wall times out of the output.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural predicates, bounds and lemma checks for a graph.
    Analyze(GraphArg),
    /// Betti numbers and regularity of a power of an edge ideal.
    Reg {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u32,
    },
    /// Betti numbers and regularity of a monomial ideal read from a file.
    Betti {
        /// Ideal file, one generator per line; `-` reads stdin.
        ideal: String,
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u32,
    },
    /// Graph of `I^{s+1} : e_1⋯e_s` for a product of edges.
    ColonGraph {
        #[command(flatten)]
        graph: GraphArg,
        /// Edges of the product, as `ab,cd` or `a b, c d`.
        #[arg(long)]
        edges: String,
    },
    /// Base graph and multiplicities of a (gap, diamond)-free graph.
    Classify(GraphArg),
    /// Named graphs.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        /// Print the suite names.
        #[arg(long)]
        list: bool,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u32,
        /// Cases not started within this many seconds are reported as skipped.
        #[arg(long)]
        timeout_secs: Option<u64>,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    /// Print a catalog graph in the graph text format.
    Show {
        name: String,
    },
}

#[derive(Args)]
struct GraphArg {
    /// A graph file (text or JSON), `catalog:NAME`, or a catalog name.
    #[arg(long = "graph", value_name = "GRAPH")]
    flag: Option<String>,
    #[arg(value_name = "GRAPH", conflicts_with = "flag")]
    positional: Option<String>,
}

impl GraphArg {
    fn load(&self) -> Result<SimpleGraph> {
        let spec = self
            .flag
            .as_deref()
            .or(self.positional.as_deref())
            .ok_or_else(|| anyhow!("a graph is required"))?;
        load_graph(spec)
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| anyhow!("{path}: {e}"))
}

fn load_graph(spec: &str) -> Result<SimpleGraph> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return Ok(catalog::get(name)?);
    }
    if spec == "-" || Path::new(spec).is_file() {
        let text = read_input(spec)?;
        return SimpleGraph::parse_any(&text).map_err(|e| anyhow!("{spec}: {e}"));
    }
    catalog::get(spec).map_err(|_| anyhow!("`{spec}` is neither a file nor a catalog graph"))
}

fn field(characteristic: u32) -> Result<FieldSpec> {
    Ok(FieldSpec::new(characteristic)?)
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

fn betti_output(i: &MonomialIdeal, power: u32, f: FieldSpec, timing: bool) -> Result<Output> {
    if power == 0 {
        return Err(anyhow!("--power must be at least 1"));
    }
    let start = Instant::now();
    let ideal = i.power(power);
    let table = betti_table(&ideal, f)?;
    let reg = table.regularity();
    let mut json = json!({
        "power": power,
        "generators": ideal.len(),
        "betti": table.rows(),
        "regularity": reg,
        "field": f,
    });
    if timing {
        json["walltime_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    let text = format!(
        "betti numbers over {f}\n{}regularity {reg}\n",
        table.pretty()
    );
    Ok(Output {
        json,
        text,
        ok: true,
    })
}

fn names(g: &SimpleGraph, mask: u64) -> Vec<String> {
    let mut v: Vec<String> = g.labels_of(mask).into_iter().map(String::from).collect();
    v.sort();
    v
}

fn analyze(g: &SimpleGraph) -> Result<Output> {
    let free = |p| contains_induced(g, p).is_none();
    let dominating = match dominating_clique(g) {
        Ok(k) => k.map(|k| names(g, k)),
        Err(regulab::Error::Precondition(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let regularity = match betti_table(&edge_ideal(g), FieldSpec::RATIONALS) {
        Ok(t) => Some(t.regularity()),
        Err(regulab::Error::TooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let c5 = induced_cycles(g, 5).iter().filter(|c| c.len() == 5).count();
    let structure = check_structure_lemmas(g);
    let star = reg_upper_bound_via_star(g).bound;
    let json = json!({
        "vertices": g.n(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "gap_free": free(Pattern::Gap),
        "diamond_free": free(Pattern::Diamond),
        "cricket_free": free(Pattern::Cricket),
        "chordal": is_chordal(g).0,
        "complement_chordal": is_chordal(&g.complement()).0,
        "bipartite": is_bipartite(g).0,
        "clique_number": clique_number(g),
        "dominating_clique": dominating,
        "induced_c5": c5,
        "star_bound": star,
        "regularity": regularity,
        "structure": structure,
    });
    let mut text = String::new();
    for key in [
        "vertices",
        "edges",
        "connected",
        "gap_free",
        "diamond_free",
        "cricket_free",
        "chordal",
        "complement_chordal",
        "bipartite",
        "clique_number",
        "dominating_clique",
        "induced_c5",
        "star_bound",
        "regularity",
    ] {
        text.push_str(&format!("{key:<20}{}\n", json[key]));
    }
    for c in &structure.clauses {
        let status = serde_json::to_value(c.status)?;
        text.push_str(&format!(
            "{:<44}{:<6}{}\n",
            c.clause,
            status.as_str().unwrap_or(""),
            c.detail
        ));
    }
    Ok(Output {
        json,
        text,
        ok: structure.passes(),
    })
}

fn colon(g: &SimpleGraph, edges: &str) -> Result<Output> {
    let m = SFoldProduct::parse(g, edges)?;
    let r = colon_graph_report(g, &m)?;
    let pair = |&(u, v): &(usize, usize)| [g.label(u).to_string(), g.label(v).to_string()];
    let json = json!({
        "product": m.display(g),
        "graph": r.graph.to_json(),
        "new_edges": r.new_edges.iter().map(pair).collect::<Vec<_>>(),
        "squares": r.squares.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
        "witnesses": r.witnesses,
    });
    let mut text = r.graph.to_text();
    for w in &r.witnesses {
        text.push_str(&format!("# {} ~ {}: {}\n", w.u, w.v, w.sequence.join(" ")));
    }
    Ok(Output {
        json,
        text,
        ok: true,
    })
}

fn classify(g: &SimpleGraph) -> Result<Output> {
    let c = classify_gap_diamond_free(g)?;
    let text = match &c {
        Classification::Classified(r) => {
            let plan: Vec<String> = r.plan().iter().map(|(v, k)| format!("{v}x{k}")).collect();
            let mut s = format!("{} [{}]\n", r.base, plan.join(","));
            if !r.also_isomorphic_to.is_empty() {
                s.push_str(&format!(
                    "also isomorphic to {}\n",
                    r.also_isomorphic_to.join(", ")
                ));
            }
            s
        }
        Classification::NoInducedC5 => "no induced C5\n".to_string(),
        Classification::NotGapDiamondFree { pattern, vertices } => {
            format!(
                "not (gap, diamond)-free: induced {pattern} on {}\n",
                vertices.join(" ")
            )
        }
        Classification::Unmatched { quotient_vertices } => {
            format!("UNMATCHED: twin quotient on {quotient_vertices} vertices fits no base\n")
        }
    };
    let ok = !matches!(c, Classification::Unmatched { .. });
    Ok(Output {
        json: serde_json::to_value(&c)?,
        text,
        ok,
    })
}

fn catalog_list() -> Result<Output> {
    let mut rows = Vec::new();
    let mut text = String::new();
    for name in catalog::names() {
        let g = catalog::get(name)?;
        text.push_str(&format!(
            "{name:<6}{:>3} vertices{:>4} edges\n",
            g.n(),
            g.edge_count()
        ));
        rows.push(json!({"name": name, "vertices": g.n(), "edges": g.edge_count()}));
    }
    Ok(Output {
        json: Value::Array(rows),
        text,
        ok: true,
    })
}

fn run(cli: Cli) -> Result<Output> {
    let timing = !cli.no_timing;
    match cli.command {
        Command::Analyze(g) => analyze(&g.load()?),
        Command::Reg {
            graph,
            power,
            characteristic,
        } => betti_output(
            &edge_ideal(&graph.load()?),
            power,
            field(characteristic)?,
            timing,
        ),
        Command::Betti {
            ideal,
            power,
            characteristic,
        } => {
            let text = read_input(&ideal)?;
            let i = MonomialIdeal::parse(&text).map_err(|e| anyhow!("{ideal}: {e}"))?;
            betti_output(&i, power, field(characteristic)?, timing)
        }
        Command::ColonGraph { graph, edges } => colon(&graph.load()?, &edges),
        Command::Classify(g) => classify(&g.load()?),
        Command::Catalog {
            command: CatalogCommand::List,
        } => catalog_list(),
        Command::Catalog {
            command: CatalogCommand::Show { name },
        } => {
            let g = catalog::get(&name)?;
            // text is the only format for show
            Ok(Output {
                json: Value::Null,
                text: g.to_text(),
                ok: true,
            })
        }
        Command::Verify { list: true, .. } => {
            let names = suite_names();
            Ok(Output {
                text: names.iter().map(|n| format!("{n}\n")).collect(),
                json: json!(names),
                ok: true,
            })
        }
        Command::Verify {
            suite,
            characteristic,
            timeout_secs,
            ..
        } => {
            let suite = suite.expect("required unless --list");
            let opts = VerifyOptions {
                field: field(characteristic)?,
                timing,
                budget: timeout_secs.map(Duration::from_secs),
            };
            let report = run_suite(&suite, &opts)?;
            Ok(Output {
                text: report.pretty(),
                ok: report.summary.failed == 0,
                json: serde_json::to_value(&report)?,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    let show_only = matches!(
        cli.command,
        Command::Catalog {
            command: CatalogCommand::Show { .. }
        }
    );
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(out) => {
            let body = if pretty || show_only {
                out.text
            } else {
                serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
            };
            // a closed pipe is not an error
            let _ = io::stdout().write_all(body.as_bytes());
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
