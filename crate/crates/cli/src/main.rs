use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cutkit_core::binomial::Binomial;
use cutkit_core::clique_sum::{compose_generating_set, composed_json, verify_generates, SumContext};
use cutkit_core::polytope::{
    cut_polytope, facets_with_budget, is_compressed, is_simple, is_smooth, normality_gaps, report,
};
use cutkit_core::registry::{toric_engines, volume_methods, PULLING_MAX_DIM};
use cutkit_core::stat::{
    fourier, fourier_inv, gamma_table, graph_of_splits, jc_matrix, mapping_table, parse_rational_vector,
    rational_vector_json, split_report, splits_of_tree, verify_covariance, verify_cutsplit, LeafTree, SplitSystem,
};
use cutkit_core::table1::{run_row, RowStatus, Table1Options, ROWS};
use cutkit_core::toric::{markov_basis, TermOrder, ToricConfig};
use cutkit_core::{exponent_matrix, Error, Graph, VariableSet};

/// Cut ideals, cut polytopes and their statistical models.
#[derive(Parser, Debug)]
#[command(name = "cutkit", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Term order: degrevlex, lex or weight:w1,w2,...
    #[arg(long, global = true, default_value = "degrevlex")]
    order: String,
    /// Height bound for the normality search.
    #[arg(long, global = true)]
    max_height: Option<u32>,
    /// Worker threads for Gröbner computations (results do not depend on it).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Give up after this many S-pair reductions.
    #[arg(long, global = true, env = "CUTKIT_BUDGET")]
    budget_pairs: Option<u64>,
    #[arg(long, global = true, default_value = "saturation")]
    engine: String,
    #[arg(long, global = true, default_value = "pulling")]
    volume_method: String,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators and degrees of a cut ideal.
    Ideal {
        /// A graph name (K4, C5, K2,3, suspend(C4), ...) or a graph file.
        graph: String,
        #[arg(value_enum, default_value_t = IdealMode::Markov)]
        mode: IdealMode,
    },
    /// Invariants of a cut polytope.
    Polytope {
        graph: String,
        #[arg(value_enum, default_value_t = PolytopeQuery::Report)]
        query: PolytopeQuery,
    },
    /// Glues two graphs along a clique and builds the composed generating set.
    Compose {
        graph1: String,
        graph2: String,
        /// Shared vertices, e.g. "2,3,4".
        #[arg(long)]
        separator: String,
    },
    /// Statistical models.
    Stat {
        #[command(subcommand)]
        command: StatCommand,
    },
    /// Recomputes the table of invariants for named graphs.
    Table1 {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        /// Only the rows with these labels.
        #[arg(long)]
        row: Vec<String>,
    },
    /// Lists the registered engines and volume methods.
    Engines,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdealMode {
    Markov,
    Groebner,
    Degrees,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolytopeQuery {
    Dim,
    Facets,
    Volume,
    Simple,
    Smooth,
    Compressed,
    Normality,
    Report,
}

#[derive(Subcommand, Debug)]
enum StatCommand {
    /// Checks that the binary graph model of G is the cut ideal of its suspension.
    SuspendCheck { graph: String },
    /// Prints the relabeling of probability coordinates as partition variables.
    Gamma { n: usize },
    /// Works with a split system read from a file.
    Splits {
        file: PathBuf,
        #[arg(value_enum)]
        action: SplitAction,
    },
    /// Splits of a tree such as ((1,2),3,(4,5)).
    Tree { tree: String },
    /// Fourier transform of a JSON vector of rationals.
    Fourier {
        file: PathBuf,
        #[arg(long)]
        inverse: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SplitAction {
    Graph,
    Verify,
    Ideal,
    Table,
    Report,
}

/// Exit status beyond plain success or failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Outcome {
    Ok = 0,
    Partial = 2,
    Mismatch = 3,
}

struct Report {
    text: String,
    json: Value,
    outcome: Outcome,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, outcome: Outcome::Ok }
    }
}

fn load_graph(spec: &str) -> anyhow::Result<Graph> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        return Graph::parse_file(&text).with_context(|| format!("parsing {spec}"));
    }
    cutkit_core::graph::make_named(spec).with_context(|| format!("`{spec}` is neither a graph file nor a graph name"))
}

fn toric_config(g: &Global) -> ToricConfig {
    let mut cfg = ToricConfig::default();
    cfg.gb.threads = g.threads.max(1);
    cfg.gb.max_pairs = g.budget_pairs;
    cfg
}

fn print_all(bs: &[Binomial], vars: &VariableSet) -> anyhow::Result<Vec<String>> {
    Ok(bs.iter().map(|b| b.print(vars)).collect::<Result<_, _>>()?)
}

fn histogram_text(h: &std::collections::BTreeMap<u32, usize>) -> String {
    if h.is_empty() {
        return "none".into();
    }
    h.iter().map(|(d, c)| format!("{d}:{c}")).collect::<Vec<_>>().join(" ")
}

fn cmd_ideal(g: &Global, spec: &str, mode: IdealMode) -> anyhow::Result<Report> {
    let graph = load_graph(spec)?;
    let a = exponent_matrix(&graph)?;
    let cfg = toric_config(g);
    let engine = toric_engines();
    let engine = engine.get(&g.engine)?;
    let codim = a.codim();
    match mode {
        IdealMode::Groebner => {
            let order = TermOrder::parse(&g.order, a.ncols())?;
            let gb = engine.groebner(&graph, &order, &cfg)?;
            let lines = print_all(gb.elements(), a.vars())?;
            let mut text = lines.join("\n");
            text.push_str(&format!("\n# {} elements, order {order}, codim {codim}\n", gb.len()));
            let mut json = gb.to_json(a.vars());
            json["codim"] = json!(codim);
            let outcome = if gb.certified() { Outcome::Ok } else { Outcome::Partial };
            Ok(Report { text, json, outcome })
        }
        IdealMode::Markov | IdealMode::Degrees => {
            let mb = engine.markov(&graph, &cfg)?;
            let mut text = String::new();
            if matches!(mode, IdealMode::Markov) {
                for line in print_all(&mb.elements, a.vars())? {
                    text.push_str(&line);
                    text.push('\n');
                }
            }
            text.push_str(&format!(
                "generators {}\ndegrees {}\nmu {}\ncodim {codim}\n",
                mb.elements.len(),
                histogram_text(&mb.degree_histogram),
                mb.mu()
            ));
            let mut json = json!({
                "graph": spec,
                "generators": mb.elements.len(),
                "degreeHistogram": mb.degree_histogram,
                "mu": mb.mu(),
                "codim": codim,
                "certified": mb.certified,
            });
            if matches!(mode, IdealMode::Markov) {
                json["binomials"] = json!(print_all(&mb.elements, a.vars())?);
            }
            let outcome = if mb.certified { Outcome::Ok } else { Outcome::Partial };
            Ok(Report { text, json, outcome })
        }
    }
}

fn cmd_polytope(g: &Global, spec: &str, query: PolytopeQuery) -> anyhow::Result<Report> {
    let graph = load_graph(spec)?;
    let p = cut_polytope(&graph)?;
    let facets = || facets_with_budget(&p, PULLING_MAX_DIM);
    let flag = |name: &str, v: bool| Report::ok(format!("{v}\n"), json!({ name: v }));
    Ok(match query {
        PolytopeQuery::Dim => Report::ok(format!("{}\n", p.dim()), json!({ "dim": p.dim() })),
        PolytopeQuery::Facets => {
            let h = facets()?;
            let lines = h.ambient_facets(&p)?;
            Report::ok(
                h.to_text(&p)?,
                json!({ "facets": lines.iter().map(|(c, b)| json!({"normal": c, "rhs": b})).collect::<Vec<_>>() }),
            )
        }
        PolytopeQuery::Volume => {
            let v = volume_methods().get(&g.volume_method)?.volume(&p)?;
            Report::ok(format!("{v}\n"), json!({ "volume": v.to_string(), "method": g.volume_method }))
        }
        PolytopeQuery::Simple => flag("simple", is_simple(&p, &facets()?)),
        PolytopeQuery::Smooth => flag("smooth", is_smooth(&p, &facets()?)),
        PolytopeQuery::Compressed => flag("compressed", is_compressed(&p, &facets()?)),
        PolytopeQuery::Normality => {
            let height = g.max_height.unwrap_or(p.dim().saturating_sub(1) as u32);
            let nr = normality_gaps(&p, &facets()?, height)?;
            let mut text = format!("gaps {}\ncomplete {}\n", nr.gaps.len(), nr.complete);
            for gap in &nr.gaps {
                let w: Vec<String> = gap.iter().map(|x| x.to_string()).collect();
                text.push_str(&format!("gap {}\n", w.join(" ")));
            }
            let json = json!({
                "maxHeight": height,
                "gaps": nr.gaps,
                "byHeight": nr.by_height(),
                "complete": nr.complete,
                "normalCertified": nr.normal_certified(),
            });
            let outcome = if nr.complete || !nr.gaps.is_empty() { Outcome::Ok } else { Outcome::Partial };
            Report { text, json, outcome }
        }
        PolytopeQuery::Report => {
            let r = report(&p, g.max_height)?;
            let text = r
                .as_object()
                .map(|o| o.iter().map(|(k, v)| format!("{k} {v}\n")).collect())
                .unwrap_or_default();
            Report::ok(text, r)
        }
    })
}

fn cmd_compose(g: &Global, g1: &str, g2: &str, separator: &str) -> anyhow::Result<Report> {
    let sep: Vec<usize> = separator
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().with_context(|| format!("bad separator vertex `{t}`")))
        .collect::<anyhow::Result<_>>()?;
    let ctx = SumContext::glue(&load_graph(g1)?, &load_graph(g2)?, &sep)?;
    let cfg = toric_config(g);
    let m1 = markov_basis(&exponent_matrix(ctx.g1())?, &cfg)?;
    let m2 = markov_basis(&exponent_matrix(ctx.g2())?, &cfg)?;
    let composed = compose_generating_set(&ctx, &m1.elements, &m2.elements)?;
    let gens: Vec<Binomial> = composed.iter().map(|c| c.binomial.clone()).collect();
    let verified = verify_generates(&gens, ctx.glued())?;
    let mut text = format!("glued {}\n", ctx.glued());
    for line in print_all(&gens, ctx.vars())? {
        text.push_str(&line);
        text.push('\n');
    }
    text.push_str(&format!("size {}\nverify {}\n", gens.len(), if verified { "PASS" } else { "FAIL" }));
    let json = json!({
        "glued": ctx.glued().edges(),
        "n": ctx.glued().n(),
        "separator": ctx.separator(),
        "size": gens.len(),
        "verified": verified,
        "binomials": composed.iter().map(|c| composed_json(c, &ctx)).collect::<Vec<_>>(),
    });
    let outcome = if !(m1.certified && m2.certified) {
        Outcome::Partial
    } else if verified {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    };
    Ok(Report { text, json, outcome })
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_stat(g: &Global, command: &StatCommand) -> anyhow::Result<Report> {
    let cfg = toric_config(g);
    match command {
        StatCommand::SuspendCheck { graph } => {
            let c = verify_covariance(&load_graph(graph)?, &cfg)?;
            let text = format!(
                "{}\nmodel degrees {}\ncut degrees {}\n",
                pass(c.holds),
                histogram_text(&c.model_degrees),
                histogram_text(&c.cut_degrees)
            );
            let json = json!({
                "holds": c.holds,
                "modelDegrees": c.model_degrees,
                "cutDegrees": c.cut_degrees,
            });
            Ok(Report { text, json, outcome: if c.holds { Outcome::Ok } else { Outcome::Mismatch } })
        }
        StatCommand::Gamma { n } => {
            let lines = gamma_table(*n)?;
            Ok(Report::ok(lines.join("\n") + "\n", json!(lines)))
        }
        StatCommand::Splits { file, action } => {
            let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let sigma = SplitSystem::parse(&text)?;
            split_action(&sigma, *action, &cfg)
        }
        StatCommand::Tree { tree } => {
            let sigma = splits_of_tree(&LeafTree::parse(tree)?)?;
            let mut text = sigma.to_text();
            let graph = if sigma.is_cyclic() { Some(graph_of_splits(&sigma)?) } else { None };
            if let Some(gr) = &graph {
                text.push_str(&format!("graph {gr}\n"));
            }
            let json = json!({
                "splits": sigma.splits().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "cyclic": sigma.is_cyclic(),
                "graph": graph.map(|gr| gr.edges().to_vec()),
            });
            Ok(Report::ok(text, json))
        }
        StatCommand::Fourier { file, inverse } => {
            let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let v = parse_rational_vector(&serde_json::from_str(&text)?)?;
            let out = if *inverse { fourier_inv(&v)? } else { fourier(&v)? };
            let json = rational_vector_json(&out);
            Ok(Report::ok(format!("{json}\n"), json))
        }
    }
}

fn split_action(sigma: &SplitSystem, action: SplitAction, cfg: &ToricConfig) -> anyhow::Result<Report> {
    Ok(match action {
        SplitAction::Graph => {
            let gr = graph_of_splits(sigma)?;
            Report::ok(gr.to_file_string(), json!({ "n": gr.n(), "edges": gr.edges() }))
        }
        SplitAction::Verify => {
            let ok = verify_cutsplit(sigma)?;
            let outcome = if ok { Outcome::Ok } else { Outcome::Mismatch };
            Report { text: format!("{}\n", pass(ok)), json: json!({ "verified": ok }), outcome }
        }
        SplitAction::Ideal => {
            let a = jc_matrix(sigma)?;
            let mb = markov_basis(&a, cfg)?;
            let lines = print_all(&mb.elements, a.vars())?;
            let mut text: String = lines.iter().map(|l| format!("{l}\n")).collect();
            text.push_str(&format!("degrees {}\n", histogram_text(&mb.degree_histogram)));
            let json = json!({ "binomials": lines, "degreeHistogram": mb.degree_histogram });
            let outcome = if mb.certified { Outcome::Ok } else { Outcome::Partial };
            Report { text, json, outcome }
        }
        SplitAction::Table => {
            let lines = mapping_table(sigma)?;
            Report::ok(lines.join("\n") + "\n", json!(lines))
        }
        SplitAction::Report => {
            let r = split_report(sigma, cfg)?;
            Report::ok(format!("{r}\n"), r)
        }
    })
}

fn cmd_table1(g: &Global, max_vertices: usize, only: &[String]) -> anyhow::Result<Report> {
    let opts = Table1Options {
        engine: g.engine.clone(),
        volume_method: g.volume_method.clone(),
        toric: toric_config(g),
        max_height: g.max_height,
        max_vertices,
    };
    let rows: Vec<_> = ROWS
        .iter()
        .filter(|r| r.n <= max_vertices && (only.is_empty() || only.iter().any(|l| l == r.label)))
        .collect();
    if rows.is_empty() {
        bail!("no rows selected");
    }
    let mut text = String::new();
    let mut json_rows = Vec::new();
    let mut outcome = Outcome::Ok;
    for row in rows {
        let r = run_row(row, &opts)?;
        text.push_str(&r.to_line());
        text.push('\n');
        json_rows.push(r.to_json());
        outcome = outcome.max(match r.status {
            RowStatus::Match | RowStatus::Disputed => Outcome::Ok,
            RowStatus::Partial => Outcome::Partial,
            RowStatus::Mismatch => Outcome::Mismatch,
        });
    }
    Ok(Report { text, json: json!({ "rows": json_rows }), outcome })
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let g = &cli.global;
    match &cli.command {
        Command::Ideal { graph, mode } => cmd_ideal(g, graph, *mode),
        Command::Polytope { graph, query } => cmd_polytope(g, graph, *query),
        Command::Compose { graph1, graph2, separator } => cmd_compose(g, graph1, graph2, separator),
        Command::Stat { command } => cmd_stat(g, command),
        Command::Table1 { max_vertices, row } => cmd_table1(g, *max_vertices, row),
        Command::Engines => {
            let e = toric_engines().names();
            let v = volume_methods().names();
            Ok(Report::ok(
                format!("engines {}\nvolume methods {}\n", e.join(" "), v.join(" ")),
                json!({ "engines": e, "volumeMethods": v }),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = match cli.global.format {
                Format::Text => report.text,
                Format::Json => format!("{:#}\n", report.json),
            };
            let written = match &cli.global.output {
                Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{body}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::FAILURE;
            }
            ExitCode::from(report.outcome as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::Budget(_)) => ExitCode::from(Outcome::Partial as u8),
                Some(Error::Verification(_)) => ExitCode::from(Outcome::Mismatch as u8),
                _ => ExitCode::FAILURE,
            }
        }
    }
}
