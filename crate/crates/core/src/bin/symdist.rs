use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symdist::analysis::{is_simple, named_group, Catalog};
use symdist::distinguish::{
    distinguishing_number_with, graph_distinguishing_index, graph_distinguishing_number, DistinguishBudget,
};
use symdist::graph::{
    construct_example1, construct_figure1, parse_edge_list, parse_graph6_file, to_edge_list, to_graph6, Graph,
};
use symdist::harness::{
    default_corpus, verify_all, verify_an_arithmetic, verify_catalog, verify_lemma_divisor, verify_lemma_uniform,
    verify_main_theorem, HarnessOptions, SuiteReport,
};
use symdist::symmetry::{automorphism_group, orbit_structure_of, uniformity_of};

const USAGE_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "symdist", version, about = "Automorphism groups, distinguishing numbers and verification campaigns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result as JSON to this file.
    #[arg(long, global = true, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    workers: Option<usize>,
    /// Seed for work scheduling; results never depend on it.
    #[arg(long, global = true, value_name = "S", default_value_t = 0)]
    seed: u64,
    /// Largest group order for exhaustive subgroup searches.
    #[arg(long, global = true, value_name = "N")]
    budget_order: Option<u64>,
}

#[derive(Args)]
struct GraphInput {
    /// Graphs in graph6 format, one per line.
    #[arg(long, value_name = "FILE", conflicts_with = "edges")]
    graph6: Option<PathBuf>,
    /// A graph as an edge list (`n=<count>` header, then `u v` per line).
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Order and generators of the automorphism group.
    Aut(GraphInput),
    /// Vertex orbits, edge-orbits, orbitals and uniformity.
    Orbits(GraphInput),
    /// Distinguishing number of a graph or of a catalog group.
    Dist {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_name = "NAME")]
        catalog: Option<String>,
    },
    /// Distinguishing index of a graph.
    DistIndex(GraphInput),
    /// Whether a catalog group, or the automorphism group of a graph, is simple.
    Simple {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_name = "NAME")]
        catalog: Option<String>,
    },
    /// List catalog entries, or show one.
    Catalog { name: Option<String> },
    /// Print a witness graph.
    Witness {
        #[command(subcommand)]
        which: Witness,
    },
    /// Run a verification campaign.
    Verify {
        campaign: Campaign,
        /// Replace the internal corpus of `main` with these graphs.
        #[command(flatten)]
        corpus: GraphInput,
    },
}

#[derive(Subcommand)]
enum Witness {
    /// Asymmetric graph plus r pendant copies; |Aut| = r.
    Example1 {
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 6)]
        m: usize,
    },
    /// Uniform graph with automorphism group S_n^(3) ⊕ S_n ⊕ I_2.
    Figure1 {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Campaign {
    Main,
    Divisor,
    Uniform,
    Arith,
    Catalog,
    All,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE_ERROR,
        message: message.into(),
    }
}

fn read_graphs(input: &GraphInput) -> Result<Vec<(String, Graph)>, Failure> {
    let read = |p: &PathBuf| std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())));
    if let Some(p) = &input.graph6 {
        let graphs = parse_graph6_file(&read(p)?).map_err(|e| usage(e.to_string()))?;
        return Ok(graphs.into_iter().enumerate().map(|(i, g)| (format!("line {}", i + 1), g)).collect());
    }
    if let Some(p) = &input.edges {
        let g = parse_edge_list(&read(p)?).map_err(|e| usage(e.to_string()))?;
        return Ok(vec![(p.display().to_string(), g)]);
    }
    Err(usage("give a graph with --graph6 FILE or --edges FILE"))
}

fn per_graph(
    input: &GraphInput,
    f: impl Fn(&Graph) -> Result<(String, Value), Failure>,
) -> Result<(String, Value), Failure> {
    let graphs = read_graphs(input)?;
    let mut text = Vec::new();
    let mut values = Vec::new();
    for (id, g) in &graphs {
        let (t, v) = f(g)?;
        if graphs.len() > 1 {
            text.push(format!("{id}: {t}"));
        } else {
            text.push(t);
        }
        values.push(json!({ "input": id, "result": v }));
    }
    let value = if values.len() == 1 { values.pop().unwrap()["result"].take() } else { Value::Array(values) };
    Ok((text.join("\n"), value))
}

fn options(cli: &Cli) -> HarnessOptions {
    let mut opts = HarnessOptions {
        schedule_seed: cli.seed,
        ..HarnessOptions::default()
    };
    if let Some(order) = cli.budget_order {
        opts.subgroup_budget.max_group_order = order;
    }
    opts
}

fn suite_text(suite: &SuiteReport) -> String {
    let mut lines = Vec::new();
    for c in &suite.campaigns {
        lines.push(format!(
            "{:<8} {:?}: {} records, {} counterexamples, {} incomplete ({:.2}s)",
            c.campaign,
            c.verdict,
            c.records.len(),
            c.counterexamples.len(),
            c.incomplete.len(),
            c.timings.seconds
        ));
        for id in c.counterexamples.iter().chain(&c.incomplete) {
            lines.push(format!("    {id}"));
        }
    }
    lines.push(format!("overall: {:?}", suite.verdict));
    lines.join("\n")
}

fn run(cli: &Cli) -> Result<(String, Value, u8), Failure> {
    let budget = DistinguishBudget::default();
    let fail = |e: &dyn std::fmt::Display| usage(e.to_string());
    let (text, value) = match &cli.command {
        Command::Aut(input) => per_graph(input, |g| {
            let aut = automorphism_group(g).map_err(|e| fail(&e))?;
            let gens: Vec<String> = aut.generators().iter().map(|p| p.to_string()).collect();
            Ok((
                format!("|Aut| = {}\ngenerators: {}", aut.order(), gens.join(", ")),
                json!({ "order": aut.order().to_string(), "generators": gens }),
            ))
        })?,
        Command::Orbits(input) => per_graph(input, |g| {
            let aut = automorphism_group(g).map_err(|e| fail(&e))?;
            let s = orbit_structure_of(g, &aut);
            let u = uniformity_of(g, &s);
            let edge_sizes: Vec<usize> = s.edge_orbits.iter().map(Vec::len).collect();
            let orbital_sizes: Vec<usize> = s.orbitals.iter().map(Vec::len).collect();
            Ok((
                format!(
                    "vertex orbits {:?}\nedge-orbit sizes {:?}\norbital sizes {:?}\nuniform: strict {:?}, relaxed {:?}",
                    s.vertex_orbits,
                    edge_sizes,
                    orbital_sizes,
                    u.strict,
                    u.relaxed
                ),
                json!({ "orbits": s, "uniformity": { "strict": u.strict, "relaxed": u.relaxed } }),
            ))
        })?,
        Command::Dist { input, catalog } => match catalog {
            Some(name) => {
                let named = named_group(name).map_err(|e| fail(&e))?;
                let v = distinguishing_number_with(&named.group, &budget);
                (format!("D = {} ({:?})", v.value, v.minimality), json!(v))
            }
            None => per_graph(input, |g| {
                let v = graph_distinguishing_number(g, &budget).map_err(|e| fail(&e))?;
                Ok((format!("D = {} ({:?})", v.value, v.minimality), json!(v)))
            })?,
        },
        Command::DistIndex(input) => per_graph(input, |g| {
            let v = graph_distinguishing_index(g, &budget).map_err(|e| fail(&e))?;
            let mut t = format!("D' = {} ({:?})", v.verdict.value, v.verdict.minimality);
            if v.kernel_nontrivial {
                t.push_str(&format!("; kernel of order {} acts trivially on edges", v.kernel_order));
            }
            Ok((t, json!(v)))
        })?,
        Command::Simple { input, catalog } => match catalog {
            Some(name) => {
                let named = named_group(name).map_err(|e| fail(&e))?;
                let s = is_simple(&named.group).map_err(|e| fail(&e))?;
                (s.to_string(), json!({ "group": named.name, "simple": s }))
            }
            None => per_graph(input, |g| {
                let aut = automorphism_group(g).map_err(|e| fail(&e))?;
                let s = is_simple(&aut).map_err(|e| fail(&e))?;
                Ok((s.to_string(), json!({ "simple": s, "order": aut.order().to_string() })))
            })?,
        },
        Command::Catalog { name } => {
            let catalog = Catalog::builtin();
            match name {
                Some(n) => {
                    let e = catalog.get(n).ok_or_else(|| usage(format!("no catalog entry {n}")))?;
                    (serde_json::to_string_pretty(e).unwrap(), json!(e))
                }
                None => {
                    let lines: Vec<String> = catalog
                        .entries
                        .iter()
                        .map(|e| format!("{:<12} degree {:>3}  order {:>12}  {}", e.name, e.degree, e.order, e.description))
                        .collect();
                    (lines.join("\n"), json!(catalog.entries))
                }
            }
        }
        Command::Witness { which } => {
            let g = match which {
                Witness::Example1 { r, m } => construct_example1(*r, *m),
                Witness::Figure1 { n } => construct_figure1(*n),
            }
            .map_err(|e| fail(&e))?;
            (
                format!("{}\n{}", to_graph6(&g), to_edge_list(&g).trim_end()),
                json!({ "graph6": to_graph6(&g), "graph": g }),
            )
        }
        Command::Verify { campaign, corpus } => {
            let opts = options(cli);
            let external = corpus.graph6.is_some() || corpus.edges.is_some();
            if external && !matches!(campaign, Campaign::Main) {
                return Err(usage("an external corpus applies only to `verify main`"));
            }
            let main_corpus = if external { read_graphs(corpus)? } else { default_corpus(opts.max_order) };
            let single = |c| SuiteReport::new(vec![c]);
            let suite = match campaign {
                Campaign::All => verify_all(&opts),
                Campaign::Main => single(verify_main_theorem(&main_corpus, &opts)),
                Campaign::Divisor => single(verify_lemma_divisor(&opts)),
                Campaign::Uniform => single(verify_lemma_uniform(&default_corpus(opts.max_order), &opts)),
                Campaign::Arith => single(verify_an_arithmetic(opts.arithmetic_limit, &opts)),
                Campaign::Catalog => single(verify_catalog(&opts)),
            };
            let code = suite.verdict.exit_code() as u8;
            return Ok((suite_text(&suite), json!(suite), code));
        }
    };
    Ok((text, value, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(k) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    }
    match run(&cli) {
        Ok((text, value, code)) => {
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{text}");
            if let Some(path) = &cli.json {
                let body = serde_json::to_string_pretty(&value).unwrap();
                if let Err(e) = std::fs::write(path, body + "\n") {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(USAGE_ERROR);
                }
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
