use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cover_pebbling::formulas::goodness_bound;
use cover_pebbling::fuzz::{random_cycle_case, random_distribution, random_path_case};
use cover_pebbling::solver::{check_product_equality, sweep_goodness, SweepOptions, STATES_ENV, TOTAL_ENV};
use cover_pebbling::strategy::cover_product_with;
use cover_pebbling::{
    decide_coverable, gamma_exact, gamma_formula, q_cover_cycle, q_cover_path, replay, Budget, Distribution,
    Error, Graph, GraphSpec,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

/// Cover pebbling numbers, coverability and covering strategies.
///
/// Graphs are written as path:N, cycle:N, complete:N, star:N, tree:FILE,
/// edges:FILE or product:SPEC,SPEC,...; distributions as comma-separated
/// pebble counts in vertex order.
#[derive(Parser)]
#[command(name = "pebble", version)]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// States one coverability search may visit.
    #[arg(long, global = true, env = STATES_ENV)]
    max_states: Option<u64>,
    /// Largest pebble total the exact solver will consider.
    #[arg(long, global = true, env = TOTAL_ENV)]
    max_total: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(s) = self.max_states {
            b.max_states = s;
        }
        if let Some(t) = self.max_total {
            b.max_total = t;
        }
        b
    }
}

#[derive(Subcommand)]
enum Command {
    /// Cover pebbling number of a graph.
    Gamma {
        spec: GraphSpec,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Whether a distribution can be cover pebbled.
    Decide {
        spec: GraphSpec,
        distribution: Distribution,
        /// Write a covering trace here when one exists.
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Constructive cover of G□H with H a path or cycle (the last factor).
    Strategy {
        spec: GraphSpec,
        distribution: Distribution,
        /// Write the verified trace here as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Goodness of all small connected graphs and product equality checks.
    Sweep {
        /// Check every connected labeled graph on 1..=N vertices.
        #[arg(long)]
        max_n: Option<usize>,
        /// Allow N = 5.
        #[arg(long)]
        extended: bool,
        /// Keep one graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Pairs "SPEC;SPEC" (or "SPEC SPEC", or "SPEC,SPEC" for simple
        /// specs), inline or one per line in a file.
        #[arg(long)]
        products: Vec<String>,
        /// Write the table here instead of standard output.
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
    /// Run the covering constructions on seeded random inputs.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, value_enum, default_value_t = FuzzKind::Path)]
        kind: FuzzKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Exact,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FuzzKind {
    Path,
    Cycle,
    Product,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.budget.budget();
    let result = match cli.command {
        Command::Gamma { spec, method } => gamma(&spec, method, budget),
        Command::Decide {
            spec,
            distribution,
            trace_out,
        } => decide(&spec, &distribution, trace_out.as_deref(), budget),
        Command::Strategy {
            spec,
            distribution,
            out,
        } => strategy(&spec, &distribution, out.as_deref(), budget),
        Command::Sweep {
            max_n,
            extended,
            dedup,
            products,
            tsv,
        } => sweep(
            max_n,
            SweepOptions { dedup, extended },
            &products,
            tsv.as_deref(),
            budget,
        ),
        Command::Fuzz { seed, cases, kind } => fuzz(seed, cases, kind),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit(_) => EXIT_LIMIT,
                Error::InvalidArgument(_) | Error::Overflow(_) | Error::Io(_) | Error::Json(_) => EXIT_USAGE,
                Error::IllegalMove { .. } | Error::ConstructionFailed(_) | Error::Internal(_) => {
                    EXIT_INTERNAL
                }
            })
        }
    }
}

fn gamma(spec: &GraphSpec, method: Method, budget: Budget) -> cover_pebbling::Result<u8> {
    let g = spec.build()?;
    let (bound, _) = goodness_bound(&g)?;
    println!("graph\t{g}");
    println!("simple_bound\t{bound}");
    let formula = match method {
        Method::Formula | Method::Both => {
            let f = gamma_formula(&g)?;
            println!("formula\t{}\t({})", f.value, f.family);
            if let Some(k) = f.key_vertex {
                println!("key_vertex\t{k}");
            }
            println!("good\t{}", f.value == bound);
            Some(f.value)
        }
        Method::Exact => None,
    };
    let exact = match method {
        Method::Exact | Method::Both => {
            let r = gamma_exact(&g, budget)?;
            println!("exact\t{}", r.gamma);
            if formula.is_none() {
                if let Some(k) = r.key_vertex {
                    println!("key_vertex\t{k}");
                }
                println!("good\t{}", r.good);
            }
            println!("witness\t{}", r.witness);
            println!("states\t{}", r.states_explored);
            Some(r.gamma)
        }
        Method::Formula => None,
    };
    if let (Some(f), Some(e)) = (formula, exact) {
        let agree = f == e;
        println!("agree\t{agree}");
        if !agree {
            return Ok(EXIT_NEGATIVE);
        }
    }
    Ok(0)
}

fn decide(
    spec: &GraphSpec,
    d: &Distribution,
    trace_out: Option<&Path>,
    budget: Budget,
) -> cover_pebbling::Result<u8> {
    let g = spec.build()?;
    let report = decide_coverable(&g, d, budget)?;
    println!("graph\t{g}");
    println!("distribution\t{d}");
    println!("states\t{}", report.states_explored);
    match report.trace {
        Some(trace) => {
            println!("coverable\ttrue");
            println!("moves\t{}", trace.len());
            if let Some(path) = trace_out {
                fs::write(path, trace.to_json()? + "\n")?;
            }
            Ok(0)
        }
        None => {
            println!("coverable\tfalse");
            Ok(EXIT_NEGATIVE)
        }
    }
}

/// Splits a spec into `G` (all factors but the last) and `H` (the last).
fn split_product(spec: &GraphSpec) -> cover_pebbling::Result<(Graph, Graph)> {
    match spec {
        GraphSpec::Product(parts) => {
            let (last, rest) = parts.split_last().expect("products have at least two factors");
            let g = if rest.len() == 1 {
                rest[0].build()?
            } else {
                GraphSpec::Product(rest.to_vec()).build()?
            };
            Ok((g, last.build()?))
        }
        other => Ok((Graph::path(1)?, other.build()?)),
    }
}

fn gamma_of(g: &Graph, budget: Budget) -> cover_pebbling::Result<u64> {
    match gamma_formula(g) {
        Ok(f) => Ok(f.value),
        Err(Error::InvalidArgument(_)) => Ok(gamma_exact(g, budget)?.gamma),
        Err(e) => Err(e),
    }
}

fn strategy(
    spec: &GraphSpec,
    d: &Distribution,
    out: Option<&Path>,
    budget: Budget,
) -> cover_pebbling::Result<u8> {
    let (g, h) = split_product(spec)?;
    let gamma_g = gamma_of(&g, budget)?;
    let outcome = cover_product_with(d, &g, &h, gamma_g, budget)?;
    let product = Graph::cartesian_product(&g, &h)?;
    let end = replay(&product, &outcome.trace)?;
    if !end.is_q_covered(1) {
        return Err(Error::Internal(
            "strategy trace does not cover the product".into(),
        ));
    }
    println!("graph\t{product}");
    println!("factors\t{g}\t{h}");
    println!("distribution\t{d}");
    println!("moves\t{}", outcome.trace.len());
    println!("final\t{}", end.to_plain());
    println!("verified\ttrue");
    if let Some(path) = out {
        fs::write(path, outcome.trace.to_json()? + "\n")?;
    }
    Ok(0)
}

fn parse_pair(text: &str) -> cover_pebbling::Result<(GraphSpec, GraphSpec)> {
    let text = text.trim();
    let (a, b) = if let Some(split) = text.split_once(';') {
        split
    } else if let Some(split) = text.split_once(char::is_whitespace) {
        split
    } else if let Some(split) = text.split_once(',') {
        split
    } else {
        return Err(Error::InvalidArgument(format!(
            "{text:?} is not a pair of graph specs"
        )));
    };
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn read_pairs(args: &[String]) -> cover_pebbling::Result<Vec<(GraphSpec, GraphSpec)>> {
    let mut pairs = Vec::new();
    for arg in args {
        let path = Path::new(arg);
        if path.is_file() {
            let text = fs::read_to_string(path)?;
            for line in text.lines() {
                let line = line.split('#').next().unwrap_or("").trim();
                if !line.is_empty() {
                    pairs.push(parse_pair(line)?);
                }
            }
        } else {
            pairs.push(parse_pair(arg)?);
        }
    }
    Ok(pairs)
}

fn sweep(
    max_n: Option<usize>,
    options: SweepOptions,
    products: &[String],
    tsv: Option<&Path>,
    budget: Budget,
) -> cover_pebbling::Result<u8> {
    if max_n.is_none() && products.is_empty() {
        return Err(Error::InvalidArgument(
            "nothing to sweep: give --max-n and/or --products".into(),
        ));
    }
    let pairs = read_pairs(products)?;
    let mut table = String::new();
    let mut summary = Vec::new();
    let mut counterexamples = 0;

    if let Some(n) = max_n {
        let report = sweep_goodness(n, options, budget)?;
        table.push_str(&report.to_tsv());
        let bad = report.counterexamples().count();
        counterexamples += bad;
        summary.push(format!(
            "graphs\t{}\tcounterexamples\t{bad}\tunknown\t{}",
            report.entries.len(),
            report.unknown().count()
        ));
    }

    if !pairs.is_empty() {
        if !table.is_empty() {
            table.push('\n');
        }
        table.push_str("g\th\tgamma_g\tgamma_h\tgamma_product\tverdict\n");
        let mut bad = 0;
        let mut unknown = 0;
        for (gs, hs) in &pairs {
            let (g, h) = (gs.build()?, hs.build()?);
            let row = match check_product_equality(&g, &h, budget) {
                Ok(eq) => {
                    let verdict = if eq.equal { "equal" } else { "NOT-EQUAL" };
                    bad += usize::from(!eq.equal);
                    format!("{}\t{}\t{}\t{verdict}", eq.gamma_g, eq.gamma_h, eq.gamma_product)
                }
                Err(Error::ResourceLimit(_)) => {
                    unknown += 1;
                    "-\t-\t-\tunknown".to_string()
                }
                Err(e) => return Err(e),
            };
            table.push_str(&format!("{gs}\t{hs}\t{row}\n"));
        }
        counterexamples += bad;
        summary.push(format!(
            "pairs\t{}\tcounterexamples\t{bad}\tunknown\t{unknown}",
            pairs.len()
        ));
    }

    match tsv {
        Some(path) => fs::write(path, &table)?,
        None => print!("{table}"),
    }
    for line in summary {
        println!("# {line}");
    }
    Ok(if counterexamples > 0 { EXIT_NEGATIVE } else { 0 })
}

fn fuzz(seed: u64, cases: usize, kind: FuzzKind) -> cover_pebbling::Result<u8> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = 0;
    for i in 0..cases {
        let failure = match kind {
            FuzzKind::Path => {
                let c = random_path_case(&mut rng, 6, 8)?;
                let h = Graph::path(c.vertices)?;
                q_cover_path(&h, &c.distribution, c.q)
                    .err()
                    .map(|e| format!("P_{} Q={} {}: {e}", c.vertices, c.q, c.distribution))
            }
            FuzzKind::Cycle => {
                let c = random_cycle_case(&mut rng, 7, 8)?;
                let h = Graph::cycle(c.vertices)?;
                q_cover_cycle(&h, &c.distribution, c.q)
                    .err()
                    .map(|e| format!("C_{} Q={} {}: {e}", c.vertices, c.q, c.distribution))
            }
            FuzzKind::Product => {
                let g = match rng.random_range(0..3) {
                    0 => Graph::path(rng.random_range(1..=3))?,
                    1 => Graph::complete(3)?,
                    _ => Graph::star(4)?,
                };
                let h = if rng.random_bool(0.5) {
                    Graph::path(rng.random_range(2..=4))?
                } else {
                    Graph::cycle(rng.random_range(3..=5))?
                };
                let gamma_g = gamma_formula(&g)?.value;
                let total = gamma_g * gamma_formula(&h)?.value;
                let d = random_distribution(&mut rng, g.vertex_count() * h.vertex_count(), total);
                cover_product_with(&d, &g, &h, gamma_g, Budget::default())
                    .err()
                    .map(|e| format!("{g}□{h} {d}: {e}"))
            }
        };
        if let Some(why) = failure {
            failures += 1;
            println!("case {i} failed\t{why}");
        }
    }
    let family = match kind {
        FuzzKind::Path => "path",
        FuzzKind::Cycle => "cycle",
        FuzzKind::Product => "product",
    };
    println!("kind\t{family}\tseed\t{seed}\tcases\t{cases}\tfailures\t{failures}");
    Ok(if failures > 0 { EXIT_NEGATIVE } else { 0 })
}
