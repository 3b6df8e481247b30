use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idom::graph::encode_edge_list;
use idom::operators::{add_false_twin, add_true_twin, corona, corona_k1};
use idom::solver::{self, SolverConfig};
use idom::verify::{self, Status, SuiteConfig, TheoremId};
use idom::{witnesses, Error, Family, Graph};
use serde_json::json;

const BUDGET_ENV: &str = "IDOM_BUDGET_SECS";

/// Exact Italian, Roman and classical domination on small graphs.
#[derive(Parser)]
#[command(name = "idom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a standard family.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Order for path, cycle, complete and empty graphs.
        #[arg(long)]
        n: Option<usize>,
        /// Part sizes for complete-bipartite.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Leaf count for star.
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        out: OutputFormat,
    },
    /// Compute γ_I, γ_R or γ exactly, with a certificate.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Param::Italian)]
        param: Param,
        #[arg(long)]
        json: bool,
    },
    /// Apply a graph operator.
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Print a graph G on n vertices with γ_I(G ⊙ K_1) = a.
    Realize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: u32,
        #[command(flatten)]
        out: OutputFormat,
    },
    /// List every minimum Italian dominating function, one per line.
    Enumerate {
        #[command(flatten)]
        input: Input,
    },
    /// Run the theorem checks and report.
    Verify {
        /// Only this check (T1..T10, L1..L3, TT, FT, SANDWICH).
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cap on the order of every base graph.
        #[arg(long)]
        max_n: Option<usize>,
        /// Lemma and twin checks over all graphs on up to 6 vertices.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OpCommand {
    /// G ⊙ H.
    Corona {
        /// File holding G; stdin when omitted.
        #[arg(long)]
        g: Option<PathBuf>,
        /// File holding H, or `K1`.
        #[arg(long)]
        h: String,
        #[command(flatten)]
        out: OutputFormat,
    },
    /// Add a twin of one vertex; the new vertex gets the next index.
    Twin {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_enum)]
        kind: TwinKind,
        #[command(flatten)]
        out: OutputFormat,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file (graph6 or edge list); stdin when omitted.
    #[arg(long = "in", conflicts_with = "stdin")]
    path: Option<PathBuf>,
    #[arg(long)]
    stdin: bool,
}

#[derive(Args)]
struct OutputFormat {
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
    Empty,
    CompleteBipartite,
    Star,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    Italian,
    Roman,
    Domination,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwinKind {
    True,
    False,
}

enum Failure {
    Usage(String),
    Limit(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("idom: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("idom: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Gen { family, n, p, q, m, out } => {
            let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("--{flag} is required")));
            let family = match family {
                FamilyArg::Path => Family::Path(need(n, "n")?),
                FamilyArg::Cycle => Family::Cycle(need(n, "n")?),
                FamilyArg::Complete => Family::Complete(need(n, "n")?),
                FamilyArg::Empty => Family::Empty(need(n, "n")?),
                FamilyArg::CompleteBipartite => Family::CompleteBipartite(need(p, "p")?, need(q, "q")?),
                FamilyArg::Star => Family::Star(need(m, "m")?),
            };
            emit(&Graph::generate(family)?, &out)
        }
        Command::Solve { input, param, json } => solve(&read_graph(&input)?, param, json),
        Command::Op { op: OpCommand::Corona { g, h, out } } => {
            let g = match g {
                Some(path) => parse(&std::fs::read_to_string(path)?)?,
                None => parse(&read_stdin()?)?,
            };
            let product = if h.eq_ignore_ascii_case("K1") {
                corona_k1(&g)?.0
            } else {
                corona(&g, &parse(&std::fs::read_to_string(&h)?)?)?.0
            };
            emit(&product, &out)
        }
        Command::Op { op: OpCommand::Twin { input, vertex, kind, out } } => {
            let g = read_graph(&input)?;
            let h = match kind {
                TwinKind::True => add_true_twin(&g, vertex)?,
                TwinKind::False => add_false_twin(&g, vertex)?,
            };
            emit(&h, &out)
        }
        Command::Realize { n, a, out } => emit(&witnesses::realize_corona_k1(n, a)?, &out),
        Command::Enumerate { input } => {
            let g = read_graph(&input)?;
            let mut stdout = io::stdout().lock();
            for f in solver::enumerate_minimum_idfs(&g)? {
                writeln!(stdout, "{f}")?;
            }
            Ok(())
        }
        Command::Verify { theorem, seed, max_n, exhaustive, json } => {
            let mut config = if exhaustive { SuiteConfig::exhaustive() } else { SuiteConfig::default() };
            config.seed = seed;
            config.max_n = max_n;
            if let Some(secs) = budget_override()? {
                config.budget_secs = secs;
            }
            let ids = match theorem {
                Some(id) => vec![id.parse::<TheoremId>()?],
                None => TheoremId::ALL.to_vec(),
            };
            let report = verify::run_theorems(&ids, &config);
            let mut stdout = io::stdout().lock();
            if json {
                writeln!(stdout, "{}", report.to_json())?;
            } else {
                for (id, s) in report.by_theorem() {
                    writeln!(stdout, "{id}: {} pass, {} fail, {} budget exceeded", s.pass, s.fail, s.exceeded)?;
                }
                for r in report.results.iter().filter(|r| r.status != Status::Pass) {
                    let detail = r.detail.as_deref().unwrap_or("");
                    writeln!(stdout, "{:?} {} {} graph={} {detail}", r.status, r.theorem, r.instance, r.graph)?;
                }
                let s = report.summary;
                writeln!(stdout, "total: {} pass, {} fail, {} budget exceeded", s.pass, s.fail, s.exceeded)?;
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn solve(g: &Graph, param: Param, json: bool) -> CliResult {
    let mut config = SolverConfig::default();
    if let Some(secs) = budget_override()? {
        config.budget = Some(Duration::from_secs(secs));
    }
    let (name, value, certificate) = match param {
        Param::Italian => {
            let r = solver::gamma_italian_with(g, &config)?;
            ("italian", r.value, r.certificate.to_string())
        }
        Param::Roman => {
            let r = solver::gamma_roman_with(g, &config)?;
            ("roman", r.value, r.certificate.to_string())
        }
        Param::Domination => {
            let r = solver::gamma_domination_with(g, &config)?;
            let set: Vec<String> = r.certificate.iter().map(usize::to_string).collect();
            ("domination", r.value, set.join(","))
        }
    };
    let mut stdout = io::stdout().lock();
    if json {
        let doc = json!({ "param": name, "graph": g.to_graph6(), "value": value, "certificate": certificate });
        writeln!(stdout, "{doc}")?;
    } else {
        writeln!(stdout, "{value}")?;
        writeln!(stdout, "{certificate}")?;
    }
    Ok(())
}

fn budget_override() -> CliResult<Option<u64>> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be a whole number of seconds, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn parse(text: &str) -> CliResult<Graph> {
    Ok(Graph::parse_auto(text)?)
}

fn read_stdin() -> CliResult<String> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    Ok(text)
}

fn read_graph(input: &Input) -> CliResult<Graph> {
    match &input.path {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            parse(&text)
        }
        None => parse(&read_stdin()?),
    }
}

fn emit(g: &Graph, out: &OutputFormat) -> CliResult {
    let text = match out.format {
        Format::Graph6 => format!("{}\n", g.to_graph6()),
        Format::Edges => encode_edge_list(g),
    };
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}
