//! The `preinforce` command line. [`run`] does all the work so tests can
//! drive it without spawning a process.
//!
//! Exit status is 0 on success, 1 when the library reports an error and 2
//! for usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use preinforce::deficiency::{eta_graph_with, EtaSearch};
use preinforce::family::{
    build_block, generate_member, recognize, recognize_exhaustive, replay_trace, BlockKind,
    ConstructionTrace,
};
use preinforce::generate::enumerate_trees;
use preinforce::reinforcement::{default_budget, r_p_by_definition};
use preinforce::verifier::{run_theorem_suite_with, SuiteOptions};
use preinforce::{
    eta_total, gamma_p, mu_graph, mu_set, parse_edge_list, r_p, r_p_by_eta, to_dot, to_edge_list,
    Error, Graph, Limits, VertexSet,
};

#[derive(Parser, Debug)]
#[command(
    name = "preinforce",
    version,
    about = "p-domination and p-reinforcement on trees"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphInput {
    #[arg(long)]
    p: usize,
    /// Edge-list file.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// γ_p with a minimum set.
    Gamma {
        #[command(flatten)]
        g: GraphInput,
        /// List every minimum set (small graphs only).
        #[arg(long)]
        all: bool,
    },
    /// r_p with a reinforcing edge set.
    Reinforce {
        #[command(flatten)]
        g: GraphInput,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Largest edge set tried by `--method definition`.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// η_p of the graph, or of a given set with `--set`.
    Eta {
        #[command(flatten)]
        g: GraphInput,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        /// Search sets of every size below γ_p, not only γ_p - 1.
        #[arg(long, conflicts_with = "set")]
        unrestricted: bool,
    },
    /// μ_p of a minimum set, or of a given p-dominating set.
    Mu {
        #[command(flatten)]
        g: GraphInput,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Building blocks, random members and membership tests for the family.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// All trees of a given order, one edge list per tree.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Run a verification suite and write its report.
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Graphs to sample for `thm-2.2-graphs`.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Convert an edge list for graphviz.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Highlight a minimum p-dominating set.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyAction {
    /// One building block: star, spider, F, Ft or double_star.
    Build {
        #[arg(long)]
        kind: BlockKind,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A random member grown by `--ops` operations.
    Gen {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        ops: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the construction trace as JSON.
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Decide membership and print a construction trace.
    Check {
        #[command(flatten)]
        g: GraphInput,
        /// Search forward from the star instead of peeling.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Rebuild a tree from a trace file.
    Replay {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Method {
    Auto,
    Eta,
    Definition,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Dot,
    Edges,
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

/// Runs one command line; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            if !text.is_empty() && !text.ends_with('\n') {
                let _ = writeln!(out);
            }
            0
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Io(path, e)) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            1
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_edge_list(&read(path)?)?)
}

fn to_set(g: &Graph, ids: &[usize]) -> Result<VertexSet, Failure> {
    Ok(VertexSet::from_members(g.order(), ids.iter().copied())?)
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("json value serializes")
}

/// Writes `text` to `out` when given, otherwise returns it for stdout.
fn emit(out: &Option<PathBuf>, text: String, what: &str) -> Outcome {
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(format!("wrote {what} to {}", path.display()))
        }
        None => Ok(text),
    }
}

fn execute(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Gamma { g, all } => {
            let graph = load(&g.input)?;
            let mut cert = gamma_p(&graph, g.p)?;
            if *all {
                cert.all_min_sets = Some(preinforce::domination::all_minimum_p_dominating_sets(
                    &graph, g.p,
                )?);
                cert.unique = cert.all_min_sets.as_ref().is_some_and(|s| s.len() == 1);
            }
            if json {
                return Ok(pretty(json!(cert)));
            }
            let mut text = format!(
                "gamma_p = {}\nset = {}\nunique = {}",
                cert.value, cert.witness, cert.unique
            );
            for s in cert.all_min_sets.iter().flatten() {
                text.push_str(&format!("\nminimum set {s}"));
            }
            Ok(text)
        }
        Command::Reinforce { g, method, budget } => {
            let graph = load(&g.input)?;
            let result = match method {
                Method::Auto => r_p(&graph, g.p)?,
                Method::Eta => r_p_by_eta(&graph, g.p)?,
                Method::Definition => {
                    r_p_by_definition(&graph, g.p, budget.unwrap_or_else(|| default_budget(g.p)))?
                }
            };
            if json {
                return Ok(pretty(json!(result)));
            }
            let edges: Vec<String> = result
                .witness_edges
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect();
            Ok(format!(
                "r_p = {}\nedges = [{}]",
                result.value,
                edges.join(", ")
            ))
        }
        Command::Eta {
            g,
            set,
            unrestricted,
        } => {
            let graph = load(&g.input)?;
            if let Some(ids) = set {
                let x = to_set(&graph, ids)?;
                let total = eta_total(&graph, g.p, &x);
                return Ok(if json {
                    pretty(json!({"p": g.p, "x": x, "total": total}))
                } else {
                    format!("eta_p(V, X, G) = {total}")
                });
            }
            let mode = if *unrestricted {
                EtaSearch::Unrestricted
            } else {
                EtaSearch::Restricted
            };
            let w = eta_graph_with(&graph, g.p, &Limits::default(), mode)?;
            Ok(if json {
                pretty(json!(w))
            } else {
                format!("eta_p = {}\nset = {}", w.total, w.x)
            })
        }
        Command::Mu { g, set } => {
            let graph = load(&g.input)?;
            let report = match set {
                Some(ids) => mu_set(&graph, g.p, &to_set(&graph, ids)?)?,
                None => mu_graph(&graph, g.p)?,
            };
            if json {
                return Ok(pretty(json!(report)));
            }
            let mut text = format!(
                "mu_p = {} at vertex {}\nset = {}",
                report.set_min, report.argmin, report.set
            );
            for e in &report.entries {
                text.push_str(&format!(
                    "\n  {}: {} private + {} short = {}",
                    e.vertex, e.private_count, e.deficit, e.mu
                ));
            }
            Ok(text)
        }
        Command::Family { action } => family(action, json),
        Command::Enumerate { n, count_only } => {
            if *count_only {
                let count = enumerate_trees(*n).count();
                return Ok(if json {
                    pretty(json!({"n": n, "count": count}))
                } else {
                    format!("{count}")
                });
            }
            let trees: Vec<String> = enumerate_trees(*n).map(|t| to_edge_list(&t)).collect();
            Ok(if json {
                pretty(json!(trees))
            } else {
                trees.join("\n")
            })
        }
        Command::Verify {
            claim,
            p,
            max_n,
            jobs,
            out,
            seed,
            samples,
        } => {
            let opts = SuiteOptions {
                jobs: *jobs,
                seed: *seed,
                samples: *samples,
                ..Default::default()
            };
            let report = run_theorem_suite_with(claim, *p, *max_n, &opts)?;
            let summary = format!(
                "{}: {} checked, {} violations ({})",
                report.claim,
                report.checked,
                report.violations.len(),
                if report.passed() { "pass" } else { "FAIL" }
            );
            if let Some(path) = out {
                write_file(path, &report.to_json())?;
            }
            if json {
                return Ok(report.to_json());
            }
            let mut text = summary;
            for v in report.violations.iter().take(10) {
                text.push_str(&format!("\n  {}", v.detail));
            }
            if let Some(path) = out {
                text.push_str(&format!("\nreport written to {}", path.display()));
            }
            Ok(text)
        }
        Command::Export {
            input,
            format,
            p,
            out,
        } => {
            let graph = load(input)?;
            let text = match format {
                Format::Dot => {
                    let highlight = p
                        .map(|p| gamma_p(&graph, p))
                        .transpose()?
                        .map(|c| c.witness);
                    to_dot(&graph, highlight.as_ref())
                }
                Format::Edges => to_edge_list(&graph),
            };
            emit(out, text, "graph")
        }
    }
}

fn family(action: &FamilyAction, json: bool) -> Outcome {
    match action {
        FamilyAction::Build { kind, p, t, out } => {
            let block = build_block(*kind, *p, *t)?;
            if json && out.is_none() {
                return Ok(pretty(
                    json!({"edges": to_edge_list(&block.tree), "a": block.a}),
                ));
            }
            emit(out, to_edge_list(&block.tree), "block")
        }
        FamilyAction::Gen {
            p,
            ops,
            seed,
            out,
            trace_out,
        } => {
            let (member, trace) = generate_member(*p, *ops, *seed)?;
            if let Some(path) = trace_out {
                write_file(path, &trace.to_json())?;
            }
            if json && out.is_none() {
                return Ok(pretty(json!({
                    "edges": to_edge_list(&member.tree),
                    "a": member.a,
                    "trace": trace,
                })));
            }
            emit(out, to_edge_list(&member.tree), "member")
        }
        FamilyAction::Check { g, exhaustive } => {
            let graph = load(&g.input)?;
            let found = if *exhaustive {
                recognize_exhaustive(&graph, g.p)?
            } else {
                recognize(&graph, g.p)?
            };
            if json {
                return Ok(pretty(json!({"member": found.is_some(), "trace": found})));
            }
            Ok(match found {
                None => "not a member".to_string(),
                Some(trace) => {
                    let steps: Vec<String> = trace
                        .steps
                        .iter()
                        .map(|s| match s.t {
                            Some(t) => format!("{} at {} (t = {t})", s.op, s.y),
                            None => format!("{} at {}", s.op, s.y),
                        })
                        .collect();
                    format!("member\ntrace: {}\n{}", steps.join(", "), trace.to_json())
                }
            })
        }
        FamilyAction::Replay { trace, out } => {
            let trace = ConstructionTrace::from_json(&read(trace)?)?;
            let member = replay_trace(&trace)?;
            if json && out.is_none() {
                return Ok(pretty(
                    json!({"edges": to_edge_list(&member.tree), "a": member.a}),
                ));
            }
            emit(out, to_edge_list(&member.tree), "tree")
        }
    }
}
