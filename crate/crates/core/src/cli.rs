//! Command-line front end. `run` parses arguments, dispatches and maps
//! errors to exit codes: 0 success, 1 bad input, 2 internal failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::canon::isomorphism;
use crate::closed::{family_period, zigzag_period, ClosedFormValue};
use crate::error::Error;
use crate::families::{family_dual, family_graph, zigzag, zigzag_completed, FamilyParams};
use crate::graph::Multigraph;
use crate::json::{graph_from_json, graph_to_json};
use crate::kirchhoff::{psi_del_contract, psi_enumerate, spanning_tree_count, DEFAULT_MAX_EDGES};
use crate::mc::{estimate_period, McConfig, Sampler, DEFAULT_MC_MAX_EDGES};
use crate::transforms::{planar_dual, reduce_to_zigzag, ChainReport};

pub const MAX_EDGES_VAR: &str = "PERIOD_FORGE_MAX_EDGES";

const FLOAT_DIGITS: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "period-forge", version, about = "Graph families, Kirchhoff polynomials and periods")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated graph as JSON
    Gen(GenArgs),
    /// Print the Kirchhoff polynomial of a graph file
    Psi {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Backend::Enumerate)]
        method: Backend,
    },
    /// Print the spanning-tree count of a graph file
    Trees { file: PathBuf },
    /// Closed-form or Monte Carlo periods
    #[command(subcommand)]
    Period(PeriodCommand),
    /// Run the twist chain from G(k, l, m) down to the zig-zag graph
    TwistChain {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        /// Write every intermediate graph and report.json into this directory
        #[arg(long, value_name = "DIR")]
        emit_intermediates: Option<PathBuf>,
    },
    /// Planar dual of a graph file with a rotation system
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test two graph files for isomorphism
    Iso { first: PathBuf, second: PathBuf },
    /// Closed-form period table as CSV
    Table {
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Zigzag,
    ZigzagCompleted,
    Family,
    FamilyDual,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Enumerate,
    DelContract,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum PeriodCommand {
    /// Exact closed form
    Closed {
        #[arg(long, value_name = "N", conflicts_with = "family", required_unless_present = "family")]
        zigzag: Option<u32>,
        #[arg(long, num_args = 3, value_names = ["K", "L", "M"])]
        family: Option<Vec<u32>>,
    },
    /// Monte Carlo estimate
    Mc(McArgs),
}

#[derive(Args, Debug)]
struct McArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: u32,
    #[arg(long, default_value = "simplex")]
    sampler: Sampler,
    #[arg(long, default_value_t = 16)]
    batches: u32,
    #[arg(long)]
    tail_exponent: Option<f64>,
    /// Write per-batch means as CSV
    #[arg(long, value_name = "FILE")]
    batch_csv: Option<PathBuf>,
}

enum Failure {
    User(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::User(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::User(format!("write failed: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::User(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Gen(args) => generate(args, out),
        Command::Psi { file, method } => {
            let g = read_graph(&file)?;
            let limit = max_edges(DEFAULT_MAX_EDGES)?;
            let poly = match method {
                Backend::Enumerate => psi_enumerate(&g, limit)?,
                Backend::DelContract => psi_del_contract(&g, limit)?,
            };
            writeln!(out, "{poly}")?;
            Ok(())
        }
        Command::Trees { file } => {
            let g = read_graph(&file)?;
            writeln!(out, "{}", spanning_tree_count(&g)?)?;
            Ok(())
        }
        Command::Period(PeriodCommand::Closed { zigzag, family }) => {
            let value = match (zigzag, family) {
                (Some(n), _) => zigzag_period(n)?,
                (None, Some(klm)) => family_period(FamilyParams::new(klm[0], klm[1], klm[2])?),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            writeln!(out, "{value} = {}", format_sig(value.as_float(1e-13)?))?;
            Ok(())
        }
        Command::Period(PeriodCommand::Mc(args)) => monte_carlo(args, out),
        Command::TwistChain {
            k,
            l,
            m,
            emit_intermediates,
        } => twist_chain(FamilyParams::new(k, l, m)?, emit_intermediates.as_deref(), out),
        Command::Dual { file, out: path } => {
            let g = read_graph(&file)?;
            emit_graph(&planar_dual(&g)?, path.as_deref(), out)
        }
        Command::Iso { first, second } => {
            let (a, b) = (read_graph(&first)?, read_graph(&second)?);
            match isomorphism(&a, &b) {
                Some(map) => {
                    writeln!(out, "isomorphic: true")?;
                    for (u, v) in map {
                        writeln!(out, "{u} -> {v}")?;
                    }
                }
                None => writeln!(out, "isomorphic: false")?,
            }
            Ok(())
        }
        Command::Table { max_n } => table(max_n, out),
    }
}

fn generate(args: GenArgs, out: &mut dyn Write) -> Outcome {
    let need = |value: Option<u32>, flag: &str| {
        value.ok_or_else(|| Failure::User(format!("gen {:?} needs --{flag}", args.kind)))
    };
    let family = || -> std::result::Result<FamilyParams, Failure> {
        Ok(FamilyParams::new(need(args.k, "k")?, need(args.l, "l")?, need(args.m, "m")?)?)
    };
    let g = match args.kind {
        GenKind::Zigzag => zigzag(need(args.n, "n")?)?,
        GenKind::ZigzagCompleted => zigzag_completed(need(args.n, "n")?)?,
        GenKind::Family => family_graph(family()?),
        GenKind::FamilyDual => family_dual(family()?)?,
    };
    emit_graph(&g, args.out.as_deref(), out)
}

fn monte_carlo(args: McArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.graph)?;
    let cfg = McConfig {
        samples: args.samples,
        seed: args.seed,
        workers: args.workers,
        sampler: args.sampler,
        batches: args.batches,
        tail_exponent: args.tail_exponent,
        max_edges: max_edges(DEFAULT_MC_MAX_EDGES)?,
    };
    let est = estimate_period(&g, &cfg)?;
    let record = json!({
        "batches": cfg.batches,
        "mean": round_sig(est.mean),
        "plain_mean": round_sig(est.plain_mean),
        "plain_stderr": round_sig(est.plain_stderr),
        "samples": est.samples,
        "sampler": est.sampler.tag(),
        "seed": est.seed,
        "stderr": round_sig(est.stderr),
        "tail_exponent": round_sig(est.tail_exponent),
        "workers": est.workers,
    });
    writeln!(out, "{}", pretty(&record))?;
    if let Some(path) = args.batch_csv {
        let mut csv = String::from("batch,mean\n");
        for (i, m) in est.batch_means.iter().enumerate() {
            csv.push_str(&format!("{i},{}\n", format_sig(*m)));
        }
        write_file(&path, &csv)?;
    }
    Ok(())
}

fn twist_chain(p: FamilyParams, dir: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let report = reduce_to_zigzag(p)?;
    writeln!(out, "chain G{} -> Z_{}", report.params, report.zigzag_loops)?;
    for (i, step) in report.steps.iter().enumerate() {
        writeln!(
            out,
            "step {}: G{} -> G{}  t1={} t2={}  twisted ~ completed G{}: {}  decompleted ~ G{}: {}",
            i + 1,
            step.from,
            step.to,
            step.t1,
            step.t2,
            step.to,
            step.twisted_matches,
            step.to,
            step.decompleted_matches
        )?;
    }
    writeln!(out, "terminal ~ Z_{}: {}", report.zigzag_loops, report.terminal_matches_zigzag)?;
    writeln!(out, "verdict: {}", report.verdict)?;
    if let Some(dir) = dir {
        emit_chain(&report, dir)?;
    }
    if report.verdict {
        Ok(())
    } else {
        Err(Failure::Internal(format!("twist chain for G{} failed", report.params)))
    }
}

fn emit_chain(report: &ChainReport, dir: &Path) -> Outcome {
    fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.display().to_string(),
        source,
    })?;
    write_file(&dir.join("initial.json"), &graph_to_json(&report.initial))?;
    for (i, step) in report.steps.iter().enumerate() {
        let n = i + 1;
        write_file(&dir.join(format!("step{n}_completed.json")), &graph_to_json(&step.completed))?;
        write_file(&dir.join(format!("step{n}_twisted.json")), &graph_to_json(&step.twisted))?;
        write_file(&dir.join(format!("step{n}_decompleted.json")), &graph_to_json(&step.decompleted))?;
    }
    write_file(&dir.join("terminal.json"), &graph_to_json(&report.terminal))?;
    let params = |p: FamilyParams| json!([p.k(), p.l(), p.m()]);
    let steps: Vec<Value> = report
        .steps
        .iter()
        .map(|s| {
            json!({
                "decompleted_matches": s.decompleted_matches,
                "from": params(s.from),
                "t1": s.t1,
                "t2": s.t2,
                "to": params(s.to),
                "twisted_matches": s.twisted_matches,
            })
        })
        .collect();
    let summary = json!({
        "params": params(report.params),
        "steps": steps,
        "terminal_matches_zigzag": report.terminal_matches_zigzag,
        "verdict": report.verdict,
        "zigzag_loops": report.zigzag_loops,
    });
    write_file(&dir.join("report.json"), &format!("{}\n", pretty(&summary)))
}

fn table(max_n: u32, out: &mut dyn Write) -> Outcome {
    if max_n < 3 {
        return Err(Failure::User(format!("--max-n must be at least 3, got {max_n}")));
    }
    writeln!(out, "kind,k,l,m,n,coefficient,zeta_argument,value")?;
    let row = |out: &mut dyn Write, kind: &str, klm: String, n: u32, v: &ClosedFormValue| -> Outcome {
        writeln!(
            out,
            "{kind},{klm},{n},{},{},{}",
            v.coefficient(),
            v.zeta_argument(),
            format_sig(v.as_float(1e-13)?)
        )?;
        Ok(())
    };
    for n in 3..=max_n {
        row(out, "zigzag", ",,".into(), n, &zigzag_period(n)?)?;
    }
    for p in FamilyParams::all_up_to(max_n / 2) {
        row(out, "family", format!("{},{},{}", p.k(), p.l(), p.m()), p.n(), &family_period(p))?;
    }
    Ok(())
}

fn max_edges(default: usize) -> std::result::Result<usize, Failure> {
    match std::env::var(MAX_EDGES_VAR) {
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::User(format!("{MAX_EDGES_VAR} must be a positive integer, got {text:?}"))
        }),
        Err(_) => Ok(default),
    }
}

fn read_graph(path: &Path) -> std::result::Result<Multigraph, Failure> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    graph_from_json(&text).map_err(|e| Failure::User(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|source| {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
        .into()
    })
}

fn emit_graph(g: &Multigraph, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let text = graph_to_json(g);
    match path {
        Some(path) => write_file(path, &text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize")
}

/// Nearest double to `x` rounded to twelve significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", FLOAT_DIGITS - 1, x).parse().unwrap_or(x)
}

/// `x` with exactly twelve significant digits, in positional notation unless
/// the exponent is outside `[-6, 15]`.
pub fn format_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", FLOAT_DIGITS - 1, x);
    let exponent: i32 = sci.split('e').nth(1).and_then(|e| e.parse().ok()).unwrap_or(0);
    if !(-6..=15).contains(&exponent) {
        return sci;
    }
    let decimals = (FLOAT_DIGITS as i32 - 1 - exponent).max(0) as usize;
    format!("{:.*}", decimals, x)
}
