use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use grouptope::graph::{graph6_decode, AugmentVariant};
use grouptope::permgroup::parse_group_spec;
use grouptope::pipeline::{demo_induced_subgraph, run_pipeline, write_artifacts, PipelineError, PipelineOptions};
use grouptope::report::Mode;
use grouptope::sweep::{sweep_graphs, SweepOptions};

const PROPERTY_FAILURE: u8 = 2;
const CONSTRUCTION_FAILURE: u8 = 3;
const INPUT_ERROR: u8 = 4;

#[derive(Parser)]
#[command(name = "grouptope", version, about = "Binary polytopes with a prescribed automorphism group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Basic,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum AugmentArg {
    #[value(name = "two_node")]
    TwoNode,
    #[value(name = "one_node")]
    OneNode,
}

#[derive(Subcommand)]
enum Command {
    /// Build the polytope for a group and verify it.
    Run {
        /// Group spec file, or an inline spec such as "cyclic 5".
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "basic")]
        mode: ModeArg,
        #[arg(long, value_enum)]
        augment: Option<AugmentArg>,
        /// Directory for graph6, polytope, generator and report files.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        emit_certificates: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-check every invariant on small graphs.
    Sweep {
        #[arg(long)]
        max_nodes: usize,
        /// Random graphs instead of all labelled graphs.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the exact-LP adjacency comparison.
        #[arg(long)]
        no_lp: bool,
    },
    /// Show a graph as the neighbourhood of a vertex in a polytope skeleton.
    DemoSubgraph {
        #[arg(long)]
        graph6: String,
    },
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn read_spec(arg: &str) -> std::io::Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path)
    } else {
        Ok(arg.to_string())
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run {
            group,
            mode,
            augment,
            out,
            emit_certificates,
            seed,
        } => {
            let text = match read_spec(&group) {
                Ok(t) => t,
                Err(e) => return fail(INPUT_ERROR, e),
            };
            let spec = match parse_group_spec(&text) {
                Ok(s) => s,
                Err(e) => return fail(INPUT_ERROR, e),
            };
            let mode = match mode {
                ModeArg::Basic => Mode::Basic,
                ModeArg::Full => Mode::Full,
            };
            if augment.is_some() && mode == Mode::Basic {
                return fail(INPUT_ERROR, "--augment requires --mode full");
            }
            let opts = PipelineOptions {
                mode,
                augment_variant: match augment {
                    Some(AugmentArg::OneNode) => AugmentVariant::OneNode,
                    _ => AugmentVariant::TwoNode,
                },
                seed,
                emit_certificates,
            };
            let run = match run_pipeline(&spec, &opts) {
                Ok(r) => r,
                Err(e @ PipelineError::Input(_)) => return fail(INPUT_ERROR, e),
                Err(e) => return fail(CONSTRUCTION_FAILURE, e),
            };
            match &out {
                Some(dir) => {
                    if let Err(e) = write_artifacts(&run, dir, emit_certificates) {
                        return fail(CONSTRUCTION_FAILURE, e);
                    }
                    for c in run.report.checks.all() {
                        println!("{:<13} {:?}  {}", c.name, c.status, c.detail);
                    }
                }
                None => print!("{}", run.report.to_json()),
            }
            if run.report.passed {
                ExitCode::SUCCESS
            } else {
                for c in run.report.failures() {
                    eprintln!("failed: {} ({})", c.name, c.detail);
                }
                ExitCode::from(PROPERTY_FAILURE)
            }
        }
        Command::Sweep {
            max_nodes,
            samples,
            seed,
            no_lp,
        } => {
            let mut opts = match samples {
                Some(k) => SweepOptions::sampled(max_nodes, k, seed),
                None => SweepOptions::exhaustive(max_nodes),
            };
            opts.lp &= !no_lp;
            let report = match sweep_graphs(&opts) {
                Ok(r) => r,
                Err(e) => return fail(INPUT_ERROR, e),
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(PROPERTY_FAILURE)
            }
        }
        Command::DemoSubgraph { graph6 } => {
            let g = match graph6_decode(&graph6) {
                Ok(g) => g,
                Err(e) => return fail(INPUT_ERROR, e),
            };
            match demo_induced_subgraph(&g) {
                Ok(demo) => {
                    println!("{}", serde_json::to_string_pretty(&demo).expect("demo serializes"));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(PROPERTY_FAILURE, e),
            }
        }
    }
}
