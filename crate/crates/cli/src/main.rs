mod certify;
mod output;
mod scan;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use perfdel_core::certify::target_reps;
use perfdel_core::{canonical_rep, construct_g, construct_p, diagram, Error, Normalization, ScaledLattice};

use crate::certify::{CertifyRequest, Family};
use crate::scan::GridSpec;

/// Exact construction and certification of perfect Delaunay polytopes.
///
/// Exit codes: 0 certified, 1 mathematically refuted, 2 usage or resource
/// error.
#[derive(Parser)]
#[command(name = "perfdel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    Half,
    Integral,
}

#[derive(Subcommand)]
enum Command {
    /// Write the vertex set of P(d,s,k) or G^d.
    Construct {
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
        #[arg(long)]
        d: usize,
        /// Ignored for G.
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Ignored for G.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Ignored for G, whose vertices are half-normalized.
        #[arg(long, value_enum, default_value = "half")]
        normalization: NormArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the Delaunay and perfection certificates as one JSON document.
    Certify {
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Also run the brute-force lattice enumeration.
        #[arg(long)]
        oracle: bool,
        /// Hard cap on search-tree nodes visited by the oracle.
        #[arg(long, default_value_t = 100_000_000)]
        node_budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the diagram of M as CSV: l,a,phi1,phi2,on_line.
    Diagram {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// Marks the two certificate targets.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify every admissible (d, s, k) up to the bounds.
    Scan {
        #[arg(long)]
        d_max: usize,
        #[arg(long)]
        s_max: usize,
        #[arg(long)]
        k_max: usize,
        /// Worker threads (default: all cores).
        #[arg(long, env = "PERFDEL_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 100_000_000)]
        node_budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Errors are usage or resource problems; mathematical negatives are
/// reported through `Ok(ExitCode::from(1))`.
enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// Status lines go to stdout when the payload goes to a file, and to stderr
/// when the payload itself is on stdout.
fn status(out: &Option<PathBuf>, line: &str) {
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn exit_for(certified: bool) -> ExitCode {
    if certified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: Command) -> Result<ExitCode, Failure> {
    match cmd {
        Command::Construct {
            family,
            d,
            s,
            k,
            normalization,
            format,
            out,
        } => {
            let vs = match family {
                Family::P => {
                    let norm = match normalization {
                        NormArg::Half => Normalization::Half,
                        NormArg::Integral => Normalization::Integral,
                    };
                    construct_p(d, s, k, norm)?
                }
                Family::G => construct_g(d)?,
            };
            let body = match format {
                Format::Json => to_json(&vs),
                Format::Csv => vs.to_csv(),
            };
            output::emit(out.as_deref(), &body)?;
            status(&out, &format!("count={} affine_dim={}", vs.len(), vs.meta.affine_dim));
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify {
            family,
            d,
            s,
            k,
            oracle,
            node_budget,
            out,
        } => {
            let doc = certify::certify(&CertifyRequest {
                family,
                d,
                s,
                k,
                oracle,
                node_budget,
            })?;
            output::emit(out.as_deref(), &to_json(&doc))?;
            let mut line = format!(
                "status={} alpha={} beta={} nullity={}",
                if doc.is_certified() { "certified" } else { "failed" },
                doc.delaunay.alpha,
                doc.delaunay.beta,
                doc.perfection.nullity
            );
            if let Some(w) = &doc.delaunay.failure_witness {
                line.push_str(&format!(" witness={w}"));
            }
            if let Some(r) = &doc.delaunay.failure_reason {
                line.push_str(&format!(" reason={r:?}"));
            }
            if let Some(perfdel_core::BruteOutcome::Certified { boundary_points, .. }) = &doc.oracle {
                line.push_str(&format!(" boundary_points={boundary_points}"));
            }
            status(&out, &line);
            Ok(exit_for(doc.is_certified()))
        }
        Command::Diagram { d, k, s, out } => {
            let lat = ScaledLattice::for_family(d, k)?;
            let targets = match s {
                Some(s) => {
                    let t = target_reps(d, s, k)?;
                    let mut all = t.to_vec();
                    for rep in t {
                        all.push(canonical_rep(&-&lat.point_of(&rep), &lat)?);
                    }
                    all
                }
                None => Vec::new(),
            };
            let mut csv = String::from("l,a,phi1,phi2,on_line\n");
            for p in diagram(d, k)? {
                let on = targets.contains(&p.rep);
                csv.push_str(&format!("{},{},{},{},{}\n", p.rep.l, p.rep.a, p.phi1, p.phi2, on));
            }
            output::emit(out.as_deref(), &csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            d_max,
            s_max,
            k_max,
            jobs,
            oracle,
            node_budget,
            out,
        } => {
            if d_max < scan::D_MIN || s_max < scan::S_MIN || k_max < scan::K_MIN {
                return Err(Error::Usage(format!(
                    "bounds must be at least d-max {}, s-max {}, k-max {}",
                    scan::D_MIN,
                    scan::S_MIN,
                    scan::K_MIN
                ))
                .into());
            }
            if jobs == Some(0) {
                return Err(Error::Usage("--jobs must be positive".into()).into());
            }
            let grid = GridSpec {
                d_min: scan::D_MIN,
                d_max,
                s_min: scan::S_MIN,
                s_max,
                k_min: scan::K_MIN,
                k_max,
            };
            let report = scan::scan(&grid, oracle, node_budget, jobs)?;
            output::emit(out.as_deref(), &to_json(&report))?;
            let sm = &report.summary;
            status(
                &out,
                &format!(
                    "cells={} certified={} failed={} skipped={} errors={} in_regime={}/{}",
                    sm.cells, sm.certified, sm.failed, sm.skipped, sm.errors, sm.in_regime_certified, sm.in_regime
                ),
            );
            if sm.errors > 0 {
                return Ok(ExitCode::from(2));
            }
            Ok(exit_for(report.all_in_regime_certified()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
