use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use nodal_hilb::closed_forms::cf_curve;
use nodal_hilb::partitions::{diagonal, vertical};
use nodal_hilb::series::{json::series_to_json, QSeries};
use nodal_hilb::verify::{self, SuiteParams};

#[derive(Parser)]
#[command(name = "nodal-hilb", version, about = "Hilbert zeta functions of x^u y^v = 0")]
struct Cli {
    /// Print per-phase timings to standard error.
    #[arg(long, global = true)]
    profile: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generating series of a curve as JSON.
    Series {
        #[arg(long)]
        u: i64,
        #[arg(long)]
        v: i64,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Truncation::QDegree)]
        truncation: Truncation,
    },
    /// List the strata of the punctual Hilbert scheme, one per line.
    Enumerate {
        /// Omit both `--u` and `--v` for the plane.
        #[arg(long, requires = "v")]
        u: Option<u32>,
        #[arg(long, requires = "u")]
        v: Option<u32>,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run verification suites and print their reports as a JSON array.
    Verify {
        /// Comma-separated suite names, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        u: Option<u32>,
        #[arg(long)]
        v: Option<u32>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Truncation {
    #[value(name = "q_degree")]
    QDegree,
    #[value(name = "total_degree")]
    TotalDegree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

struct Profile {
    on: bool,
    start: Instant,
}

impl Profile {
    fn phase(&mut self, name: &str) {
        if self.on {
            eprintln!("{name}: {} ms", self.start.elapsed().as_millis());
        }
        self.start = Instant::now();
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut profile = Profile { on: cli.profile, start: Instant::now() };
    match cli.command {
        Command::Series { u, v, nmax, truncation } => {
            let form = match cf_curve(u, v) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let mut series = form.to_series(nmax);
            if let Truncation::TotalDegree = truncation {
                series = QSeries::from_poly(&series.truncate_total_degree(nmax as i64), nmax);
            }
            profile.phase("series arithmetic");
            println!("{}", series_to_json(&series));
            ExitCode::SUCCESS
        }
        Command::Enumerate { u, v, n, format } => {
            let lines = match (u, v) {
                (None, None) => diagonal_lines(n, n as usize, format),
                (Some(u), Some(v)) if u <= 2 && u <= v => match vertical::enumerate(n, u, v) {
                    Ok(strata) => strata.iter().map(|(s, d)| vertical_line(s, *d, format)).collect(),
                    Err(e) => return usage(e),
                },
                (Some(u), Some(v)) if u == v => diagonal_lines(n, v as usize, format),
                (Some(u), Some(v)) => {
                    return usage(format!(
                        "no enumeration for x^{u} y^{v}: strata are listed for u in {{1, 2}}, for u = v, or for the plane"
                    ))
                }
                _ => return usage("--u and --v go together"),
            };
            profile.phase("enumeration");
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Command::Verify { suite, u, v, nmax, kmax, budget_ms } => {
            let params = SuiteParams { u, v, nmax, kmax, budget_ms };
            let names: Vec<&str> = suite.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            if let Some(bad) = names.iter().find(|s| **s != "all" && !verify::SUITES.contains(s)) {
                return usage(format!("unknown suite {bad:?}; known: all, {}", verify::SUITES.join(", ")));
            }
            let mut reports = Vec::new();
            for name in &names {
                reports.extend(verify::run_suite(name, &params).expect("suite names were checked"));
            }
            profile.phase("checks");
            println!("{}", serde_json::to_string(&reports).expect("reports serialize"));
            if reports.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn diagonal_lines(n: u32, rows: usize, format: Format) -> Vec<String> {
    diagonal::enumerate(n, rows)
        .iter()
        .map(|p| {
            let s = p.stats().expect("enumerated partitions are valid");
            let contribution = s.contribution().to_string();
            match format {
                Format::Ascii => format!("{p}  m1={} m2={}  {contribution}", s.m1, s.m2),
                Format::Json => {
                    let layers: Vec<_> = p
                        .layers()
                        .iter()
                        .map(|l| {
                            let kind = match l.kind {
                                diagonal::Kind::One => 1,
                                diagonal::Kind::Two => 2,
                            };
                            json!({"kind": kind, "i": l.i, "j": l.j})
                        })
                        .collect();
                    json!({"n": s.n, "layers": layers, "m1": s.m1, "m2": s.m2, "contribution": contribution})
                        .to_string()
                }
            }
        })
        .collect()
}

fn vertical_line(s: &vertical::VerticalStratum, dim: u32, format: Format) -> String {
    let contribution = s.contribution().to_string();
    match format {
        Format::Ascii => format!("{s}  dim={dim}  {contribution}"),
        Format::Json => {
            json!({"n": s.size(), "parts": s.parts, "dim": dim, "contribution": contribution}).to_string()
        }
    }
}
