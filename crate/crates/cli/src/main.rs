mod plot;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use rank2_roots::verify::{self, Suite, SuiteReport, VerifyConfig};
use rank2_roots::{Error, RealRoot, RootLiteral, RootSystem, SystemParams};

/// Exact real-root combinatorics of the rank 2 Kac–Moody systems H(a,b).
#[derive(Parser)]
#[command(name = "rank2-roots", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct Sys {
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    #[arg(long, allow_negative_numbers = true)]
    b: i64,
}

#[derive(Subcommand)]
enum Command {
    /// List positive real roots, and optionally imaginary roots.
    Roots {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, default_value_t = 3)]
        max_index: u64,
        /// Also list imaginary roots up to --height.
        #[arg(long)]
        imaginary: bool,
        #[arg(long, default_value_t = 10)]
        height: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print γ/η or δ/ε values as CSV.
    Tables {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, allow_negative_numbers = true)]
        rows: i64,
        #[arg(long, value_enum, default_value_t = Which::EtaGamma)]
        which: Which,
    },
    /// Classify the sum of two real roots.
    Sum {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Φ- or Δ-subsystem generated by real roots.
    Subsystem {
        #[command(flatten)]
        sys: Sys,
        /// Root literals separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
        #[arg(long, value_enum, default_value_t = Mode::Phi)]
        mode: Mode,
    },
    /// Real roots of the form mα + nβ with 1 ≤ m, n ≤ bound.
    Combos {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_negative_numbers = true)]
        bound: i64,
    },
    /// Pairs of real roots with a real sum.
    SumPairs {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, default_value_t = 3)]
        max_index: u64,
    },
    /// Write plot points and norm curves as CSV.
    PlotData {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, default_value_t = 3)]
        max_index: u64,
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Cross-check the closed forms against brute-force oracles.
    Verify {
        #[arg(long, allow_negative_numbers = true, requires = "b", conflicts_with = "grid")]
        a: Option<i64>,
        #[arg(long, allow_negative_numbers = true, requires = "a")]
        b: Option<i64>,
        /// Every system with 4 ≤ ab ≤ GRID.
        #[arg(long)]
        grid: Option<u64>,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 40)]
        bound: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random generator sets per system for the subsystem suite.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy)]
enum Which {
    EtaGamma,
    DeltaEpsilon,
}

#[derive(ValueEnum, Clone, Copy)]
enum Mode {
    Phi,
    Delta,
}

#[derive(ValueEnum, Clone, Copy)]
enum SuiteArg {
    Staircase,
    Sums,
    Subsystems,
    Divisibility,
    All,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn params(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        Self { code: 4, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotReal(_) | Error::NotRealMirror(_) | Error::DegenerateSum | Error::PreconditionFailed(_) => 3,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

/// Successful output, or exit code 1 with output for a failed verification.
enum Outcome {
    Ok(String),
    VerifyFailed(String),
}

fn system(s: Sys) -> Result<RootSystem, Failure> {
    Ok(RootSystem::new(s.a, s.b)?)
}

fn real(sys: &RootSystem, literal: &str) -> Result<RealRoot, Failure> {
    let lit: RootLiteral = literal.trim().parse()?;
    Ok(sys.resolve(&lit)?)
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn run(cmd: Command) -> Result<Outcome, Failure> {
    let out = match cmd {
        Command::Roots { sys, max_index, imaginary, height, format } => {
            let sys = system(sys)?;
            let real_roots = sys.enumerate_real(max_index);
            let imag = if imaginary { sys.enumerate_imaginary(height, false) } else { vec![] };
            match format {
                Format::Json => {
                    let mut doc = json!({
                        "system": render::system(sys.params()),
                        "max_index": max_index,
                        "real": real_roots.iter().map(|r| render::real_root(&sys, r)).collect::<Vec<_>>(),
                    });
                    if imaginary {
                        doc["height"] = json!(height);
                        doc["imaginary"] = imag.iter().map(render::imaginary_root).collect();
                    }
                    json_line(&doc)
                }
                Format::Csv => {
                    let mut s = String::from("kind,label,family,index,x,y,length,positive\n");
                    for r in &real_roots {
                        let v = sys.coords(r);
                        s += &render::csv_row(&[
                            "real".into(),
                            r.to_string(),
                            r.family.to_string(),
                            r.index.to_string(),
                            v.x.to_string(),
                            v.y.to_string(),
                            sys.length_class(r).as_str().into(),
                            r.is_positive().to_string(),
                        ]);
                        s.push('\n');
                    }
                    for v in &imag {
                        s += &format!("imaginary,,,,{},{},,{}\n", v.x, v.y, v.is_positive());
                    }
                    s
                }
            }
        }
        Command::Tables { sys, rows, which } => {
            let sys = system(sys)?;
            if rows < 1 {
                return Err(Failure::params(format!("--rows must be at least 1, got {rows}")));
            }
            let seq = sys.seq();
            let mut s = String::new();
            match which {
                Which::EtaGamma => {
                    s.push_str("j,gamma,eta\n");
                    for j in 0..rows {
                        s += &format!("{j},{},{}\n", seq.gamma(j), seq.eta(j));
                    }
                }
                Which::DeltaEpsilon => {
                    s.push_str("d,delta,epsilon\n");
                    for d in 0..rows {
                        let delta = if d == 0 { String::new() } else { seq.delta(d)?.to_string() };
                        s += &format!("{d},{delta},{}\n", seq.epsilon(d)?);
                    }
                }
            }
            s
        }
        Command::Sum { sys, alpha, beta } => {
            let sys = system(sys)?;
            let (x, y) = (real(&sys, &alpha)?, real(&sys, &beta)?);
            let v = sys.sum_classify(&x, &y);
            let mut doc = render::verdict(&sys, &v, &sys.sum_coords(&x, &y));
            doc["system"] = render::system(sys.params());
            doc["alpha"] = render::real_root(&sys, &x);
            doc["beta"] = render::real_root(&sys, &y);
            json_line(&doc)
        }
        Command::Subsystem { sys, gens, mode } => {
            let sys = system(sys)?;
            let literals: Vec<&str> = gens.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
            if literals.is_empty() {
                return Err(Failure::params("--gens needs at least one root"));
            }
            let roots = literals.iter().map(|l| real(&sys, l)).collect::<Result<Vec<_>, _>>()?;
            let (ix, same) = match mode {
                Mode::Phi => (sys.phi_closure(&roots)?, None),
                Mode::Delta => {
                    let (ix, same) = sys.delta_re_subsystem(&roots)?;
                    (ix, Some(same))
                }
            };
            let sub = sys.phi_classify(&ix)?;
            let mut doc = render::subsystem(&sys, &sub);
            doc["system"] = render::system(sys.params());
            doc["mode"] = json!(if same.is_some() { "delta" } else { "phi" });
            doc["generators"] = roots.iter().map(|r| render::real_root(&sys, r)).collect();
            doc["index_sets"] = render::index_sets(&ix);
            if let Some(same) = same {
                doc["same_as_phi"] = json!(same);
            }
            json_line(&doc)
        }
        Command::Combos { sys, alpha, beta, bound } => {
            let sys = system(sys)?;
            if bound < 1 {
                return Err(Failure::params(format!("--bound must be at least 1, got {bound}")));
            }
            let (x, y) = (real(&sys, &alpha)?, real(&sys, &beta)?);
            let rows: Value = sys
                .positive_combinations(&x, &y, bound as u64)
                .into_iter()
                .map(|(m, n, r)| json!([m, n, r.to_string()]))
                .collect();
            json_line(&rows)
        }
        Command::SumPairs { sys, max_index } => {
            let sys = system(sys)?;
            let rows: Value = sys
                .real_sum_pairs(max_index)
                .into_iter()
                .map(|(x, y, s)| json!([x.to_string(), y.to_string(), s.to_string()]))
                .collect();
            json_line(&rows)
        }
        Command::PlotData { sys, max_index, out } => {
            let sys = system(sys)?;
            let data = plot::csv(&sys, max_index);
            std::fs::write(&out, data).map_err(|e| Failure::io(format!("cannot write {}: {e}", out.display())))?;
            String::new()
        }
        Command::Verify { a, b, grid, suite, bound, seed, samples } => {
            let systems = match (a, b, grid) {
                (Some(a), Some(b), None) => vec![SystemParams::new(a, b)?],
                (None, None, Some(g)) => verify::grid(g),
                _ => return Err(Failure::params("verify needs either --a and --b, or --grid")),
            };
            if systems.is_empty() {
                return Err(Failure::params("the grid contains no systems"));
            }
            let suites: Vec<Suite> = match suite {
                SuiteArg::Staircase => vec![Suite::Staircase],
                SuiteArg::Sums => vec![Suite::Sums],
                SuiteArg::Subsystems => vec![Suite::Subsystems],
                SuiteArg::Divisibility => vec![Suite::Divisibility],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let cfg = VerifyConfig { bound, seed, samples, ..VerifyConfig::default() };
            let jobs: Vec<(SystemParams, Suite)> =
                systems.iter().flat_map(|p| suites.iter().map(move |s| (*p, *s))).collect();
            let reports: Vec<SuiteReport> = pool()?.install(|| {
                jobs.par_iter()
                    .map(|(p, s)| verify::run_suite(&RootSystem::from_params(*p), *s, &cfg))
                    .collect()
            });
            let passed = reports.iter().all(SuiteReport::passed);
            let doc = json!({
                "passed": passed,
                "seed": seed,
                "bound": bound,
                "checks": reports.iter().map(|r| r.checks).sum::<u64>(),
                "reports": reports.iter().map(render::report).collect::<Vec<_>>(),
            });
            let text = json_line(&doc);
            if !passed {
                return Ok(Outcome::VerifyFailed(text));
            }
            text
        }
    };
    Ok(Outcome::Ok(out))
}

/// Thread pool sized by `RANK2_ROOTS_THREADS` when set.
fn pool() -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("RANK2_ROOTS_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Failure::params(format!("RANK2_ROOTS_THREADS must be a positive integer, got {v:?}")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| Failure::io(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::VerifyFailed(s)) => {
            print!("{s}");
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
