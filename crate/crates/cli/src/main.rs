//! `dignet`: batch front end for t-value computations and the zero-t
//! characterization checks.
//!
//! Exit codes: 0 success or verified, 1 falsified (or a negative answer such
//! as "not decomposable"), 2 usage or parse error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dignet_core::characterization::{conjugacy_orbit, decompose_t0_triple, exhaustive_search_t0, pj_identities_check};
use dignet_core::cud::{overlapping_tuples, RecurrenceSpec};
use dignet_core::net::{generate_points, t_value_geometric, t_value_rank, write_csv, write_dyadic_text};
use dignet_core::{BitMatrix, BitVector, Error, NetSpec};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "dignet", version, about = "Digital nets over F2: t-values and the (I, B, B^2) characterization")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact t-value of the net generated by the given matrices.
    Tvalue {
        #[arg(short = 'm', value_parser = clap::value_parser!(u8).range(1..=64))]
        m: u8,
        /// Matrices: builtin products of I, J, P (e.g. `PJ`), a literal such as `11,10`, or a file.
        #[arg(required = true)]
        matrices: Vec<String>,
        /// Also compute the t-value by counting points in elementary intervals.
        #[arg(long)]
        geometric: bool,
    },
    /// Scan every m×m matrix for t(I, B, B²) = 0 and compare with the orbit of P·J.
    VerifyTheorem {
        #[arg(short = 'm', value_parser = clap::value_parser!(u8).range(1..=64))]
        m: u8,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// List the points of a digital net.
    Points {
        #[arg(short = 'm', value_parser = clap::value_parser!(u8).range(1..=64))]
        m: u8,
        #[arg(required = true)]
        matrices: Vec<String>,
    },
    /// All conjugates L·P·J·L⁻¹ over unit lower triangular L.
    Orbit {
        #[arg(short = 'm', value_parser = clap::value_parser!(u8).range(1..=64))]
        m: u8,
    },
    /// Find L with B = L·P·J·L⁻¹ for a matrix B with t(I, B, B²) = 0.
    Decompose {
        #[arg(short = 'm', value_parser = clap::value_parser!(u8).range(1..=64))]
        m: u8,
        matrix: String,
    },
    /// Overlapping s-tuples of the recurrence x_{i+1} = B·x_i.
    Sequence {
        #[arg(short = 'm', value_parser = clap::value_parser!(u8).range(1..=64))]
        m: u8,
        matrix: String,
        /// Nonzero seed as a bit string, first entry first.
        #[arg(long)]
        seed: String,
        /// Tuple width.
        #[arg(short = 's', long = "width", default_value_t = 1)]
        width: usize,
    },
    /// Check P² = J² = (P·J)³ = I.
    Identities {
        #[arg(short = 'm', value_parser = clap::value_parser!(u8).range(1..=64))]
        m: u8,
    },
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// A matrix argument: a word over {I, J, P} (their product), an inline
/// literal, or a path to a file with one row per line.
fn resolve_matrix(arg: &str, m: usize, position: usize) -> Result<BitMatrix, Failure> {
    let context = |e: Error| Failure::Usage(format!("matrix argument {position} ({arg:?}): {e}"));
    if !arg.is_empty() && arg.chars().all(|c| matches!(c, 'I' | 'J' | 'P')) {
        let mut acc = BitMatrix::identity(m).map_err(context)?;
        for c in arg.chars() {
            let f = match c {
                'I' => BitMatrix::identity(m),
                'J' => BitMatrix::antidiag_j(m),
                _ => BitMatrix::pascal_p(m),
            }
            .map_err(context)?;
            acc = &acc * &f;
        }
        return Ok(acc);
    }
    let looks_literal = arg.chars().all(|c| matches!(c, '0' | '1' | ',' | ' '));
    let text = if looks_literal || !Path::new(arg).is_file() {
        arg.to_owned()
    } else {
        fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))?
    };
    BitMatrix::parse_with_dim(&text, m).map_err(context)
}

fn resolve_all(args: &[String], m: usize) -> Result<Vec<BitMatrix>, Failure> {
    args.iter()
        .enumerate()
        .map(|(k, a)| resolve_matrix(a, m, k + 1))
        .collect()
}

fn json_line(value: &serde_json::Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

/// Run a subcommand, producing its output text and whether it verified.
fn run(cli: &Cli) -> Result<(Vec<u8>, bool), Failure> {
    let mut out = Vec::new();
    let ok = match &cli.command {
        Command::Tvalue { m, matrices, geometric } => {
            let spec = NetSpec::new(resolve_all(matrices, usize::from(*m))?).map_err(usage)?;
            let r = t_value_rank(&spec);
            let geo = if *geometric {
                let pts = generate_points(&spec).map_err(usage)?;
                Some(t_value_geometric(&pts).map_err(usage)?)
            } else {
                None
            };
            match cli.format.unwrap_or(Format::Json) {
                Format::Text => {
                    writeln!(out, "t = {}", r.t)?;
                    if let Some(w) = &r.witness {
                        writeln!(out, "dependent composition: {w:?}")?;
                    }
                    if let Some(g) = geo {
                        writeln!(out, "geometric t = {g}")?;
                    }
                }
                _ => {
                    let mut v = serde_json::to_value(&r).expect("serializable");
                    if let Some(g) = geo {
                        v["geometric_t"] = json!(g);
                    }
                    out.extend(json_line(&v).bytes());
                }
            }
            geo.is_none_or(|g| g == r.t)
        }
        Command::VerifyTheorem { m, workers } => {
            let report = exhaustive_search_t0(usize::from(*m), *workers).map_err(usage)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Text => {
                    writeln!(out, "m = {}", report.m)?;
                    writeln!(out, "candidates scanned: {}", report.candidates_scanned)?;
                    writeln!(out, "passed t(I,B) = 0 filter: {}", report.filter_pass)?;
                    writeln!(out, "found: {}", report.found.len())?;
                    writeln!(out, "orbit: {}", report.orbit.len())?;
                    writeln!(out, "found equals orbit: {}", report.equal_sets)?;
                    writeln!(out, "all cubes identity: {}", report.all_cubes_identity)?;
                    writeln!(out, "primitive members: {}", report.primitive_members.len())?;
                    for b in &report.primitive_members {
                        writeln!(out, "  {}", b.to_compact())?;
                    }
                }
                _ => writeln!(out, "{}", report.to_json())?,
            }
            report.verified()
        }
        Command::Points { m, matrices } => {
            let spec = NetSpec::new(resolve_all(matrices, usize::from(*m))?).map_err(usage)?;
            let pts = generate_points(&spec).map_err(usage)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => write_dyadic_text(&mut out, pts.m(), pts.points())?,
                Format::Csv => write_csv(&mut out, pts.m(), pts.s(), pts.points())?,
                Format::Json => {
                    let points: Vec<&[u64]> = pts.points().collect();
                    let v = json!({"m": pts.m(), "s": pts.s(), "scale": 1u64 << pts.m(), "points": points});
                    out.extend(json_line(&v).bytes());
                }
            }
            true
        }
        Command::Orbit { m } => {
            let orbit = conjugacy_orbit(usize::from(*m)).map_err(usage)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => out.extend(json_line(&json!(orbit)).bytes()),
                _ => {
                    for b in &orbit {
                        writeln!(out, "{}", b.to_compact())?;
                    }
                }
            }
            true
        }
        Command::Decompose { m, matrix } => {
            let b = resolve_matrix(matrix, usize::from(*m), 1)?;
            let json_out = cli.format.unwrap_or(Format::Text) == Format::Json;
            match decompose_t0_triple(&b) {
                Ok(w) => {
                    if json_out {
                        out.extend(json_line(&json!({"b": b, "l": w.l})).bytes());
                    } else {
                        writeln!(out, "L = {}", w.l.to_compact())?;
                    }
                    true
                }
                Err(Error::NotT0(r)) => {
                    if json_out {
                        out.extend(json_line(&json!({"b": b, "l": null, "tvalue": r})).bytes());
                    } else {
                        write!(out, "not decomposable: t(I,B,B^2) = {}", r.t)?;
                        match &r.witness {
                            Some(w) => writeln!(out, " (dependent composition {w:?})")?,
                            None => writeln!(out)?,
                        }
                    }
                    false
                }
                Err(e @ Error::TheoremViolation(_)) => {
                    eprintln!("{e}");
                    false
                }
                Err(e) => return Err(usage(e)),
            }
        }
        Command::Sequence { m, matrix, seed, width } => {
            let m = usize::from(*m);
            let b = resolve_matrix(matrix, m, 1)?;
            let seed: BitVector = seed.parse().map_err(|e| Failure::Usage(format!("seed: {e}")))?;
            let spec = RecurrenceSpec::new(b, seed, 0).map_err(usage)?;
            let tuples = overlapping_tuples(&spec, *width).map_err(usage)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => write_dyadic_text(&mut out, m, tuples.points())?,
                Format::Csv => write_csv(&mut out, m, *width, tuples.points())?,
                Format::Json => {
                    let points: Vec<&[u64]> = tuples.points().collect();
                    let v = json!({"m": m, "s": width, "period": tuples.len(), "scale": 1u128 << m, "points": points});
                    out.extend(json_line(&v).bytes());
                }
            }
            true
        }
        Command::Identities { m } => {
            let holds = pj_identities_check(usize::from(*m)).map_err(usage)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => out.extend(json_line(&json!({"m": m, "holds": holds})).bytes()),
                _ => writeln!(out, "{}", if holds { "pass" } else { "fail" })?,
            }
            holds
        }
    };
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((bytes, ok)) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &bytes),
                None => io::stdout().write_all(&bytes),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
