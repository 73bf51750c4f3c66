//! `indicial` — exact thresholds, root counts and deficiency indices for
//! the half-line operator family `(-1)^n d^{2n}/dx^{2n} + c x^{-2n}`.
//!
//! Every subcommand writes deterministic, machine-readable output (JSON or
//! CSV) to stdout or `--output`. `--c` accepts exact rational literals
//! (`-105/16`), integers, and decimal literals, which are converted to the
//! exact rational they denote (`0.74` is `37/50`); boundary behavior at
//! the thresholds is therefore exact, never a float comparison.
//!
//! Exit codes: 0 success, 2 usage error, 3 computation error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use indicial::figure::GridSpec;
use indicial::mp::{self, Cx};
use indicial::rational::{format_rat, parse_rat};
use indicial::thresholds::ThresholdValue;
use indicial::{Rat, Result};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "indicial", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OrderArg {
    /// Order parameter n (the operator has order 2n).
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct CouplingArg {
    /// Coupling constant: rational "p/q", integer, or exact decimal literal.
    #[arg(long, allow_hyphen_values = true)]
    c: String,
}

#[derive(Subcommand)]
enum Command {
    /// The n certified threshold constants, ascending.
    Thresholds {
        #[command(flatten)]
        order: OrderArg,
        /// Significant digits for decimal renderings of interval entries.
        #[arg(long, default_value_t = 20)]
        digits: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Number of solutions square-integrable near the origin.
    Classify {
        #[command(flatten)]
        order: OrderArg,
        #[command(flatten)]
        coupling: CouplingArg,
    },
    /// Deficiency indices of the minimal operator.
    Deficiency {
        #[command(flatten)]
        order: OrderArg,
        #[command(flatten)]
        coupling: CouplingArg,
    },
    /// Essential self-adjointness test (c >= c_n).
    Selfadjoint {
        #[command(flatten)]
        order: OrderArg,
        #[command(flatten)]
        coupling: CouplingArg,
    },
    /// The full classification-band partition of the real line.
    Bands {
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, default_value_t = 20)]
        digits: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Certified roots of the indicial polynomial with multiplicities.
    Roots {
        #[command(flatten)]
        order: OrderArg,
        #[command(flatten)]
        coupling: CouplingArg,
        /// Working precision in bits.
        #[arg(long, default_value_t = 256)]
        precision: usize,
        #[arg(long, default_value_t = 30)]
        digits: usize,
    },
    /// Exact coefficients of h_{n-1} (ascending, rational strings).
    Hpoly {
        #[command(flatten)]
        order: OrderArg,
    },
    /// Orlando product cross-check of h_{n-1} at a point.
    Orlando {
        #[command(flatten)]
        order: OrderArg,
        #[command(flatten)]
        coupling: CouplingArg,
        #[arg(long, default_value_t = 256)]
        precision: usize,
    },
    /// Mod-p cycle-type evidence for the normalized threshold polynomial.
    Galois {
        #[command(flatten)]
        order: OrderArg,
        /// Prime search bound.
        #[arg(long, default_value_t = 100_000_000)]
        pmax: u64,
    },
    /// Smallest-prime cycle-type table for n = 2..nmax.
    TableA1 {
        #[arg(long)]
        nmax: u32,
        #[arg(long, default_value_t = 100_000_000)]
        pmax: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Growth of c_n against (2n^2/pi)^{2n} for n = 1..nmax.
    TableA2 {
        #[arg(long)]
        nmax: u32,
        #[arg(long, default_value_t = 6)]
        digits: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Sandwich 2n^2/pi < c_n^(1/2n) < n/sin(pi/(2n)) for n = 1..nmax.
    TableA3 {
        #[arg(long)]
        nmax: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Real parts of the roots over a grid in x = sgn(c)|c|^(1/2n).
    Figure1 {
        #[command(flatten)]
        order: OrderArg,
        /// Grid lo:hi:count in the rescaled coordinate.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 128)]
        precision: usize,
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Evaluate a truncated power-series solution over a grid.
    Frobenius {
        #[command(flatten)]
        order: OrderArg,
        #[command(flatten)]
        coupling: CouplingArg,
        /// Spectral parameter (exact rational or decimal literal).
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// 1-based index into the (re, im)-sorted indicial roots.
        #[arg(long, default_value_t = 1)]
        alpha_index: usize,
        /// Truncation order K.
        #[arg(long = "K", alias = "k", default_value_t = 32)]
        k: usize,
        /// Evaluation grid lo:hi:count, lo > 0.
        #[arg(long)]
        grid: String,
        #[arg(long, default_value_t = 256)]
        precision: usize,
        #[arg(long, default_value_t = 30)]
        digits: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            let res = match &cli.output {
                Some(path) => std::fs::write(path, out).map_err(|e| e.to_string()),
                None => std::io::stdout()
                    .write_all(out.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            match res {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(3)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn coupling(c: &str) -> Result<Rat> {
    parse_rat(c)
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn run(cmd: &Command) -> Result<String> {
    match cmd {
        Command::Thresholds {
            order,
            digits,
            format,
        } => {
            let set = indicial::thresholds::threshold_set(order.n)?;
            match format {
                Format::Json => {
                    let items: Vec<serde_json::Value> =
                        set.entries().iter().map(|e| e.to_json(*digits)).collect();
                    Ok(json_line(serde_json::Value::Array(items)))
                }
                Format::Csv => {
                    let mut out = String::from("index,kind,value,decimal\n");
                    for (i, e) in set.entries().iter().enumerate() {
                        match e {
                            ThresholdValue::Exact(r) => out.push_str(&format!(
                                "{},exact,{},{}\n",
                                i + 1,
                                format_rat(r),
                                e.decimal(*digits)
                            )),
                            ThresholdValue::Algebraic(iv) => out.push_str(&format!(
                                "{},interval,{}..{},{}\n",
                                i + 1,
                                format_rat(iv.lo()),
                                format_rat(iv.hi()),
                                e.decimal(*digits)
                            )),
                        }
                    }
                    Ok(out)
                }
            }
        }
        Command::Classify { order, coupling: c } => {
            let count = indicial::thresholds::classify(order.n, &coupling(&c.c)?)?;
            Ok(json_line(serde_json::json!({ "count": count })))
        }
        Command::Deficiency { order, coupling: c } => {
            let d = indicial::thresholds::deficiency_indices(order.n, &coupling(&c.c)?)?;
            Ok(json_line(serde_json::json!({ "deficiency_indices": d })))
        }
        Command::Selfadjoint { order, coupling: c } => {
            let sa =
                indicial::thresholds::is_essentially_selfadjoint(order.n, &coupling(&c.c)?)?;
            Ok(json_line(
                serde_json::json!({ "essentially_selfadjoint": sa }),
            ))
        }
        Command::Bands {
            order,
            digits,
            format,
        } => {
            let bands = indicial::thresholds::band_table(order.n)?;
            let endpoint = |v: &Option<ThresholdValue>| -> serde_json::Value {
                match v {
                    None => serde_json::Value::Null,
                    Some(t) => t.to_json(*digits),
                }
            };
            match format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = bands
                        .iter()
                        .map(|b| {
                            serde_json::json!({
                                "lo": endpoint(&b.lo),
                                "hi": endpoint(&b.hi),
                                "lo_closed": b.lo_closed,
                                "hi_closed": b.hi_closed,
                                "count": b.count,
                            })
                        })
                        .collect();
                    Ok(json_line(serde_json::Value::Array(items)))
                }
                Format::Csv => {
                    let render = |v: &Option<ThresholdValue>| match v {
                        None => String::from("inf"),
                        Some(t) => t.decimal(*digits),
                    };
                    let mut out = String::from("lo,hi,lo_closed,hi_closed,count\n");
                    for b in &bands {
                        out.push_str(&format!(
                            "{},{},{},{},{}\n",
                            render(&b.lo),
                            render(&b.hi),
                            b.lo_closed,
                            b.hi_closed,
                            b.count
                        ));
                    }
                    Ok(out)
                }
            }
        }
        Command::Roots {
            order,
            coupling: c,
            precision,
            digits,
        } => {
            let inv = indicial::rootcount::numeric_roots(order.n, &coupling(&c.c)?, *precision)?;
            Ok(json_line(inv.to_json(*digits)))
        }
        Command::Hpoly { order } => {
            let fam = indicial::hurwitz::build_hurwitz(order.n)?;
            let coeffs: Vec<String> = fam.h_poly().coeffs().iter().map(format_rat).collect();
            Ok(json_line(
                serde_json::json!({ "n": order.n, "coefficients": coeffs }),
            ))
        }
        Command::Orlando {
            order,
            coupling: c,
            precision,
        } => {
            let cr = coupling(&c.c)?;
            let fam = indicial::hurwitz::build_hurwitz(order.n)?;
            let prod = indicial::hurwitz::orlando_product(order.n, &cr, *precision)?;
            let rel = indicial::hurwitz::orlando_check(order.n, &cr, *precision)?;
            Ok(json_line(serde_json::json!({
                "n": order.n,
                "c": format_rat(&cr),
                "h_at_c": format_rat(&fam.h_at(&cr)),
                "product_re": mp::render(&prod.re, 30).sci(),
                "product_im": mp::render(&prod.im, 30).sci(),
                "relative_error": format!("{rel:e}"),
            })))
        }
        Command::Galois { order, pmax } => {
            Ok(json_line(indicial::galois::evidence_json(order.n, *pmax)?))
        }
        Command::TableA1 { nmax, pmax, format } => {
            let rows = indicial::galois::cycle_table(2, *nmax, *pmax)?;
            match format {
                Format::Json => Ok(json_line(serde_json::json!(rows
                    .iter()
                    .map(|r| serde_json::json!({
                        "n": r.n,
                        "full_cycle": r.full_cycle,
                        "n_minus_2_cycle": r.n_minus_2_cycle,
                        "transposition": r.transposition,
                    }))
                    .collect::<Vec<_>>()))),
                Format::Csv => {
                    let cell = |v: Option<u64>| {
                        v.map(|p| p.to_string()).unwrap_or_else(|| "none".into())
                    };
                    let mut out =
                        String::from("n,full_cycle_prime,n_minus_2_cycle_prime,transposition_prime\n");
                    for r in rows {
                        out.push_str(&format!(
                            "{},{},{},{}\n",
                            r.n,
                            cell(r.full_cycle),
                            cell(r.n_minus_2_cycle),
                            cell(r.transposition)
                        ));
                    }
                    Ok(out)
                }
            }
        }
        Command::TableA2 {
            nmax,
            digits,
            format,
        } => {
            let rows = indicial::asymptotics::table_a2(*nmax, *digits)?;
            match format {
                Format::Json => Ok(json_line(serde_json::to_value(&rows).expect("rows"))),
                Format::Csv => Ok(indicial::asymptotics::table_a2_csv(&rows)),
            }
        }
        Command::TableA3 { nmax, format } => {
            let rows = indicial::asymptotics::table_a3(*nmax)?;
            match format {
                Format::Json => Ok(json_line(serde_json::to_value(&rows).expect("rows"))),
                Format::Csv => Ok(indicial::asymptotics::table_a3_csv(&rows)),
            }
        }
        Command::Figure1 {
            order,
            grid,
            precision,
            digits,
        } => {
            let g = GridSpec::parse(grid)?;
            indicial::figure::figure_csv(order.n, &g, *precision, *digits)
        }
        Command::Frobenius {
            order,
            coupling: c,
            mu,
            alpha_index,
            k,
            grid,
            precision,
            digits,
        } => {
            let cr = coupling(&c.c)?;
            let mur = parse_rat(mu)?;
            let inv = indicial::rootcount::numeric_roots(order.n, &cr, *precision)?;
            let flat: Vec<Cx> = inv
                .roots()
                .iter()
                .flat_map(|(z, m)| std::iter::repeat_n(z.clone(), *m))
                .collect();
            if *alpha_index == 0 || *alpha_index > flat.len() {
                return Err(indicial::Error::Input(format!(
                    "alpha index must be in 1..={}",
                    flat.len()
                )));
            }
            let alpha = &flat[*alpha_index - 1];
            let s = indicial::frobenius::series_solution(
                order.n, &cr, &mur, alpha, *k, *precision,
            )?;
            let g = GridSpec::parse(grid)?;
            indicial::frobenius::solution_csv(&s, &g.points(), *digits)
        }
    }
}
