//! `c4flag`: command-line access to the counting, certificate and search
//! routines. Every command prints one JSON report (or an aligned table with
//! `--format table`).
//!
//! Exit status: 0 success, 1 other errors, 2 usage errors, 3 size caps,
//! 4 bound proof failed, 5 bound proved but the printed formulas differ
//! from the derived ones.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use c4flag::arith::{parse_rational, rational_to_string, BigRational};
use c4flag::certificate::{self, nonnegativity_margins};
use c4flag::extremal::{self, Pattern, SearchOptions};
use c4flag::flag::{catalog_labels, density_vector, enumerate_flags, TypeGraph};
use c4flag::graph::{
    catalog_name, count_induced, count_subgraphs, density, enumerate_graphs, induced_catalog_counts, parse_graph,
    to_graph6, SmallGraph,
};
use c4flag::multipartite::{
    c4_count, k4_count, shift_check, stability_expansion, turan_c4_asymptotic, turan_c4_count, turan_c4_density,
    PartProfile,
};
use c4flag::report::Report;
use c4flag::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const EXIT_ERROR: u8 = 1;
const EXIT_SIZE_CAP: u8 = 3;
const EXIT_BOUND_FAILED: u8 = 4;
const EXIT_PUBLISHED_MISMATCH: u8 = 5;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "c4flag", version, about = "Exact C4-density tools: counting, flag-algebra certificate, brute-force oracles")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Copies of a pattern in a host graph.
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: String,
        /// Count induced copies.
        #[arg(long)]
        induced: bool,
    },
    /// Densities of a pattern, or of all 4-vertex graphs, in a host.
    Density {
        #[arg(long)]
        host: String,
        #[arg(long)]
        pattern: Option<String>,
    },
    /// All graphs on k vertices up to isomorphism.
    EnumerateGraphs {
        #[arg(long)]
        k: usize,
    },
    /// C4 and K4 counts of a complete multipartite graph.
    MultipartiteCount {
        /// Part sizes, e.g. 3,2,2.
        #[arg(long)]
        parts: String,
    },
    /// C4 count and density of the Turan graph T_r(n).
    Turan {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
    },
    /// Moves one vertex from part i to part j and compares C4 counts.
    ShiftCheck {
        #[arg(long)]
        parts: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Expansion of the limit C4 density around the balanced partition.
    Stability {
        #[arg(long)]
        r: Option<String>,
    },
    /// Flags of a given order over a type.
    Flags {
        /// sigma1 (two nonadjacent labels), sigma2 (two adjacent labels), or a graph.
        #[arg(long = "type", default_value = "sigma2")]
        sigma: String,
        #[arg(long)]
        order: usize,
    },
    /// Derives and proves the certificate, and compares it with the printed one.
    VerifyCertificate {
        /// Also report exact slacks at this r (>= 3).
        #[arg(long)]
        r: Option<String>,
        /// Exit status reflects only the bound proof.
        #[arg(long)]
        derived_only: bool,
    },
    /// Certificate margins on a concrete graph.
    Margin {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "3")]
        r: String,
    },
    /// ex(n, target, forbid) by exhaustive enumeration.
    ExtremalSearch {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "C4")]
        target: String,
        #[arg(long, default_value = "K4")]
        forbid: String,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Permit n = 8 (2^28 graphs).
        #[arg(long)]
        allow_n8: bool,
    },
    /// Maximum K4 count over K_{r+1}-free graphs against T_r(n).
    K4Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long)]
        allow_n8: bool,
    },
    /// Near-extremal K_{r+1}-free graphs and their induced co-cherry counts.
    CocherryScan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        slack: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        allow_n8: bool,
    },
}

/// An exact count as a JSON number when it fits in 64 bits.
fn count_value(v: &c4flag::arith::BigUint) -> Value {
    match u64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn q(v: &BigRational) -> Value {
    json!(rational_to_string(v))
}

fn parse_type(s: &str) -> c4flag::Result<TypeGraph> {
    match s {
        "sigma1" => Ok(TypeGraph::sigma1()),
        "sigma2" => Ok(TypeGraph::sigma2()),
        "empty" => Ok(TypeGraph::new(SmallGraph::empty(0)?)),
        other => Ok(TypeGraph::new(parse_graph(other)?)),
    }
}

struct Outcome {
    inputs: Value,
    outputs: Value,
    exit: u8,
}

fn ok(inputs: Value, outputs: Value) -> c4flag::Result<Outcome> {
    Ok(Outcome { inputs, outputs, exit: 0 })
}

fn search_options(jobs: Option<usize>, resume: Option<PathBuf>, allow_n8: bool) -> SearchOptions {
    SearchOptions { jobs, resume, allow_n8 }
}

fn run(command: &Command) -> c4flag::Result<Outcome> {
    match command {
        Command::Count { pattern, host, induced } => {
            let (h, g) = (parse_graph(pattern)?, parse_graph(host)?);
            let count = if *induced { count_induced(&h, &g)? } else { count_subgraphs(&h, &g)? };
            ok(
                json!({"pattern": to_graph6(&h), "host": to_graph6(&g), "induced": induced}),
                json!({"count": count, "density": q(&density(&h, &g, *induced)?)}),
            )
        }
        Command::Density { host, pattern } => {
            let g = parse_graph(host)?;
            match pattern {
                Some(p) => {
                    let h = parse_graph(p)?;
                    ok(
                        json!({"host": to_graph6(&g), "pattern": to_graph6(&h)}),
                        json!({
                            "density": q(&density(&h, &g, false)?),
                            "induced_density": q(&density(&h, &g, true)?),
                        }),
                    )
                }
                None => {
                    let counts = induced_catalog_counts(&g);
                    let dens = density_vector(&g)?;
                    let rows: Vec<Value> = catalog_labels()
                        .iter()
                        .zip(counts.iter().zip(&dens))
                        .map(|(label, (c, d))| json!({"graph": label, "induced_count": c, "density": q(d)}))
                        .collect();
                    let c4 = &dens[8] + &dens[9] + &dens[10] * BigRational::from_integer(3.into());
                    ok(json!({"host": to_graph6(&g)}), json!({"catalog": rows, "c4_density": q(&c4)}))
                }
            }
        }
        Command::EnumerateGraphs { k } => {
            let graphs = enumerate_graphs(*k)?;
            let names: Vec<Value> = graphs
                .iter()
                .map(|g| match c4flag::graph::catalog_index(g).and_then(catalog_name) {
                    Some(name) if *k == 4 => json!({"graph6": to_graph6(g), "name": name}),
                    _ => json!({"graph6": to_graph6(g)}),
                })
                .collect();
            ok(json!({"k": k}), json!({"count": graphs.len(), "graphs": names}))
        }
        Command::MultipartiteCount { parts } => {
            let p: PartProfile = parts.parse()?;
            ok(
                json!({"parts": p.parts()}),
                json!({"order": p.order(), "c4_count": count_value(&c4_count(&p)), "k4_count": count_value(&k4_count(&p))}),
            )
        }
        Command::Turan { r, n } => ok(
            json!({"r": r, "n": n}),
            json!({
                "profile": PartProfile::balanced(*r, *n)?.parts(),
                "exact": count_value(&turan_c4_count(*r, *n)?),
                "density": q(&turan_c4_density(*r, *n)?),
                "asymptotic_density": q(&turan_c4_asymptotic(*r)?),
            }),
        ),
        Command::ShiftCheck { parts, i, j } => {
            let p: PartProfile = parts.parse()?;
            let (before, after) = shift_check(&p, *i, *j)?;
            ok(
                json!({"parts": p.parts(), "i": i, "j": j}),
                json!({
                    "before": count_value(&before),
                    "after": count_value(&after),
                    "strictly_increases": after > before,
                }),
            )
        }
        Command::Stability { r } => {
            let s = stability_expansion();
            let mut outputs = json!({
                "identity_holds": s.agree(),
                "g": s.g.to_string(),
                "coefficients_in_eta": s.recomputed.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            if let Some(r) = r {
                let r = parse_rational(r)?;
                let at = s.at(&r)?;
                outputs["r"] = q(&r);
                outputs["g_at_r"] = q(&s.g.eval(&r)?);
                outputs["coefficients_in_eta_at_r"] = json!(at.coeffs().iter().map(q).collect::<Vec<_>>());
            }
            let exit = if s.agree() { 0 } else { EXIT_BOUND_FAILED };
            Ok(Outcome { inputs: json!({"r": r}), outputs, exit })
        }
        Command::Flags { sigma, order } => {
            let t = parse_type(sigma)?;
            let flags = enumerate_flags(&t, *order)?;
            ok(
                json!({"type": sigma, "order": order}),
                json!({"count": flags.len(), "flags": flags.iter().map(|f| f.to_text()).collect::<Vec<_>>()}),
            )
        }
        Command::VerifyCertificate { r, derived_only } => {
            let report = certificate::verify_bound()?;
            let mut outputs = serde_json::to_value(&report)?;
            if let Some(r) = r {
                let r = parse_rational(r)?;
                let slacks = certificate::evaluate_at(&r)?;
                outputs["slacks_at_r"] = json!({"r": q(&r), "slacks": slacks.iter().map(q).collect::<Vec<_>>()});
            }
            let published_ok = report.forms_match_published
                && report.coefficients_match_published
                && report.multipliers_match_published;
            let exit = if !report.bound_holds || !report.recheck() {
                EXIT_BOUND_FAILED
            } else if !published_ok && !derived_only {
                EXIT_PUBLISHED_MISMATCH
            } else {
                0
            };
            Ok(Outcome { inputs: json!({"r": r, "derived_only": derived_only}), outputs, exit })
        }
        Command::Margin { graph, r } => {
            let g = parse_graph(graph)?;
            let r = parse_rational(r)?;
            let m = nonnegativity_margins(&g, &r)?;
            ok(json!({"graph": to_graph6(&g), "r": q(&r)}), serde_json::to_value(&m)?)
        }
        Command::ExtremalSearch { n, target, forbid, jobs, resume, allow_n8 } => {
            let (h, f) = (parse_graph(target)?, parse_graph(forbid)?);
            let res = extremal::search(
                *n,
                &Pattern::from_graph(&h),
                &Pattern::from_graph(&f),
                &search_options(*jobs, resume.clone(), *allow_n8),
            )?;
            ok(
                json!({"n": n, "target": to_graph6(&h), "forbid": to_graph6(&f), "jobs": jobs}),
                serde_json::to_value(&res)?,
            )
        }
        Command::K4Bound { n, r, jobs, resume, allow_n8 } => {
            let res = extremal::k4_bound_check(*n, *r, &search_options(*jobs, resume.clone(), *allow_n8))?;
            let exit = if res.matches { 0 } else { EXIT_BOUND_FAILED };
            Ok(Outcome { inputs: json!({"n": n, "r": r, "jobs": jobs}), outputs: serde_json::to_value(&res)?, exit })
        }
        Command::CocherryScan { n, r, slack, jobs, allow_n8 } => {
            let res = extremal::near_extremal_cocherry_scan(*n, *r, *slack, &search_options(*jobs, None, *allow_n8))?;
            ok(json!({"n": n, "r": r, "slack": slack}), serde_json::to_value(&res)?)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Count { .. } => "count",
        Command::Density { .. } => "density",
        Command::EnumerateGraphs { .. } => "enumerate-graphs",
        Command::MultipartiteCount { .. } => "multipartite-count",
        Command::Turan { .. } => "turan",
        Command::ShiftCheck { .. } => "shift-check",
        Command::Stability { .. } => "stability",
        Command::Flags { .. } => "flags",
        Command::VerifyCertificate { .. } => "verify-certificate",
        Command::Margin { .. } => "margin",
        Command::ExtremalSearch { .. } => "extremal-search",
        Command::K4Bound { .. } => "k4-bound",
        Command::CocherryScan { .. } => "cocherry-scan",
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_size_cap() {
        EXIT_SIZE_CAP
    } else if matches!(e, Error::Verification(_)) {
        EXIT_BOUND_FAILED
    } else {
        EXIT_ERROR
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(outcome) => {
            let report = Report::new(command_name(&cli.command), outcome.inputs, outcome.outputs, start.elapsed());
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Table => Ok(report.to_table()),
            };
            match text {
                Ok(t) => {
                    // a closed pipe (e.g. `| head`) is not an error
                    let _ = writeln!(std::io::stdout(), "{}", t.trim_end());
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_ERROR);
                }
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
