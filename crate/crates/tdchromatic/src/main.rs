//! Command-line front end: solving, certificate checking, exhaustive
//! theorem verification, closed-form tables, sharpness search, and gap
//! tables.
//!
//! Exit codes: 0 success, 1 theorem violation / rejected certificate /
//! witness not found, 2 usage or parse error, 3 resource guard.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tdchromatic::error::Error;
use tdchromatic::family::FamilySpec;
use tdchromatic::harness::{
    self, CheckOutcome, GapKind, Operand, TheoremId, VerifyOptions, ALL_THEOREMS,
};
use tdchromatic::solver::{self, Witness};
use tdchromatic::{build_family, enumerate, formulas, io as gio, Graph};

#[derive(Parser)]
#[command(name = "tdchromatic", version, about = "Exact total dominator chromatic numbers and bound verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    #[value(name = "chi-dt")]
    ChiDt,
    Chi,
    #[value(name = "gamma-t")]
    GammaT,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Graph family spec, e.g. path:9, cycle:10, cbip:2,4, gadget:5
    #[arg(long, conflicts_with = "file")]
    family: Option<String>,

    /// Graph file (edge list, or DIMACS .col detected by its problem line)
    #[arg(long, required_unless_present = "family")]
    file: Option<PathBuf>,
}

impl InputArgs {
    fn load(&self) -> Result<Graph, Error> {
        if let Some(spec) = &self.family {
            build_family(FamilySpec::parse(spec)?)
        } else {
            let path = self.file.as_ref().expect("clap enforces one input");
            let text = fs::read_to_string(path)?;
            gio::read_graph_auto(&text)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve a parameter exactly and print its certificate
    Solve {
        #[command(flatten)]
        input: InputArgs,

        /// Which parameter to compute
        #[arg(long, value_enum, default_value = "chi-dt")]
        param: Param,

        #[arg(long, value_enum, default_value = "text")]
        format: Format,

        /// Solver order cap override
        #[arg(long, default_value_t = solver::DEFAULT_SOLVER_CAP)]
        max_order: usize,
    },

    /// Validate a certificate file against a graph
    Check {
        #[command(flatten)]
        input: InputArgs,

        /// Certificate file (`k=<v>` then `v color dominated_class` lines)
        #[arg(long)]
        certificate: PathBuf,
    },

    /// Exhaustively verify theorems over all connected graphs up to --nmax
    Verify {
        /// Theorems to check (repeatable); default all
        #[arg(long = "theorem")]
        theorems: Vec<String>,

        #[arg(long, default_value_t = harness::VERIFY_DEFAULT)]
        nmax: usize,

        /// One representative per isomorphism class instead of all labelings
        #[arg(long)]
        dedup: bool,

        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        workers: usize,

        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },

    /// Emit a closed-form value table as CSV
    Table {
        /// Family kind: path, cycle, corona-path, corona-cycle, gadget
        #[arg(long)]
        family: String,

        #[arg(long)]
        from: usize,

        #[arg(long)]
        to: usize,
    },

    /// Hunt for instances attaining a bound endpoint
    Search {
        /// Theorem to probe
        #[arg(long)]
        theorem: String,

        /// Which endpoint: low or high
        #[arg(long)]
        endpoint: String,

        /// Exhaustive search over all connected graphs up to this order
        #[arg(long, default_value_t = 6)]
        nmax: usize,

        /// Sample random connected graphs instead of exhausting
        #[arg(long)]
        random: bool,

        /// Order of random samples
        #[arg(long, default_value_t = 8, requires = "random")]
        order: usize,

        /// Number of random samples
        #[arg(long, default_value_t = 100, requires = "random")]
        samples: usize,

        /// RNG seed (required in random mode; no implicit entropy)
        #[arg(long, required_if_eq("random", "true"))]
        seed: Option<u64>,
    },

    /// Emit a gap-growth table as CSV
    Gap {
        /// Which experiment: t2.5 (gadget minus apex) or c3.6 (K_n ratio)
        #[arg(long)]
        kind: String,

        #[arg(long)]
        from: usize,

        #[arg(long)]
        to: usize,

        /// Re-solve rows with n up to this value
        #[arg(long, default_value_t = 5)]
        solver_max: usize,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::ResourceGuard { .. } => 3,
        Error::Parse(_) | Error::InvalidParameter(_) => 2,
        _ => 1,
    }
}

fn run() -> Result<u8, Error> {
    match Cli::parse().command {
        Command::Solve {
            input,
            param,
            format,
            max_order,
        } => {
            let g = input.load()?;
            let (name, result) = match param {
                Param::ChiDt => ("chi_dt", solver::td_chromatic_number_capped(&g, max_order)?),
                Param::Chi => ("chi", solver::chromatic_number_capped(&g, max_order)?),
                Param::GammaT => (
                    "gamma_t",
                    solver::total_domination_number_capped(&g, max_order)?,
                ),
            };
            match format {
                Format::Text => {
                    println!("{name}={}", result.value);
                    match &result.witness {
                        Witness::TotalDominator(cert) => {
                            print!("{}", gio::write_certificate(cert))
                        }
                        Witness::ProperColoring(c) => {
                            for v in 0..c.len() {
                                println!("{v} {}", c.color(v));
                            }
                        }
                        Witness::TotalDominatingSet(set) => {
                            let items: Vec<String> =
                                set.iter().map(|v| v.to_string()).collect();
                            println!("set: {}", items.join(" "));
                        }
                    }
                    eprintln!(
                        "nodes_explored={} bounds=[{},{}]",
                        result.nodes_explored, result.lower_bound_used, result.upper_bound_used
                    );
                }
                Format::Json => {
                    let certificate = match &result.witness {
                        Witness::TotalDominator(cert) => gio::write_certificate(cert),
                        Witness::ProperColoring(c) => (0..c.len())
                            .map(|v| format!("{v} {}\n", c.color(v)))
                            .collect(),
                        Witness::TotalDominatingSet(set) => {
                            let items: Vec<String> =
                                set.iter().map(|v| v.to_string()).collect();
                            format!("set: {}\n", items.join(" "))
                        }
                    };
                    let json = serde_json::json!({
                        "parameter": name,
                        "value": result.value,
                        "nodes_explored": result.nodes_explored,
                        "lower_bound_used": result.lower_bound_used,
                        "upper_bound_used": result.upper_bound_used,
                        "certificate": certificate,
                    });
                    println!("{}", serde_json::to_string_pretty(&json).expect("json"));
                }
            }
            Ok(0)
        }

        Command::Check { input, certificate } => {
            let g = input.load()?;
            let text = fs::read_to_string(&certificate)?;
            let cert = gio::read_certificate(&text)?;
            match tdchromatic::validate_certificate(&g, &cert) {
                Ok(()) => {
                    println!("certificate valid: k={}", cert.coloring.k());
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(1)
                }
            }
        }

        Command::Verify {
            theorems,
            nmax,
            dedup,
            workers,
            format,
        } => {
            let parsed: Vec<TheoremId> = theorems
                .iter()
                .map(|s| TheoremId::parse(s))
                .collect::<Result<_, _>>()?;
            let options = VerifyOptions {
                n_max: nmax,
                theorems: if parsed.is_empty() {
                    ALL_THEOREMS.to_vec()
                } else {
                    parsed
                },
                dedup,
                workers,
            };
            let summary = harness::verify_exhaustive(&options)?;
            match format {
                Format::Text => print!("{}", summary.to_text()),
                Format::Json => println!("{}", summary.to_json()),
            }
            if summary.violations() > 0 {
                for (theorem, record) in summary.counterexamples() {
                    eprintln!(
                        "counterexample {}: operand {} values {:?}\n{}",
                        theorem.name(),
                        record.operand,
                        record.values,
                        record.graph
                    );
                }
                Ok(1)
            } else {
                Ok(0)
            }
        }

        Command::Table { family, from, to } => {
            print!("{}", formulas::formula_table(&family, from, to)?);
            Ok(0)
        }

        Command::Search {
            theorem,
            endpoint,
            nmax,
            random,
            order,
            samples,
            seed,
        } => {
            let theorem = TheoremId::parse(&theorem)?;
            let want_high = match endpoint.as_str() {
                "low" => false,
                "high" => true,
                other => {
                    return Err(Error::Parse(format!(
                        "endpoint must be `low` or `high`, got `{other}`"
                    )))
                }
            };
            let found = if random {
                let mut rng = ChaCha8Rng::seed_from_u64(
                    seed.expect("clap requires --seed with --random"),
                );
                let mut found = None;
                for _ in 0..samples {
                    let g = enumerate::random_connected(order, 0.4, &mut rng)?;
                    if let Some(hit) = search_graph(&g, theorem, want_high)? {
                        found = Some(hit);
                        break;
                    }
                }
                found
            } else {
                let mut found = None;
                'outer: for n in 2..=nmax {
                    for g in enumerate::connected_graphs(n)? {
                        if let Some(hit) = search_graph(&g, theorem, want_high)? {
                            found = Some(hit);
                            break 'outer;
                        }
                    }
                }
                found
            };
            match found {
                Some((g, report)) => {
                    println!(
                        "{} {} endpoint attained: operand {} lhs={} value={} rhs={}",
                        theorem.name(),
                        endpoint,
                        report.operand,
                        report.lhs,
                        report.value,
                        report.rhs
                    );
                    print!("{}", gio::write_edge_list(&g));
                    Ok(0)
                }
                None => {
                    eprintln!("no {endpoint} witness found for {}", theorem.name());
                    Ok(1)
                }
            }
        }

        Command::Gap {
            kind,
            from,
            to,
            solver_max,
        } => {
            let kind = match kind.to_ascii_lowercase().as_str() {
                "t2.5" | "t25" => GapKind::T25,
                "c3.6" | "c36" => GapKind::C36,
                other => {
                    return Err(Error::Parse(format!(
                        "gap kind must be t2.5 or c3.6, got `{other}`"
                    )))
                }
            };
            let rows = harness::gap_growth(kind, from, to, solver_max)?;
            print!("{}", harness::gap_csv(kind, &rows));
            Ok(0)
        }
    }
}

/// Runs a single theorem's checks over all operands of one graph; returns
/// the first report attaining the requested endpoint.
fn search_graph(
    g: &Graph,
    theorem: TheoremId,
    want_high: bool,
) -> Result<Option<(Graph, harness::BoundReport)>, Error> {
    let mut outcomes: Vec<CheckOutcome> = Vec::new();
    match theorem {
        TheoremId::T22 => {
            for (u, w) in g.edges() {
                outcomes.push(harness::check_edge_removal(g, u, w)?);
            }
        }
        TheoremId::T23 => {
            for v in 0..g.order() {
                outcomes.push(harness::check_vertex_removal(g, v)?);
            }
        }
        TheoremId::T31 => {
            for (u, w) in g.edges() {
                outcomes.push(harness::check_edge_contraction(g, u, w)?);
            }
        }
        TheoremId::T33 => {
            for v in 0..g.order() {
                outcomes.push(harness::check_vertex_contraction(g, v)?);
            }
        }
        TheoremId::T35 => {
            for v in 0..g.order() {
                outcomes.push(harness::check_odot(g, v)?);
            }
        }
        TheoremId::C32 => {
            for (u, w) in g.edges() {
                outcomes.push(harness::check_corollaries(g, Operand::Edge(u, w))?);
            }
        }
        TheoremId::C34 => {
            for v in 0..g.order() {
                outcomes.push(harness::check_corollaries(g, Operand::Vertex(v))?);
            }
        }
        TheoremId::Henning => outcomes.push(harness::check_henning(g)?),
    }
    for outcome in outcomes {
        if let CheckOutcome::Checked(report) = outcome {
            if (want_high && report.tight_high) || (!want_high && report.tight_low) {
                return Ok(Some((g.clone(), report)));
            }
        }
    }
    Ok(None)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

// Integration coverage for the CLI lives in tests/cli.rs.
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
