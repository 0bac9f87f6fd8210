//! Command-line front end: ingest graph files, run the classifiers,
//! enumerators, and oracle commands, and emit text or JSON reports.
//!
//! Exit codes: 0 on success (including `Overflow`/`Inconclusive` results,
//! which are reported in-band), 2 on parse errors, 3 on precondition
//! violations such as disconnected inputs.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pairideal::{
    best_nilpotency_bound, buchberger, build_report, double_line_witness, minimal_primes_generic,
    nilpotency_lower_bound, pair_ideal_generators, Capped, EngineCaps, Error, Graph, GraphPair,
    GroebnerBasis, Membership, MinimalPrimes, NilpotencyWitness, PairReport, Polynomial,
    PrimeComponent, ReportCaps, TermOrder, TriBool, VertexSubset,
};

#[derive(Parser)]
#[command(
    name = "pairideal",
    version,
    about = "Binomial edge ideals of graph pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    /// Graph file for the row graph
    #[arg(long = "g1", value_name = "PATH")]
    g1: PathBuf,
    /// Graph file for the column graph
    #[arg(long = "g2", value_name = "PATH")]
    g2: PathBuf,
}

#[derive(Args)]
struct CapArgs {
    /// Basis-size cap for the Buchberger engine
    #[arg(long = "cap-basis", value_name = "N", default_value_t = 5000)]
    cap_basis: usize,
    /// Degree cap for basis elements
    #[arg(long = "cap-degree", value_name = "N", default_value_t = 40)]
    cap_degree: u32,
    /// Cap on S-pair reductions
    #[arg(long = "cap-reductions", value_name = "N", default_value_t = 2_000_000)]
    cap_reductions: u64,
    /// Cap on enumerated admissible sets
    #[arg(long = "cap-enum", value_name = "N", default_value_t = 1_000_000)]
    cap_enum: usize,
}

impl CapArgs {
    fn engine(&self) -> Result<EngineCaps, Failure> {
        if self.cap_basis == 0
            || self.cap_degree == 0
            || self.cap_reductions == 0
            || self.cap_enum == 0
        {
            return Err(Failure::parse("caps must be positive"));
        }
        Ok(EngineCaps {
            max_basis_size: self.cap_basis,
            max_poly_degree: self.cap_degree,
            max_pair_reductions: self.cap_reductions,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify the pair ideal: primality, radicality, quadratic basis,
    /// unmixedness, minimal-prime data, depth, and nilpotency bound
    Analyze {
        #[command(flatten)]
        pair: PairArgs,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Enumerate the minimal primes of the pair ideal
    Minprimes {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Compute the reduced basis of the pair ideal under the fixed order
    Gb {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Decide membership of a polynomial (read from a file) in the pair ideal
    Member {
        #[command(flatten)]
        pair: PairArgs,
        /// Polynomial file, one expression in the textual format
        #[arg(long, value_name = "PATH")]
        poly: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Nilpotency lower bound from deletion sets
    Nilpotency {
        #[command(flatten)]
        pair: PairArgs,
        /// Vertices to delete from the row graph, e.g. "4" or "2,5"
        #[arg(long = "deletions1", value_name = "LIST", default_value = "")]
        deletions1: String,
        /// Vertices to delete from the column graph
        #[arg(long = "deletions2", value_name = "LIST", default_value = "")]
        deletions2: String,
        /// Search for the best deletion sets instead of using the given ones
        #[arg(long)]
        best: bool,
        /// Search budget per side for --best
        #[arg(long, value_name = "N", default_value_t = 65536)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Build the cubic witness for a pair of induced paths and test it and
    /// its square for membership
    Witness {
        #[command(flatten)]
        pair: PairArgs,
        /// Induced path in the row graph as "i,j,k" (default: first found)
        #[arg(long = "triple1", value_name = "I,J,K")]
        triple1: Option<String>,
        /// Induced path in the column graph as "r,s,t" (default: first found)
        #[arg(long = "triple2", value_name = "R,S,T")]
        triple2: Option<String>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn precondition(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GraphFormat(_)
            | Error::PolyFormat(_)
            | Error::VertexOutOfRange { .. }
            | Error::LoopEdge(_)
            | Error::DuplicateEdge(_, _) => Failure::parse(e.to_string()),
            _ => Failure::precondition(e.to_string()),
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    Graph::from_text(&text).map_err(Failure::from)
}

fn read_pair(args: &PairArgs) -> Result<GraphPair, Failure> {
    Ok(GraphPair::new(read_graph(&args.g1)?, read_graph(&args.g2)?))
}

fn parse_vertices(list: &str, parent: u32) -> Result<VertexSubset, Failure> {
    let mut members = Vec::new();
    for field in list.split(',').map(str::trim) {
        if field.is_empty() {
            continue;
        }
        let v: u32 = field
            .parse()
            .map_err(|_| Failure::parse(format!("bad vertex label '{field}'")))?;
        members.push(v);
    }
    VertexSubset::new(parent, members).map_err(|e| Failure::parse(e.to_string()))
}

fn parse_triple(s: &str) -> Result<(u32, u32, u32), Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Failure::parse(format!("expected 'i,j,k', got '{s}'")));
    }
    let num = |p: &str| -> Result<u32, Failure> {
        p.parse()
            .map_err(|_| Failure::parse(format!("bad vertex label '{p}'")))
    };
    Ok((num(parts[0])?, num(parts[1])?, num(parts[2])?))
}

fn tri_text(t: TriBool) -> &'static str {
    match t {
        TriBool::True => "true",
        TriBool::False => "false",
        TriBool::Undetermined => "undetermined",
    }
}

fn membership_text(m: Membership) -> &'static str {
    match m {
        Membership::Yes => "Yes",
        Membership::No => "No",
        Membership::Inconclusive => "Inconclusive",
    }
}

fn print_report_text(report: &PairReport) {
    let opt_bool = |b: Option<bool>| -> String {
        b.map(|v| v.to_string())
            .unwrap_or_else(|| "unavailable".into())
    };
    println!("is_prime: {}", opt_bool(report.is_prime));
    println!("is_radical: {}", report.is_radical);
    println!("quadratic_gb: {}", report.quadratic_gb);
    println!("unmixed: {}", tri_text(report.unmixed));
    let count = match &report.minimal_prime_count {
        None => "unavailable".to_string(),
        Some(Capped::Overflow) => "overflow".to_string(),
        Some(Capped::Value(n)) => n.to_string(),
    };
    println!("minimal_prime_count: {count}");
    let spectrum = match &report.height_spectrum {
        None => "unavailable".to_string(),
        Some(Capped::Overflow) => "overflow".to_string(),
        Some(Capped::Value(hs)) => format!("{hs:?}"),
    };
    println!("height_spectrum: {spectrum}");
    let depth = report
        .depth
        .map(|d| d.to_string())
        .unwrap_or_else(|| "not_applicable".into());
    println!("depth: {depth}");
    let cm = report
        .cohen_macaulay
        .map(|d| d.to_string())
        .unwrap_or_else(|| "not_applicable".into());
    println!("cohen_macaulay: {cm}");
    println!("nilpotency_lower_bound: {}", report.nilpotency_lower_bound);
}

fn print_prime_text(p: &PrimeComponent) {
    let cells: Vec<String> = p
        .witness()
        .cells()
        .iter()
        .map(|c| format!("({},{})", c.row, c.col))
        .collect();
    let blocks: Vec<String> = p
        .blocks()
        .iter()
        .map(|b| {
            let rows: Vec<String> = b.rows.iter().map(u32::to_string).collect();
            let cols: Vec<String> = b.cols.iter().map(u32::to_string).collect();
            format!("{{{}}}x{{{}}}", rows.join(","), cols.join(","))
        })
        .collect();
    println!(
        "height={} cells=[{}] blocks=[{}]",
        p.height(),
        cells.join(","),
        blocks.join(",")
    );
}

fn print_witness(witness: &NilpotencyWitness, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(witness).expect("serializable")
        );
        return;
    }
    println!("bound: {}", witness.bound);
    println!("deletion1: {}", witness.deletion1);
    println!("deletion2: {}", witness.deletion2);
    let fmt = |ts: &[(u32, u32, u32)]| -> String {
        let parts: Vec<String> = ts
            .iter()
            .map(|(a, b, c)| format!("({a},{b},{c})"))
            .collect();
        format!("[{}]", parts.join(","))
    };
    println!("triples1: {}", fmt(&witness.triples1));
    println!("triples2: {}", fmt(&witness.triples2));
}

fn basis_of_pair(pair: &GraphPair, caps: &EngineCaps) -> GroebnerBasis {
    buchberger(&pair_ideal_generators(pair), TermOrder::RowMajorLex, caps)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { pair, json, caps } => {
            let engine = caps.engine()?;
            let pair = read_pair(&pair)?;
            let report_caps = ReportCaps {
                engine,
                enumeration_cap: caps.cap_enum,
                nilpotency_budget: 65536,
            };
            let report = build_report(&pair, &report_caps);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                print_report_text(&report);
            }
        }
        Command::Minprimes { pair, json, caps } => {
            caps.engine()?;
            let pair = read_pair(&pair)?;
            match minimal_primes_generic(&pair, caps.cap_enum).map_err(Failure::from)? {
                MinimalPrimes::Overflow => {
                    if json {
                        println!("\"overflow\"");
                    } else {
                        println!("overflow");
                    }
                }
                MinimalPrimes::Complete(primes) => {
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&primes).expect("serializable")
                        );
                    } else {
                        for p in &primes {
                            print_prime_text(p);
                        }
                    }
                }
            }
        }
        Command::Gb { pair, json, caps } => {
            let engine = caps.engine()?;
            let pair = read_pair(&pair)?;
            let gb = basis_of_pair(&pair, &engine);
            let status = if gb.is_complete() {
                "complete"
            } else {
                "truncated_at_caps"
            };
            if json {
                let basis: Vec<String> = gb.generators.iter().map(Polynomial::to_string).collect();
                let value = serde_json::json!({ "status": status, "basis": basis });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("serializable")
                );
            } else {
                println!("status: {status}");
                for g in &gb.generators {
                    println!("{g}");
                }
            }
        }
        Command::Member {
            pair,
            poly,
            json,
            caps,
        } => {
            let engine = caps.engine()?;
            let pair = read_pair(&pair)?;
            let text = fs::read_to_string(&poly)
                .map_err(|e| Failure::parse(format!("{}: {e}", poly.display())))?;
            let f: Polynomial = text.parse().map_err(Failure::from)?;
            let gb = basis_of_pair(&pair, &engine);
            let result = gb.contains(&f);
            if json {
                let value =
                    serde_json::json!({ "membership": membership_text(result).to_lowercase() });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("serializable")
                );
            } else {
                println!("{}", membership_text(result));
            }
        }
        Command::Nilpotency {
            pair,
            deletions1,
            deletions2,
            best,
            budget,
            json,
        } => {
            let pair = read_pair(&pair)?;
            let witness = if best {
                best_nilpotency_bound(&pair, budget)
            } else {
                let d1 = parse_vertices(&deletions1, pair.rows())?;
                let d2 = parse_vertices(&deletions2, pair.cols())?;
                nilpotency_lower_bound(&pair, &d1, &d2)
            };
            print_witness(&witness, json);
        }
        Command::Witness {
            pair,
            triple1,
            triple2,
            json,
            caps,
        } => {
            let engine = caps.engine()?;
            let pair = read_pair(&pair)?;
            let t1 = match triple1 {
                Some(s) => parse_triple(&s)?,
                None => pair.g1.find_induced_path3().ok_or_else(|| {
                    Failure::precondition("row graph has no induced path on three vertices")
                })?,
            };
            let t2 = match triple2 {
                Some(s) => parse_triple(&s)?,
                None => pair.g2.find_induced_path3().ok_or_else(|| {
                    Failure::precondition("column graph has no induced path on three vertices")
                })?,
            };
            let f = double_line_witness(&pair, t1, t2).map_err(Failure::from)?;
            let gb = basis_of_pair(&pair, &engine);
            let fm = gb.contains(&f);
            let sm = gb.contains(&(&f * &f));
            if json {
                let value = serde_json::json!({
                    "witness": f.to_string(),
                    "membership": membership_text(fm).to_lowercase(),
                    "square_membership": membership_text(sm).to_lowercase(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("serializable")
                );
            } else {
                println!("witness: {f}");
                println!("membership: {}", membership_text(fm));
                println!("square_membership: {}", membership_text(sm));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes, like other unix filters
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
