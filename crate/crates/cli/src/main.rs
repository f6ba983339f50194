//! `gsplines`: compute with generalized splines on edge-labeled graphs
//! from the command line.
//!
//! Exit codes: 0 for success / holds / valid, 1 for fails / invalid /
//! infeasible, 2 for unknown or unconfirmed verdicts, 3 for usage, parse,
//! and I/O errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use graph_splines::fileio;
use graph_splines::ring::{text, Ideal, MembershipVerdict, RingDescriptor, RingValue};
use graph_splines::spline::{
    build_cycle_spline, build_path_spline, build_spline_crt, build_tree_spline, verify_labeling,
    Spline, VerifyOutcome,
};
use graph_splines::udp::{
    brute_force_udp, build_pasted_spline, check_pasting_equation, find_cut_decomposition,
    verify_non_udp_witness_bounded, BruteForceConfig, PastingCheck, UdpVerdict, WitnessOutcome,
};
use graph_splines::{iso, Error};

#[derive(Parser)]
#[command(
    name = "gsplines",
    version,
    about = "Generalized splines on edge-labeled graphs over Z, Z/mZ, and Z[x]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all simple paths between two vertices
    Paths {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Print the path ideal of each path between two vertices
    PathIdeal {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Print the intersection of all path ideals between two vertices
    Intersect {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Decide ideal membership, printing a certificate
    Member {
        /// Base ring: Z, Z/<m>, or Z[<var>]
        #[arg(long)]
        ring: String,
        /// Comma-separated generator literals, e.g. "6,x^2-9"
        #[arg(long)]
        generators: String,
        /// Element literal to test
        #[arg(long)]
        target: String,
        /// Cofactor degree bound for polynomial searches
        #[arg(long)]
        degree_bound: Option<usize>,
    },
    /// Check a spline file against its graph's edge ideals
    Verify {
        #[arg(long)]
        spline: PathBuf,
    },
    /// Build a spline achieving a target difference rho(from) - rho(to)
    Build {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        method: Method,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Target difference (element literal)
        #[arg(long)]
        target: String,
        /// Cut vertex (required for --method pasted)
        #[arg(long)]
        cut: Option<String>,
        /// Write the spline as canonical JSON to this file
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the pasting criterion at a cut vertex
    PastingCheck {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cut: String,
        /// Restrict to one pair (otherwise every opposite-side pair)
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
    },
    /// Exhaustively decide UDP over Z/mZ
    UdpBrute {
        #[arg(long)]
        graph: PathBuf,
        /// Maximum number of vertex assignments (default 10^7)
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads for the enumeration
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Verify a claimed non-UDP witness
    WitnessCheck {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Witness element literal
        #[arg(long)]
        target: String,
        #[arg(long)]
        degree_bound: Option<usize>,
    },
    /// Verify an isomorphism of edge-labeled graphs
    IsoVerify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        to_graph: PathBuf,
        #[arg(long)]
        iso: PathBuf,
    },
    /// Transport a spline across an isomorphism
    Transport {
        #[arg(long)]
        spline: PathBuf,
        #[arg(long)]
        iso: PathBuf,
        #[arg(long)]
        to_graph: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Path,
    Tree,
    Cycle,
    Crt,
    Pasted,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Domain infeasibility exits 1, undecidable verdicts exit 2, and
/// malformed requests (parse, I/O, shape, budget) exit 3.
fn exit_code_for(error: &Error) -> u8 {
    match error {
        Error::NotInSum { .. }
        | Error::NotInIdeal { .. }
        | Error::NotASpline(_, _)
        | Error::PastingEquationFails(_, _)
        | Error::InvalidIso(_) => 1,
        Error::MembershipUndecided { .. } | Error::PastingEquationUndecided(_, _) => 2,
        _ => 3,
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Paths { graph, from, to } => {
            let g = fileio::read_graph_file(graph)?;
            for path in g.enumerate_paths(&from, &to)? {
                println!("{path}");
            }
            Ok(0)
        }
        Command::PathIdeal { graph, from, to } => {
            let g = fileio::read_graph_file(graph)?;
            for path in g.enumerate_paths(&from, &to)? {
                println!("{}", g.path_ideal(&path)?);
            }
            Ok(0)
        }
        Command::Intersect { graph, from, to } => {
            let g = fileio::read_graph_file(graph)?;
            println!("{}", g.paths_intersection_ideal(&from, &to)?);
            Ok(0)
        }
        Command::Member {
            ring,
            generators,
            target,
            degree_bound,
        } => {
            let ring: RingDescriptor = ring.parse()?;
            let generators = generators
                .split(',')
                .map(|s| text::parse_element(&ring, s))
                .collect::<Result<Vec<_>, _>>()?;
            let ideal = Ideal::new(ring.clone(), generators)?;
            let target = text::parse_element(&ring, &target)?;
            let verdict = match degree_bound {
                Some(bound) => ideal.contains_bounded(&target, bound)?,
                None => ideal.contains(&target)?,
            };
            println!("{}", describe_membership(&verdict, &ideal, &target));
            Ok(membership_exit(&verdict))
        }
        Command::Verify { spline } => {
            let document = fileio::read_spline_file(spline)?;
            match verify_labeling(&document.graph, &document.labeling)? {
                VerifyOutcome::Valid => {
                    println!("valid");
                    Ok(0)
                }
                VerifyOutcome::Invalid { violations } => {
                    println!("invalid");
                    for v in violations {
                        println!(
                            "  edge {} -- {}: difference {} not in {}",
                            v.from, v.to, v.difference, v.label
                        );
                    }
                    Ok(1)
                }
                VerifyOutcome::Unknown { undecided } => {
                    println!("unknown");
                    for v in undecided {
                        println!(
                            "  edge {} -- {}: membership of {} in {} undecided",
                            v.from, v.to, v.difference, v.label
                        );
                    }
                    Ok(2)
                }
            }
        }
        Command::Build {
            graph,
            method,
            from,
            to,
            target,
            cut,
            output,
        } => {
            let g = Arc::new(fileio::read_graph_file(graph)?);
            let x = text::parse_element(g.ring(), &target)?;
            let spline = match method {
                Method::Path => build_path_spline(&g, &from, &to, &x)?,
                Method::Tree => build_tree_spline(&g, &from, &to, &x)?,
                Method::Cycle => build_cycle_spline(&g, &from, &to, &x)?,
                Method::Crt => build_spline_crt(&g, &from, &to, &x)?,
                Method::Pasted => {
                    let cut = cut.ok_or_else(|| {
                        Error::Parse("--method pasted requires --cut".to_string())
                    })?;
                    let decomposition = find_cut_decomposition(&g, &cut)?;
                    build_pasted_spline(&g, &decomposition, &from, &to, &x)?
                }
            };
            print_spline(&spline);
            println!(
                "rho({from}) - rho({to}) = {}",
                spline.difference(&from, &to)?
            );
            if let Some(path) = output {
                write_text(&path, &fileio::spline_to_canonical_json(&spline))?;
            }
            Ok(0)
        }
        Command::PastingCheck {
            graph,
            cut,
            from,
            to,
        } => {
            let g = fileio::read_graph_file(graph)?;
            let decomposition = find_cut_decomposition(&g, &cut)?;
            let pairs: Vec<(String, String)> = match (from, to) {
                (Some(from), Some(to)) => vec![(from, to)],
                _ => {
                    let mut pairs = Vec::new();
                    for u in decomposition.side1() {
                        for w in decomposition.side2() {
                            if u != decomposition.cut() && w != decomposition.cut() {
                                pairs.push((u.clone(), w.clone()));
                            }
                        }
                    }
                    pairs
                }
            };
            let mut overall = UdpVerdict::Holds;
            for (u, w) in &pairs {
                let check = check_pasting_equation(&g, &decomposition, u, w)?;
                print_pasting_check(&check);
                match (&overall, &check.verdict) {
                    (UdpVerdict::Holds, v) if !v.holds() => overall = v.clone(),
                    (UdpVerdict::Unknown, v @ UdpVerdict::Fails { .. }) => overall = v.clone(),
                    _ => {}
                }
            }
            println!("overall: {overall}");
            Ok(verdict_exit(&overall))
        }
        Command::UdpBrute {
            graph,
            budget,
            jobs,
        } => {
            let g = fileio::read_graph_file(graph)?;
            let defaults = BruteForceConfig::default();
            let config = BruteForceConfig {
                budget: budget.unwrap_or(defaults.budget),
                jobs: jobs.unwrap_or(defaults.jobs),
            };
            let report = brute_force_udp(&g, config)?;
            println!("{report}");
            Ok(verdict_exit(&report.verdict))
        }
        Command::WitnessCheck {
            graph,
            from,
            to,
            target,
            degree_bound,
        } => {
            let g = fileio::read_graph_file(graph)?;
            let x = text::parse_element(g.ring(), &target)?;
            let report = verify_non_udp_witness_bounded(&g, &from, &to, &x, degree_bound)?;
            println!("witness: {}", report.witness);
            for check in &report.path_checks {
                println!("path {}", check.path);
                println!("  ideal: {}", check.ideal);
                println!(
                    "  {}",
                    describe_membership(&check.verdict, &check.ideal, &report.witness)
                );
            }
            if let (Some(cut), Some(rhs), Some(verdict)) =
                (&report.cut, &report.rhs, &report.rhs_verdict)
            {
                println!("cut: {cut}");
                println!("rhs: {rhs}");
                println!("  {}", describe_membership(verdict, rhs, &report.witness));
            }
            println!("reason: {}", report.reason);
            match report.outcome {
                WitnessOutcome::Confirmed => {
                    println!("outcome: confirmed");
                    Ok(0)
                }
                WitnessOutcome::NotAWitness => {
                    println!("outcome: not a counterexample witness");
                    Ok(1)
                }
                WitnessOutcome::Unconfirmed => {
                    println!("outcome: unconfirmed");
                    Ok(2)
                }
            }
        }
        Command::IsoVerify {
            graph,
            to_graph,
            iso: iso_path,
        } => {
            let g = fileio::read_graph_file(graph)?;
            let g_prime = fileio::read_graph_file(to_graph)?;
            let candidate = fileio::read_iso_file(iso_path)?;
            match iso::verify_iso(&g, &g_prime, &candidate)? {
                iso::IsoVerdict::Valid => {
                    println!("valid");
                    Ok(0)
                }
                iso::IsoVerdict::Invalid { reason } => {
                    println!("invalid: {reason}");
                    Ok(1)
                }
                iso::IsoVerdict::Unknown => {
                    println!("unknown: label compatibility could not be decided");
                    Ok(2)
                }
            }
        }
        Command::Transport {
            spline,
            iso: iso_path,
            to_graph,
            output,
        } => {
            let document = fileio::read_spline_file(spline)?;
            let source = document.into_spline()?;
            let candidate = fileio::read_iso_file(iso_path)?;
            let g_prime = Arc::new(fileio::read_graph_file(to_graph)?);
            let transported = iso::transport_spline(&source, &candidate, &g_prime)?;
            print_spline(&transported);
            if let Some(path) = output {
                write_text(&path, &fileio::spline_to_canonical_json(&transported))?;
            }
            Ok(0)
        }
    }
}

fn print_spline(spline: &Spline) {
    for (vertex, value) in spline.values() {
        println!("{vertex} = {value}");
    }
}

fn print_pasting_check(check: &PastingCheck) {
    println!("pair ({}, {})", check.from, check.to);
    match &check.lhs {
        Some(lhs) => println!("  lhs: {lhs}"),
        None => println!("  lhs: not computable (non-principal intersection)"),
    }
    println!(
        "  rhs: {} + {} = {}",
        check.rhs_u_side, check.rhs_w_side, check.rhs
    );
    println!("  sufficient (u-side): {}", check.sufficient_3);
    println!("  sufficient (w-side): {}", check.sufficient_4);
    println!("  verdict: {}", check.verdict);
}

fn describe_membership(
    verdict: &MembershipVerdict,
    ideal: &Ideal,
    target: &RingValue,
) -> String {
    match verdict {
        MembershipVerdict::Yes { cofactors } => {
            let combination = cofactors
                .iter()
                .zip(ideal.generators())
                .map(|(c, g)| format!("({c})*({g})"))
                .collect::<Vec<_>>()
                .join(" + ");
            format!("yes: {target} = {combination}")
        }
        MembershipVerdict::No { certificate } => format!("no: {certificate}"),
        MembershipVerdict::Unknown => {
            "unknown: no cofactors within the degree bound and no disproof found".to_string()
        }
    }
}

fn membership_exit(verdict: &MembershipVerdict) -> u8 {
    match verdict {
        MembershipVerdict::Yes { .. } => 0,
        MembershipVerdict::No { .. } => 1,
        MembershipVerdict::Unknown => 2,
    }
}

fn verdict_exit(verdict: &UdpVerdict) -> u8 {
    match verdict {
        UdpVerdict::Holds => 0,
        UdpVerdict::Fails { .. } => 1,
        UdpVerdict::Unknown => 2,
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::File {
        file: path.display().to_string(),
        detail: e.to_string(),
    })
}
