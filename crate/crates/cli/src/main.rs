//! zgenus: exact invariants of knots and boundary links from Seifert data.
//!
//! Input documents are JSON (see the repository README for the schema);
//! they are read from a file argument or standard input. Exit codes:
//! 0 on success, 1 when a requested check fails (obstructed link, failed
//! certificate, corpus mismatch), 2 on input errors.

mod corpus;
mod document;
mod report;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zgenus_core::{blanchfield::verify_certificate, SearchBudget};

use document::{CertificateDocument, LinkDocument};

#[derive(Parser)]
#[command(name = "zgenus", version, about = "Exact Z-genus and Blanchfield invariants of boundary links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized search phases
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Entry bound for candidate basis vectors
    #[arg(long, global = true, default_value_t = 2)]
    coeff_bound: i64,
    /// Cap on examined search candidates
    #[arg(long, global = true, default_value_t = 200_000)]
    max_candidates: u64,
    /// Exponent bound for Hermitian certificate entries
    #[arg(long, global = true, default_value_t = 1)]
    degree_bound: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial, torsion decomposition, slice verdict, genus bounds
    Invariants {
        /// Input file; defaults to standard input
        input: Option<PathBuf>,
        /// Also search for a Hermitian certificate at the found genus
        #[arg(long)]
        certificate: bool,
    },
    /// Z-genus bounds with a re-verifiable witness
    Genus { input: Option<PathBuf> },
    /// Torsion-freeness verdict; exits 1 when the link is obstructed
    WeaklySlice { input: Option<PathBuf> },
    /// Check a stored Hermitian certificate document
    Verify { input: Option<PathBuf> },
    /// Resolve constructor documents into explicit matrices
    Construct { input: Option<PathBuf> },
    /// Recompute the bundled identities; exits 1 on any mismatch
    Corpus {
        /// Directory holding the golden files
        #[arg(long, default_value = "corpus")]
        corpus_dir: PathBuf,
    },
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", p.display())),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn parse_link(text: &str) -> anyhow::Result<LinkDocument> {
    serde_json::from_str(text).map_err(|e| anyhow::anyhow!("schema error: {e}"))
}

/// Ok(true) = success, Ok(false) = a check failed (exit 1).
fn run(cli: &Cli) -> anyhow::Result<bool> {
    let budget = SearchBudget {
        coeff_bound: cli.coeff_bound,
        max_candidates: cli.max_candidates,
        degree_bound: cli.degree_bound,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Invariants { input, certificate } => {
            let doc = parse_link(&read_input(input.as_deref())?)?;
            let system = doc.to_system()?;
            let report = report::invariant_report(
                &system,
                doc.label().map(str::to_owned),
                &budget,
                *certificate,
            )?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report::render_text(&report));
            }
            Ok(true)
        }
        Command::Genus { input } => {
            let doc = parse_link(&read_input(input.as_deref())?)?;
            let system = doc.to_system()?;
            let report = zgenus_core::z_genus_link(&system, &budget);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report::render_genus_line(&report));
            }
            Ok(true)
        }
        Command::WeaklySlice { input } => {
            let doc = parse_link(&read_input(input.as_deref())?)?;
            let system = doc.to_system()?;
            let module = zgenus_core::presentation(&system);
            let verdict = zgenus_core::is_torsion_free(&module)?;
            let slice = verdict == zgenus_core::SliceVerdict::WeaklySliceCompatible;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "weakly_slice": if slice { "yes" } else { "no" } })
                );
            } else {
                println!("weakly slice: {}", if slice { "yes" } else { "no" });
            }
            Ok(slice)
        }
        Command::Verify { input } => {
            let text = read_input(input.as_deref())?;
            let doc: CertificateDocument =
                serde_json::from_str(&text).map_err(|e| anyhow::anyhow!("schema error: {e}"))?;
            let knot = doc.knot()?;
            let report = verify_certificate(&doc.matrix, &knot, doc.genus);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!(
                    "size:          {} (claimed genus {}): {}",
                    report.size,
                    report.claimed_genus,
                    if report.size_matches { "ok" } else { "mismatch" }
                );
                println!("hermitian:     {}", if report.hermitian_ok { "ok" } else { "no" });
                println!(
                    "order match:   {}",
                    if report.det_matches_order { "ok" } else { "no" }
                );
                println!("signature(1):  {}", report.signature_at_one);
                println!("verdict:       {}", if report.verdict { "pass" } else { "fail" });
            }
            Ok(report.verdict)
        }
        Command::Construct { input } => {
            let doc = parse_link(&read_input(input.as_deref())?)?;
            let flat = doc.materialize()?;
            println!("{}", serde_json::to_string_pretty(&flat)?);
            Ok(true)
        }
        Command::Corpus { corpus_dir } => {
            let outcomes = corpus::run(corpus_dir, &budget);
            let all_ok = outcomes.iter().all(|o| o.passed());
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&outcomes)?);
            } else {
                print!("{}", corpus::render_table(&outcomes));
            }
            Ok(all_ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
