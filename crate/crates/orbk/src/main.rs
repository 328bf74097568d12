//! Command line for the Richardson orbital variety tableau calculus.
//!
//! Exit codes: 0 success, 1 verification violation or internal failure,
//! 2 usage error, 3 enumeration bound exceeded.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orbk::format::{
    parse_tableau, render_tableau_ascii, tableau_json, ClosureDoc, DescendantDoc, DescendantsDoc,
    ReportDoc, SubsetDoc, TableauDoc,
};
use orbk::hasse::{render_dot, HasseDoc};
use orbk::run_verify;
use orbk_core::oracle::{duflo_hasse, CellIndex, CheckReport, DEFAULT_ENUM_BOUND};
use orbk_core::richardson::{
    closure_members, codim_in_nilradical, descendants, richardson_tableau, richardson_word,
    ChainForm,
};
use orbk_core::{Error, SimpleRootSubset, StandardTableau};

#[derive(Parser)]
#[command(
    name = "orbk",
    version,
    about = "Closures and geometric descendants of Richardson orbital varieties in sl_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the minimal tableau T_I of a simple-root subset
    Tableau {
        #[arg(long)]
        n: usize,
        /// Comma-separated simple-root indices, e.g. "1,3,4"
        #[arg(long, default_value = "")]
        subset: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Print the longest parabolic element w_I in one-line form
    Word {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        subset: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// List every tableau in the closure of the Richardson variety
    Closure {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        subset: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Enumeration bound (default 6; ORBK_BOUND overrides)
        #[arg(long)]
        bound: Option<usize>,
    },
    /// List the geometric descendants of T_I with shapes and codimensions
    Descendants {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        subset: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Apply the Dynkin-diagram involution to a subset or a tableau file
    Psi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        subset: Option<String>,
        /// Tableau JSON file ("-" for stdin)
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Project a tableau onto the entries in [lo, hi]
    Project {
        #[arg(long)]
        lo: u32,
        #[arg(long)]
        hi: u32,
        /// Tableau JSON file ("-" for stdin)
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Run the verification suites up to the enumeration bound
    Verify {
        /// Largest rank to scan (default 6; ORBK_BOUND overrides)
        #[arg(long)]
        bound: Option<usize>,
        /// Run only the named suites (repeatable)
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Worker threads for the suite fan-out
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Export the Duflo-certified cover graph of a closure
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        subset: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        bound: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Resource(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Resource(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::BoundExceeded { .. } | Error::RankTooLarge { .. } => {
                Failure::Resource(e.to_string())
            }
            Error::InvalidRootIndex { .. } => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn parse_subset_flag(n: usize, text: &str) -> Result<SimpleRootSubset, Failure> {
    if n == 0 {
        return Err(Failure::Usage(String::from("--n must be at least 1")));
    }
    let mut indices = Vec::new();
    for piece in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let index: u32 = piece
            .parse()
            .map_err(|_| Failure::Usage(format!("invalid subset index {piece:?}")))?;
        indices.push(index);
    }
    SimpleRootSubset::new(n, indices).map_err(|e| Failure::Usage(e.to_string()))
}

fn resolve_bound(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(bound) = flag {
        return Ok(bound);
    }
    match std::env::var("ORBK_BOUND") {
        Ok(text) => text
            .parse()
            .map_err(|_| Failure::Usage(format!("ORBK_BOUND is not a number: {text:?}"))),
        Err(_) => Ok(DEFAULT_ENUM_BOUND),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn print_tableau(t: &StandardTableau, format: Format) -> Result<(), Failure> {
    match format {
        Format::Ascii => print!("{}", render_tableau_ascii(t)),
        Format::Json => println!("{}", tableau_json(t)),
        Format::Dot => return Err(Failure::Usage(String::from("dot output is for hasse only"))),
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Cmd::Tableau { n, subset, format } => {
            let subset = parse_subset_flag(n, &subset)?;
            print_tableau(&richardson_tableau(&subset), format)?;
            Ok(0)
        }
        Cmd::Word { n, subset, format } => {
            let subset = parse_subset_flag(n, &subset)?;
            let word = richardson_word(&subset);
            match format {
                Format::Ascii => println!("{word}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(word.entries()).expect("serializes")
                ),
                Format::Dot => {
                    return Err(Failure::Usage(String::from("dot output is for hasse only")))
                }
            }
            Ok(0)
        }
        Cmd::Closure {
            n,
            subset,
            format,
            bound,
        } => {
            let subset = parse_subset_flag(n, &subset)?;
            let bound = resolve_bound(bound)?;
            let members = closure_members(&subset, bound)?;
            match format {
                Format::Ascii => {
                    println!("{} members of the closure for I = {subset}", members.len());
                    for t in &members {
                        println!("{t}  shape {}", t.shape());
                    }
                }
                Format::Json => {
                    let doc = ClosureDoc {
                        n,
                        indices: subset.indices().iter().copied().collect(),
                        members: members.iter().map(TableauDoc::from).collect(),
                    };
                    println!("{}", serde_json::to_string(&doc).expect("serializes"));
                }
                Format::Dot => {
                    return Err(Failure::Usage(String::from("dot output is for hasse only")))
                }
            }
            Ok(0)
        }
        Cmd::Descendants { n, subset, format } => {
            let subset = parse_subset_flag(n, &subset)?;
            let chains = ChainForm::from_subset(&subset);
            let list = descendants(&subset);
            let with_codims: Vec<(StandardTableau, usize)> = list
                .into_iter()
                .map(|t| {
                    let codim =
                        codim_in_nilradical(&t, &chains).expect("descendants lie in the closure");
                    (t, codim)
                })
                .collect();
            match format {
                Format::Ascii => {
                    println!(
                        "{} descendants of the Richardson variety for I = {subset}",
                        with_codims.len()
                    );
                    for (t, codim) in &with_codims {
                        println!();
                        print!("{}", render_tableau_ascii(t));
                        println!("shape {}  codim {codim}", t.shape());
                    }
                }
                Format::Json => {
                    let doc = DescendantsDoc {
                        n,
                        indices: subset.indices().iter().copied().collect(),
                        descendants: with_codims
                            .iter()
                            .map(|(t, codim)| DescendantDoc {
                                rows: t.rows().to_vec(),
                                shape: t.shape().parts().to_vec(),
                                codim: *codim,
                            })
                            .collect(),
                    };
                    println!("{}", serde_json::to_string(&doc).expect("serializes"));
                }
                Format::Dot => {
                    return Err(Failure::Usage(String::from("dot output is for hasse only")))
                }
            }
            Ok(0)
        }
        Cmd::Psi {
            n,
            subset,
            input,
            format,
        } => match (subset, input) {
            (Some(_), Some(_)) => Err(Failure::Usage(String::from(
                "pass either --subset or --input, not both",
            ))),
            (Some(text), None) => {
                let subset = parse_subset_flag(n, &text)?;
                let image = subset.psi();
                match format {
                    Format::Ascii => println!("{image}"),
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string(&SubsetDoc::from(&image)).expect("serializes")
                    ),
                    Format::Dot => {
                        return Err(Failure::Usage(String::from("dot output is for hasse only")))
                    }
                }
                Ok(0)
            }
            (None, input) => {
                let text = read_input(input.as_deref())?;
                let t = parse_tableau(&text).map_err(Failure::Usage)?;
                if t.size() != n {
                    return Err(Failure::Usage(format!(
                        "tableau has {} entries but --n is {n}",
                        t.size()
                    )));
                }
                let image = t.psi().map_err(|e| Failure::Usage(e.to_string()))?;
                print_tableau(&image, format)?;
                Ok(0)
            }
        },
        Cmd::Project {
            lo,
            hi,
            input,
            format,
        } => {
            if lo == 0 || lo > hi {
                return Err(Failure::Usage(String::from("need 1 <= lo <= hi")));
            }
            let text = read_input(input.as_deref())?;
            let t = parse_tableau(&text).map_err(Failure::Usage)?;
            print_tableau(&t.project(lo, hi), format)?;
            Ok(0)
        }
        Cmd::Verify {
            bound,
            suites,
            jobs,
            format,
        } => {
            let bound = resolve_bound(bound)?;
            let reports = run_verify(bound, &suites, jobs.max(1)).map_err(Failure::Usage)?;
            let failed: u64 = reports.iter().map(|r| r.violation_count).sum();
            match format {
                Format::Ascii => {
                    for report in &reports {
                        print_report(report);
                    }
                    println!("verify: {} checks, {} violations", reports.len(), failed);
                }
                Format::Json => {
                    let docs: Vec<ReportDoc> = reports.iter().map(ReportDoc::from).collect();
                    println!("{}", serde_json::to_string(&docs).expect("serializes"));
                }
                Format::Dot => {
                    return Err(Failure::Usage(String::from("dot output is for hasse only")))
                }
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
        Cmd::Hasse {
            n,
            subset,
            format,
            bound,
        } => {
            let subset = parse_subset_flag(n, &subset)?;
            let bound = resolve_bound(bound)?;
            if n > bound {
                return Err(Failure::Resource(
                    Error::BoundExceeded { n, bound }.to_string(),
                ));
            }
            let cells = CellIndex::build(n, bound)?;
            let graph = duflo_hasse(&subset, &cells)?;
            match format {
                Format::Dot => print!("{}", render_dot(&graph)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&HasseDoc::from(&graph)).expect("serializes")
                ),
                Format::Ascii => {
                    return Err(Failure::Usage(String::from("hasse output is dot or json")))
                }
            }
            Ok(0)
        }
    }
}

fn print_report(report: &CheckReport) {
    let status = if report.passed() { "ok  " } else { "FAIL" };
    println!(
        "{status} {:<12} n={}  cases={}",
        report.check, report.n, report.cases
    );
    if !report.passed() {
        println!(
            "     {} violations ({} recorded)",
            report.violation_count,
            report.violations.len()
        );
        for v in &report.violations {
            println!("     ! {v}");
        }
    }
    for note in &report.notes {
        println!("     - {note}");
    }
}
