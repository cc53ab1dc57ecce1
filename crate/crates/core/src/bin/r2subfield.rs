use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use r2subfield::analysis::{Cardinalities, FamilyId};
use r2subfield::cli::{self, Configuration, Format, Outcome};
use r2subfield::{Error, Result};

/// Binary subfield codes of simplicial-complex codes over F2[x]/(x^3 - x).
#[derive(Parser)]
#[command(name = "r2subfield", version)]
struct Cli {
    /// Output format: json, csv or md.
    #[arg(long, global = true, default_value = "md")]
    format: String,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one code and compare it with its predicted parameters.
    Code(CodeArgs),
    /// Sweep every family and subset triple for the given m.
    Verify {
        /// A single m, a range like 2-3, or a list like 2,3.
        #[arg(long, default_value = "2")]
        m: String,
        /// Comma-separated family numbers.
        #[arg(long, default_value = "1,2,3,4,5,6,7,8,9")]
        families: String,
    },
    /// Recompute [n, k, d] for every row of an optimal-code manifest.
    Scan {
        /// CSV manifest; defaults to the bundled table.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Print a family's predicted weight table.
    Tables {
        #[arg(long)]
        family: u8,
        #[arg(long)]
        m: u32,
        /// Sizes |L|,|M|,|N|.
        #[arg(long)]
        sizes: String,
    },
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    family: Option<u8>,
    #[arg(long = "L", default_value = "-")]
    l: String,
    #[arg(long = "M", default_value = "-")]
    mm: String,
    #[arg(long = "N", default_value = "-")]
    nn: String,
    /// Component form instead of --family: delta or deltac for each of D1..D3.
    #[arg(long = "D1")]
    d1: Option<String>,
    #[arg(long = "D2")]
    d2: Option<String>,
    #[arg(long = "D3")]
    d3: Option<String>,
    #[arg(long)]
    global_complement: bool,
}

fn complemented(kind: &Option<String>) -> Result<bool> {
    match kind.as_deref() {
        None | Some("delta") => Ok(false),
        Some("deltac") => Ok(true),
        Some(other) => Err(Error::InvalidArgument(format!(
            "expected delta or deltac, got {other:?}"
        ))),
    }
}

fn code_config(a: &CodeArgs) -> Result<Configuration> {
    let component_form = a.d1.is_some() || a.d2.is_some() || a.d3.is_some() || a.global_complement;
    let family = match (a.family, component_form) {
        (Some(_), true) => {
            return Err(Error::InvalidArgument(
                "--family cannot be combined with --D1/--D2/--D3/--global-complement".into(),
            ))
        }
        (Some(f), false) => FamilyId::new(f)?,
        (None, _) => FamilyId::from_pattern(
            complemented(&a.d1)?,
            complemented(&a.d2)?,
            complemented(&a.d3)?,
            a.global_complement,
        )?,
    };
    Configuration::parse(a.m, family.value(), &a.l, &a.mm, &a.nn)
}

fn parse_sizes(text: &str) -> Result<Cardinalities> {
    let parts: Vec<u32> = text
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidArgument(format!("invalid sizes {text:?}")))?;
    match parts[..] {
        [l, m, n] => Ok(Cardinalities::new(l, m, n)),
        _ => Err(Error::InvalidArgument(format!(
            "expected three sizes, got {text:?}"
        ))),
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let format: Format = cli.format.parse()?;
    match &cli.command {
        Command::Code(a) => cli::cmd_code(&code_config(a)?, format),
        Command::Verify { m, families } => cli::cmd_verify(
            &cli::parse_ambient_range(m)?,
            &cli::parse_families(families)?,
            format,
        ),
        Command::Scan { manifest } => {
            let text = match manifest {
                Some(path) => std::fs::read_to_string(path).map_err(|e| {
                    Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
                })?,
                None => cli::BUNDLED_MANIFEST.to_string(),
            };
            cli::cmd_scan(&text, format)
        }
        Command::Tables { family, m, sizes } => {
            let sizes = parse_sizes(sizes)?;
            cli::cmd_tables(FamilyId::new(*family)?, *m, sizes, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(Error::InvalidArgument(e.to_string())),
        },
        None => run(&cli),
    };
    match result {
        Ok(outcome) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &outcome.document) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", outcome.document);
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
