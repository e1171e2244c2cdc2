use std::fmt;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ice_core::lattice::{self, BoundarySpec, GtPatterns, LatticeError, Partition, TRANSFER_MAX_COLS};
use ice_core::schur::{self, SchurError, SchurMethod};
use ice_core::verify;
use ice_core::IceKind;

const DEFAULT_SEED: u64 = 20240601;
const DEFAULT_MAX_STATES: u128 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "ice",
    version,
    about = "Exact partition functions of free-fermionic ice and their identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition function of the λ-boundary ensemble.
    Zfun {
        #[arg(long)]
        kind: IceKind,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Schur polynomial s_λ.
    Schur {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, default_value = "bialternant")]
        method: SchurMethod,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Every admissible state, or with --gt the matching strict GT patterns.
    States {
        #[arg(long)]
        kind: IceKind,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long)]
        gt: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification checks; exits 1 if any fails.
    Verify {
        #[command(subcommand)]
        check: Check,
        #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Braiding commutators and the parametrized Yang-Baxter equations.
    Ybe {
        /// Three kinds, e.g. GGD; all eight triples when omitted.
        #[arg(long)]
        kinds: Option<String>,
        /// Only the hatted forms.
        #[arg(long)]
        hatted: bool,
    },
    /// Tokuyama sums, single t and per row, and the t = -1 specialisation.
    Tokuyama {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
    },
    /// The Γ and Δ partition functions against the two denominators.
    StatementB {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
    },
    /// π-homomorphism, associativity and injectivity on random weights.
    GroupLaw {
        #[command(flatten)]
        random: Random,
    },
    /// The eight axioms of a Yang-Baxter system.
    YbSystem {
        #[arg(long)]
        x: IceKind,
        #[arg(long)]
        y: IceKind,
        #[arg(long)]
        hatted: bool,
    },
    /// R_XY(p,q)·P·R_YX(q,p)·P is scalar.
    Triangularity,
    /// Row-transfer matrices of Γ(1) and Γ(2) commute, for 1..=cols columns.
    TransferCommute {
        #[arg(long, default_value_t = 4)]
        cols: usize,
    },
    /// Every check over a grid of partitions.
    All {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_part: u32,
        #[command(flatten)]
        random: Random,
    },
}

#[derive(Args)]
struct Random {
    #[arg(long, default_value_t = 16)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug)]
enum Failure {
    /// Bad input or a size guard; exit code 2.
    Usage(String),
    /// Writing to stdout failed.
    Io(io::Error),
}

fn usage(msg: impl fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        usage(e)
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        usage(e)
    }
}

impl From<SchurError> for Failure {
    fn from(e: SchurError) -> Self {
        usage(e)
    }
}

type Out<'a> = &'a mut dyn Write;

fn print_value<T: fmt::Display + serde::Serialize>(out: Out, value: &T, format: Format) -> Result<(), Failure> {
    match format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(value)?)?,
    }
    Ok(())
}

fn max_states() -> Result<u128, Failure> {
    match std::env::var("ICE_MAX_STATES") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("ICE_MAX_STATES must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_STATES),
    }
}

fn states(out: Out, kind: IceKind, lambda: Partition, gt: bool, format: Format) -> Result<(), Failure> {
    let b = BoundarySpec::new(kind, lambda);
    let count = lattice::count_states(&b)?;
    let limit = max_states()?;
    if count > limit {
        return Err(usage(format!("{count} states exceed ICE_MAX_STATES = {limit}")));
    }
    match (format, gt) {
        (Format::Text, true) => {
            for g in GtPatterns::strict(&b.lambda) {
                writeln!(out, "{g}")?;
            }
        }
        (Format::Text, false) => {
            for s in lattice::enumerate_states(&b) {
                writeln!(out, "{s}")?;
            }
        }
        (Format::Json, true) => {
            let patterns: Vec<_> = GtPatterns::strict(&b.lambda).collect();
            writeln!(out, "{}", serde_json::to_string(&patterns)?)?;
        }
        (Format::Json, false) => {
            let states: Vec<_> = lattice::enumerate_states(&b).collect();
            writeln!(out, "{}", serde_json::to_string(&states)?)?;
        }
    }
    if format == Format::Text {
        writeln!(out, "{count} states")?;
    }
    Ok(())
}

fn parse_triple(s: &str) -> Result<[IceKind; 3], Failure> {
    let kinds: Vec<IceKind> = s
        .chars()
        .map(|c| c.to_string().parse::<IceKind>().map_err(Failure::Usage))
        .collect::<Result<_, _>>()?;
    kinds
        .try_into()
        .map_err(|_| usage(format!("--kinds needs exactly three of G, D; got {s:?}")))
}

/// Runs the checks and returns whether all passed.
fn verify_cmd(out: Out, check: Check, format: Format) -> Result<bool, Failure> {
    let (reports, seed) = match check {
        Check::Ybe { kinds, hatted } => {
            let (triples, mut reports) = match kinds {
                Some(k) => (vec![parse_triple(&k)?], Vec::new()),
                None => (verify::all_triples(), verify::braidings()),
            };
            let form = if hatted { "hatted" } else { "plain" };
            reports.extend(verify::ybe(&triples).into_iter().filter(|r| r.check.ends_with(form)));
            (reports, None)
        }
        Check::Tokuyama { lambda } => {
            let mut reports = verify::tokuyama(&lambda);
            reports.push(verify::tokuyama_at_minus_one(&lambda));
            (reports, None)
        }
        Check::StatementB { lambda } => (vec![verify::statement_b(&lambda)], None),
        Check::GroupLaw { random } => (verify::group_law(random.samples, random.seed), Some(random.seed)),
        Check::YbSystem { x, y, hatted } => (verify::yb_system(x, y, hatted), None),
        Check::Triangularity => (verify::triangularity(), None),
        Check::TransferCommute { cols } => {
            if cols == 0 || cols > TRANSFER_MAX_COLS {
                return Err(usage(format!("--cols must be in 1..={TRANSFER_MAX_COLS}")));
            }
            (verify::transfer_commute(cols), None)
        }
        Check::All {
            max_n,
            max_part,
            random,
        } => {
            if max_n > 6 {
                return Err(usage("--max-n above 6 is out of reach"));
            }
            (
                verify::all(max_n, max_part, random.seed, random.samples),
                Some(random.seed),
            )
        }
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match format {
        Format::Text => {
            if let Some(seed) = seed {
                writeln!(out, "seed {seed}")?;
            }
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            writeln!(out, "{} checks, {failed} failed", reports.len())?;
        }
        Format::Json => {
            let doc = serde_json::json!({ "seed": seed, "checks": reports, "failed": failed });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(failed == 0)
}

fn run(out: Out, cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Zfun { kind, lambda, format } => {
            let z = lattice::partition_function(&BoundarySpec::new(kind, lambda))?;
            print_value(out, &z, format)?;
        }
        Command::Schur { lambda, method, format } => {
            print_value(out, &schur::schur(&lambda, method)?.value, format)?;
        }
        Command::States {
            kind,
            lambda,
            gt,
            format,
        } => states(out, kind, lambda, gt, format)?,
        Command::Verify { check, format } => return verify_cmd(out, check, format),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = BufWriter::new(io::stdout().lock());
    let result = run(&mut out, cli).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // the reader went away; nothing left to report to
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
