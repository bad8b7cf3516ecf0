mod render;

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gt_core::group::GroupParams;
use gt_core::{GtError, Strategy};

use render::Rendered;

/// Largest `d` accepted by `verify`.
const VERIFY_MAX_D: u32 = 40;

#[derive(Parser, Debug)]
#[command(
    name = "gtsurf",
    version,
    about = "Invariants, Togliatti certificates and Betti tables of GT-surfaces with dihedral group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded basis B_{2dt} of the invariant ring
    Basis(Common),
    /// Hilbert function, series and surface invariants
    Hilbert(Common),
    /// Togliatti certificate (exit 0 iff certified)
    Wlp(Common),
    /// Quadratic generators of the ideal of the surface
    Syzygy {
        #[command(flatten)]
        common: Common,
        /// Emit the binomial kernel generators in the z-variables instead
        #[arg(long)]
        kernel: bool,
        /// Emit every difference inside each collision class (z-variables)
        #[arg(long)]
        all_pairs: bool,
    },
    /// Betti table and its consistency checks
    Betti(Common),
    /// Run every cross-check for a range of d
    Verify(Common),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Args, Debug)]
struct Common {
    /// Order parameter d (d ≥ 3)
    #[arg(long)]
    d: Option<u32>,
    /// Inclusive range of d, written a..b
    #[arg(long, value_parser = parse_range, conflicts_with = "d")]
    d_range: Option<RangeInclusive<u32>>,
    /// Representation parameter a (default: smallest valid)
    #[arg(long)]
    a: Option<u32>,
    /// Degree t of the graded piece R_{2dt}
    #[arg(long)]
    t: Option<u32>,
    /// Inclusive range of t, written a..b
    #[arg(long, value_parser = parse_range, conflicts_with = "t")]
    t_range: Option<RangeInclusive<u32>>,
    /// Seed for the random linear forms
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random linear forms
    #[arg(long, default_value_t = gt_core::wlp::DEFAULT_TRIALS)]
    trials: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a range a..b, got {s:?}"))?;
    let a: u32 = a.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<GtError> for Failure {
    fn from(e: GtError) -> Self {
        match e {
            GtError::InvalidParams(m) => Failure::Usage(m),
            other => Failure::Check(other.to_string()),
        }
    }
}

impl Common {
    fn ds(&self) -> Result<Vec<u32>, Failure> {
        let ds: Vec<u32> = match (&self.d, &self.d_range) {
            (Some(d), _) => vec![*d],
            (None, Some(r)) => r.clone().collect(),
            (None, None) => return Err(Failure::Usage("one of --d or --d-range is required".into())),
        };
        if ds.iter().any(|&d| d < 3) {
            return Err(Failure::Usage("d must be ≥ 3".into()));
        }
        if self.trials == 0 {
            return Err(Failure::Usage("trials must be ≥ 1".into()));
        }
        Ok(ds)
    }

    fn params(&self, d: u32) -> Result<GroupParams, Failure> {
        Ok(match self.a {
            Some(a) => GroupParams::new(d, a)?,
            None => GroupParams::with_default_a(d)?,
        })
    }

    fn ts(&self, default: RangeInclusive<u32>) -> Vec<u32> {
        match (&self.t, &self.t_range) {
            (Some(t), _) => vec![*t],
            (None, Some(r)) => r.clone().collect(),
            (None, None) => default.collect(),
        }
    }

    fn is_range(&self) -> bool {
        self.d_range.is_some()
    }
}

fn configure_threads() {
    #[cfg(feature = "parallel")]
    if let Some(n) = std::env::var("GT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            // ignore the error if a pool already exists
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn run(cli: &Cli) -> Result<(Rendered, &Common), Failure> {
    let strategy = Strategy::default();
    Ok(match &cli.command {
        Command::Basis(c) => (render::basis(c, strategy)?, c),
        Command::Hilbert(c) => (render::hilbert(c)?, c),
        Command::Wlp(c) => (render::wlp(c, strategy)?, c),
        Command::Syzygy {
            common,
            kernel,
            all_pairs,
        } => (render::syzygy(common, *kernel, *all_pairs)?, common),
        Command::Betti(c) => (render::betti(c)?, c),
        Command::Verify(c) => {
            let ds = c.ds()?;
            if ds.iter().any(|&d| d > VERIFY_MAX_D) {
                return Err(Failure::Usage(format!("verify supports d in 3..{VERIFY_MAX_D}")));
            }
            (render::verify(c, &ds, strategy)?, c)
        }
    })
}

fn emit(text: &str, output: Option<&std::path::Path>) -> io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(&cli) {
        Ok((rendered, common)) => {
            if let Err(e) = emit(&rendered.text, common.output.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if rendered.failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                for f in &rendered.failures {
                    eprintln!("check failed: {f}");
                }
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
