//! `hgbern`: compute, tabulate and cross-check hypergeometric Bernoulli
//! numbers from the command line.

mod commands;
mod span;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hgbern_core::{Error, Route};
use num_bigint::BigInt;

use span::Span;

#[derive(Parser)]
#[command(name = "hgbern", version, about = "Exact hypergeometric Bernoulli numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CacheArg {
    /// Cache file; absent means everything stays in memory.
    #[arg(long, env = "HGBERN_CACHE")]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print one value B_{N,n}^{(r)} as num/den.
    Compute {
        #[arg(short = 'N', default_value_t = 1)]
        big_n: u64,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'r', default_value_t = 1)]
        r: usize,
        #[arg(long, default_value = "recurrence", value_parser = parse_route)]
        route: Route,
        /// Also print this many decimal digits.
        #[arg(long, value_name = "K")]
        decimal: Option<usize>,
        /// Name the route next to the value.
        #[arg(long)]
        show_route: bool,
        #[command(flatten)]
        cache: CacheArg,
    },
    /// Emit a table of values ordered by N, then r, then n.
    Table {
        #[arg(short = 'N', default_value = "1")]
        big_n: Span,
        #[arg(short = 'r', default_value = "1")]
        r: Span,
        #[arg(short = 'n')]
        n: Span,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        cache: CacheArg,
    },
    /// Evaluate several routes on a grid and require exact agreement.
    Verify {
        #[arg(short = 'N', default_value = "1..5")]
        big_n: Span,
        #[arg(short = 'r', default_value = "1..3")]
        r: Span,
        #[arg(short = 'n', default_value = "0..14")]
        n: Span,
        /// Comma-separated routes; defaults to all of them.
        #[arg(long, value_delimiter = ',', value_parser = parse_route)]
        routes: Vec<Route>,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        cache: CacheArg,
        /// Corrupt the cached value at "N,r,n" before the sweep.
        #[arg(long, hide = true, value_name = "N,r,n")]
        inject_fault: Option<String>,
    },
    /// Check Kummer-type congruences.
    #[command(subcommand)]
    Congruence(CongruenceCmd),
    /// Print continued-fraction convergents P_n, Q_n.
    Convergents {
        #[arg(short = 'N', default_value_t = 1)]
        big_n: u64,
        #[arg(short = 'n')]
        n: usize,
        /// Build from the closed forms instead of the recurrence.
        #[arg(long)]
        closed: bool,
        /// Check Q_n * sum B_{N,k} x^k/k! - P_n = O(x^{n+1}).
        #[arg(long)]
        check: bool,
    },
    /// Recompute every entry of a cache file.
    CacheAudit {
        #[command(flatten)]
        cache: CacheArg,
    },
}

#[derive(Args, Clone)]
struct ParamN {
    /// The parameter N (any size).
    #[arg(short = 'N', conflicts_with = "ordp_target")]
    big_n: Option<BigInt>,
    /// Use N = 1 + p^t; defaults to the smallest t the statement allows.
    #[arg(long, value_name = "T")]
    ordp_target: Option<u32>,
}

#[derive(Subcommand)]
enum CongruenceCmd {
    /// (1-p^{m-1}) B_m/m ≡ (1-p^{n-1}) B_n/n (mod p^{ν+1}).
    Classical {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 0)]
        nu: u32,
    },
    /// B_{N,n}/n ≡ B_n/n (mod p^{ν+1}).
    HbKummer {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 0)]
        nu: u32,
        #[command(flatten)]
        param: ParamN,
    },
    /// (1-p^{m-1}) B_{N,m}/m ≡ (1-p^{n-1}) B_{N,n}/n (mod p^{ν+1}).
    HbPair {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 0)]
        nu: u32,
        #[command(flatten)]
        param: ParamN,
    },
    /// prod (N+k)!/N! B_{N,n} ≡ prod (1+k)! B_n (mod p^{ord_p(N-1)}).
    Factorial {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'n')]
        n: usize,
        #[command(flatten)]
        param: ParamN,
    },
    /// Smallest ord_p(N-1) the HB statements need.
    Threshold {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'n')]
        n: usize,
        /// Second index; selects the two-index statement.
        #[arg(short = 'm')]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        nu: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure of a command, already mapped to its exit status.
pub enum Failure {
    /// Some check ran and came out false.
    Verification(String),
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Core(Error::Io(e))
    }
}

fn exit_status(e: &Error) -> u8 {
    match e {
        Error::RoutePrecondition(_) => 3,
        Error::InvalidKey(_)
        | Error::Hypothesis(_)
        | Error::NotPrime(_)
        | Error::InvalidArgument(_)
        | Error::ParseRational { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute { big_n, n, r, route, decimal, show_route, cache } => {
            commands::compute(big_n, r, n, route, decimal, show_route, cache.cache)
        }
        Command::Table { big_n, r, n, format, output, cache } => {
            commands::table(big_n, r, n, format, output, cache.cache)
        }
        Command::Verify { big_n, r, n, routes, jobs, cache, inject_fault } => {
            commands::verify(big_n, r, n, routes, jobs, cache.cache, inject_fault)
        }
        Command::Congruence(c) => commands::congruence(c),
        Command::Convergents { big_n, n, closed, check } => commands::convergents(big_n, n, closed, check),
        Command::CacheAudit { cache } => commands::cache_audit(cache.cache),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
    }
}
