//! `hwronski`: exact Hermite Wronskians, their zeros, and the asymptotic
//! curves those zeros follow.

mod commands;
mod output;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use hermite_wronskian::Partition;

#[derive(Parser)]
#[command(name = "hwronski", version, about)]
struct Cli {
    /// Directory for output files
    #[arg(long, global = true, default_value = "out")]
    out_dir: PathBuf,
    /// Stem for output file names (derived from the inputs by default)
    #[arg(long, global = true)]
    stem: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
pub struct Precision {
    /// Target significant digits of every root
    #[arg(short, long, env = "HWRONSKI_DIGITS", default_value_t = 30,
          value_parser = clap::value_parser!(u32).range(10..))]
    pub digits: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Wronskian W_λ as a JSON coefficient list
    Wronskian {
        /// Partition, e.g. "3,2,1", "(10^2,6^2)" or "11/2,5/2,1"
        #[arg(short, long)]
        partition: Partition,
    },
    /// Zeros of W_λ as JSON plus a scatter plot
    Roots {
        #[arg(short, long)]
        partition: Partition,
        #[command(flatten)]
        precision: Precision,
        /// Also print exact Sturm counts of real and imaginary zeros
        #[arg(long)]
        certify: bool,
    },
    /// Young diagram next to (or on top of) the zeros
    Overlay {
        #[arg(short, long)]
        partition: Partition,
        /// Use the doubled partition and its four-quadrant diagram
        #[arg(long)]
        doubled: bool,
        /// Draw the diagram on top of the zeros with a least-squares scale
        #[arg(long)]
        superimpose: bool,
        #[command(flatten)]
        precision: Precision,
    },
    /// Zeros of a multi-term Wronskian against the predicted curves
    Curves(CurvesArgs),
    /// Exact conjecture scans, one JSON report per line
    Scan(ScanArgs),
    /// Real parts of the zeros of W(H_n, H_{n+k}) against the semicircle law
    Semicircle {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Histogram bins on [-1, 1]
        #[arg(long, default_value_t = 20)]
        bins: usize,
        #[command(flatten)]
        precision: Precision,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("family").required(true)
    .args(["two_term", "three_term", "four_equal", "four_doubled"])))]
pub struct CurvesArgs {
    /// W(H_n, H_{n+k})
    #[arg(long)]
    pub two_term: bool,
    /// W(H_n, H_{n+k}, H_{n+2k})
    #[arg(long)]
    pub three_term: bool,
    /// W(H_n, H_{n+k}, H_{n+2k}, H_{n+3k})
    #[arg(long)]
    pub four_equal: bool,
    /// W(H_n, H_{n+1}, H_{n+l+1}, H_{n+l+2})
    #[arg(long, requires = "l")]
    pub four_doubled: bool,
    #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
    pub l: Option<u32>,
    /// Curve samples per branch
    #[arg(long, default_value_t = 400)]
    pub samples: usize,
    /// Window half-width as a fraction of sqrt(2n)
    #[arg(long, default_value_t = 0.85)]
    pub window_a: f64,
    /// Smallest |y| inside the window
    #[arg(long, default_value_t = 0.1)]
    pub window_b: f64,
    #[command(flatten)]
    pub precision: Precision,
}

#[derive(Args)]
#[command(group(ArgGroup::new("conjecture").required(true).args(["conjecture1", "conjecture2"])))]
pub struct ScanArgs {
    /// Simplicity of all zeros away from the origin
    #[arg(long)]
    pub conjecture1: bool,
    /// Doubled partitions: no real zeros, imaginary zeros counted by odd parts
    #[arg(long)]
    pub conjecture2: bool,
    #[arg(long, default_value_t = 8)]
    pub max_weight: u32,
    #[arg(long, default_value_t = 5)]
    pub max_part: u32,
    #[arg(long, default_value_t = 2)]
    pub max_len: usize,
    /// Extra μ to check with --conjecture2 (repeatable)
    #[arg(long)]
    pub mu: Vec<Partition>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Wronskian { partition } => commands::wronskian(&cli.out_dir, cli.stem, &partition),
        Command::Roots { partition, precision, certify } => {
            commands::roots(&cli.out_dir, cli.stem, &partition, precision.digits, certify)
        }
        Command::Overlay { partition, doubled, superimpose, precision } => commands::overlay(
            &cli.out_dir,
            cli.stem,
            &partition,
            doubled,
            superimpose,
            precision.digits,
        ),
        Command::Curves(args) => commands::curves(&cli.out_dir, cli.stem, &args),
        Command::Scan(args) => commands::scan(&cli.out_dir, cli.stem, &args),
        Command::Semicircle { n, k, bins, precision } => {
            commands::semicircle(&cli.out_dir, cli.stem, n, k, bins, precision.digits)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
