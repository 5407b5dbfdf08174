use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "crcodes",
    version,
    about = "Build, analyze and classify linear completely regular codes with covering radius 1"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Limit on codewords (or dual codewords) enumerated
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_codewords: Option<u64>,
    /// Limit on the number of cosets q^(n-k)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_cosets: Option<u64>,
    /// Limit on whole-space enumeration q^n
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_oracle: Option<u64>,
    /// Limit on monomial maps examined by exhaustive searches
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_monomial: Option<u64>,
    /// Seed for random scrambles
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of a human-readable report
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code and print its JSON
    #[command(subcommand)]
    Build(Family),
    /// Parameters, coset structure and regularity of a code
    Analyze { file: PathBuf },
    /// Classify a code and print the certificate
    Classify {
        file: PathBuf,
        /// Also classify this many seeded random monomial scrambles
        #[arg(long, default_value_t = 0)]
        scramble_check: usize,
    },
    /// Run a property suite
    #[command(subcommand)]
    Check(Suite),
    /// Definition-level regularity check over the whole space
    Oracle {
        file: PathBuf,
        /// Check the set of vectors at maximal distance instead of the code
        #[arg(long)]
        covering_set: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field order
    #[arg(long)]
    pub q: u64,
    /// Modulus coefficients, low degree first, including the leading 1
    #[arg(long, value_delimiter = ',')]
    pub poly: Option<Vec<u32>>,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// Hamming code with redundancy m_b
    Hamming {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        mb: usize,
    },
    /// Repetition code of length n
    Repetition {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
    },
    /// Code with parity check [h | -1], i.e. x_n = h . x
    Direct {
        #[command(flatten)]
        field: FieldArgs,
        /// Comma-separated entries of h
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<u64>,
    },
    /// Kernel of n_a side-by-side copies of a Hamming parity check
    Kron {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        na: usize,
        #[arg(long)]
        mb: usize,
    },
    /// Prepend a repeated coordinate, `times` times
    QRepeat {
        /// Code JSON file
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
}

/// Inclusive range `a..b` or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => parse(s).map(|v| v..=v),
    }
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Coset-table regularity against the whole-space oracle, for every
    /// linear code of each length
    Oracle {
        #[arg(long, value_parser = parse_range, default_value = "2")]
        q: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "1..4")]
        n: RangeInclusive<usize>,
    },
    /// Sphere-counting identity (q-1)n = (q^(n-k)-1) n_a on Kronecker codes
    Eqn1 {
        #[arg(long, value_parser = parse_range, default_value = "2")]
        q: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "2")]
        na: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "2")]
        mb: RangeInclusive<usize>,
    },
    /// Translate-count recurrence and regularity transfer for q-repeated
    /// codes, over every linear code of each length
    Recurrence {
        #[arg(long, value_parser = parse_range, default_value = "2")]
        q: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "1..4")]
        n: RangeInclusive<usize>,
    },
    /// Coset orbits of the constructed automorphisms of Kronecker codes
    Transitive {
        #[arg(long, value_parser = parse_range, default_value = "2")]
        q: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "2")]
        na: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "2")]
        mb: RangeInclusive<usize>,
        /// Also run the exhaustive monomial search where the budget allows
        #[arg(long)]
        exhaustive: bool,
    },
}
