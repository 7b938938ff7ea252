use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use threshold_spectra::Alpha;

#[derive(Parser, Debug)]
#[command(
    name = "tspec",
    version,
    about = "A_alpha spectral radius of threshold graphs"
)]
pub struct Cli {
    /// Output style; `structured` emits one fixed-order record per line.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for exhaustive searches (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build one of the named threshold graphs.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Spectral radius and Perron vector of A_alpha.
    Rho {
        /// Creation sequence over {I, D} or path to an edge-list file.
        graph: String,
        /// `p/q` or a decimal in [0, 1).
        #[arg(value_parser = parse_alpha)]
        alpha: Alpha,
    },
    /// Validate and apply a transformation to a connected threshold graph.
    Transform {
        graph: String,
        /// `BASIC p q h k`, `ROW p q h k l` or `COL p q h k l`; `:` or `,` may
        /// separate the fields.
        spec: String,
        /// Also certify monotonicity at this alpha.
        #[arg(long, value_parser = parse_alpha)]
        alpha: Option<Alpha>,
    },
    /// List a family: creation sequences, or edge keys for all graphs.
    Enumerate {
        n: usize,
        m: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value_t = UniverseArg::Threshold)]
        universe: UniverseArg,
    },
    /// Re-run an extremal characterization by exhaustive search.
    Verify(VerifyArgs),
    /// Structural quantities of a connected threshold graph.
    Audit {
        graph: String,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstructKind {
    /// Quasi-star S(n, m).
    QuasiStar { n: usize, m: usize },
    /// L(n, m).
    LGraph { n: usize, m: usize },
    /// K_k join (K_3 union (n-k-3) K_1), defined when m = kn - k(k+1)/2 + 3.
    TildeS { n: usize, m: usize },
    /// From a creation sequence such as IDDDDI.
    FromSeq { sequence: String },
    /// From a comma-separated threshold degree sequence.
    FromDegseq {
        #[arg(value_delimiter = ',', num_args = 1..)]
        degrees: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum UniverseArg {
    Threshold,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    /// Sparse sizes n-1 <= m <= 2n-2: the quasi-star maximizes.
    T41,
    /// Size 2n-2 at alpha = 1/2 among all threshold graphs.
    T12,
    /// Size block for a given r: the quasi-star maximizes.
    T42,
    /// n <= 7: every maximizer over connected graphs is a threshold graph.
    Lemma24,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub claim: Claim,
    /// Orders as `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    pub n: Option<RangeInclusive<usize>>,
    /// Comma-separated alphas.
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha)]
    pub alpha: Vec<Alpha>,
    /// Block index for t42.
    #[arg(long)]
    pub r: Option<usize>,
    /// Restrict lemma24 to one size.
    #[arg(long)]
    pub m: Option<usize>,
}

fn parse_alpha(s: &str) -> Result<Alpha, String> {
    s.parse()
        .map_err(|e: threshold_spectra::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => num(s)?..=num(s)?,
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..12").unwrap(), 4..=12);
        assert_eq!(parse_range("4..=12").unwrap(), 4..=12);
        assert_eq!(parse_range("24").unwrap(), 24..=24);
        assert!(parse_range("5..4").is_err());
        assert!(parse_range("x..4").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
