use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::config::Format;

#[derive(Debug, Parser)]
#[command(name = "mtlab", version, about = "Monogenic trinomials and class numbers of quadratic fields")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Seed for randomized factoring and oracle sampling.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Wall-clock cap per factorization; off by default so output is reproducible.
    #[arg(long, global = true)]
    pub factor_budget_ms: Option<u64>,
    /// Allow class numbers of large discriminants.
    #[arg(long, global = true)]
    pub slow: bool,
    #[arg(long, global = true)]
    pub probe_order_bound: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Also compute class numbers of squarefree non-members.
    #[arg(long, global = true)]
    pub all_h: bool,
}

#[derive(Debug, Args)]
pub struct TrinomialArgs {
    #[arg(long = "N")]
    pub n: u32,
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: BigInt,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: BigInt,
}

/// `lo..hi` (inclusive) or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span(pub i64, pub i64);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
        let span = match s.split_once("..") {
            Some((lo, hi)) => Span(parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?),
            None => {
                let v = parse(s)?;
                Span(v, v)
            }
        };
        if span.0 > span.1 {
            return Err(format!("empty range {s}"));
        }
        Ok(span)
    }
}

impl Span {
    pub fn to_u32(self, flag: &str) -> Result<(u32, u32), String> {
        let conv = |v: i64| u32::try_from(v).map_err(|_| format!("--{flag} must be a non-negative 32-bit range"));
        Ok((conv(self.0)?, conv(self.1)?))
    }
}

/// Parameter ranges for `scan` and `verify`. `--range` stands for the
/// first parameter of the family (`w`, `a` or `N`).
#[derive(Debug, Args, Default)]
pub struct RangeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<Span>,
    #[arg(long)]
    pub a: Option<Span>,
    #[arg(long)]
    pub b: Option<Span>,
    #[arg(long = "N")]
    pub n: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<Span>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Main1,
    Main2,
    Main3,
    Main4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Main1,
    Main2,
    Main3,
    Main4,
    Oracles,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute one of the four tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
    },
    /// Discriminant of x^N + Ax + B.
    Disc(TrinomialArgs),
    /// Irreducibility verdict with certificate.
    Irr(TrinomialArgs),
    /// Monogenicity verdict via the local index test.
    Monogenic(TrinomialArgs),
    /// Local index test at each prime dividing the discriminant.
    Jks {
        #[command(flatten)]
        t: TrinomialArgs,
        /// Test only this prime.
        #[arg(long)]
        q: Option<BigInt>,
    },
    /// Class number of Q(√delta).
    Classnum {
        #[arg(long, allow_hyphen_values = true)]
        delta: BigInt,
    },
    /// Order of a positive definite form in its class group.
    Order {
        /// `a,b,c`
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// One record per parameter tuple of a family.
    Scan {
        family: FamilyArg,
        #[command(flatten)]
        ranges: RangeArgs,
    },
    /// Check the divisibility claims and run the oracles.
    Verify {
        scope: Scope,
        #[command(flatten)]
        ranges: RangeArgs,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("-10..10".parse::<Span>(), Ok(Span(-10, 10)));
        assert_eq!("3".parse::<Span>(), Ok(Span(3, 3)));
        assert_eq!("2..=4".parse::<Span>(), Ok(Span(2, 4)));
        assert!("5..1".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
        assert!(Span(-1, 2).to_u32("a").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
