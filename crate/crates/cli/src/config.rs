use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::chars::Curve;
use hurwitz_core::field::PrimeEmbedding;

#[derive(Parser, Debug)]
#[command(name = "hurwitz17", version, about = "Canonical ideal of the genus-17 Hurwitz curve")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Directory for intertwiner cache files.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for the parallel sections.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Primes for modular certificates, each congruent to 1 mod 21.
    #[arg(long, global = true, value_name = "p1,p2,...", value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Also compute the total rank of the cubic span exactly (slow).
    #[arg(long, global = true)]
    pub exact: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write every table and artifact into this directory as well.
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Group order, conjugacy classes, normalizers and the presentation.
    Group,
    /// Character table, characteristic polynomials of h_7B, outer automorphism.
    Chartab,
    /// Decompositions of the symmetric powers.
    Decompose {
        /// Degrees, e.g. `2` or `0-10`.
        #[arg(long, default_value = "0-10", value_parser = parse_range)]
        degrees: RangeInclusive<u32>,
    },
    /// Decompositions of H^0(X, K^d).
    H0 {
        #[arg(long, value_enum)]
        curve: Option<CurveArg>,
        #[arg(long, default_value = "1-20", value_parser = parse_range)]
        degrees: RangeInclusive<u32>,
    },
    /// Builds the 105 quadrics, the alpha-equation and the point p.
    Quadrics,
    /// Checks that the quadrics generate the cubic part of the ideal.
    Verify {
        /// Quadric file to verify; built from scratch when absent.
        #[arg(long, value_name = "FILE")]
        quadrics: Option<PathBuf>,
    },
    /// Every stage in order.
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveArg {
    X1,
    X2,
}

impl From<CurveArg> for Curve {
    fn from(c: CurveArg) -> Curve {
        match c {
            CurveArg::X1 => Curve::X1,
            CurveArg::X2 => Curve::X2,
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad degree {t:?}"));
    let (a, b) = match s.split_once('-') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let d = num(s)?;
            (d, d)
        }
    };
    if a > b {
        return Err(format!("empty degree range {s:?}"));
    }
    Ok(a..=b)
}

/// Validated settings shared by every stage.
#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub cache_dir: Option<PathBuf>,
    pub threads: Option<usize>,
    pub primes: Vec<PrimeEmbedding>,
    pub exact: bool,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl PipelineConfig {
    pub fn from_args(g: &GlobalArgs) -> Result<Self, String> {
        let primes = match &g.primes {
            None => PrimeEmbedding::auto(2),
            Some(list) if list.is_empty() => return Err("--primes needs at least one prime".into()),
            Some(list) => {
                let mut seen = Vec::new();
                for &p in list {
                    if p % 21 != 1 {
                        return Err(format!("prime {p} is not congruent to 1 mod 21"));
                    }
                    if seen.contains(&p) {
                        return Err(format!("prime {p} given twice"));
                    }
                    seen.push(p);
                }
                seen.iter()
                    .map(|&p| PrimeEmbedding::for_prime(p).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?
            }
        };
        Ok(PipelineConfig {
            cache_dir: g.cache_dir.clone(),
            threads: g.threads.map(|t| t as usize),
            primes,
            exact: g.exact,
            format: g.format,
            out: g.out.clone(),
        })
    }
}

pub fn check_degrees(range: &RangeInclusive<u32>, allowed: RangeInclusive<u32>) -> Result<Vec<u32>, String> {
    if !allowed.contains(range.start()) || !allowed.contains(range.end()) {
        return Err(format!(
            "degrees {}-{} outside the tabulated range {}-{}",
            range.start(),
            range.end(),
            allowed.start(),
            allowed.end()
        ));
    }
    Ok(range.clone().collect())
}
