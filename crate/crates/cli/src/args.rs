use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use kostant::verify::DEFAULT_SEED;
use kostant::weyl::DEFAULT_BRUTE_CAP;
use serde::{Serialize, Serializer};

#[derive(Debug, Parser)]
#[command(name = "kostant", version, about = "Alternation sets, q-partition functions and q-multiplicities for the adjoint representation of sl(r+1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Largest rank whose Weyl group may be enumerated.
    #[arg(long, global = true, env = "KOSTANT_MAX_BRUTE_RANK", default_value_t = DEFAULT_BRUTE_CAP,
          value_parser = clap::value_parser!(u16).range(1..).map(usize::from))]
    pub brute_cap: usize,

    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Run every loop on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Alternation set of (highest root, μ).
    AltSet(AltSetArgs),
    /// q-multiplicity of μ in the adjoint representation.
    Qmult(QmultArgs),
    /// q-analog of Kostant's partition function.
    Partition(PartitionArgs),
    /// Table of Σ_k C(n+1−k, k) against Fibonacci numbers.
    Identity(IdentityArgs),
    /// Run the full acceptance suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct AltSetArgs {
    #[arg(long, value_parser = rank_parser())]
    pub rank: usize,
    /// Positive root as "i..j".
    #[arg(long)]
    pub mu: Interval,
    #[arg(long, value_enum, default_value_t = AltMethod::Both)]
    pub method: AltMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AltMethod {
    Brute,
    Theorem,
    Both,
}

#[derive(Debug, Args, Serialize)]
pub struct QmultArgs {
    #[arg(long, value_parser = rank_parser())]
    pub rank: usize,
    /// Positive root as "i..j", or "0" for the zero weight.
    #[arg(long)]
    pub mu: MuArg,
    #[arg(long, value_enum, default_value_t = QmultMethod::All)]
    pub method: QmultMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QmultMethod {
    /// Sum over the whole Weyl group.
    Kwmf,
    /// Sum over the characterized alternation set.
    KwmfAltset,
    /// Sum of closed-form terms.
    Closed,
    /// The predicted monomial.
    Predicted,
    All,
}

#[derive(Debug, Args, Serialize)]
pub struct PartitionArgs {
    #[arg(long, value_parser = rank_parser())]
    pub rank: usize,
    /// Simple-root coordinates "c1,…,cr".
    #[arg(long, allow_hyphen_values = true, value_parser = parse_coords)]
    pub weight: Coords,
    /// Also run the enumeration oracle and compare.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct IdentityArgs {
    #[arg(long, default_value_t = 30)]
    pub max_n: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    pub max_brute_rank: usize,
    #[arg(long, default_value_t = 25)]
    pub max_closed_rank: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

fn rank_parser() -> impl TypedValueParser<Value = usize> {
    clap::value_parser!(u16).range(1..).map(usize::from)
}

/// An interval "i..j" with 1 ≤ i ≤ j; checked against the rank later.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub i: usize,
    pub j: usize,
}

impl FromStr for Interval {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected an interval i..j, got {s:?}");
        let (a, b) = s.split_once("..").ok_or_else(bad)?;
        let i: usize = a.trim().parse().map_err(|_| bad())?;
        let j: usize = b.trim().parse().map_err(|_| bad())?;
        if i == 0 || i > j {
            return Err(format!("interval {s:?} needs 1 ≤ i ≤ j"));
        }
        Ok(Interval { i, j })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.i, self.j)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuArg {
    Zero,
    Root(Interval),
}

impl FromStr for MuArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim() == "0" {
            Ok(MuArg::Zero)
        } else {
            s.parse().map(MuArg::Root)
        }
    }
}

impl fmt::Display for MuArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuArg::Zero => f.write_str("0"),
            MuArg::Root(iv) => iv.fmt(f),
        }
    }
}

impl Serialize for MuArg {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Coords(pub Vec<i64>);

fn parse_coords(s: &str) -> Result<Coords, String> {
    s.split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|_| format!("bad coordinate {c:?} in {s:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Coords)
}
