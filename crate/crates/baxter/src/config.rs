//! Command-line arguments and their validated form.

use std::path::PathBuf;

use baxter_core::rep::{by_name, AChoice, Representation, REGISTRY};
use baxter_core::Scalar;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::boundary::{LeftSpec, RightSpec, XiSpec};
use crate::error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "baxter", version, about = "Exact checks for baxterized R-matrices, reflection equations and open chains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Build an open chain and check its commuting families and Hamiltonians.
    Chain(ChainArgs),
    /// Exact characteristic polynomial and approximate roots of a Hamiltonian.
    Spectrum(ChainArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Ybe,
    Unitarity,
    CrossUnitarity,
    ConstantRe,
    Re,
    ConjugatedRe,
    BmwConstants,
    Antisymmetrizers,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Ybe => "ybe",
            Suite::Unitarity => "unitarity",
            Suite::CrossUnitarity => "cross-unitarity",
            Suite::ConstantRe => "constant-re",
            Suite::Re => "re",
            Suite::ConjugatedRe => "conjugated-re",
            Suite::BmwConstants => "bmw-constants",
            Suite::Antisymmetrizers => "antisymmetrizers",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Representation name (gl2, gl3, gl4, sp2, sp4, so3, so4, so5).
    #[arg(long, default_value = "gl2")]
    pub rep: String,
    /// Deformation parameter.
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub q: String,
    /// Baxterization parameter: q, -1/q or both.
    #[arg(long, default_value = "both", allow_hyphen_values = true)]
    pub a: String,
    /// Boundary parameter ξ: a scalar, `auto` or `wrong`.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<String>,
    /// Right-boundary parameter ξ₂.
    #[arg(long, allow_hyphen_values = true)]
    pub xi2: Option<String>,
    /// Seeds for the sample grid (comma separated).
    #[arg(long = "seeds", alias = "seed", value_delimiter = ',', default_value = "1")]
    pub seeds: Vec<u64>,
    /// Samples per seed.
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long)]
    pub left: Option<String>,
    #[arg(long)]
    pub right: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ChainArgs {
    /// Chain length (copies of V before the auxiliary copy).
    #[arg(long, default_value_t = 2)]
    pub sites: usize,
    #[arg(long, default_value = "trivial")]
    pub left: String,
    #[arg(long, default_value = "trivial")]
    pub right: String,
    /// Hamiltonian kind (H0..H7); chosen from the boundaries when omitted.
    #[arg(long)]
    pub kind: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// Echo of the run configuration as it appears in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub rep: String,
    pub q: String,
    pub a_choices: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sites: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub seeds: Vec<u64>,
    pub sample_count: usize,
}

/// Parsed and validated inputs shared by every command.
#[derive(Debug, Clone)]
pub struct Setup {
    pub config: RunConfig,
    pub q: Scalar,
    /// One representation per requested `a` choice.
    pub reps: Vec<Representation>,
    pub xi: XiSpec,
    pub xi2: Option<Scalar>,
    pub left: Option<LeftSpec>,
    pub right: Option<RightSpec>,
    pub seeds: Vec<u64>,
    pub samples: usize,
}

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn parse_scalar(what: &str, s: &str) -> Result<Scalar> {
    s.parse().map_err(|e| config_err(format!("--{what}: {e}")))
}

fn a_choices(s: &str) -> Result<Vec<AChoice>> {
    match s {
        "both" => Ok(vec![AChoice::PlusQ, AChoice::MinusInvQ]),
        "q" => Ok(vec![AChoice::PlusQ]),
        "-1/q" | "-q^-1" | "minus-inv-q" => Ok(vec![AChoice::MinusInvQ]),
        other => Err(config_err(format!("--a must be q, -1/q or both, got {other:?}"))),
    }
}

impl Setup {
    fn build(
        command: &str,
        suite: Option<Suite>,
        common: &CommonArgs,
        left: Option<&str>,
        right: Option<&str>,
        sites: Option<usize>,
        kind: Option<&str>,
    ) -> Result<Setup> {
        if !REGISTRY.contains(&common.rep.as_str()) {
            return Err(config_err(format!(
                "unknown representation {:?}; known: {}",
                common.rep,
                REGISTRY.join(", ")
            )));
        }
        if common.samples == 0 {
            return Err(config_err("--samples must be at least 1"));
        }
        if common.seeds.is_empty() {
            return Err(config_err("at least one seed is required"));
        }
        let q = parse_scalar("q", &common.q)?;
        let choices = a_choices(&common.a)?;
        let reps = choices
            .iter()
            .map(|&ac| by_name(&common.rep, &q, ac).map_err(|e| config_err(format!("--rep {} --q {}: {e}", common.rep, q))))
            .collect::<Result<Vec<_>>>()?;
        let xi = match common.xi.as_deref() {
            None | Some("auto") => XiSpec::Auto,
            Some("wrong") => XiSpec::Wrong,
            Some(s) => XiSpec::Value(parse_scalar("xi", s)?),
        };
        let xi2 = common.xi2.as_deref().map(|s| parse_scalar("xi2", s)).transpose()?;
        let left_spec = left.map(LeftSpec::parse).transpose()?;
        let right_spec = right.map(RightSpec::parse).transpose()?;
        if let Some(n) = sites {
            if n == 0 {
                return Err(config_err("--sites must be at least 1"));
            }
        }
        let config = RunConfig {
            command: command.to_string(),
            suite: suite.map(|s| s.name().to_string()),
            rep: common.rep.clone(),
            q: q.to_string(),
            a_choices: choices.iter().map(|c| c.name().to_string()).collect(),
            xi: common.xi.clone(),
            xi2: xi2.as_ref().map(|s| s.to_string()),
            sites,
            left: left.map(str::to_string),
            right: right.map(str::to_string),
            kind: kind.map(str::to_string),
            seeds: common.seeds.clone(),
            sample_count: common.samples,
        };
        Ok(Setup {
            config,
            q,
            reps,
            xi,
            xi2,
            left: left_spec,
            right: right_spec,
            seeds: common.seeds.clone(),
            samples: common.samples,
        })
    }

    pub fn for_verify(args: &VerifyArgs) -> Result<Setup> {
        Self::build("verify", Some(args.suite), &args.common, args.left.as_deref(), args.right.as_deref(), None, None)
    }

    pub fn for_chain(command: &str, args: &ChainArgs) -> Result<Setup> {
        Self::build(
            command,
            None,
            &args.common,
            Some(&args.left),
            Some(&args.right),
            Some(args.sites),
            args.kind.as_deref(),
        )
    }
}
