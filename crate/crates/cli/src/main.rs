//! `avcodes`: regenerate the capability and zero-count tables and run
//! seeded decoding experiments.

mod capability;
mod config;
mod decode;
mod output;
mod params;
mod zeros;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::config::{parse, CapabilityConfig, DecodeConfig, ExperimentConfig, ParamsConfig, ZerosConfig};
use crate::output::{render, Format, Outcome, Provenance};

#[derive(Parser, Debug)]
#[command(name = "avcodes", version, about = "Affine variety codes: parameters, zero bounds, list decoding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file (default stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    /// Overrides the config's seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Wall-clock budget in seconds; unfinished work is left out and the
    /// output is marked partial.
    #[arg(long, global = true)]
    budget: Option<u64>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Dimensions and footprint distances of codes, WRM curves, table headers.
    Params,
    /// Mean improvement of D over Schwartz-Zippel, per-monomial dumps.
    Zeros,
    /// Error-correction capabilities of the multivariate decoder.
    Capability,
    /// Decode seeded random codewords with a fixed number of errors.
    Decode,
    /// Success rates over error weights and multiplicities.
    Experiment,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Params => "params",
            Command::Zeros => "zeros",
            Command::Capability => "capability",
            Command::Decode => "decode",
            Command::Experiment => "experiment",
        }
    }
}

/// Fills in the effective seed and returns the canonical JSON that the
/// provenance hash is taken over.
fn canonical<T: Serialize>(cfg: &mut T, seed_slot: impl FnOnce(&mut T) -> &mut Option<u64>, seed: u64) -> anyhow::Result<String> {
    *seed_slot(cfg) = Some(seed);
    Ok(serde_json::to_string(cfg)?)
}

fn run(cli: &Cli) -> anyhow::Result<(Provenance, Outcome)> {
    let text = match &cli.config {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => anyhow::bail!("--config <json> is required"),
    };
    let deadline = cli.budget.map(|s| Instant::now() + Duration::from_secs(s));
    let name = cli.command.name();

    macro_rules! prepare {
        ($ty:ty) => {{
            let mut cfg: $ty = parse(&text)?;
            let seed = cli.seed.or(cfg.seed).unwrap_or(0);
            let canon = canonical(&mut cfg, |c| &mut c.seed, seed)?;
            (cfg, seed, Provenance::new(name, &canon, seed))
        }};
    }

    let (mut prov, outcome) = match cli.command {
        Command::Params => {
            let (cfg, _, prov) = prepare!(ParamsConfig);
            (prov, Outcome::plain(params::run(&cfg)?))
        }
        Command::Zeros => {
            let (cfg, _, mut prov) = prepare!(ZerosConfig);
            prov.bounds = vec!["D:x1>x2".into()];
            (prov, Outcome::plain(zeros::run(&cfg)?))
        }
        Command::Capability => {
            let (cfg, _, prov) = prepare!(CapabilityConfig);
            (prov, capability::run(&cfg, deadline)?)
        }
        Command::Decode => {
            let (cfg, seed, prov) = prepare!(DecodeConfig);
            (prov, decode::run_decode(&cfg, seed, deadline)?)
        }
        Command::Experiment => {
            let (cfg, seed, prov) = prepare!(ExperimentConfig);
            (prov, decode::run_experiment(&cfg, seed, deadline)?)
        }
    };
    if !outcome.bounds.is_empty() {
        prov.bounds = outcome.bounds.clone();
    }
    if !outcome.complete {
        prov.status = "partial".into();
    }
    Ok((prov, outcome))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = run(&cli).and_then(|(prov, outcome)| {
        let text = render(cli.format, &prov, &outcome.tables)?;
        match &cli.out {
            Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
            None => print!("{text}"),
        }
        Ok(outcome.complete)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("budget exhausted: output is partial");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
