//! The `decode` and `experiment` subcommands: seeded codewords through a
//! symmetric channel with a fixed number of symbol errors.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{bail, Context};
use avcodes::channel::Channel;
use avcodes::codes::CodeSpec;
use avcodes::ff::{Field, Gf, Tower};
use avcodes::mvdec::{MvDecoder, MvOptions, MvdecError};
use avcodes::report::DecodeReport;
use avcodes::rsdec::{gs_decode_rs, gs_parameters, JoynerDecoder, RsCode, SubfieldDecoder};
use rayon::prelude::*;

use crate::config::{bound_label, parse_bound, DecodeConfig, DecoderKind, DecoderSpec, ExperimentConfig};
use crate::output::{opt, Outcome, Table};

enum Prepared {
    GsRs(RsCode),
    Subfield(SubfieldDecoder),
    /// One decoder per multiplicity; `None` where no E is admissible.
    Multivariate(CodeSpec, BTreeMap<u32, Option<MvDecoder>>),
    Joyner(JoynerDecoder),
}

impl Prepared {
    fn new(spec: &DecoderSpec, rs: &[u32]) -> anyhow::Result<(Self, Vec<String>)> {
        let code = || -> anyhow::Result<CodeSpec> {
            let Some(c) = &spec.code else {
                bail!("decoder {:?} needs a \"code\"", spec.kind)
            };
            Ok(c.build()?)
        };
        Ok(match spec.kind {
            DecoderKind::GsRs => {
                let Some(rs) = &spec.rs else {
                    bail!("decoder gs-rs needs an \"rs\" entry")
                };
                (Prepared::GsRs(RsCode::full(Arc::new(rs.field.build()?), rs.k)?), Vec::new())
            }
            DecoderKind::Subfield => {
                let code = code()?;
                let base = code.field().clone();
                let m = code.ensemble().dim() as u32;
                let ext = Arc::new(Field::new(base.characteristic(), base.degree() * m, None)?);
                let tower = Tower::new(base, ext)?;
                (Prepared::Subfield(SubfieldDecoder::new(code, tower)?), Vec::new())
            }
            DecoderKind::Multivariate => {
                let code = code()?;
                let bound = parse_bound(spec.bound.as_deref().unwrap_or("D"), code.ensemble().dim())?;
                let mut per_r = BTreeMap::new();
                for &r in rs {
                    let dec = match MvDecoder::new(code.clone(), r, &bound) {
                        Ok(d) => Some(d),
                        Err(MvdecError::NoCapability { .. }) => None,
                        Err(e) => return Err(e.into()),
                    };
                    per_r.insert(r, dec);
                }
                (Prepared::Multivariate(code, per_r), vec![bound_label(&bound)])
            }
            DecoderKind::Joyner => (Prepared::Joyner(JoynerDecoder::new()?), Vec::new()),
        })
    }

    fn field(&self) -> &Field {
        match self {
            Prepared::GsRs(c) => c.field(),
            Prepared::Subfield(d) => d.code().field(),
            Prepared::Multivariate(c, _) => c.field(),
            Prepared::Joyner(d) => d.code().field(),
        }
    }

    fn n(&self) -> usize {
        match self {
            Prepared::GsRs(c) => c.n(),
            Prepared::Subfield(d) => d.code().len(),
            Prepared::Multivariate(c, _) => c.len(),
            Prepared::Joyner(d) => d.code().len(),
        }
    }

    fn codeword(&self, ch: &mut Channel) -> anyhow::Result<Vec<Gf>> {
        let f = self.field();
        Ok(match self {
            Prepared::GsRs(c) => c.encode(&ch.vector(f, c.k()))?,
            Prepared::Subfield(d) => d.code().encode(&ch.vector(f, d.code().dimension()))?,
            Prepared::Multivariate(c, _) => c.encode(&ch.vector(f, c.dimension()))?,
            Prepared::Joyner(d) => d.code().encode(&ch.vector(f, d.code().dimension()))?,
        })
    }

    /// The radius the decoder guarantees at multiplicity r.
    fn capability(&self, r: u32) -> anyhow::Result<Option<i64>> {
        Ok(match self {
            Prepared::GsRs(c) => Some(gs_parameters(c.n() as u64, c.k() as u64, r)?.e_max),
            Prepared::Subfield(d) => {
                let (n, k) = (d.code().len() as u64, d.rs_dimension());
                if k > n {
                    None
                } else {
                    Some(gs_parameters(n, k, r)?.e_max)
                }
            }
            Prepared::Multivariate(_, per_r) => per_r.get(&r).and_then(|d| d.as_ref()).map(MvDecoder::e_max),
            Prepared::Joyner(d) => Some(gs_parameters(d.rs().n() as u64, d.rs().k() as u64, r)?.e_max),
        })
    }

    fn decode(&self, received: &[Gf], r: u32) -> anyhow::Result<DecodeReport> {
        Ok(match self {
            Prepared::GsRs(c) => gs_decode_rs(c, received, r)?,
            Prepared::Subfield(d) => d.decode(received, r)?,
            Prepared::Multivariate(_, per_r) => match per_r.get(&r) {
                Some(Some(d)) => d.decode(received, &MvOptions::default())?,
                _ => bail!("no admissible error count at r = {r}"),
            },
            // the RS list already stays within the GS radius
            Prepared::Joyner(d) => d.decode(received, r, d.code().len())?,
        })
    }
}

struct Trial {
    found: bool,
    list: usize,
    radius: Option<i64>,
    error: Option<String>,
}

fn trial(dec: &Prepared, seed: u64, stream: u64, r: u32, weight: usize) -> anyhow::Result<(Trial, Option<DecodeReport>)> {
    let mut ch = Channel::for_trial(seed, stream);
    let sent = dec.codeword(&mut ch)?;
    let (received, _) = ch.corrupt(dec.field(), &sent, weight);
    Ok(match dec.decode(&received, r) {
        Ok(rep) => (
            Trial {
                found: rep.contains(&sent),
                list: rep.len(),
                radius: Some(rep.params.radius),
                error: None,
            },
            Some(rep),
        ),
        Err(e) => (
            Trial {
                found: false,
                list: 0,
                radius: None,
                error: Some(format!("{e:#}")),
            },
            None,
        ),
    })
}

pub fn run_decode(cfg: &DecodeConfig, seed: u64, deadline: Option<Instant>) -> anyhow::Result<Outcome> {
    let (dec, bounds) = Prepared::new(&cfg.decoder, &[cfg.r])?;
    if cfg.errors > dec.n() {
        bail!("{} errors on a word of length {}", cfg.errors, dec.n());
    }
    let results: Vec<Option<(Trial, Option<DecodeReport>)>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            if deadline.is_some_and(|d| Instant::now() >= d) {
                return Ok(None);
            }
            trial(&dec, seed, t, cfg.r, cfg.errors).map(Some)
        })
        .collect::<anyhow::Result<_>>()?;

    let mut trials = Table::new("trials", &["trial", "errors", "list_size", "sent_found", "radius", "error"]);
    let mut params = Table::new("params", &["key", "value"]);
    let mut complete = true;
    for (t, res) in results.into_iter().enumerate() {
        let Some((tr, rep)) = res else {
            complete = false;
            continue;
        };
        if params.rows.is_empty() {
            if let Some(rep) = &rep {
                params.push(vec!["decoder".into(), rep.decoder.clone()]);
                let p = serde_json::to_value(&rep.params).context("serializing decode parameters")?;
                for (k, v) in p.as_object().into_iter().flatten() {
                    params.push(vec![k.clone(), v.as_str().map_or_else(|| v.to_string(), str::to_string)]);
                }
            }
        }
        trials.push(vec![
            t.to_string(),
            cfg.errors.to_string(),
            tr.list.to_string(),
            tr.found.to_string(),
            opt(tr.radius),
            tr.error.unwrap_or_default(),
        ]);
    }
    Ok(Outcome {
        tables: vec![params, trials],
        bounds,
        complete,
    })
}

pub fn run_experiment(cfg: &ExperimentConfig, seed: u64, deadline: Option<Instant>) -> anyhow::Result<Outcome> {
    let (dec, bounds) = Prepared::new(&cfg.decoder, &cfg.multiplicities)?;
    if let Some(w) = cfg.weights.iter().find(|&&w| w > dec.n()) {
        bail!("weight {w} on a word of length {}", dec.n());
    }
    let cells: Vec<(u32, usize)> = cfg
        .multiplicities
        .iter()
        .flat_map(|&r| cfg.weights.iter().map(move |&w| (r, w)))
        .collect();
    let jobs: Vec<(usize, u64)> = (0..cells.len()).flat_map(|c| (0..cfg.trials).map(move |t| (c, t))).collect();
    let results: Vec<Option<Trial>> = jobs
        .par_iter()
        .map(|&(c, t)| {
            if deadline.is_some_and(|d| Instant::now() >= d) {
                return Ok(None);
            }
            let (r, w) = cells[c];
            // one stream per (cell, trial), independent of the thread count
            trial(&dec, seed, c as u64 * cfg.trials + t, r, w).map(|(tr, _)| Some(tr))
        })
        .collect::<anyhow::Result<_>>()?;

    let mut table = Table::new(
        "experiment",
        &["r", "weight", "trials", "successes", "rate", "capability", "mean_list", "failures"],
    );
    let mut complete = true;
    let per_cell = cfg.trials as usize;
    for (c, &(r, w)) in cells.iter().enumerate() {
        let chunk = &results[c * per_cell..(c + 1) * per_cell];
        let done: Vec<&Trial> = chunk.iter().flatten().collect();
        if done.len() < per_cell {
            complete = false;
        }
        let ok = done.iter().filter(|t| t.found).count();
        let errors = done.iter().filter(|t| t.error.is_some()).count();
        let lists: usize = done.iter().map(|t| t.list).sum();
        let rate = if done.is_empty() {
            String::new()
        } else {
            format!("{:.4}", ok as f64 / done.len() as f64)
        };
        let mean_list = if done.is_empty() {
            String::new()
        } else {
            format!("{:.4}", lists as f64 / done.len() as f64)
        };
        table.push(vec![
            r.to_string(),
            w.to_string(),
            done.len().to_string(),
            ok.to_string(),
            rate,
            opt(dec.capability(r)?),
            mean_list,
            errors.to_string(),
        ]);
    }
    Ok(Outcome {
        tables: vec![table],
        bounds,
        complete,
    })
}
