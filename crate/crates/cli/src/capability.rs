use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::Mutex;
use std::time::Instant;

use anyhow::Context;
use avcodes::mvdec::{capability, capability_row, MvdecError};
use avcodes::zeros::Bound;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{bound_label, parse_bound, table_grid, CapabilityConfig};
use crate::output::{opt, Outcome, Table};

/// One finished unit of work as stored in the checkpoint file.
#[derive(Serialize, Deserialize)]
struct Done {
    key: String,
    rows: Vec<Vec<String>>,
}

struct Unit<'a> {
    key: String,
    work: Box<dyn Fn() -> anyhow::Result<Vec<Vec<String>>> + Send + Sync + 'a>,
}

pub fn run(cfg: &CapabilityConfig, deadline: Option<Instant>) -> anyhow::Result<Outcome> {
    let mut labels = Vec::new();
    let mut sections: Vec<(Table, Vec<Unit>)> = Vec::new();

    if let Some(name) = &cfg.table {
        let grid = table_grid(name)?;
        let columns = grid.columns()?;
        let bounds: Vec<Bound> = cfg.bounds.iter().map(|b| parse_bound(b, 2)).collect::<anyhow::Result<_>>()?;
        labels.extend(bounds.iter().map(bound_label));
        let mut units = Vec::new();
        for b in bounds {
            for &r in &cfg.multiplicities {
                let (grid, columns, b) = (grid.clone(), columns.clone(), b.clone());
                units.push(Unit {
                    key: format!("{name}/{}/{r}", bound_label(&b)),
                    work: Box::new(move || {
                        let cells = capability_row(&grid, &columns, r, &b)?;
                        Ok(cells
                            .iter()
                            .map(|c| {
                                vec![
                                    bound_label(&b),
                                    r.to_string(),
                                    c.u.to_string(),
                                    opt(c.wrm),
                                    c.mcj.map(opt).unwrap_or_default(),
                                ]
                            })
                            .collect())
                    }),
                });
            }
        }
        sections.push((Table::new(name, &["bound", "r", "u", "wrm", "mcj"]), units));
    }

    if !cfg.codes.is_empty() {
        let mut units = Vec::new();
        for c in &cfg.codes {
            let code = c.code.build().with_context(|| format!("code {:?}", c.label))?;
            let m = c.code.sizes.len();
            for b in &cfg.bounds {
                let b = parse_bound(b, m)?;
                labels.push(bound_label(&b));
                for &r in &cfg.multiplicities {
                    let (set, b, label) = (code.monomials().clone(), b.clone(), c.label.clone());
                    units.push(Unit {
                        key: format!("code:{label}/{}/{r}", bound_label(&b)),
                        work: Box::new(move || {
                            let row = match capability(&set, r, &b) {
                                Ok(cap) => vec![
                                    cap.e_max.to_string(),
                                    cap.plan.t.to_string(),
                                    cap.plan.unknowns().to_string(),
                                    cap.plan.constraints.to_string(),
                                ],
                                Err(MvdecError::NoCapability { .. }) => vec![String::new(); 4],
                                Err(e) => return Err(e.into()),
                            };
                            let mut out = vec![label.clone(), bound_label(&b), r.to_string()];
                            out.extend(row);
                            Ok(vec![out])
                        }),
                    });
                }
            }
        }
        sections.push((
            Table::new("codes", &["label", "bound", "r", "e_max", "t", "unknowns", "constraints"]),
            units,
        ));
    }
    labels.sort();
    labels.dedup();

    let previous = match &cfg.checkpoint {
        Some(p) => load(p)?,
        None => HashMap::new(),
    };
    let sink = match &cfg.checkpoint {
        Some(p) => Some(Mutex::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(p)
                .with_context(|| format!("opening {}", p.display()))?,
        )),
        None => None,
    };

    let mut complete = true;
    let mut tables = Vec::new();
    for (mut table, units) in sections {
        let results: Vec<Option<Vec<Vec<String>>>> = units
            .par_iter()
            .map(|u| -> anyhow::Result<Option<Vec<Vec<String>>>> {
                if let Some(rows) = previous.get(&u.key) {
                    return Ok(Some(rows.clone()));
                }
                if deadline.is_some_and(|d| Instant::now() >= d) {
                    return Ok(None);
                }
                let rows = (u.work)()?;
                if let Some(sink) = &sink {
                    let line = serde_json::to_string(&Done {
                        key: u.key.clone(),
                        rows: rows.clone(),
                    })?;
                    let mut f = sink.lock().expect("checkpoint writer poisoned");
                    writeln!(f, "{line}")?;
                    f.flush()?;
                }
                Ok(Some(rows))
            })
            .collect::<anyhow::Result<_>>()?;
        for rows in results {
            match rows {
                Some(rows) => rows.into_iter().for_each(|r| table.push(r)),
                None => complete = false,
            }
        }
        tables.push(table);
    }
    Ok(Outcome {
        tables,
        bounds: labels,
        complete,
    })
}

fn load(path: &Path) -> anyhow::Result<HashMap<String, Vec<Vec<String>>>> {
    let mut out = HashMap::new();
    let f = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e).with_context(|| format!("reading {}", path.display())),
    };
    for line in BufReader::new(f).lines() {
        let line = line?;
        // a run killed mid-write leaves a truncated last line
        if let Ok(d) = serde_json::from_str::<Done>(&line) {
            out.insert(d.key, d.rows);
        }
    }
    Ok(out)
}
