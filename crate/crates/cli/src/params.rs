use anyhow::Context;
use avcodes::codes::{exto_curve, SetSpec};
use rayon::prelude::*;

use crate::config::{table_grid, ParamsConfig};
use crate::output::Table;

pub fn run(cfg: &ParamsConfig) -> anyhow::Result<Vec<Table>> {
    let mut tables = Vec::new();

    if !cfg.codes.is_empty() {
        let rows: Vec<Vec<String>> = cfg
            .codes
            .par_iter()
            .map(|c| -> anyhow::Result<Vec<String>> {
                let code = c.code.build().with_context(|| format!("code {:?}", c.label))?;
                let u = match &c.code.set {
                    SetSpec::Wrm { u, .. } => u.to_string(),
                    SetSpec::QaryRm { u } => u.to_string(),
                    _ => String::new(),
                };
                let (d, exact) = match code.footprint_distance() {
                    Ok(d) => (d.value.to_string(), d.exact.to_string()),
                    // dual codes: the Feng-Rao style designed distance is not computed here
                    Err(_) => (String::new(), String::new()),
                };
                Ok(vec![
                    c.label.clone(),
                    u,
                    code.len().to_string(),
                    code.dimension().to_string(),
                    d,
                    exact,
                ])
            })
            .collect::<anyhow::Result<_>>()?;
        let mut t = Table::new("codes", &["label", "u", "length", "dimension", "distance", "exact"]);
        rows.into_iter().for_each(|r| t.push(r));
        tables.push(t);
    }

    if !cfg.exto.is_empty() {
        let curves: Vec<_> = cfg
            .exto
            .par_iter()
            .map(|&[s1, s2]| exto_curve(s1, s2).map(|c| (s1, s2, c)))
            .collect::<Result<_, _>>()?;
        let mut t = Table::new("exto", &["grid", "u", "dimension", "distance"]);
        for (s1, s2, curve) in curves {
            for p in curve {
                t.push(vec![
                    format!("{s1}x{s2}"),
                    p.u.to_string(),
                    p.dimension.to_string(),
                    p.distance.to_string(),
                ]);
            }
        }
        tables.push(t);
    }

    if let Some(name) = &cfg.table {
        let grid = table_grid(name)?;
        let mut t = Table::new("header", &["u", "distance", "dim_wrm", "dim_mcj", "sub"]);
        for c in grid.columns()? {
            t.push(vec![
                c.u.to_string(),
                c.distance.to_string(),
                c.wrm.len().to_string(),
                c.mcj.as_ref().map_or(c.wrm.len(), |s| s.len()).to_string(),
                c.sub_capability(&grid).to_string(),
            ]);
        }
        tables.push(t);
    }
    Ok(tables)
}
