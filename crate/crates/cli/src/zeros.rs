use avcodes::zeros::{mean_improvement, mean_terms, truncate3};
use rayon::prelude::*;

use crate::config::ZerosConfig;
use crate::output::Table;

pub fn run(cfg: &ZerosConfig) -> anyhow::Result<Vec<Table>> {
    let mut tables = Vec::new();
    if !cfg.mean.is_empty() {
        let cells: Vec<(usize, u32, u32)> = cfg.mean.iter().flat_map(|s| s.q.iter().map(move |&q| (s.m, s.r, q))).collect();
        let values: Vec<String> = cells.par_iter().map(|&(m, r, q)| truncate3(&mean_improvement(m, r, q))).collect();
        let mut t = Table::new("mean", &["m", "r", "q", "mean"]);
        for ((m, r, q), v) in cells.into_iter().zip(values) {
            t.push(vec![m.to_string(), r.to_string(), q.to_string(), v]);
        }
        tables.push(t);
    }
    if let Some(d) = &cfg.dump {
        let mut t = Table::new("dump", &["exponents", "baseline", "d"]);
        for term in mean_terms(d.m, d.r, d.q) {
            let e: Vec<String> = term.exps.iter().map(u32::to_string).collect();
            t.push(vec![e.join(" "), term.baseline.to_string(), term.d.to_string()]);
        }
        tables.push(t);
    }
    Ok(tables)
}
