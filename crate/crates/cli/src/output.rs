//! Tables, the provenance header and the CSV/JSON writers.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Bumped whenever a column set changes.
pub const SCHEMA_VERSION: u32 = 1;

pub const INDEX_CONVENTION: &str = "B-sum from i=0";

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Tables of one run plus what the header needs to know about it.
pub struct Outcome {
    pub tables: Vec<Table>,
    /// Bound labels used, e.g. "D:x2>x1".
    pub bounds: Vec<String>,
    /// False when a budget stopped the run early.
    pub complete: bool,
}

impl Outcome {
    pub fn plain(tables: Vec<Table>) -> Self {
        Outcome {
            tables,
            bounds: Vec::new(),
            complete: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub schema: u32,
    pub command: String,
    pub config_sha256: String,
    pub seed: u64,
    /// Bound kinds with their axis orders, e.g. "D:x2>x1".
    pub bounds: Vec<String>,
    pub index_convention: String,
    /// "complete", or "partial" when a budget stopped the run.
    pub status: String,
}

impl Provenance {
    pub fn new(command: &str, canonical_config: &str, seed: u64) -> Self {
        let hash = Sha256::digest(canonical_config.as_bytes());
        Provenance {
            tool: format!("avcodes {}", env!("CARGO_PKG_VERSION")),
            schema: SCHEMA_VERSION,
            command: command.into(),
            config_sha256: hash.iter().fold(String::new(), |mut s, b| {
                let _ = write!(s, "{b:02x}");
                s
            }),
            seed,
            bounds: Vec::new(),
            index_convention: INDEX_CONVENTION.into(),
            status: "complete".into(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct Document<'a> {
    provenance: &'a Provenance,
    tables: &'a [Table],
}

pub fn render(format: Format, prov: &Provenance, tables: &[Table]) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&Document { provenance: prov, tables })?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::new();
            writeln!(s, "# tool: {}", prov.tool)?;
            writeln!(s, "# schema: {}", prov.schema)?;
            writeln!(s, "# command: {}", prov.command)?;
            writeln!(s, "# config_sha256: {}", prov.config_sha256)?;
            writeln!(s, "# seed: {}", prov.seed)?;
            writeln!(s, "# bounds: {}", prov.bounds.join(" "))?;
            writeln!(s, "# index_convention: {}", prov.index_convention)?;
            writeln!(s, "# status: {}", prov.status)?;
            for t in tables {
                writeln!(s, "# table: {}", t.name)?;
                writeln!(s, "{}", t.columns.join(","))?;
                for row in &t.rows {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    writeln!(s, "{}", cells.join(","))?;
                }
            }
            s
        }
    })
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// `Some(x)` as text, `None` as an empty cell.
pub fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}
