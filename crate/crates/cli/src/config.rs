//! Run configurations, one schema per subcommand. Unknown fields are
//! rejected so a typo cannot silently fall back to a default.

use std::path::PathBuf;

use anyhow::{bail, Context};
use avcodes::codes::CodeDescriptor;
use avcodes::ff::FieldDescriptor;
use avcodes::mvdec::TableGrid;
use avcodes::zeros::{Bound, BoundKind};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabeledCode {
    pub label: String,
    pub code: CodeDescriptor,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsConfig {
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub codes: Vec<LabeledCode>,
    /// Grids (s1, s2) for optimal-WRM dimension/distance curves.
    #[serde(default)]
    pub exto: Vec<[u32; 2]>,
    /// "table2" or "table3": the (u, d, dimension) header of that table.
    #[serde(default)]
    pub table: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeanSpec {
    pub m: usize,
    pub r: u32,
    pub q: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DumpSpec {
    pub m: usize,
    pub r: u32,
    pub q: u32,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZerosConfig {
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub mean: Vec<MeanSpec>,
    /// Per-monomial D values next to the Schwartz-Zippel baseline.
    #[serde(default)]
    pub dump: Option<DumpSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapabilityConfig {
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub table: Option<String>,
    #[serde(default)]
    pub codes: Vec<LabeledCode>,
    /// "S", "C", "D", optionally suffixed ":natural" or ":reversed".
    pub bounds: Vec<String>,
    pub multiplicities: Vec<u32>,
    /// JSON-lines file of finished rows; existing rows are reused.
    #[serde(default)]
    pub checkpoint: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecoderKind {
    GsRs,
    Subfield,
    Multivariate,
    Joyner,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RsSpec {
    pub field: FieldDescriptor,
    pub k: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecoderSpec {
    pub kind: DecoderKind,
    /// The code for `subfield` and `multivariate`.
    #[serde(default)]
    pub code: Option<CodeDescriptor>,
    /// The full-length RS code for `gs-rs`.
    #[serde(default)]
    pub rs: Option<RsSpec>,
    /// Bound for `multivariate`, default "D".
    #[serde(default)]
    pub bound: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecodeConfig {
    #[serde(default)]
    pub seed: Option<u64>,
    pub decoder: DecoderSpec,
    pub r: u32,
    pub errors: usize,
    #[serde(default = "one")]
    pub trials: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub seed: Option<u64>,
    pub decoder: DecoderSpec,
    pub weights: Vec<usize>,
    pub multiplicities: Vec<u32>,
    pub trials: u64,
}

fn one() -> u64 {
    1
}

/// The paper-table conventions: S in the natural order, C and D with the
/// variables reversed.
pub fn parse_bound(text: &str, m: usize) -> anyhow::Result<Bound> {
    let (kind, order) = match text.split_once(':') {
        Some((k, o)) => (k, Some(o)),
        None => (text, None),
    };
    let kind = match kind {
        "S" => BoundKind::Sz,
        "C" => BoundKind::ClosedForm,
        "D" => BoundKind::DRecursive,
        other => bail!("unknown bound kind {other:?}, expected S, C or D"),
    };
    let reversed = match order {
        None => kind != BoundKind::Sz,
        Some("natural") => false,
        Some("reversed") => true,
        Some(o) => bail!("unknown axis order {o:?}, expected natural or reversed"),
    };
    Ok(if reversed {
        Bound::reversed(kind, m)
    } else {
        Bound::natural(kind, m)
    })
}

pub fn bound_label(b: &Bound) -> String {
    format!("{}:{}", b.kind.letter(), b.order_label())
}

pub fn table_grid(name: &str) -> anyhow::Result<TableGrid> {
    match name {
        "table2" => Ok(TableGrid::table2()),
        "table3" => Ok(TableGrid::table3()),
        other => bail!("unknown table {other:?}, expected table2 or table3"),
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> anyhow::Result<T> {
    serde_json::from_str(text).context("invalid config")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_fields() {
        assert!(parse::<ZerosConfig>(r#"{"means": []}"#).is_err());
        assert!(parse::<ZerosConfig>(r#"{"mean": [{"m": 2, "r": 2, "q": [2]}]}"#).is_ok());
    }

    #[test]
    fn bound_defaults() {
        assert_eq!(bound_label(&parse_bound("S", 2).unwrap()), "S:x1>x2");
        assert_eq!(bound_label(&parse_bound("D", 2).unwrap()), "D:x2>x1");
        assert_eq!(bound_label(&parse_bound("C:natural", 2).unwrap()), "C:x1>x2");
        assert!(parse_bound("Q", 2).is_err());
    }

    #[test]
    fn decoder_spec() {
        let c: DecodeConfig = parse(r#"{"decoder": {"kind": "joyner"}, "r": 1, "errors": 12}"#).unwrap();
        assert_eq!(c.decoder.kind, DecoderKind::Joyner);
        assert_eq!(c.trials, 1);
    }
}
