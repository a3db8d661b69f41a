//! Decoder output shared by the univariate and multivariate decoders.

use serde::{Deserialize, Serialize};

use crate::ff::Gf;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub word: Vec<Gf>,
    /// Hamming distance to the received word.
    pub distance: usize,
}

/// Parameters a decode ran with. Fields that do not apply are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeParams {
    pub r: u32,
    /// Radius the list is guaranteed complete for.
    pub radius: i64,
    /// Largest Z-degree of the interpolation polynomial.
    pub z_degree: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weighted_degree: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rs_dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_set_sizes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    pub unknowns: u64,
    pub constraints: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeReport {
    pub decoder: String,
    pub params: DecodeParams,
    /// Sorted by distance, then by word.
    pub candidates: Vec<Candidate>,
}

impl DecodeReport {
    pub fn new(decoder: &str, params: DecodeParams, mut candidates: Vec<Candidate>) -> Self {
        candidates.sort_by(|a, b| a.distance.cmp(&b.distance).then_with(|| a.word.cmp(&b.word)));
        candidates.dedup_by(|a, b| a.word == b.word);
        DecodeReport {
            decoder: decoder.to_string(),
            params,
            candidates,
        }
    }

    pub fn contains(&self, word: &[Gf]) -> bool {
        self.candidates.iter().any(|c| c.word == word)
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

pub fn hamming(a: &[Gf], b: &[Gf]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}
