//! Mean relative improvement of D over the total-degree Schwartz-Zippel
//! count on Delta(r, q, ..., q).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{delta_contains, DCache};

/// One monomial of the mean.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeanTerm {
    pub exps: Vec<u32>,
    /// min{floor((i_1 + ... + i_m) q^{m-1} / r), q^m}
    pub baseline: u64,
    pub d: u64,
}

/// Every monomial of Delta(r, q, ..., q) with a nonzero baseline, in
/// lexicographic order of exponents.
pub fn mean_terms(m: usize, r: u32, q: u32) -> Vec<MeanTerm> {
    let s = vec![q; m];
    let cache = DCache::new(&s);
    let side = r * q;
    let qm1 = (q as u64).pow(m as u32 - 1);
    let qm = qm1 * q as u64;
    let total = (side as u64).pow(m as u32);
    let mut out = Vec::new();
    for mut idx in 0..total {
        let mut e = vec![0u32; m];
        for j in (0..m).rev() {
            e[j] = (idx % side as u64) as u32;
            idx /= side as u64;
        }
        if !delta_contains(&e, r, &s) {
            continue;
        }
        let deg: u64 = e.iter().map(|&x| x as u64).sum();
        let baseline = (deg * qm1 / r as u64).min(qm);
        if baseline == 0 {
            continue;
        }
        let d = cache.d(&e, r);
        out.push(MeanTerm { exps: e, baseline, d });
    }
    out
}

/// Exact mean of (baseline - D) / baseline over [`mean_terms`].
pub fn mean_improvement(m: usize, r: u32, q: u32) -> BigRational {
    let terms = mean_terms(m, r, q);
    if terms.is_empty() {
        return BigRational::zero();
    }
    // group by baseline: sum over b of (count_b * b - sum D) / b
    let mut groups: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    for t in &terms {
        let g = groups.entry(t.baseline).or_default();
        g.0 += 1;
        g.1 += t.d;
    }
    let mut acc = BigRational::zero();
    for (b, (count, dsum)) in groups {
        let num = BigInt::from(count) * BigInt::from(b) - BigInt::from(dsum);
        acc += BigRational::new(num, BigInt::from(b));
    }
    acc / BigInt::from(terms.len())
}

/// Truncated (not rounded) to three decimals, e.g. "0.363".
pub fn truncate3(x: &BigRational) -> String {
    let scaled = (x * BigInt::from(1000)).floor().to_integer();
    let v = scaled.to_i64().expect("small value");
    let sign = if v < 0 { "-" } else { "" };
    let v = v.abs();
    format!("{sign}{}.{:03}", v / 1000, v % 1000)
}
