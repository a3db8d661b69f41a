//! Parameter formulas for weighted Reed-Muller codes in two (and more)
//! variables, and for their duals.

use std::cmp::Ordering;

use num_integer::Roots;
use serde::Serialize;

use crate::Rational;

use super::monoset::{exponent_box, footprint};
use super::{CodesError, MonomialSet};

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// The three u-ranges of the optimal weight formula (w_1 = 1).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Region {
    I,
    II,
    III,
}

impl Region {
    pub fn of(s1: u32, s2: u32, u: Rational) -> Region {
        let (s1r, s2r) = (q(s1 as i64), q(s2 as i64));
        if u <= s1r - s1r / s2r {
            Region::I
        } else if u < s1r {
            Region::II
        } else {
            Region::III
        }
    }
}

/// w_2 making the footprint equal at both extreme exponents of
/// w_1 i_1 + w_2 i_2 = u.
pub fn optimal_w2(s1: u32, s2: u32, u: Rational, w1: Rational) -> Result<Rational, CodesError> {
    if s2 > s1 || s2 == 0 {
        return Err(CodesError::Params(format!("need 0 < s2 <= s1, got s1={s1}, s2={s2}")));
    }
    if w1 <= q(0) {
        return Err(CodesError::Params("w1 must be positive".into()));
    }
    let (s1r, s2r) = (q(s1 as i64), q(s2 as i64));
    let top = (s1r - 1) * w1 + (s2r - 1) * w1;
    if u <= q(0) || u >= top {
        return Err(CodesError::OutOfRange {
            u: u.to_string(),
            range: format!("0 < u < {top}"),
        });
    }
    Ok(if u <= (s1r - s1r / s2r) * w1 {
        w1 * s1r / s2r
    } else if u <= (s1r - 1) * w1 {
        w1 * s1r - u
    } else {
        w1
    })
}

/// A rational lower bound with the formula that produced it.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceBound {
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    /// Which of the eight two-variable cases applied (0 for the
    /// multivariate statement).
    pub case: u8,
    pub exact: bool,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Minimum-distance bound for RM(S_1, S_2, u, w_1, w_2), s_2 <= s_1.
pub fn wrm_distance_formula(s1: u32, s2: u32, u: Rational, w1: Rational, w2: Rational) -> Result<DistanceBound, CodesError> {
    if s2 > s1 {
        return Err(CodesError::Params(format!("need s2 <= s1, got s1={s1}, s2={s2}")));
    }
    if w1 <= q(0) || w2 <= q(0) {
        return Err(CodesError::Params("weights must be positive".into()));
    }
    let (s1r, s2r) = (q(s1 as i64), q(s2 as i64));
    let top = (s1r - 1) * w1 + (s2r - 1) * w2;
    if u < q(0) || u > top {
        return Err(CodesError::OutOfRange {
            u: u.to_string(),
            range: format!("0 <= u <= {top}"),
        });
    }
    let rho = w1 / w2;
    let by_u_w1 = (u / w1).is_integer();
    let by_u_w2 = (u / w2).is_integer();
    let pick = |value: Rational, case: u8, exact: bool| DistanceBound { value, case, exact };
    let tail = |case: u8, v: Rational| pick(v, case, v.is_integer());
    Ok(if rho <= s2r / s1r {
        if u <= (s1r - 1) * w1 {
            pick(s2r * (s1r - u / w1), 1, by_u_w1)
        } else {
            tail(2, s2r - (u - (s1r - 1) * w1) / w2)
        }
    } else if rho < q(1) {
        if u <= (s2r - 1) * w2 {
            pick((s2r - u / w2) * s1r, 3, by_u_w2)
        } else if u <= (s1r - q(1) / rho) * w1 {
            tail(4, s1r - (u - (s2r - 1) * w2) / w1)
        } else if u <= (s1r - 1) * w1 {
            pick((s1r - u / w1) * s2r, 5, by_u_w1)
        } else {
            tail(6, s2r - (u - (s1r - 1) * w1) / w2)
        }
    } else if u <= (s2r - 1) * w2 {
        pick((s2r - u / w2) * s1r, 7, by_u_w2)
    } else {
        tail(8, s1r - (u - (s2r - 1) * w2) / w1)
    })
}

/// Minimum-distance bound for RM(S_1, ..., S_m, u, w) when the sizes are
/// nonincreasing and either w_j / Π_{i≠j} s_i is nondecreasing or the
/// weights are nonincreasing. Errors when neither holds.
pub fn wrm_distance_multivar(sizes: &[u32], u: Rational, weights: &[Rational]) -> Result<DistanceBound, CodesError> {
    let m = sizes.len();
    if weights.len() != m || m == 0 {
        return Err(CodesError::Params("one weight per variable".into()));
    }
    if sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(CodesError::Params("sizes must be nonincreasing".into()));
    }
    if weights.iter().any(|w| *w <= q(0)) {
        return Err(CodesError::Params("weights must be positive".into()));
    }
    let top: Rational = sizes.iter().zip(weights).map(|(&s, w)| *w * (s as i64 - 1)).sum();
    if u < q(0) || u > top {
        return Err(CodesError::OutOfRange {
            u: u.to_string(),
            range: format!("0 <= u <= {top}"),
        });
    }
    let n: i64 = sizes.iter().map(|&s| s as i64).product();
    if u == q(0) {
        return Ok(DistanceBound {
            value: q(n),
            case: 0,
            exact: true,
        });
    }
    let scaled: Vec<Rational> = (0..m).map(|j| weights[j] * sizes[j] as i64 / n).collect();
    let order: Vec<usize> = if scaled.windows(2).all(|w| w[0] <= w[1]) {
        (0..m).collect()
    } else if weights.windows(2).all(|w| w[0] >= w[1]) {
        (0..m).rev().collect()
    } else {
        return Err(CodesError::Params("neither weight condition holds".into()));
    };
    // fill the variables in `order`, the partial one is t
    let mut rest = u;
    for (pos, &t) in order.iter().enumerate() {
        let full = weights[t] * (sizes[t] as i64 - 1);
        if rest <= full {
            let a = rest / weights[t];
            let others: i64 = order[pos + 1..].iter().map(|&j| sizes[j] as i64).product();
            return Ok(DistanceBound {
                value: (q(sizes[t] as i64) - a) * others,
                case: 0,
                exact: a.is_integer(),
            });
        }
        rest -= full;
    }
    unreachable!("u is within range")
}

/// Dimension formulas of the region propositions next to counted values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionReport {
    pub region: Region,
    pub w2: String,
    /// Footprint distance of the optimal WRM code (counted).
    pub distance: u64,
    pub wrm_formula: f64,
    pub wrm_counted: usize,
    /// Largest dimension of a q-ary RM code over S × S with at least the
    /// same distance, from the proposition.
    pub rm_formula: f64,
    /// Same quantity found by search, when s_1 s_2 is a square.
    pub rm_counted: Option<usize>,
    /// Divisibility assumptions of the proposition fail.
    pub approximate: bool,
}

fn wrm_set(s1: u32, s2: u32, u: Rational) -> Result<MonomialSet, CodesError> {
    if u == q(0) {
        return Ok(MonomialSet::qary_rm(&[s1, s2], 0));
    }
    let w2 = optimal_w2(s1, s2, u, q(1))?;
    MonomialSet::wrm(&[s1, s2], u, &[q(1), w2])
}

fn min_footprint(set: &MonomialSet) -> u64 {
    set.monomials().iter().map(|m| footprint(set.sizes(), m)).min().unwrap_or(0)
}

/// Best dimension of RM(S, S, u', 1, 1) with footprint distance >= d.
fn best_rm_dimension(s: u32, d: u64) -> usize {
    (0..=2 * (s - 1))
        .rev()
        .map(|u| MonomialSet::qary_rm(&[s, s], u))
        .find(|set| min_footprint(set) >= d)
        .map_or(0, |set| set.len())
}

/// Optimal WRM (w_1 = 1) against the q-ary RM codes over S × S with
/// s^2 = s_1 s_2, for integer u.
pub fn region_dimensions(s1: u32, s2: u32, u: u32) -> Result<RegionReport, CodesError> {
    if !(1 < s2 && s2 < s1) {
        return Err(CodesError::Params(format!("need 1 < s2 < s1, got s1={s1}, s2={s2}")));
    }
    let ur = q(u as i64);
    let w2 = optimal_w2(s1, s2, ur, q(1))?;
    let set = MonomialSet::wrm(&[s1, s2], ur, &[q(1), w2])?;
    let distance = min_footprint(&set);
    let region = Region::of(s1, s2, ur);
    let prod = s1 as u64 * s2 as u64;
    let s_int = prod.sqrt();
    let square = s_int * s_int == prod;
    let s = (prod as f64).sqrt();
    let (s1f, s2f, uf) = (s1 as f64, s2 as f64, u as f64);
    let ratio = s2f / s1f;
    let (wrm_formula, rm_formula, divisible) = match region {
        Region::I => (
            0.5 * (uf * uf * ratio + uf) + uf * ratio + 1.0,
            0.5 * (ratio * uf * uf + 3.0 * uf * ratio.sqrt() + 2.0),
            s1.is_multiple_of(s2) && (u as u64 * s2 as u64).is_multiple_of(s1 as u64),
        ),
        Region::II => {
            let du = s1f - uf;
            let wrm = s1f * s2f - s2f * s2f * du / 2.0 + s2f - s2f * du / 2.0;
            let rm = if uf >= s1f - s / s2f {
                s1f * s2f - du * s2f * (du * s2f - 1.0) / 2.0
            } else {
                let x = s2f * uf / s;
                0.5 * (x + 2.0) * (x + 1.0)
            };
            (wrm, rm, true)
        }
        Region::III => {
            let d = s1f + s2f - 1.0 - uf;
            (s1f * s2f - d * (d - 1.0) / 2.0, s * s - d * (d - 1.0) / 2.0, true)
        }
    };
    Ok(RegionReport {
        region,
        w2: w2.to_string(),
        distance,
        wrm_formula,
        wrm_counted: set.len(),
        rm_formula,
        rm_counted: square.then(|| best_rm_dimension(s_int as u32, distance)),
        approximate: !(square && divisible),
    })
}

/// One point of a dimension/distance curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvePoint {
    pub u: u32,
    pub dimension: usize,
    pub distance: u64,
}

/// Optimal WRM codes over an s_1 × s_2 grid for every integer u from 0 up
/// to the last admissible value.
pub fn exto_curve(s1: u32, s2: u32) -> Result<Vec<CurvePoint>, CodesError> {
    let (a, b) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
    let mut out = Vec::new();
    for u in 0..(a + b - 2) {
        let set = wrm_set(a, b, q(u as i64))?;
        out.push(CurvePoint {
            u,
            dimension: set.len(),
            distance: min_footprint(&set),
        });
    }
    Ok(out)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DominanceVerdict {
    FirstBetter,
    SecondBetter,
    Tie,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dominance {
    pub first_dimension: usize,
    pub second_dimension: usize,
    pub verdict: DominanceVerdict,
}

/// Best optimal-WRM dimension at footprint distance >= d on each grid.
pub fn dominance_check(first: (u32, u32), second: (u32, u32), d: u64) -> Result<Dominance, CodesError> {
    let best = |(s1, s2): (u32, u32)| -> Result<usize, CodesError> {
        Ok(exto_curve(s1, s2)?
            .into_iter()
            .filter(|p| p.distance >= d)
            .map(|p| p.dimension)
            .max()
            .unwrap_or(0))
    };
    let (a, b) = (best(first)?, best(second)?);
    Ok(Dominance {
        first_dimension: a,
        second_dimension: b,
        verdict: match a.cmp(&b) {
            Ordering::Greater => DominanceVerdict::FirstBetter,
            Ordering::Less => DominanceVerdict::SecondBetter,
            Ordering::Equal => DominanceVerdict::Tie,
        },
    })
}

/// min{(i_1 + 1) ... (i_m + 1) : X^i in the box but not in the set}.
pub fn dual_designed_distance(set: &MonomialSet) -> Result<u64, CodesError> {
    exponent_box(set.sizes())
        .filter(|m| !set.contains(m))
        .map(|m| m.0.iter().map(|&i| i as u64 + 1).product::<u64>())
        .min()
        .ok_or(CodesError::FullBox)
}

/// {w·i < Σ(s_j - 1)w_j - u}: its dual has the dimension of WRM(u, w).
pub fn dual_wrm(sizes: &[u32], u: Rational, weights: &[Rational]) -> Result<MonomialSet, CodesError> {
    if weights.len() != sizes.len() {
        return Err(CodesError::Params("one weight per variable".into()));
    }
    let top: Rational = sizes.iter().zip(weights).map(|(&s, w)| *w * (s as i64 - 1)).sum();
    let cap = top - u;
    let all = exponent_box(sizes).filter(|m| {
        let v: Rational = m.0.iter().zip(weights).map(|(&i, w)| *w * i as i64).sum();
        v < cap
    });
    MonomialSet::custom(sizes, all)
}
