//! Bounds on the number of grid zeros of multiplicity at least r.

mod dfunc;
mod mean;
mod witness;

pub use dfunc::{d_bruteforce, d_closed_two_var, DCache};
pub use mean::{mean_improvement, mean_terms, truncate3, MeanTerm};
pub use witness::{vanishing_witness, zero_count_oracle, MAX_ORACLE_POINTS};

pub use crate::codes::border;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::PolyError;
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZerosError {
    #[error("exponent {0:?} lies outside Delta(r, s)")]
    OutsideDelta(Vec<u32>),
    #[error("exponent {0:?} lies inside Delta(r, s)")]
    InsideDelta(Vec<u32>),
    #[error("u = {u} must not exceed r q = {rq}")]
    PwRange { u: u64, rq: u64 },
    #[error("the closed forms need two variables, got {0}")]
    NotTwoVariables(usize),
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("{0}")]
    Shape(String),
    #[error("grid of {0} points is too large for the oracle")]
    TooLarge(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// floor(i_1/s_1) + ... + floor(i_m/s_m) < r
pub fn delta_contains(i: &[u32], r: u32, s: &[u32]) -> bool {
    i.iter().zip(s).map(|(&a, &b)| a / b).sum::<u32>() < r
}

/// (i_1 s_2...s_m + ... + s_1...s_{m-1} i_m) / r, not capped.
pub fn sz_mult_bound(i: &[u32], r: u32, s: &[u32]) -> Rational {
    let n: i64 = s.iter().map(|&x| x as i64).product();
    let num: i64 = i.iter().zip(s).map(|(&a, &b)| a as i64 * (n / b as i64)).sum();
    Rational::new(num, r as i64)
}

/// u q^{m-1} / r for a polynomial of total degree u on F_q^m.
pub fn sz_total_degree(u: u64, r: u32, q_: u64, m: u32) -> Rational {
    Rational::new(u as i64 * (q_ as i64).pow(m - 1), r as i64)
}

/// Binomial coefficient, zero when k < 0 or k > n (also for negative n).
fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, j| acc * (n - j) / (j + 1))
}

/// The Pellikaan-Wu bound for total degree u on F_q^m. u = r q is
/// accepted as the continuous endpoint (the value is then q^m).
pub fn pw_bound(u: u64, r: u32, q_: u64, m: u32) -> Result<Rational, ZerosError> {
    if r == 0 {
        return Err(ZerosError::ZeroMultiplicity);
    }
    let rq = r as u64 * q_;
    if u > rq {
        return Err(ZerosError::PwRange { u, rq });
    }
    let (m, r) = (m as i64, r as i64);
    let qi = q_ as i64;
    let w = (u / q_) as i64;
    let qm = qi.pow(m as u32);
    let num = binom(m + r - 1, m) * qm + (u as i64 - qi * w) * binom(m + r - w - 2, m - 1) * qm / qi - binom(m + r - w - 1, m) * qm;
    Ok(Rational::new(num, binom(m + r - 1, r - 1)))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Schwartz-Zippel with multiplicity, per exponent.
    Sz,
    /// Two-variable closed forms.
    ClosedForm,
    /// The recursive D function.
    DRecursive,
}

impl BoundKind {
    pub fn letter(self) -> &'static str {
        match self {
            BoundKind::Sz => "S",
            BoundKind::ClosedForm => "C",
            BoundKind::DRecursive => "D",
        }
    }
}

/// A bound together with the variable order it is applied in:
/// `order[k]` is the original variable used as the k-th argument.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bound {
    pub kind: BoundKind,
    pub order: Vec<usize>,
}

impl Bound {
    pub fn natural(kind: BoundKind, m: usize) -> Self {
        Bound {
            kind,
            order: (0..m).collect(),
        }
    }

    /// Reversed variables; for two variables this is D(i_2, i_1, r, s_2, s_1).
    pub fn reversed(kind: BoundKind, m: usize) -> Self {
        Bound {
            kind,
            order: (0..m).rev().collect(),
        }
    }

    pub fn order_label(&self) -> String {
        let v: Vec<String> = self.order.iter().map(|j| format!("x{}", j + 1)).collect();
        v.join(">")
    }

    fn permute<T: Copy>(&self, v: &[T]) -> Vec<T> {
        self.order.iter().map(|&j| v[j]).collect()
    }

    /// Upper bound on the zeros of multiplicity >= r of a polynomial with
    /// leading exponent `i` (lex order of `self.order`). Outside Delta the
    /// value is n.
    pub fn value(&self, i: &[u32], r: u32, s: &[u32], cache: Option<&DCache>) -> Result<Rational, ZerosError> {
        if i.len() != s.len() || self.order.len() != s.len() {
            return Err(ZerosError::Shape(format!(
                "{} exponents, {} sizes, order of length {}",
                i.len(),
                s.len(),
                self.order.len()
            )));
        }
        let n: i64 = s.iter().map(|&x| x as i64).product();
        if !delta_contains(i, r, s) {
            return Ok(q(n));
        }
        let (pi, ps) = (self.permute(i), self.permute(s));
        Ok(match self.kind {
            BoundKind::Sz => sz_mult_bound(&pi, r, &ps),
            BoundKind::ClosedForm => {
                if s.len() != 2 {
                    return Err(ZerosError::NotTwoVariables(s.len()));
                }
                d_closed_two_var(pi[0], pi[1], r, ps[0], ps[1])?
            }
            BoundKind::DRecursive => {
                let v = match cache {
                    Some(c) if c.sizes() == ps.as_slice() => c.d(&pi, r),
                    _ => DCache::new(&ps).d(&pi, r),
                };
                q(v as i64)
            }
        })
    }
}

/// Largest integer E with v < n - E, or -1 when there is none.
pub fn level(v: Rational, n: u64) -> i64 {
    let x = q(n as i64) - v;
    x.ceil().to_integer() - 1
}

/// The level of every exponent of the box Π [0, r s_j).
#[derive(Clone, Debug)]
pub struct BoundTable {
    pub r: u32,
    pub sizes: Vec<u32>,
    pub bound: Bound,
    dims: Vec<usize>,
    levels: Vec<i32>,
}

impl BoundTable {
    pub fn new(bound: &Bound, r: u32, s: &[u32]) -> Result<Self, ZerosError> {
        if r == 0 {
            return Err(ZerosError::ZeroMultiplicity);
        }
        if bound.kind == BoundKind::ClosedForm && s.len() != 2 {
            return Err(ZerosError::NotTwoVariables(s.len()));
        }
        let n: u64 = s.iter().map(|&x| x as u64).product();
        let dims: Vec<usize> = s.iter().map(|&x| (x * r) as usize).collect();
        let total: usize = dims.iter().product();
        let cache = (bound.kind == BoundKind::DRecursive).then(|| DCache::new(&bound.permute(s)));
        let mut levels = Vec::with_capacity(total);
        let mut e = vec![0u32; s.len()];
        for _ in 0..total {
            let lv = if delta_contains(&e, r, s) {
                level(bound.value(&e, r, s, cache.as_ref())?, n)
            } else {
                -1
            };
            levels.push(lv.clamp(-1, i32::MAX as i64) as i32);
            for j in (0..e.len()).rev() {
                e[j] += 1;
                if (e[j] as usize) < dims[j] {
                    break;
                }
                e[j] = 0;
            }
        }
        Ok(BoundTable {
            r,
            sizes: s.to_vec(),
            bound: bound.clone(),
            dims,
            levels,
        })
    }

    pub fn n(&self) -> u64 {
        self.sizes.iter().map(|&x| x as u64).product()
    }

    /// Level of an exponent; -1 outside the box (hence outside Delta).
    pub fn level(&self, e: &[u32]) -> i32 {
        let mut idx = 0usize;
        for (j, &x) in e.iter().enumerate() {
            if x as usize >= self.dims[j] {
                return -1;
            }
            idx = idx * self.dims[j] + x as usize;
        }
        self.levels[idx]
    }

    /// Exponents of Delta(r, s), last coordinate fastest.
    pub fn delta_exponents(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        let total: usize = self.dims.iter().product();
        (0..total).filter_map(move |mut idx| {
            let mut e = vec![0u32; self.dims.len()];
            for j in (0..e.len()).rev() {
                e[j] = (idx % self.dims[j]) as u32;
                idx /= self.dims[j];
            }
            delta_contains(&e, self.r, &self.sizes).then_some(e)
        })
    }
}
