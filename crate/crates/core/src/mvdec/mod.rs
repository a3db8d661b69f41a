//! Direct multivariate Guruswami-Sudan decoding of E(M, S).

mod factor;
mod plan;
mod tables;

use thiserror::Error;

use crate::codes::{CodeSpec, CodesError, PointEnsemble, Sense};
use crate::ff::{binomial_mod, Field, Gf, Matrix, MatrixError};
use crate::poly::{Monomial, MultiPoly, PolyError};
use crate::report::{hamming, Candidate, DecodeParams, DecodeReport};
use crate::zeros::{Bound, BoundTable, ZerosError};

pub use factor::{factor_step, DEFAULT_BUDGET};
pub use plan::{b_set, capability, capability_from_table, plan_for, BSetPlan, Capability};
pub use tables::{capability_row, CapabilityCell, TableColumn, TableGrid};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MvdecError {
    #[error("no error count is admissible at r = {r}")]
    NoCapability { r: u32 },
    #[error("E = {e} exceeds the capability {e_max}")]
    BeyondCapability { e: i64, e_max: i64 },
    #[error("factor step needs {needed} root combinations, budget is {budget}")]
    Budget { needed: u128, budget: u64 },
    #[error("interpolation system has only the zero solution")]
    Interpolation,
    #[error("{0}")]
    Params(String),
    #[error("received word has {got} symbols, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error(transparent)]
    Zeros(#[from] ZerosError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Codes(#[from] CodesError),
}

/// N(m, r) = binom(m + r, m + 1): Hasse conditions per point.
pub fn hasse_count(m: usize, r: u32) -> u64 {
    let (a, b) = ((m + r as usize) as u64, (m + 1) as u64);
    if b > a {
        return 0;
    }
    (0..b).fold(1u64, |acc, j| acc * (a - j) / (j + 1))
}

/// Multi-indices k in N^nvars with |k| <= r - 1, lexicographic.
pub fn hasse_indices(nvars: usize, r: u32) -> Vec<Vec<u32>> {
    fn go(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur[pos] = x;
            go(pos + 1, left - x, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if r > 0 {
        go(0, r - 1, &mut vec![0; nvars], &mut out);
    }
    out
}

/// Q = sum_i Q_i Z^i with Supp(Q_i) in the plan's sets and multiplicity
/// >= r at every (P_j, y_j). Z is the last of the m + 1 variables.
pub fn interpolate_mv(field: &Field, ensemble: &PointEnsemble, received: &[Gf], plan: &BSetPlan) -> Result<MultiPoly, MvdecError> {
    let n = ensemble.len();
    if received.len() != n {
        return Err(MvdecError::Length {
            expected: n,
            got: received.len(),
        });
    }
    let m = ensemble.dim();
    let p = field.characteristic();
    let columns: Vec<(&Monomial, u32)> = plan
        .sets
        .iter()
        .enumerate()
        .flat_map(|(i, set)| set.iter().map(move |k| (k, i as u32)))
        .collect();
    let mut max_exp = vec![0u32; m];
    for (k, _) in &columns {
        for (a, &b) in max_exp.iter_mut().zip(&k.0) {
            *a = (*a).max(b);
        }
    }
    let max_z = plan.sets.len() as u32;
    let ks = hasse_indices(m + 1, plan.r);
    let binom = |a: u32, b: u32| -> u32 {
        if b > a {
            0
        } else {
            binomial_mod(a as u64, b as u64, p)
        }
    };

    let mut mat = Matrix::with_cols(columns.len());
    let mut row = vec![Gf::ZERO; columns.len()];
    for (point, &y) in ensemble.points().zip(received) {
        let pw: Vec<Vec<Gf>> = point.iter().zip(&max_exp).map(|(&x, &e)| powers(field, x, e)).collect();
        let yp = powers(field, y, max_z);
        for k in &ks {
            for (slot, (mono, i)) in row.iter_mut().zip(&columns) {
                let mut c = binom(*i, k[m]) as u64;
                for j in 0..m {
                    if c == 0 {
                        break;
                    }
                    c = c * binom(mono.0[j], k[j]) as u64 % p as u64;
                }
                *slot = if c == 0 {
                    Gf::ZERO
                } else {
                    let mut v = field.mul(field.from_int(c as i64), yp[(*i - k[m]) as usize]);
                    for j in 0..m {
                        v = field.mul(v, pw[j][(mono.0[j] - k[j]) as usize]);
                    }
                    v
                };
            }
            mat.push_row(&row);
        }
    }
    let coeffs = mat.nullspace_vector(field).map_err(|_| MvdecError::Interpolation)?;
    Ok(MultiPoly::from_terms(
        m + 1,
        field,
        columns.iter().zip(coeffs).map(|((mono, i), c)| {
            let mut e = mono.0.clone();
            e.push(*i);
            (Monomial(e), c)
        }),
    ))
}

fn powers(field: &Field, x: Gf, max: u32) -> Vec<Gf> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut acc = Gf::ONE;
    for _ in 0..=max {
        out.push(acc);
        acc = field.mul(acc, x);
    }
    out
}

/// Decoding options; `e: None` decodes at the capability.
#[derive(Clone, Debug)]
pub struct MvOptions {
    pub e: Option<i64>,
    pub budget: u64,
}

impl Default for MvOptions {
    fn default() -> Self {
        MvOptions {
            e: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// The multivariate decoder for one code, multiplicity and bound.
pub struct MvDecoder {
    code: CodeSpec,
    table: BoundTable,
    cap: Capability,
}

impl MvDecoder {
    pub fn new(code: CodeSpec, r: u32, bound: &Bound) -> Result<Self, MvdecError> {
        if code.sense() != Sense::Primal {
            return Err(MvdecError::Params("multivariate decoding needs a primal code".into()));
        }
        let table = BoundTable::new(bound, r, &code.ensemble().sizes())?;
        let cap = capability_from_table(&table, code.monomials().monomials())?;
        Ok(MvDecoder { code, table, cap })
    }

    pub fn code(&self) -> &CodeSpec {
        &self.code
    }

    pub fn e_max(&self) -> i64 {
        self.cap.e_max
    }

    pub fn capability(&self) -> &Capability {
        &self.cap
    }

    pub fn decode(&self, received: &[Gf], opts: &MvOptions) -> Result<DecodeReport, MvdecError> {
        let e = opts.e.unwrap_or(self.cap.e_max);
        let plan = if e == self.cap.e_max {
            self.cap.plan.clone()
        } else {
            plan_for(&self.table, self.code.monomials().monomials(), e)?
        };
        let field = self.code.field();
        let q = interpolate_mv(field, self.code.ensemble(), received, &plan)?;
        let found = factor_step(field, &q, self.code.monomials().monomials(), self.code.ensemble(), opts.budget)?;
        let mut out = Vec::new();
        for f in found {
            let word = f.evaluate_grid(field, self.code.ensemble())?;
            let distance = hamming(&word, received);
            if distance as i64 <= e {
                out.push(Candidate { word, distance });
            }
        }
        let params = DecodeParams {
            r: plan.r,
            radius: e,
            z_degree: plan.t as u64,
            b_set_sizes: Some(plan.sets.iter().map(Vec::len).collect()),
            bound: Some(format!("{}:{}", self.table.bound.kind.letter(), self.table.bound.order_label())),
            unknowns: plan.unknowns() as u64,
            constraints: plan.constraints,
            ..Default::default()
        };
        Ok(DecodeReport::new("multivariate-gs", params, out))
    }
}

pub fn decode_mv(code: &CodeSpec, received: &[Gf], r: u32, bound: &Bound, opts: &MvOptions) -> Result<DecodeReport, MvdecError> {
    MvDecoder::new(code.clone(), r, bound)?.decode(received, opts)
}

/// s_1 s_2 (1 - (u / s_1)^(1/3)) for region-I optimal weights.
pub fn radius_estimate(s1: u32, s2: u32, u: u32) -> Result<f64, MvdecError> {
    if s2 == 0 || !s1.is_multiple_of(s2) || u > s1 {
        return Err(MvdecError::Params(format!("needs s2 | s1 and u <= s1, got s1={s1} s2={s2} u={u}")));
    }
    Ok(s1 as f64 * s2 as f64 * (1.0 - (u as f64 / s1 as f64).cbrt()))
}
