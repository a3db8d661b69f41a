//! Guruswami-Sudan list decoding of Reed-Solomon codes, and decoders for
//! E(M, S) built on top of it.

mod subfield;

use std::sync::Arc;

use num_integer::Roots;
use serde::Serialize;
use thiserror::Error;

use crate::codes::CodesError;
use crate::ff::{binomial_mod, Field, FieldError, Gf, Matrix, MatrixError};
use crate::poly::{z_roots_univariate, Monomial, MultiPoly, PolyError};
use crate::report::{hamming, Candidate, DecodeParams, DecodeReport};

pub use subfield::{joyner_decode, subfield_subcode_decode, JoynerDecoder, SubfieldDecoder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RsdecError {
    #[error("invalid Reed-Solomon parameters: {0}")]
    Params(String),
    #[error("received word has {got} symbols, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("symbol {0} is not a field element")]
    Symbol(u32),
    #[error("decoder refuses: {0}")]
    Refused(String),
    #[error("interpolation system has only the zero solution")]
    Interpolation,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Codes(#[from] CodesError),
}

/// Parameters of one GS run at multiplicity r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GsParams {
    pub n: u64,
    pub k: u64,
    pub r: u32,
    /// Weight of Z, max(k - 1, 1).
    pub w: u64,
    /// Weighted degree cap.
    pub l: u64,
    /// Agreements that force Q(X, f(X)) = 0.
    pub a_min: u64,
    /// n - a_min; negative when nothing can be corrected.
    pub e_max: i64,
    /// Largest Z-degree allowed by the cap.
    pub t_z: u64,
    /// n r (r + 1) / 2 linear conditions.
    pub constraints: u64,
}

/// Monomials X^a Z^b with a + w b <= l.
fn count_monomials(w: u64, l: u64) -> u64 {
    (0..=l / w).map(|b| l - w * b + 1).sum()
}

pub fn gs_parameters(n: u64, k: u64, r: u32) -> Result<GsParams, RsdecError> {
    if k == 0 || k > n {
        return Err(RsdecError::Params(format!("need 1 <= k <= n, got n={n} k={k}")));
    }
    if r == 0 {
        return Err(RsdecError::Params("multiplicity must be positive".into()));
    }
    let w = (k - 1).max(1);
    let constraints = n * r as u64 * (r as u64 + 1) / 2;
    // count(l) grows roughly like l^2 / 2w; jump close, then walk
    let mut l = ((2 * w * constraints) as f64).sqrt() as u64;
    l = l.saturating_sub(w + 2);
    while count_monomials(w, l) > constraints && l > 0 {
        l -= 1;
    }
    while count_monomials(w, l) <= constraints {
        l += 1;
    }
    let a_min = l / r as u64 + 1;
    Ok(GsParams {
        n,
        k,
        r,
        w,
        l,
        a_min,
        e_max: n as i64 - a_min as i64,
        t_z: l / w,
        constraints,
    })
}

/// Limit of E_max as r grows: n - 1 - floor(sqrt(n (k - 1))), and 0 once
/// k - 1 >= n.
pub fn gs_capability_ultimate(n: u64, k: u64) -> u64 {
    if k == 0 || k > n {
        return 0;
    }
    n - 1 - (n * (k - 1)).sqrt()
}

/// The radius n - sqrt(n k) read off with an integer square root. Can
/// exceed [`gs_capability_ultimate`] by one.
pub fn gs_capability_ceiling(n: u64, k: u64) -> i64 {
    n as i64 - (n * k).sqrt() as i64
}

/// Reed-Solomon code: evaluations of polynomials of degree < k at n
/// distinct points.
#[derive(Clone, Debug)]
pub struct RsCode {
    field: Arc<Field>,
    points: Vec<Gf>,
    k: usize,
}

impl RsCode {
    pub fn new(field: Arc<Field>, points: Vec<Gf>, k: usize) -> Result<Self, RsdecError> {
        if let Some(p) = points.iter().find(|p| !field.contains(**p)) {
            return Err(RsdecError::Symbol(p.0));
        }
        let mut sorted = points.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(RsdecError::Params("evaluation points are not distinct".into()));
        }
        if k == 0 || k > points.len() {
            return Err(RsdecError::Params(format!("need 1 <= k <= n, got n={} k={k}", points.len())));
        }
        Ok(RsCode { field, points, k })
    }

    /// Full length code on every element of the field.
    pub fn full(field: Arc<Field>, k: usize) -> Result<Self, RsdecError> {
        let points = field.elements().collect();
        Self::new(field, points, k)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn points(&self) -> &[Gf] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Evaluates f (coefficients lowest first, any length) at every point.
    pub fn evaluate(&self, coeffs: &[Gf]) -> Vec<Gf> {
        let f = &self.field;
        self.points
            .iter()
            .map(|&x| coeffs.iter().rev().fold(Gf::ZERO, |acc, &c| f.add(f.mul(acc, x), c)))
            .collect()
    }

    pub fn encode(&self, message: &[Gf]) -> Result<Vec<Gf>, RsdecError> {
        if message.len() != self.k {
            return Err(RsdecError::Length {
                expected: self.k,
                got: message.len(),
            });
        }
        Ok(self.evaluate(message))
    }

    fn check_word(&self, received: &[Gf]) -> Result<(), RsdecError> {
        if received.len() != self.n() {
            return Err(RsdecError::Length {
                expected: self.n(),
                got: received.len(),
            });
        }
        if let Some(s) = received.iter().find(|s| !self.field.contains(**s)) {
            return Err(RsdecError::Symbol(s.0));
        }
        Ok(())
    }
}

/// Support of the interpolation polynomial: the first `count` pairs (a, b)
/// ordered by a + w b, then by b.
fn interpolation_support(w: u64, l: u64, count: usize) -> Vec<(u64, u64)> {
    let mut out = Vec::with_capacity(count);
    'outer: for deg in 0..=l {
        for b in 0..=deg / w {
            if out.len() == count {
                break 'outer;
            }
            out.push((deg - w * b, b));
        }
    }
    out
}

/// Q(X, Z) != 0 with multiplicity >= r at every (x_i, y_i) and
/// (1, w)-weighted degree <= l.
pub fn gs_interpolate(field: &Field, points: &[Gf], values: &[Gf], params: &GsParams) -> Result<MultiPoly, RsdecError> {
    let p = field.characteristic();
    let r = params.r as u64;
    let support = interpolation_support(params.w, params.l, params.constraints as usize + 1);
    let max_a = support.iter().map(|s| s.0).max().unwrap_or(0) as usize;
    let max_b = support.iter().map(|s| s.1).max().unwrap_or(0) as usize;
    let mut m = Matrix::with_cols(support.len());
    let mut row = vec![Gf::ZERO; support.len()];
    for (&x, &y) in points.iter().zip(values) {
        let xp = powers(field, x, max_a);
        let yp = powers(field, y, max_b);
        for alpha in 0..r {
            for beta in 0..r - alpha {
                for (slot, &(a, b)) in row.iter_mut().zip(&support) {
                    *slot = if a < alpha || b < beta {
                        Gf::ZERO
                    } else {
                        let c = binomial_mod(a, alpha, p) as u64 * binomial_mod(b, beta, p) as u64 % p as u64;
                        if c == 0 {
                            Gf::ZERO
                        } else {
                            let v = field.mul(xp[(a - alpha) as usize], yp[(b - beta) as usize]);
                            field.mul(field.from_int(c as i64), v)
                        }
                    };
                }
                m.push_row(&row);
            }
        }
    }
    let coeffs = m.nullspace_vector(field).map_err(|_| RsdecError::Interpolation)?;
    Ok(MultiPoly::from_terms(
        2,
        field,
        support
            .iter()
            .zip(coeffs)
            .map(|(&(a, b), c)| (Monomial::new(vec![a as u32, b as u32]), c)),
    ))
}

fn powers(field: &Field, x: Gf, max: usize) -> Vec<Gf> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = Gf::ONE;
    for _ in 0..=max {
        out.push(acc);
        acc = field.mul(acc, x);
    }
    out
}

/// A decoded polynomial and its codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsCandidate {
    pub message: Vec<Gf>,
    pub word: Vec<Gf>,
    pub distance: usize,
}

/// Every codeword within `radius` of the received word that GS finds.
/// `None` means E_max; the list is complete up to E_max.
pub fn gs_list(code: &RsCode, received: &[Gf], r: u32, radius: Option<i64>) -> Result<(GsParams, Vec<RsCandidate>), RsdecError> {
    code.check_word(received)?;
    let params = gs_parameters(code.n() as u64, code.k() as u64, r)?;
    let radius = radius.unwrap_or(params.e_max);
    if radius < 0 {
        return Ok((params, Vec::new()));
    }
    let q = gs_interpolate(&code.field, &code.points, received, &params)?;
    let mut out = Vec::new();
    for message in z_roots_univariate(&code.field, &q, code.k)? {
        let word = code.evaluate(&message);
        let distance = hamming(&word, received);
        if distance as i64 <= radius {
            out.push(RsCandidate { message, word, distance });
        }
    }
    Ok((params, out))
}

pub fn gs_decode_rs(code: &RsCode, received: &[Gf], r: u32) -> Result<DecodeReport, RsdecError> {
    let (params, list) = gs_list(code, received, r, None)?;
    let candidates = list
        .into_iter()
        .map(|c| Candidate {
            word: c.word,
            distance: c.distance,
        })
        .collect();
    Ok(DecodeReport::new("gs-rs", report_params(&params, params.e_max), candidates))
}

fn report_params(p: &GsParams, radius: i64) -> DecodeParams {
    DecodeParams {
        r: p.r,
        radius,
        z_degree: p.t_z,
        weighted_degree: Some(p.l),
        rs_dimension: Some(p.k as usize),
        unknowns: p.constraints + 1,
        constraints: p.constraints,
        ..Default::default()
    }
}
