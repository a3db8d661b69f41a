use crate::codes::PointEnsemble;
use crate::ff::{Field, Gf};
use crate::poly::{Monomial, MultiPoly};

use super::{delta_contains, ZerosError};

pub const MAX_ORACLE_POINTS: usize = 4096;

/// A polynomial with leading monomial X^i (any order) vanishing with
/// multiplicity >= r on the whole grid, for i outside Delta(r, s).
pub fn vanishing_witness(field: &Field, i: &[u32], r: u32, ensemble: &PointEnsemble) -> Result<MultiPoly, ZerosError> {
    let s = ensemble.sizes();
    if i.len() != s.len() {
        return Err(ZerosError::Shape(format!("{} exponents for {} coordinates", i.len(), s.len())));
    }
    if delta_contains(i, r, &s) {
        return Err(ZerosError::InsideDelta(i.to_vec()));
    }
    let m = i.len();
    let mut left = r;
    let mut rest = i.to_vec();
    let mut out = MultiPoly::constant(m, Gf::ONE);
    for j in 0..m {
        let c = (i[j] / s[j]).min(left);
        left -= c;
        rest[j] -= c * s[j];
        if c == 0 {
            continue;
        }
        let mut v = MultiPoly::constant(m, Gf::ONE);
        for &a in &ensemble.sets()[j] {
            let lin = MultiPoly::from_terms(m, field, [(Monomial::var(m, j, 1), Gf::ONE), (Monomial::one(m), field.neg(a))]);
            v = v.mul(field, &lin);
        }
        out = out.mul(field, &v.pow(field, c));
    }
    Ok(out.mul(field, &MultiPoly::monomial(Monomial::new(rest), Gf::ONE)))
}

/// Grid points where F has multiplicity >= r: all Hasse derivatives of
/// order below r vanish there.
pub fn zero_count_oracle(field: &Field, f: &MultiPoly, r: u32, ensemble: &PointEnsemble) -> Result<usize, ZerosError> {
    let n = ensemble.len();
    if n > MAX_ORACLE_POINTS {
        return Err(ZerosError::TooLarge(n));
    }
    let m = ensemble.dim();
    let mut alive = vec![true; n];
    let mut k = vec![0u32; m];
    loop {
        let deriv = f.hasse_derivative(field, &k);
        if !deriv.is_zero() {
            for (a, v) in alive.iter_mut().zip(deriv.evaluate_grid(field, ensemble)?) {
                *a &= v.is_zero();
            }
        }
        // next k with |k| < r
        let mut j = m;
        loop {
            if j == 0 {
                return Ok(alive.iter().filter(|&&a| a).count());
            }
            j -= 1;
            k[j] += 1;
            if k.iter().sum::<u32>() < r {
                break;
            }
            k[j] = 0;
        }
    }
}
