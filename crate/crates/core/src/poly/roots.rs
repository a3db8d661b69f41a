//! Roots f(X) of Q(X, Z) with deg f < k, found coefficient by coefficient
//! (Roth-Ruckenstein).

use crate::ff::{binomial_mod, Field, Gf};

use super::{MultiPoly, PolyError};

/// Dense bivariate polynomial, `c[b][a]` the coefficient of X^a Z^b.
type Dense = Vec<Vec<Gf>>;

fn to_dense(q: &MultiPoly) -> Dense {
    let bz = q.degree_in(1).unwrap_or(0) as usize;
    let ax = q.degree_in(0).unwrap_or(0) as usize;
    let mut c = vec![vec![Gf::ZERO; ax + 1]; bz + 1];
    for (m, v) in q.terms() {
        c[m.0[1] as usize][m.0[0] as usize] = v;
    }
    c
}

fn strip_x_power(c: &mut Dense) {
    let v = c.iter().filter_map(|row| row.iter().position(|x| !x.is_zero())).min().unwrap_or(0);
    if v > 0 {
        for row in c.iter_mut() {
            if row.len() > v {
                row.drain(..v);
            } else {
                row.clear();
            }
        }
    }
    while c.len() > 1 && c.last().is_some_and(|r| r.iter().all(|x| x.is_zero())) {
        c.pop();
    }
}

/// Q(X, XZ + g)
fn substitute(field: &Field, c: &Dense, g: Gf) -> Dense {
    let p = field.characteristic();
    let bz = c.len() - 1;
    let width = c.iter().map(Vec::len).max().unwrap_or(0) + bz;
    let mut out = vec![vec![Gf::ZERO; width]; bz + 1];
    for (b, row) in c.iter().enumerate() {
        for bp in 0..=b {
            let binom = binomial_mod(b as u64, bp as u64, p);
            if binom == 0 {
                continue;
            }
            let f = field.mul(field.from_int(binom as i64), field.pow(g, (b - bp) as u64));
            if f.is_zero() {
                continue;
            }
            field.axpy(&mut out[bp][bp..bp + row.len()], f, row);
        }
    }
    out
}

fn eval_z(field: &Field, c: &Dense, z: Gf) -> Gf {
    c.iter().rev().fold(Gf::ZERO, |acc, row| {
        field.add(field.mul(acc, z), row.first().copied().unwrap_or(Gf::ZERO))
    })
}

fn search(field: &Field, mut c: Dense, k: usize, prefix: &mut Vec<Gf>, out: &mut Vec<Vec<Gf>>) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    strip_x_power(&mut c);
    if c.len() == 1 {
        return;
    }
    for g in field.elements() {
        if eval_z(field, &c, g).is_zero() {
            prefix.push(g);
            search(field, substitute(field, &c, g), k, prefix, out);
            prefix.pop();
        }
    }
}

fn poly_mul(field: &Field, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Gf::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        field.axpy(&mut out[i..i + b.len()], x, b);
    }
    out
}

/// Whether Q(X, f(X)) = 0, f given by its coefficients (lowest first).
pub fn is_z_root(field: &Field, q: &MultiPoly, f: &[Gf]) -> bool {
    let c = to_dense(q);
    let mut acc: Vec<Gf> = Vec::new();
    for row in c.iter().rev() {
        acc = poly_mul(field, &acc, f);
        if acc.len() < row.len() {
            acc.resize(row.len(), Gf::ZERO);
        }
        for (x, &y) in acc.iter_mut().zip(row) {
            *x = field.add(*x, y);
        }
    }
    acc.iter().all(|x| x.is_zero())
}

/// Every f with deg f < k and Q(X, f(X)) = 0, as coefficient vectors of
/// length k (lowest degree first), sorted and verified.
/// Q must be a polynomial in the two variables (X, Z).
pub fn z_roots_univariate(field: &Field, q: &MultiPoly, k: usize) -> Result<Vec<Vec<Gf>>, PolyError> {
    if q.nvars() != 2 {
        return Err(PolyError::Arity {
            expected: 2,
            got: q.nvars(),
        });
    }
    if q.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    search(field, to_dense(q), k, &mut Vec::with_capacity(k), &mut out);
    out.retain(|f| is_z_root(field, q, f));
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn m(a: u32, b: u32) -> Monomial {
        Monomial::new(vec![a, b])
    }

    #[test]
    fn z_minus_x_cubed() {
        let f = Field::binary(3).unwrap();
        let q = MultiPoly::from_terms(2, &f, [(m(0, 1), Gf(1)), (m(3, 0), Gf(1))]);
        let roots = z_roots_univariate(&f, &q, 4).unwrap();
        assert_eq!(roots, vec![vec![Gf(0), Gf(0), Gf(0), Gf(1)]]);
    }

    #[test]
    fn two_linear_factors_over_gf5() {
        let f = Field::new(5, 1, None).unwrap();
        // (Z - X)(Z - 2X) = Z^2 - 3XZ + 2X^2
        let q = MultiPoly::from_terms(2, &f, [(m(0, 2), Gf(1)), (m(1, 1), f.from_int(-3)), (m(2, 0), Gf(2))]);
        let roots = z_roots_univariate(&f, &q, 2).unwrap();
        assert_eq!(roots, vec![vec![Gf(0), Gf(1)], vec![Gf(0), Gf(2)]]);
    }

    #[test]
    fn repeated_root_over_gf2() {
        let f = Field::binary(1).unwrap();
        let q = MultiPoly::from_terms(2, &f, [(m(0, 2), Gf(1)), (m(0, 0), Gf(1))]);
        assert_eq!(z_roots_univariate(&f, &q, 1).unwrap(), vec![vec![Gf(1)]]);
        assert_eq!(z_roots_univariate(&f, &q, 3).unwrap(), vec![vec![Gf(1), Gf(0), Gf(0)]]);
    }

    #[test]
    fn no_roots() {
        let f = Field::binary(2).unwrap();
        // Z^2 + Z + 1 has no root in GF(2) but does in GF(4)
        let f2 = Field::binary(1).unwrap();
        let q = MultiPoly::from_terms(2, &f2, [(m(0, 2), Gf(1)), (m(0, 1), Gf(1)), (m(0, 0), Gf(1))]);
        assert!(z_roots_univariate(&f2, &q, 2).unwrap().is_empty());
        assert_eq!(z_roots_univariate(&f, &q, 1).unwrap().len(), 2);
    }
}
