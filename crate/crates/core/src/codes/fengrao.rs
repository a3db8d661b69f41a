//! Feng-Rao counts for the evaluation basis of a full grid. Brute force,
//! meant as an oracle for n <= 81.

use crate::ff::{Field, Gf, Matrix};
use crate::poly::{Monomial, MonomialOrder};

use super::monoset::exponent_box;
use super::{CodesError, MonomialSet, PointEnsemble};

pub const MAX_FENGRAO_N: usize = 81;

#[derive(Clone, Debug)]
pub struct FengRaoContext {
    /// Basis monomials, graded-lex ascending; b_l is `basis[l - 1]`.
    basis: Vec<Monomial>,
    /// rho[i][j] = rho-bar(b_{i+1} * b_{j+1})
    rho: Vec<Vec<usize>>,
}

impl FengRaoContext {
    pub fn new(field: &Field, ensemble: &PointEnsemble) -> Result<Self, CodesError> {
        let n = ensemble.len();
        if n > MAX_FENGRAO_N {
            return Err(CodesError::TooLarge(format!("Feng-Rao oracle needs n <= {MAX_FENGRAO_N}, got {n}")));
        }
        let sizes = ensemble.sizes();
        let ord = MonomialOrder::graded_lex(sizes.len());
        let mut basis: Vec<Monomial> = exponent_box(&sizes).collect();
        basis.sort_by(|a, b| ord.compare(a, b));
        let points: Vec<Vec<Gf>> = ensemble.points().collect();
        let vecs: Vec<Vec<Gf>> = basis
            .iter()
            .map(|m| {
                points
                    .iter()
                    .map(|p| {
                        p.iter()
                            .zip(&m.0)
                            .fold(Gf::ONE, |acc, (&a, &e)| field.mul(acc, field.pow(a, e as u64)))
                    })
                    .collect()
            })
            .collect();
        let inv = Matrix::from_rows(vecs.clone())?
            .inverse(field)
            .ok_or_else(|| CodesError::Params("evaluation vectors are not a basis".into()))?;
        let rho_bar = |v: &[Gf]| -> usize {
            let c = inv.vec_mul(field, v);
            c.iter().rposition(|x| !x.is_zero()).map_or(0, |l| l + 1)
        };
        let rho = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let prod: Vec<Gf> = vecs[i].iter().zip(&vecs[j]).map(|(&a, &b)| field.mul(a, b)).collect();
                        rho_bar(&prod)
                    })
                    .collect()
            })
            .collect();
        Ok(FengRaoContext { basis, rho })
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// 1-based index of a monomial in the basis.
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.basis.iter().position(|b| b == m).map(|i| i + 1)
    }

    pub fn rho_bar(&self, i: usize, j: usize) -> usize {
        self.rho[i - 1][j - 1]
    }

    /// Number of well-behaving pairs with rho-bar of the product equal to
    /// l, for every l = 1..n (index 0 of the result is l = 1).
    pub fn mu_all(&self) -> Vec<usize> {
        let n = self.len();
        // prefix[i][j] = max rho over [0..=i] x [0..=j]
        let mut prefix = vec![vec![0usize; n]; n];
        let mut mu = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                let up = if i > 0 { prefix[i - 1][j] } else { 0 };
                let left = if j > 0 { prefix[i][j - 1] } else { 0 };
                let before = up.max(left);
                let r = self.rho[i][j];
                if r > before {
                    mu[r - 1] += 1;
                }
                prefix[i][j] = before.max(r);
            }
        }
        mu
    }

    pub fn mu(&self, l: usize) -> usize {
        self.mu_all()[l - 1]
    }

    /// min{mu(l) : b_l not in the set}, the Feng-Rao bound for the dual.
    pub fn dual_bound(&self, set: &MonomialSet) -> Result<usize, CodesError> {
        let mu = self.mu_all();
        self.basis
            .iter()
            .zip(&mu)
            .filter(|(m, _)| !set.contains(m))
            .map(|(_, &v)| v)
            .min()
            .ok_or(CodesError::FullBox)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reed_solomon_case() {
        for k in 1..=3 {
            let f = Field::binary(k).unwrap();
            let e = PointEnsemble::canonical(&f, &[f.size()]).unwrap();
            let ctx = FengRaoContext::new(&f, &e).unwrap();
            let want: Vec<usize> = (1..=f.size() as usize).collect();
            assert_eq!(ctx.mu_all(), want);
        }
    }

    #[test]
    fn mu_dominates_product() {
        let f = Field::binary(2).unwrap();
        let e = PointEnsemble::canonical(&f, &[4, 4]).unwrap();
        let ctx = FengRaoContext::new(&f, &e).unwrap();
        let mu = ctx.mu_all();
        assert_eq!(mu[0], 1);
        for (m, &v) in ctx.basis().iter().zip(&mu) {
            let prod: usize = m.0.iter().map(|&i| i as usize + 1).product();
            assert!(v >= prod, "{m}: {v} < {prod}");
        }
    }

    #[test]
    fn size_guard() {
        let f = Field::binary(4).unwrap();
        let e = PointEnsemble::canonical(&f, &[16, 16]).unwrap();
        assert!(FengRaoContext::new(&f, &e).is_err());
    }
}
