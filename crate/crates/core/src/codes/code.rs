use std::sync::{Arc, OnceLock};

use crate::ff::{Echelon, Field, Gf, Matrix};
use crate::poly::{Monomial, MultiPoly};

use super::monoset::footprint;
use super::{CodesError, MonomialSet, PointEnsemble};

#[derive(Copy, Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Primal,
    Dual,
}

/// Footprint lower bound on the minimum distance.
#[derive(Copy, Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FootprintDistance {
    pub value: u64,
    /// The bound is the true minimum distance (divisor-closed set).
    pub exact: bool,
}

/// E(M, S) or its dual. Matrices are built on first use.
#[derive(Debug)]
pub struct CodeSpec {
    field: Arc<Field>,
    ensemble: PointEnsemble,
    monomials: MonomialSet,
    sense: Sense,
    primal_gen: OnceLock<Matrix>,
    generator: OnceLock<Matrix>,
    echelon: OnceLock<Echelon>,
}

impl Clone for CodeSpec {
    fn clone(&self) -> Self {
        CodeSpec {
            field: self.field.clone(),
            ensemble: self.ensemble.clone(),
            monomials: self.monomials.clone(),
            sense: self.sense,
            primal_gen: self.primal_gen.clone(),
            generator: self.generator.clone(),
            echelon: self.echelon.clone(),
        }
    }
}

impl CodeSpec {
    pub fn new(field: Arc<Field>, ensemble: PointEnsemble, monomials: MonomialSet, sense: Sense) -> Result<Self, CodesError> {
        ensemble.check_field(&field)?;
        if monomials.sizes() != ensemble.sizes().as_slice() {
            if let Some(m) = monomials
                .monomials()
                .iter()
                .find(|m| m.nvars() != ensemble.dim() || m.0.iter().zip(ensemble.sets()).any(|(&i, s)| i as usize >= s.len()))
            {
                return Err(CodesError::ExponentCap(m.clone()));
            }
        }
        Ok(CodeSpec {
            field,
            ensemble,
            monomials,
            sense,
            primal_gen: OnceLock::new(),
            generator: OnceLock::new(),
            echelon: OnceLock::new(),
        })
    }

    pub fn primal(field: Arc<Field>, ensemble: PointEnsemble, monomials: MonomialSet) -> Result<Self, CodesError> {
        Self::new(field, ensemble, monomials, Sense::Primal)
    }

    pub fn dual(field: Arc<Field>, ensemble: PointEnsemble, monomials: MonomialSet) -> Result<Self, CodesError> {
        Self::new(field, ensemble, monomials, Sense::Dual)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn ensemble(&self) -> &PointEnsemble {
        &self.ensemble
    }

    pub fn monomials(&self) -> &MonomialSet {
        &self.monomials
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn len(&self) -> usize {
        self.ensemble.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// ev_S of every monomial of the set, in set order.
    pub fn primal_generator(&self) -> &Matrix {
        self.primal_gen.get_or_init(|| {
            let f = &self.field;
            let sets = self.ensemble.sets();
            let caps = self.ensemble.sizes();
            // powers[j][e][idx] = S_j[idx]^e
            let powers: Vec<Vec<Vec<Gf>>> = sets
                .iter()
                .zip(&caps)
                .map(|(set, &s)| (0..s).map(|e| set.iter().map(|&a| f.pow(a, e as u64)).collect()).collect())
                .collect();
            let mut g = Matrix::with_cols(self.len());
            let tuples: Vec<Vec<usize>> = self.ensemble.index_tuples().collect();
            for m in self.monomials.monomials() {
                let row: Vec<Gf> = tuples
                    .iter()
                    .map(|idx| {
                        idx.iter()
                            .enumerate()
                            .fold(Gf::ONE, |acc, (j, &x)| f.mul(acc, powers[j][m.0[j] as usize][x]))
                    })
                    .collect();
                g.push_row(&row);
            }
            g
        })
    }

    /// Rows span the code. For the dual these are a kernel basis of the
    /// primal generator.
    pub fn generator_matrix(&self) -> &Matrix {
        self.generator.get_or_init(|| match self.sense {
            Sense::Primal => self.primal_generator().clone(),
            Sense::Dual => {
                let basis = self.primal_generator().nullspace(&self.field);
                let mut g = Matrix::with_cols(self.len());
                for v in &basis {
                    g.push_row(v);
                }
                g
            }
        })
    }

    /// A matrix whose kernel is the code.
    pub fn parity_check_matrix(&self) -> Matrix {
        match self.sense {
            Sense::Dual => self.primal_generator().clone(),
            Sense::Primal => {
                let basis = self.primal_generator().nullspace(&self.field);
                let mut h = Matrix::with_cols(self.len());
                for v in &basis {
                    h.push_row(v);
                }
                h
            }
        }
    }

    fn echelon(&self) -> &Echelon {
        self.echelon.get_or_init(|| self.generator_matrix().rref(&self.field))
    }

    /// |M| for a primal code (monomials of the box evaluate independently),
    /// n - |M| for the dual.
    pub fn dimension(&self) -> usize {
        match self.sense {
            Sense::Primal => self.monomials.len(),
            Sense::Dual => self.len() - self.monomials.len(),
        }
    }

    /// Rank of the generator matrix; should agree with [`Self::dimension`].
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn encode(&self, message: &[Gf]) -> Result<Vec<Gf>, CodesError> {
        let g = self.generator_matrix();
        if message.len() != g.rows() {
            return Err(CodesError::Params(format!(
                "message length {} for dimension {}",
                message.len(),
                g.rows()
            )));
        }
        Ok(g.vec_mul(&self.field, message))
    }

    /// Codeword of the polynomial with the given coefficients on the set.
    pub fn evaluate_poly(&self, f: &MultiPoly) -> Result<Vec<Gf>, CodesError> {
        Ok(f.evaluate_grid(&self.field, &self.ensemble)?)
    }

    pub fn contains(&self, word: &[Gf]) -> bool {
        word.len() == self.len() && self.echelon().contains(&self.field, word)
    }

    /// min over M of Π(s_j - i_j).
    pub fn footprint_distance(&self) -> Result<FootprintDistance, CodesError> {
        if self.sense != Sense::Primal {
            return Err(CodesError::NotPrimal);
        }
        let sizes = self.ensemble.sizes();
        let value = self
            .monomials
            .monomials()
            .iter()
            .map(|m| footprint(&sizes, m))
            .min()
            .ok_or_else(|| CodesError::Params("empty monomial set".into()))?;
        Ok(FootprintDistance {
            value,
            exact: self.monomials.is_divisor_closed(),
        })
    }

    /// True minimum distance by enumeration: all codewords up to scaling
    /// when q^k <= 2^20, else the least dependent set of parity-check
    /// columns when n <= 24.
    pub fn min_distance_bruteforce(&self) -> Result<u64, CodesError> {
        let k = self.dimension();
        if k == 0 {
            return Err(CodesError::Params("zero code".into()));
        }
        let q = self.field.size() as f64;
        if (k as f64) * q.log2() <= 20.0 {
            return Ok(self.enumerate_min_weight());
        }
        if self.len() <= 24 {
            return Ok(self.dependent_columns());
        }
        Err(CodesError::TooLarge(format!(
            "q^k = {}^{k} with n = {}",
            self.field.size(),
            self.len()
        )))
    }

    fn enumerate_min_weight(&self) -> u64 {
        let g = self.generator_matrix();
        let f = &self.field;
        let n = self.len();
        let mut best = n as u64;
        // first nonzero coefficient is 1; weights are scale invariant
        for lead in 0..g.rows() {
            let mut acc = g.row(lead).to_vec();
            walk(f, g, lead + 1, &mut acc, &mut best);
        }
        best
    }

    fn dependent_columns(&self) -> u64 {
        let h = self.parity_check_matrix();
        let f = &self.field;
        let n = self.len();
        let cols: Vec<Vec<Gf>> = (0..n).map(|c| (0..h.rows()).map(|r| h.get(r, c)).collect()).collect();
        for w in 1..=n {
            let mut idx: Vec<usize> = (0..w).collect();
            loop {
                let sub = Matrix::from_rows(idx.iter().map(|&c| cols[c].clone()).collect()).expect("equal lengths");
                if sub.rank(f) < w {
                    return w as u64;
                }
                if !next_combination(&mut idx, n) {
                    break;
                }
            }
        }
        n as u64 + 1
    }
}

fn walk(f: &Field, g: &Matrix, from: usize, acc: &mut Vec<Gf>, best: &mut u64) {
    let w = acc.iter().filter(|x| !x.is_zero()).count() as u64;
    if w < *best {
        *best = w;
    }
    for i in from..g.rows() {
        for c in f.elements().skip(1) {
            f.axpy(acc, c, g.row(i));
            walk(f, g, i + 1, acc, best);
            let back = f.neg(c);
            f.axpy(acc, back, g.row(i));
        }
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let w = idx.len();
    let mut i = w;
    while i > 0 {
        i -= 1;
        if idx[i] < n - w + i {
            idx[i] += 1;
            for j in i + 1..w {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Π_v Π_{j < i_v} (X_v - S_v[j]): leading monomial X^i in every order and
/// exactly n - Π(s_v - i_v) zeros on the grid.
pub fn distance_witness(field: &Field, exps: &[u32], ensemble: &PointEnsemble) -> Result<MultiPoly, CodesError> {
    if exps.len() != ensemble.dim() {
        return Err(CodesError::Params(format!(
            "{} exponents for {} coordinates",
            exps.len(),
            ensemble.dim()
        )));
    }
    let m = exps.len();
    let mut out = MultiPoly::constant(m, Gf::ONE);
    for (v, (&e, set)) in exps.iter().zip(ensemble.sets()).enumerate() {
        if e as usize > set.len() {
            return Err(CodesError::ExponentCap(Monomial::new(exps.to_vec())));
        }
        for &a in &set[..e as usize] {
            let lin = MultiPoly::from_terms(m, field, [(Monomial::var(m, v, 1), Gf::ONE), (Monomial::one(m), field.neg(a))]);
            out = out.mul(field, &lin);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn code(f: &Arc<Field>, sizes: &[u32], set: MonomialSet, sense: Sense) -> CodeSpec {
        let e = PointEnsemble::canonical(f, sizes).unwrap();
        CodeSpec::new(f.clone(), e, set, sense).unwrap()
    }

    #[test]
    fn three_codes_at_distance_8() {
        let f = Arc::new(Field::binary(4).unwrap());
        let cases = [
            (vec![8, 8], q(7), vec![q(1), q(1)], 36),
            (vec![16, 4], q(11), vec![q(1), q(1)], 42),
            (vec![16, 4], q(14), vec![q(1), q(2)], 48),
        ];
        for (sizes, u, w, dim) in cases {
            let c = code(&f, &sizes, MonomialSet::wrm(&sizes, u, &w).unwrap(), Sense::Primal);
            assert_eq!(c.dimension(), dim);
            assert_eq!(c.rank(), dim);
            assert_eq!(c.footprint_distance().unwrap(), FootprintDistance { value: 8, exact: true });
        }
    }

    #[test]
    fn small_bruteforce_matches_footprint() {
        let f = Arc::new(Field::binary(2).unwrap());
        let c = code(&f, &[4, 4], MonomialSet::qary_rm(&[4, 4], 3), Sense::Primal);
        assert_eq!(c.min_distance_bruteforce().unwrap(), c.footprint_distance().unwrap().value);
    }

    #[test]
    fn dual_is_orthogonal() {
        let f = Arc::new(Field::binary(3).unwrap());
        let set = MonomialSet::wrm(&[8, 4], q(5), &[q(1), q(2)]).unwrap();
        let p = code(&f, &[8, 4], set.clone(), Sense::Primal);
        let d = code(&f, &[8, 4], set, Sense::Dual);
        assert_eq!(d.generator_matrix().rows(), d.dimension());
        let prod = d.generator_matrix().mul(&f, &p.generator_matrix().transpose());
        assert!(prod.is_zero());
    }

    #[test]
    fn encode_zero_and_membership() {
        let f = Arc::new(Field::binary(2).unwrap());
        let c = code(&f, &[4, 4], MonomialSet::qary_rm(&[4, 4], 2), Sense::Primal);
        let w = c.encode(&vec![Gf::ZERO; c.dimension()]).unwrap();
        assert!(w.iter().all(|x| x.is_zero()));
        let w = c.encode(&[Gf(1), Gf(2), Gf(3), Gf(0), Gf(1), Gf(1)]).unwrap();
        assert!(c.contains(&w));
        let mut bad = w.clone();
        bad[0] = f.add(bad[0], Gf(1));
        assert!(!c.contains(&bad));
    }

    #[test]
    fn witnesses() {
        let f = Field::binary(2).unwrap();
        let e = PointEnsemble::canonical(&f, &[3, 3]).unwrap();
        let w = distance_witness(&f, &[0, 0], &e).unwrap();
        assert_eq!(w, MultiPoly::constant(2, Gf::ONE));
        let w = distance_witness(&f, &[1, 0], &e).unwrap();
        let zeros = w.evaluate_grid(&f, &e).unwrap().iter().filter(|x| x.is_zero()).count();
        assert_eq!(zeros, 3);
        let f16 = Field::binary(4).unwrap();
        let e = PointEnsemble::canonical(&f16, &[16, 4]).unwrap();
        let w = distance_witness(&f16, &[8, 3], &e).unwrap();
        let zeros = w.evaluate_grid(&f16, &e).unwrap().iter().filter(|x| x.is_zero()).count();
        assert_eq!(zeros, 56);
    }

    #[test]
    fn singleton_footprint_is_n() {
        let f = Arc::new(Field::binary(3).unwrap());
        let c = code(&f, &[8, 4], MonomialSet::qary_rm(&[8, 4], 0), Sense::Primal);
        assert_eq!(c.footprint_distance().unwrap().value, 32);
    }

    #[test]
    fn dual_distance_by_columns() {
        let f = Arc::new(Field::binary(2).unwrap());
        // dual of RM(u=1) on 4x4: large dimension, small n
        let c = code(&f, &[4, 4], MonomialSet::qary_rm(&[4, 4], 1), Sense::Dual);
        assert_eq!(c.dimension(), 13);
        assert_eq!(c.min_distance_bruteforce().unwrap(), 3);
    }
}
