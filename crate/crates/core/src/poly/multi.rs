use std::collections::BTreeMap;
use std::fmt;

use crate::codes::PointEnsemble;
use crate::ff::{binomial_mod, Field, Gf};

use super::{Monomial, MonomialOrder, PolyError};

/// Sparse multivariate polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Gf>,
}

/// Multiplicity of a zero; the zero polynomial has infinite multiplicity
/// everywhere.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Multiplicity {
    pub fn at_least(self, r: u32) -> bool {
        match self {
            Multiplicity::Finite(v) => v >= r,
            Multiplicity::Infinite => true,
        }
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Gf) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: Gf) -> Self {
        let mut p = MultiPoly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// X_j
    pub fn var(nvars: usize, j: usize) -> Self {
        Self::monomial(Monomial::var(nvars, j, 1), Gf::ONE)
    }

    /// Sums repeated monomials and drops zeros.
    pub fn from_terms(nvars: usize, field: &Field, terms: impl IntoIterator<Item = (Monomial, Gf)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(field, m, c);
        }
        p
    }

    pub fn add_term(&mut self, field: &Field, m: Monomial, c: Gf) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Gf)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Gf {
        self.terms.get(m).copied().unwrap_or(Gf::ZERO)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, j: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[j]).max()
    }

    pub fn add(&self, field: &Field, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(field, m.clone(), c);
        }
        out
    }

    pub fn neg(&self, field: &Field) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn sub(&self, field: &Field, other: &MultiPoly) -> MultiPoly {
        self.add(field, &other.neg(field))
    }

    pub fn scale(&self, field: &Field, c: Gf) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, field: &Field, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(field, a.mul(b), field.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, field: &Field, e: u32) -> MultiPoly {
        let mut out = MultiPoly::constant(self.nvars, Gf::ONE);
        for _ in 0..e {
            out = out.mul(field, self);
        }
        out
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<&Monomial, PolyError> {
        ord.max(self.terms.keys()).ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(&Monomial, Gf), PolyError> {
        let m = self.leading_monomial(ord)?;
        Ok((m, self.terms[m]))
    }

    pub fn evaluate(&self, field: &Field, point: &[Gf]) -> Result<Gf, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::Arity {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = Gf::ZERO;
        for (m, c) in self.terms() {
            let mut t = c;
            for (&a, &e) in point.iter().zip(&m.0) {
                t = field.mul(t, field.pow(a, e as u64));
            }
            acc = field.add(acc, t);
        }
        Ok(acc)
    }

    /// (F(P_1), ..., F(P_n)) in the ensemble's row-major order.
    pub fn evaluate_grid(&self, field: &Field, ens: &PointEnsemble) -> Result<Vec<Gf>, PolyError> {
        if ens.dim() != self.nvars {
            return Err(PolyError::Arity {
                expected: self.nvars,
                got: ens.dim(),
            });
        }
        // powers[j][e][idx] = S_j[idx]^e for the exponents that occur
        let maxdeg: Vec<u32> = (0..self.nvars).map(|j| self.degree_in(j).unwrap_or(0)).collect();
        let powers: Vec<Vec<Vec<Gf>>> = ens
            .sets()
            .iter()
            .zip(&maxdeg)
            .map(|(set, &d)| (0..=d).map(|e| set.iter().map(|&a| field.pow(a, e as u64)).collect()).collect())
            .collect();
        let mut out = Vec::with_capacity(ens.len());
        for idx in ens.index_tuples() {
            let mut acc = Gf::ZERO;
            for (m, c) in self.terms() {
                let mut t = c;
                for j in 0..self.nvars {
                    t = field.mul(t, powers[j][m.0[j] as usize][idx[j]]);
                }
                acc = field.add(acc, t);
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// F(X + a)
    pub fn translate(&self, field: &Field, shift: &[Gf]) -> MultiPoly {
        assert_eq!(shift.len(), self.nvars);
        let p = field.characteristic();
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            // expand prod_j (X_j + a_j)^{e_j}
            let mut partial: Vec<(Vec<u32>, Gf)> = vec![(Vec::with_capacity(self.nvars), c)];
            for j in 0..self.nvars {
                let e = m.0[j];
                let mut next = Vec::new();
                for (exps, coef) in &partial {
                    for l in 0..=e {
                        let b = binomial_mod(e as u64, l as u64, p);
                        if b == 0 {
                            continue;
                        }
                        let f = field.mul(field.from_int(b as i64), field.pow(shift[j], (e - l) as u64));
                        if f.is_zero() {
                            continue;
                        }
                        let mut ex = exps.clone();
                        ex.push(l);
                        next.push((ex, field.mul(*coef, f)));
                    }
                }
                partial = next;
            }
            for (exps, coef) in partial {
                out.add_term(field, Monomial(exps), coef);
            }
        }
        out
    }

    /// F(X + Z) in 2m variables, X first.
    pub fn shifted_expansion(&self, field: &Field) -> MultiPoly {
        let m = self.nvars;
        let p = field.characteristic();
        let mut out = MultiPoly::zero(2 * m);
        for (mono, c) in self.terms() {
            let mut partial: Vec<(Vec<u32>, Gf)> = vec![(vec![0; 2 * m], c)];
            for j in 0..m {
                let e = mono.0[j];
                let mut next = Vec::new();
                for (exps, coef) in &partial {
                    for l in 0..=e {
                        let b = binomial_mod(e as u64, l as u64, p);
                        if b == 0 {
                            continue;
                        }
                        let mut ex = exps.clone();
                        ex[j] = e - l;
                        ex[m + j] = l;
                        next.push((ex, field.mul(*coef, field.from_int(b as i64))));
                    }
                }
                partial = next;
            }
            for (exps, coef) in partial {
                out.add_term(field, Monomial(exps), coef);
            }
        }
        out
    }

    /// Hasse derivative by the binomial formula:
    /// coefficient of X^e is binom(e + k, k) times the coefficient of X^{e+k}.
    pub fn hasse_derivative(&self, field: &Field, k: &[u32]) -> MultiPoly {
        assert_eq!(k.len(), self.nvars);
        let p = field.characteristic();
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            if !m.0.iter().zip(k).all(|(e, kk)| e >= kk) {
                continue;
            }
            let mut b = 1u32;
            for (&e, &kk) in m.0.iter().zip(k) {
                b = b * binomial_mod(e as u64, kk as u64, p) % p;
                if b == 0 {
                    break;
                }
            }
            if b == 0 {
                continue;
            }
            let reduced = Monomial(m.0.iter().zip(k).map(|(e, kk)| e - kk).collect());
            out.add_term(field, reduced, field.mul(c, field.from_int(b as i64)));
        }
        out
    }

    /// Hasse derivative read off the definition: the coefficient of Z^k in F(X + Z).
    pub fn hasse_derivative_by_expansion(&self, field: &Field, k: &[u32]) -> MultiPoly {
        let m = self.nvars;
        let full = self.shifted_expansion(field);
        let mut out = MultiPoly::zero(m);
        for (mono, c) in full.terms() {
            if mono.0[m..] == *k {
                out.add_term(field, Monomial(mono.0[..m].to_vec()), c);
            }
        }
        out
    }

    /// Lowest total degree of a term of F(X + a).
    pub fn multiplicity(&self, field: &Field, point: &[Gf]) -> Multiplicity {
        if self.is_zero() {
            return Multiplicity::Infinite;
        }
        let t = self.translate(field, point);
        Multiplicity::Finite(t.terms.keys().map(Monomial::degree).min().expect("nonzero"))
    }

    /// F with X_j replaced by the constant `a` (the variable count is kept).
    pub fn specialize(&self, field: &Field, j: usize, a: Gf) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            let mut e = m.0.clone();
            let f = field.pow(a, e[j] as u64);
            e[j] = 0;
            out.add_term(field, Monomial(e), field.mul(c, f));
        }
        out
    }

    /// Coefficients of F as a polynomial in X_j: entry d is the part
    /// multiplying X_j^d (with X_j removed).
    pub fn coefficients_in(&self, j: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(j).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(self.nvars); d + 1];
        if self.is_zero() {
            return out;
        }
        for (m, c) in self.terms() {
            let mut e = m.0.clone();
            let dj = e[j] as usize;
            e[j] = 0;
            out[dj].terms.insert(Monomial(e), c);
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", c.0)?;
            } else if c.0 == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", c.0)?;
            }
        }
        Ok(())
    }
}
