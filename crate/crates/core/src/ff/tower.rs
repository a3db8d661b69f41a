//! Subfield towers GF(q) ⊂ GF(q^m): embedding, the map
//! φ(a_1..a_m) = a_1 b_1 + ... + a_m b_m, and the linearized polynomials
//! recovering each coordinate a_i from φ.

use std::sync::Arc;

use super::{Field, FieldError, Gf, Matrix};

/// A tower GF(q) ⊂ GF(q^m) with a fixed basis of GF(q^m) over GF(q).
#[derive(Clone, Debug)]
pub struct Tower {
    base: Arc<Field>,
    ext: Arc<Field>,
    m: usize,
    embedding: Vec<Gf>,
    projection: Vec<Option<Gf>>,
    basis: Vec<Gf>,
    coords: Vec<LinearizedPoly>,
}

/// Σ_v c_v T^{q^v}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedPoly {
    pub q: u64,
    pub coeffs: Vec<Gf>,
}

impl LinearizedPoly {
    pub fn eval(&self, field: &Field, t: Gf) -> Gf {
        let mut acc = Gf::ZERO;
        let mut power = t;
        for &c in &self.coeffs {
            acc = field.add(acc, field.mul(c, power));
            power = field.pow(power, self.q);
        }
        acc
    }

    /// Degree as an ordinary polynomial in T (0 for the zero polynomial).
    pub fn degree(&self) -> u64 {
        self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |v| self.q.pow(v as u32))
    }

    /// (exponent, coefficient) pairs of the nonzero terms.
    pub fn terms(&self) -> Vec<(u64, Gf)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(v, &c)| (self.q.pow(v as u32), c))
            .collect()
    }
}

impl Tower {
    /// Tower with the default basis (1, β, ..., β^{m-1}), β the generator
    /// of the extension field.
    pub fn new(base: Arc<Field>, ext: Arc<Field>) -> Result<Self, FieldError> {
        if base.characteristic() != ext.characteristic() || !ext.degree().is_multiple_of(base.degree()) {
            return Err(FieldError::IncompatibleDegrees {
                small: base.size(),
                big: ext.size(),
            });
        }
        let m = (ext.degree() / base.degree()) as usize;
        let beta = ext.generator();
        let basis = (0..m).map(|i| ext.pow(beta, i as u64)).collect();
        Self::with_basis(base, ext, basis)
    }

    pub fn with_basis(base: Arc<Field>, ext: Arc<Field>, basis: Vec<Gf>) -> Result<Self, FieldError> {
        if base.characteristic() != ext.characteristic() || !ext.degree().is_multiple_of(base.degree()) {
            return Err(FieldError::IncompatibleDegrees {
                small: base.size(),
                big: ext.size(),
            });
        }
        let m = (ext.degree() / base.degree()) as usize;
        if basis.len() != m {
            return Err(FieldError::Arity {
                expected: m,
                got: basis.len(),
            });
        }
        if let Some(b) = basis.iter().find(|b| !ext.contains(**b)) {
            return Err(FieldError::NotInField(b.0));
        }
        let embedding = Self::build_embedding(&base, &ext);
        let mut projection = vec![None; ext.size() as usize];
        for (a, &z) in embedding.iter().enumerate() {
            projection[z.0 as usize] = Some(Gf(a as u32));
        }

        let q = base.size() as u64;
        let mut moore = Matrix::zeros(m, m);
        for (j, &b) in basis.iter().enumerate() {
            let mut x = b;
            for v in 0..m {
                moore.set(v, j, x);
                x = ext.pow(x, q);
            }
        }
        let inv = moore.inverse(&ext).ok_or(FieldError::DependentBasis)?;
        let coords = (0..m)
            .map(|i| LinearizedPoly {
                q,
                coeffs: inv.row(i).to_vec(),
            })
            .collect();

        Ok(Tower {
            base,
            ext,
            m,
            embedding,
            projection,
            basis,
            coords,
        })
    }

    fn build_embedding(base: &Field, ext: &Field) -> Vec<Gf> {
        let (q, big) = (base.size() as u64, ext.size() as u64);
        let step = (big - 1) / (q - 1);
        let modulus = base.modulus();
        let is_root = |z: Gf| {
            let mut acc = Gf::ZERO;
            for &c in modulus.iter().rev() {
                acc = ext.add(ext.mul(acc, z), ext.from_int(c as i64));
            }
            acc.is_zero()
        };
        // Roots of the base modulus lie in the subfield {0} ∪ <γ^step>.
        let z = (0..q - 1)
            .map(|j| ext.gen_pow(j * step))
            .find(|&z| is_root(z))
            .expect("irreducible modulus has a root in every extension of its degree");
        let p = base.characteristic();
        base.elements()
            .map(|a| {
                let mut code = a.0;
                let mut acc = Gf::ZERO;
                let mut power = Gf::ONE;
                for _ in 0..base.degree() {
                    let digit = ext.from_int((code % p) as i64);
                    acc = ext.add(acc, ext.mul(digit, power));
                    power = ext.mul(power, z);
                    code /= p;
                }
                acc
            })
            .collect()
    }

    pub fn base(&self) -> &Arc<Field> {
        &self.base
    }

    pub fn ext(&self) -> &Arc<Field> {
        &self.ext
    }

    /// Extension degree m of GF(q^m) over GF(q).
    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn basis(&self) -> &[Gf] {
        &self.basis
    }

    #[inline]
    pub fn embed(&self, a: Gf) -> Gf {
        self.embedding[a.0 as usize]
    }

    /// Inverse of [`Tower::embed`] on the subfield image.
    #[inline]
    pub fn project(&self, z: Gf) -> Option<Gf> {
        self.projection[z.0 as usize]
    }

    pub fn in_subfield(&self, z: Gf) -> bool {
        self.project(z).is_some()
    }

    pub fn frobenius(&self, z: Gf) -> Gf {
        self.ext.pow(z, self.base.size() as u64)
    }

    pub fn phi(&self, point: &[Gf]) -> Result<Gf, FieldError> {
        if point.len() != self.m {
            return Err(FieldError::Arity {
                expected: self.m,
                got: point.len(),
            });
        }
        let mut acc = Gf::ZERO;
        for (&a, &b) in point.iter().zip(&self.basis) {
            if !self.base.contains(a) {
                return Err(FieldError::NotInField(a.0));
            }
            acc = self.ext.add(acc, self.ext.mul(self.embed(a), b));
        }
        Ok(acc)
    }

    /// F_1..F_m with F_i(φ(a)) = a_i (as embedded elements).
    pub fn coordinate_polynomials(&self) -> &[LinearizedPoly] {
        &self.coords
    }

    /// Recovers the point from φ(a).
    pub fn coordinates(&self, t: Gf) -> Option<Vec<Gf>> {
        self.coords.iter().map(|f| self.project(f.eval(&self.ext, t))).collect()
    }
}
