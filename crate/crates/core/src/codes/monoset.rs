use std::collections::BTreeSet;
use std::fmt;

use crate::poly::Monomial;
use crate::Rational;

use super::CodesError;

/// Where a monomial set came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetKind {
    Wrm { u: Rational, weights: Vec<Rational> },
    QaryRm { u: u32 },
    Mcj { delta: u64 },
    Hyperbolic { delta: u64 },
    Joyner,
    Custom,
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetKind::Wrm { u, weights } => {
                let w: Vec<String> = weights.iter().map(ToString::to_string).collect();
                write!(f, "wrm(u={u},w=({}))", w.join(","))
            }
            SetKind::QaryRm { u } => write!(f, "qary_rm(u={u})"),
            SetKind::Mcj { delta } => write!(f, "mcj(delta={delta})"),
            SetKind::Hyperbolic { delta } => write!(f, "hyperbolic(delta={delta})"),
            SetKind::Joyner => write!(f, "joyner"),
            SetKind::Custom => write!(f, "custom"),
        }
    }
}

/// A set of monomials with every exponent below the matching s_j.
/// Iteration order is the lexicographic order of exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    sizes: Vec<u32>,
    monomials: Vec<Monomial>,
    kind: SetKind,
}

/// All exponent vectors 0 <= i_j < s_j, last index fastest.
pub fn exponent_box(sizes: &[u32]) -> impl Iterator<Item = Monomial> + '_ {
    let total: u64 = sizes.iter().map(|&s| s as u64).product();
    (0..total).map(move |mut idx| {
        let mut e = vec![0u32; sizes.len()];
        for j in (0..sizes.len()).rev() {
            e[j] = (idx % sizes[j] as u64) as u32;
            idx /= sizes[j] as u64;
        }
        Monomial::new(e)
    })
}

impl MonomialSet {
    fn build(sizes: &[u32], kind: SetKind, keep: impl Fn(&Monomial) -> bool) -> Self {
        MonomialSet {
            sizes: sizes.to_vec(),
            monomials: exponent_box(sizes).filter(|m| keep(m)).collect(),
            kind,
        }
    }

    /// w_1 i_1 + ... + w_m i_m <= u, exact rational comparison.
    pub fn wrm(sizes: &[u32], u: Rational, weights: &[Rational]) -> Result<Self, CodesError> {
        if weights.len() != sizes.len() {
            return Err(CodesError::Params(format!(
                "{} weights for {} variables",
                weights.len(),
                sizes.len()
            )));
        }
        if weights.iter().any(|w| *w <= Rational::from_integer(0)) {
            return Err(CodesError::Params("weights must be positive".into()));
        }
        let w = weights.to_vec();
        Ok(Self::build(
            sizes,
            SetKind::Wrm {
                u,
                weights: weights.to_vec(),
            },
            |m| {
                let s: Rational = m.0.iter().zip(&w).map(|(&i, wi)| *wi * i as i64).sum();
                s <= u
            },
        ))
    }

    /// Total degree at most u.
    pub fn qary_rm(sizes: &[u32], u: u32) -> Self {
        Self::build(sizes, SetKind::QaryRm { u }, |m| m.degree() <= u)
    }

    /// (s_1 - i_1) ... (s_m - i_m) >= delta.
    pub fn mcj(sizes: &[u32], delta: u64) -> Self {
        Self::build(sizes, SetKind::Mcj { delta }, |m| footprint(sizes, m) >= delta)
    }

    /// (i_1 + 1) ... (i_m + 1) < delta.
    pub fn hyperbolic(sizes: &[u32], delta: u64) -> Self {
        Self::build(sizes, SetKind::Hyperbolic { delta }, |m| {
            m.0.iter().map(|&i| i as u64 + 1).product::<u64>() < delta
        })
    }

    /// {1} ∪ {X^i Y^j : i, j >= 1, i + j <= 5} on a 7 × 7 grid.
    pub fn joyner() -> Self {
        Self::build(&[7, 7], SetKind::Joyner, |m| {
            let (i, j) = (m.0[0], m.0[1]);
            (i == 0 && j == 0) || (i >= 1 && j >= 1 && i + j <= 5)
        })
    }

    pub fn custom(sizes: &[u32], monomials: impl IntoIterator<Item = Monomial>) -> Result<Self, CodesError> {
        let set: BTreeSet<Monomial> = monomials.into_iter().collect();
        for m in &set {
            if m.nvars() != sizes.len() || m.0.iter().zip(sizes).any(|(&i, &s)| i >= s) {
                return Err(CodesError::ExponentCap(m.clone()));
            }
        }
        Ok(MonomialSet {
            sizes: sizes.to_vec(),
            monomials: set.into_iter().collect(),
            kind: SetKind::Custom,
        })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn kind(&self) -> &SetKind {
        &self.kind
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.sizes.len()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.binary_search(m).is_ok()
    }

    /// Closed under taking divisors.
    pub fn is_divisor_closed(&self) -> bool {
        self.monomials.iter().all(|m| {
            (0..m.nvars()).all(|j| {
                if m.0[j] == 0 {
                    return true;
                }
                let mut d = m.clone();
                d.0[j] -= 1;
                self.contains(&d)
            })
        })
    }

    /// Divisibility-maximal members.
    pub fn border(&self) -> Vec<Monomial> {
        border(&self.monomials)
    }

    /// Largest total degree of a member.
    pub fn max_total_degree(&self) -> Option<u32> {
        self.monomials.iter().map(Monomial::degree).max()
    }

    /// Exponent vectors of the box that are not in the set.
    pub fn complement(&self) -> Vec<Monomial> {
        exponent_box(&self.sizes).filter(|m| !self.contains(m)).collect()
    }
}

/// Π (s_j - i_j)
pub fn footprint(sizes: &[u32], m: &Monomial) -> u64 {
    m.0.iter().zip(sizes).map(|(&i, &s)| (s as u64).saturating_sub(i as u64)).product()
}

/// Divisibility-maximal elements of a list of monomials.
pub fn border(monomials: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = monomials
        .iter()
        .filter(|m| !monomials.iter().any(|n| n != *m && m.divides(n)))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}
