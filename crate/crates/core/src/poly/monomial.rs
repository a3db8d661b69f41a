use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector X_1^{i_1} ... X_m^{i_m}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, j: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[j] = e;
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// self | other
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    /// self / other, when other divides self.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    Lex,
    GradedLex,
}

/// Lex or graded-lex order. `priority[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    /// Lex with X_m ≺ ... ≺ X_1.
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn graded_lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GradedLex,
            priority: (0..nvars).collect(),
        }
    }

    /// Panics unless `priority` is a permutation of 0..len.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut sorted = priority.clone();
        sorted.sort_unstable();
        assert!(sorted.iter().enumerate().all(|(i, &j)| i == j), "not a permutation");
        MonomialOrder { kind, priority }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.kind == OrderKind::GradedLex {
            match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for &j in &self.priority {
            match a.0[j].cmp(&b.0[j]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn max<'a>(&self, it: impl IntoIterator<Item = &'a Monomial>) -> Option<&'a Monomial> {
        it.into_iter().max_by(|a, b| self.compare(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_tie_break() {
        let ord = MonomialOrder::graded_lex(2);
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![3, 0]);
        assert_eq!(ord.compare(&a, &b), Ordering::Less);
        let swapped = MonomialOrder::with_priority(OrderKind::GradedLex, vec![1, 0]);
        assert_eq!(swapped.compare(&a, &b), Ordering::Greater);
    }

    #[test]
    fn divisibility() {
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![2, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.checked_div(&a), Some(Monomial::new(vec![1, 0])));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.to_string(), "x1*x2^2");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}
