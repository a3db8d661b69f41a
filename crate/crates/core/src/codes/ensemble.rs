use std::collections::HashSet;

use crate::ff::{Field, Gf};

use super::CodesError;

/// S = S_1 × ... × S_m. Points are enumerated row-major with the last
/// coordinate varying fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointEnsemble {
    sets: Vec<Vec<Gf>>,
}

impl PointEnsemble {
    pub fn new(sets: Vec<Vec<Gf>>) -> Result<Self, CodesError> {
        if sets.is_empty() {
            return Err(CodesError::Ensemble("no coordinate sets".into()));
        }
        for (j, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(CodesError::Ensemble(format!("S_{} is empty", j + 1)));
            }
            let distinct: HashSet<_> = s.iter().collect();
            if distinct.len() != s.len() {
                return Err(CodesError::Ensemble(format!("S_{} has repeated elements", j + 1)));
            }
        }
        Ok(PointEnsemble { sets })
    }

    /// Each S_j is the first s_j entries of (0, 1, γ, γ², ...).
    pub fn canonical(field: &Field, sizes: &[u32]) -> Result<Self, CodesError> {
        let seq: Vec<Gf> = std::iter::once(Gf::ZERO)
            .chain((0..field.size() as u64 - 1).map(|e| field.gen_pow(e)))
            .collect();
        let sets = sizes
            .iter()
            .map(|&s| {
                if s == 0 || s > field.size() {
                    Err(CodesError::Ensemble(format!("size {s} does not fit in GF({})", field.size())))
                } else {
                    Ok(seq[..s as usize].to_vec())
                }
            })
            .collect::<Result<_, _>>()?;
        PointEnsemble::new(sets)
    }

    /// (F_q^*)^m with each axis ordered 1, γ, ..., γ^{q-2}.
    pub fn nonzero(field: &Field, m: usize) -> Self {
        let axis: Vec<Gf> = (0..field.size() as u64 - 1).map(|e| field.gen_pow(e)).collect();
        PointEnsemble { sets: vec![axis; m] }
    }

    pub fn sets(&self) -> &[Vec<Gf>] {
        &self.sets
    }

    pub fn dim(&self) -> usize {
        self.sets.len()
    }

    pub fn sizes(&self) -> Vec<u32> {
        self.sets.iter().map(|s| s.len() as u32).collect()
    }

    /// n = s_1 ... s_m
    pub fn len(&self) -> usize {
        self.sets.iter().map(Vec::len).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinate index tuples in enumeration order.
    pub fn index_tuples(&self) -> IndexTuples {
        IndexTuples {
            sizes: self.sets.iter().map(Vec::len).collect(),
            next: Some(vec![0; self.sets.len()]),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<Gf>> + '_ {
        self.index_tuples()
            .map(move |idx| idx.iter().zip(&self.sets).map(|(&i, s)| s[i]).collect())
    }

    pub fn point(&self, mut index: usize) -> Vec<Gf> {
        let mut out = vec![Gf::ZERO; self.dim()];
        for j in (0..self.dim()).rev() {
            let s = self.sets[j].len();
            out[j] = self.sets[j][index % s];
            index /= s;
        }
        out
    }

    pub fn check_field(&self, field: &Field) -> Result<(), CodesError> {
        match self.sets.iter().flatten().find(|a| !field.contains(**a)) {
            Some(a) => Err(CodesError::Ensemble(format!("element {} outside GF({})", a.0, field.size()))),
            None => Ok(()),
        }
    }
}

/// Iterator over index tuples of a box, last index fastest.
pub struct IndexTuples {
    sizes: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for IndexTuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut nxt = cur.clone();
        let mut j = nxt.len();
        loop {
            if j == 0 {
                break;
            }
            j -= 1;
            nxt[j] += 1;
            if nxt[j] < self.sizes[j] {
                self.next = Some(nxt);
                break;
            }
            nxt[j] = 0;
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sets() {
        let f = Field::binary(3).unwrap();
        let e = PointEnsemble::canonical(&f, &[4, 2]).unwrap();
        assert_eq!(e.sets()[0], vec![Gf(0), Gf(1), Gf(2), Gf(4)]);
        assert_eq!(e.len(), 8);
        let pts: Vec<_> = e.points().collect();
        assert_eq!(pts[1], vec![Gf(0), Gf(1)]);
        assert_eq!(pts[2], vec![Gf(1), Gf(0)]);
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(&e.point(i), p);
        }
        assert!(PointEnsemble::canonical(&f, &[9]).is_err());
    }

    #[test]
    fn nonzero_ensemble() {
        let f = Field::binary(3).unwrap();
        let e = PointEnsemble::nonzero(&f, 2);
        assert_eq!(e.len(), 49);
        assert!(e.points().all(|p| p.iter().all(|x| !x.is_zero())));
    }

    #[test]
    fn repeated_elements_rejected() {
        assert!(PointEnsemble::new(vec![vec![Gf(1), Gf(1)]]).is_err());
    }
}
