//! B-sets, the capability search and the interpolation support plan.

use std::cmp::Reverse;

use serde::Serialize;

use crate::codes::{border, MonomialSet};
use crate::poly::{Monomial, MonomialOrder};
use crate::zeros::{delta_contains, Bound, BoundKind, BoundTable, DCache};
use crate::Rational;

use super::{hasse_count, MvdecError};

/// Support of the interpolation polynomial: `sets[i]` is B(i, E, r) for
/// i < t and the last entry is the truncated B'(t).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BSetPlan {
    pub r: u32,
    pub e: i64,
    pub t: usize,
    pub bound: Bound,
    pub sets: Vec<Vec<Monomial>>,
    /// |B(t)| before truncation.
    pub full_last: usize,
    /// n N(m, r).
    pub constraints: u64,
}

impl BSetPlan {
    pub fn unknowns(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Capability {
    pub e_max: i64,
    pub plan: BSetPlan,
}

/// B(i, E, r) by its definition: K in Delta with bound(K M^i) < n - E for
/// every M on the border of `set`. Exact rational comparison.
pub fn b_set(i: u32, e: i64, r: u32, set: &MonomialSet, bound: &Bound) -> Result<Vec<Monomial>, MvdecError> {
    let s = set.sizes().to_vec();
    let n: i64 = s.iter().map(|&x| x as i64).product();
    let edge = border(set.monomials());
    let cache = (bound.kind == BoundKind::DRecursive).then(|| DCache::new(&bound.order.iter().map(|&j| s[j]).collect::<Vec<_>>()));
    let limit = Rational::from_integer(n - e);
    let dims: Vec<u32> = s.iter().map(|&x| x * r).collect();
    let total: u64 = dims.iter().map(|&x| x as u64).product();
    let mut out = Vec::new();
    for mut idx in 0..total {
        let mut k = vec![0u32; s.len()];
        for j in (0..s.len()).rev() {
            k[j] = (idx % dims[j] as u64) as u32;
            idx /= dims[j] as u64;
        }
        if !delta_contains(&k, r, &s) {
            continue;
        }
        let mut ok = true;
        for m in &edge {
            let km: Vec<u32> = k.iter().zip(&m.0).map(|(&a, &b)| a + i * b).collect();
            if bound.value(&km, r, &s, cache.as_ref())? >= limit {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(Monomial(k));
        }
    }
    let ord = MonomialOrder::graded_lex(s.len());
    out.sort_by(|a, b| ord.compare(a, b));
    Ok(out)
}

/// Every (K, i) with K M^i inside the bound's range for all border M,
/// tagged with the largest E it admits.
struct Levels {
    n: u64,
    m: usize,
    constraints: u64,
    /// Only the constant monomial: B(i) does not depend on i.
    constant_only: bool,
    entries: Vec<(Monomial, u32, i32)>,
}

impl Levels {
    fn new(table: &BoundTable, monomials: &[Monomial]) -> Result<Self, MvdecError> {
        if monomials.is_empty() {
            return Err(MvdecError::Params("empty monomial set".into()));
        }
        let edge = border(monomials);
        let constant_only = edge.iter().all(Monomial::is_one);
        let mut entries = Vec::new();
        for k in table.delta_exponents() {
            if constant_only {
                let lv = table.level(&k);
                if lv >= 0 {
                    entries.push((Monomial(k), 0, lv));
                }
                continue;
            }
            let mut i = 0u32;
            loop {
                let mut lv = i32::MAX;
                for m in &edge {
                    let km: Vec<u32> = k.iter().zip(&m.0).map(|(&a, &b)| a + i * b).collect();
                    lv = lv.min(table.level(&km));
                    if lv < 0 {
                        break;
                    }
                }
                if lv < 0 {
                    break;
                }
                entries.push((Monomial(k.clone()), i, lv));
                i += 1;
            }
        }
        let m = table.sizes.len();
        let n = table.n();
        Ok(Levels {
            n,
            m,
            constraints: n * hasse_count(m, table.r),
            constant_only,
            entries,
        })
    }

    fn e_max(&self) -> Option<i64> {
        if self.constant_only {
            return self.entries.iter().map(|e| e.2 as i64).max();
        }
        let mut lv: Vec<i32> = self.entries.iter().map(|e| e.2).collect();
        let need = self.constraints as usize;
        if lv.len() <= need {
            return None;
        }
        lv.select_nth_unstable_by_key(need, |&x| Reverse(x));
        Some(lv[need] as i64)
    }

    fn plan(&self, table: &BoundTable, e: i64) -> Result<BSetPlan, MvdecError> {
        let e_max = self.e_max().ok_or(MvdecError::NoCapability { r: table.r })?;
        if e < 0 || e > e_max || e >= self.n as i64 {
            return Err(MvdecError::BeyondCapability { e, e_max });
        }
        let ord = MonomialOrder::graded_lex(self.m);
        let mut by_i: Vec<Vec<Monomial>> = Vec::new();
        for (k, i, lv) in &self.entries {
            if (*lv as i64) < e {
                continue;
            }
            let i = *i as usize;
            if by_i.len() <= i {
                by_i.resize(i + 1, Vec::new());
            }
            by_i[i].push(k.clone());
        }
        for set in &mut by_i {
            set.sort_by(|a, b| ord.compare(a, b));
        }
        let need = self.constraints as usize + 1;
        let mut sets = Vec::new();
        let mut total = 0usize;
        let mut t = 0usize;
        loop {
            let b = if self.constant_only { &by_i[0] } else { &by_i[t] };
            if total + b.len() >= need {
                sets.push(b[..need - total].to_vec());
                return Ok(BSetPlan {
                    r: table.r,
                    e,
                    t,
                    bound: table.bound.clone(),
                    sets,
                    full_last: b.len(),
                    constraints: self.constraints,
                });
            }
            total += b.len();
            sets.push(b.clone());
            t += 1;
        }
    }
}

/// Largest E whose B-sets give more unknowns than the n N(m, r)
/// interpolation conditions, with the plan at that E.
pub fn capability_from_table(table: &BoundTable, monomials: &[Monomial]) -> Result<Capability, MvdecError> {
    let levels = Levels::new(table, monomials)?;
    let e_max = levels.e_max().ok_or(MvdecError::NoCapability { r: table.r })?;
    let plan = levels.plan(table, e_max)?;
    Ok(Capability { e_max, plan })
}

pub fn capability(set: &MonomialSet, r: u32, bound: &Bound) -> Result<Capability, MvdecError> {
    let table = BoundTable::new(bound, r, set.sizes())?;
    capability_from_table(&table, set.monomials())
}

/// Plan for a given E no larger than the capability.
pub fn plan_for(table: &BoundTable, monomials: &[Monomial], e: i64) -> Result<BSetPlan, MvdecError> {
    Levels::new(table, monomials)?.plan(table, e)
}
