//! The recursive D function and the two-variable closed forms.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::Rational;

use super::{delta_contains, ZerosError};

type RowKey = (Vec<u32>, u32);

/// Memoised D(i_1, ..., i_m, r, s_1, ..., s_m) for fixed sizes.
///
/// For every prefix (i_1..i_{m-1}) and r one row holds the value for all
/// i_m up to r s_m (larger i_m give the same value). The maximum over
/// A(i_m, r, s_m) is an unbounded knapsack with two capacities: at most
/// s_m items, total weight at most i_m, item j weighing j.
#[derive(Debug)]
pub struct DCache {
    sizes: Vec<u32>,
    rows: RwLock<HashMap<RowKey, Arc<Vec<u64>>>>,
}

impl DCache {
    pub fn new(sizes: &[u32]) -> Self {
        DCache {
            sizes: sizes.to_vec(),
            rows: RwLock::new(HashMap::new()),
        }
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    /// Cached rows so far.
    pub fn len(&self) -> usize {
        self.rows.read().expect("poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// D(i, r, s) with s the cache sizes. Panics if r = 0 or the lengths differ.
    pub fn d(&self, i: &[u32], r: u32) -> u64 {
        assert_eq!(i.len(), self.sizes.len(), "exponent length");
        assert!(r >= 1, "r must be positive");
        self.d_at(i, r)
    }

    fn d_at(&self, i: &[u32], r: u32) -> u64 {
        let m = i.len();
        let sm = self.sizes[m - 1];
        if m == 1 {
            return (i[0] / r).min(sm) as u64;
        }
        let row = self.row(&i[..m - 1], r);
        row[(i[m - 1].min(r * sm)) as usize]
    }

    fn row(&self, prefix: &[u32], r: u32) -> Arc<Vec<u64>> {
        let key = (prefix.to_vec(), r);
        if let Some(row) = self.rows.read().expect("poisoned").get(&key) {
            return row.clone();
        }
        let row = Arc::new(self.compute_row(prefix, r));
        self.rows.write().expect("poisoned").entry(key).or_insert(row).clone()
    }

    fn compute_row(&self, prefix: &[u32], r: u32) -> Vec<u64> {
        let m = prefix.len() + 1;
        let sm = self.sizes[m - 1] as usize;
        let prod: u64 = self.sizes[..m - 1].iter().map(|&x| x as u64).product();
        // c[j]: zeros per a_m of multiplicity j along X_m
        let mut c: Vec<u64> = (0..r).map(|j| self.d_at(prefix, r - j)).collect();
        c.push(prod);
        let width = r as usize * sm;
        let mut best = vec![0u64; width + 1];
        for _ in 0..sm {
            let mut next = best.clone();
            for j in 1..=r as usize {
                let gain = c[j] - c[0];
                if gain == 0 {
                    continue;
                }
                for w in j..=width {
                    let v = best[w - j] + gain;
                    if v > next[w] {
                        next[w] = v;
                    }
                }
            }
            if next == best {
                break;
            }
            best = next;
        }
        best.into_iter().map(|b| sm as u64 * c[0] + b).collect()
    }
}

/// D by literal enumeration of A(i_m, r, s_m). Exponential; test oracle.
pub fn d_bruteforce(i: &[u32], r: u32, s: &[u32]) -> u64 {
    let m = i.len();
    if m == 1 {
        return (i[0] / r).min(s[0]) as u64;
    }
    let (pre, im, sm) = (&i[..m - 1], i[m - 1], s[m - 1]);
    let mut c: Vec<u64> = (0..r).map(|j| d_bruteforce(pre, r - j, &s[..m - 1])).collect();
    c.push(s[..m - 1].iter().map(|&x| x as u64).product());
    let mut best = 0;
    let mut u = vec![0u32; r as usize];
    enumerate_a(&mut u, 0, sm, im, &mut |u| {
        let used: u32 = u.iter().sum();
        let v = (sm - used) as u64 * c[0] + u.iter().enumerate().map(|(j, &x)| x as u64 * c[j + 1]).sum::<u64>();
        best = best.max(v);
    });
    best
}

fn enumerate_a(u: &mut Vec<u32>, pos: usize, count_left: u32, weight_left: u32, f: &mut impl FnMut(&[u32])) {
    if pos == u.len() {
        f(u);
        return;
    }
    let w = pos as u32 + 1;
    let mut x = 0;
    while x <= count_left && x * w <= weight_left {
        u[pos] = x;
        enumerate_a(u, pos + 1, count_left - x, weight_left - x * w, f);
        x += 1;
    }
    u[pos] = 0;
}

/// The closed-form estimate for D(i_1, i_2, r, s_1, s_2), as a rational.
pub fn d_closed_two_var(i1: u32, i2: u32, r: u32, s1: u32, s2: u32) -> Result<Rational, ZerosError> {
    if r == 0 {
        return Err(ZerosError::ZeroMultiplicity);
    }
    if !delta_contains(&[i1, i2], r, &[s1, s2]) {
        return Err(ZerosError::OutsideDelta(vec![i1, i2]));
    }
    let q = |n: i64| Rational::from_integer(n);
    let (i1r, i2r, s1r, s2r, rr) = (q(i1 as i64), q(i2 as i64), q(s1 as i64), q(s2 as i64), r as i64);
    if s1 * (r - 1) <= i1 {
        // exact value, last block of X_1 exponents
        let f = q((i1 / r) as i64);
        return Ok(s2r * f + i2r * (s1r - f));
    }
    // i1 in [(r-k-1) s1, (r-k) s1)
    let k = (r - 1 - i1 / s1) as i64;
    let a = i1r / rr;
    let threshold = Rational::new((rr - k) * rr * s1 as i64, rr + 1);
    Ok(if i1r >= threshold {
        if i2r < q(k) * s2r {
            s2r * a + i2r / rr * i1r / (rr - k)
        } else {
            s2r * a + (q(k + 1) * s2r - i2r) * (i1r / (rr - k) - a) + (i2r - q(k) * s2r) * (s1r - a)
        }
    } else {
        s2r * a + i2r / (k + 1) * (s1r - a)
    })
}
