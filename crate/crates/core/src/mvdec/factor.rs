//! Linear factors Z - F(X) of Q(X, Z) with Supp(F) in a given set, found
//! by specializing the last variable and interpolating back.

use crate::codes::PointEnsemble;
use crate::ff::{Field, Gf};
use crate::poly::{z_roots_univariate, Monomial, MultiPoly};

use super::MvdecError;

/// Root combinations tried per specialization level before giving up.
pub const DEFAULT_BUDGET: u64 = 10_000;

/// Every F with Supp(F) in `monomials` and Q(X, F(X)) = 0, where Q has
/// m + 1 variables (Z last) and the X_j range over the ensemble's sets.
/// Each returned F is verified by substitution.
pub fn factor_step(
    field: &Field,
    q: &MultiPoly,
    monomials: &[Monomial],
    ensemble: &PointEnsemble,
    budget: u64,
) -> Result<Vec<MultiPoly>, MvdecError> {
    let m = ensemble.dim();
    if q.nvars() != m + 1 {
        return Err(MvdecError::Params(format!("Q has {} variables, expected {}", q.nvars(), m + 1)));
    }
    if q.is_zero() {
        return Err(MvdecError::Interpolation);
    }
    let mut out = roots(field, q, monomials, ensemble.sets(), budget)?;
    out.sort_by(|a, b| a.terms().cmp(b.terms()));
    out.dedup();
    Ok(out)
}

fn roots(field: &Field, q: &MultiPoly, monomials: &[Monomial], sets: &[Vec<Gf>], budget: u64) -> Result<Vec<MultiPoly>, MvdecError> {
    let m = sets.len();
    if m == 1 {
        let k = monomials.iter().map(|x| x.0[0]).max().unwrap_or(0) as usize + 1;
        let mut out = Vec::new();
        for f in z_roots_univariate(field, q, k)? {
            let p = MultiPoly::from_terms(1, field, f.into_iter().enumerate().map(|(d, c)| (Monomial::new(vec![d as u32]), c)));
            if p.support().all(|x| monomials.contains(x)) {
                out.push(p);
            }
        }
        return Ok(out);
    }

    let last = m - 1;
    let deg = monomials.iter().map(|x| x.0[last]).max().unwrap_or(0) as usize;
    let values = &sets[last][..deg + 1];
    let mut projected: Vec<Monomial> = monomials.iter().map(|x| Monomial(x.0[..last].to_vec())).collect();
    projected.sort();
    projected.dedup();

    let mut q = q.clone();
    let mut lists = Vec::with_capacity(values.len());
    for &a in values {
        let mut spec = q.specialize(field, last, a);
        while spec.is_zero() {
            q = divide_linear(field, &q, last, a);
            spec = q.specialize(field, last, a);
        }
        let reduced = drop_var(field, &spec, last);
        lists.push(roots(field, &reduced, &projected, &sets[..last], budget)?);
    }

    let needed: u128 = lists.iter().map(|l| l.len() as u128).product();
    if needed > budget as u128 {
        return Err(MvdecError::Budget { needed, budget });
    }
    if needed == 0 {
        return Ok(Vec::new());
    }
    let basis = lagrange_basis(field, values, m);
    let mut out = Vec::new();
    let mut pick = vec![0usize; lists.len()];
    loop {
        let mut f = MultiPoly::zero(m);
        for (j, &c) in pick.iter().enumerate() {
            let lifted = add_var(field, &lists[j][c], last);
            f = f.add(field, &lifted.mul(field, &basis[j]));
        }
        if f.support().all(|x| monomials.contains(x)) && substitutes_to_zero(field, &q, &f) {
            out.push(f);
        }
        // next combination
        let mut j = 0;
        loop {
            if j == pick.len() {
                return Ok(out);
            }
            pick[j] += 1;
            if pick[j] < lists[j].len() {
                break;
            }
            pick[j] = 0;
            j += 1;
        }
    }
}

/// Q / (X_j - a), assuming it divides.
fn divide_linear(field: &Field, q: &MultiPoly, j: usize, a: Gf) -> MultiPoly {
    let mut shift = vec![Gf::ZERO; q.nvars()];
    shift[j] = a;
    let moved = q.translate(field, &shift);
    let mut lowered = MultiPoly::zero(q.nvars());
    for (mono, c) in moved.terms() {
        let mut e = mono.0.clone();
        debug_assert!(e[j] > 0);
        e[j] -= 1;
        lowered.add_term(field, Monomial(e), c);
    }
    shift[j] = field.neg(a);
    lowered.translate(field, &shift)
}

fn drop_var(field: &Field, q: &MultiPoly, j: usize) -> MultiPoly {
    MultiPoly::from_terms(
        q.nvars() - 1,
        field,
        q.terms().map(|(mono, c)| {
            let mut e = mono.0.clone();
            e.remove(j);
            (Monomial(e), c)
        }),
    )
}

fn add_var(field: &Field, f: &MultiPoly, j: usize) -> MultiPoly {
    MultiPoly::from_terms(
        f.nvars() + 1,
        field,
        f.terms().map(|(mono, c)| {
            let mut e = mono.0.clone();
            e.insert(j, 0);
            (Monomial(e), c)
        }),
    )
}

/// L_j(X_last) with L_j(values[l]) = [j == l], as m-variable polynomials.
fn lagrange_basis(field: &Field, values: &[Gf], m: usize) -> Vec<MultiPoly> {
    let last = m - 1;
    let x = MultiPoly::var(m, last);
    (0..values.len())
        .map(|j| {
            let mut p = MultiPoly::constant(m, Gf::ONE);
            let mut denom = Gf::ONE;
            for (l, &a) in values.iter().enumerate() {
                if l != j {
                    p = p.mul(field, &x.sub(field, &MultiPoly::constant(m, a)));
                    denom = field.mul(denom, field.sub(values[j], a));
                }
            }
            p.scale(field, field.inv(denom))
        })
        .collect()
}

/// Q(X, F(X)) = 0, by Horner in Z.
fn substitutes_to_zero(field: &Field, q: &MultiPoly, f: &MultiPoly) -> bool {
    let z = q.nvars() - 1;
    let coeffs = q.coefficients_in(z);
    let mut acc = MultiPoly::zero(f.nvars());
    for c in coeffs.iter().rev() {
        acc = acc.mul(field, f).add(field, &drop_var(field, c, z));
    }
    acc.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::Channel;
    use crate::codes::MonomialSet;
    use crate::Rational;

    fn setup() -> (Field, PointEnsemble, MonomialSet) {
        let f = Field::binary(4).unwrap();
        let e = PointEnsemble::canonical(&f, &[8, 4]).unwrap();
        let set = MonomialSet::wrm(
            &[8, 4],
            Rational::from_integer(5),
            &[Rational::from_integer(1), Rational::from_integer(2)],
        )
        .unwrap();
        (f, e, set)
    }

    fn random_poly(ch: &mut Channel, f: &Field, support: &[Monomial], nvars: usize) -> MultiPoly {
        MultiPoly::from_terms(nvars, f, support.iter().map(|m| (m.clone(), ch.element(f))))
    }

    fn z_minus(f: &Field, p: &MultiPoly) -> MultiPoly {
        let z = MultiPoly::var(3, 2);
        z.sub(f, &add_var(f, p, 2))
    }

    #[test]
    fn recovers_planted_factor() {
        let (f, e, set) = setup();
        let small: Vec<Monomial> = (0..3).flat_map(|a| (0..2).map(move |b| Monomial::new(vec![a, b, 0]))).collect();
        for trial in 0..100 {
            let mut ch = Channel::for_trial(5, trial);
            let target = random_poly(&mut ch, &f, set.monomials(), 2);
            let mut other = random_poly(&mut ch, &f, &small, 3);
            other.add_term(&f, Monomial::new(vec![0, 0, 1]), Gf::ONE);
            let q = z_minus(&f, &target).mul(&f, &other);
            let got = factor_step(&f, &q, set.monomials(), &e, DEFAULT_BUDGET).unwrap();
            assert!(got.contains(&target), "trial {trial}");
            for g in &got {
                assert!(substitutes_to_zero(&f, &q, g));
            }
        }
    }

    #[test]
    fn times_z() {
        let (f, e, set) = setup();
        let target = random_poly(&mut Channel::new(1), &f, set.monomials(), 2);
        let q = z_minus(&f, &target).mul(&f, &MultiPoly::var(3, 2));
        let got = factor_step(&f, &q, set.monomials(), &e, DEFAULT_BUDGET).unwrap();
        assert!(got.contains(&target));
        assert!(got.contains(&MultiPoly::zero(2)));
    }

    #[test]
    fn no_linear_factor() {
        let (f, e, set) = setup();
        // the only root of Z^2 + X_2 is X_2^8, outside M
        let q = MultiPoly::from_terms(
            3,
            &f,
            [(Monomial::new(vec![0, 0, 2]), Gf::ONE), (Monomial::new(vec![0, 1, 0]), Gf::ONE)],
        );
        assert!(factor_step(&f, &q, set.monomials(), &e, DEFAULT_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn divides_out_vanishing_specializations() {
        let (f, e, set) = setup();
        let target = random_poly(&mut Channel::new(9), &f, set.monomials(), 2);
        let a = e.sets()[1][0];
        let lin = MultiPoly::from_terms(
            3,
            &f,
            [(Monomial::new(vec![0, 1, 0]), Gf::ONE), (Monomial::new(vec![0, 0, 0]), f.neg(a))],
        );
        let q = z_minus(&f, &target).mul(&f, &lin).mul(&f, &lin);
        assert!(factor_step(&f, &q, set.monomials(), &e, DEFAULT_BUDGET).unwrap().contains(&target));
    }

    #[test]
    fn budget_is_reported() {
        let (f, e, set) = setup();
        let target = random_poly(&mut Channel::new(3), &f, set.monomials(), 2);
        let q = z_minus(&f, &target).mul(&f, &MultiPoly::var(3, 2));
        assert!(matches!(
            factor_step(&f, &q, set.monomials(), &e, 1),
            Err(MvdecError::Budget { .. })
        ));
    }
}
