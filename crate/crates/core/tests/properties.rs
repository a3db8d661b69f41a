use avcodes::codes::{footprint, optimal_w2, MonomialSet};
use avcodes::ff::{Field, Gf, Matrix};
use avcodes::mvdec::{b_set, capability, hasse_count, hasse_indices, MvdecError};
use avcodes::poly::{Monomial, MultiPoly, Multiplicity};
use avcodes::rsdec::{gs_capability_ultimate, gs_parameters};
use avcodes::zeros::{delta_contains, Bound, BoundKind, DCache};
use avcodes::Rational;
use proptest::prelude::*;

const FIELDS: [(u32, u32); 7] = [(2, 1), (3, 1), (2, 3), (5, 1), (3, 2), (2, 4), (7, 2)];

fn field(ix: usize) -> Field {
    let (p, k) = FIELDS[ix];
    Field::new(p, k, None).unwrap()
}

fn q(x: i64) -> Rational {
    Rational::from_integer(x)
}

fn elem(f: &Field, x: u32) -> Gf {
    Gf(x % f.size())
}

fn poly(f: &Field, nvars: usize, terms: &[(Vec<u32>, u32)]) -> MultiPoly {
    MultiPoly::from_terms(nvars, f, terms.iter().map(|(e, c)| (Monomial::new(e.clone()), elem(f, *c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(ix in 0..FIELDS.len(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = field(ix);
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Gf::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), Gf::ONE);
        }
    }

    #[test]
    fn kernel_vectors_are_kernel(ix in 0..FIELDS.len(), rows in 1usize..6, cols in 1usize..7, seed in prop::collection::vec(any::<u32>(), 42)) {
        let f = field(ix);
        let m = Matrix::from_rows((0..rows).map(|i| (0..cols).map(|j| elem(&f, seed[i * cols + j])).collect()).collect()).unwrap();
        let kernel = m.nullspace(&f);
        prop_assert_eq!(m.rank(&f) + kernel.len(), cols);
        for v in kernel {
            for i in 0..rows {
                let row: Vec<Gf> = (0..cols).map(|j| m.get(i, j)).collect();
                prop_assert_eq!(f.dot(&row, &v), Gf::ZERO);
            }
        }
    }

    #[test]
    fn multiplicity_is_additive(
        ix in 0..FIELDS.len(),
        ft in prop::collection::vec((prop::collection::vec(0u32..4, 2), any::<u32>()), 1..5),
        gt in prop::collection::vec((prop::collection::vec(0u32..4, 2), any::<u32>()), 1..5),
        pt in prop::collection::vec(any::<u32>(), 2),
    ) {
        let f = field(ix);
        let (a, b) = (poly(&f, 2, &ft), poly(&f, 2, &gt));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p: Vec<Gf> = pt.iter().map(|&x| elem(&f, x)).collect();
        let (Multiplicity::Finite(ma), Multiplicity::Finite(mb)) = (a.multiplicity(&f, &p), b.multiplicity(&f, &p)) else {
            unreachable!("nonzero polynomials")
        };
        prop_assert_eq!(a.mul(&f, &b).multiplicity(&f, &p), Multiplicity::Finite(ma + mb));
    }

    #[test]
    fn gs_radius_monotone_and_bounded(n in 2u64..300, k_frac in 0.0f64..1.0, r in 1u32..8) {
        let k = 1 + ((n - 1) as f64 * k_frac) as u64;
        let a = gs_parameters(n, k, r).unwrap();
        let b = gs_parameters(n, k, r + 1).unwrap();
        prop_assert!(b.e_max >= a.e_max);
        prop_assert!(a.e_max <= gs_capability_ultimate(n, k) as i64);
    }

    #[test]
    fn optimal_w2_continuous(s2 in 1u32..8, mult in 1u32..6) {
        let s1 = s2 * mult;
        let (s1r, s2r) = (q(s1 as i64), q(s2 as i64));
        let top = q((s1 + s2 - 2) as i64);
        for u in [s1r - s1r / s2r, s1r - 1] {
            if u <= q(0) || u >= top {
                continue;
            }
            let eps = Rational::new(1, 1000);
            let at = optimal_w2(s1, s2, u, q(1)).unwrap();
            let after = optimal_w2(s1, s2, u + eps, q(1)).unwrap();
            prop_assert!(at - after <= eps && after - at <= eps);
        }
    }

    #[test]
    fn d_monotone_and_footprint_at_r1(s1 in 1u32..7, s2 in 1u32..7, i1 in 0u32..14, i2 in 0u32..14, r in 1u32..4) {
        let s = [s1, s2];
        let cache = DCache::new(&s);
        let i = [i1, i2];
        prop_assume!(delta_contains(&i, r, &s));
        let v = cache.d(&i, r);
        if delta_contains(&[i1 + 1, i2], r, &s) {
            prop_assert!(cache.d(&[i1 + 1, i2], r) >= v);
        }
        if delta_contains(&[i1, i2 + 1], r, &s) {
            prop_assert!(cache.d(&[i1, i2 + 1], r) >= v);
        }
        if r > 1 {
            prop_assert!(cache.d(&i, r - 1) >= v);
        }
        if i1 < s1 && i2 < s2 && r == 1 {
            let n = s1 as u64 * s2 as u64;
            prop_assert_eq!(v, n - footprint(&s, &Monomial::new(vec![i1, i2])));
        }
    }

    #[test]
    fn hasse_index_count(m in 1usize..5, r in 1u32..10) {
        prop_assert_eq!(hasse_indices(m + 1, r).len() as u64, hasse_count(m, r));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn b_sets_shrink(s2 in 2u32..5, mult in 1u32..3, u in 1i64..6, e in 0i64..8, i in 0u32..3, kind in 0usize..3) {
        let s = [s2 * mult, s2];
        prop_assume!(u < (s[0] + s[1] - 2) as i64);
        let set = MonomialSet::wrm(&s, q(u), &[q(1), q(1)]).unwrap();
        let kind = [BoundKind::Sz, BoundKind::ClosedForm, BoundKind::DRecursive][kind];
        let bound = Bound::natural(kind, 2);
        let base = b_set(i, e, 2, &set, &bound).unwrap();
        for k in b_set(i, e + 1, 2, &set, &bound).unwrap() {
            prop_assert!(base.contains(&k));
        }
        for k in b_set(i + 1, e, 2, &set, &bound).unwrap() {
            prop_assert!(base.contains(&k));
        }
    }

    #[test]
    fn capability_follows_bound_strength(s2 in 2u32..5, mult in 1u32..4, u in 1i64..8, r in 1u32..4) {
        let s = [s2 * mult, s2];
        prop_assume!(u < (s[0] + s[1] - 2) as i64);
        let set = MonomialSet::wrm(&s, q(u), &[q(1), q(1)]).unwrap();
        let cap = |kind| match capability(&set, r, &Bound::reversed(kind, 2)) {
            Ok(c) => {
                assert_eq!(c.plan.unknowns() as u64, c.plan.constraints + 1);
                Some(c.e_max)
            }
            Err(MvdecError::NoCapability { .. }) => None,
            Err(e) => panic!("{e}"),
        };
        let (d, c, sz) = (cap(BoundKind::DRecursive), cap(BoundKind::ClosedForm), cap(BoundKind::Sz));
        prop_assert!(d >= c, "D {:?} < C {:?}", d, c);
        prop_assert!(c >= sz, "C {:?} < S {:?}", c, sz);
    }
}
