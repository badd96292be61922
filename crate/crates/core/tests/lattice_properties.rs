use num_bigint::BigUint;
use proptest::prelude::*;

use tca::bounds::{eta_bound, rough_bound};
use tca::functor::{schur_dim, PolyFunctor, SuperSpace};
use tca::spectrum::{closure, gl_contains, gl_radical, is_gl_prime, minimal_gl_primes, poset_le, spec_point, GlIdeal, SpectrumPoint};
use tca::Partition;

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=4, 1..=4)
        .prop_map(Partition::from_unsorted)
        .prop_filter("size", move |l| l.size() <= max_size)
}

fn gl_ideal() -> impl Strategy<Value = GlIdeal> {
    prop_oneof![
        Just(GlIdeal::Zero),
        Just(GlIdeal::Unit),
        prop::collection::vec(partition(8), 1..=3).prop_map(GlIdeal::sum),
    ]
}

fn point() -> impl Strategy<Value = SpectrumPoint> {
    prop_oneof![Just(SpectrumPoint::Infinity), (0usize..4, 0usize..4).prop_map(|(r, s)| SpectrumPoint::Point(r, s))]
}

proptest! {
    #[test]
    fn union_and_intersection_bound(a in partition(10), b in partition(10)) {
        let meet = a.intersect(&b);
        let join = a.union(&b);
        prop_assert!(meet.contains(&a) && meet.contains(&b));
        prop_assert!(a.contains(&join) && b.contains(&join));
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(join.transpose(), a.transpose().union(&b.transpose()));
    }

    #[test]
    fn schur_dimension_is_transpose_symmetric(l in partition(8), r in 0usize..=3, s in 0usize..=3) {
        prop_assert_eq!(schur_dim(&l, SuperSpace::new(r, s)), schur_dim(&l.transpose(), SuperSpace::new(s, r)));
    }

    #[test]
    fn functor_dimension_is_additive(a in partition(5), b in partition(5), r in 0usize..=2, s in 0usize..=2) {
        let space = SuperSpace::new(r, s);
        let sum = PolyFunctor::schur(a.clone()).direct_sum(&PolyFunctor::schur(b.clone()));
        prop_assert_eq!(sum.dim(space), schur_dim(&a, space) + schur_dim(&b, space));
    }

    #[test]
    fn containment_is_a_partial_order(j in gl_ideal(), k in gl_ideal(), m in gl_ideal()) {
        prop_assert!(gl_contains(&j, &j));
        if gl_contains(&j, &k) && gl_contains(&k, &j) {
            prop_assert_eq!(&j, &k);
        }
        if gl_contains(&j, &k) && gl_contains(&k, &m) {
            prop_assert!(gl_contains(&j, &m));
        }
    }

    #[test]
    fn radical_is_a_closure(j in gl_ideal(), k in gl_ideal()) {
        let rad = gl_radical(&j);
        prop_assert!(gl_contains(&j, &rad));
        prop_assert_eq!(gl_radical(&rad), rad.clone());
        if gl_contains(&j, &k) {
            prop_assert!(gl_contains(&rad, &gl_radical(&k)));
        }
        if is_gl_prime(&j) {
            prop_assert_eq!(&rad, &j);
        }
    }

    #[test]
    fn minimal_primes_sit_over_the_ideal(j in gl_ideal()) {
        match minimal_gl_primes(&j) {
            Err(_) => prop_assert_eq!(gl_radical(&j), GlIdeal::Unit),
            Ok(primes) => {
                prop_assert!(!primes.is_empty());
                for p in &primes {
                    prop_assert!(is_gl_prime(&p.ideal()));
                    prop_assert!(gl_contains(&gl_radical(&j), &p.ideal()));
                    prop_assert_eq!(spec_point(&p.ideal()).unwrap(), p.point());
                }
            }
        }
    }

    /// Smaller ideals are bigger points.
    #[test]
    fn spectrum_order_reverses_containment(p in point(), q in point()) {
        let prime = |x: SpectrumPoint| match x {
            SpectrumPoint::Point(r, s) => GlIdeal::Generated(Partition::rectangle(r + 1, s + 1).unwrap()),
            SpectrumPoint::Infinity => GlIdeal::Zero,
        };
        prop_assert_eq!(poset_le(p, q), gl_contains(&prime(q), &prime(p)));
        prop_assert_eq!(closure(q).contains(p), poset_le(p, q));
        if let (SpectrumPoint::Point(r, s), Some(points)) = (q, closure(q).points()) {
            prop_assert_eq!(points.len(), (r + 1) * (s + 1));
            prop_assert!(points.iter().all(|&x| poset_le(x, q)));
        }
    }

    #[test]
    fn gl_ideal_json_round_trip(j in gl_ideal()) {
        let text = serde_json::to_string(&j).unwrap();
        prop_assert_eq!(serde_json::from_str::<GlIdeal>(&text).unwrap(), j);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn eta_is_monotone_in_k(a in partition(3), b in partition(3), k in 1u32..=3) {
        let f = PolyFunctor::schur(a).direct_sum(&PolyFunctor::schur(b));
        let low = eta_bound(&f, k).unwrap();
        let high = eta_bound(&f, k + 1).unwrap();
        prop_assert!(low.eta <= high.eta);
        prop_assert_eq!(low.depth, high.depth);
        prop_assert!(high.eta >= BigUint::from(f.degree() as u32 * k));
    }

    #[test]
    fn eta_grows_with_summands(a in partition(3), b in partition(3), k in 1u32..=3) {
        let small = PolyFunctor::schur(a.clone());
        let big = small.direct_sum(&PolyFunctor::schur(b));
        prop_assert!(eta_bound(&small, k).unwrap().eta <= eta_bound(&big, k).unwrap().eta);
        prop_assert!(eta_bound(&big, k).unwrap().depth <= big.degree());
    }

    #[test]
    fn rough_bound_is_monotone(d in 1u32..=4, k in 1u32..=3) {
        prop_assert!(rough_bound(d, k).unwrap() <= rough_bound(d, k + 1).unwrap());
        prop_assert!(rough_bound(d, k).unwrap() <= rough_bound(d + 1, k).unwrap());
    }
}
