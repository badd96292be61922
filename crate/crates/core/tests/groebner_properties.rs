use proptest::prelude::*;

use tca::functor::SuperSpace;
use tca::groebner::reduced_groebner_basis;
use tca::models::{model_ring, rank_locus_ideal, RankBound};
use tca::poly::{rat, Monomial, MonomialOrder, Poly, Rational, Ring};
use tca::Ideal;

fn ring() -> Ring {
    model_ring(SuperSpace::new(2, 2))
}

/// Polynomials of degree at most 2 with small integer coefficients.
fn poly_strategy(ring: Ring) -> impl Strategy<Value = Poly> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0..n, 0..=2), -4i64..=4), 1..=3).prop_map(move |terms| {
        Poly::from_terms(
            ring,
            terms.into_iter().map(|(vars, c)| {
                let m = vars.iter().fold(Monomial::one(n), |m, &v| m.mul(&Monomial::var(n, v)));
                (m, rat(c))
            }),
        )
    })
}

fn nonzero(ring: Ring) -> impl Strategy<Value = Poly> {
    poly_strategy(ring).prop_filter("nonzero", |f| !f.is_zero())
}

fn generators() -> impl Strategy<Value = Vec<Poly>> {
    prop::collection::vec(nonzero(ring()), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_basis_is_idempotent(gens in generators()) {
        let gb = reduced_groebner_basis(ring(), &gens);
        prop_assert_eq!(reduced_groebner_basis(ring(), &gb), gb);
    }

    #[test]
    fn reduced_basis_ignores_generator_order(gens in generators()) {
        let mut reversed = gens.clone();
        reversed.reverse();
        prop_assert_eq!(reduced_groebner_basis(ring(), &gens), reduced_groebner_basis(ring(), &reversed));
    }

    #[test]
    fn combinations_are_members(gens in generators(), mults in prop::collection::vec(poly_strategy(ring()), 3)) {
        let ideal = Ideal::new(ring(), gens.clone()).unwrap();
        let mut f = Poly::zero(ring());
        for (g, h) in gens.iter().zip(&mults) {
            f = &f + &(g * h);
        }
        prop_assert!(ideal.contains(&f).unwrap());
        prop_assert!(ideal.normal_form(&f).unwrap().is_zero());
        prop_assert!(ideal.radical_contains(&f).unwrap());
    }

    #[test]
    fn normal_form_is_a_representative(gens in generators(), f in poly_strategy(ring())) {
        let ideal = Ideal::new(ring(), gens).unwrap();
        let r = ideal.normal_form(&f).unwrap();
        prop_assert!(ideal.contains(&(&f - &r)).unwrap());
        prop_assert_eq!(ideal.contains(&f).unwrap(), r.is_zero());
    }

    #[test]
    fn powers_lie_in_the_radical(f in nonzero(ring()), n in 1u32..=8, g in nonzero(ring())) {
        let ideal = Ideal::new(ring(), vec![f.pow(n), &g * &f.pow(n + 1)]).unwrap();
        prop_assert!(ideal.radical_contains(&f).unwrap());
        prop_assert!(ideal.radical_contains(&(&f * &g)).unwrap());
    }

    #[test]
    fn lex_and_degrevlex_agree_on_membership(gens in prop::collection::vec(nonzero(ring()), 1..=2), f in poly_strategy(ring())) {
        let lex = ring().with_order(MonomialOrder::Lex);
        let a = Ideal::new(ring(), gens.clone()).unwrap();
        let b = Ideal::new(lex, gens.iter().map(|g| g.to_ring(lex).unwrap()).collect()).unwrap();
        prop_assert_eq!(a.contains(&f).unwrap(), b.contains(&f.to_ring(lex).unwrap()).unwrap());
    }

    #[test]
    fn json_round_trip(gens in generators()) {
        let ideal = Ideal::new(ring(), gens).unwrap();
        let text = serde_json::to_string(&ideal.to_json()).unwrap();
        let back = Ideal::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back.reduced_gb(), ideal.reduced_gb());
    }

    /// Members of the radical of the 2x2 minors vanish on every rank-one
    /// symmetric matrix `u uᵀ`.
    #[test]
    fn radical_members_vanish_on_the_locus(f in poly_strategy(model_ring(SuperSpace::new(3, 0))), u in prop::collection::vec(-3i64..=3, 3)) {
        let minors = rank_locus_ideal(RankBound::Finite(1), RankBound::Infinite, SuperSpace::new(3, 0)).unwrap();
        let member = &f * &minors.generators()[0];
        let point: Vec<Rational> = (1..=3)
            .flat_map(|i| (i..=3).map(move |j| (i, j)))
            .map(|(i, j)| rat(u[i - 1] * u[j - 1]))
            .collect();
        prop_assert!(minors.radical_contains(&member).unwrap());
        prop_assert_eq!(member.eval(&point), rat(0));
        if minors.radical_contains(&f).unwrap() {
            prop_assert_eq!(f.eval(&point), rat(0));
        }
    }
}

#[test]
fn unit_ideal_detection() {
    let r = ring();
    let x = r.parse("x[1,1]").unwrap();
    let ideal = Ideal::new(r, vec![x.clone(), &x + &Poly::one(r)]).unwrap();
    assert!(ideal.is_unit());
    assert_eq!(ideal.reduced_gb(), &[Poly::one(r)]);
}
