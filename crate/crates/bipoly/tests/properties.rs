use bipoly::{
    constant_mod, divides, exact_div, factor_uni, gcd, parse_poly, resultant_y, split_irreducible,
    BiPoly, Rat, UniPoly,
};
use proptest::prelude::*;

fn small_poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0..=max_deg), (0..=max_deg), -5i64..=5, 1i64..=3), 0..=max_terms)
        .prop_map(|ts| {
            BiPoly::from_terms(
                ts.into_iter()
                    .map(|(i, j, n, d)| ((i, j), Rat::new(n.into(), d.into()))),
            )
        })
}

fn nonconstant(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    small_poly(max_deg, max_terms).prop_filter("nonconstant", |p| !p.is_constant())
}

fn point() -> impl Strategy<Value = (Rat, Rat)> {
    ((-4i64..=4), (1i64..=3), (-4i64..=4), (1i64..=3))
        .prop_map(|(a, b, c, d)| (Rat::new(a.into(), b.into()), Rat::new(c.into(), d.into())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(3, 5), b in small_poly(3, 5), c in small_poly(3, 5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, BiPoly::zero());
        prop_assert_eq!(&a * &BiPoly::one(), a.clone());
    }

    #[test]
    fn substitution_is_a_homomorphism(
        a in small_poly(3, 4), b in small_poly(3, 4),
        sx in small_poly(2, 3), sy in small_poly(2, 3),
    ) {
        let lhs = (&a * &b).substitute(&sx, &sy);
        let rhs = &a.substitute(&sx, &sy) * &b.substitute(&sx, &sy);
        prop_assert_eq!(lhs, rhs);
        let lhs = (&a + &b).substitute(&sx, &sy);
        let rhs = &a.substitute(&sx, &sy) + &b.substitute(&sx, &sy);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_matches_evaluation(a in small_poly(3, 5), sx in small_poly(2, 3), sy in small_poly(2, 3), (u, v) in point()) {
        let composed = a.substitute(&sx, &sy).eval(&u, &v);
        let direct = a.eval(&sx.eval(&u, &v), &sy.eval(&u, &v));
        prop_assert_eq!(composed, direct);
    }

    #[test]
    fn exact_div_round_trip(a in small_poly(3, 5), b in nonconstant(3, 4)) {
        let prod = &a * &b;
        prop_assert_eq!(exact_div(&prod, &b).unwrap(), a);
        prop_assert!(divides(&b, &prod));
    }

    #[test]
    fn gcd_divides_and_absorbs_common_factor(a in nonconstant(2, 4), b in nonconstant(2, 4), c in nonconstant(2, 3)) {
        let ac = &a * &c;
        let bc = &b * &c;
        let g = gcd(&ac, &bc);
        prop_assert!(divides(&g, &ac));
        prop_assert!(divides(&g, &bc));
        prop_assert!(divides(&c, &g));
        // Associates normalize to the same representative.
        prop_assert_eq!(gcd(&ac.scale(&Rat::new((-3).into(), 2.into())), &bc), g);
    }

    #[test]
    fn factorization_reconstructs(a in nonconstant(2, 4), b in nonconstant(2, 4)) {
        let f = &a * &b;
        let fs = split_irreducible(&f);
        prop_assert_eq!(fs.expand(), f.clone());
        prop_assert!(fs.factors.iter().all(|(p, _)| p.lc() == Rat::from_integer(1.into())));
        let count: usize = fs.factors.iter().map(|(_, m)| *m).sum();
        prop_assert!(count >= 2);
        let parts = |g: &BiPoly| split_irreducible(g).factors.iter().map(|(_, m)| *m).sum::<usize>();
        prop_assert_eq!(count, parts(&a) + parts(&b));
    }

    #[test]
    fn content_in_either_variable_is_split(a in nonconstant(2, 4), u in prop::collection::vec(-4i64..=4, 2..4)) {
        let c = UniPoly::from_ints(&u);
        prop_assume!(!c.is_constant());
        for g in [c.to_bipoly_x(), c.to_bipoly_y()] {
            let f = &a * &g;
            let fs = split_irreducible(&f);
            prop_assert_eq!(fs.expand(), f.clone());
            for (h, _) in split_irreducible(&g).factors {
                prop_assert!(fs.factors.iter().any(|(p, _)| *p == h));
            }
        }
    }

    #[test]
    fn univariate_factorization_reconstructs(cs in prop::collection::vec(-9i64..=9, 2..8), ds in prop::collection::vec(-9i64..=9, 2..6)) {
        let f = &UniPoly::from_ints(&cs) * &UniPoly::from_ints(&ds);
        prop_assume!(!f.is_zero());
        let fs = factor_uni(&f);
        let mut acc = UniPoly::constant(fs.content.clone());
        for (p, m) in &fs.factors {
            acc = &acc * &p.pow(*m as u32);
        }
        prop_assert_eq!(acc, f);
    }

    #[test]
    fn univariate_gcd_of_products(
        a in prop::collection::vec(-9i64..=9, 3..7),
        b in prop::collection::vec(-9i64..=9, 3..7),
        g in prop::collection::vec(-9i64..=9, 2..6),
        d in 1i64..=7,
    ) {
        let (a, b) = (UniPoly::from_ints(&a), UniPoly::from_ints(&b));
        let g = UniPoly::from_ints(&g).scale(&Rat::new(1.into(), d.into()));
        prop_assume!(!a.is_zero() && !b.is_zero() && !g.is_zero());
        let expected = &a.gcd(&b) * &g.monic();
        let got = (&a * &g).gcd(&(&b * &g));
        prop_assert_eq!(got.clone(), expected.monic());
        prop_assert!((&a * &g).rem(&got).is_zero() && (&b * &g).rem(&got).is_zero());
    }

    #[test]
    fn display_round_trips(a in small_poly(4, 6)) {
        prop_assert_eq!(parse_poly(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn constant_mod_recovers_shift(f in nonconstant(2, 4), h in small_poly(2, 3), c in -5i64..=5) {
        let c = Rat::from_integer(c.into());
        let g = &(&f * &h) + &BiPoly::constant(c.clone());
        prop_assert_eq!(constant_mod(&g, &f), Some(c));
    }

    #[test]
    fn resultant_vanishes_on_common_roots(a in small_poly(2, 4), (u, v) in point()) {
        // Two curves through (u, v): a − a(u, v) and y − v.
        let f = &a - &BiPoly::constant(a.eval(&u, &v));
        prop_assume!(f.deg_y().unwrap_or(0) > 0);
        let g = &BiPoly::y() - &BiPoly::constant(v.clone());
        let r = resultant_y(&f, &g);
        prop_assert_eq!(r.eval(&u, &Rat::from_integer(0.into())), Rat::from_integer(0.into()));
    }
}

#[test]
fn high_degree_modular_split() {
    // Product of two irreducible degree-14 factors exercises equal-degree
    // splitting beyond small extension degrees.
    let mut a = vec![0i64; 15];
    a[0] = 2;
    a[14] = 1;
    let mut b = vec![0i64; 15];
    b[0] = 3;
    b[1] = 1;
    b[14] = 1;
    let f = &UniPoly::from_ints(&a) * &UniPoly::from_ints(&b);
    let fs = factor_uni(&f);
    assert_eq!(fs.factors.len(), 2);
}
