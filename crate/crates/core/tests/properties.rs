use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qmacd_core::dunkl::{apply_di, apply_di_crep, apply_di_iij, apply_di_word};
use qmacd_core::hecke::{apply_t0, apply_t0_defining, apply_ti, apply_ti_inv, apply_yi};
use qmacd_core::poly::prec_order;
use qmacd_core::qt::{gcd_with, GcdRoute};
use qmacd_core::{Composition, Exponent, QtPoly, QtScalar, XPolynomial};

fn poly() -> impl Strategy<Value = QtPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -3i64..=3), 0..4).prop_map(QtPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = QtPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn scalar() -> impl Strategy<Value = QtScalar> {
    (poly(), nonzero_poly()).prop_map(|(a, b)| QtScalar::new(a, b).unwrap())
}

fn nonzero_scalar() -> impl Strategy<Value = QtScalar> {
    scalar().prop_filter("nonzero", |c| !c.is_zero())
}

fn xpoly(n: usize) -> impl Strategy<Value = XPolynomial> {
    let term = (prop::collection::vec(0u32..3, n), scalar());
    prop::collection::vec(term, 0..4)
        .prop_map(move |ts| XPolynomial::from_terms(n, ts.into_iter().map(|(e, c)| (Exponent::from_vec(e), c))))
}

fn composition(n: usize, max: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0..=max, n).prop_map(Composition::from)
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-7i64..=7, 1i64..=5).prop_map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &QtScalar::zero(), a.clone());
        prop_assert_eq!(&a * &QtScalar::one(), a.clone());
    }

    #[test]
    fn inverses(a in nonzero_scalar()) {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert_eq!(a.checked_div(&a).unwrap(), QtScalar::one());
        prop_assert!(a.checked_div(&QtScalar::zero()).is_err());
    }

    #[test]
    fn bar_is_an_involutive_field_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn gcd_routes_agree(a in poly(), b in poly(), k in nonzero_poly()) {
        let (a, b) = (&a * &k, &b * &k);
        let g = gcd_with(&a, &b, GcdRoute::Heuristic);
        prop_assert_eq!(&g, &gcd_with(&a, &b, GcdRoute::Prs));
        if !g.is_zero() {
            prop_assert!(a.div_exact(&g).is_some());
            prop_assert!(b.div_exact(&g).is_some());
        }
    }

    #[test]
    fn canonical_form_is_unique(num in poly(), den in nonzero_poly(), k in nonzero_poly()) {
        let a = QtScalar::new(num.clone(), den.clone()).unwrap();
        prop_assert_eq!(a.renormalized(), a.clone());
        prop_assert_eq!(QtScalar::new(&num * &k, &den * &k).unwrap(), a.clone());
        prop_assert_eq!(QtScalar::new(-&num, -&den).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), q0 in rational(), t0 in rational()) {
        if let (Ok(x), Ok(y)) = (a.eval(&q0, &t0), b.eval(&q0, &t0)) {
            prop_assert_eq!((&a * &b).eval(&q0, &t0).ok(), Some(&x * &y));
            prop_assert_eq!((&a + &b).eval(&q0, &t0).ok(), Some(&x + &y));
        }
    }

    #[test]
    fn swap_and_shift(f in xpoly(3), i in 1usize..3) {
        let j = i + 1;
        prop_assert_eq!(f.apply_swap(i, j).unwrap().apply_swap(i, j).unwrap(), f.clone());
        let lhs = f.apply_swap(i, j).unwrap().apply_qshift(i).unwrap();
        let rhs = f.apply_qshift(j).unwrap().apply_swap(i, j).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divide_undoes_multiply(f in xpoly(3), i in 1usize..=3) {
        prop_assert_eq!(f.mul_var(i).unwrap().divide_by_xi(i).unwrap(), f);
    }

    #[test]
    fn prec_is_a_strict_partial_order(a in composition(3, 2), b in composition(3, 2), c in composition(3, 2)) {
        prop_assert!(!prec_order(&a, &a).unwrap());
        if a.weight() == b.weight() && prec_order(&a, &b).unwrap() {
            prop_assert!(!prec_order(&b, &a).unwrap());
            if b.weight() == c.weight() && prec_order(&b, &c).unwrap() {
                prop_assert!(prec_order(&a, &c).unwrap());
            }
        }
    }

    #[test]
    fn composition_text_round_trip(a in composition(4, 9)) {
        prop_assert_eq!(a.to_string().parse::<Composition>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hecke_relations_on_random_input(f in xpoly(3), i in 1usize..3) {
        let t = QtScalar::t();
        let tf = apply_ti(&f, i).unwrap();
        let quad = &(&apply_ti(&tf, i).unwrap() + &tf.scale(&(&QtScalar::one() - &t))) - &f.scale(&t);
        prop_assert!(quad.is_zero());
        prop_assert_eq!(apply_ti_inv(&tf, i).unwrap(), f.clone());
        prop_assert_eq!(apply_t0(&f).unwrap(), apply_t0_defining(&f).unwrap());
    }

    #[test]
    fn cherednik_operators_commute(f in xpoly(3)) {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let a = apply_yi(&apply_yi(&f, j).unwrap(), i).unwrap();
            let b = apply_yi(&apply_yi(&f, i).unwrap(), j).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn dunkl_forms_agree(f in xpoly(3), i in 1usize..=3) {
        let d = apply_di(&f, i).unwrap();
        prop_assert_eq!(&d, &apply_di_iij(&f, i).unwrap());
        prop_assert_eq!(&d, &apply_di_word(&f, i).unwrap());
        prop_assert_eq!(&d, &apply_di_crep(&f, i).unwrap());
    }

    #[test]
    fn dunkl_operators_commute(f in xpoly(3)) {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let a = apply_di(&apply_di(&f, j).unwrap(), i).unwrap();
            let b = apply_di(&apply_di(&f, i).unwrap(), j).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
