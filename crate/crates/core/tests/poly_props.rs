mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use slicepd::poly::text::{format_polynomial, parse_polynomial};
use slicepd::poly::{
    contract, contract_monomial, Field, Monomial, MonomialOrder, Polynomial, Scalar, Shape,
};
use slicepd_oracles::dense::{factorial, DensePoly};

const Q: Field = Field::Rational;

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n)
        .prop_map(|e| Monomial::from_pairs(e.into_iter().enumerate().map(|(v, k)| (v as u32, k))))
}

fn polynomial(n: usize, max_exp: u32, order: MonomialOrder) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-6i64..=6, 1i64..=4, monomial(n, max_exp)), 0..6).prop_map(
        move |terms| {
            let terms = terms.into_iter().map(|(a, b, m)| {
                (
                    Scalar::Rational(BigRational::new(BigInt::from(a), BigInt::from(b))),
                    m,
                )
            });
            Polynomial::from_terms(Q, order, terms.collect::<Vec<_>>())
        },
    )
}

fn integer_polynomial(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-20i64..=20, monomial(n, 2)), 0..5).prop_map(|terms| {
        let terms = terms.into_iter().map(|(a, m)| (Q.from_int(a), m));
        Polynomial::from_terms(Q, MonomialOrder::Grevlex, terms.collect::<Vec<_>>())
    })
}

proptest! {
    #![proptest_config(common::seeded(500))]

    #[test]
    fn contraction_composes(
        a in monomial(3, 2),
        b in monomial(3, 2),
        f in polynomial(3, 4, MonomialOrder::Grevlex),
    ) {
        let one = |m: &Monomial| Polynomial::monomial(Q, MonomialOrder::Grevlex, m.clone());
        let lhs = contract(&one(&a.mul(&b)), &f).unwrap();
        let rhs = contract(&one(&a), &contract(&one(&b), &f).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let by_partials = DensePoly::act_by_partials(
            &DensePoly::from_polynomial(&one(&a.mul(&b)), 3),
            &DensePoly::from_polynomial(&f, 3),
        );
        prop_assert_eq!(DensePoly::from_polynomial(&lhs, 3), by_partials);
    }
}

proptest! {
    #![proptest_config(common::seeded(200))]

    #[test]
    fn contraction_is_bilinear(
        g in polynomial(3, 2, MonomialOrder::Grevlex),
        h in polynomial(3, 2, MonomialOrder::Grevlex),
        f in polynomial(3, 4, MonomialOrder::Grevlex),
        k in polynomial(3, 4, MonomialOrder::Grevlex),
    ) {
        prop_assert_eq!(
            contract(&g.add(&h), &f).unwrap(),
            contract(&g, &f).unwrap().add(&contract(&h, &f).unwrap())
        );
        prop_assert_eq!(
            contract(&g, &f.add(&k)).unwrap(),
            contract(&g, &f).unwrap().add(&contract(&g, &k).unwrap())
        );
    }

    #[test]
    fn self_contraction_is_a_product_of_factorials(m in monomial(4, 5)) {
        let expected: BigInt = m.exponents().iter().map(|&(_, e)| factorial(e)).product();
        let (w, q) = contract_monomial(&m, &m).unwrap();
        prop_assert_eq!(w, expected);
        prop_assert!(q.is_one());
    }

    #[test]
    fn canonical_form_is_a_fixpoint(p in polynomial(4, 3, MonomialOrder::Lex)) {
        let again = Polynomial::from_terms(Q, MonomialOrder::Lex, p.terms().to_vec());
        prop_assert_eq!(&again, &p);
        prop_assert_eq!(&p.normalized(), &p);
        prop_assert!(p.terms().windows(2).all(|w| MonomialOrder::Lex.compare(&w[0].1, &w[1].1).is_gt()));
    }

    #[test]
    fn ring_axioms(
        a in polynomial(3, 2, MonomialOrder::Grevlex),
        b in polynomial(3, 2, MonomialOrder::Grevlex),
        c in polynomial(3, 2, MonomialOrder::Grevlex),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        let dense = DensePoly::from_polynomial(&a, 3).mul(&DensePoly::from_polynomial(&b, 3));
        prop_assert_eq!(DensePoly::from_polynomial(&a.mul(&b), 3), dense);
    }

    #[test]
    fn text_round_trip(p in polynomial(4, 3, MonomialOrder::Grevlex)) {
        let shape: Shape = "2x2".parse().unwrap();
        let text = format_polynomial(&p, &shape);
        let back = parse_polynomial(&text, &shape, Q, MonomialOrder::Grevlex).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn reduction_mod_p_is_a_ring_map(a in integer_polynomial(3), b in integer_polynomial(3), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
        let r = |x: &Polynomial| x.reduce_mod(p).unwrap();
        prop_assert_eq!(r(&a.mul(&b)), r(&a).mul(&r(&b)));
        prop_assert_eq!(r(&a.add(&b)), r(&a).add(&r(&b)));
    }
}

#[test]
fn contraction_examples() {
    let shape: Shape = "2x2".parse().unwrap();
    let p = |s: &str| parse_polynomial(s, &shape, Q, MonomialOrder::Grevlex).unwrap();
    assert_eq!(
        contract(&p("x[1,1]"), &p("x[1,1]^2")).unwrap(),
        p("2*x[1,1]")
    );
    assert!(contract(&p("x[1,1]^2"), &p("x[1,1]")).unwrap().is_zero());
    let f = p("x[1,1]*x[1,2] + x[2,1]*x[2,2]");
    assert!(contract(&p("x[1,1]*x[1,2] - x[2,1]*x[2,2]"), &f)
        .unwrap()
        .is_zero());
    let f3 = Field::prime(3).unwrap();
    assert!(contract(&p("x[1,1]").to_field(f3).unwrap(), &f.to_field(f3).unwrap()).is_err());
}
