mod common;

use proptest::prelude::*;
use slicepd::groebner::ideal_member;
use slicepd::poly::{contract, Field, Monomial, Polynomial, Scalar};
use slicepd::resolution::ab_projdim;
use slicepd::slicefamily::{
    alpha, build_f, build_ideal, line_monomial, points, slice, support_count, tableau_count,
    tableaux, tau, witness_monomial, Shape, SliceIdeal, Tableau,
};
use slicepd::witness::{
    certify_depth_zero, check_recursion, exchange_membership, slice_exchange_reduce, ColonMode,
    ColonPlan, ExchangeMove, SliceProduct,
};
use slicepd::Execution;
use slicepd_oracles::slice::{nvars, slice_exponents, tuples, var_position};

/// Shapes with at most `limit` variables.
fn shape(limit: u32) -> impl Strategy<Value = Shape> {
    prop::collection::vec(2u32..=4, 2..=4)
        .prop_filter("too many variables", move |d| {
            d.iter().product::<u32>() <= limit
        })
        .prop_map(|d| Shape::new(d).unwrap())
}

proptest! {
    #![proptest_config(common::seeded(64))]

    #[test]
    fn slices_partition_the_variables(shape in shape(24)) {
        let all = shape.all_variables();
        for i in 1..=shape.dimension() {
            let mut product = Monomial::one();
            for j in 1..=shape.extent(i) {
                let s = slice(&shape, i, j).unwrap();
                prop_assert!(s.is_squarefree());
                prop_assert_eq!(s.degree(), shape.num_vars() / shape.extent(i));
                prop_assert!(product.is_coprime(&s));
                product = product.mul(&s);
                let e = slice_exponents(shape.dims(), i, j);
                let expected = Monomial::from_pairs(e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(v, &k)| (v as u32, k)));
                prop_assert_eq!(&s, &expected);
            }
            prop_assert_eq!(&product, &all);
        }
        let lines = points(&shape).iter().fold(Monomial::one(), |acc, p| acc.mul(&line_monomial(&shape, p).unwrap()));
        prop_assert_eq!(lines, all);
    }

    #[test]
    fn variable_ids_are_row_major(shape in shape(24)) {
        for t in tuples(shape.dims()) {
            let v = shape.var(&t).unwrap();
            prop_assert_eq!(v, Monomial::var(var_position(shape.dims(), &t) as u32));
        }
        prop_assert_eq!(shape.num_vars() as usize, nvars(shape.dims()));
    }

    #[test]
    fn generators_and_support(shape in shape(24)) {
        let ideal = build_ideal(&shape);
        let d = shape.dimension();
        let binomials: u32 = (1..d).map(|i| shape.extent(i) - 1).sum();
        prop_assert_eq!(ideal.generators().len(), (binomials + shape.extent(d)) as usize);
        prop_assert_eq!(ideal.generators().len(), SliceIdeal::expected_generator_count(&shape));
        let count = support_count(&ideal.generators());
        prop_assert_eq!(count.multiplicity as u32, 2 * binomials + shape.extent(d));
        prop_assert!(ideal.generators().iter().all(Polynomial::is_homogeneous));
    }

    #[test]
    fn tableau_enumeration_matches_its_count(shape in shape(24)) {
        let d = shape.dimension();
        let condition: Vec<u32> = (1..d).map(|i| shape.extent(i)).collect();
        let all: Vec<Tableau> = tableaux(&shape, &condition).unwrap().collect();
        prop_assert_eq!(all.len() as u128, tableau_count(&shape, &condition));
        prop_assert!(all.iter().all(|a| a.satisfies(&condition)));
        let mut sorted = all.clone();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn witness_pairs_to_one(shape in shape(12)) {
        let f = build_f(&shape);
        let s = Polynomial::monomial(Field::Rational, f.order(), witness_monomial(&shape));
        prop_assert_eq!(contract(&s, &f).unwrap(), Polynomial::one(Field::Rational, f.order()));
        let (c, m) = tau(&shape, &Tableau::witness(&shape));
        prop_assert_eq!(&m, &witness_monomial(&shape));
        prop_assert!(c.mul_bigint(&alpha(&shape)).is_one());
    }

    #[test]
    fn generators_annihilate_f(shape in shape(12)) {
        let f = build_f(&shape);
        for g in build_ideal(&shape).generators() {
            prop_assert!(contract(&g, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn exchange_identities_expand_correctly(shape in shape(12), seed in any::<u64>()) {
        let ideal = build_ideal(&shape);
        let d = shape.dimension();
        let product = SliceProduct::witness(&ideal);
        let mut moves = Vec::new();
        let mut current = product.clone();
        let mut x = seed;
        for _ in 0..6 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = 1 + (x >> 33) as usize % (d - 1);
            let held: Vec<u32> = current.factors().filter(|((k, _), _)| *k == i).map(|((_, j), _)| j).collect();
            let from = held[(x >> 40) as usize % held.len()];
            let to = 1 + (x >> 20) as u32 % shape.extent(i);
            let mv = ExchangeMove { direction: i, from, to };
            current = slice_exchange_reduce(&current, &ideal, &[mv]).unwrap().output;
            moves.push(mv);
        }
        let cert = slice_exchange_reduce(&product, &ideal, &moves).unwrap();
        prop_assert_eq!(&cert.output, &current);
        prop_assert!(cert.verify(&ideal));
        prop_assert!(ideal_member(&cert.combination(&ideal), &ideal.to_ideal()));
    }
}

#[test]
fn exchange_and_groebner_modes_agree() {
    for dims in [
        vec![2, 2],
        vec![3, 2],
        vec![2, 3],
        vec![4, 2],
        vec![2, 4],
        vec![2, 2, 2],
    ] {
        let shape = Shape::new(dims).unwrap();
        let cert = certify_depth_zero(&shape, ColonPlan::Auto, Execution::default());
        assert_eq!(cert.modes_agree, Some(true), "{shape}");
        assert!(cert.verdict, "{shape}");
        let by_mode = |m: ColonMode| cert.colon.iter().filter(|c| c.mode == m).count();
        assert_eq!(by_mode(ColonMode::Exchange), shape.num_vars() as usize);
        assert_eq!(by_mode(ColonMode::Groebner), shape.num_vars() as usize);
    }
}

#[test]
fn exchange_membership_for_every_variable() {
    let shape = Shape::new(vec![3, 2, 2]).unwrap();
    let ideal = build_ideal(&shape);
    for nu in shape.indices() {
        let evidence = exchange_membership(&ideal, &nu);
        assert!(evidence.member, "{nu}: {}", evidence.detail);
    }
}

#[test]
fn sequential_and_parallel_certificates_match() {
    let shape = Shape::new(vec![3, 2, 2]).unwrap();
    let a = certify_depth_zero(
        &shape,
        ColonPlan::Only(ColonMode::Exchange),
        Execution::Sequential,
    );
    let b = certify_depth_zero(
        &shape,
        ColonPlan::Only(ColonMode::Exchange),
        Execution::Parallel,
    );
    assert_eq!(a.checks(), b.checks());
    let f = build_f(&shape);
    assert!(check_recursion(&shape, &f, Execution::Sequential).pass());
}

#[test]
fn cubic_support_formula() {
    // 2(n−1)(d−1) + n terms for the n×…×n shape
    for (n, d) in [(2u32, 2usize), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)] {
        let shape = Shape::new(vec![n; d]).unwrap();
        let count = support_count(&build_ideal(&shape).generators());
        assert_eq!(count.multiplicity as u32, 2 * (n - 1) * (d as u32 - 1) + n);
    }
}

#[test]
fn projdim_of_cubes_of_twos() {
    for k in 2..=4 {
        let shape = Shape::new(vec![2; k]).unwrap();
        let cert = certify_depth_zero(
            &shape,
            ColonPlan::Only(ColonMode::Exchange),
            Execution::default(),
        );
        assert_eq!(ab_projdim(&shape, &cert).unwrap(), 1 << k);
    }
}

#[test]
fn pairing_scalars_are_rational() {
    let shape = Shape::new(vec![2, 2]).unwrap();
    let cert = certify_depth_zero(&shape, ColonPlan::Auto, Execution::Sequential);
    assert_eq!(cert.pairing, Field::Rational.one());
    assert!(matches!(cert.pairing, Scalar::Rational(_)));
}
