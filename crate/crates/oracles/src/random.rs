//! Seeded generators of small random inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::dense::{exponents_of_degree, DensePoly};

pub fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    loop {
        let q = small_rational(rng, bound);
        if q != BigRational::from_integer(0.into()) {
            return q;
        }
    }
}

pub fn exponent_vector<R: Rng>(rng: &mut R, nvars: usize, max_exp: u32) -> Vec<u32> {
    (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect()
}

/// Up to `max_terms` terms with exponents at most `max_exp`.
pub fn polynomial<R: Rng>(rng: &mut R, nvars: usize, max_exp: u32, max_terms: usize) -> DensePoly {
    let mut p = DensePoly::zero(nvars);
    for _ in 0..rng.gen_range(1..=max_terms) {
        p.add_term(
            exponent_vector(rng, nvars, max_exp),
            nonzero_rational(rng, 5),
        );
    }
    p
}

/// A homogeneous polynomial of degree `deg` with up to `max_terms` terms.
pub fn homogeneous<R: Rng>(rng: &mut R, nvars: usize, deg: u32, max_terms: usize) -> DensePoly {
    let all = exponents_of_degree(nvars, deg);
    let mut p = DensePoly::zero(nvars);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let e = all[rng.gen_range(0..all.len())].clone();
        p.add_term(
            e,
            BigRational::from_integer(rng.gen_range(-3i64..=3).into()),
        );
    }
    p
}

/// A squarefree monomial of positive degree.
pub fn squarefree<R: Rng>(rng: &mut R, nvars: usize) -> Vec<u32> {
    loop {
        let e: Vec<u32> = (0..nvars).map(|_| rng.gen_bool(0.5) as u32).collect();
        if e.iter().any(|&k| k > 0) {
            return e;
        }
    }
}
