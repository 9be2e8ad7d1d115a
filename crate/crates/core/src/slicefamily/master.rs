use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::tableau::{points, tableaux, Tableau};
use super::SliceError;
use crate::par::Execution;
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, Scalar, Shape, VarIndex};

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// The term `τ_A = ∏_p ℓ_p^{|p|_A} / (|p|_A!)^{n_d}` of a tableau.
pub fn tau(shape: &Shape, a: &Tableau) -> (Scalar, Monomial) {
    let d = shape.dimension();
    let nd = shape.extent(d);
    let mut denominator = BigInt::one();
    let mut exps = Vec::new();
    for p in points(shape) {
        let w = a.weight(&p);
        if w == 0 {
            continue;
        }
        denominator *= factorial(w).pow(nd);
        let mut index = p.clone();
        index.push(1);
        let first = shape.var_id(&VarIndex(index)).expect("valid point");
        exps.extend((first..first + nd).map(|v| (v, w)));
    }
    let coefficient = BigRational::new(BigInt::one(), denominator);
    (Scalar::Rational(coefficient), Monomial::from_pairs(exps))
}

/// `Σ_A τ_A` over tableaux satisfying `condition`; equal monomials from
/// distinct tableaux are merged.
pub fn master_polynomial(
    shape: &Shape,
    condition: &[u32],
    exec: Execution,
) -> Result<Polynomial, SliceError> {
    let all: Vec<Tableau> = tableaux(shape, condition)?.collect();
    let terms = exec.map(&all, |a| tau(shape, a));
    Ok(Polynomial::from_terms(
        Field::Rational,
        MonomialOrder::Grevlex,
        terms,
    ))
}

/// `F`, the sum over tableaux with row condition `(n_1, …, n_{d−1})`.
pub fn build_f(shape: &Shape) -> Polynomial {
    let d = shape.dimension();
    let condition: Vec<u32> = (1..d).map(|i| shape.extent(i)).collect();
    master_polynomial(shape, &condition, Execution::default())
        .expect("shape extents are valid conditions")
}

/// `α = ∏_p (|p|_{A_s}!)^{n_d}`, the factor with `s = α·τ_{A_s}`.
pub fn alpha(shape: &Shape) -> BigInt {
    let witness = Tableau::witness(shape);
    let nd = shape.extent(shape.dimension());
    points(shape)
        .iter()
        .map(|p| factorial(witness.weight(p)).pow(nd))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slicefamily::witness_monomial;

    fn shape(dims: &[u32]) -> Shape {
        Shape::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn two_by_two_master_polynomial() {
        let s = shape(&[2, 2]);
        let f = build_f(&s);
        let q = Field::Rational;
        let expected = Polynomial::from_terms(
            q,
            MonomialOrder::Grevlex,
            [
                (q.one(), Monomial::product_of([0, 1])),
                (q.one(), Monomial::product_of([2, 3])),
            ],
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn witness_is_a_multiple_of_its_term() {
        for dims in [&[2, 2][..], &[3, 2], &[2, 2, 2], &[3, 4, 2]] {
            let s = shape(dims);
            let (c, m) = tau(&s, &Tableau::witness(&s));
            assert_eq!(m, witness_monomial(&s));
            let a = alpha(&s);
            assert!(c.mul_bigint(&a).is_one());
        }
    }

    #[test]
    fn coefficients_are_positive_and_deterministic() {
        let s = shape(&[3, 3, 2]);
        let f = build_f(&s);
        assert!(f
            .terms()
            .iter()
            .all(|(c, _)| !c.is_negative() && !c.is_zero()));
        assert_eq!(f, build_f(&s));
        let seq = master_polynomial(&s, &[3, 3], Execution::Sequential).unwrap();
        assert_eq!(seq, f);
    }
}
