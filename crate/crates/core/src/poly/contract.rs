//! The action of the polynomial ring on itself by partial differentiation.
//!
//! `x^a ∘ x^b = (∏ b_v! / (b_v - a_v)!) x^(b - a)` when `a` divides `b`,
//! and zero otherwise, extended bilinearly.

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::scalar::{Field, Scalar};
use super::PolyError;

/// Falling-factorial weight `∏ b_v! / (b_v - a_v)!`, or `None` when `a ∤ b`.
pub fn contract_monomial(a: &Monomial, b: &Monomial) -> Option<(BigInt, Monomial)> {
    let quotient = b.div(a)?;
    let mut weight = BigInt::one();
    for &(v, e) in a.exponents() {
        let top = b.exponent(v);
        for k in (top - e + 1)..=top {
            weight *= k;
        }
    }
    Some((weight, quotient))
}

/// `g ∘ f`. Only defined in characteristic zero.
pub fn contract(g: &Polynomial, f: &Polynomial) -> Result<Polynomial, PolyError> {
    if g.field() != Field::Rational || f.field() != Field::Rational {
        return Err(PolyError::ContractionOverPrimeField);
    }
    if g.order() != f.order() {
        return Err(PolyError::OrderMismatch(g.order(), f.order()));
    }
    let mut terms: Vec<(Scalar, Monomial)> = Vec::new();
    for (c, a) in g.terms() {
        for (d, b) in f.terms() {
            if let Some((w, q)) = contract_monomial(a, b) {
                terms.push((c.mul(d).mul_bigint(&w), q));
            }
        }
    }
    Ok(Polynomial::from_terms(Field::Rational, f.order(), terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    const Q: Field = Field::Rational;
    const G: MonomialOrder = MonomialOrder::Grevlex;

    #[test]
    fn derivative_of_square() {
        let x = Polynomial::monomial(Q, G, Monomial::var(0));
        let x2 = Polynomial::monomial(Q, G, Monomial::var_pow(0, 2));
        assert_eq!(contract(&x, &x2).unwrap(), x.scale(&Q.from_int(2)));
        assert!(contract(&x2, &x).unwrap().is_zero());
    }

    #[test]
    fn self_pairing_is_product_of_factorials() {
        let m = Monomial::from_pairs([(0, 3), (2, 2)]);
        let (w, q) = contract_monomial(&m, &m).unwrap();
        assert_eq!(w, BigInt::from(12));
        assert!(q.is_one());
    }

    #[test]
    fn rejected_over_prime_fields() {
        let x = Polynomial::monomial(Field::Prime(5), G, Monomial::var(0));
        assert_eq!(contract(&x, &x), Err(PolyError::ContractionOverPrimeField));
    }
}
