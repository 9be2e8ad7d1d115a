//! Exact scalars, monomials, monomial orders, sparse polynomials and the
//! contraction (partial differentiation) action.

mod contract;
mod monomial;
mod order;
mod polynomial;
mod scalar;
mod shape;
pub mod text;

use thiserror::Error;

pub use contract::{contract, contract_monomial};
pub use monomial::{Monomial, VarId};
pub use order::MonomialOrder;
pub use polynomial::Polynomial;
pub use scalar::{Field, Scalar};
pub use shape::{Shape, VarIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("monomial order mismatch: {0} vs {1}")]
    OrderMismatch(MonomialOrder, MonomialOrder),
    #[error("{0} is not a supported prime")]
    NotPrime(u32),
    #[error("denominator vanishes modulo {modulus}")]
    DenominatorVanishes { modulus: u32 },
    #[error("contraction requires characteristic zero")]
    ContractionOverPrimeField,
    #[error("invalid shape {0:?}: need at least 2 directions, each of extent at least 2")]
    InvalidShape(Vec<u32>),
    #[error("malformed shape literal {0:?}, expected e.g. 2x3x2")]
    ShapeSyntax(String),
    #[error("index {index:?} out of range for shape {shape:?}")]
    IndexOutOfRange { index: Vec<u32>, shape: Vec<u32> },
}
