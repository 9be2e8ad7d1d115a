//! Slice ideals in arrays of variables and machine-checked certificates for
//! their depth and projective dimension.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: exact scalars, monomials, orders, polynomials and contraction.
//! * [`groebner`]: division, Buchberger, membership, intersections and colons.
//! * [`slicefamily`]: slices, the slice ideal, tableaux and the inverse-system
//!   polynomial.
//! * [`witness`]: annihilation, pairing and colon-membership certificates.
//! * [`resolution`]: Schreyer resolutions, minimalization, Betti tables and the
//!   Taylor complex.

pub mod groebner;
pub mod par;
pub mod poly;
pub mod resolution;
pub mod slicefamily;
pub mod witness;

pub use par::Execution;
