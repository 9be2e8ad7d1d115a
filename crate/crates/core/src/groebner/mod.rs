//! Division, Buchberger's algorithm, reduced bases, membership,
//! intersections, colon ideals and interreduction of generating sets.

mod buchberger;
mod division;
mod ideal;
mod interreduce;

pub use buchberger::{
    buchberger, reduce_basis, reduced_groebner_basis, s_polynomial, GroebnerBasis,
};
pub use division::{divide, normal_form, Division};
pub use ideal::{colon, colon_maximal, ideal_equal, ideal_intersect, ideal_member, Ideal};
pub use interreduce::interreduce_generators;
