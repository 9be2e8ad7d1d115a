//! Slices of a variable array, the slice ideal, the witness monomial, line
//! monomials, tableaux and the inverse-system polynomial they index.
//!
//! Directions and indices are 1-based throughout: direction `i` ranges over
//! `1..=d` and index `j` over `1..=n_i`.

mod master;
mod support;
mod tableau;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

pub use master::{alpha, build_f, master_polynomial, tau};
pub use support::{max_support_bound, support_bound, support_count, SupportCount};
pub use tableau::{points, tableau_count, tableaux, Tableau, Tableaux};

use crate::groebner::Ideal;
pub use crate::poly::Shape;
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SliceError {
    #[error("slice ({direction}, {index}) out of range for shape {shape}")]
    SliceOutOfRange {
        direction: usize,
        index: u32,
        shape: String,
    },
    #[error("point {0:?} is not in the index set of the first d-1 directions")]
    PointOutOfRange(Vec<u32>),
    #[error("invalid row condition {0:?}")]
    InvalidCondition(Vec<u32>),
    #[error("support bound needs 1 <= r <= N, got N={n}, r={r}")]
    BoundOutOfRange { n: i64, r: i64 },
}

fn slice_vars(shape: &Shape, i: usize, j: u32) -> impl Iterator<Item = VarId> + '_ {
    (0..shape.num_vars()).filter(move |&v| shape.var_index(v).0[i - 1] == j)
}

/// `s_ij`: the product of all variables whose `i`-th coordinate is `j`.
pub fn slice(shape: &Shape, i: usize, j: u32) -> Result<Monomial, SliceError> {
    if i < 1 || i > shape.dimension() || j < 1 || j > shape.extent(i) {
        return Err(SliceError::SliceOutOfRange {
            direction: i,
            index: j,
            shape: shape.to_string(),
        });
    }
    Ok(Monomial::product_of(slice_vars(shape, i, j)))
}

/// `ℓ_p`: the product of the `n_d` variables `x[p, 1], …, x[p, n_d]`.
pub fn line_monomial(shape: &Shape, p: &[u32]) -> Result<Monomial, SliceError> {
    let d = shape.dimension();
    if p.len() != d - 1
        || p.iter()
            .enumerate()
            .any(|(i, &pi)| pi < 1 || pi > shape.extent(i + 1))
    {
        return Err(SliceError::PointOutOfRange(p.to_vec()));
    }
    let mut index = p.to_vec();
    index.push(1);
    let first = shape
        .var_id(&crate::poly::VarIndex(index))
        .expect("validated point");
    // the last coordinate has stride one
    Ok(Monomial::product_of(first..first + shape.extent(d)))
}

/// `s = ∏_{i<d} ∏_{j≥2} s_ij`.
pub fn witness_monomial(shape: &Shape) -> Monomial {
    let d = shape.dimension();
    let mut s = Monomial::one();
    for i in 1..d {
        for j in 2..=shape.extent(i) {
            s = s.mul(&slice(shape, i, j).expect("in range"));
        }
    }
    s
}

/// Which family a generator of the slice ideal belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `s_{i1} − s_{ij}` for `i < d`, `j ≥ 2`.
    Binomial { direction: usize, index: u32 },
    /// `s_{dj}`.
    Slice { index: u32 },
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::Binomial { direction, index } => {
                write!(f, "s[{direction},1] - s[{direction},{index}]")
            }
            GeneratorKind::Slice { index } => write!(f, "s[d,{index}]"),
        }
    }
}

/// The slice ideal of a shape, generators in direction-major then index order.
#[derive(Clone, Debug)]
pub struct SliceIdeal {
    shape: Shape,
    field: Field,
    order: MonomialOrder,
    generators: Vec<(GeneratorKind, Polynomial)>,
}

impl SliceIdeal {
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn labelled_generators(&self) -> &[(GeneratorKind, Polynomial)] {
        &self.generators
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|(_, g)| g.clone()).collect()
    }

    /// Position of a binomial generator `s_{i1} − s_{ij}` (`j ≥ 2`).
    pub fn binomial_position(&self, direction: usize, index: u32) -> Option<usize> {
        self.generators
            .iter()
            .position(|(k, _)| *k == GeneratorKind::Binomial { direction, index })
    }

    /// Position of the monomial generator `s_{dj}`.
    pub fn slice_position(&self, index: u32) -> Option<usize> {
        self.generators
            .iter()
            .position(|(k, _)| *k == GeneratorKind::Slice { index })
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(
            self.generators(),
            self.shape.num_vars(),
            self.field,
            self.order,
        )
    }

    /// Expected count `Σ_{i<d}(n_i − 1) + n_d`.
    pub fn expected_generator_count(shape: &Shape) -> usize {
        let d = shape.dimension();
        (1..d).map(|i| shape.extent(i) as usize - 1).sum::<usize>() + shape.extent(d) as usize
    }
}

/// The slice ideal `(s_{i1} − s_{ij} : i < d, j ≥ 2) + (s_{dj} : j)` over ℚ, grevlex.
pub fn build_ideal(shape: &Shape) -> SliceIdeal {
    build_ideal_in(shape, Field::Rational, MonomialOrder::Grevlex)
}

pub fn build_ideal_in(shape: &Shape, field: Field, order: MonomialOrder) -> SliceIdeal {
    let d = shape.dimension();
    let mono = |m: Monomial| Polynomial::monomial(field, order, m);
    let mut generators = Vec::new();
    for i in 1..d {
        let first = mono(slice(shape, i, 1).expect("in range"));
        for j in 2..=shape.extent(i) {
            let other = mono(slice(shape, i, j).expect("in range"));
            generators.push((
                GeneratorKind::Binomial {
                    direction: i,
                    index: j,
                },
                first.sub(&other),
            ));
        }
    }
    for j in 1..=shape.extent(d) {
        generators.push((
            GeneratorKind::Slice { index: j },
            mono(slice(shape, d, j).expect("in range")),
        ));
    }
    SliceIdeal {
        shape: shape.clone(),
        field,
        order,
        generators,
    }
}

/// `n_1 ⋯ n_d` as an arbitrary-precision integer.
pub fn variable_count(shape: &Shape) -> BigInt {
    shape.dims().iter().map(|&n| BigInt::from(n)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::format_polynomial;

    fn shape(dims: &[u32]) -> Shape {
        Shape::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn slices_of_two_by_two() {
        let s = shape(&[2, 2]);
        assert_eq!(slice(&s, 1, 1).unwrap(), Monomial::product_of([0, 1]));
        assert_eq!(
            slice(&s, 1, 1).unwrap().mul(&slice(&s, 1, 2).unwrap()),
            s.all_variables()
        );
        assert!(slice(&s, 3, 1).is_err());
        assert!(slice(&s, 1, 3).is_err());
        assert!(slice(&s, 0, 1).is_err());
    }

    #[test]
    fn slice_degrees_in_three_four_two() {
        let s = shape(&[3, 4, 2]);
        for j in 1..=4 {
            assert_eq!(slice(&s, 2, j).unwrap().degree(), 6);
        }
    }

    #[test]
    fn each_variable_lies_in_one_slice_per_direction() {
        let s = shape(&[3, 2, 2]);
        for v in 0..s.num_vars() {
            let hits: usize = (1..=3)
                .map(|i| {
                    (1..=s.extent(i))
                        .filter(|&j| slice(&s, i, j).unwrap().exponent(v) == 1)
                        .count()
                })
                .sum();
            assert_eq!(hits, 3);
        }
    }

    #[test]
    fn ideal_of_two_by_two() {
        let s = shape(&[2, 2]);
        let ideal = build_ideal(&s);
        let text: Vec<String> = ideal
            .generators()
            .iter()
            .map(|g| format_polynomial(g, &s))
            .collect();
        assert_eq!(
            text,
            vec![
                "x[1,1]*x[1,2] - x[2,1]*x[2,2]",
                "x[1,1]*x[2,1]",
                "x[1,2]*x[2,2]"
            ]
        );
    }

    #[test]
    fn generator_degrees_and_counts() {
        let s = shape(&[3, 4, 2]);
        let ideal = build_ideal(&s);
        assert_eq!(
            ideal.generators().len(),
            SliceIdeal::expected_generator_count(&s)
        );
        assert_eq!(ideal.generators().len(), 2 + 3 + 2);
        for (kind, g) in ideal.labelled_generators() {
            let expected = match kind {
                GeneratorKind::Binomial { direction, .. } => 24 / s.extent(*direction),
                GeneratorKind::Slice { .. } => 12,
            };
            assert!(g.is_homogeneous());
            assert_eq!(g.degree(), Some(expected));
        }
    }

    #[test]
    fn witness_examples() {
        let s = shape(&[2, 2]);
        assert_eq!(witness_monomial(&s), Monomial::product_of([2, 3]));
        let c = shape(&[2, 2, 2]);
        let w = witness_monomial(&c);
        assert_eq!(w, slice(&c, 1, 2).unwrap().mul(&slice(&c, 2, 2).unwrap()));
        assert_eq!(
            w.exponent(c.var_id(&crate::poly::VarIndex(vec![2, 2, 1])).unwrap()),
            2
        );
        assert_eq!(
            w.exponent(c.var_id(&crate::poly::VarIndex(vec![2, 2, 2])).unwrap()),
            2
        );
        let big = shape(&[3, 4, 2]);
        let w = witness_monomial(&big);
        for v in 0..big.num_vars() {
            let ix = big.var_index(v).0;
            let expected = ix[..2].iter().filter(|&&x| x != 1).count() as u32;
            assert_eq!(w.exponent(v), expected);
        }
    }

    #[test]
    fn line_monomials_partition_the_variables() {
        let s = shape(&[2, 2]);
        assert_eq!(line_monomial(&s, &[1]).unwrap(), slice(&s, 1, 1).unwrap());
        let big = shape(&[3, 4, 2]);
        assert_eq!(line_monomial(&big, &[3, 1]).unwrap().degree(), 2);
        let product = points(&big).iter().fold(Monomial::one(), |acc, p| {
            acc.mul(&line_monomial(&big, p).unwrap())
        });
        assert_eq!(product, big.all_variables());
        assert!(line_monomial(&big, &[4, 1]).is_err());
        assert!(line_monomial(&big, &[1]).is_err());
    }
}
