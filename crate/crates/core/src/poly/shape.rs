//! Layout of a d-dimensional array of variables.
//!
//! Variable ids are row-major positions of the (1-based) index tuples, so
//! ranking variables by id is the lexicographic order on tuples with
//! `x[1,…,1]` highest.

use std::fmt;
use std::str::FromStr;

use super::monomial::{Monomial, VarId};
use super::PolyError;

/// A 1-based index tuple `(ν₁,…,ν_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarIndex(pub Vec<u32>);

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// The array dimensions `(n₁,…,n_d)` with `d ≥ 2` and every `n_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    dims: Vec<u32>,
    strides: Vec<u32>,
    nvars: u32,
}

impl Shape {
    pub fn new(dims: Vec<u32>) -> Result<Self, PolyError> {
        if dims.len() < 2 || dims.iter().any(|&n| n < 2) {
            return Err(PolyError::InvalidShape(dims));
        }
        let nvars = dims
            .iter()
            .try_fold(1u32, |acc, &n| acc.checked_mul(n))
            .filter(|&n| n < u32::MAX / 2)
            .ok_or_else(|| PolyError::InvalidShape(dims.clone()))?;
        let mut strides = vec![1u32; dims.len()];
        for i in (0..dims.len() - 1).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        Ok(Shape {
            dims,
            strides,
            nvars,
        })
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    /// Number of directions `d`.
    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    /// `n_i` for a 1-based direction.
    pub fn extent(&self, direction: usize) -> u32 {
        self.dims[direction - 1]
    }

    pub fn num_vars(&self) -> u32 {
        self.nvars
    }

    /// True when all `n_i` agree.
    pub fn is_cubic(&self) -> bool {
        self.dims.windows(2).all(|w| w[0] == w[1])
    }

    pub fn var_id(&self, index: &VarIndex) -> Result<VarId, PolyError> {
        if index.0.len() != self.dims.len()
            || index
                .0
                .iter()
                .zip(&self.dims)
                .any(|(&i, &n)| i < 1 || i > n)
        {
            return Err(PolyError::IndexOutOfRange {
                index: index.0.clone(),
                shape: self.dims.clone(),
            });
        }
        Ok(index
            .0
            .iter()
            .zip(&self.strides)
            .map(|(&i, &s)| (i - 1) * s)
            .sum())
    }

    pub fn var_index(&self, id: VarId) -> VarIndex {
        assert!(id < self.nvars, "variable id {id} outside shape {self}");
        VarIndex(
            self.dims
                .iter()
                .zip(&self.strides)
                .map(|(&n, &s)| (id / s) % n + 1)
                .collect(),
        )
    }

    /// All index tuples in id (row-major) order.
    pub fn indices(&self) -> impl Iterator<Item = VarIndex> + '_ {
        (0..self.nvars).map(|id| self.var_index(id))
    }

    pub fn var(&self, index: &[u32]) -> Result<Monomial, PolyError> {
        Ok(Monomial::var(self.var_id(&VarIndex(index.to_vec()))?))
    }

    /// Product of every variable in the array.
    pub fn all_variables(&self) -> Monomial {
        Monomial::product_of(0..self.nvars)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, n) in self.dims.iter().enumerate() {
            if k > 0 {
                write!(f, "x")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for Shape {
    type Err = PolyError;

    /// Parses literals like `2x3x2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PolyError::ShapeSyntax(s.to_string());
        let dims = s
            .trim()
            .split('x')
            .map(|part| {
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    Err(bad())
                } else {
                    part.parse::<u32>().map_err(|_| bad())
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Shape::new(dims)
    }
}
