//! Ideal membership by linear algebra in a bounded degree.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::dense::{exponents_of_degree, DensePoly};

type Row = BTreeMap<Vec<u32>, BigRational>;

/// Row-echelon span of coefficient vectors indexed by exponent vectors.
#[derive(Default)]
pub struct Span {
    pivots: BTreeMap<Vec<u32>, Row>,
}

impl Span {
    /// Reduces `row` against the pivots; returns the residue.
    fn reduce(&self, mut row: Row) -> Row {
        loop {
            let Some((key, c)) = row.iter().find(|(k, _)| self.pivots.contains_key(*k)) else {
                return row;
            };
            let (key, c) = (key.clone(), c.clone());
            let p = &self.pivots[&key];
            let factor = c / &p[&key];
            for (k, v) in p {
                let e = row.entry(k.clone()).or_insert_with(BigRational::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    row.remove(k);
                }
            }
        }
    }

    pub fn insert(&mut self, row: Row) -> bool {
        let r = self.reduce(row);
        match r.keys().next().cloned() {
            Some(k) => {
                self.pivots.insert(k, r);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, row: Row) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `f ∈ (gens)` decided in the vector space spanned by `m·g` with
/// `deg(m) + deg(g) ≤ deg f`. Exact when every generator is homogeneous
/// and `f` is homogeneous.
pub fn truncated_member(f: &DensePoly, gens: &[DensePoly]) -> bool {
    let Some(top) = f.degree() else { return true };
    let n = f.nvars;
    let mut span = Span::default();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > top {
            continue;
        }
        for t in 0..=top - dg {
            for e in exponents_of_degree(n, t) {
                let m = DensePoly::monomial(e, BigRational::from_integer(1.into()));
                span.insert(m.mul(g).terms);
            }
        }
    }
    span.contains(f.terms.clone())
}
