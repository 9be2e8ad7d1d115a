//! Monomial orders. Variables are ranked by id: id 0 is the largest variable.

use std::cmp::Ordering;
use std::fmt;

use super::monomial::{Monomial, VarId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Block order eliminating the variables with id `< split`: grevlex on
    /// that block first, then grevlex on the remaining variables.
    Elimination {
        split: VarId,
    },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::Grevlex => grevlex(a.exponents(), a.degree(), b.exponents(), b.degree()),
            MonomialOrder::Elimination { split } => {
                let (a_hi, a_lo) = a.split_at_var(split);
                let (b_hi, b_lo) = b.split_at_var(split);
                grevlex(a_hi, block_degree(a_hi), b_hi, block_degree(b_hi))
                    .then_with(|| grevlex(a_lo, block_degree(a_lo), b_lo, block_degree(b_lo)))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Elimination { .. } => "elimination",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn block_degree(exps: &[(VarId, u32)]) -> u32 {
    exps.iter().map(|&(_, e)| e).sum()
}

fn lex(a: &[(VarId, u32)], b: &[(VarId, u32)]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x.0 != y.0 {
            // the side holding the smaller (higher-ranked) variable wins
            return if x.0 < y.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        if x.1 != y.1 {
            return x.1.cmp(&y.1);
        }
    }
    a.len().cmp(&b.len())
}

fn grevlex(a: &[(VarId, u32)], da: u32, b: &[(VarId, u32)], db: u32) -> Ordering {
    if da != db {
        return da.cmp(&db);
    }
    // Scan from the lowest-ranked variable; smaller exponent there is larger.
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x.0 != y.0 {
            // the side with the larger id has a positive exponent the other lacks
            return if x.0 > y.0 {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        if x.1 != y.1 {
            return y.1.cmp(&x.1);
        }
    }
    // equal degree and one support list is a suffix of the other: impossible
    // unless both are equal
    a.len().cmp(&b.len())
}
