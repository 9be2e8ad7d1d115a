//! Slice-ideal objects rebuilt from index tuples.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::dense::{factorial, DensePoly};

/// Row-major position of a 1-based index tuple.
pub fn var_position(dims: &[u32], index: &[u32]) -> usize {
    index
        .iter()
        .zip(dims)
        .fold(0, |acc, (&i, &n)| acc * n as usize + (i - 1) as usize)
}

/// Every 1-based tuple in the box, in row-major order.
pub fn tuples(dims: &[u32]) -> Vec<Vec<u32>> {
    dims.iter().fold(vec![vec![]], |acc, &n| {
        acc.into_iter()
            .flat_map(|t| (1..=n).map(move |j| [t.clone(), vec![j]].concat()))
            .collect()
    })
}

pub fn nvars(dims: &[u32]) -> usize {
    dims.iter().product::<u32>() as usize
}

/// Exponent vector of `s_ij`.
pub fn slice_exponents(dims: &[u32], i: usize, j: u32) -> Vec<u32> {
    let mut e = vec![0; nvars(dims)];
    for t in tuples(dims) {
        if t[i - 1] == j {
            e[var_position(dims, &t)] = 1;
        }
    }
    e
}

/// Vectors of length `len` with entries summing to `total`.
fn compositions(len: usize, total: u32) -> Vec<Vec<u32>> {
    if len == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|a| {
            compositions(len - 1, total - a)
                .into_iter()
                .map(move |r| [vec![a], r].concat())
        })
        .collect()
}

/// `Σ_A ∏_p ℓ_p^{|p|_A} / (|p|_A!)^{n_d}` over all `(d−1)`-row arrays whose
/// row `i` has `n_i` entries summing to `condition[i] − 1`, by brute force.
pub fn master_sum(dims: &[u32], condition: &[u32]) -> DensePoly {
    let d = dims.len();
    let nd = dims[d - 1];
    let rows: Vec<Vec<Vec<u32>>> = (0..d - 1)
        .map(|i| compositions(dims[i] as usize, condition[i] - 1))
        .collect();
    let arrays = rows
        .iter()
        .fold(vec![vec![]], |acc: Vec<Vec<Vec<u32>>>, choices| {
            acc.into_iter()
                .flat_map(|a| {
                    choices
                        .iter()
                        .map(move |r| [a.clone(), vec![r.clone()]].concat())
                })
                .collect()
        });
    let points = tuples(&dims[..d - 1]);
    let mut out = DensePoly::zero(nvars(dims));
    for a in arrays {
        let mut e = vec![0; nvars(dims)];
        let mut den = BigInt::one();
        for p in &points {
            let w: u32 = p
                .iter()
                .enumerate()
                .map(|(i, &pi)| a[i][pi as usize - 1])
                .sum();
            den *= factorial(w).pow(nd);
            for k in 1..=nd {
                e[var_position(dims, &[p.clone(), vec![k]].concat())] = w;
            }
        }
        out.add_term(e, BigRational::new(BigInt::one(), den));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_master_sum() {
        // F = x11 x12 + x21 x22
        let f = master_sum(&[2, 2], &[2]);
        assert_eq!(f.terms.len(), 2);
        assert!(f.terms.contains_key(&vec![1, 1, 0, 0]));
        assert!(f.terms.contains_key(&vec![0, 0, 1, 1]));
        assert_eq!(slice_exponents(&[2, 2], 2, 1), vec![1, 0, 1, 0]);
    }
}
