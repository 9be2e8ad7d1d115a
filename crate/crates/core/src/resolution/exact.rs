//! Exactness of a graded complex checked one degree at a time by ranks of
//! the coefficient matrices of each differential.

use std::collections::{BTreeMap, HashMap};

use super::{FreeResolution, PolyMatrix, ResolutionError};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Scalar};

/// Result of [`verify_exactness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub exact: bool,
    pub max_degree: i64,
    /// `(degree, homological index)` where homology is nonzero; index 0
    /// means `H_0 ≠ R/I` in that degree.
    pub failures: Vec<(i64, usize)>,
}

/// All monomials of degree `t` in `n` variables.
pub(crate) fn monomials_of_degree(n: u32, t: u32) -> Vec<Monomial> {
    fn go(v: u32, n: u32, left: u32, acc: &mut Vec<(u32, u32)>, out: &mut Vec<Monomial>) {
        if v + 1 == n {
            if left > 0 {
                acc.push((v, left));
            }
            out.push(Monomial::from_pairs(acc.iter().copied()));
            if left > 0 {
                acc.pop();
            }
            return;
        }
        for e in (0..=left).rev() {
            if e > 0 {
                acc.push((v, e));
            }
            go(v + 1, n, left - e, acc, out);
            if e > 0 {
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if t == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    go(0, n, t, &mut Vec::new(), &mut out);
    out
}

/// Basis of `(F)_t`: pairs (basis index, monomial of degree `t − deg e_k`).
fn graded_basis(degrees: &[i64], n: u32, t: i64) -> Vec<(usize, Monomial)> {
    degrees
        .iter()
        .enumerate()
        .filter(|(_, &d)| d <= t)
        .flat_map(|(k, &d)| {
            monomials_of_degree(n, (t - d) as u32)
                .into_iter()
                .map(move |m| (k, m))
        })
        .collect()
}

fn rank(rows: Vec<BTreeMap<usize, Scalar>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
    for mut row in rows {
        while let Some((&lead, c)) = row.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, row);
                break;
            };
            let factor = c.div(&p[&lead]).expect("nonzero pivot");
            for (&k, v) in p {
                let new = row
                    .get(&k)
                    .cloned()
                    .unwrap_or_else(|| v.field().zero())
                    .sub(&factor.mul(v));
                if new.is_zero() {
                    row.remove(&k);
                } else {
                    row.insert(k, new);
                }
            }
        }
    }
    pivots.len()
}

/// Rank of `d: (F_src)_t → (F_tgt)_t`.
fn graded_rank(d: &PolyMatrix, n: u32, t: i64) -> usize {
    let target: HashMap<(usize, Monomial), usize> = graded_basis(d.target().degrees(), n, t)
        .into_iter()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect();
    let rows = graded_basis(d.source().degrees(), n, t)
        .into_iter()
        .map(|(k, m)| {
            let mut row = BTreeMap::new();
            for (r, p) in d.columns()[k].iter().enumerate() {
                for (c, mono) in p.terms() {
                    let idx = target[&(r, mono.mul(&m))];
                    row.insert(idx, c.clone());
                }
            }
            row
        })
        .collect();
    rank(rows)
}

fn standard_monomials(ideal_leads: &[Monomial], n: u32, t: i64) -> usize {
    monomials_of_degree(n, t as u32)
        .iter()
        .filter(|m| !ideal_leads.iter().any(|l| l.divides(m)))
        .count()
}

/// Checks `H_i = 0` for `i ≥ 1` and `H_0 = R/I` in every degree up to
/// `max_degree`, for a resolution of `R/ideal`. Needs homogeneous maps.
pub fn verify_exactness_of(
    res: &FreeResolution,
    ideal: &Ideal,
    max_degree: i64,
) -> Result<ExactnessReport, ResolutionError> {
    let homogeneous = res.maps().iter().all(|d| {
        d.columns().iter().enumerate().all(|(c, col)| {
            col.iter().enumerate().all(|(r, p)| {
                p.terms().iter().all(|(_, m)| {
                    m.degree() as i64 + d.target().degrees()[r] == d.source().degrees()[c]
                })
            })
        })
    });
    if !homogeneous || !ideal.is_homogeneous() {
        return Err(ResolutionError::NotHomogeneous);
    }
    let n = res.nvars();
    let leads: Vec<Monomial> = ideal.groebner_basis().lead_monomials().cloned().collect();
    let mut failures = Vec::new();
    for t in 0..=max_degree {
        let ranks: Vec<usize> = res.maps().iter().map(|d| graded_rank(d, n, t)).collect();
        let dims: Vec<usize> = res
            .modules()
            .iter()
            .map(|m| graded_basis(m.degrees(), n, t).len())
            .collect();
        let at = |i: usize| ranks.get(i).copied().unwrap_or(0);
        if dims[0] - at(0) != standard_monomials(&leads, n, t) {
            failures.push((t, 0));
        }
        for (i, &dim) in dims.iter().enumerate().skip(1) {
            if at(i - 1) + at(i) != dim {
                failures.push((t, i));
            }
        }
    }
    Ok(ExactnessReport {
        exact: failures.is_empty(),
        max_degree,
        failures,
    })
}

/// [`verify_exactness_of`] against the ideal generated by the entries of `d_1`.
pub fn verify_exactness(
    res: &FreeResolution,
    max_degree: i64,
) -> Result<ExactnessReport, ResolutionError> {
    let gens = res
        .maps()
        .first()
        .map(|d| d.columns().iter().map(|c| c[0].clone()).collect())
        .unwrap_or_default();
    let ideal = Ideal::new(gens, res.nvars(), res.field(), res.order());
    verify_exactness_of(res, &ideal, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one()]);
    }
}
