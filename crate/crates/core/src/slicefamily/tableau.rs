use std::fmt;

use super::SliceError;
use crate::poly::Shape;

/// `d − 1` rows of non-negative integers; row `i` has `n_i` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        Tableau { rows }
    }

    /// The tableau whose rows are `0, 1, …, 1`.
    pub fn witness(shape: &Shape) -> Self {
        let d = shape.dimension();
        Tableau {
            rows: (1..d)
                .map(|i| {
                    let n = shape.extent(i) as usize;
                    std::iter::once(0)
                        .chain(std::iter::repeat_n(1, n - 1))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `a_{ij}` with 1-based `i`, `j`.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    /// Row `i` sums to `condition[i] − 1` for every row.
    pub fn satisfies(&self, condition: &[u32]) -> bool {
        self.rows.len() == condition.len()
            && self
                .rows
                .iter()
                .zip(condition)
                .all(|(row, &c)| c >= 1 && row.iter().sum::<u32>() == c - 1)
    }

    /// `|p|_A = Σ_i a_{i, p_i}` for a 1-based point `p`.
    pub fn weight(&self, p: &[u32]) -> u32 {
        self.rows
            .iter()
            .zip(p)
            .map(|(row, &pi)| row[pi as usize - 1])
            .sum()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, " / ")?;
            }
            for (l, a) in row.iter().enumerate() {
                if l > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

/// Compositions of `total` into `parts` non-negative parts, in descending
/// lexicographic order.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Lazily enumerates the tableaux satisfying a row condition, first row
/// slowest, each row in descending lexicographic order.
pub struct Tableaux {
    rows: Vec<Vec<Vec<u32>>>,
    cursor: Option<Vec<usize>>,
}

impl Iterator for Tableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        let cursor = self.cursor.as_mut()?;
        let tableau = Tableau {
            rows: cursor
                .iter()
                .zip(&self.rows)
                .map(|(&k, choices)| choices[k].clone())
                .collect(),
        };
        // odometer step, last row fastest
        let mut advanced = false;
        for r in (0..cursor.len()).rev() {
            cursor[r] += 1;
            if cursor[r] < self.rows[r].len() {
                advanced = true;
                break;
            }
            cursor[r] = 0;
        }
        if !advanced {
            self.cursor = None;
        }
        Some(tableau)
    }
}

/// All tableaux for `shape` satisfying `condition` (one entry per direction
/// `1..d`, each at least 1).
pub fn tableaux(shape: &Shape, condition: &[u32]) -> Result<Tableaux, SliceError> {
    let d = shape.dimension();
    if condition.len() != d - 1 || condition.iter().any(|&c| c < 1) {
        return Err(SliceError::InvalidCondition(condition.to_vec()));
    }
    let rows: Vec<Vec<Vec<u32>>> = condition
        .iter()
        .enumerate()
        .map(|(i, &c)| compositions(c - 1, shape.extent(i + 1) as usize))
        .collect();
    Ok(Tableaux {
        cursor: Some(vec![0; rows.len()]),
        rows,
    })
}

/// Closed form `∏_i C(c_i − 1 + n_i − 1, n_i − 1)` for the number of tableaux.
pub fn tableau_count(shape: &Shape, condition: &[u32]) -> u128 {
    condition
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            binomial(
                (c - 1 + shape.extent(i + 1) - 1) as u128,
                (shape.extent(i + 1) - 1) as u128,
            )
        })
        .product()
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Points of `{1..n_1} × … × {1..n_{d−1}}` in lexicographic order.
pub fn points(shape: &Shape) -> Vec<Vec<u32>> {
    let d = shape.dimension();
    let mut out = vec![Vec::new()];
    for i in 1..d {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=shape.extent(i)).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}
