use std::collections::BTreeMap;
use std::fmt;

use super::FreeResolution;

/// Graded Betti numbers `β_{i,j}`: basis elements of degree `j` in `F_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
    length: usize,
}

impl BettiTable {
    pub fn from_resolution(res: &FreeResolution) -> Self {
        let mut entries = BTreeMap::new();
        for (i, m) in res.modules().iter().enumerate() {
            for &d in m.degrees() {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable {
            entries,
            length: res.length(),
        }
    }

    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.length).map(|i| self.total(i)).collect()
    }

    /// Projective dimension, i.e. the last column with a nonzero entry.
    pub fn projdim(&self) -> usize {
        self.length
    }

    /// Nonzero `((i, j), β_{i,j})` pairs.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), usize)> + '_ {
        self.entries
            .iter()
            .filter(|(_, &v)| v > 0)
            .map(|(&k, &v)| (k, v))
    }
}

impl fmt::Display for BettiTable {
    /// Rows indexed by `j − i`, columns by `i`; zeros print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.length + 1;
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries().map(|((i, j), _)| j - i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let cell = |v: usize| {
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push(("".into(), (0..cols).map(|i| i.to_string()).collect()));
        grid.push((
            "total:".into(),
            (0..cols).map(|i| self.total(i).to_string()).collect(),
        ));
        for &r in &rows {
            grid.push((
                format!("{r}:"),
                (0..cols).map(|i| cell(self.get(i, r + i as i64))).collect(),
            ));
        }
        let label_w = grid.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..cols)
            .map(|c| {
                grid.iter()
                    .map(|(_, cells)| cells[c].len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        for (label, cells) in &grid {
            let line: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect();
            writeln!(f, "{label:>label_w$} {}", line.join(" "))?;
        }
        Ok(())
    }
}
