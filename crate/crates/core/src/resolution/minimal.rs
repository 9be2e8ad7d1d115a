use super::FreeResolution;

/// First unit entry `(map, row, col)`, scanning low homological degree first.
fn find_unit(res: &FreeResolution) -> Option<(usize, usize, usize)> {
    res.maps.iter().enumerate().find_map(|(k, m)| {
        (0..m.rows()).find_map(|r| {
            (0..m.cols())
                .find(|&c| m.entry(r, c).is_unit())
                .map(|c| (k, r, c))
        })
    })
}

/// Cancels unit entries until none remain.
///
/// A unit `u` at `(r, c)` of `d_k` splits off `R·e_c → R·f_r`: the other
/// columns become `d[·][j] − d[·][c]·d[r][j]/u`, row `r` and column `c` go,
/// and so do column `r` of `d_{k−1}` and row `c` of `d_{k+1}`. For graded
/// input the result is the minimal free resolution.
pub fn minimalize(res: &FreeResolution) -> FreeResolution {
    let mut out = res.clone();
    while let Some((k, r, c)) = find_unit(&out) {
        let d = &mut out.maps[k];
        let u = d
            .entry(r, c)
            .lead_coefficient()
            .expect("unit entry")
            .clone();
        let pivot = d.columns[c].clone();
        for j in 0..d.columns.len() {
            if j == c || d.columns[j][r].is_zero() {
                continue;
            }
            let factor = d.columns[j][r].scale(&u.inv().expect("nonzero unit"));
            let col = &mut d.columns[j];
            for (i, p) in pivot.iter().enumerate() {
                if !p.is_zero() {
                    col[i] = col[i].sub(&factor.mul(p));
                }
            }
            debug_assert!(col[r].is_zero());
        }
        d.columns.remove(c);
        for col in &mut d.columns {
            col.remove(r);
        }
        d.source.remove(c);
        d.target.remove(r);
        out.modules[k].remove(r);
        out.modules[k + 1].remove(c);
        if k > 0 {
            let below = &mut out.maps[k - 1];
            below.columns.remove(r);
            below.source.remove(r);
        }
        if let Some(above) = out.maps.get_mut(k + 1) {
            for col in &mut above.columns {
                col.remove(c);
            }
            above.target.remove(c);
        }
    }
    while out.modules.len() > 1 && out.modules.last().is_some_and(|m| m.rank() == 0) {
        out.modules.pop();
        out.maps.pop();
    }
    out.minimal = true;
    out
}
