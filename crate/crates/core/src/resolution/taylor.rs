use super::{FreeModule, FreeResolution, PolyMatrix, ResolutionError};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial};

/// The Taylor resolution of `R/I` for a monomial ideal, on the given
/// generators. `F_k` has a basis indexed by `k`-subsets `S`, in degree
/// `deg lcm(S)`, and `d(e_S) = Σ_t ± lcm(S)/lcm(S∖t)·e_{S∖t}`.
pub fn taylor_complex(ideal: &Ideal) -> Result<FreeResolution, ResolutionError> {
    if !ideal.is_monomial() {
        return Err(ResolutionError::NotMonomial);
    }
    let (field, order) = (ideal.field(), ideal.order());
    let gens: Vec<Monomial> = ideal
        .generators()
        .iter()
        .map(|g| g.lead_monomial().expect("nonzero generator").clone())
        .collect();
    let n = gens.len();
    assert!(n < 24, "Taylor complex on {n} generators is too large");
    let lcm_of = |mask: u32| {
        (0..n)
            .filter(|t| mask & (1 << t) != 0)
            .fold(Monomial::one(), |acc, t| acc.lcm(&gens[t]))
    };
    let subsets: Vec<Vec<u32>> = (0..=n)
        .map(|k| {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .collect()
        })
        .collect();
    let modules: Vec<FreeModule> = subsets
        .iter()
        .map(|s| FreeModule::new(s.iter().map(|&m| lcm_of(m).degree() as i64).collect()))
        .collect();
    let mut maps = Vec::new();
    for k in 1..=n {
        let columns = subsets[k]
            .iter()
            .map(|&mask| {
                let top = lcm_of(mask);
                let mut col = vec![Polynomial::zero(field, order); subsets[k - 1].len()];
                for (pos, t) in (0..n).filter(|t| mask & (1 << t) != 0).enumerate() {
                    let face = mask & !(1 << t);
                    let row = subsets[k - 1].binary_search(&face).expect("face is listed");
                    let coef = if pos % 2 == 0 {
                        field.one()
                    } else {
                        field.one().neg()
                    };
                    let m = top.div(&lcm_of(face)).expect("lcm of a face divides");
                    col[row] = Polynomial::term(field, order, coef, m);
                }
                col
            })
            .collect();
        maps.push(PolyMatrix::from_columns(
            columns,
            modules[k].clone(),
            modules[k - 1].clone(),
        ));
    }
    Ok(FreeResolution {
        modules,
        maps,
        minimal: false,
        truncated: false,
        field,
        order,
        nvars: ideal.nvars(),
    })
}
