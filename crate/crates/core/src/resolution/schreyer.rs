use std::sync::Arc;

use super::module::{combine, divide_vec, is_zero_vec, lead, zero_vec, ModVec, ModuleOrder};
use super::{FreeModule, FreeResolution, PolyMatrix};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::poly::{Field, MonomialOrder, Polynomial, Scalar};

/// Syzygies of `gens` (a Gröbner basis for `order`) from S-vector reduction
/// traces. They form a Gröbner basis of the syzygy module for the induced
/// Schreyer order, which is returned alongside; elements whose leading term
/// is a multiple of another's are dropped.
pub(crate) fn syzygy_step(
    gens: &[ModVec],
    order: &Arc<ModuleOrder>,
    field: Field,
    base: MonomialOrder,
) -> (Vec<ModVec>, Arc<ModuleOrder>) {
    let leads: Vec<_> = gens
        .iter()
        .map(|g| lead(g, order).expect("nonzero generator"))
        .collect();
    let next = Arc::new(ModuleOrder::Schreyer {
        prev: Arc::clone(order),
        leads: leads.iter().map(|(_, m, i)| (m.clone(), *i)).collect(),
    });
    let n = gens.len();
    let mut syz: Vec<(ModVec, (Scalar, crate::poly::Monomial, usize))> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (ci, mi, pi) = &leads[i];
            let (cj, mj, pj) = &leads[j];
            if pi != pj {
                continue;
            }
            let l = mi.lcm(mj);
            let ai = l.div(mi).unwrap();
            let aj = l.div(mj).unwrap();
            let fi = ci.inv().unwrap();
            let fj = cj.inv().unwrap().neg();
            let rank = gens[i].len();
            let mut s = zero_vec(rank, field, base);
            super::module::add_scaled(&mut s, &fi, &ai, &gens[i]);
            super::module::add_scaled(&mut s, &fj, &aj, &gens[j]);
            let (quotients, remainder) = divide_vec(&s, gens, &leads, order, field, base);
            assert!(
                is_zero_vec(&remainder),
                "S-vector did not reduce to zero: input is not a Gröbner basis"
            );
            let mut sigma: ModVec = quotients.into_iter().map(|q| q.neg()).collect();
            sigma[i] = sigma[i].add(&Polynomial::term(field, base, fi, ai));
            sigma[j] = sigma[j].add(&Polynomial::term(field, base, fj, aj));
            let lt = lead(&sigma, &next).expect("syzygy with nonzero lead");
            syz.push((sigma, lt));
        }
    }
    let kept: Vec<ModVec> = syz
        .iter()
        .enumerate()
        .filter(|(k, (_, (_, m, c)))| {
            !syz.iter().enumerate().any(|(l, (_, (_, m2, c2)))| {
                l != *k && c2 == c && m2.divides(m) && (m2 != m || l < *k)
            })
        })
        .map(|(_, (v, _))| v.clone())
        .collect();
    (kept, next)
}

/// Generators of the first syzygy module of a Gröbner basis, one vector
/// per kept S-pair, each of length `gb.len()`.
pub fn schreyer_syzygies(gb: &GroebnerBasis) -> Vec<Vec<Polynomial>> {
    let order = gb.order();
    let field = gb.ideal().field();
    let gens: Vec<ModVec> = gb.basis().iter().map(|g| vec![g.clone()]).collect();
    if gens.is_empty() {
        return Vec::new();
    }
    syzygy_step(&gens, &Arc::new(ModuleOrder::Base(order)), field, order).0
}

fn column_degree(col: &[Polynomial], target: &FreeModule) -> i64 {
    col.iter()
        .zip(target.degrees())
        .find_map(|(p, &d)| p.degree().map(|e| e as i64 + d))
        .expect("nonzero column")
}

/// Schreyer resolution of `R/I` through iterated syzygies of the reduced
/// Gröbner basis. Not minimal; see [`super::minimalize`].
pub fn free_resolution(ideal: &Ideal, max_length: usize) -> FreeResolution {
    assert!(max_length >= 1, "max_length must be at least 1");
    let order = ideal.order();
    let field = ideal.field();
    let gb = ideal.groebner_basis();
    let f0 = FreeModule::new(vec![0]);
    let mut modules = vec![f0.clone()];
    let mut maps = Vec::new();
    let mut truncated = false;
    if !gb.is_empty() {
        let mut gens: Vec<ModVec> = gb.basis().iter().map(|g| vec![g.clone()]).collect();
        let mut mod_order = Arc::new(ModuleOrder::Base(order));
        let mut target = f0;
        loop {
            let degrees = gens.iter().map(|g| column_degree(g, &target)).collect();
            let source = FreeModule::new(degrees);
            maps.push(PolyMatrix::from_columns(
                gens.clone(),
                source.clone(),
                target.clone(),
            ));
            modules.push(source.clone());
            let (syz, next) = syzygy_step(&gens, &mod_order, field, order);
            if syz.is_empty() {
                break;
            }
            if maps.len() == max_length {
                truncated = true;
                break;
            }
            gens = syz;
            mod_order = next;
            target = source;
        }
    }
    FreeResolution {
        modules,
        maps,
        minimal: false,
        truncated,
        field,
        order,
        nvars: ideal.nvars(),
    }
}

/// `Σ_k syz[k]·g_k` for checking that a syzygy evaluates to zero.
pub fn evaluate_syzygy(syz: &[Polynomial], gb: &GroebnerBasis) -> Polynomial {
    let cols: Vec<ModVec> = gb.basis().iter().map(|g| vec![g.clone()]).collect();
    combine(syz, &cols, 1, gb.ideal().field(), gb.order()).remove(0)
}
