//! Vectors over a free module and the orders Schreyer's construction needs.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, Scalar};

/// Monomial order on `R^r` (terms `m·e_i`).
///
/// Within one component every order here agrees with the base monomial
/// order, so components are stored as ordinary polynomials.
#[derive(Clone, Debug)]
pub enum ModuleOrder {
    /// Term over position; among equal monomials a smaller index is larger.
    Base(MonomialOrder),
    /// `a·e_i > b·e_j` iff `a·lt(g_i) > b·lt(g_j)` in `prev`, or they are
    /// equal and `i < j`.
    Schreyer {
        prev: Arc<ModuleOrder>,
        leads: Vec<(Monomial, usize)>,
    },
}

impl ModuleOrder {
    pub fn compare(&self, a: &Monomial, ai: usize, b: &Monomial, bi: usize) -> Ordering {
        match self {
            ModuleOrder::Base(o) => o.compare(a, b).then_with(|| bi.cmp(&ai)),
            ModuleOrder::Schreyer { prev, leads } => {
                let (ma, ca) = &leads[ai];
                let (mb, cb) = &leads[bi];
                prev.compare(&a.mul(ma), *ca, &b.mul(mb), *cb)
                    .then_with(|| bi.cmp(&ai))
            }
        }
    }
}

/// A column vector with polynomial entries.
pub type ModVec = Vec<Polynomial>;

pub fn zero_vec(rank: usize, field: Field, order: MonomialOrder) -> ModVec {
    vec![Polynomial::zero(field, order); rank]
}

pub fn is_zero_vec(v: &[Polynomial]) -> bool {
    v.iter().all(Polynomial::is_zero)
}

/// Leading term `(c, m, component)` of a vector.
pub fn lead(v: &[Polynomial], order: &ModuleOrder) -> Option<(Scalar, Monomial, usize)> {
    let mut best: Option<(&Scalar, &Monomial, usize)> = None;
    for (i, p) in v.iter().enumerate() {
        if let Some((c, m)) = p.lead_term() {
            let better = match best {
                None => true,
                Some((_, bm, bi)) => order.compare(m, i, bm, bi) == Ordering::Greater,
            };
            if better {
                best = Some((c, m, i));
            }
        }
    }
    best.map(|(c, m, i)| (c.clone(), m.clone(), i))
}

/// `v + c·m·w`.
pub fn add_scaled(v: &mut [Polynomial], c: &Scalar, m: &Monomial, w: &[Polynomial]) {
    for (a, b) in v.iter_mut().zip(w) {
        if !b.is_zero() {
            *a = a.add_scaled(c, m, b);
        }
    }
}

/// Divides `v` by `gens`: returns quotients and remainder with
/// `v = Σ q_k·gens[k] + remainder`.
pub fn divide_vec(
    v: &[Polynomial],
    gens: &[ModVec],
    gen_leads: &[(Scalar, Monomial, usize)],
    order: &ModuleOrder,
    field: Field,
    base: MonomialOrder,
) -> (Vec<Polynomial>, ModVec) {
    let mut p: ModVec = v.to_vec();
    let mut quotients = vec![Polynomial::zero(field, base); gens.len()];
    let mut remainder = zero_vec(v.len(), field, base);
    while let Some((c, m, i)) = lead(&p, order) {
        let hit = gen_leads.iter().enumerate().find_map(|(k, (gc, gm, gi))| {
            (*gi == i)
                .then(|| m.div(gm).map(|q| (k, q, c.div(gc).unwrap())))
                .flatten()
        });
        match hit {
            Some((k, q, coef)) => {
                add_scaled(&mut p, &coef.neg(), &q, &gens[k]);
                quotients[k] = quotients[k].add(&Polynomial::term(field, base, coef, q));
            }
            None => {
                let t = Polynomial::term(field, base, c, m);
                remainder[i] = remainder[i].add(&t);
                p[i] = p[i].sub(&t);
            }
        }
    }
    (quotients, remainder)
}

/// `Σ_k coeffs[k]·cols[k]`.
pub fn combine(
    coeffs: &[Polynomial],
    cols: &[ModVec],
    rank: usize,
    field: Field,
    order: MonomialOrder,
) -> ModVec {
    let mut out = zero_vec(rank, field, order);
    for (q, col) in coeffs.iter().zip(cols) {
        if q.is_zero() {
            continue;
        }
        for (o, e) in out.iter_mut().zip(col) {
            if !e.is_zero() {
                *o = o.add(&q.mul(e));
            }
        }
    }
    out
}
