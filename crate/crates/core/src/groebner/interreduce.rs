use super::division::normal_form;
use crate::poly::{MonomialOrder, Polynomial};

/// Auto-reduces a generating set: each output is in normal form with
/// respect to all the others, so no leading monomial occurs in the support
/// of another element. Outputs are monic and the ideal is unchanged.
pub fn interreduce_generators(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let mut current: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order).make_monic())
        .collect();
    loop {
        let mut changed = false;
        let mut k = 0;
        while k < current.len() {
            let others: Vec<Polynomial> = current
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, g)| g.clone())
                .collect();
            let r = normal_form(&current[k], &others, order).make_monic();
            if r != current[k] {
                changed = true;
                if r.is_zero() {
                    current.remove(k);
                    continue;
                }
                current[k] = r;
            }
            k += 1;
        }
        if !changed {
            return current;
        }
    }
}
