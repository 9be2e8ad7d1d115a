use std::collections::HashSet;

use super::division::normal_form;
use super::ideal::Ideal;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// A Gröbner basis of an ideal for a fixed monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ideal: Ideal,
    basis: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Polynomial> {
        self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.basis, self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn lead_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().filter_map(|g| g.lead_monomial())
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &self.basis[j]);
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// `S(f, g) = (L / lt f)·f − (L / lt g)·g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fc, fm) = f.lead_term().expect("nonzero");
    let (gc, gm) = g.lead_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fc.inv().unwrap(), &l.div(fm).unwrap());
    a.add_scaled(&gc.inv().unwrap().neg(), &l.div(gm).unwrap(), g)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    seq: usize,
    sugar: u32,
}

/// Buchberger's algorithm with the coprime-leading-monomial criterion and
/// the chain criterion. The output is not yet reduced.
///
/// Pairs are taken by smallest sugar degree, ties by creation order. On
/// homogeneous input the sugar of a pair is its lcm degree, so this is the
/// normal strategy; on inhomogeneous input it keeps lex computations from
/// chasing ever higher degrees.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut seq = 0usize;

    let mut push = |g: Polynomial,
                    sugar: u32,
                    basis: &mut Vec<Polynomial>,
                    sugars: &mut Vec<u32>,
                    pairs: &mut Vec<Pair>,
                    pending: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        let lm = g.lead_monomial().expect("nonzero").clone();
        for (i, h) in basis.iter().enumerate() {
            let hm = h.lead_monomial().unwrap();
            let lcm = lm.lcm(hm);
            let pair_sugar =
                (sugars[i] + lcm.degree() - hm.degree()).max(sugar + lcm.degree() - lm.degree());
            pairs.push(Pair {
                i,
                j: k,
                lcm,
                seq,
                sugar: pair_sugar,
            });
            seq += 1;
            pending.insert((i, k));
        }
        basis.push(g);
        sugars.push(sugar);
    };

    for g in ideal.generators() {
        let g = g.with_order(order).make_monic();
        if let Some(d) = g.degree() {
            push(g, d, &mut basis, &mut sugars, &mut pairs, &mut pending);
        }
    }

    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.sugar, p.seq))
            .map(|(k, _)| k)
            .unwrap();
        let Pair {
            i, j, lcm, sugar, ..
        } = pairs.swap_remove(best);
        pending.remove(&(i, j));

        let (lm_i, lm_j) = (
            basis[i].lead_monomial().unwrap(),
            basis[j].lead_monomial().unwrap(),
        );
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead_monomial().unwrap().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            push(
                r.make_monic(),
                sugar,
                &mut basis,
                &mut sugars,
                &mut pairs,
                &mut pending,
            );
        }
    }

    GroebnerBasis {
        ideal: ideal.clone(),
        basis,
        order,
        reduced: false,
    }
}

/// Minimalizes and interreduces a Gröbner basis. The result is monic and
/// sorted by descending leading monomial, hence unique for (ideal, order).
pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    if gb.reduced {
        return gb.clone();
    }
    let order = gb.order;
    let src = &gb.basis;
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in src.iter().enumerate() {
        let lm = g.lead_monomial().unwrap();
        let redundant = src.iter().enumerate().any(|(l, h)| {
            let hm = h.lead_monomial().unwrap();
            l != k && hm.divides(lm) && (hm != lm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, h)| h.clone())
                .collect();
            normal_form(&minimal[k], &others, order).make_monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.compare(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));
    GroebnerBasis {
        ideal: gb.ideal.clone(),
        basis: reduced,
        order,
        reduced: true,
    }
}

/// Buchberger followed by [`reduce_basis`].
pub fn reduced_groebner_basis(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    reduce_basis(&buchberger(ideal, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    const Q: Field = Field::Rational;

    fn poly(order: MonomialOrder, terms: &[(i64, &[(u32, u32)])]) -> Polynomial {
        Polynomial::from_terms(
            Q,
            order,
            terms
                .iter()
                .map(|(c, m)| (Q.from_int(*c), Monomial::from_pairs(m.iter().copied()))),
        )
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let o = MonomialOrder::Grevlex;
        let gens = vec![
            poly(o, &[(1, &[(0, 2)])]),
            poly(o, &[(1, &[(0, 1), (1, 1)])]),
        ];
        let ideal = Ideal::new(gens.clone(), 2, Q, o);
        let gb = reduced_groebner_basis(&ideal, o);
        assert_eq!(gb.basis(), &gens[..]);
        assert!(gb.is_groebner());
    }

    #[test]
    fn linear_chain_under_lex() {
        let o = MonomialOrder::Lex;
        let f = poly(o, &[(1, &[(0, 1)]), (-1, &[(1, 1)])]);
        let g = poly(o, &[(1, &[(1, 1)]), (-1, &[(2, 1)])]);
        let gb = reduced_groebner_basis(&Ideal::new(vec![f, g], 3, Q, o), o);
        let x_z = poly(o, &[(1, &[(0, 1)]), (-1, &[(2, 1)])]);
        let y_z = poly(o, &[(1, &[(1, 1)]), (-1, &[(2, 1)])]);
        assert_eq!(gb.basis(), &[x_z, y_z]);
    }

    #[test]
    fn reduce_removes_redundancy() {
        let o = MonomialOrder::Lex;
        let x = poly(o, &[(1, &[(0, 1)])]);
        let x_y = poly(o, &[(1, &[(0, 1)]), (1, &[(1, 1)])]);
        let gb = reduced_groebner_basis(&Ideal::new(vec![x.clone(), x_y], 2, Q, o), o);
        assert_eq!(gb.basis(), &[x, poly(o, &[(1, &[(1, 1)])])]);
        let again = reduce_basis(&gb);
        assert_eq!(again.basis(), gb.basis());
    }

    #[test]
    fn inhomogeneous_lex_terminates_and_ignores_input_order() {
        use crate::poly::text::parse_polynomial;
        use crate::poly::Shape;
        let o = MonomialOrder::Lex;
        let shape: Shape = "4x2".parse().unwrap();
        let mut gens: Vec<Polynomial> = [
            "1/5*x[1,1]*x[1,2]^2*x[2,1] + 2/5*x[1,1]*x[2,1] - x[2,1]",
            "-5*x[1,1]^2*x[2,1]^2 - 1/2*x[1,2]^2*x[2,1]",
            "x[1,1]^2*x[1,2] + x[1,2]^2*x[2,1] - 4*x[2,1]",
        ]
        .iter()
        .map(|s| parse_polynomial(s, &shape, Q, o).unwrap())
        .collect();
        let a = reduced_groebner_basis(&Ideal::new(gens.clone(), 3, Q, o), o);
        assert!(a.is_groebner());
        gens.reverse();
        let b = reduced_groebner_basis(&Ideal::new(gens, 3, Q, o), o);
        assert_eq!(a.basis(), b.basis());
    }
}
