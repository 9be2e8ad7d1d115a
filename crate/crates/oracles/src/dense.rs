use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use slicepd::poly::{Field, Monomial, MonomialOrder, Polynomial, Scalar};

/// A polynomial over ℚ as a map from dense exponent vectors to coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

impl DensePoly {
    pub fn zero(nvars: usize) -> Self {
        DensePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<u32>, c: BigRational) -> Self {
        let mut p = DensePoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        assert_eq!(exps.len(), self.nvars);
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add(&self, other: &DensePoly) -> DensePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> DensePoly {
        let mut out = DensePoly::zero(self.nvars);
        if !c.is_zero() {
            for (e, v) in &self.terms {
                out.terms.insert(e.clone(), v * c);
            }
        }
        out
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        let mut out = DensePoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// `∂/∂x_v`.
    pub fn partial(&self, v: usize) -> DensePoly {
        let mut out = DensePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[v] > 0 {
                let mut f = e.clone();
                f[v] -= 1;
                out.add_term(f, c * BigRational::from_integer(BigInt::from(e[v])));
            }
        }
        out
    }

    /// `g ∘ f` with each monomial of `g` applied as repeated single partials.
    pub fn act_by_partials(g: &DensePoly, f: &DensePoly) -> DensePoly {
        let mut out = DensePoly::zero(f.nvars);
        for (e, c) in &g.terms {
            let mut h = f.clone();
            for (v, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    h = h.partial(v);
                }
            }
            out = out.add(&h.scale(c));
        }
        out
    }

    pub fn from_polynomial(p: &Polynomial, nvars: usize) -> DensePoly {
        let mut out = DensePoly::zero(nvars);
        for (c, m) in p.terms() {
            let mut e = vec![0; nvars];
            for &(v, k) in m.exponents() {
                e[v as usize] = k;
            }
            let q = c.as_rational().expect("rational coefficients").clone();
            out.add_term(e, q);
        }
        out
    }

    pub fn to_polynomial(&self, field: Field, order: MonomialOrder) -> Polynomial {
        let terms = self.terms.iter().map(|(e, c)| {
            let m = Monomial::from_pairs(
                e.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| (v as u32, k)),
            );
            let s = match field {
                Field::Rational => Scalar::Rational(c.clone()),
                f => f.from_rational(c).expect("denominator invertible"),
            };
            (s, m)
        });
        Polynomial::from_terms(field, order, terms.collect::<Vec<_>>())
    }
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// All exponent vectors of total degree `t` in `n` variables.
pub fn exponents_of_degree(n: usize, t: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if t == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=t {
        for mut rest in exponents_of_degree(n - 1, t - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
