//! Rewriting products of slices modulo the binomial generators.
//!
//! Replacing a factor `s_ij` by `s_ik` changes a product `Q·s_ij` by
//! `Q·(s_ij − s_ik) = Q·(g_ik − g_ij)` where `g_ij = s_i1 − s_ij` (and
//! `g_i1 = 0`), so every rewrite carries an explicit combination of
//! generators witnessing the congruence.

use std::collections::BTreeMap;

use super::WitnessError;
use crate::poly::{Monomial, Polynomial};
use crate::slicefamily::{slice, SliceIdeal};

/// A monomial tracked as a multiset of slice factors `s_ij` with `i < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceProduct {
    factors: BTreeMap<(usize, u32), u32>,
}

impl SliceProduct {
    pub fn from_factors<I>(ideal: &SliceIdeal, factors: I) -> Result<Self, WitnessError>
    where
        I: IntoIterator<Item = (usize, u32)>,
    {
        let shape = ideal.shape();
        let d = shape.dimension();
        let mut map = BTreeMap::new();
        for (i, j) in factors {
            if i < 1 || i >= d {
                return Err(WitnessError::NotSliceFactored { direction: i });
            }
            if j < 1 || j > shape.extent(i) {
                return Err(WitnessError::SliceOutOfRange {
                    direction: i,
                    index: j,
                });
            }
            *map.entry((i, j)).or_insert(0) += 1;
        }
        Ok(SliceProduct { factors: map })
    }

    /// `s = ∏_{i<d} ∏_{j≥2} s_ij` as a slice product.
    pub fn witness(ideal: &SliceIdeal) -> Self {
        let shape = ideal.shape();
        let factors =
            (1..shape.dimension()).flat_map(|i| (2..=shape.extent(i)).map(move |j| (i, j)));
        SliceProduct::from_factors(ideal, factors).expect("valid factors")
    }

    pub fn factors(&self) -> impl Iterator<Item = ((usize, u32), u32)> + '_ {
        self.factors.iter().map(|(&k, &v)| (k, v))
    }

    pub fn multiplicity(&self, direction: usize, index: u32) -> u32 {
        self.factors.get(&(direction, index)).copied().unwrap_or(0)
    }

    pub fn monomial(&self, ideal: &SliceIdeal) -> Monomial {
        self.factors
            .iter()
            .fold(Monomial::one(), |acc, (&(i, j), &k)| {
                acc.mul(&slice(ideal.shape(), i, j).expect("valid factor").pow(k))
            })
    }

    fn without(&self, direction: usize, index: u32) -> SliceProduct {
        let mut factors = self.factors.clone();
        match factors.get_mut(&(direction, index)) {
            Some(k) if *k > 1 => *k -= 1,
            _ => {
                factors.remove(&(direction, index));
            }
        }
        SliceProduct { factors }
    }

    fn with(&self, direction: usize, index: u32) -> SliceProduct {
        let mut factors = self.factors.clone();
        *factors.entry((direction, index)).or_insert(0) += 1;
        SliceProduct { factors }
    }
}

/// One requested rewrite `s_{direction,from} → s_{direction,to}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeMove {
    pub direction: usize,
    pub from: u32,
    pub to: u32,
}

/// `input − output = Σ_k multipliers[k]·g_k` over the ideal's generators.
#[derive(Clone, Debug)]
pub struct ExchangeCertificate {
    pub input: SliceProduct,
    pub output: SliceProduct,
    pub multipliers: Vec<Polynomial>,
}

impl ExchangeCertificate {
    /// `Σ_k multipliers[k]·g_k`.
    pub fn combination(&self, ideal: &SliceIdeal) -> Polynomial {
        combine(ideal, &self.multipliers)
    }

    /// Expands both sides of `input − output = Σ multipliers·g` and compares.
    pub fn verify(&self, ideal: &SliceIdeal) -> bool {
        let mono = |m: Monomial| Polynomial::monomial(ideal.field(), ideal.order(), m);
        let lhs = mono(self.input.monomial(ideal)).sub(&mono(self.output.monomial(ideal)));
        lhs == self.combination(ideal)
    }

    pub fn is_trivial(&self) -> bool {
        self.multipliers.iter().all(Polynomial::is_zero)
    }
}

pub(crate) fn combine(ideal: &SliceIdeal, multipliers: &[Polynomial]) -> Polynomial {
    ideal.labelled_generators().iter().zip(multipliers).fold(
        Polynomial::zero(ideal.field(), ideal.order()),
        |acc, ((_, g), m)| acc.add(&m.mul(g)),
    )
}

/// Applies `moves` in order, accumulating the generator combination.
pub fn slice_exchange_reduce(
    product: &SliceProduct,
    ideal: &SliceIdeal,
    moves: &[ExchangeMove],
) -> Result<ExchangeCertificate, WitnessError> {
    let shape = ideal.shape();
    let zero = Polynomial::zero(ideal.field(), ideal.order());
    let mut multipliers = vec![zero; ideal.labelled_generators().len()];
    let mut current = product.clone();
    for mv in moves {
        let ExchangeMove {
            direction: i,
            from,
            to,
        } = *mv;
        if i < 1 || i >= shape.dimension() {
            return Err(WitnessError::NotSliceFactored { direction: i });
        }
        if to < 1 || to > shape.extent(i) {
            return Err(WitnessError::SliceOutOfRange {
                direction: i,
                index: to,
            });
        }
        if current.multiplicity(i, from) == 0 {
            return Err(WitnessError::MissingFactor {
                direction: i,
                index: from,
            });
        }
        if from == to {
            continue;
        }
        let rest = current.without(i, from);
        let cofactor = Polynomial::monomial(ideal.field(), ideal.order(), rest.monomial(ideal));
        // Q·s_from − Q·s_to = Q·g_to − Q·g_from
        if to >= 2 {
            let k = ideal.binomial_position(i, to).expect("binomial exists");
            multipliers[k] = multipliers[k].add(&cofactor);
        }
        if from >= 2 {
            let k = ideal.binomial_position(i, from).expect("binomial exists");
            multipliers[k] = multipliers[k].sub(&cofactor);
        }
        current = rest.with(i, to);
    }
    Ok(ExchangeCertificate {
        input: product.clone(),
        output: current,
        multipliers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_member;
    use crate::slicefamily::{build_ideal, witness_monomial, Shape};

    fn ideal(dims: &[u32]) -> SliceIdeal {
        build_ideal(&Shape::new(dims.to_vec()).unwrap())
    }

    #[test]
    fn single_exchange() {
        let id = ideal(&[2, 2]);
        let p = SliceProduct::from_factors(&id, [(1, 2)]).unwrap();
        let cert = slice_exchange_reduce(
            &p,
            &id,
            &[ExchangeMove {
                direction: 1,
                from: 2,
                to: 1,
            }],
        )
        .unwrap();
        assert_eq!(
            cert.output,
            SliceProduct::from_factors(&id, [(1, 1)]).unwrap()
        );
        assert!(cert.verify(&id));
        // s12 - s11 = -(s11 - s12)
        assert_eq!(cert.combination(&id), id.generators()[0].neg());
        assert_eq!(p.monomial(&id), witness_monomial(id.shape()));
    }

    #[test]
    fn identity_exchange_is_free() {
        let id = ideal(&[3, 2]);
        let p = SliceProduct::witness(&id);
        let cert = slice_exchange_reduce(
            &p,
            &id,
            &[ExchangeMove {
                direction: 1,
                from: 2,
                to: 2,
            }],
        )
        .unwrap();
        assert_eq!(cert.output, p);
        assert!(cert.is_trivial());
        assert!(cert.verify(&id));
    }

    #[test]
    fn chained_exchanges_stay_in_the_residue_class() {
        let id = ideal(&[3, 3, 2]);
        let p = SliceProduct::witness(&id);
        let moves = [
            ExchangeMove {
                direction: 1,
                from: 3,
                to: 1,
            },
            ExchangeMove {
                direction: 2,
                from: 2,
                to: 3,
            },
            ExchangeMove {
                direction: 2,
                from: 3,
                to: 1,
            },
        ];
        let cert = slice_exchange_reduce(&p, &id, &moves).unwrap();
        assert!(cert.verify(&id));
        assert_eq!(cert.output.multiplicity(2, 3), 1);
        assert_eq!(cert.output.multiplicity(2, 1), 1);
    }

    #[test]
    fn every_step_difference_lies_in_the_ideal() {
        let id = ideal(&[3, 2]);
        let full = id.to_ideal();
        let p = SliceProduct::witness(&id);
        for from in 2..=3 {
            for to in 1..=3 {
                let cert = slice_exchange_reduce(
                    &p,
                    &id,
                    &[ExchangeMove {
                        direction: 1,
                        from,
                        to,
                    }],
                )
                .unwrap();
                assert!(ideal_member(&cert.combination(&id), &full));
            }
        }
    }

    #[test]
    fn rejects_bad_factors() {
        let id = ideal(&[2, 2]);
        assert!(matches!(
            SliceProduct::from_factors(&id, [(2, 1)]),
            Err(WitnessError::NotSliceFactored { direction: 2 })
        ));
        let p = SliceProduct::witness(&id);
        assert!(matches!(
            slice_exchange_reduce(
                &p,
                &id,
                &[ExchangeMove {
                    direction: 1,
                    from: 1,
                    to: 2
                }]
            ),
            Err(WitnessError::MissingFactor { .. })
        ));
    }
}
