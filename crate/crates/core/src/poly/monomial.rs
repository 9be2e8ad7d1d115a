use std::fmt;

/// Identifier of a ring variable. Smaller ids rank higher in every order.
pub type VarId = u32;

/// A monomial as a sparse, id-sorted list of `(variable, exponent)` pairs.
///
/// Zero exponents are never stored and the total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: vec![(v, e)],
            degree: e,
        }
    }

    /// Builds a monomial from arbitrary `(var, exponent)` pairs; repeated
    /// variables accumulate and zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(VarId, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f = f.checked_add(e).expect("exponent overflow"),
                _ => merged.push((v, e)),
            }
        }
        Monomial::from_sorted(merged)
    }

    /// Product of the given variables, each to the first power (repeats allowed).
    pub fn product_of<I: IntoIterator<Item = VarId>>(vars: I) -> Self {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    fn from_sorted(exps: Vec<(VarId, u32)>) -> Self {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &(_, e)| acc.checked_add(e))
            .expect("degree overflow");
        Monomial { exps, degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    pub fn support(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1.checked_add(b[j].1).expect("exponent overflow");
                    out.push((a[i].0, e));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial::from_sorted(out)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::from_sorted(
            self.exps
                .iter()
                .filter(|_| k > 0)
                .map(|&(v, e)| (v, e.checked_mul(k).expect("exponent overflow")))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j == other.exps.len() || other.exps[j].0 != v || other.exps[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            let f = if j < other.exps.len() && other.exps[j].0 == v {
                j += 1;
                other.exps[j - 1].1
            } else {
                0
            };
            if e > f {
                out.push((v, e - f));
            }
        }
        Some(Monomial::from_sorted(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::min)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.gcd(other).is_one()
    }

    fn merge_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        loop {
            let (v, x, y) = match (a.get(i), b.get(j)) {
                (None, None) => break,
                (Some(&(v, x)), None) => {
                    i += 1;
                    (v, x, 0)
                }
                (None, Some(&(w, y))) => {
                    j += 1;
                    (w, 0, y)
                }
                (Some(&(v, x)), Some(&(w, y))) => {
                    if v < w {
                        i += 1;
                        (v, x, 0)
                    } else if w < v {
                        j += 1;
                        (w, 0, y)
                    } else {
                        i += 1;
                        j += 1;
                        (v, x, y)
                    }
                }
            };
            let e = f(x, y);
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial::from_sorted(out)
    }

    /// Renames variables through `f`; the map must be injective on the support.
    pub fn map_vars(&self, f: impl Fn(VarId) -> VarId) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|&(v, e)| (f(v), e)))
    }

    /// Splits off the part in variables `< split`.
    #[allow(clippy::type_complexity)]
    pub(crate) fn split_at_var(&self, split: VarId) -> (&[(VarId, u32)], &[(VarId, u32)]) {
        let k = self.exps.partition_point(|&(v, _)| v < split);
        self.exps.split_at(k)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "v{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn multiplication_adds_exponents() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        assert_eq!(x.mul(&y), m(&[(0, 1), (1, 1)]));
        assert_eq!(x.mul(&x), m(&[(0, 2)]));
        assert_eq!(x.mul(&x).degree(), 2);
    }

    #[test]
    fn division() {
        let x2y = m(&[(0, 2), (1, 1)]);
        let xy = m(&[(0, 1), (1, 1)]);
        assert_eq!(x2y.div(&xy), Some(Monomial::var(0)));
        assert_eq!(Monomial::var(0).div(&m(&[(0, 2)])), None);
        assert_eq!(x2y.div(&x2y), Some(Monomial::one()));
    }

    #[test]
    fn lcm_and_gcd() {
        let a = m(&[(0, 2), (2, 1)]);
        let b = m(&[(0, 1), (1, 3)]);
        assert_eq!(a.lcm(&b), m(&[(0, 2), (1, 3), (2, 1)]));
        assert_eq!(a.gcd(&b), m(&[(0, 1)]));
        assert!(Monomial::var(0).is_coprime(&Monomial::var(1)));
    }

    #[test]
    fn zero_exponents_are_dropped() {
        let a = m(&[(3, 0), (1, 2), (1, 1)]);
        assert_eq!(a.exponents(), &[(1, 3)]);
        assert_eq!(a.degree(), 3);
        assert_eq!(Monomial::var_pow(4, 0), Monomial::one());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn exponent_overflow_is_caught() {
        let a = Monomial::var_pow(0, u32::MAX);
        let _ = a.mul(&Monomial::var(0));
    }
}
