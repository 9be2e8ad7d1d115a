//! Schoolbook fractions over big integers, normalized by Euclid's algorithm.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug)]
pub struct Frac {
    pub num: BigInt,
    pub den: BigInt,
}

fn euclid(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

impl Frac {
    pub fn new(num: BigInt, den: BigInt) -> Frac {
        assert!(!den.is_zero(), "zero denominator");
        let g = euclid(&num, &den);
        let (mut n, mut d) = if g.is_zero() {
            (num, den)
        } else {
            (num / &g, den / &g)
        };
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        if n.is_zero() {
            d = BigInt::from(1);
        }
        Frac { num: n, den: d }
    }

    pub fn add(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }

    pub fn sub(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.den - &o.num * &self.den, &self.den * &o.den)
    }

    pub fn mul(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &Frac) -> Option<Frac> {
        (!o.num.is_zero()).then(|| Frac::new(&self.num * &o.den, &self.den * &o.num))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes() {
        let f = Frac::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!((f.num, f.den), (BigInt::from(-3), BigInt::from(2)));
        let z = Frac::new(BigInt::from(0), BigInt::from(-7));
        assert_eq!(z.den, BigInt::from(1));
    }
}
