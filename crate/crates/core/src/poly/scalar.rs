//! Exact coefficients: arbitrary-precision rationals and prime-field residues.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

/// The coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    /// `F_p`; construct through [`Field::prime`] so that `p` is checked.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self, PolyError> {
        if is_prime(p) && p < (1 << 16) {
            Ok(Field::Prime(p))
        } else {
            Err(PolyError::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => Scalar::Residue {
                value: reduce_bigint(n, p),
                modulus: p,
            },
        }
    }

    /// Maps a rational into this field; fails when the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar, PolyError> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let num = reduce_bigint(q.numer(), p);
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(PolyError::DenominatorVanishes { modulus: p });
                }
                Ok(Scalar::Residue {
                    value: mul_mod(num, inv_mod(den, p), p),
                    modulus: p,
                })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// True for rationals below zero. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue { .. } => None,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Residue { value: a, modulus },
                Scalar::Residue {
                    value: b,
                    modulus: q,
                },
            ) if modulus == q => Scalar::Residue {
                value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => mismatch(self, other),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Residue { value: a, modulus },
                Scalar::Residue {
                    value: b,
                    modulus: q,
                },
            ) if modulus == q => Scalar::Residue {
                value: mul_mod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => mismatch(self, other),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Multiplies by an integer, staying in this scalar's field.
    pub fn mul_bigint(&self, n: &BigInt) -> Scalar {
        self.mul(&self.field().from_bigint(n))
    }

    /// Reduction of an integral rational modulo p; `None` when the
    /// denominator vanishes.
    pub fn reduce_mod(&self, p: u32) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) => Field::Prime(p).from_rational(q).ok(),
            Scalar::Residue { value, modulus } if *modulus == p => Some(Scalar::Residue {
                value: *value,
                modulus: p,
            }),
            Scalar::Residue { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[track_caller]
fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

fn reduce_bigint(n: &BigInt, p: u32) -> u32 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u32().expect("residue fits in u32")
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rationals_are_canonical() {
        let a = q(2, -4);
        match &a {
            Scalar::Rational(r) => {
                assert_eq!(r.numer(), &BigInt::from(-1));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
        assert_eq!(q(0, 5), Field::Rational.zero());
        assert_eq!(q(1, 3).add(&q(-1, 3)), Field::Rational.zero());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::prime(5).unwrap();
        let two = f5.from_int(2);
        let three = f5.from_int(-2);
        assert_eq!(two.add(&three), f5.zero());
        assert_eq!(two.mul(&two.inv().unwrap()), f5.one());
        assert_eq!(
            f5.from_rational(&BigRational::new(1.into(), 2.into()))
                .unwrap(),
            f5.from_int(3)
        );
        assert!(f5
            .from_rational(&BigRational::new(1.into(), 10.into()))
            .is_err());
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn reduction_mod_p_matches_residues() {
        let half = q(-1, 2);
        assert_eq!(half.reduce_mod(3), Some(Field::Prime(3).from_int(1)));
        assert_eq!(half.reduce_mod(2), None);
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = Field::Rational.one().add(&Field::Prime(3).one());
    }
}
