//! Exact ground-field arithmetic: arbitrary-precision rationals or residues
//! modulo a prime.
//!
//! Mixing scalars from different fields in an arithmetic operator panics.
//! Public entry points elsewhere validate fields up front and report
//! [`Error::FieldMismatch`] instead, so the panic only fires on internal bugs.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported modulus; keeps products of residues inside `u128`
/// comfortably and residues inside `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                residue: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Modular {
                    residue: r.to_u64().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` in this field. Fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::NotInvertible(format!("{num}/{den} in {self}")));
        }
        Ok(&self.from_bigint(num) * &d.inv()?)
    }

    /// Every element of a prime field in increasing residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(|residue| Scalar::Modular { residue, modulus: p }).collect()),
        }
    }

    /// Parses `n`, `-n` or `n/d` into this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid scalar `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                self.from_ratio(&n, &d)
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
        }
    }

    pub fn ensure(&self, other: Field) -> Result<()> {
        if *self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                expected: *self,
                found: other,
            })
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix('F'))
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}`")))?;
        Field::prime(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Numerator and denominator for rationals; residue over 1 for `F_p`.
    pub fn as_ratio(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(q) => (q.numer().clone(), q.denom().clone()),
            Scalar::Modular { residue, .. } => (BigInt::from(*residue), BigInt::one()),
        }
    }

    /// Maps an integer-valued (or `p`-integral) rational into `field`.
    pub fn to_field(&self, field: Field) -> Result<Scalar> {
        if self.field() == field {
            return Ok(self.clone());
        }
        match self {
            Scalar::Rational(q) => field.from_ratio(q.numer(), q.denom()),
            Scalar::Modular { .. } => Err(Error::FieldMismatch {
                expected: field,
                found: self.field(),
            }),
        }
    }

    fn check_same(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!("scalar field mismatch: {} vs {}", self.field(), other.field());
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = (base % m) as u128;
    let m = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
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
            Scalar::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { residue: a, modulus }, Scalar::Modular { residue: b, .. }) => Scalar::Modular {
                residue: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { residue: a, modulus }, Scalar::Modular { residue: b, .. }) => Scalar::Modular {
                residue: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_canonical_form() {
        let q = Field::Rational;
        let s = q.from_ratio(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        assert_eq!(s.as_ratio(), (BigInt::from(-3), BigInt::from(2)));
        assert_eq!(s.to_string(), "-3/2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for e in f.elements().unwrap().into_iter().skip(1) {
            assert!((&e * &e.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!("Fp:9".parse::<Field>().is_err());
        assert_eq!("Fp:3".parse::<Field>().unwrap(), Field::Prime(3));
    }

    #[test]
    fn minus_one_mod_two_is_one() {
        let f = Field::prime(2).unwrap();
        assert_eq!(f.from_i64(-1), f.one());
    }

    #[test]
    fn denominator_divisible_by_p_is_rejected() {
        let f = Field::prime(3).unwrap();
        assert!(f.parse_scalar("1/3").is_err());
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(2));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_moduli_panics() {
        let a = Field::Prime(3).one();
        let b = Field::Prime(5).one();
        let _ = &a + &b;
    }

    proptest! {
        #[test]
        fn rational_string_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
            let q = Field::Rational;
            let s = q.from_ratio(&BigInt::from(n), &BigInt::from(d)).unwrap();
            prop_assert_eq!(q.parse_scalar(&s.to_string()).unwrap(), s);
        }

        #[test]
        fn modular_field_axioms(a in 0u64..101, b in 0u64..101, c in 0u64..101) {
            let f = Field::Prime(101);
            let (a, b, c) = (f.from_i64(a as i64), f.from_i64(b as i64), f.from_i64(c as i64));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a - &a, f.zero());
        }
    }
}
