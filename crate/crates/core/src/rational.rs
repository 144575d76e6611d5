//! Exact rationals over arbitrary-precision integers.
//!
//! [`Rational`] wraps `num_rational::BigRational`, which already keeps the
//! value reduced with a positive denominator. The wrapper fixes the text
//! format (`p/q`, always with an explicit denominator) and adds the handful
//! of floor/ceiling/fractional-part helpers the geometry code leans on.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Reduced fraction `num/den`; fails on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator(num.to_string()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    /// Panicking constructor for literals in code and tests.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("literal fraction with zero denominator")
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// `0 <= self <= 1`.
    pub fn in_unit_interval(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn ceil(&self) -> BigInt {
        -((-self.0.numer()).div_floor(self.0.denom()))
    }

    /// `x - floor(x)`, always in `[0, 1)`.
    pub fn fract(&self) -> Rational {
        Rational(BigRational::new(self.0.numer().mod_floor(self.0.denom()), self.0.denom().clone()))
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rational> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator("1".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    /// Mediant `(a + c) / (b + d)` of `a/b` and `c/d`.
    pub fn mediant(&self, other: &Rational) -> Rational {
        Rational(BigRational::new(self.numer() + other.numer(), self.denom() + other.denom()))
    }

    /// Integer value, if this is an integer.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    /// Presentation-only conversion; never feed the result back into the math.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

/// `x - floor(x)`.
pub fn fractional_part(x: &Rational) -> Rational {
    x.fract()
}

/// Checked narrowing for affine parameters and other small integers.
pub fn to_i64(n: &BigInt) -> Result<i64> {
    n.to_i64().ok_or_else(|| Error::Overflow(n.to_string()))
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` and bare integers `p`; whitespace around the parts is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { input: s.to_string(), expected: "an exact fraction p/q" };
        let parse_int = |t: &str| {
            let t = t.trim();
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Rational::integer(parse_int(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $trait<i64> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational((&self.0).$method(BigRational::from_integer(rhs.into())))
            }
        }
        impl $trait<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational(self.0.$method(BigRational::from_integer(rhs.into())))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn construction_reduces_and_normalizes_sign() {
        assert_eq!(Rational::new(6, 10).unwrap().to_string(), "3/5");
        assert_eq!(Rational::new(-3, -4).unwrap().to_string(), "3/4");
        assert_eq!(Rational::new(0, 7).unwrap().to_string(), "0/1");
        assert_eq!(Rational::new(3, -6).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(matches!(Rational::new(1, 0), Err(Error::ZeroDenominator(_))));
        assert!("4/0".parse::<Rational>().is_err());
    }

    #[test]
    fn fractional_part_examples() {
        assert_eq!(fractional_part(&r("-6/5")), r("4/5"));
        assert_eq!(fractional_part(&r("3/5")), r("3/5"));
        assert_eq!(fractional_part(&r("2")), r("0"));
        assert_eq!(fractional_part(&r("-2")), r("0"));
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(r("-6/5").floor(), BigInt::from(-2));
        assert_eq!(r("-6/5").ceil(), BigInt::from(-1));
        assert_eq!(r("9/5").floor(), BigInt::from(1));
        assert_eq!(r("9/5").ceil(), BigInt::from(2));
        assert_eq!(r("3").ceil(), BigInt::from(3));
    }

    #[test]
    fn lenient_parse_canonical_print() {
        assert_eq!(r("3").to_string(), "3/1");
        assert_eq!(r(" 12 / 20 ").to_string(), "3/5");
        assert_eq!(r("-0/9").to_string(), "0/1");
        for bad in ["", "/", "1/", "a/2", "1.5", "1/2/3", "--1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn serde_uses_fraction_strings() {
        let x = r("-7/3");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "\"-7/3\"");
        assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), x);
    }

    #[test]
    fn mediant_of_neighbours() {
        assert_eq!(r("1/2").mediant(&r("2/3")), r("3/5"));
    }
}
