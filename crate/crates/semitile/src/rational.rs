//! Exact arbitrary-precision fractions.
//!
//! Every coordinate and length in this crate is a [`Rational`]. Values are
//! always kept in canonical form: positive denominator, gcd(|numerator|,
//! denominator) = 1. The textual form is `"p"` for integers and `"p/q"`
//! otherwise; parsing accepts non-canonical input (`"2/4"`) and canonicalizes,
//! but rejects a zero denominator.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalError {
    #[error("denominator must not be zero")]
    ZeroDenominator,
    #[error("malformed rational {0:?}")]
    Malformed(String),
}

/// An exact fraction backed by arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical form. Fails only on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, RationalError> {
        let den = den.into();
        if den.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
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

    /// True iff the canonical denominator is 1 (zero counts as an integer).
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True iff `self` is an integer multiple of `g`. Requires `g > 0`.
    pub fn is_multiple_of(&self, g: &Rational) -> bool {
        assert!(g.is_positive(), "modulus must be positive");
        (&self.0 / &g.0).is_integer()
    }

    /// Largest integer not greater than `self`.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Smallest integer not less than `self`.
    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Fractional part in `[0, 1)`: `self - floor(self)`.
    pub fn fract(&self) -> Rational {
        Rational(&self.0 - BigRational::from_integer(self.floor_int()))
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// For non-negative integers that fit, the value as a `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        if self.is_integer() {
            self.numer().to_u64()
        } else {
            None
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<u64> for Rational {
    fn from(v: u64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, v| acc + v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || RationalError::Malformed(s.to_string());
        match s.split_once('/') {
            None => {
                let n: BigInt = s.parse().map_err(|_| malformed())?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p: BigInt = p.parse().map_err(|_| malformed())?;
                let q: BigInt = q.parse().map_err(|_| malformed())?;
                Rational::new(p, q)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Decimal rendering with at most `sig` significant digits, truncated toward
/// zero. Display only; documents always carry the exact textual form.
pub fn to_decimal(r: &Rational, sig: usize) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let neg = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();
    let int_part = &num / &den;
    let mut rem = &num - &int_part * &den;
    let int_str = int_part.to_string();
    let mut used = if int_part.is_zero() { 0 } else { int_str.len() };
    let mut frac = String::new();
    let ten = BigInt::from(10);
    while !rem.is_zero() && used < sig {
        rem *= &ten;
        let digit = &rem / &den;
        rem -= &digit * &den;
        frac.push_str(&digit.to_string());
        if used > 0 || !digit.is_zero() {
            used += 1;
        }
    }
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if neg { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_str}")
    } else {
        format!("{sign}{int_str}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn assert_canonical(v: &Rational) {
        use num_integer::Integer;
        assert!(v.denom().is_positive());
        assert!(v.numer().gcd(v.denom()).is_one() || v.numer().is_zero());
        if v.numer().is_zero() {
            assert!(v.denom().is_one());
        }
    }

    #[test]
    fn arithmetic_examples() {
        let sum = r("1/2") + r("1/3");
        assert_eq!(sum, r("5/6"));
        assert_canonical(&sum);

        let diff = r("7/3") - r("7/3");
        assert_eq!(diff, Rational::zero());
        assert_canonical(&diff);

        assert_eq!(Rational::new(2, 4).unwrap(), r("1/2"));
    }

    #[test]
    fn integer_predicate() {
        assert!(r("3").is_integer());
        assert!(!r("1/2").is_integer());
        assert!(Rational::zero().is_integer());
    }

    #[test]
    fn multiples() {
        let half = r("1/2");
        assert!(r("3/2").is_multiple_of(&half));
        assert!(r("2").is_multiple_of(&half));
        assert!(!r("1/3").is_multiple_of(&half));
    }

    #[test]
    fn floor_and_fract() {
        assert_eq!(r("7/3").floor_int(), 2.into());
        assert_eq!(r("-1/2").floor_int(), (-1).into());
        assert_eq!(r("7/3").fract(), r("1/3"));
        assert_eq!(r("-1/2").fract(), r("1/2"));
        assert_eq!(r("4").fract(), Rational::zero());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(r("3").to_string(), "3");
        assert_eq!(r("-3/4").to_string(), "-3/4");
        assert_eq!(r("2/4").to_string(), "1/2");
        assert_eq!(r("3/-6").to_string(), "-1/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&r("1/2"), 20), "0.5");
        assert_eq!(to_decimal(&r("7/3"), 5), "2.3333");
        assert_eq!(to_decimal(&r("-40"), 20), "-40");
        assert_eq!(to_decimal(&r("1/7"), 20), "0.14285714285714285714");
    }

    fn any_rational() -> impl Strategy<Value = Rational> {
        (any::<i64>(), any::<u64>()).prop_map(|(n, d)| Rational::new(n, d.max(1)).unwrap())
    }

    proptest! {
        #[test]
        fn add_sub_round_trip(a in any_rational(), b in any_rational()) {
            let back = (&a + &b) - &b;
            prop_assert_eq!(&back, &a);
            assert_canonical(&back);
        }

        #[test]
        fn products_stay_canonical(a in any_rational(), b in any_rational()) {
            assert_canonical(&(&a * &b));
            assert_canonical(&(&a + &b));
        }

        #[test]
        fn parse_round_trip(a in any_rational()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<Rational>().unwrap(), a);
        }
    }
}
