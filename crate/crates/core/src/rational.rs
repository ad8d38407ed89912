//! Exact rational numbers used throughout the ranking pipeline.
//!
//! `Rational` wraps an arbitrary-precision `BigRational` so that sums of
//! weighted preference degrees never overflow and ties compare exactly.
//! On the wire a rational is `{"num": i, "den": d, "decimal": "…"}`; the
//! decimal string is for humans and is ignored when reading.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

/// Number of decimal places in the serialized convenience string.
pub const WIRE_DECIMALS: u32 = 6;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Panics when `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(num, den)))
        }
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact conversion of a finite `f64`. Returns `None` for NaN/inf.
    pub fn from_f64_exact(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Rational)
    }

    /// Parses the shortest decimal form of `x`, so `0.1` becomes `1/10`
    /// rather than the binary expansion.
    pub fn from_f64_decimal(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        format!("{x}").parse().ok()
    }

    /// Rounds to `places` decimals, half away from zero, returning the
    /// scaled integer (e.g. `0.0745` at 3 places gives `75`).
    pub fn round_scaled(&self, places: u32) -> BigInt {
        let scale = BigInt::from(10u32).pow(places);
        let scaled = &self.0 * BigRational::from_integer(scale);
        let two = BigInt::from(2);
        let (num, den) = (scaled.numer().clone(), scaled.denom().clone());
        // floor((2|num| + den) / 2den) with the sign reapplied
        let magnitude = (num.abs() * &two + &den).div_floor(&(den * two));
        if num.is_negative() {
            -magnitude
        } else {
            magnitude
        }
    }

    /// Fixed-point decimal string rounded half away from zero.
    pub fn to_decimal_string(&self, places: u32) -> String {
        let scaled = self.round_scaled(places);
        let negative = scaled.is_negative();
        let digits = scaled.abs().to_string();
        let places = places as usize;
        let body = if places == 0 {
            digits
        } else {
            let padded = format!("{digits:0>width$}", width = places + 1);
            let (int_part, frac_part) = padded.split_at(padded.len() - places);
            format!("{int_part}.{frac_part}")
        };
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Rounded value as an `f64`, suitable for display-only fields.
    pub fn to_rounded_f64(&self, places: u32) -> f64 {
        let scaled = self.round_scaled(places).to_f64().unwrap_or(f64::NAN);
        let v = scaled / 10f64.powi(places as i32);
        // avoid emitting -0.0
        if v == 0.0 {
            0.0
        } else {
            v
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"3"`, `"-3/4"` and plain decimals such as `"0.125"` or `"1e-3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            return Rational::from_big(n, d).ok_or_else(err);
        }
        let (mantissa, exponent) = match t.find(['e', 'E']) {
            Some(pos) => {
                let e: i32 = t[pos + 1..].parse().map_err(|_| err())?;
                (&t[..pos], e)
            }
            None => (t, 0),
        };
        let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if int_digits.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        if !int_digits
            .chars()
            .chain(frac_part.chars())
            .all(|c| c.is_ascii_digit())
        {
            return Err(err());
        }
        let digits = format!("{int_digits}{frac_part}");
        let mut num: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| err())?
        };
        if negative {
            num = -num;
        }
        let shift = exponent - frac_part.len() as i32;
        let ten = BigInt::from(10);
        let value = if shift >= 0 {
            BigRational::from_integer(num * ten.pow(shift as u32))
        } else {
            BigRational::new(num, ten.pow(shift.unsigned_abs()))
        };
        Ok(Rational(value))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_integer(n as i64)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

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
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rational", 3)?;
        // numerators beyond i64 fall back to strings
        match (self.numer().to_i64(), self.denom().to_i64()) {
            (Some(n), Some(d)) => {
                st.serialize_field("num", &n)?;
                st.serialize_field("den", &d)?;
            }
            _ => {
                st.serialize_field("num", &self.numer().to_string())?;
                st.serialize_field("den", &self.denom().to_string())?;
            }
        }
        st.serialize_field("decimal", &self.to_decimal_string(WIRE_DECIMALS))?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum BigIntRepr {
    Int(i64),
    Text(String),
}

impl BigIntRepr {
    fn into_bigint<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            BigIntRepr::Int(n) => Ok(BigInt::from(n)),
            BigIntRepr::Text(s) => s
                .parse()
                .map_err(|_| E::custom(format!("invalid integer {s:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RationalRepr {
    Int(i64),
    Float(f64),
    Text(String),
    Pair {
        num: BigIntRepr,
        den: BigIntRepr,
        #[allow(dead_code)]
        #[serde(default)]
        decimal: Option<String>,
    },
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match RationalRepr::deserialize(deserializer)? {
            RationalRepr::Int(n) => Ok(Rational::from_integer(n)),
            RationalRepr::Float(x) => {
                Rational::from_f64_decimal(x).ok_or_else(|| de::Error::custom("non-finite number"))
            }
            RationalRepr::Text(s) => s.parse().map_err(de::Error::custom),
            RationalRepr::Pair { num, den, .. } => {
                let num = num.into_bigint()?;
                let den = den.into_bigint()?;
                if !den.is_positive() {
                    return Err(de::Error::custom("rational denominator must be positive"));
                }
                Ok(Rational(BigRational::new(num, den)))
            }
        }
    }
}
