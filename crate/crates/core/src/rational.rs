//! Exact rationals for thresholds and degree fractions.
//!
//! Thin wrapper over `num_rational::BigRational`: always in lowest terms,
//! denominator positive. JSON form is `{"num": "...", "den": "...",
//! "decimal": "..."}` with num/den as exact decimal strings; the `decimal`
//! field is display-only and ignored on input.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Reduced fraction `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational::integer(0)
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Rational(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        Rational(&self.0 - &other.0)
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        Rational(&self.0 * &other.0)
    }

    pub fn mul_nat(&self, n: usize) -> Rational {
        Rational(&self.0 * BigInt::from(n))
    }

    /// Approximate value; for display and sizing heuristics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal string with 6 significant fractional digits.
    pub fn decimal_string(&self) -> String {
        let scaled = (&self.0 * BigInt::from(1_000_000)).round().to_integer();
        let neg = scaled.is_negative();
        let abs = scaled.magnitude().to_string();
        let padded = format!("{:0>7}", abs);
        let (int_part, frac_part) = padded.split_at(padded.len() - 6);
        format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `a/b` or a bare integer `a`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse rational from {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let num = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let den = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                Rational::from_bigint(num, den)
            }
            None => {
                let num = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(num)))
            }
        }
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Rational", 3)?;
        s.serialize_field("num", &self.numer().to_string())?;
        s.serialize_field("den", &self.denom().to_string())?;
        s.serialize_field("decimal", &self.decimal_string())?;
        s.end()
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeErr;
        #[derive(serde::Deserialize)]
        struct Raw {
            num: serde_json::Value,
            den: serde_json::Value,
        }
        fn to_bigint(v: &serde_json::Value) -> Option<BigInt> {
            match v {
                serde_json::Value::String(s) => BigInt::from_str(s).ok(),
                serde_json::Value::Number(n) => BigInt::from_str(&n.to_string()).ok(),
                _ => None,
            }
        }
        let raw = Raw::deserialize(deserializer)?;
        let num = to_bigint(&raw.num).ok_or_else(|| DeErr::custom("bad rational numerator"))?;
        let den = to_bigint(&raw.den).ok_or_else(|| DeErr::custom("bad rational denominator"))?;
        Rational::from_bigint(num, den).map_err(DeErr::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(6, -8);
        assert_eq!(r.numer().to_string(), "-3");
        assert_eq!(r.denom().to_string(), "4");
        assert_eq!(Rational::new(0, 5), Rational::zero());
    }

    #[test]
    fn ordering_is_by_value() {
        assert!(Rational::new(1, 3) < Rational::new(2, 5));
        assert!(Rational::new(3, 5) > Rational::new(1, 2));
        assert_eq!(Rational::new(2, 6), Rational::new(1, 3));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3/5".parse::<Rational>().unwrap(), Rational::new(3, 5));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::integer(7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Rational::new(1, 2).decimal_string(), "0.500000");
        assert_eq!(Rational::new(1, 3).decimal_string(), "0.333333");
        assert_eq!(Rational::new(-5, 4).decimal_string(), "-1.250000");
    }

    #[test]
    fn serde_round_trip() {
        let r = Rational::new(5, 7);
        let js = serde_json::to_string(&r).unwrap();
        assert!(js.contains("\"num\":\"5\""));
        assert!(js.contains("\"decimal\""));
        let back: Rational = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
        let from_numbers: Rational = serde_json::from_str(r#"{"num":5,"den":7}"#).unwrap();
        assert_eq!(from_numbers, r);
    }
}
