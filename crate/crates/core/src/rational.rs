//! Exact rational scalars and their text/JSON encoding.
//!
//! Integers serialize as JSON numbers, everything else as a `"p/q"` string.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = num_rational::Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

/// Parses `"7"`, `"-3/4"` or `"0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let bad = || ParseRationalError::Invalid(s.to_string());
    if let Some((p, q)) = s.split_once('/') {
        let p: i128 = p.trim().parse().map_err(|_| bad())?;
        let q: i128 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 30 {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let w: i128 = match whole {
            "" | "-" | "+" => 0,
            _ => whole.parse().map_err(|_| bad())?,
        };
        let den = 10i128.pow(frac.len() as u32);
        let f: i128 = frac.parse().map_err(|_| bad())?;
        let mag = Rational::new(w.abs() * den + f, den);
        return Ok(if negative { -mag } else { mag });
    }
    s.parse::<i128>().map(int).map_err(|_| bad())
}

pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Serde wrapper giving the integer-or-`"p/q"` encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JsonRational(pub Rational);

impl fmt::Display for JsonRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl FromStr for JsonRational {
    type Err = ParseRationalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s).map(JsonRational)
    }
}

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let x = &self.0;
        if x.is_integer() {
            if let Ok(v) = i64::try_from(*x.numer()) {
                return ser.serialize_i64(v);
            }
        }
        ser.serialize_str(&format_rational(x))
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = JsonRational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
                Ok(JsonRational(int(v as i128)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                Ok(JsonRational(int(v as i128)))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Self::Value, E> {
                Err(E::custom(format!(
                    "non-exact number {v}; use a \"p/q\" string"
                )))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                parse_rational(v).map(JsonRational).map_err(E::custom)
            }
        }
        de.deserialize_any(V)
    }
}

pub fn to_json_vec(v: &[Rational]) -> Vec<JsonRational> {
    v.iter().copied().map(JsonRational).collect()
}

pub fn from_json_vec(v: &[JsonRational]) -> Vec<Rational> {
    v.iter().map(|x| x.0).collect()
}

pub fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    (a - b).abs()
}

pub fn is_positive(x: &Rational) -> bool {
    !x.is_zero() && x.is_positive()
}

/// `#[serde(with = "...")]` adapters for bare [`Rational`] fields.
pub mod serde_scalar {
    use super::*;
    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        JsonRational(*x).serialize(s)
    }
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        JsonRational::deserialize(d).map(|x| x.0)
    }
}

pub mod serde_vec {
    use super::*;
    pub fn serialize<S: Serializer>(x: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        to_json_vec(x).serialize(s)
    }
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<JsonRational>::deserialize(d).map(|v| from_json_vec(&v))
    }
}

pub mod serde_matrix {
    use super::*;
    pub fn serialize<S: Serializer>(x: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        x.iter()
            .map(|r| to_json_vec(r))
            .collect::<Vec<_>>()
            .serialize(s)
    }
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        Vec::<Vec<JsonRational>>::deserialize(d)
            .map(|m| m.iter().map(|r| from_json_vec(r)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("-3/4").unwrap(), Rational::new(-3, 4));
        assert_eq!(parse_rational("6/4").unwrap(), Rational::new(3, 2));
        assert_eq!(parse_rational("0.25").unwrap(), Rational::new(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), Rational::new(-3, 2));
        assert_eq!(parse_rational("-0.5").unwrap(), Rational::new(-1, 2));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator(_))
        ));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn json_encoding() {
        let v = vec![JsonRational(int(-24)), JsonRational(Rational::new(1, 3))];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[-24,"1/3"]"#);
        let back: Vec<JsonRational> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<JsonRational>("0.5").is_err());
    }
}
