//! JSON helpers shared by the class types: coefficients travel as decimal strings.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An integer that serializes as a decimal string. Deserialization also accepts
/// plain JSON integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecimalInt(pub BigInt);

impl Serialize for DecimalInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for DecimalInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = DecimalInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<DecimalInt, E> {
                Ok(DecimalInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<DecimalInt, E> {
                Ok(DecimalInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<DecimalInt, E> {
                v.trim()
                    .parse::<BigInt>()
                    .map(DecimalInt)
                    .map_err(|_| E::custom(format!("invalid decimal integer {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_strings_roundtrip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let s = serde_json::to_string(&DecimalInt(big.clone())).unwrap();
        assert_eq!(s, "\"123456789012345678901234567890\"");
        let back: DecimalInt = serde_json::from_str(&s).unwrap();
        assert_eq!(back.0, big);
        let from_num: DecimalInt = serde_json::from_str("-4").unwrap();
        assert_eq!(from_num.0, BigInt::from(-4));
        assert!(serde_json::from_str::<DecimalInt>("\"1.5\"").is_err());
    }
}
