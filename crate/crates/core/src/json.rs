//! Serde adapters that carry integers as decimal strings.

use serde::{Deserialize, Deserializer, Serializer};

use crate::algebra::Integer;

fn parse<E: serde::de::Error>(s: &str) -> Result<Integer, E> {
    s.trim().parse().map_err(|_| E::custom(format!("not a decimal integer: {s:?}")))
}

pub mod decimal {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Integer, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Integer, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s)
    }
}

pub mod decimal_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Integer], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Integer>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| parse(s)).collect()
    }
}

/// Parses a comma-separated list of decimal integers.
pub fn parse_list(s: &str) -> crate::Result<Vec<Integer>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| crate::Error::Parse(format!("not a decimal integer: {p:?}")))
        })
        .collect()
}

