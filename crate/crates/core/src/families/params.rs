//! Parameter records, one per parametrization. Field order is the
//! positional order used on the command line and in JSON.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::Integer;
use crate::error::{Error, Result};
use crate::json::decimal;

macro_rules! param_record {
    (
        $(#[$meta:meta])*
        $name:ident { $($field:ident),* $(,)? }
        $(validate($this:ident) $check:block)?
    ) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
        #[serde(deny_unknown_fields)]
        pub struct $name {
            $(
                #[serde(with = "decimal")]
                pub $field: Integer,
            )*
        }

        impl $name {
            pub const FIELDS: &'static [&'static str] = &[$(stringify!($field)),*];

            pub fn from_flat(values: &[Integer]) -> Result<Self> {
                if values.len() != Self::FIELDS.len() {
                    return Err(Error::Parse(format!(
                        "{} takes {} parameters ({}), got {}",
                        stringify!($name),
                        Self::FIELDS.len(),
                        Self::FIELDS.join(","),
                        values.len()
                    )));
                }
                let mut it = values.iter().cloned();
                let out = Self { $($field: it.next().unwrap()),* };
                out.validate()?;
                Ok(out)
            }

            pub fn from_i64(values: &[i64]) -> Self {
                let ints: Vec<Integer> = values.iter().map(|&v| Integer::from(v)).collect();
                Self::from_flat(&ints).expect("valid parameter vector")
            }

            pub fn to_flat(&self) -> Vec<Integer> {
                vec![$(self.$field.clone()),*]
            }

            #[allow(unused_variables)]
            pub fn validate(&self) -> Result<()> {
                $(let $this = self; $check)?
                Ok(())
            }
        }
    };
}

param_record! {
    /// Two-square uv family: `y0 (y1 y3 + y2 y4, y1 y4 - y2 y3, y1^2 + y2^2, y3^2 + y4^2)`.
    QuadUVParams { y0, y1, y2, y3, y4 }
}

param_record! {
    /// Five-parameter quadruple family with `y4 = y1 + y2 + y3 + 2z`.
    QuadParams { y0, y1, y2, y3, z }
}

param_record! {
    /// Classical quadruple family with even legs.
    CarmichaelParams { y0, y1, y2, y3, y4 }
}

param_record! {
    /// Four-square uv family: `c = y0`, `a = y1 + y2 i + y3 j + y4 k`, `b = y5 + .. + y8 k`.
    SextUVParams { y0, y1, y2, y3, y4, y5, y6, y7, y8 }
}

param_record! {
    /// Nine-parameter sextuple family with `y8 = y1 + .. + y7 + 2z`.
    SextParams { y0, y1, y2, y3, y4, y5, y6, y7, z }
}

param_record! {
    /// Three-square uv family: `y1..y4 = z0 (z1..z4)` and `y5..y8` from the
    /// skew coefficients `z12 .. z34`.
    QuintUVParams { y0, z0, z1, z2, z3, z4, z12, z13, z14, z23, z24, z34 }
}

param_record! {
    /// Fourteen-variable quintuple family plus an explicit overall sign.
    QuintParams { sign, w0, w12, w13, w14, w23, w24, w34, t1, t2, t3, d1, d2, d3, w4 }
    validate(p) {
        if !p.sign.abs().is_one() {
            return Err(Error::Parse(format!("sign must be 1 or -1, got {}", p.sign)));
        }
    }
}

param_record! {
    /// Descartes family in five parameters.
    DescartesParams { y0, y1, y2, y3, y4 }
}

impl Default for QuintParams {
    /// All variables zero with sign `+1`; evaluates to the zero tuple.
    fn default() -> Self {
        let mut flat = vec![Integer::zero(); Self::FIELDS.len()];
        flat[0] = Integer::one();
        Self::from_flat(&flat).unwrap()
    }
}

/// Which leg carries the `2 y1 y2` term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleVariant {
    /// `y0 (2 y1 y2, y1^2 - y2^2, y1^2 + y2^2)`
    F1,
    /// `y0 (y1^2 - y2^2, 2 y1 y2, y1^2 + y2^2)`
    F2,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleParams {
    pub variant: TripleVariant,
    #[serde(with = "decimal")]
    pub y0: Integer,
    #[serde(with = "decimal")]
    pub y1: Integer,
    #[serde(with = "decimal")]
    pub y2: Integer,
}

impl TripleParams {
    pub const FIELDS: &'static [&'static str] = &["variant", "y0", "y1", "y2"];

    pub fn new(variant: TripleVariant, y0: i64, y1: i64, y2: i64) -> Self {
        Self { variant, y0: y0.into(), y1: y1.into(), y2: y2.into() }
    }

    /// Flat form: the variant is encoded as `1` or `2` in front.
    pub fn from_flat(values: &[Integer]) -> Result<Self> {
        let [v, y0, y1, y2] = values else {
            return Err(Error::Parse(format!(
                "TripleParams takes 4 parameters (variant,y0,y1,y2), got {}",
                values.len()
            )));
        };
        let variant = if v.is_one() {
            TripleVariant::F1
        } else if *v == Integer::from(2) {
            TripleVariant::F2
        } else {
            return Err(Error::Parse(format!("triple variant must be 1 or 2, got {v}")));
        };
        Ok(Self { variant, y0: y0.clone(), y1: y1.clone(), y2: y2.clone() })
    }

    pub fn to_flat(&self) -> Vec<Integer> {
        let v = match self.variant {
            TripleVariant::F1 => 1,
            TripleVariant::F2 => 2,
        };
        vec![Integer::from(v), self.y0.clone(), self.y1.clone(), self.y2.clone()]
    }

    pub fn validate(&self) -> Result<()> {
        Ok(())
    }
}
