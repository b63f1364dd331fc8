//! Uniform access to every parametrized family by name: parsing of
//! positional or JSON inputs, evaluation, solving and JSON output.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::Integer;
use crate::descent::UVSolution;
use crate::error::{Error, Result};
use crate::families::*;
use crate::solvers::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Triple,
    Quadruple,
    Carmichael,
    Quintuple,
    Sextuple,
    SextupleH,
    Uv2,
    Uv3,
    Uv4,
    Descartes,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Triple,
        Family::Quadruple,
        Family::Carmichael,
        Family::Quintuple,
        Family::Sextuple,
        Family::SextupleH,
        Family::Uv2,
        Family::Uv3,
        Family::Uv4,
        Family::Descartes,
    ];

    /// Families whose parametrization is onto, hence solvable and verifiable.
    pub const COVERING: [Family; 8] = [
        Family::Triple,
        Family::Quadruple,
        Family::Quintuple,
        Family::Sextuple,
        Family::Uv2,
        Family::Uv3,
        Family::Uv4,
        Family::Descartes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Triple => "triple",
            Family::Quadruple => "quadruple",
            Family::Carmichael => "carmichael",
            Family::Quintuple => "quintuple",
            Family::Sextuple => "sextuple",
            Family::SextupleH => "sextuple-h",
            Family::Uv2 => "uv2",
            Family::Uv3 => "uv3",
            Family::Uv4 => "uv4",
            Family::Descartes => "descartes",
        }
    }

    pub fn is_covering(self) -> bool {
        Self::COVERING.contains(&self)
    }

    pub fn shape(self) -> TupleShape {
        match self {
            Family::Triple => TupleShape::Pyth(3),
            Family::Quadruple | Family::Carmichael => TupleShape::Pyth(4),
            Family::Quintuple => TupleShape::Pyth(5),
            Family::Sextuple | Family::SextupleH => TupleShape::Pyth(6),
            Family::Uv2 => TupleShape::Uv(2),
            Family::Uv3 => TupleShape::Uv(3),
            Family::Uv4 => TupleShape::Uv(4),
            Family::Descartes => TupleShape::Descartes,
        }
    }

    pub fn param_fields(self) -> &'static [&'static str] {
        match self {
            Family::Triple => TripleParams::FIELDS,
            Family::Quadruple => QuadParams::FIELDS,
            Family::Carmichael => CarmichaelParams::FIELDS,
            Family::Quintuple => QuintParams::FIELDS,
            Family::Sextuple => SextParams::FIELDS,
            Family::SextupleH | Family::Uv4 => SextUVParams::FIELDS,
            Family::Uv2 => QuadUVParams::FIELDS,
            Family::Uv3 => QuintUVParams::FIELDS,
            Family::Descartes => DescartesParams::FIELDS,
        }
    }

    pub fn params_from_flat(self, v: &[Integer]) -> Result<Params> {
        Ok(match self {
            Family::Triple => Params::Triple(TripleParams::from_flat(v)?),
            Family::Quadruple => Params::Quadruple(QuadParams::from_flat(v)?),
            Family::Carmichael => Params::Carmichael(CarmichaelParams::from_flat(v)?),
            Family::Quintuple => Params::Quintuple(QuintParams::from_flat(v)?),
            Family::Sextuple => Params::Sextuple(SextParams::from_flat(v)?),
            Family::SextupleH => Params::SextupleH(SextUVParams::from_flat(v)?),
            Family::Uv2 => Params::Uv2(QuadUVParams::from_flat(v)?),
            Family::Uv3 => Params::Uv3(QuintUVParams::from_flat(v)?),
            Family::Uv4 => Params::Uv4(SextUVParams::from_flat(v)?),
            Family::Descartes => Params::Descartes(DescartesParams::from_flat(v)?),
        })
    }

    pub fn params_from_json(self, s: &str) -> Result<Params> {
        fn parse<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad parameter record: {e}")))
        }
        let p = match self {
            Family::Triple => Params::Triple(parse(s)?),
            Family::Quadruple => Params::Quadruple(parse(s)?),
            Family::Carmichael => Params::Carmichael(parse(s)?),
            Family::Quintuple => Params::Quintuple(parse(s)?),
            Family::Sextuple => Params::Sextuple(parse(s)?),
            Family::SextupleH => Params::SextupleH(parse(s)?),
            Family::Uv2 => Params::Uv2(parse(s)?),
            Family::Uv3 => Params::Uv3(parse(s)?),
            Family::Uv4 => Params::Uv4(parse(s)?),
            Family::Descartes => Params::Descartes(parse(s)?),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn tuple_from_flat(self, v: Vec<Integer>) -> Result<Tuple> {
        self.shape().tuple_from_flat(v)
    }

    pub fn tuple_from_json(self, s: &str) -> Result<Tuple> {
        fn parse<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad tuple record: {e}")))
        }
        let t = match self.shape() {
            TupleShape::Pyth(_) => Tuple::Pyth(parse(s)?),
            TupleShape::Uv(_) => Tuple::Uv(parse(s)?),
            TupleShape::Descartes => Tuple::Descartes(parse(s)?),
        };
        self.shape().check(&t)?;
        Ok(t)
    }

    pub fn solve(self, t: &Tuple) -> Result<Params> {
        self.shape().check(t)?;
        Ok(match (self, t) {
            (Family::Triple, Tuple::Pyth(t)) => Params::Triple(solve_triple(t)?),
            (Family::Quadruple, Tuple::Pyth(t)) => Params::Quadruple(solve_quadruple(t)?),
            (Family::Quintuple, Tuple::Pyth(t)) => Params::Quintuple(solve_quintuple(t)?),
            (Family::Sextuple, Tuple::Pyth(t)) => Params::Sextuple(solve_sextuple(t)?),
            (Family::Uv2, Tuple::Uv(w)) => Params::Uv2(solve_uv_quadruple(w)?),
            (Family::Uv3, Tuple::Uv(w)) => Params::Uv3(solve_uv_quintuple(w)?),
            (Family::Uv4, Tuple::Uv(w)) => Params::Uv4(solve_uv_sextuple(w)?),
            (Family::Descartes, Tuple::Descartes(q)) => Params::Descartes(solve_descartes(q)?),
            (f, _) => {
                return Err(Error::Parse(format!(
                    "family {f} does not cover all tuples and has no solver"
                )))
            }
        })
    }

    /// Normalization promised by the solver for this family, if any:
    /// odd `y0` for the two-square families, unit `y0` for four squares.
    pub fn check_normalization(self, p: &Params, t: &Tuple) -> std::result::Result<(), String> {
        if t.is_zero() {
            return Ok(());
        }
        let y0 = match p {
            Params::Uv2(q) => &q.y0,
            Params::Quadruple(q) => &q.y0,
            Params::Descartes(q) => &q.y0,
            Params::Uv4(q) => &q.y0,
            Params::Sextuple(q) => &q.y0,
            Params::Uv3(q) => &q.y0,
            _ => return Ok(()),
        };
        match self {
            Family::Uv2 | Family::Quadruple | Family::Descartes if y0.is_even() => {
                Err(format!("y0 = {y0} is not odd"))
            }
            Family::Uv4 | Family::Sextuple | Family::Uv3 if y0.abs() != Integer::from(1) => {
                Err(format!("y0 = {y0} is not +-1"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::Parse(format!("unknown family {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// What kind of tuple a family produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TupleShape {
    /// Pythagorean n-tuple.
    Pyth(usize),
    /// uv solution with k squares.
    Uv(usize),
    Descartes,
}

impl TupleShape {
    pub fn tuple_from_flat(self, v: Vec<Integer>) -> Result<Tuple> {
        let t = match self {
            TupleShape::Pyth(_) => Tuple::Pyth(PythTuple::new(v)?),
            TupleShape::Uv(_) => Tuple::Uv(UVSolution::from_flat(v)?),
            TupleShape::Descartes => {
                let arr: [Integer; 4] = v
                    .try_into()
                    .map_err(|v: Vec<Integer>| Error::Parse(format!("Descartes quadruple needs 4 entries, got {}", v.len())))?;
                Tuple::Descartes(DescartesQuadruple::new(arr)?)
            }
        };
        self.check(&t)?;
        Ok(t)
    }

    fn check(self, t: &Tuple) -> Result<()> {
        let ok = match (self, t) {
            (TupleShape::Pyth(n), Tuple::Pyth(p)) => p.n() == n,
            (TupleShape::Uv(k), Tuple::Uv(w)) => w.k() == k,
            (TupleShape::Descartes, Tuple::Descartes(_)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvariantViolation(format!("tuple {} does not have shape {self:?}", t.to_json())))
        }
    }
}

/// Output of any family's evaluator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Tuple {
    Pyth(PythTuple),
    Uv(UVSolution),
    Descartes(DescartesQuadruple),
}

impl Tuple {
    pub fn to_flat(&self) -> Vec<Integer> {
        match self {
            Tuple::Pyth(t) => t.entries().to_vec(),
            Tuple::Uv(w) => w.to_flat(),
            Tuple::Descartes(q) => q.to_flat(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.to_flat().iter().all(Zero::is_zero)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tuples serialize")
    }
}

/// Parameter record of any family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Params {
    Triple(TripleParams),
    Quadruple(QuadParams),
    Carmichael(CarmichaelParams),
    Quintuple(QuintParams),
    Sextuple(SextParams),
    SextupleH(SextUVParams),
    Uv2(QuadUVParams),
    Uv3(QuintUVParams),
    Uv4(SextUVParams),
    Descartes(DescartesParams),
}

impl Params {
    pub fn family(&self) -> Family {
        match self {
            Params::Triple(_) => Family::Triple,
            Params::Quadruple(_) => Family::Quadruple,
            Params::Carmichael(_) => Family::Carmichael,
            Params::Quintuple(_) => Family::Quintuple,
            Params::Sextuple(_) => Family::Sextuple,
            Params::SextupleH(_) => Family::SextupleH,
            Params::Uv2(_) => Family::Uv2,
            Params::Uv3(_) => Family::Uv3,
            Params::Uv4(_) => Family::Uv4,
            Params::Descartes(_) => Family::Descartes,
        }
    }

    pub fn eval(&self) -> Tuple {
        match self {
            Params::Triple(p) => Tuple::Pyth(eval_triple(p)),
            Params::Quadruple(p) => Tuple::Pyth(eval_quadruple(p)),
            Params::Carmichael(p) => Tuple::Pyth(eval_quadruple_carmichael(p)),
            Params::Quintuple(p) => Tuple::Pyth(eval_quintuple(p)),
            Params::Sextuple(p) => Tuple::Pyth(eval_sextuple(p)),
            Params::SextupleH(p) => Tuple::Pyth(eval_sextuple_h(p)),
            Params::Uv2(p) => Tuple::Uv(eval_uv_quadruple(p)),
            Params::Uv3(p) => Tuple::Uv(eval_uv_quintuple(p)),
            Params::Uv4(p) => Tuple::Uv(eval_uv_sextuple(p)),
            Params::Descartes(p) => Tuple::Descartes(eval_descartes(p)),
        }
    }

    pub fn to_flat(&self) -> Vec<Integer> {
        match self {
            Params::Triple(p) => p.to_flat(),
            Params::Quadruple(p) => p.to_flat(),
            Params::Carmichael(p) => p.to_flat(),
            Params::Quintuple(p) => p.to_flat(),
            Params::Sextuple(p) => p.to_flat(),
            Params::SextupleH(p) | Params::Uv4(p) => p.to_flat(),
            Params::Uv2(p) => p.to_flat(),
            Params::Uv3(p) => p.to_flat(),
            Params::Descartes(p) => p.to_flat(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Params::Quintuple(p) => p.validate(),
            _ => Ok(()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("parameter records serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("pentagon".parse::<Family>().is_err());
    }

    #[test]
    fn eval_and_solve_dispatch() {
        let p = Family::Uv2.params_from_flat(&[1, 1, 2, 3, 4].map(int)).unwrap();
        let t = p.eval();
        assert_eq!(t.to_json(), r#"{"x":["11","-2"],"u":"5","v":"25"}"#);
        let back = Family::Uv2.solve(&t).unwrap();
        assert_eq!(back.eval(), t);
        assert!(Family::Carmichael.solve(&p.eval()).is_err());
        assert!(Family::Uv3.solve(&t).is_err());
    }

    #[test]
    fn json_params_round_trip() {
        for f in Family::ALL {
            let mut flat = vec![int(1); f.param_fields().len()];
            flat[1] = int(-3);
            let p = f.params_from_flat(&flat).unwrap();
            assert_eq!(f.params_from_json(&p.to_json()).unwrap(), p);
            assert_eq!(p.family(), f);
            let t = p.eval();
            assert_eq!(f.tuple_from_json(&t.to_json()).unwrap(), t);
            assert_eq!(f.tuple_from_flat(t.to_flat()).unwrap(), t);
        }
    }
}
