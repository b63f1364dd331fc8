use num_integer::Integer as _;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::Integer;
use crate::descent::UVSolution;
use crate::error::{Error, Result};
use crate::json::{decimal, decimal_vec};

/// Integers `(x_1, .., x_n)` with `x_1^2 + .. + x_{n-1}^2 = x_n^2`, `n >= 3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTuple")]
pub struct PythTuple {
    #[serde(rename = "x", with = "decimal_vec")]
    entries: Vec<Integer>,
}

#[derive(Deserialize)]
struct RawTuple {
    #[serde(with = "decimal_vec")]
    x: Vec<Integer>,
}

impl TryFrom<RawTuple> for PythTuple {
    type Error = Error;
    fn try_from(raw: RawTuple) -> Result<Self> {
        PythTuple::new(raw.x)
    }
}

impl PythTuple {
    pub fn new(entries: Vec<Integer>) -> Result<Self> {
        if entries.len() < 3 {
            return Err(Error::InvariantViolation(format!(
                "a Pythagorean tuple needs at least 3 entries, got {}",
                entries.len()
            )));
        }
        let (last, legs) = entries.split_last().unwrap();
        let lhs: Integer = legs.iter().map(|x| x * x).sum();
        if lhs != last * last {
            return Err(Error::InvariantViolation(format!(
                "sum of squares of legs is {lhs}, last entry squared is {}",
                last * last
            )));
        }
        Ok(Self { entries })
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| Integer::from(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self { entries: vec![Integer::zero(); n] }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Integer] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `u = x_n + x_{n-1}`, `v = x_n - x_{n-1}`.
    pub fn to_uv(&self) -> UVSolution {
        let n = self.n();
        let (xn, xm) = (&self.entries[n - 1], &self.entries[n - 2]);
        UVSolution::new(self.entries[..n - 2].to_vec(), xn + xm, xn - xm)
            .expect("substitution preserves the equation")
    }

    /// Inverse of [`PythTuple::to_uv`]; needs `u - v` even.
    pub fn from_uv(w: &UVSolution) -> Result<Self> {
        let diff = w.u() - w.v();
        if diff.is_odd() {
            return Err(Error::ParityError { u: w.u().to_string(), v: w.v().to_string() });
        }
        let mut entries = w.xs().to_vec();
        entries.push(diff / 2);
        entries.push((w.u() + w.v()) / 2);
        Self::new(entries)
    }
}

pub fn pyth_to_uv(t: &PythTuple) -> UVSolution {
    t.to_uv()
}

pub fn uv_to_pyth(w: &UVSolution) -> Result<PythTuple> {
    PythTuple::from_uv(w)
}

/// Integer curvatures with `2(b1^2 + b2^2 + b3^2 + b4^2) = (b1 + b2 + b3 + b4)^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDescartes")]
pub struct DescartesQuadruple {
    #[serde(with = "decimal")]
    b1: Integer,
    #[serde(with = "decimal")]
    b2: Integer,
    #[serde(with = "decimal")]
    b3: Integer,
    #[serde(with = "decimal")]
    b4: Integer,
}

#[derive(Deserialize)]
struct RawDescartes {
    #[serde(with = "decimal")]
    b1: Integer,
    #[serde(with = "decimal")]
    b2: Integer,
    #[serde(with = "decimal")]
    b3: Integer,
    #[serde(with = "decimal")]
    b4: Integer,
}

impl TryFrom<RawDescartes> for DescartesQuadruple {
    type Error = Error;
    fn try_from(r: RawDescartes) -> Result<Self> {
        DescartesQuadruple::new([r.b1, r.b2, r.b3, r.b4])
    }
}

/// `2 * sum of squares - (sum)^2`; zero exactly on Descartes quadruples.
pub fn descartes_defect(b: &[Integer; 4]) -> Integer {
    let sq: Integer = b.iter().map(|x| x * x).sum();
    let s: Integer = b.iter().sum();
    Integer::from(2) * sq - &s * &s
}

impl DescartesQuadruple {
    pub fn new(b: [Integer; 4]) -> Result<Self> {
        let defect = descartes_defect(&b);
        if !defect.is_zero() {
            return Err(Error::InvariantViolation(format!(
                "2*(sum of squares) - (sum)^2 = {defect}, expected 0"
            )));
        }
        let [b1, b2, b3, b4] = b;
        Ok(Self { b1, b2, b3, b4 })
    }

    pub fn from_i64(b: [i64; 4]) -> Result<Self> {
        Self::new(b.map(Integer::from))
    }

    pub fn b(&self) -> [&Integer; 4] {
        [&self.b1, &self.b2, &self.b3, &self.b4]
    }

    pub fn to_flat(&self) -> Vec<Integer> {
        self.b().into_iter().cloned().collect()
    }
}

/// `b1 = u + v - 2x1 + x2`, `b2 = u + x2`, `b3 = v + x2`, `b4 = -x2`.
pub fn uv_to_descartes(w: &UVSolution) -> Result<DescartesQuadruple> {
    if w.k() != 2 {
        return Err(Error::InvariantViolation(format!("expected 2 squares, got {}", w.k())));
    }
    let (x1, x2, u, v) = (&w.xs()[0], &w.xs()[1], w.u(), w.v());
    DescartesQuadruple::new([
        u + v - Integer::from(2) * x1 + x2,
        u + x2,
        v + x2,
        -x2,
    ])
}

pub fn descartes_to_uv(q: &DescartesQuadruple) -> Result<UVSolution> {
    let [b1, b2, b3, b4] = q.b();
    let twice_x1 = -b1 + b2 + b3 + b4;
    debug_assert!(twice_x1.is_even());
    UVSolution::new(vec![twice_x1 / 2, -b4], b2 + b4, b3 + b4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uv_substitution() {
        let t = PythTuple::from_i64(&[3, 4, 5]).unwrap();
        assert_eq!(pyth_to_uv(&t), UVSolution::from_i64(&[3], 9, 1).unwrap());
        assert_eq!(uv_to_pyth(&pyth_to_uv(&t)).unwrap(), t);
        assert_eq!(uv_to_pyth(&UVSolution::zero(1)).unwrap(), PythTuple::zero(3));
        let odd = UVSolution::from_i64(&[0, 0], 0, 0).unwrap();
        assert!(uv_to_pyth(&odd).is_ok());
        let bad = UVSolution::from_i64(&[1, 1], 1, 2).unwrap();
        assert!(matches!(uv_to_pyth(&bad), Err(Error::ParityError { .. })));
        assert!(PythTuple::from_i64(&[1, 2, 3]).is_err());
    }

    #[test]
    fn descartes_bijection_examples() {
        let w = UVSolution::from_i64(&[1, 0], 1, 1).unwrap();
        assert_eq!(uv_to_descartes(&w).unwrap(), DescartesQuadruple::from_i64([0, 1, 1, 0]).unwrap());
        let w = UVSolution::from_i64(&[11, -2], 5, 25).unwrap();
        let q = uv_to_descartes(&w).unwrap();
        assert_eq!(q, DescartesQuadruple::from_i64([6, 3, 23, 2]).unwrap());
        assert_eq!(descartes_to_uv(&q).unwrap(), w);
        let zero = DescartesQuadruple::from_i64([0, 0, 0, 0]).unwrap();
        assert_eq!(descartes_to_uv(&zero).unwrap(), UVSolution::zero(2));
        assert_eq!(uv_to_descartes(&UVSolution::zero(2)).unwrap(), zero);
        assert!(DescartesQuadruple::from_i64([1, 1, 1, 1]).is_err());
    }

    #[test]
    fn json_shape() {
        let w = UVSolution::from_i64(&[11, -2], 5, 25).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"x":["11","-2"],"u":"5","v":"25"}"#);
        let back: UVSolution = serde_json::from_str(r#"{"x":["11","-2"],"u":"5","v":"25"}"#).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<UVSolution>(r#"{"x":["1"],"u":"5","v":"25"}"#).is_err());
        let q = DescartesQuadruple::from_i64([-1, 2, 2, 3]).unwrap();
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"b1":"-1","b2":"2","b3":"2","b4":"3"}"#);
    }
}
