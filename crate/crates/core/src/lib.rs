//! Exact polynomial parametrizations of Pythagorean quadruples, quintuples
//! and sextuples and of integer Descartes quadruples, together with
//! constructive inverse solvers and exhaustive round-trip verification.
//!
//! Every tuple family has a forward evaluator in [`families`] and a solver
//! in [`solvers`] such that `eval(solve(t)) == t` for every valid `t`. The
//! solvers rest on rank-one descent over the Gaussian integers and the
//! Lipschitz quaternions ([`descent`]).

pub mod algebra;
pub mod cli;
pub mod descent;
pub mod error;
pub mod families;
pub mod family;
pub mod json;
pub mod solvers;
pub mod verify;

pub use algebra::{int, GaussianInt, Integer, LipschitzQuaternion};
pub use descent::{RankOneGaussian, RankOneQuaternion, UVSolution};
pub use error::{Error, Result};
pub use families::{DescartesQuadruple, PythTuple};
pub use family::Family;
