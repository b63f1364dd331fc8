//! Exact integer, Gaussian-integer and Lipschitz-quaternion arithmetic.

pub mod gaussian;
pub mod integer;
pub mod quaternion;

pub use gaussian::GaussianInt;
pub use integer::{
    centered_rem, cofactor_vector, ext_gcd, four_squares, gcd_all, int, is_perfect_square,
    Integer,
};
pub use quaternion::{GaussianMatrix2, LipschitzQuaternion};
