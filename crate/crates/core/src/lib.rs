//! Zero-error outer bounds for the binary adder channel `Y = X1 + X2`, together
//! with the combinatorics behind them: sumsets of binary codebooks, projections
//! and `k`-shattering, the shifting compression and soft Sauer-Perles-Shelah
//! bounds, and the construction of zero-error systems with a common message.
//!
//! The analytic routines are generic over [`Scalar`] (`f32`/`f64`); the aliases
//! below fix the common `f64` instantiation. Exact counting bounds use
//! [`ExactRational`] and arbitrary-precision integers.

pub mod bounds;
pub mod codebook;
pub mod error;
pub mod numerics;
pub mod optimize;
pub mod pipeline;
pub mod scalar;
pub mod sps;
pub mod text;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Probability = numerics::Probability<f64>;
pub type Rate = numerics::Rate<f64>;
pub type BoundResult = bounds::BoundResult<f64>;
pub type JointDistribution = bounds::JointDistribution<f64>;
pub type SwPoint = bounds::SwPoint<f64>;
pub type LemmaSwReport = bounds::LemmaSwReport<f64>;

pub type BoundResultF32 = bounds::BoundResult<f32>;
pub type JointDistributionF32 = bounds::JointDistribution<f32>;

pub type ExactRational = num_rational::BigRational;
pub type ExactInteger = num_bigint::BigUint;
