use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar the analytic routines are generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Absolute tolerance used when inverting monotone functions by bisection.
    ///
    /// `1e-12` for `f64`; types with a coarser epsilon get a few ulps at 1/2.
    fn bisection_tol() -> Self {
        Self::lit(1e-12).max(Self::epsilon() * Self::lit(4.0))
    }

    /// Slack allowed when checking closed-interval preconditions on computed inputs.
    fn domain_slack() -> Self {
        Self::epsilon() * Self::lit(64.0)
    }

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    fn from_usize_lossy(x: usize) -> Self {
        Self::from_usize(x).expect("count representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
