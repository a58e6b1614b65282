//! Scalar information-theoretic primitives. Logarithms are base 2 throughout.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A real in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability<T>(T);

impl<T: Scalar> Probability<T> {
    pub fn new(value: T) -> Result<Self> {
        check_unit("probability", value)?;
        Ok(Self(value))
    }

    pub fn get(self) -> T {
        self.0
    }
}

/// A nonnegative rate in bits.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Rate<T>(T);

impl<T: Scalar> Rate<T> {
    pub fn new(value: T) -> Result<Self> {
        check_nonnegative("rate", value)?;
        Ok(Self(value))
    }

    pub fn get(self) -> T {
        self.0
    }
}

pub(crate) fn check_unit<T: Scalar>(name: &'static str, x: T) -> Result<()> {
    if x >= T::zero() && x <= T::one() {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value: x.to_f64_lossy(),
            range: "[0, 1]",
        })
    }
}

pub(crate) fn check_half<T: Scalar>(name: &'static str, x: T) -> Result<()> {
    if x >= T::zero() && x <= T::lit(0.5) {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value: x.to_f64_lossy(),
            range: "[0, 1/2]",
        })
    }
}

pub(crate) fn check_nonnegative<T: Scalar>(name: &'static str, x: T) -> Result<()> {
    if x >= T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value: x.to_f64_lossy(),
            range: "[0, inf)",
        })
    }
}

/// `h(p)` without the domain check; `0 log 0 = 0`.
#[inline]
pub(crate) fn h<T: Scalar>(p: T) -> T {
    if p <= T::zero() || p >= T::one() {
        return T::zero();
    }
    let q = T::one() - p;
    -(p * p.log2()) - q * q.log2()
}

/// Entropy in bits of a probability vector (zero entries contribute nothing).
pub(crate) fn entropy<T: Scalar>(dist: &[T]) -> T {
    dist.iter()
        .filter(|&&p| p > T::zero())
        .fold(T::zero(), |acc, &p| acc - p * p.log2())
}

/// Binary entropy `h(p) = -p log p - (1-p) log(1-p)` in bits.
pub fn binary_entropy<T: Scalar>(p: T) -> Result<T> {
    check_unit("p", p)?;
    Ok(h(p))
}

/// Inverse of `h` restricted to `[0, 1/2]`, by bisection to [`Scalar::bisection_tol`].
///
/// Bisection keeps the iterate inside the domain near `p = 0`, where `h'` is unbounded.
pub fn inv_binary_entropy<T: Scalar>(x: T) -> Result<T> {
    check_unit("x", x)?;
    Ok(inv_h(x))
}

pub(crate) fn inv_h<T: Scalar>(x: T) -> T {
    let half = T::lit(0.5);
    if x <= T::zero() {
        return T::zero();
    }
    if x >= T::one() {
        return half;
    }
    let tol = T::bisection_tol();
    let (mut lo, mut hi) = (T::zero(), half);
    while hi - lo > tol + tol {
        let mid = (lo + hi) * half;
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) < x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) * half
}

/// `p * q = p(1-q) + q(1-p)`: probability that exactly one of two independent events occurs.
pub fn star<T: Scalar>(p: T, q: T) -> Result<T> {
    check_unit("p", p)?;
    check_unit("q", q)?;
    Ok(star_unchecked(p, q))
}

#[inline]
pub(crate) fn star_unchecked<T: Scalar>(p: T, q: T) -> T {
    p * (T::one() - q) + q * (T::one() - p)
}

/// Exact `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::ZERO;
    }
    let k = (k as u64).min(n - k as u64);
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}
