//! One-dimensional search: a uniform grid followed by golden-section refinement
//! around the best grid point.
//!
//! The grid makes no unimodality assumption over the whole interval; the refinement
//! only needs the objective to be unimodal between the two grid neighbours of the
//! best point, which holds for the min-of-two-concave-curves objectives used here
//! even when the optimum sits on a kink.

use std::cmp::Ordering;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Optimum<T> {
    pub arg: T,
    pub value: T,
}

const MAX_GOLDEN_STEPS: usize = 400;

/// Maximizes `f` on `[lo, hi]` with `grid` intervals (endpoints included) then
/// refines to an interval width of `xtol`.
///
/// Ties keep the smallest argument, so the result depends only on the inputs.
pub fn maximize<T, F>(f: F, lo: T, hi: T, grid: usize, xtol: T) -> Optimum<T>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    if hi.partial_cmp(&lo) != Some(Ordering::Greater) || grid == 0 {
        return Optimum {
            arg: lo,
            value: f(lo),
        };
    }
    let step = |i: usize| {
        if i == grid {
            hi
        } else {
            lo + (hi - lo) * T::from_usize_lossy(i) / T::from_usize_lossy(grid)
        }
    };
    let mut best = Optimum {
        arg: lo,
        value: f(lo),
    };
    let mut best_i = 0;
    for i in 1..=grid {
        let x = step(i);
        let v = f(x);
        if v > best.value {
            best = Optimum { arg: x, value: v };
            best_i = i;
        }
    }
    let a = step(best_i.saturating_sub(1));
    let b = step((best_i + 1).min(grid));
    let refined = golden_max(&f, a, b, xtol);
    if refined.value > best.value {
        refined
    } else {
        best
    }
}

/// Minimizes `f`; see [`maximize`].
pub fn minimize<T, F>(f: F, lo: T, hi: T, grid: usize, xtol: T) -> Optimum<T>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let o = maximize(|x| -f(x), lo, hi, grid, xtol);
    Optimum {
        arg: o.arg,
        value: -o.value,
    }
}

/// Golden-section search for a maximum of `f` on `[a, b]`, returning the best point seen.
pub fn golden_max<T, F>(f: &F, mut a: T, mut b: T, xtol: T) -> Optimum<T>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) * T::lit(0.5);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fd > fc {
        Optimum { arg: d, value: fd }
    } else {
        Optimum { arg: c, value: fc }
    };
    for _ in 0..MAX_GOLDEN_STEPS {
        if b - a <= xtol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
            if fc > best.value {
                best = Optimum { arg: c, value: fc };
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
            if fd > best.value {
                best = Optimum { arg: d, value: fd };
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_maximum() {
        let o = maximize(|x: f64| -(x - 0.3).powi(2), 0.0, 1.0, 100, 1e-12);
        assert!((o.arg - 0.3).abs() < 1e-6);
        assert!(o.value.abs() < 1e-12);
    }

    #[test]
    fn kinked_maximum() {
        let f = |x: f64| (2.0 * x).min(1.0 - x);
        let o = maximize(f, 0.0, 1.0, 1000, 1e-13);
        assert!((o.arg - 1.0 / 3.0).abs() < 1e-9);
        assert!((o.value - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn endpoint_and_degenerate() {
        let o = maximize(|x: f64| x, 0.0, 2.0, 10, 1e-9);
        assert_eq!(o.arg, 2.0);
        let o = maximize(|x: f64| x * 3.0, 0.5, 0.5, 10, 1e-9);
        assert_eq!((o.arg, o.value), (0.5, 1.5));
        let o = minimize(|x: f64| (x - 0.7).abs(), 0.0, 1.0, 7, 1e-12);
        assert!((o.arg - 0.7).abs() < 1e-9);
    }

    #[test]
    fn multimodal_picks_global_grid_peak() {
        let f = |x: f64| (10.0 * x).sin() + 0.2 * x;
        let o = maximize(f, 0.0, 3.0, 3000, 1e-12);
        let brute = (0..=300_000)
            .map(|i| f(i as f64 * 1e-5))
            .fold(f64::MIN, f64::max);
        assert!(o.value >= brute - 1e-9);
    }

    #[test]
    fn works_in_f32() {
        let o = maximize(|x: f32| -(x - 0.25).powi(2), 0.0, 1.0, 64, 1e-6);
        assert!((o.arg - 0.25).abs() < 1e-3);
    }
}
