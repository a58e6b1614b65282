//! Analytic bounds for the binary adder channel with and without a common message.
//!
//! All rates are in bits. `L`, `J`, `R_Sigma` and `Gamma` follow the usual
//! notation of the VC-dimension outer bound; [`theorem1_bound`] is the outer bound
//! on `R2` given `R1`, and [`sumsw_bound`] is the sum-capacity with a common
//! message of rate `r0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::error::{Error, Result};
use crate::numerics::{
    check_half, check_nonnegative, check_unit, entropy, h, inv_h, star_unchecked, Probability,
    Rate,
};
use crate::optimize::{self, Optimum};
use crate::scalar::Scalar;

/// Grid intervals for the inner maximization over `eta`.
pub const INNER_GRID: usize = 10_000;
/// Grid intervals for the outer minimization over `alpha`.
pub const OUTER_GRID: usize = 1_000;

/// Largest admissible support of the auxiliary variable `U`.
pub const MAX_U_SUPPORT: usize = 3;

fn inner_xtol<T: Scalar>() -> T {
    T::bisection_tol()
}

fn outer_xtol<T: Scalar>() -> T {
    T::lit(1e-9).max(T::epsilon() * T::lit(16.0))
}

/// Value of an optimized bound with its optimizing arguments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult<T> {
    pub value: Rate<T>,
    /// Outer minimizer; only set by [`theorem1_bound`].
    pub arg_alpha: Option<Probability<T>>,
    /// Inner maximizer, in `[0, 1/2]`.
    pub arg_eta: Probability<T>,
}

impl<T: Scalar> BoundResult<T> {
    fn new(value: T, arg_alpha: Option<T>, arg_eta: T) -> Self {
        // optimizer outputs are in range by construction; clamp rounding at the ends
        let clamp = |x: T| x.max(T::zero()).min(T::lit(0.5));
        Self {
            value: Rate::new(value.max(T::zero())).expect("finite bound"),
            arg_alpha: arg_alpha.map(|a| Probability::new(clamp(a)).expect("alpha in range")),
            arg_eta: Probability::new(clamp(arg_eta)).expect("eta in range"),
        }
    }

    pub fn value(&self) -> T {
        self.value.get()
    }

    pub fn eta(&self) -> T {
        self.arg_eta.get()
    }

    pub fn alpha(&self) -> Option<T> {
        self.arg_alpha.map(Probability::get)
    }
}

#[inline]
fn big_l_unchecked<T: Scalar>(eta: T) -> T {
    h(eta) + T::one() - eta
}

/// First branch of `J`, which does not depend on `p`.
#[inline]
fn j_upper<T: Scalar>(eta: T) -> T {
    let root = (T::one() - eta - eta).max(T::zero()).sqrt();
    T::lit(2.0) * h(T::lit(0.5) * (T::one() - root)) - eta
}

/// `J` with `q = p*p` precomputed. Callers guarantee `q < 1/2` whenever `eta < q`.
#[inline]
fn j_unchecked<T: Scalar>(q: T, eta: T) -> T {
    if eta >= q {
        return j_upper(eta);
    }
    let s = T::one() - q - q;
    let t = T::one() - eta - q;
    let arg = T::lit(0.5) * (T::one() - t / s.sqrt());
    T::lit(2.0) * h(arg) - T::lit(0.5) * (T::one() - t * t / s)
}

/// `L(eta) = h(eta) + 1 - eta`, the entropy of the channel output when the
/// middle symbol has probability `eta` and the outer two are equally likely.
pub fn big_l<T: Scalar>(eta: T) -> Result<T> {
    check_half("eta", eta)?;
    Ok(big_l_unchecked(eta))
}

/// `J(p, eta)`: upper branch when `eta >= p*p`, lower branch otherwise.
pub fn big_j<T: Scalar>(p: T, eta: T) -> Result<T> {
    check_half("p", p)?;
    check_half("eta", eta)?;
    let q = star_unchecked(p, p);
    if eta >= q {
        return Ok(j_upper(eta));
    }
    let s = T::one() - q - q;
    if s <= T::zero() {
        return Err(Error::Singularity);
    }
    let arg = T::lit(0.5) * (T::one() - (T::one() - eta - q) / s.sqrt());
    if arg < -T::domain_slack() {
        return Err(Error::Domain {
            name: "eta",
            value: eta.to_f64_lossy(),
            range: "[p, 1/2] (lower branch of J leaves the domain of h)",
        });
    }
    Ok(j_unchecked(q, eta))
}

/// `R_Sigma` with `p = h^{-1}(r1)` already inverted.
pub(crate) fn r_sigma_at<T: Scalar>(r0: T, p: T) -> Optimum<T> {
    let half = T::lit(0.5);
    let q = star_unchecked(p, p);
    let objective = |eta: T| big_l_unchecked(eta).min(j_unchecked(q, eta) + r0);
    optimize::maximize(objective, p.min(half), half, INNER_GRID, inner_xtol())
}

/// `R_Sigma(r0, r1) = max_{h^{-1}(r1) <= eta <= 1/2} min{L(eta), J(h^{-1}(r1), eta) + r0}`,
/// the largest sum rate `r0 + r1 + r2` a zero-error system can have.
pub fn r_sigma<T: Scalar>(r0: T, r1: T) -> Result<BoundResult<T>> {
    check_nonnegative("r0", r0)?;
    check_unit("r1", r1)?;
    let best = r_sigma_at(r0, inv_h(r1));
    Ok(BoundResult::new(best.value, None, best.arg))
}

/// `Gamma(R1, alpha) = h((h^{-1}(R1) - alpha) / (1 - alpha))`.
pub fn gamma<T: Scalar>(r1_cap: T, alpha: T) -> Result<T> {
    check_unit("R1", r1_cap)?;
    let p = inv_h(r1_cap);
    if alpha < T::zero() || alpha > p + T::domain_slack() {
        return Err(Error::Domain {
            name: "alpha",
            value: alpha.to_f64_lossy(),
            range: "[0, h^-1(R1)]",
        });
    }
    Ok(h(gamma_ratio(p, alpha)))
}

#[inline]
fn gamma_ratio<T: Scalar>(p: T, alpha: T) -> T {
    ((p - alpha) / (T::one() - alpha)).max(T::zero())
}

/// Objective of the outer minimization for a fixed `alpha`, with `p = h^{-1}(R1)`.
fn theorem1_objective<T: Scalar>(p: T, alpha: T) -> (T, T) {
    let ratio = gamma_ratio(p, alpha);
    let g = h(ratio);
    // h^{-1}(Gamma) is the ratio itself since it lies in [0, 1/2]
    let inner = r_sigma_at(alpha / (T::one() - alpha), ratio);
    ((T::one() - alpha) * (inner.value - g), inner.arg)
}

/// Outer bound on `R2` for a zero-error pair with first rate `r1`:
/// `min_{0 <= alpha <= h^{-1}(R1)} (1 - alpha) (R_Sigma(alpha / (1 - alpha), Gamma) - Gamma)`.
///
/// Admissible pairs satisfy `R2` strictly below the returned value.
pub fn theorem1_bound<T: Scalar>(r1: T) -> Result<BoundResult<T>> {
    check_unit("r1", r1)?;
    if r1 <= T::zero() {
        return Err(Error::Domain {
            name: "r1",
            value: 0.0,
            range: "(0, 1]",
        });
    }
    let p = inv_h(r1);
    let best = optimize::minimize(
        |alpha| theorem1_objective(p, alpha).0,
        T::zero(),
        p,
        OUTER_GRID,
        outer_xtol(),
    );
    let (value, eta) = theorem1_objective(p, best.arg);
    Ok(BoundResult::new(value, Some(best.arg), eta))
}

/// Sum capacity with a common message of rate `r0`:
/// `max_{0 <= eta <= 1/2} min{h(eta) + 1 - eta, 2h((1 - sqrt(1 - 2 eta)) / 2) - eta + r0}`.
pub fn sumsw_bound<T: Scalar>(r0: T) -> Result<BoundResult<T>> {
    check_nonnegative("r0", r0)?;
    let objective = |eta: T| big_l_unchecked(eta).min(j_upper(eta) + r0);
    let best = optimize::maximize(objective, T::zero(), T::lit(0.5), INNER_GRID, inner_xtol());
    Ok(BoundResult::new(best.value, None, best.arg))
}

/// `P_U P_{X1|U} P_{X2|U}` with binary inputs and `|U| <= 3`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution<T> {
    p_u: Vec<T>,
    p_x1_given_u: Vec<T>,
    p_x2_given_u: Vec<T>,
}

impl<T: Scalar> JointDistribution<T> {
    /// `p_x1_given_u[u]` is `P(X1 = 1 | U = u)`, likewise for `X2`.
    pub fn new(p_u: Vec<T>, p_x1_given_u: Vec<T>, p_x2_given_u: Vec<T>) -> Result<Self> {
        let n = p_u.len();
        if n == 0 || n > MAX_U_SUPPORT {
            return Err(Error::InvalidDistribution(format!(
                "support of U must be 1..={MAX_U_SUPPORT}, got {n}"
            )));
        }
        if p_x1_given_u.len() != n || p_x2_given_u.len() != n {
            return Err(Error::InvalidDistribution(
                "conditional parameter vectors must match the support of U".into(),
            ));
        }
        let in_unit = |x: &T| *x >= T::zero() && *x <= T::one();
        if !p_u.iter().chain(&p_x1_given_u).chain(&p_x2_given_u).all(in_unit) {
            return Err(Error::InvalidDistribution("entries must lie in [0, 1]".into()));
        }
        let total = p_u.iter().fold(T::zero(), |a, &b| a + b);
        let tol = T::lit(1e-12).max(T::epsilon() * T::lit(8.0));
        if (total - T::one()).abs() > tol {
            return Err(Error::InvalidDistribution(format!(
                "P_U sums to {total}, not 1"
            )));
        }
        Ok(Self {
            p_u,
            p_x1_given_u,
            p_x2_given_u,
        })
    }

    /// `X1 = U xor Z1`, `X2 = U xor Z2` with `U ~ Bern(1/2)` and `Z1, Z2 ~ Bern(p)` independent.
    pub fn common_bit_with_flips(p: T) -> Result<Self> {
        check_unit("p", p)?;
        let half = T::lit(0.5);
        let q = T::one() - p;
        Self::new(vec![half, half], vec![p, q], vec![p, q])
    }

    pub fn support(&self) -> usize {
        self.p_u.len()
    }

    pub fn p_u(&self) -> &[T] {
        &self.p_u
    }

    pub fn p_x1_given_u(&self) -> &[T] {
        &self.p_x1_given_u
    }

    pub fn p_x2_given_u(&self) -> &[T] {
        &self.p_x2_given_u
    }

    /// Law of `Y = X1 + X2` given `U = u`, over `{0, 1, 2}`.
    fn output_law(&self, u: usize) -> [T; 3] {
        let a = self.p_x1_given_u[u];
        let b = self.p_x2_given_u[u];
        let (na, nb) = (T::one() - a, T::one() - b);
        [na * nb, a * nb + na * b, a * b]
    }
}

/// Entropies bounding the rate region with a common message.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwPoint<T> {
    pub h_x1_given_u: T,
    pub h_x2_given_u: T,
    pub h_y_given_u: T,
    pub h_y: T,
}

/// `H(X1|U)`, `H(X2|U)`, `H(X1+X2|U)` and `H(X1+X2)` for a joint distribution.
pub fn sw_point<T: Scalar>(dist: &JointDistribution<T>) -> SwPoint<T> {
    let mut point = SwPoint {
        h_x1_given_u: T::zero(),
        h_x2_given_u: T::zero(),
        h_y_given_u: T::zero(),
        h_y: T::zero(),
    };
    let mut y_law = [T::zero(); 3];
    for (u, &pu) in dist.p_u.iter().enumerate() {
        let law = dist.output_law(u);
        point.h_x1_given_u = point.h_x1_given_u + pu * h(dist.p_x1_given_u[u]);
        point.h_x2_given_u = point.h_x2_given_u + pu * h(dist.p_x2_given_u[u]);
        point.h_y_given_u = point.h_y_given_u + pu * entropy(&law);
        for (acc, l) in y_law.iter_mut().zip(law) {
            *acc = *acc + pu * l;
        }
    }
    point.h_y = entropy(&y_law);
    point
}

/// How the sum-capacity with a common message is attained by the
/// [`JointDistribution::common_bit_with_flips`] family.
#[derive(Debug, Clone, PartialEq)]
pub struct SumswAchievability<T> {
    pub r0: T,
    pub bound: BoundResult<T>,
    /// `p* = (1 - sqrt(1 - 2 eta*)) / 2`, so that `p* * p* = eta*`.
    pub p_star: T,
    pub distribution: JointDistribution<T>,
    pub point: SwPoint<T>,
    /// `2h(p*) - eta*`, the second min-term without `r0`.
    pub second_term: T,
    /// `min{r0 + H(Y|U), H(Y)}`.
    pub achieved: T,
}

pub fn sumsw_achievability<T: Scalar>(r0: T) -> Result<SumswAchievability<T>> {
    let bound = sumsw_bound(r0)?;
    let eta = bound.eta();
    let p_star = T::lit(0.5) * (T::one() - (T::one() - eta - eta).max(T::zero()).sqrt());
    let distribution = JointDistribution::common_bit_with_flips(p_star)?;
    let point = sw_point(&distribution);
    Ok(SumswAchievability {
        r0,
        bound,
        p_star,
        second_term: j_upper(eta),
        achieved: (r0 + point.h_y_given_u).min(point.h_y),
        distribution,
        point,
    })
}

/// Settings for [`validate_lemma_sw_with`].
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaSwConfig<T> {
    pub trials: usize,
    pub r0_grid: Vec<T>,
    pub seed: u64,
    /// Support of `U` is drawn uniformly from `1..=max_support`.
    pub max_support: usize,
    /// Allowed excess of the achievable sum over `R_Sigma`.
    pub tolerance: T,
}

impl<T: Scalar> LemmaSwConfig<T> {
    pub fn new(trials: usize, r0_grid: Vec<T>, seed: u64) -> Self {
        Self {
            trials,
            r0_grid,
            seed,
            max_support: MAX_U_SUPPORT,
            tolerance: T::lit(1e-6),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LemmaSwViolation<T> {
    pub trial: usize,
    pub distribution: JointDistribution<T>,
    pub r0: T,
    pub r1: T,
    pub sum: T,
    pub bound: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LemmaSwReport<T> {
    pub trials: usize,
    pub checks: usize,
    /// Largest `sum - R_Sigma(r0, r1)` seen; nonpositive when every check holds.
    /// Exact whenever it exceeds `-CERTIFICATE_MARGIN`.
    pub max_slack: T,
    /// Checks that needed the full `R_Sigma` optimization.
    pub full_evaluations: usize,
    pub violations: Vec<LemmaSwViolation<T>>,
}

/// Coarse-grid certificates leaving at least this much room skip the full optimization.
pub const CERTIFICATE_MARGIN: f64 = 1e-2;
const CERTIFICATE_GRID: usize = 256;

fn random_distribution<T: Scalar>(rng: &mut ChaCha8Rng, max_support: usize) -> JointDistribution<T> {
    let size = rng.random_range(1..=max_support);
    let weights: Vec<f64> = (0..size).map(|_| rng.sample(Exp1)).collect();
    let total: f64 = weights.iter().sum();
    let mut p_u: Vec<T> = weights.iter().map(|w| T::lit(w / total)).collect();
    // put the rounding residue on the last atom so P_U sums to one in T
    let head = p_u[..size - 1].iter().fold(T::zero(), |a, &b| a + b);
    p_u[size - 1] = (T::one() - head).max(T::zero());
    let a = (0..size).map(|_| T::lit(rng.random::<f64>())).collect();
    let b = (0..size).map(|_| T::lit(rng.random::<f64>())).collect();
    JointDistribution::new(p_u, a, b).expect("sampled distribution is valid")
}

/// Samples random distributions and checks `r0 + r1 + r2 <= R_Sigma(r0, r1)` for the
/// corner `r1 = H(X1|U)`, `r2 = min{H(X2|U), H(Y|U) - r1}` of the rate region,
/// capped at `H(Y)`.
///
/// `P_U` is Dirichlet(1) and the Bernoulli parameters are uniform.
pub fn validate_lemma_sw<T: Scalar>(trials: usize, r0_grid: &[T], seed: u64) -> Result<LemmaSwReport<T>> {
    validate_lemma_sw_with(&LemmaSwConfig::new(trials, r0_grid.to_vec(), seed))
}

pub fn validate_lemma_sw_with<T: Scalar>(config: &LemmaSwConfig<T>) -> Result<LemmaSwReport<T>> {
    if config.trials == 0 {
        return Err(Error::InvalidParams("trials must be at least 1".into()));
    }
    if config.max_support == 0 || config.max_support > MAX_U_SUPPORT {
        return Err(Error::InvalidParams(format!(
            "max_support must be in 1..={MAX_U_SUPPORT}"
        )));
    }
    for &r0 in &config.r0_grid {
        check_nonnegative("r0", r0)?;
    }
    let margin = T::lit(CERTIFICATE_MARGIN);
    let half = T::lit(0.5);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = LemmaSwReport {
        trials: config.trials,
        checks: 0,
        max_slack: T::neg_infinity(),
        full_evaluations: 0,
        violations: Vec::new(),
    };
    for trial in 0..config.trials {
        let dist = random_distribution::<T>(&mut rng, config.max_support);
        let point = sw_point(&dist);
        let r1 = point.h_x1_given_u.min(T::one());
        let r2 = point
            .h_x2_given_u
            .min(point.h_y_given_u - r1)
            .max(T::zero());
        let p = inv_h(r1);
        let q = star_unchecked(p, p);
        for &r0 in &config.r0_grid {
            report.checks += 1;
            let sum = (r0 + r1 + r2).min(point.h_y);
            // any feasible eta lower-bounds the max in R_Sigma
            let objective = |eta: T| big_l_unchecked(eta).min(j_unchecked(q, eta) + r0);
            let coarse = (0..=CERTIFICATE_GRID)
                .map(|i| {
                    let eta = p + (half - p) * T::from_usize_lossy(i)
                        / T::from_usize_lossy(CERTIFICATE_GRID);
                    objective(eta)
                })
                .fold(T::neg_infinity(), T::max);
            let slack = if coarse - sum >= margin {
                sum - coarse
            } else {
                report.full_evaluations += 1;
                let bound = r_sigma_at(r0, p).value;
                if sum > bound + config.tolerance {
                    report.violations.push(LemmaSwViolation {
                        trial,
                        distribution: dist.clone(),
                        r0,
                        r1,
                        sum,
                        bound,
                    });
                }
                sum - bound
            };
            report.max_slack = report.max_slack.max(slack);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LOG2_3: f64 = 1.584_962_500_721_156_3;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn big_l_examples() {
        assert_eq!(big_l(0.5f64).unwrap(), 1.5);
        assert_eq!(big_l(0.0f64).unwrap(), 1.0);
        assert!(close(big_l(1.0f64 / 3.0).unwrap(), LOG2_3, 1e-12));
        assert!(big_l(0.6f64).is_err());
    }

    #[test]
    fn big_j_examples() {
        assert_eq!(big_j(0.0f64, 0.5).unwrap(), 1.5);
        // 40-digit evaluation of the lower branch at p = eta = 0.1
        assert!(close(big_j(0.1f64, 0.1).unwrap(), 0.477_793_914_231_912_3, 1e-12));
        for i in 0..50 {
            let p = i as f64 / 100.0;
            let q = star_unchecked(p, p);
            let upper = j_upper(q);
            let s = 1.0 - 2.0 * q;
            let t = 1.0 - q - q;
            let lower = 2.0 * h(0.5 * (1.0 - t / s.sqrt())) - 0.5 * (1.0 - t * t / s);
            assert!(close(upper, lower, 1e-12), "p={p}");
        }
    }

    #[test]
    fn big_j_singularity_only_for_direct_calls() {
        // p = 1/2 makes p*p = 1/2; eta below that divides by zero
        assert_eq!(big_j(0.5f64, 0.25), Err(Error::Singularity));
        assert_eq!(big_j(0.5f64, 0.5).unwrap(), 1.5);
        assert!(big_j(0.1f64, 0.0).is_err());
    }

    #[test]
    fn r_sigma_examples() {
        let r = r_sigma(0.0f64, 1.0).unwrap();
        assert!(close(r.value(), 1.5, 1e-12));
        assert_eq!(r.eta(), 0.5);
        let r = r_sigma(0.0f64, 0.0).unwrap();
        assert!(close(r.value(), 1.5, 1e-6));
        let r = r_sigma(1.0f64, 0.0).unwrap();
        assert!(close(r.value(), LOG2_3, 1e-9));
        assert!(close(r.eta(), 1.0 / 3.0, 1e-5));
        assert!(r_sigma(-0.1f64, 0.5).is_err());
        assert!(r_sigma(0.1f64, 1.5).is_err());
    }

    #[test]
    fn r_sigma_matches_dense_grid() {
        for &(r0, r1) in &[(0.1f64, 0.3f64), (0.25, 0.9), (0.05, 0.6), (0.6, 0.2)] {
            let p = inv_h(r1);
            let q = star_unchecked(p, p);
            let brute = (0..=400_000)
                .map(|i| p + (0.5 - p) * i as f64 / 400_000.0)
                .map(|eta| big_l_unchecked(eta).min(j_unchecked(q, eta) + r0))
                .fold(f64::MIN, f64::max);
            let got = r_sigma(r0, r1).unwrap().value();
            assert!(got >= brute - 1e-12 && got - brute < 1e-6, "{r0} {r1}: {got} vs {brute}");
        }
    }

    #[test]
    fn gamma_examples() {
        for &r in &[0.2f64, 0.5, 0.9, 1.0] {
            assert!(close(gamma(r, 0.0).unwrap(), r, 1e-10));
            assert_eq!(gamma(r, inv_h(r)).unwrap(), 0.0);
        }
        assert!(close(gamma(1.0f64, 0.25).unwrap(), 0.918_295_834_054_489_5, 1e-12));
        assert!(gamma(0.5f64, 0.2).is_err());
    }

    #[test]
    fn sumsw_examples() {
        assert!(close(sumsw_bound(0.0f64).unwrap().value(), 1.5, 1e-9));
        assert!(close(sumsw_bound(1.0f64).unwrap().value(), LOG2_3, 1e-9));
        for i in 0..=20 {
            let r0 = i as f64 / 10.0;
            let a = sumsw_bound(r0).unwrap().value();
            let b = r_sigma(r0, 0.0).unwrap().value();
            assert!(close(a, b, 1e-9));
        }
    }

    #[test]
    fn sumsw_monotone_and_saturating() {
        let mut prev = 0.0;
        for i in 0..=40 {
            let v = sumsw_bound(i as f64 * 0.05).unwrap().value();
            assert!(v >= prev - 1e-12);
            assert!(v <= LOG2_3 + 1e-12);
            prev = v;
        }
        assert!(close(prev, LOG2_3, 1e-12));
    }

    #[test]
    fn j_below_upper_branch() {
        for i in 0..=50 {
            let r1 = i as f64 / 50.0;
            let p = inv_h(r1);
            let q = star_unchecked(p, p);
            for k in 0..=200 {
                let eta = p + (0.5 - p) * k as f64 / 200.0;
                assert!(j_unchecked(q, eta) <= j_upper(eta) + 1e-12);
            }
        }
    }

    #[test]
    fn theorem1_corner_value() {
        let r = theorem1_bound(1.0f64).unwrap();
        assert!(r.value() > 0.4789 && r.value() < 0.4799, "{}", r.value());
        let alpha = r.alpha().unwrap();
        assert!(alpha > 0.1 && alpha < 0.15);
        assert!(theorem1_bound(0.0f64).is_err());
    }

    #[test]
    fn theorem1_f32_agrees() {
        let a = theorem1_bound(1.0f32).unwrap().value() as f64;
        let b = theorem1_bound(1.0f64).unwrap().value();
        assert!(close(a, b, 1e-4));
    }

    #[test]
    fn sw_point_examples() {
        let d = JointDistribution::new(vec![1.0f64], vec![0.5], vec![0.5]).unwrap();
        let pt = sw_point(&d);
        assert_eq!(
            (pt.h_x1_given_u, pt.h_x2_given_u, pt.h_y_given_u, pt.h_y),
            (1.0, 1.0, 1.5, 1.5)
        );
        let d = JointDistribution::new(vec![0.5f64, 0.5], vec![0.0, 1.0], vec![0.0, 1.0]).unwrap();
        let pt = sw_point(&d);
        assert_eq!(
            (pt.h_x1_given_u, pt.h_x2_given_u, pt.h_y_given_u, pt.h_y),
            (0.0, 0.0, 0.0, 1.0)
        );
    }

    #[test]
    fn distribution_validation() {
        assert!(JointDistribution::new(Vec::<f64>::new(), vec![], vec![]).is_err());
        assert!(JointDistribution::new(vec![0.25f64; 4], vec![0.5; 4], vec![0.5; 4]).is_err());
        assert!(JointDistribution::new(vec![0.5f64, 0.4], vec![0.5; 2], vec![0.5; 2]).is_err());
        assert!(JointDistribution::new(vec![1.0f64], vec![1.2], vec![0.5]).is_err());
        assert!(JointDistribution::new(vec![1.0f64], vec![0.5, 0.5], vec![0.5]).is_err());
    }

    #[test]
    fn achievability_matches_second_term() {
        for &r0 in &[0.0f64, 0.05, 0.2, 0.5] {
            let a = sumsw_achievability(r0).unwrap();
            assert!(close(a.point.h_y_given_u, a.second_term, 1e-9));
            assert!(close(a.point.h_y, big_l_unchecked(a.bound.eta()), 1e-9));
        }
    }

    #[test]
    fn random_points_are_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let d = random_distribution::<f64>(&mut rng, 3);
            let pt = sw_point(&d);
            assert!(pt.h_y_given_u <= pt.h_y + 1e-9);
            for v in [pt.h_x1_given_u, pt.h_x2_given_u, pt.h_y_given_u, pt.h_y] {
                assert!((0.0..=LOG2_3 + 1e-12).contains(&v));
            }
        }
    }

    #[test]
    fn lemma_sw_small_run() {
        let report = validate_lemma_sw(300, &[0.0f64, 0.1, 0.5], 3).unwrap();
        assert_eq!(report.checks, 900);
        assert!(report.violations.is_empty(), "{:?}", report.violations.first());
        assert!(report.max_slack <= 1e-6);
        assert!(validate_lemma_sw(0, &[0.0f64], 3).is_err());
    }

    #[test]
    fn lemma_sw_degenerate_u() {
        let mut cfg = LemmaSwConfig::new(500, vec![0.0f64, 0.1, 0.5], 5);
        cfg.max_support = 1;
        let report = validate_lemma_sw_with(&cfg).unwrap();
        assert!(report.violations.is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let d = random_distribution::<f64>(&mut rng, 1);
            assert!(sw_point(&d).h_y <= 1.5 + 1e-12);
        }
        for &r0 in &cfg.r0_grid {
            for i in 0..=20 {
                assert!(r_sigma(r0, i as f64 / 20.0).unwrap().value() >= 1.5 - 1e-9);
            }
        }
    }

    #[test]
    fn lemma_sw_deterministic() {
        let a = validate_lemma_sw(50, &[0.2f64], 9).unwrap();
        let b = validate_lemma_sw(50, &[0.2f64], 9).unwrap();
        assert_eq!(a, b);
    }
}
