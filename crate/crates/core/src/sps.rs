//! Families of subsets of `[n]`, the shifting compression to a monotone family,
//! and Sauer-Perles-Shelah type cardinality bounds (classic and `k`-shattered).

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::codebook::{self, Codebook, CoordSet, Shattered, Word, MAX_LEN};
use crate::error::{Error, Result};
use crate::numerics::{binomial, check_unit, h, inv_h};
use crate::scalar::Scalar;

/// A duplicate-free family of subsets of `[n]`.
///
/// Member `F` is the indicator word with a 1 at every coordinate in `F`, so a
/// family and a codebook are two views of the same data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetFamily {
    n: usize,
    members: BTreeSet<u64>,
}

impl SubsetFamily {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            members: BTreeSet::new(),
        }
    }

    /// Builds a family from 1-based element lists; repeated sets are an error.
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::InvalidParams(format!("n = {n} exceeds {MAX_LEN}")));
        }
        let mut members = BTreeSet::new();
        for set in sets {
            let s = CoordSet::within(set, n)?;
            if !members.insert(s.mask(n)) {
                return Err(Error::InvalidParams(format!("duplicate member {s}")));
            }
        }
        Ok(Self { n, members })
    }

    pub fn from_codebook(c: &Codebook) -> Self {
        Self {
            n: c.n(),
            members: c.iter().map(Word::bits).collect(),
        }
    }

    #[cfg(test)]
    pub(crate) fn from_raw(n: usize, members: impl IntoIterator<Item = u64>) -> Self {
        Self {
            n,
            members: members.into_iter().collect(),
        }
    }

    /// Indicator codebook; `None` for the empty family.
    pub fn to_codebook(&self) -> Option<Codebook> {
        if self.members.is_empty() {
            None
        } else {
            Some(Codebook::from_sorted_raw(self.n, self.members.iter().copied()))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &CoordSet) -> bool {
        s.check(self.n).is_ok() && self.members.contains(&s.mask(self.n))
    }

    /// Members as coordinate sets, in lexicographic order of their indicator words.
    pub fn sets(&self) -> impl Iterator<Item = CoordSet> + '_ {
        self.members.iter().map(|&m| CoordSet::from_mask(self.n, m))
    }

    pub(crate) fn raw(&self) -> Vec<u64> {
        self.members.iter().copied().collect()
    }

    pub fn is_k_shattered(&self, s: &CoordSet, k: usize) -> Result<bool> {
        if k == 0 {
            return Err(Error::InvalidParams("k must be at least 1".into()));
        }
        s.check(self.n)?;
        Ok(codebook::k_shattered_raw(&self.raw(), s.mask(self.n), k))
    }

    /// See [`codebook::max_k_shattered`]; also defined for the empty family.
    pub fn max_k_shattered(&self, k: usize) -> Result<Shattered> {
        match self.to_codebook() {
            Some(c) => codebook::max_k_shattered(&c, k),
            None if k == 0 => Err(Error::InvalidParams("k must be at least 1".into())),
            None => Ok(Shattered {
                size: 0,
                witness: CoordSet::empty(),
            }),
        }
    }
}

/// Downward closed: every subset of a member is a member.
pub fn is_monotone(f: &SubsetFamily) -> bool {
    // removing one element at a time reaches every subset
    f.members.iter().all(|&m| {
        let mut rest = m;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            rest ^= b;
            if !f.members.contains(&(m ^ b)) {
                return false;
            }
        }
        true
    })
}

/// Shifts `f` down to a monotone family of the same size.
///
/// For each element `i` in turn (`1..=n`, repeated until a full pass changes
/// nothing) every member `G` with `i ∈ G` and `G \ {i} ∉ f` is replaced by
/// `G \ {i}`. Each step removes elements, so the loop terminates, and a set that is
/// `k`-shattered by the result is `k`-shattered by `f`.
pub fn shift_to_monotone(f: &SubsetFamily) -> SubsetFamily {
    let mut members = f.members.clone();
    loop {
        let mut changed = false;
        for i in 1..=f.n {
            let bit = 1u64 << (f.n - i);
            let moved: Vec<u64> = members
                .iter()
                .copied()
                .filter(|&m| m & bit != 0 && !members.contains(&(m ^ bit)))
                .collect();
            if moved.is_empty() {
                continue;
            }
            changed = true;
            for m in moved {
                members.remove(&m);
                members.insert(m ^ bit);
            }
        }
        if !changed {
            break;
        }
    }
    SubsetFamily { n: f.n, members }
}

/// Parameters `(n, d, k)` of the soft bound, with `1 <= d <= n` and `k >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SoftSpsParams {
    n: usize,
    d: usize,
    k: usize,
}

impl SoftSpsParams {
    pub fn new(n: usize, d: usize, k: usize) -> Result<Self> {
        if d == 0 || d > n {
            return Err(Error::InvalidParams(format!("need 1 <= d <= n, got d = {d}, n = {n}")));
        }
        if k == 0 {
            return Err(Error::InvalidParams("k must be at least 1".into()));
        }
        Ok(Self { n, d, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SoftSpsResult {
    pub t_star: usize,
    pub bound: BigRational,
}

impl SoftSpsResult {
    pub fn floor(&self) -> BigInt {
        self.bound.floor().to_integer()
    }

    /// `size <= bound`, compared exactly.
    pub fn admits(&self, size: usize) -> bool {
        BigRational::from_integer(BigInt::from(size)) <= self.bound
    }
}

/// Smallest `t` in `[d, n]` with `C(n-d, t-d) >= k`, or `n` when there is none.
pub fn t_star(p: &SoftSpsParams) -> usize {
    let k = BigUint::from(p.k);
    (p.d..=p.n)
        .find(|&t| binomial((p.n - p.d) as u64, (t - p.d) as i64) >= k)
        .unwrap_or(p.n)
}

/// `sum_{t=1}^{t*} C(n,t) + C(n,t*) sum_{t=t*+1}^{n} C(t*,d) / C(t,d)`, exactly.
///
/// Bounds the size of a family whose largest `k`-shattered set has size `d - 1`.
/// The first sum starts at `t = 1`, so the empty set is not counted.
pub fn soft_sps_bound(p: &SoftSpsParams) -> SoftSpsResult {
    let ts = t_star(p);
    let (n, d) = (p.n as u64, p.d as i64);
    let int = |x: BigUint| BigRational::from_integer(BigInt::from(x));
    let mut bound = BigRational::zero();
    for t in 1..=ts as i64 {
        bound += int(binomial(n, t));
    }
    let top = int(binomial(ts as u64, d));
    let mut tail = BigRational::zero();
    for t in ts + 1..=p.n {
        tail += &top / int(binomial(t as u64, d));
    }
    bound += int(binomial(n, ts as i64)) * tail;
    SoftSpsResult { t_star: ts, bound }
}

/// `sum_{t=0}^{d} C(n,t)`, the classic bound for VC dimension `d`.
pub fn classic_sps_bound(n: usize, d: usize) -> Result<BigUint> {
    if d > n {
        return Err(Error::InvalidParams(format!("need d <= n, got d = {d}, n = {n}")));
    }
    Ok((0..=d as i64).fold(BigUint::zero(), |acc, t| acc + binomial(n as u64, t)))
}

/// `beta = (1 - alpha) h((h^{-1}(R) - alpha) / (1 - alpha))`: the exponent of the
/// multiplicity with which a codebook of rate `R` shatters some set of size `alpha n`.
pub fn corollary_beta<T: Scalar>(r: T, alpha: T) -> Result<T> {
    check_unit("R", r)?;
    let p = inv_h(r);
    if alpha < T::zero() || alpha > p + T::domain_slack() {
        return Err(Error::Domain {
            name: "alpha",
            value: alpha.to_f64_lossy(),
            range: "[0, h^-1(R)]",
        });
    }
    let one_minus = T::one() - alpha;
    Ok(one_minus * h(((p - alpha) / one_minus).max(T::zero())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::gamma;
    use num_traits::{One, ToPrimitive};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fam(n: usize, sets: &[&[usize]]) -> SubsetFamily {
        SubsetFamily::new(n, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    fn random_family(rng: &mut ChaCha8Rng, n: usize) -> SubsetFamily {
        let density = rng.random_range(0.05..0.9);
        SubsetFamily::from_raw(n, (0..(1u64 << n)).filter(|_| rng.random_bool(density)))
    }

    #[test]
    fn monotone_examples() {
        let all: Vec<Vec<usize>> = (0u64..8)
            .map(|m| (1..=3).filter(|&i| m >> (i - 1) & 1 == 1).collect())
            .collect();
        assert!(is_monotone(&SubsetFamily::new(4, all).unwrap()));
        assert!(!is_monotone(&fam(2, &[&[], &[1], &[1, 2]])));
        assert!(is_monotone(&SubsetFamily::empty(5)));
        assert!(!is_monotone(&fam(2, &[&[1]])));
    }

    #[test]
    fn shifting_examples() {
        let mono = fam(3, &[&[], &[1], &[2], &[1, 2]]);
        assert_eq!(shift_to_monotone(&mono), mono);
        assert_eq!(shift_to_monotone(&fam(1, &[&[1]])), fam(1, &[&[]]));
        let g = shift_to_monotone(&fam(3, &[&[1, 2, 3], &[2]]));
        assert_eq!(g, fam(3, &[&[], &[3]]));
        assert!(SubsetFamily::new(2, vec![vec![1], vec![1]]).is_err());
    }

    #[test]
    fn shifting_properties_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..150 {
            let n = rng.random_range(1..=7);
            let f = random_family(&mut rng, n);
            let g = shift_to_monotone(&f);
            assert_eq!(g.len(), f.len());
            assert!(is_monotone(&g));
            for mask in 0u64..(1 << n) {
                let s = CoordSet::from_mask(n, mask);
                for k in 1..=3 {
                    if g.is_k_shattered(&s, k).unwrap() {
                        assert!(f.is_k_shattered(&s, k).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn t_star_examples() {
        for (n, d) in [(5, 2), (10, 3), (8, 8)] {
            assert_eq!(t_star(&SoftSpsParams::new(n, d, 1).unwrap()), d);
        }
        assert_eq!(t_star(&SoftSpsParams::new(10, 3, 8).unwrap()), 5);
        assert_eq!(t_star(&SoftSpsParams::new(4, 2, 3).unwrap()), 4);
        assert!(SoftSpsParams::new(4, 0, 1).is_err());
        assert!(SoftSpsParams::new(4, 5, 1).is_err());
        assert!(SoftSpsParams::new(4, 2, 0).is_err());
    }

    #[test]
    fn t_star_nondecreasing_in_k() {
        for n in 1..=14 {
            for d in 1..=n {
                let mut prev = 0;
                for k in 1..=80 {
                    let t = t_star(&SoftSpsParams::new(n, d, k).unwrap());
                    assert!(t >= prev && (d..=n).contains(&t));
                    prev = t;
                }
            }
        }
    }

    #[test]
    fn soft_bound_examples() {
        let r = soft_sps_bound(&SoftSpsParams::new(5, 2, 1).unwrap());
        assert_eq!(r.t_star, 2);
        assert_eq!(r.bound, BigRational::from_integer(21.into()));
        assert_eq!(r.floor(), BigInt::from(21));
        assert!(r.admits(21) && !r.admits(22));

        // k above the largest C(n-d, .) forces t* = n and an empty tail
        for (n, d) in [(6usize, 2usize), (9, 4), (10, 1)] {
            let m = n - d;
            let kmax = binomial(m as u64, (m / 2) as i64).to_usize().unwrap();
            let r = soft_sps_bound(&SoftSpsParams::new(n, d, kmax + 1).unwrap());
            assert_eq!(r.t_star, n);
            assert_eq!(r.bound, BigRational::from_integer(BigInt::from((1u64 << n) - 1)));
        }
    }

    #[test]
    fn soft_bound_k1_versus_classic() {
        for n in 1..=20 {
            for d in 1..=n {
                let soft = soft_sps_bound(&SoftSpsParams::new(n, d, 1).unwrap());
                assert_eq!(soft.t_star, d);
                let classic = classic_sps_bound(n, d).unwrap();
                let classic = BigRational::from_integer(BigInt::from(classic));
                assert!(soft.bound >= &classic - BigRational::one());
                // gap stays within a factor n/d + 1 at this scale
                let factor = BigRational::new(BigInt::from(n + d), BigInt::from(d));
                assert!(soft.bound <= classic * factor, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn classic_examples() {
        assert_eq!(classic_sps_bound(5, 2).unwrap(), BigUint::from(16u32));
        for n in 0..=20 {
            assert_eq!(classic_sps_bound(n, n).unwrap(), BigUint::from(1u64 << n));
        }
        for n in 1..=14 {
            for d in 0..=n.min(4) {
                let ball = Codebook::hamming_ball(n, d).unwrap();
                assert_eq!(BigUint::from(ball.len()), classic_sps_bound(n, d).unwrap());
            }
        }
        assert!(classic_sps_bound(2, 3).is_err());
    }

    #[test]
    fn beta_examples() {
        for &r in &[0.1f64, 0.5, 0.8, 1.0] {
            assert!((corollary_beta(r, 0.0).unwrap() - r).abs() < 1e-10);
            assert_eq!(corollary_beta(r, inv_h(r)).unwrap(), 0.0);
            for i in 0..=10 {
                let alpha = inv_h(r) * i as f64 / 10.0;
                let beta = corollary_beta(r, alpha).unwrap();
                let via_gamma = (1.0 - alpha) * gamma(r, alpha).unwrap();
                assert!((beta - via_gamma).abs() < 1e-12);
            }
        }
        assert!(corollary_beta(0.5f64, 0.3).is_err());
    }

    #[test]
    fn family_codebook_views_agree() {
        let c = Codebook::from_strs(&["000", "011", "110"]).unwrap();
        let f = SubsetFamily::from_codebook(&c);
        assert_eq!(f.to_codebook().unwrap(), c);
        assert!(f.contains(&CoordSet::new(vec![2, 3]).unwrap()));
        assert!(!f.contains(&CoordSet::new(vec![1]).unwrap()));
        let sets: Vec<String> = f.sets().map(|s| s.to_string()).collect();
        assert_eq!(sets, ["{}", "{2,3}", "{1,2}"]);
        assert_eq!(SubsetFamily::empty(3).max_k_shattered(2).unwrap().size, 0);
    }
}
