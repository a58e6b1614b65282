//! End-to-end procedures on codebook pairs: Weldon-type bounds, partitioning by a
//! projection, building a zero-error system with a common message out of a
//! zero-error pair, and exhaustive search for the best pairs at small `n`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::codebook::{
    is_zero_error_pair, is_zero_error_system, low_mask, Codebook, CoordSet, SystemVerdict,
    Word, ZeroErrorSystem, SHATTER_BUDGET,
};
use crate::error::{Error, Result};
use crate::numerics::{check_unit, inv_h};
use crate::scalar::Scalar;

fn log2_3<T: Scalar>() -> T {
    T::lit(3.0).log2()
}

/// `(1 - R1) log 3`: the largest `R2` when `C1` is systematic.
pub fn weldon_bound<T: Scalar>(r1: T) -> Result<T> {
    check_unit("r1", r1)?;
    Ok((T::one() - r1) * log2_3())
}

/// `(1 - h^{-1}(R1)) log 3`, valid for any zero-error pair (and never below the
/// Shannon sum-rate line).
pub fn proposition1_bound<T: Scalar>(r1: T) -> Result<T> {
    check_unit("r1", r1)?;
    Ok((T::one() - inv_h(r1)) * log2_3())
}

/// `C` split by the value of `c(S)`; every pattern in `{0,1}^|S|` has a bucket.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionByProjection {
    pub s: CoordSet,
    pub buckets: BTreeMap<Word, Vec<Word>>,
}

impl PartitionByProjection {
    pub fn bucket(&self, pattern: &Word) -> &[Word] {
        self.buckets.get(pattern).map(Vec::as_slice).unwrap_or(&[])
    }
}

pub fn partition_by_projection(c: &Codebook, s: &CoordSet) -> Result<PartitionByProjection> {
    s.check(c.n())?;
    if s.len() > SHATTER_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "2^{} projection buckets",
            s.len()
        )));
    }
    let mut buckets: BTreeMap<Word, Vec<Word>> = (0..1u64 << s.len())
        .map(|g| (Word::new(s.len(), g).expect("pattern fits"), Vec::new()))
        .collect();
    for w in c.iter() {
        buckets
            .get_mut(&w.project(s)?)
            .expect("all patterns present")
            .push(*w);
    }
    Ok(PartitionByProjection {
        s: s.clone(),
        buckets,
    })
}

/// Rates `(r0, r1, r2)` of a system over `m` coordinates: `log2 M_l / m`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RateTriple {
    pub r0: f64,
    pub r1: f64,
    pub r2: f64,
}

impl RateTriple {
    pub fn sum(&self) -> f64 {
        self.r0 + self.r1 + self.r2
    }
}

/// Output of [`build_system`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstructionReport {
    pub n: usize,
    pub s: CoordSet,
    /// Uniform first-side size: the smallest first-side bucket.
    pub k: usize,
    /// Second-side size class: kept buckets have `2^k_prime_log` words.
    pub k_prime_log: u32,
    /// Patterns `g` whose second-side bucket falls in the chosen class.
    pub g_set: Vec<Word>,
    /// Pairs `(C1~_{complement g}, C2~_g)` restricted to the complement of `S`.
    pub system: ZeroErrorSystem,
    /// Second-side words captured by the chosen class.
    pub mass: usize,
    /// `|C2|`.
    pub c2_len: usize,
    pub verdict: SystemVerdict,
}

impl ConstructionReport {
    /// Coordinates left after removing `S`.
    pub fn m(&self) -> usize {
        self.n - self.s.len()
    }

    /// `|C2| / (2 (n R2 + 1))` with `n R2 = log2 |C2|`.
    pub fn mass_floor(&self) -> f64 {
        let c2 = self.c2_len as f64;
        c2 / (2.0 * (c2.log2() + 1.0))
    }

    pub fn mass_bound_holds(&self) -> bool {
        self.mass as f64 >= self.mass_floor()
    }

    /// `None` when `S = [n]` leaves no coordinates.
    pub fn rates(&self) -> Option<RateTriple> {
        let m = self.m();
        if m == 0 {
            return None;
        }
        let m = m as f64;
        Some(RateTriple {
            r0: (self.system.m0() as f64).log2() / m,
            r1: (self.system.m1() as f64).log2() / m,
            r2: (self.system.m2() as f64).log2() / m,
        })
    }
}

/// Turns a zero-error pair into a zero-error system on the coordinates outside `S`.
///
/// Both codebooks are partitioned by their projection on `S`. Each first-side bucket
/// is cut to its `k` smallest words (`k` = smallest bucket), each nonempty
/// second-side bucket to its `2^floor(log2 size)` smallest words, and the size class
/// `2^k'` holding the most words is kept (ties go to the smaller `k'`). Pairing the
/// first-side bucket of the complement pattern with the second-side bucket of each
/// kept pattern makes every pair S-complementary, so dropping `S` keeps the
/// system zero-error.
pub fn build_system(c1: &Codebook, c2: &Codebook, s: &CoordSet) -> Result<ConstructionReport> {
    if !is_zero_error_pair(c1, c2)?.is_zero_error() {
        return Err(Error::Precondition("codebooks are not a zero-error pair".into()));
    }
    let first = partition_by_projection(c1, s)?;
    let second = partition_by_projection(c2, s)?;
    let k = first.buckets.values().map(Vec::len).min().unwrap_or(0);
    if k == 0 {
        return Err(Error::Precondition(format!(
            "S = {s} is not shattered by the first codebook"
        )));
    }

    let mut classes: BTreeMap<u32, Vec<Word>> = BTreeMap::new();
    for (g, bucket) in &second.buckets {
        if !bucket.is_empty() {
            classes.entry(bucket.len().ilog2()).or_default().push(*g);
        }
    }
    // (mass, class); BTreeMap iteration is ascending so `>` keeps the smaller class on ties
    let mut chosen: Option<(usize, u32)> = None;
    for (&class, patterns) in &classes {
        let mass = patterns.len() << class;
        if chosen.is_none_or(|(best, _)| mass > best) {
            chosen = Some((mass, class));
        }
    }
    let (mass, k_prime_log) = chosen.expect("second codebook is nonempty");
    let g_set = classes.remove(&k_prime_log).unwrap_or_default();

    let rest = s.complement(c1.n())?;
    let restrict = |words: &[Word]| -> Result<Codebook> {
        let projected = words.iter().map(|w| w.project(&rest)).collect::<Result<Vec<_>>>()?;
        Codebook::new(rest.len(), projected)
    };
    let mut pairs = Vec::with_capacity(g_set.len());
    for g in &g_set {
        let left = &first.bucket(&g.complement())[..k];
        let right = &second.bucket(g)[..1usize << k_prime_log];
        pairs.push((restrict(left)?, restrict(right)?));
    }
    let system = ZeroErrorSystem::new(pairs)?;
    let verdict = is_zero_error_system(&system);
    Ok(ConstructionReport {
        n: c1.n(),
        s: s.clone(),
        k,
        k_prime_log,
        g_set,
        system,
        mass,
        c2_len: c2.len(),
        verdict,
    })
}

/// Largest dimension for the full exhaustive search.
pub const FULL_SEARCH_MAX_N: usize = 4;
/// Largest dimension accepted by the pruned search.
pub const PRUNED_SEARCH_MAX_N: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchOptions {
    /// Collapse witnesses that differ by a permutation of coordinates.
    pub canonical: bool,
    /// Node limit for the pruned search (`n > FULL_SEARCH_MAX_N`).
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            canonical: false,
            node_budget: 50_000_000,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchResult {
    pub n: usize,
    pub best_product: usize,
    /// Maximizing pairs, oriented so that `C1` is the smaller side (ties:
    /// lexicographically smaller), in sorted order.
    pub witnesses: Vec<(Codebook, Codebook)>,
    /// False when the pruned search fixed `0...0 ∈ C1` (see [`exhaustive_max_pair_with`]).
    pub complete: bool,
}

/// `b ~ b'` when `b - b'` is a difference of two words of `C1`; the independent
/// sets are exactly the codebooks `C2` forming a zero-error pair with `C1`.
struct ConflictGraph {
    adj: Vec<u64>,
}

impl ConflictGraph {
    fn new(n: usize, c1: &[u64]) -> Self {
        let size = 1usize << n;
        let mut diffs = HashSet::new();
        for &a in c1 {
            for &b in c1 {
                if a != b {
                    diffs.insert((a & !b, b & !a));
                }
            }
        }
        let mut adj = vec![0u64; size];
        for x in 0..size as u64 {
            for y in x + 1..size as u64 {
                if diffs.contains(&(x & !y, y & !x)) {
                    adj[x as usize] |= 1 << y;
                    adj[y as usize] |= 1 << x;
                }
            }
        }
        Self { adj }
    }

    fn max_independent(&self, cand: u64) -> usize {
        let mut best = 0;
        self.mis_rec(cand, 0, &mut best);
        best
    }

    fn mis_rec(&self, cand: u64, taken: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(taken);
            return;
        }
        if taken + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let nbrs = self.adj[v] & cand;
        self.mis_rec(cand & !bit & !nbrs, taken + 1, best);
        if nbrs != 0 {
            self.mis_rec(cand & !bit, taken, best);
        }
    }

    /// Every independent set of exactly `size` vertices, each as a vertex mask.
    fn independent_sets(&self, cand: u64, size: usize, chosen: u64, out: &mut Vec<u64>) {
        let have = chosen.count_ones() as usize;
        if have == size {
            out.push(chosen);
            return;
        }
        if have + (cand.count_ones() as usize) < size {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        self.independent_sets(cand & !bit & !self.adj[v], size, chosen | bit, out);
        self.independent_sets(cand & !bit, size, chosen, out);
    }
}

fn mask_words(mask: u64) -> Vec<u64> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn orient(n: usize, a: &[u64], b: &[u64]) -> (Codebook, Codebook) {
    let x = Codebook::from_sorted_raw(n, a.iter().copied());
    let y = Codebook::from_sorted_raw(n, b.iter().copied());
    if (x.len(), x.words()) <= (y.len(), y.words()) {
        (x, y)
    } else {
        (y, x)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Smallest oriented image of a pair under coordinate permutations.
fn canonical_form(n: usize, perms: &[Vec<usize>], pair: &(Codebook, Codebook)) -> (Codebook, Codebook) {
    let apply = |c: &Codebook, p: &[usize]| -> Vec<u64> {
        let mut v: Vec<u64> = c
            .iter()
            .map(|w| {
                // bit position j of the image takes bit p[j] of the word
                p.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &src)| acc | (((w.bits() >> src) & 1) << j))
            })
            .collect();
        v.sort_unstable();
        v
    };
    perms
        .iter()
        .map(|p| orient(n, &apply(&pair.0, p), &apply(&pair.1, p)))
        .min()
        .expect("at least one permutation")
}

fn finish(n: usize, best: usize, mut witnesses: Vec<(Codebook, Codebook)>, complete: bool, canonical: bool) -> SearchResult {
    if canonical {
        let perms = permutations(n);
        witnesses = witnesses
            .iter()
            .map(|w| canonical_form(n, &perms, w))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
    } else {
        witnesses.sort();
        witnesses.dedup();
    }
    SearchResult {
        n,
        best_product: best,
        witnesses,
        complete,
    }
}

/// Maximum of `|C1| |C2|` over zero-error pairs in `{0,1}^n`, with every maximizing
/// pair. See [`exhaustive_max_pair_with`].
pub fn exhaustive_max_pair(n: usize) -> Result<SearchResult> {
    exhaustive_max_pair_with(n, SearchOptions::default())
}

/// For `n <= 4` every `C1` is tried and the best `C2` is a maximum independent set
/// of the conflict graph of `C1`, which is exact and lists all maximizers.
///
/// For `n` in `5..=6` the search branches on `C1` with `0...0 ∈ C1` and `C1` the
/// smaller side (flipping a coordinate in both codebooks preserves zero-error),
/// pruning with the independence number of the current conflict graph. The best
/// product is exact; witnesses are those of that normal form. Exceeding
/// `node_budget` is an error.
pub fn exhaustive_max_pair_with(n: usize, options: SearchOptions) -> Result<SearchResult> {
    if n == 0 || n > PRUNED_SEARCH_MAX_N {
        return Err(Error::BudgetExceeded(format!(
            "search supports 1 <= n <= {PRUNED_SEARCH_MAX_N}, got {n}"
        )));
    }
    if n <= FULL_SEARCH_MAX_N {
        return Ok(full_search(n, options.canonical));
    }
    pruned_search(n, options)
}

fn full_search(n: usize, canonical: bool) -> SearchResult {
    let size = 1usize << n;
    let all = low_mask(size);
    let mut independence = vec![0usize; 1 << size];
    let mut best = 0;
    for c1 in 1..=all {
        let graph = ConflictGraph::new(n, &mask_words(c1));
        let m = graph.max_independent(all);
        independence[c1 as usize] = m;
        best = best.max(c1.count_ones() as usize * m);
    }
    let mut witnesses = Vec::new();
    for c1 in 1..=all {
        let s1 = c1.count_ones() as usize;
        let m = independence[c1 as usize];
        if s1 * m != best {
            continue;
        }
        let graph = ConflictGraph::new(n, &mask_words(c1));
        let mut sets = Vec::new();
        graph.independent_sets(all, m, 0, &mut sets);
        for c2 in sets {
            witnesses.push(orient(n, &mask_words(c1), &mask_words(c2)));
        }
    }
    finish(n, best, witnesses, true, canonical)
}

struct Pruned {
    n: usize,
    size: usize,
    nodes: u64,
    budget: u64,
    best: usize,
    witnesses: Vec<(Codebook, Codebook)>,
}

impl Pruned {
    fn visit(&mut self, c1: &mut Vec<u64>, next: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "pruned search for n = {} exceeded {} nodes",
                self.n, self.budget
            )));
        }
        let all = low_mask(self.size);
        let graph = ConflictGraph::new(self.n, c1);
        let m = graph.max_independent(all);
        let s = c1.len();
        if s <= m {
            let product = s * m;
            if product > self.best {
                self.best = product;
                self.witnesses.clear();
            }
            if product == self.best {
                let mut sets = Vec::new();
                graph.independent_sets(all, m, 0, &mut sets);
                for c2 in sets {
                    self.witnesses.push(orient(self.n, c1, &mask_words(c2)));
                }
            }
        }
        // C1 can grow to at most min(m, s + remaining) words and C2 keeps at most m
        let remaining = self.size as u64 - next;
        let reach = m.min(s + remaining as usize);
        if reach * m < self.best || s >= m {
            return Ok(());
        }
        for w in next..self.size as u64 {
            c1.push(w);
            self.visit(c1, w + 1)?;
            c1.pop();
        }
        Ok(())
    }
}

fn pruned_search(n: usize, options: SearchOptions) -> Result<SearchResult> {
    let mut state = Pruned {
        n,
        size: 1 << n,
        nodes: 0,
        budget: options.node_budget,
        best: 0,
        witnesses: Vec::new(),
    };
    state.visit(&mut vec![0], 1)?;
    Ok(finish(n, state.best, state.witnesses, false, options.canonical))
}

/// Every ordered zero-error pair `(C1, C2)` of nonempty codebooks in `{0,1}^n`, `n <= 3`.
pub fn zero_error_pairs(n: usize) -> Result<Vec<(Codebook, Codebook)>> {
    if n == 0 || n > 3 {
        return Err(Error::BudgetExceeded(format!(
            "pair enumeration supports 1 <= n <= 3, got {n}"
        )));
    }
    let size = 1usize << n;
    let all = low_mask(size);
    let mut out = Vec::new();
    for c1 in 1..=all {
        let words = mask_words(c1);
        let graph = ConflictGraph::new(n, &words);
        let left = Codebook::from_sorted_raw(n, words.iter().copied());
        for k in 1..=size {
            let mut sets = Vec::new();
            graph.independent_sets(all, k, 0, &mut sets);
            for c2 in sets {
                out.push((left.clone(), Codebook::from_sorted_raw(n, mask_words(c2))));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::{self, is_k_shattered};

    fn cb(items: &[&str]) -> Codebook {
        Codebook::from_strs(items).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn weldon_examples() {
        assert_eq!(weldon_bound(1.0f64).unwrap(), 0.0);
        assert!((weldon_bound(0.5f64).unwrap() - 0.792_481_250_360_578).abs() < 1e-12);
        // R2 = 1 needs (1 - R1) log 3 >= 1
        let r1_max = 1.0 - 1.0 / 3f64.log2();
        assert!((r1_max - 0.369).abs() < 1e-3);
        assert!(weldon_bound(r1_max).unwrap() >= 1.0 - 1e-12);
        assert!(weldon_bound(0.38f64).unwrap() < 1.0);
    }

    #[test]
    fn proposition1_examples() {
        assert!((proposition1_bound(1.0f64).unwrap() - 0.5 * 3f64.log2()).abs() < 1e-12);
        assert!((proposition1_bound(0.0f64).unwrap() - 3f64.log2()).abs() < 1e-12);
        for i in 1..=1000 {
            let r1 = i as f64 / 1000.0;
            assert!(r1 + proposition1_bound(r1).unwrap() > 1.5);
        }
    }

    #[test]
    fn partition_examples() {
        let c = cb(&["00", "11"]);
        let p = partition_by_projection(&c, &CoordSet::empty()).unwrap();
        assert_eq!(p.buckets.len(), 1);
        assert_eq!(p.buckets.values().next().unwrap(), c.words());

        let cube = Codebook::cube(3).unwrap();
        let p = partition_by_projection(&cube, &CoordSet::full(3)).unwrap();
        assert_eq!(p.buckets.len(), 8);
        assert!(p.buckets.values().all(|b| b.len() == 1));

        let p = partition_by_projection(&c, &CoordSet::new(vec![1]).unwrap()).unwrap();
        assert_eq!(p.bucket(&w("0")), &[w("00")]);
        assert_eq!(p.bucket(&w("1")), &[w("11")]);

        let p = partition_by_projection(&cb(&["000", "001"]), &CoordSet::new(vec![3]).unwrap()).unwrap();
        assert_eq!(p.buckets.len(), 2);
        assert!(partition_by_projection(&c, &CoordSet::new(vec![4]).unwrap()).is_err());
    }

    #[test]
    fn construction_hand_trace() {
        let c1 = cb(&["00", "11"]);
        let c2 = cb(&["00", "01", "10"]);
        let r = build_system(&c1, &c2, &CoordSet::new(vec![1]).unwrap()).unwrap();
        assert_eq!(r.k, 1);
        assert_eq!(r.k_prime_log, 1);
        assert_eq!(r.g_set, vec![w("0")]);
        assert_eq!(r.mass, 2);
        assert_eq!(r.system.m0(), 1);
        let (a, b) = &r.system.pairs()[0];
        assert_eq!(a, &cb(&["1"]));
        assert_eq!(b, &cb(&["0", "1"]));
        assert!(r.verdict.is_zero_error());
        assert!(r.mass_bound_holds());
        let rates = r.rates().unwrap();
        assert_eq!((rates.r0, rates.r1, rates.r2), (0.0, 0.0, 1.0));
    }

    #[test]
    fn construction_empty_s() {
        let c1 = cb(&["00", "11"]);
        let c2 = cb(&["00", "01", "10"]);
        let r = build_system(&c1, &c2, &CoordSet::empty()).unwrap();
        assert_eq!((r.k, r.k_prime_log, r.system.m0()), (2, 1, 1));
        assert_eq!(r.system.pairs()[0], (c1.clone(), cb(&["00", "01"])));
        assert!(r.verdict.is_zero_error());
    }

    #[test]
    fn construction_preconditions() {
        let c = cb(&["0", "1"]);
        assert!(matches!(
            build_system(&c, &c, &CoordSet::empty()),
            Err(Error::Precondition(_))
        ));
        let c1 = cb(&["00", "01"]);
        let c2 = cb(&["00"]);
        assert!(matches!(
            build_system(&c1, &c2, &CoordSet::new(vec![1]).unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn search_small() {
        let r = exhaustive_max_pair(1).unwrap();
        assert_eq!(r.best_product, 2);
        assert_eq!(r.witnesses.len(), 2);
        assert_eq!(r.witnesses[0], (cb(&["0"]), cb(&["0", "1"])));

        let r = exhaustive_max_pair(2).unwrap();
        assert_eq!(r.best_product, 6);
        assert!(r.best_product <= 9);
        assert!(r.witnesses.contains(&(cb(&["00", "11"]), cb(&["00", "01", "10"]))));
        // brute force over all 15 x 15 ordered pairs finds 8 maximizers, 4 up to swap
        assert_eq!(r.witnesses.len(), 4);
        for (a, b) in &r.witnesses {
            assert!(is_zero_error_pair(a, b).unwrap().is_zero_error());
            assert_eq!(a.len() * b.len(), 6);
        }
        assert!(exhaustive_max_pair(0).is_err());
        assert!(exhaustive_max_pair(7).is_err());
    }

    #[test]
    fn search_three_matches_brute_force() {
        // 14 with 16 ordered maximizers from a direct sumset check of all 255^2 pairs
        let r = exhaustive_max_pair(3).unwrap();
        assert_eq!(r.best_product, 14);
        assert_eq!(r.witnesses.len(), 8);
        let canon = exhaustive_max_pair_with(3, SearchOptions { canonical: true, ..Default::default() }).unwrap();
        assert_eq!(canon.best_product, 14);
        assert!(canon.witnesses.len() <= r.witnesses.len());
        assert!(!canon.witnesses.is_empty());
    }

    #[test]
    fn concatenation_lower_bounds_search() {
        let b1 = exhaustive_max_pair(1).unwrap().best_product;
        let b2 = exhaustive_max_pair(2).unwrap().best_product;
        assert!(b2 >= b1 * b1);
        let b4 = exhaustive_max_pair(4).unwrap().best_product;
        assert!(b4 >= b2 * b2);
    }

    #[test]
    fn pruned_search_budget() {
        let opts = SearchOptions { canonical: false, node_budget: 10 };
        assert!(matches!(
            exhaustive_max_pair_with(5, opts),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn enumeration_agrees_with_sumset_check() {
        for n in 1..=2 {
            let pairs = zero_error_pairs(n).unwrap();
            let all: Vec<Codebook> = (1u64..(1 << (1 << n)))
                .map(|m| Codebook::from_sorted_raw(n, mask_words(m)))
                .collect();
            let mut count = 0;
            for a in &all {
                for b in &all {
                    let raw_a: Vec<u64> = a.iter().map(Word::bits).collect();
                    let raw_b: Vec<u64> = b.iter().map(Word::bits).collect();
                    let fast = codebook::zero_error_raw(&raw_a, &raw_b);
                    assert_eq!(fast, is_zero_error_pair(a, b).unwrap().is_zero_error());
                    count += usize::from(fast);
                }
            }
            assert_eq!(pairs.len(), count);
        }
    }

    #[test]
    fn systems_from_all_small_pairs() {
        for (c1, c2) in zero_error_pairs(2).unwrap() {
            for mask in 0u64..4 {
                let s = CoordSet::from_mask(2, mask);
                if !is_k_shattered(&c1, &s, 1).unwrap() {
                    continue;
                }
                let r = build_system(&c1, &c2, &s).unwrap();
                assert!(r.verdict.is_zero_error());
                assert_eq!(r.system.m1(), r.k);
                assert_eq!(r.system.m2(), 1 << r.k_prime_log);
                assert_eq!(r.system.m0(), r.g_set.len());
                assert!(r.mass_bound_holds());
            }
        }
    }
}
