//! Binary codebooks over `{0,1}^n`, their sumsets over the reals, projections and
//! shattering.
//!
//! A [`Word`] packs coordinate `i` (1-based) into bit `n - i`, so integer order on
//! words of one length is the lexicographic order of their `0`/`1` strings.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest supported codeword.
pub const MAX_LEN: usize = 64;
/// Largest `n` accepted by the exhaustive shattering searches.
pub const SHATTER_BUDGET: usize = 24;

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Gathers the bits of `word` selected by `mask`, most significant first.
#[inline]
pub(crate) fn extract(word: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let top = 63 - m.leading_zeros();
        out = (out << 1) | ((word >> top) & 1);
        m &= !(1u64 << top);
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub fn new(len: usize, bits: u64) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::InvalidCodebook(format!(
                "word length {len} exceeds {MAX_LEN}"
            )));
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::InvalidCodebook(format!(
                "bits {bits:#x} do not fit in length {len}"
            )));
        }
        Ok(Self {
            len: len as u8,
            bits,
        })
    }

    pub(crate) fn from_raw(len: usize, bits: u64) -> Self {
        debug_assert!(len <= MAX_LEN && bits & !low_mask(len) == 0);
        Self {
            len: len as u8,
            bits,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Value at 1-based coordinate `i`.
    pub fn coord(&self, i: usize) -> u8 {
        assert!(i >= 1 && i <= self.len(), "coordinate {i} out of range");
        ((self.bits >> (self.len() - i)) & 1) as u8
    }

    /// Bitwise complement within the word length.
    pub fn complement(&self) -> Self {
        Self::from_raw(self.len(), !self.bits & low_mask(self.len()))
    }

    /// The restriction `c(S)`.
    pub fn project(&self, s: &CoordSet) -> Result<Self> {
        s.check(self.len())?;
        Ok(Self::from_raw(s.len(), extract(self.bits, s.mask(self.len()))))
    }

    pub fn concat(&self, other: &Word) -> Result<Self> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::InvalidCodebook(format!(
                "concatenated length {len} exceeds {MAX_LEN}"
            )));
        }
        let head = if other.len() == 64 { 0 } else { self.bits << other.len() };
        Ok(Self::from_raw(len, head | other.bits))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.coord(i) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_LEN {
            return Err(Error::InvalidCodebook(format!(
                "word length {} exceeds {MAX_LEN}",
                s.len()
            )));
        }
        let mut bits = 0u64;
        for ch in s.chars() {
            bits = (bits << 1)
                | match ch {
                    '0' => 0,
                    '1' => 1,
                    _ => {
                        return Err(Error::InvalidCodebook(format!(
                            "invalid character {ch:?} in {s:?}"
                        )))
                    }
                };
        }
        Ok(Self::from_raw(s.len(), bits))
    }
}

/// A set of 1-based coordinates, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CoordSet {
    indices: Vec<usize>,
}

impl CoordSet {
    /// Builds a set from 1-based indices; order and repeats are normalized away.
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0) {
            return Err(Error::InvalidIndex { index: bad, n: 0 });
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(Self { indices })
    }

    /// Same as [`CoordSet::new`] but also checks every index against `n`.
    pub fn within(indices: Vec<usize>, n: usize) -> Result<Self> {
        let s = Self::new(indices)?;
        s.check(n)?;
        Ok(s)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full(n: usize) -> Self {
        Self {
            indices: (1..=n).collect(),
        }
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        Self {
            indices: (1..=n).filter(|&i| (mask >> (n - i)) & 1 == 1).collect(),
        }
    }

    /// Word-space mask: coordinate `i` maps to bit `n - i`.
    pub(crate) fn mask(&self, n: usize) -> u64 {
        self.indices.iter().fold(0u64, |m, &i| m | (1u64 << (n - i)))
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        match self.indices.last() {
            Some(&i) if i > n => Err(Error::InvalidIndex { index: i, n }),
            _ => Ok(()),
        }
    }

    /// `[n] \ S`.
    pub fn complement(&self, n: usize) -> Result<Self> {
        self.check(n)?;
        Ok(Self {
            indices: (1..=n).filter(|i| self.indices.binary_search(i).is_err()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoordSet{self}")
    }
}

/// A nonempty, duplicate-free set of words of one length, stored in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Codebook {
    n: usize,
    words: Vec<Word>,
}

impl Codebook {
    pub fn new(n: usize, mut words: Vec<Word>) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::InvalidCodebook(format!(
                "length {n} exceeds {MAX_LEN}"
            )));
        }
        if words.is_empty() {
            return Err(Error::InvalidCodebook("empty codebook".into()));
        }
        if let Some(w) = words.iter().find(|w| w.len() != n) {
            return Err(Error::LengthMismatch {
                left: n,
                right: w.len(),
            });
        }
        words.sort_unstable();
        if let Some(pair) = words.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::InvalidCodebook(format!(
                "duplicate codeword {}",
                pair[0]
            )));
        }
        Ok(Self { n, words })
    }

    /// Builds a codebook from `0`/`1` strings.
    pub fn from_strs<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let words = items
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<Word>>>()?;
        let n = words.first().map(Word::len).unwrap_or(0);
        Self::new(n, words)
    }

    pub(crate) fn from_sorted_raw(n: usize, raw: impl IntoIterator<Item = u64>) -> Self {
        let words: Vec<Word> = raw.into_iter().map(|b| Word::from_raw(n, b)).collect();
        debug_assert!(!words.is_empty() && words.windows(2).all(|p| p[0] < p[1]));
        Self { n, words }
    }

    /// The full cube `{0,1}^n`.
    pub fn cube(n: usize) -> Result<Self> {
        if n >= 32 {
            return Err(Error::BudgetExceeded(format!("cube of dimension {n}")));
        }
        Ok(Self::from_sorted_raw(n, 0..(1u64 << n)))
    }

    /// All words of weight at most `radius`.
    pub fn hamming_ball(n: usize, radius: usize) -> Result<Self> {
        if n > 32 {
            return Err(Error::BudgetExceeded(format!("Hamming ball in dimension {n}")));
        }
        Ok(Self::from_sorted_raw(
            n,
            (0..(1u64 << n)).filter(|w| w.count_ones() as usize <= radius),
        ))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Always false: codebooks are nonempty.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub(crate) fn raw(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().map(|w| w.bits)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// `log2 |C| / n`.
    pub fn rate(&self) -> f64 {
        (self.len() as f64).log2() / self.n as f64
    }

    /// `C x D`: all concatenations `c d`.
    pub fn concat(&self, other: &Codebook) -> Result<Self> {
        let mut words = Vec::with_capacity(self.len() * other.len());
        for a in &self.words {
            for b in &other.words {
                words.push(a.concat(b)?);
            }
        }
        Ok(Self {
            n: self.n + other.n,
            words,
        })
    }
}

/// A vector in `{0,1,2}^n`, stored as the positions holding 2 and holding 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SumVector {
    len: u8,
    twos: u64,
    ones: u64,
}

impl SumVector {
    /// The real sum `a + b`.
    pub fn of(a: &Word, b: &Word) -> Self {
        debug_assert_eq!(a.len, b.len);
        Self {
            len: a.len,
            twos: a.bits & b.bits,
            ones: a.bits ^ b.bits,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Digit at 1-based coordinate `i`.
    pub fn digit(&self, i: usize) -> u8 {
        let shift = self.len() - i;
        (2 * ((self.twos >> shift) & 1) + ((self.ones >> shift) & 1)) as u8
    }

    pub fn digits(&self) -> Vec<u8> {
        (1..=self.len()).map(|i| self.digit(i)).collect()
    }
}

impl Ord for SumVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            let diff = (self.twos ^ other.twos) | (self.ones ^ other.ones);
            if diff == 0 {
                return Ordering::Equal;
            }
            let top = 63 - diff.leading_zeros();
            let digit = |v: &Self| 2 * ((v.twos >> top) & 1) + ((v.ones >> top) & 1);
            digit(self).cmp(&digit(other))
        })
    }
}

impl PartialOrd for SumVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SumVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.digits() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SumVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SumVector({self})")
    }
}

/// `C1 + C2` with multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumsetMultiset {
    n: usize,
    counts: BTreeMap<SumVector, u64>,
}

impl SumsetMultiset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<SumVector, u64> {
        &self.counts
    }

    pub fn multiplicity(&self, v: &SumVector) -> u64 {
        self.counts.get(v).copied().unwrap_or(0)
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// Sum of multiplicities, `|C1| |C2|`.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

fn same_length(c1: &Codebook, c2: &Codebook) -> Result<()> {
    if c1.n != c2.n {
        return Err(Error::LengthMismatch {
            left: c1.n,
            right: c2.n,
        });
    }
    Ok(())
}

pub fn sumset(c1: &Codebook, c2: &Codebook) -> Result<SumsetMultiset> {
    same_length(c1, c2)?;
    let mut counts = BTreeMap::new();
    for a in &c1.words {
        for b in &c2.words {
            *counts.entry(SumVector::of(a, b)).or_insert(0) += 1;
        }
    }
    Ok(SumsetMultiset { n: c1.n, counts })
}

/// Two distinct pairs with the same sum `a + b = a' + b'`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Collision {
    pub first: (Word, Word),
    pub second: (Word, Word),
    pub sum: SumVector,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {} = {} + {} = {}",
            self.first.0, self.first.1, self.second.0, self.second.1, self.sum
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairVerdict {
    ZeroError,
    Collision(Collision),
}

impl PairVerdict {
    pub fn is_zero_error(&self) -> bool {
        matches!(self, PairVerdict::ZeroError)
    }

    pub fn witness(&self) -> Option<&Collision> {
        match self {
            PairVerdict::ZeroError => None,
            PairVerdict::Collision(c) => Some(c),
        }
    }
}

/// Checks that every element of `C1 + C2` has multiplicity one.
///
/// Pairs are scanned in lexicographic order of `(a, b)`; the witness is the first
/// pair whose sum repeats, together with the earliest pair that produced it.
pub fn is_zero_error_pair(c1: &Codebook, c2: &Codebook) -> Result<PairVerdict> {
    same_length(c1, c2)?;
    let mut seen: HashMap<SumVector, (Word, Word)> = HashMap::with_capacity(c1.len() * c2.len());
    for a in &c1.words {
        for b in &c2.words {
            let sum = SumVector::of(a, b);
            if let Some(&first) = seen.get(&sum) {
                return Ok(PairVerdict::Collision(Collision {
                    first,
                    second: (*a, *b),
                    sum,
                }));
            }
            seen.insert(sum, (*a, *b));
        }
    }
    Ok(PairVerdict::ZeroError)
}

/// Zero-error test on raw words via `(C1 - C1) ∩ (C2 - C2) = {0}`.
#[cfg(test)]
pub(crate) fn zero_error_raw(c1: &[u64], c2: &[u64]) -> bool {
    let mut sums = HashSet::with_capacity(c1.len() * c2.len());
    c1.iter()
        .all(|&a| c2.iter().all(|&b| sums.insert((a & b, a ^ b))))
}

/// `P_S^+(C)`: the restrictions `c(S)` with multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectionMultiset {
    len: usize,
    counts: BTreeMap<Word, usize>,
}

impl ProjectionMultiset {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn counts(&self) -> &BTreeMap<Word, usize> {
        &self.counts
    }

    pub fn multiplicity(&self, pattern: &Word) -> usize {
        self.counts.get(pattern).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

pub fn project(c: &Codebook, s: &CoordSet) -> Result<ProjectionMultiset> {
    s.check(c.n)?;
    let mask = s.mask(c.n);
    let mut counts = BTreeMap::new();
    for w in c.raw() {
        *counts
            .entry(Word::from_raw(s.len(), extract(w, mask)))
            .or_insert(0) += 1;
    }
    Ok(ProjectionMultiset {
        len: s.len(),
        counts,
    })
}

/// True when every pattern on `mask` occurs at least `k` times among `words`.
pub(crate) fn k_shattered_raw(words: &[u64], mask: u64, k: usize) -> bool {
    let width = mask.count_ones() as usize;
    if width >= 32 {
        return false;
    }
    let patterns = 1usize << width;
    if patterns.saturating_mul(k) > words.len() {
        return false;
    }
    let mut counts = vec![0usize; patterns];
    for &w in words {
        counts[extract(w, mask) as usize] += 1;
    }
    counts.iter().all(|&c| c >= k)
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    Ok(())
}

/// True when `P_S^+(C)` holds each of the `2^|S|` patterns at least `k` times.
pub fn is_k_shattered(c: &Codebook, s: &CoordSet, k: usize) -> Result<bool> {
    check_k(k)?;
    s.check(c.n)?;
    let words: Vec<u64> = c.raw().collect();
    Ok(k_shattered_raw(&words, s.mask(c.n), k))
}

/// Every `k`-shattered set, level by level (level `t` holds the sets of size `t`),
/// up to `max_level`. Level 0 is `{∅}` when `|words| >= k` and empty otherwise.
///
/// `k`-shattered sets are closed under taking subsets, so a candidate of size
/// `t + 1` is only tested when all of its `t`-subsets were `k`-shattered.
pub(crate) fn shattered_levels(words: &[u64], n: usize, k: usize, max_level: usize) -> Vec<Vec<u64>> {
    let mut levels: Vec<Vec<u64>> = Vec::new();
    if words.len() < k {
        levels.push(Vec::new());
        return levels;
    }
    levels.push(vec![0]);
    for t in 0..max_level.min(n) {
        if (1usize << (t + 1)).saturating_mul(k) > words.len() {
            break;
        }
        let current = &levels[t];
        let lookup: HashSet<u64> = current.iter().copied().collect();
        let mut next = Vec::new();
        for &s in current {
            // extend only by coordinates after every member of s (lower word bits)
            let lowest = if s == 0 { n as u32 } else { s.trailing_zeros() };
            for bit in 0..lowest {
                let cand = s | (1u64 << bit);
                let mut rest = s;
                let closed = loop {
                    if rest == 0 {
                        break true;
                    }
                    let b = rest & rest.wrapping_neg();
                    rest ^= b;
                    if !lookup.contains(&(cand ^ b)) {
                        break false;
                    }
                };
                if closed && k_shattered_raw(words, cand, k) {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

fn smallest_witness(n: usize, masks: &[u64]) -> CoordSet {
    masks
        .iter()
        .map(|&m| CoordSet::from_mask(n, m))
        .min()
        .unwrap_or_default()
}

/// Size of a largest `k`-shattered set and its lexicographically smallest witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Shattered {
    pub size: usize,
    pub witness: CoordSet,
}

/// Largest `k`-shattered coordinate set (`k = 1` gives the VC dimension).
///
/// Exhaustive; `n` is limited to [`SHATTER_BUDGET`]. When `|C| < k` not even the
/// empty set is `k`-shattered and the result is still size 0.
pub fn max_k_shattered(c: &Codebook, k: usize) -> Result<Shattered> {
    check_k(k)?;
    if c.n > SHATTER_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive shattering search needs n <= {SHATTER_BUDGET}, got {}",
            c.n
        )));
    }
    let words: Vec<u64> = c.raw().collect();
    let levels = shattered_levels(&words, c.n, k, c.n);
    let size = levels.len() - 1;
    Ok(Shattered {
        size,
        witness: smallest_witness(c.n, &levels[size]),
    })
}

/// All `(c1, c2)` with `c1(S) + c2(S)` equal to the all-ones vector, in lexicographic order.
pub fn s_complement_pairs(c1: &Codebook, c2: &Codebook, s: &CoordSet) -> Result<Vec<(Word, Word)>> {
    same_length(c1, c2)?;
    s.check(c1.n)?;
    let mask = s.mask(c1.n);
    let mut out = Vec::new();
    for a in &c1.words {
        for b in &c2.words {
            if (a.bits ^ b.bits) & mask == mask {
                out.push((*a, *b));
            }
        }
    }
    Ok(out)
}

/// Returns a shattered `S` of size `log2 |C|` when one exists.
///
/// For `|C|` not a power of two the size is `ceil(log2 |C|)`, which no set can reach
/// (it needs `2^|S| > |C|` patterns), so such codebooks are never systematic.
pub fn is_systematic(c: &Codebook) -> Option<CoordSet> {
    let target = c.len().next_power_of_two().trailing_zeros() as usize;
    if target > c.n {
        return None;
    }
    let words: Vec<u64> = c.raw().collect();
    let levels = shattered_levels(&words, c.n, 1, target);
    levels.get(target).map(|masks| smallest_witness(c.n, masks))
}

/// Codebook pairs `(C1_i, C2_i)` with `|C1_i| = m1`, `|C2_i| = m2` for every `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroErrorSystem {
    n: usize,
    m1: usize,
    m2: usize,
    pairs: Vec<(Codebook, Codebook)>,
}

impl ZeroErrorSystem {
    pub fn new(pairs: Vec<(Codebook, Codebook)>) -> Result<Self> {
        let Some((c1, c2)) = pairs.first() else {
            return Err(Error::MalformedSystem("no pairs".into()));
        };
        let (n, m1, m2) = (c1.n, c1.len(), c2.len());
        for (i, (a, b)) in pairs.iter().enumerate() {
            if a.n != n || b.n != n {
                return Err(Error::MalformedSystem(format!(
                    "pair {i} has length {}/{} instead of {n}",
                    a.n, b.n
                )));
            }
            if a.len() != m1 || b.len() != m2 {
                return Err(Error::MalformedSystem(format!(
                    "pair {i} has sizes {}/{} instead of {m1}/{m2}",
                    a.len(),
                    b.len()
                )));
            }
        }
        Ok(Self { n, m1, m2, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of pairs (common-message alphabet size).
    pub fn m0(&self) -> usize {
        self.pairs.len()
    }

    pub fn m1(&self) -> usize {
        self.m1
    }

    pub fn m2(&self) -> usize {
        self.m2
    }

    pub fn pairs(&self) -> &[(Codebook, Codebook)] {
        &self.pairs
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SystemVerdict {
    ZeroErrorSystem,
    /// Pair `index` is not zero-error on its own.
    PairCollision { index: usize, collision: Collision },
    /// Sumsets of pairs `first < second` share `sum`.
    CrossCollision {
        first: usize,
        second: usize,
        sum: SumVector,
    },
}

impl SystemVerdict {
    pub fn is_zero_error(&self) -> bool {
        matches!(self, SystemVerdict::ZeroErrorSystem)
    }
}

impl fmt::Display for SystemVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemVerdict::ZeroErrorSystem => write!(f, "ZERO-ERROR-SYSTEM"),
            SystemVerdict::PairCollision { index, collision } => {
                write!(f, "COLLISION in pair {index}: {collision}")
            }
            SystemVerdict::CrossCollision { first, second, sum } => {
                write!(f, "COLLISION between pairs {first} and {second}: sum {sum}")
            }
        }
    }
}

/// Every pair zero-error and the sumsets pairwise disjoint.
///
/// Pairs are scanned by index; the first failure is reported, cross collisions
/// with the smallest sum vector first.
pub fn is_zero_error_system(v: &ZeroErrorSystem) -> SystemVerdict {
    let mut owner: HashMap<SumVector, usize> = HashMap::new();
    for (j, (c1, c2)) in v.pairs.iter().enumerate() {
        if let Ok(PairVerdict::Collision(collision)) = is_zero_error_pair(c1, c2) {
            return SystemVerdict::PairCollision {
                index: j,
                collision,
            };
        }
        let sums = sumset(c1, c2).expect("lengths checked at construction");
        for sum in sums.counts.keys() {
            if let Some(&i) = owner.get(sum) {
                return SystemVerdict::CrossCollision {
                    first: i,
                    second: j,
                    sum: *sum,
                };
            }
        }
        owner.extend(sums.counts.into_keys().map(|s| (s, j)));
    }
    SystemVerdict::ZeroErrorSystem
}
