//! Permutations in one-line notation, pile configurations, and the
//! left-to-right minima/maxima decompositions everything else is built on.
//!
//! Positions and values are 1-based throughout, matching the usual
//! combinatorial convention; slices are indexed natively and converted at
//! the boundary.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A permutation of `{1, .., n}` in one-line notation.
///
/// The empty permutation (`n = 0`) is valid; it is the identity of `S_0`
/// and the base case of every enumeration here.
///
/// ```
/// use patience_core::perm::Permutation;
/// let p: Permutation = "6,4,5,1,8,7,2,3".parse().unwrap();
/// let q: Permutation = "64518723".parse().unwrap();
/// assert_eq!(p, q);
/// assert_eq!(p.n(), 8);
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermutationError {
    /// A token could not be read as a positive integer.
    NumberFormat(String),
    /// The word is not a bijection on {1, .., n}.
    NotPermutation,
}

impl fmt::Display for PermutationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermutationError::NumberFormat(s) => {
                write!(f, "could not interpret {:?} as a value", s)
            }
            PermutationError::NotPermutation => write!(f, "word is not a permutation of 1..n"),
        }
    }
}

impl core::error::Error for PermutationError {}

impl Permutation {
    /// The identity permutation `1 2 .. n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// Builds a permutation from its one-line word, validating that it is a
    /// bijection on `{1, .., n}`.
    pub fn from_word(word: Vec<u32>) -> Result<Self, PermutationError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(PermutationError::NotPermutation);
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn from_slice(word: &[u32]) -> Result<Self, PermutationError> {
        Self::from_word(word.to_vec())
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.word
    }

    /// Value at the 1-based position `pos`.
    pub fn value_at(&self, pos: usize) -> u32 {
        self.word[pos - 1]
    }

    /// Reverses the order of positions.
    pub fn reverse(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    /// Maps every value `v` to `n + 1 - v`.
    pub fn complement(&self) -> Self {
        let n = self.word.len() as u32;
        Permutation {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// The group inverse: swaps (position, value) pairs.
    pub fn inverse(&self) -> Self {
        let mut word = vec![0u32; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    /// Compact digit form, available when `n <= 9`.
    pub fn compact(&self) -> Option<String> {
        if self.word.len() > 9 {
            return None;
        }
        Some(self.word.iter().map(|v| v.to_string()).collect())
    }

    /// Peels left-to-right minima subsequences until the word is exhausted.
    ///
    /// The first subsequence consists of the entries strictly smaller than
    /// everything before them; each later one is the minima subsequence of
    /// what remains. Every subsequence is strictly decreasing, and together
    /// they are exactly the piles of patience sorting.
    pub fn left_to_right_minima_decomposition(&self) -> Vec<PartialPermutation> {
        self.peel(|v, best| v < best)
    }

    /// Same peeling with maxima; every subsequence is strictly increasing.
    pub fn left_to_right_maxima_decomposition(&self) -> Vec<PartialPermutation> {
        self.peel(|v, best| v > best)
    }

    fn peel(&self, better: impl Fn(u32, u32) -> bool) -> Vec<PartialPermutation> {
        let n = self.word.len();
        let mut remaining: Vec<(u32, u32)> = self
            .word
            .iter()
            .enumerate()
            .map(|(i, &v)| (i as u32 + 1, v))
            .collect();
        let mut out = Vec::new();
        while !remaining.is_empty() {
            let mut layer = Vec::new();
            let mut rest = Vec::new();
            let mut record: Option<u32> = None;
            for &(pos, val) in &remaining {
                if record.is_none() || better(val, record.unwrap()) {
                    record = Some(val);
                    layer.push((pos, val));
                } else {
                    rest.push((pos, val));
                }
            }
            out.push(PartialPermutation { n, items: layer });
            remaining = rest;
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Accepts either a comma-separated list (`"6,4,5,1,8,7,2,3"`) or, for
/// `n <= 9`, a compact digit word (`"64518723"`).
impl FromStr for Permutation {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut word = Vec::new();
        if s.is_empty() {
            return Ok(Permutation { word });
        }
        if s.contains(',') {
            for tok in s.split(',') {
                let tok = tok.trim();
                let v: u32 = tok
                    .parse()
                    .map_err(|_| PermutationError::NumberFormat(tok.to_string()))?;
                word.push(v);
            }
        } else {
            for c in s.chars() {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| PermutationError::NumberFormat(c.to_string()))?;
                word.push(d);
            }
        }
        Permutation::from_word(word)
    }
}

/// A subsequence of a permutation on `{1, .., n}`, remembering both the
/// original positions and the values so decompositions can be compared
/// against pile configurations and shadow-diagram coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialPermutation {
    n: usize,
    items: Vec<(u32, u32)>,
}

impl PartialPermutation {
    pub fn new(n: usize, items: Vec<(u32, u32)>) -> Self {
        PartialPermutation { n, items }
    }

    /// Size of the ambient set `{1, .., n}`.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// (position, value) pairs in position order.
    pub fn items(&self) -> &[(u32, u32)] {
        &self.items
    }

    pub fn positions(&self) -> Vec<u32> {
        self.items.iter().map(|&(p, _)| p).collect()
    }

    pub fn values(&self) -> Vec<u32> {
        self.items.iter().map(|&(_, v)| v).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PileError {
    EmptyPile,
    /// Cards in a pile must strictly decrease from bottom to top.
    NotDecreasing,
    /// The piles together must hold exactly the cards 1..n.
    NotPartition,
}

impl fmt::Display for PileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PileError::EmptyPile => write!(f, "pile has no cards"),
            PileError::NotDecreasing => {
                write!(f, "pile cards must strictly decrease from bottom to top")
            }
            PileError::NotPartition => write!(f, "pile cards are not exactly 1..n"),
        }
    }
}

impl core::error::Error for PileError {}

/// One pile of cards, listed bottom to top.
///
/// Each card placed atop a pile is smaller than the card it covers, so the
/// list strictly decreases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pile {
    cards: Vec<u32>,
}

impl Pile {
    pub fn new(cards: Vec<u32>) -> Result<Self, PileError> {
        if cards.is_empty() {
            return Err(PileError::EmptyPile);
        }
        if !cards.windows(2).all(|w| w[0] > w[1]) {
            return Err(PileError::NotDecreasing);
        }
        Ok(Pile { cards })
    }

    /// Cards bottom to top.
    pub fn cards(&self) -> &[u32] {
        &self.cards
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The first card placed; the largest.
    pub fn bottom(&self) -> u32 {
        self.cards[0]
    }

    /// The visible card; the smallest.
    pub fn top(&self) -> u32 {
        *self.cards.last().unwrap()
    }
}

/// An ordered sequence of piles holding the cards `1..n`.
///
/// Structural validity (decreasing piles partitioning `{1, .., n}`) is
/// checked on construction. Being an actual image of patience sorting is a
/// stronger property; see `patience::is_pile_configuration`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PileConfig {
    n: usize,
    piles: Vec<Pile>,
}

impl PileConfig {
    pub fn new(piles: Vec<Vec<u32>>) -> Result<Self, PileError> {
        let piles: Vec<Pile> = piles.into_iter().map(Pile::new).collect::<Result<_, _>>()?;
        let n: usize = piles.iter().map(Pile::len).sum();
        let mut seen = vec![false; n];
        for pile in &piles {
            for &c in pile.cards() {
                if c == 0 || c as usize > n || seen[c as usize - 1] {
                    return Err(PileError::NotPartition);
                }
                seen[c as usize - 1] = true;
            }
        }
        Ok(PileConfig { n, piles })
    }

    pub(crate) fn from_piles_unchecked(piles: Vec<Vec<u32>>) -> Self {
        let piles: Vec<Pile> = piles.into_iter().map(|cards| Pile { cards }).collect();
        let n = piles.iter().map(Pile::len).sum();
        PileConfig { n, piles }
    }

    /// Total number of cards.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn piles(&self) -> &[Pile] {
        &self.piles
    }

    pub fn pile_count(&self) -> usize {
        self.piles.len()
    }

    pub fn max_pile_len(&self) -> usize {
        self.piles.iter().map(Pile::len).max().unwrap_or(0)
    }

    /// Reads the piles bottom to top, left to right.
    ///
    /// ```
    /// use patience_core::perm::PileConfig;
    /// let r = PileConfig::new(vec![vec![6, 4, 1], vec![5, 2], vec![8, 7, 3]]).unwrap();
    /// assert_eq!(r.reverse_patience_word().to_string(), "6,4,1,5,2,8,7,3");
    /// ```
    pub fn reverse_patience_word(&self) -> Permutation {
        let mut word = Vec::with_capacity(self.n);
        for pile in &self.piles {
            word.extend_from_slice(pile.cards());
        }
        Permutation { word }
    }

    /// The composition of `n` given by the pile sizes.
    pub fn shape(&self) -> Shape {
        Shape {
            parts: self.piles.iter().map(Pile::len).collect(),
        }
    }
}

/// A composition of `n`: positive parts in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        if parts.iter().any(|&p| p == 0) {
            return None;
        }
        Some(Shape { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Factorials up to 20! fit in a `u64`.
pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial overflows u64 beyond 20!");
    (2..=n as u64).product()
}

/// Advances `word` to its lexicographic successor in place; returns `false`
/// (leaving the word as the last permutation) when none exists.
pub fn next_permutation(word: &mut [u32]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// The permutation of `{1, .., n}` with the given lexicographic rank
/// (0-based), via the factorial number system.
pub fn permutation_from_rank(n: usize, mut rank: u64) -> Vec<u32> {
    assert!(rank < factorial(n));
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut word = Vec::with_capacity(n);
    for i in 0..n {
        let base = factorial(n - 1 - i);
        let d = (rank / base) as usize;
        rank %= base;
        word.push(pool.remove(d));
    }
    word
}

/// Calls `visit` on every permutation of `{1, .., n}` in lexicographic
/// order. Single-threaded; rank-range sharding for parallel sweeps lives in
/// the companion crate.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut word: Vec<u32> = (1..=n as u32).collect();
    loop {
        visit(&word);
        if !next_permutation(&mut word) {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_both_forms() {
        assert_eq!(p("64518723"), p("6,4,5,1,8,7,2,3"));
        assert_eq!(p("").n(), 0);
        assert!("6,4".parse::<Permutation>().is_err());
        assert!("11".parse::<Permutation>().is_err());
        assert!("1x2".parse::<Permutation>().is_err());
        // comma form is required beyond single digits
        assert_eq!(p("10,2,3,4,5,6,7,8,9,1").n(), 10);
    }

    #[test]
    fn display_defaults_to_commas() {
        assert_eq!(p("312").to_string(), "3,1,2");
        assert_eq!(p("312").compact().as_deref(), Some("312"));
        assert!(p("10,2,3,4,5,6,7,8,9,1").compact().is_none());
    }

    #[test]
    fn minima_decomposition_matches_pile_peeling() {
        let d = p("64518723").left_to_right_minima_decomposition();
        let values: Vec<Vec<u32>> = d.iter().map(|s| s.values()).collect();
        assert_eq!(values, vec![vec![6, 4, 1], vec![5, 2], vec![8, 7, 3]]);
        let positions: Vec<Vec<u32>> = d.iter().map(|s| s.positions()).collect();
        assert_eq!(positions, vec![vec![1, 2, 4], vec![3, 7], vec![5, 6, 8]]);

        let singles: Vec<Vec<u32>> = p("123")
            .left_to_right_minima_decomposition()
            .iter()
            .map(|s| s.values())
            .collect();
        assert_eq!(singles, vec![vec![1], vec![2], vec![3]]);

        let whole: Vec<Vec<u32>> = p("321")
            .left_to_right_minima_decomposition()
            .iter()
            .map(|s| s.values())
            .collect();
        assert_eq!(whole, vec![vec![3, 2, 1]]);
    }

    #[test]
    fn maxima_decomposition_peels_increasing_runs() {
        let singles: Vec<Vec<u32>> = p("321")
            .left_to_right_maxima_decomposition()
            .iter()
            .map(|s| s.values())
            .collect();
        assert_eq!(singles, vec![vec![3], vec![2], vec![1]]);

        let whole: Vec<Vec<u32>> = p("123")
            .left_to_right_maxima_decomposition()
            .iter()
            .map(|s| s.values())
            .collect();
        assert_eq!(whole, vec![vec![1, 2, 3]]);

        // peeling 64518723: records 6,8; then 4,5,7; then 1,2,3
        let d: Vec<Vec<u32>> = p("64518723")
            .left_to_right_maxima_decomposition()
            .iter()
            .map(|s| s.values())
            .collect();
        assert_eq!(d, vec![vec![6, 8], vec![4, 5, 7], vec![1, 2, 3]]);
        for s in p("64518723").left_to_right_maxima_decomposition() {
            assert!(s.values().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn decomposition_recovers_word() {
        for word in ["64518723", "45312", "1", ""] {
            let perm = p(word);
            let mut items: Vec<(u32, u32)> = perm
                .left_to_right_minima_decomposition()
                .iter()
                .flat_map(|s| s.items().to_vec())
                .collect();
            items.sort();
            let rebuilt: Vec<u32> = items.iter().map(|&(_, v)| v).collect();
            assert_eq!(rebuilt, perm.as_slice());
        }
    }

    #[test]
    fn symmetries() {
        assert_eq!(p("123").reverse(), p("321"));
        assert_eq!(p("3142").inverse(), p("2413"));
        assert_eq!(p("64518723").complement(), p("35481276"));
        for word in ["64518723", "3142", "1", ""] {
            let q = p(word);
            assert_eq!(q.reverse().reverse(), q);
            assert_eq!(q.complement().complement(), q);
            assert_eq!(q.inverse().inverse(), q);
        }
    }

    #[test]
    fn reverse_patience_words() {
        let r = PileConfig::new(vec![vec![6, 4, 1], vec![5, 2], vec![8, 7, 3]]).unwrap();
        assert_eq!(r.reverse_patience_word(), p("64152873"));

        // recording piles of the worked example, in stack order
        let s = PileConfig::new(vec![vec![4, 2, 1], vec![7, 3], vec![8, 6, 5]]).unwrap();
        assert_eq!(s.reverse_patience_word(), p("42173865"));

        let single = PileConfig::new(vec![vec![4, 3, 2, 1]]).unwrap();
        assert_eq!(single.reverse_patience_word(), p("4321"));
    }

    #[test]
    fn shapes() {
        let r = PileConfig::new(vec![vec![6, 4, 1], vec![5, 2], vec![8, 7, 3]]).unwrap();
        assert_eq!(r.shape().parts(), &[3, 2, 3]);
        assert_eq!(r.shape().total(), 8);

        let id = PileConfig::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(id.shape().parts(), &[1, 1, 1]);

        let single = PileConfig::new(vec![vec![5, 4, 3, 2, 1]]).unwrap();
        assert_eq!(single.shape().parts(), &[5]);
    }

    #[test]
    fn pile_config_rejects_bad_input() {
        assert_eq!(
            PileConfig::new(vec![vec![1, 2]]).unwrap_err(),
            PileError::NotDecreasing
        );
        assert_eq!(PileConfig::new(vec![vec![]]).unwrap_err(), PileError::EmptyPile);
        assert_eq!(
            PileConfig::new(vec![vec![3, 1], vec![3]]).unwrap_err(),
            PileError::NotPartition
        );
        assert_eq!(
            PileConfig::new(vec![vec![5, 1], vec![2]]).unwrap_err(),
            PileError::NotPartition
        );
        assert_eq!(PileConfig::new(vec![]).unwrap().n(), 0);
    }

    #[test]
    fn rank_enumeration_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_permutation(3, |w| seen.push(w.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1],
            ]
        );
        for (rank, word) in seen.iter().enumerate() {
            assert_eq!(&permutation_from_rank(3, rank as u64), word);
        }
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(10), 3_628_800);
    }
}
