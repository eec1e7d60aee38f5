//! The sorting algorithms: the classic pile procedure, the gather step,
//! the extended two-pile bijection and its inverse, and preimage analysis.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{Permutation, PileConfig, Shape};
use crate::patterns::{self, GenPattern};
use crate::OracleBoundExceeded;

/// Largest `n` the exhaustive preimage oracle will accept.
pub const PREIMAGE_ORACLE_BOUND: usize = 12;

/// Deals the cards of `p` into piles: each card goes atop the left-most
/// pile whose top card is larger, otherwise it starts a new right-most
/// pile.
///
/// Values are distinct, so no tie-breaking rule is needed. The tops of the
/// piles are strictly increasing left to right at every step, which lets
/// the destination pile be found by binary search; it also means the number
/// of piles equals the length of the longest increasing subsequence.
pub fn patience_sort(p: &Permutation) -> PileConfig {
    let mut piles: Vec<Vec<u32>> = Vec::new();
    for &c in p.as_slice() {
        let j = piles.partition_point(|pile| *pile.last().unwrap() < c);
        if j == piles.len() {
            piles.push(vec![c]);
        } else {
            piles[j].push(c);
        }
    }
    PileConfig::from_piles_unchecked(piles)
}

/// Picks up the smallest visible top card until no cards remain.
///
/// The returned sequence being `1, 2, .., n` is the correctness statement
/// of the sorting algorithm; it is simulated rather than assumed.
pub fn gather(r: &PileConfig) -> Vec<u32> {
    let mut piles: Vec<Vec<u32>> = r.piles().iter().map(|p| p.cards().to_vec()).collect();
    let mut out = Vec::with_capacity(r.n());
    for _ in 0..r.n() {
        let j = piles
            .iter()
            .enumerate()
            .filter_map(|(j, pile)| pile.last().map(|&top| (j, top)))
            .min_by_key(|&(_, top)| top)
            .map(|(j, _)| j)
            .expect("cards remain");
        out.push(piles[j].pop().unwrap());
    }
    out
}

/// Whether `r` is an actual image of patience sorting, i.e. re-sorting its
/// reverse patience word reproduces it.
pub fn is_pile_configuration(r: &PileConfig) -> bool {
    patience_sort(&r.reverse_patience_word()) == *r
}

/// The output of the extended algorithm: insertion piles (the usual
/// configuration) plus recording piles tracking when each card arrived.
///
/// Both configurations are stored as stacks, cards bottom to top. A
/// recording pile receives each new arrival index at its *bottom*, so its
/// bottom-to-top reading is the reversed arrival order and its cards
/// strictly decrease like any other pile. Height `h` of an insertion pile
/// and arrival slot `h` of its recording pile refer to the same play.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StablePair {
    insertion: PileConfig,
    recording: PileConfig,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MalformedPair {
    /// Insertion and recording shapes differ.
    ShapeMismatch,
    /// At some step no recording pile exposes the required index.
    NoExposedIndex(u32),
    /// An insertion pile ran out of cards before its recording pile.
    OutOfSync,
    /// Structurally consistent, but replaying the reconstruction does not
    /// reproduce the pair: it is not in the image of the extended
    /// algorithm.
    NotInImage,
}

impl fmt::Display for MalformedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MalformedPair::ShapeMismatch => {
                write!(f, "insertion and recording piles have different shapes")
            }
            MalformedPair::NoExposedIndex(i) => {
                write!(f, "no recording pile exposes index {i}")
            }
            MalformedPair::OutOfSync => write!(f, "insertion pile emptied out of sync"),
            MalformedPair::NotInImage => {
                write!(f, "pair is not produced by the extended algorithm")
            }
        }
    }
}

impl core::error::Error for MalformedPair {}

impl StablePair {
    /// Assembles a pair from two structurally valid configurations; deep
    /// validity (being an actual image) is established by `invert_extended`.
    pub fn from_configs(
        insertion: PileConfig,
        recording: PileConfig,
    ) -> Result<Self, MalformedPair> {
        if insertion.shape() != recording.shape() {
            return Err(MalformedPair::ShapeMismatch);
        }
        Ok(StablePair {
            insertion,
            recording,
        })
    }

    pub fn insertion(&self) -> &PileConfig {
        &self.insertion
    }

    pub fn recording(&self) -> &PileConfig {
        &self.recording
    }

    pub fn n(&self) -> usize {
        self.insertion.n()
    }

    pub fn shape(&self) -> Shape {
        self.insertion.shape()
    }

    /// Arrival order (oldest first) of recording pile `j` (0-based).
    pub fn recording_arrivals(&self, j: usize) -> Vec<u32> {
        let mut order = self.recording.piles()[j].cards().to_vec();
        order.reverse();
        order
    }
}

/// Runs the pile procedure while recording arrival indices: a card starting
/// pile `r_{k+1}` opens a recording pile holding its index, and a card
/// landing atop pile `r_j` puts its index at the bottom of recording pile
/// `s_j`. The two outputs always share a shape.
pub fn extended_patience_sort(p: &Permutation) -> StablePair {
    let mut insertion: Vec<Vec<u32>> = Vec::new();
    let mut arrivals: Vec<Vec<u32>> = Vec::new();
    for (i, &c) in p.as_slice().iter().enumerate() {
        let idx = i as u32 + 1;
        let j = insertion.partition_point(|pile| *pile.last().unwrap() < c);
        if j == insertion.len() {
            insertion.push(vec![c]);
            arrivals.push(vec![idx]);
        } else {
            insertion[j].push(c);
            arrivals[j].push(idx);
        }
    }
    let recording = arrivals
        .into_iter()
        .map(|mut a| {
            a.reverse();
            a
        })
        .collect();
    StablePair {
        insertion: PileConfig::from_piles_unchecked(insertion),
        recording: PileConfig::from_piles_unchecked(recording),
    }
}

/// Reconstructs the unique permutation that the extended algorithm maps to
/// `pair`, replaying the deal backwards: for `i = n, .., 1` the recording
/// pile whose bottom-most remaining entry is `i` gives up that entry, and
/// the top card of the matching insertion pile is the card played at time
/// `i`.
///
/// Recording indices are distinct, so at most one pile can expose `i`; the
/// left-to-right scan just fixes the order deterministically. A final
/// replay of the forward algorithm confirms the pair is genuinely in its
/// image.
pub fn invert_extended(pair: &StablePair) -> Result<Permutation, MalformedPair> {
    if pair.insertion.shape() != pair.recording.shape() {
        return Err(MalformedPair::ShapeMismatch);
    }
    let n = pair.n();
    let mut cards: Vec<Vec<u32>> = pair
        .insertion
        .piles()
        .iter()
        .map(|p| p.cards().to_vec())
        .collect();
    // oldest arrival first; the exposed (bottom-most) index is the last
    let mut arrivals: Vec<Vec<u32>> = (0..pair.recording.pile_count())
        .map(|j| pair.recording_arrivals(j))
        .collect();

    let mut word = vec![0u32; n];
    for i in (1..=n as u32).rev() {
        let j = arrivals
            .iter()
            .position(|a| a.last() == Some(&i))
            .ok_or(MalformedPair::NoExposedIndex(i))?;
        arrivals[j].pop();
        let card = cards[j].pop().ok_or(MalformedPair::OutOfSync)?;
        word[i as usize - 1] = card;
    }
    let p = Permutation::from_word(word).map_err(|_| MalformedPair::NotInImage)?;
    if extended_patience_sort(&p) == *pair {
        Ok(p)
    } else {
        Err(MalformedPair::NotInImage)
    }
}

/// All permutations that patience sorting sends to `r`, in lexicographic
/// order. A configuration that is not an image has no preimages.
///
/// Preimages are exactly the interleavings of the piles that replay onto
/// those same piles, so generation walks the interleavings directly with
/// the pile-placement rule as a pruning test instead of filtering all of
/// S_n. The reverse patience word is always among the results.
pub fn preimages(r: &PileConfig) -> Result<Vec<Permutation>, OracleBoundExceeded> {
    if r.n() > PREIMAGE_ORACLE_BOUND {
        return Err(OracleBoundExceeded {
            n: r.n(),
            bound: PREIMAGE_ORACLE_BOUND,
        });
    }
    let piles: Vec<&[u32]> = r.piles().iter().map(|p| p.cards()).collect();
    let mut taken = vec![0usize; piles.len()];
    let mut word = Vec::with_capacity(r.n());
    let mut out = Vec::new();
    interleave(&piles, &mut taken, &mut word, &mut out);
    Ok(out)
}

fn interleave(
    piles: &[&[u32]],
    taken: &mut [usize],
    word: &mut Vec<u32>,
    out: &mut Vec<Permutation>,
) {
    let total: usize = piles.iter().map(|p| p.len()).sum();
    if word.len() == total {
        out.push(Permutation::from_slice(word).expect("interleaving of a partition"));
        return;
    }
    let started = taken.iter().filter(|&&t| t > 0).count();
    // candidate next cards, smallest value first for lexicographic output
    let mut candidates: Vec<(u32, usize)> = Vec::new();
    for (j, pile) in piles.iter().enumerate() {
        if taken[j] >= pile.len() {
            continue;
        }
        let c = pile[taken[j]];
        let ok = if taken[j] == 0 {
            // a new pile must be the next one to the right, and its card
            // must beat every current top
            j == started && (j == 0 || piles[j - 1][taken[j - 1] - 1] < c)
        } else {
            // the card must land exactly on pile j: smaller than j's
            // current top, larger than the top to the left
            piles[j][taken[j] - 1] > c && (j == 0 || piles[j - 1][taken[j - 1] - 1] < c)
        };
        if ok {
            candidates.push((c, j));
        }
    }
    candidates.sort_unstable();
    for (c, j) in candidates {
        taken[j] += 1;
        word.push(c);
        interleave(piles, taken, word, out);
        word.pop();
        taken[j] -= 1;
    }
}

/// Whether `r` determines its preimage uniquely, decided by the pattern
/// characterization: the reverse patience word must avoid both `3-!1-42`
/// and `3-!1-24`.
pub fn has_unique_preimage(r: &PileConfig) -> bool {
    let rpw = r.reverse_patience_word();
    patterns::avoids(&rpw, &unique_preimage_patterns()[0])
        && patterns::avoids(&rpw, &unique_preimage_patterns()[1])
}

/// The two barred patterns whose simultaneous avoidance characterizes
/// unique preimages.
pub fn unique_preimage_patterns() -> [GenPattern; 2] {
    [
        patterns::parse_pattern("3-!1-42").expect("valid pattern"),
        patterns::parse_pattern("3-!1-24").expect("valid pattern"),
    ]
}

/// Whether two permutations produce the same pile configuration.
pub fn ps_equivalent(p: &Permutation, q: &Permutation) -> bool {
    patience_sort(p) == patience_sort(q)
}
