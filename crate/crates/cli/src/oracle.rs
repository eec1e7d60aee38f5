//! Independent reference implementations used to cross-check the library:
//! a quadratic longest-increasing-subsequence DP, a from-scratch barred
//! pattern matcher, set-partition counting, and a full-group preimage
//! filter. These deliberately share no code with the fast paths they
//! check.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use patience_core::patience::patience_sort;
use patience_core::patterns::GenPattern;
use patience_core::perm::{for_each_permutation, Permutation, PileConfig};

/// Longest increasing subsequence length by the quadratic DP.
pub fn lis_dp(word: &[u32]) -> usize {
    let n = word.len();
    let mut best = vec![1usize; n];
    let mut out = 0;
    for i in 0..n {
        for j in 0..i {
            if word[j] < word[i] && best[j] + 1 > best[i] {
                best[i] = best[j] + 1;
            }
        }
        out = out.max(best[i]);
    }
    out
}

fn order_isomorphic(host: &[u32], positions: &[usize], letters: &[u8]) -> bool {
    for a in 0..positions.len() {
        for b in 0..positions.len() {
            if (host[positions[a]] < host[positions[b]]) != (letters[a] < letters[b]) {
                return false;
            }
        }
    }
    true
}

fn blocks_contiguous(positions: &[usize], block_id: &[usize]) -> bool {
    (1..positions.len())
        .all(|t| block_id[t] != block_id[t - 1] || positions[t] == positions[t - 1] + 1)
}

/// Every occurrence of (`letters`, `block_id`) in `host`, by filtering all
/// position tuples.
pub fn occurrences_naive(host: &[u32], letters: &[u8], block_id: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(letters.len());
    fn rec(
        host: &[u32],
        letters: &[u8],
        block_id: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == letters.len() {
            if order_isomorphic(host, cur, letters) && blocks_contiguous(cur, block_id) {
                out.push(cur.clone());
            }
            return;
        }
        let start = cur.last().map_or(0, |&p| p + 1);
        for pos in start..host.len() {
            cur.push(pos);
            rec(host, letters, block_id, cur, out);
            cur.pop();
        }
    }
    rec(host, letters, block_id, &mut cur, &mut out);
    out
}

/// Barred avoidance straight from the definition: a core occurrence
/// extends exactly when it appears among the full-pattern occurrences with
/// the barred slot deleted.
pub fn avoids_naive(host: &[u32], pat: &GenPattern) -> bool {
    match pat.barred() {
        None => occurrences_naive(host, pat.letters(), pat.block_ids()).is_empty(),
        Some(b) => {
            let mut core_letters = pat.letters().to_vec();
            core_letters.remove(b);
            let mut core_blocks = pat.block_ids().to_vec();
            core_blocks.remove(b);
            let extendable: HashSet<Vec<usize>> =
                occurrences_naive(host, pat.letters(), pat.block_ids())
                    .into_iter()
                    .map(|mut occ| {
                        occ.remove(b);
                        occ
                    })
                    .collect();
            occurrences_naive(host, &core_letters, &core_blocks)
                .into_iter()
                .all(|occ| extendable.contains(&occ))
        }
    }
}

/// Number of set partitions of `{1, .., n}`, by walking restricted growth
/// strings.
pub fn set_partition_count(n: usize) -> u64 {
    fn rec(remaining: usize, blocks: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        // the next element joins one of the existing blocks or opens a new one
        blocks * rec(remaining - 1, blocks) + rec(remaining - 1, blocks + 1)
    }
    if n == 0 {
        1
    } else {
        rec(n - 1, 1)
    }
}

/// All preimages of `r` by filtering the whole symmetric group; the
/// cross-check for the interleaving generator.
pub fn preimages_naive(r: &PileConfig) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(r.n(), |w| {
        let q = Permutation::from_slice(w).unwrap();
        if patience_sort(&q) == *r {
            out.push(q);
        }
    });
    out
}

/// A uniformly random permutation word of `{1, .., n}`.
pub fn random_word(rng: &mut impl Rng, n: usize) -> Vec<u32> {
    let mut word: Vec<u32> = (1..=n as u32).collect();
    word.shuffle(rng);
    word
}
