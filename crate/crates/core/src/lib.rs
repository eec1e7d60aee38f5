//! Patience sorting and its combinatorics.
//!
//! The crate is organized around the card game: [`perm`] holds permutations
//! and pile configurations, [`patience`] the sorting algorithms and the
//! extended (two-pile) bijection, [`patterns`] a generalized/barred
//! permutation-pattern engine, [`geometry`] the lattice-path form of the
//! algorithm (shadow diagrams, iterates, crossings), and [`enumeration`]
//! the exact counting machinery (Bell numbers, convolved Fibonacci numbers,
//! the invertibility triangle and its generating-function identities).
//!
//! Everything here is pure computation on immutable values; the crate is
//! `no_std` (with `alloc`) so it can be embedded anywhere. IO, file formats
//! and the command-line driver live in the companion `patience-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod enumeration;
pub mod geometry;
pub mod patience;
pub mod patterns;
pub mod perm;

use core::fmt;

/// An exhaustive sweep was requested above the configured bound.
///
/// Brute-force oracles enumerate all of S_n; the bound keeps them at desk
/// scale instead of silently running for hours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBoundExceeded {
    pub n: usize,
    pub bound: usize,
}

impl fmt::Display for OracleBoundExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exhaustive oracle bound exceeded: n = {} is larger than the configured bound {}",
            self.n, self.bound
        )
    }
}

impl core::error::Error for OracleBoundExceeded {}
