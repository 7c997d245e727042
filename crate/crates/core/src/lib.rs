//! Computational engine for fusion systems over finite p-groups.
//!
//! Groups are permutation groups enumerated by closure. A fusion system is
//! stored extensionally: for every subgroup `P` of the Sylow group `S`, the
//! full set of morphisms `P -> S`. On top of that sit the local predicates
//! (saturation, centric, radical, essential), trees of fusion systems with
//! their completions, the P-orbit graphs, amalgam normal forms and the
//! hypothesis checkers for the tree and extension theorems.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is deterministic:
//! set-valued results are returned in canonical order.
#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod amalgam;
pub mod catalog;
mod error;
pub mod fusion;
pub mod group;
pub mod hom;
pub mod orbit;
mod perm;
pub mod theorems;
pub mod tree;

pub use error::{Error, Limits, Result};
pub use fusion::FusionSystem;
pub use group::{FiniteGroup, Subgroup};
pub use hom::{AutGroup, GroupMap, QuotientGroup};
pub use perm::Perm;

/// Returns `true` when `p` is prime.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: u64) -> usize {
    let p = p as usize;
    let mut n = n;
    let mut r = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        r *= p;
    }
    r
}

/// `true` if `n` is a power of `p` (including `p^0 = 1`).
pub fn is_p_power(n: usize, p: u64) -> bool {
    p_part(n, p) == n
}
