use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image array.
///
/// Products read left to right: `a.then(&b)` applies `a` first, so
/// conjugation `x^g = g^-1 x g` matches right actions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(alloc::format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based images, the external convention.
    pub fn from_one_based(images: &[u32]) -> Result<Perm> {
        if images.contains(&0) {
            return Err(Error::NotAPermutation(alloc::format!(
                "{images:?} (images are 1-based)"
            )));
        }
        Perm::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Perm> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        // A point may appear once across all cycles.
        let mut seen = alloc::vec![false; degree];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a == 0 || a as usize > degree || b == 0 || b as usize > degree || seen[(a - 1) as usize] {
                    return Err(Error::NotAPermutation(alloc::format!("cycle {cyc:?}")));
                }
                seen[(a - 1) as usize] = true;
                images[(a - 1) as usize] = b - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<u32> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut r = alloc::vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            r[j as usize] = i as u32;
        }
        Perm { images: r }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Cycle notation with 1-based points, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let mut seen = alloc::vec![false; self.images.len()];
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                let _ = write!(out, "{}", i + 1);
                i = self.images[i] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}
