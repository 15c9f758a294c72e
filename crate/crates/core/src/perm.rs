//! Permutations on `{0, .., n-1}`, stored in one-line (image list) notation.
//!
//! Composition follows word order throughout the crate: `a.then(b)` applies
//! `a` first, then `b`, matching left-to-right reading of braid words.

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Swaps positions `i` and `i+1` (0-based).
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        assert!(i + 1 < n, "transposition ({}, {}) out of range", i, i + 1);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Self { images }
    }

    /// The order-reversing permutation `x -> n-1-x` (image of the half twist).
    pub fn reversal(n: usize) -> Self {
        Self {
            images: (0..n).rev().collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidParameter(format!(
                    "not a permutation of 0..{}: {:?}",
                    n, images
                )));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    /// Builds from a 1-indexed image list, the JSON interchange form.
    pub fn from_images_one_indexed(images: &[usize]) -> Result<Self, Error> {
        let shifted: Vec<usize> = images
            .iter()
            .map(|&v| v.checked_sub(1).unwrap_or(usize::MAX))
            .collect();
        Self::from_images(shifted)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn images_one_indexed(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Self {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (x, &v) in self.images.iter().enumerate() {
            images[v] = x;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &v)| x == v)
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        cycles
    }

    /// Sorted multiset of cycle lengths; a conjugation invariant.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    pub fn inversion_count(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub(crate) fn images_mut(&mut self) -> &mut [usize] {
        &mut self.images
    }
}
