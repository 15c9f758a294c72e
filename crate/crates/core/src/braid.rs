//! Words in the Artin generators of the braid group `B_q`.
//!
//! A word is a flat sequence of signed generator letters read left to right.
//! Only free-group-level operations live here; deciding equality in the
//! group is the job of [`crate::garside`].

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::perm::Permutation;

/// One letter: `+i` encodes the generator `s_i`, `-i` its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter(i32);

impl BraidLetter {
    pub fn positive(index: usize) -> Self {
        assert!(index >= 1 && index <= i32::MAX as usize);
        Self(index as i32)
    }

    pub fn negative(index: usize) -> Self {
        assert!(index >= 1 && index <= i32::MAX as usize);
        Self(-(index as i32))
    }

    pub fn from_int(v: i32) -> Result<Self, Error> {
        if v == 0 {
            return Err(Error::InvalidParameter(
                "braid letter must be a nonzero signed index".into(),
            ));
        }
        Ok(Self(v))
    }

    /// Generator subscript, always >= 1.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// `+1` for a generator, `-1` for an inverse generator.
    pub fn sign(self) -> i64 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Self(-self.0)
    }

    pub fn as_int(self) -> i32 {
        self.0
    }

    /// Index reflection `s_i -> s_(q-i)`, sign preserved.
    pub fn mirrored(self, strands: usize) -> Self {
        let new_index = (strands - self.index()) as i32;
        Self(new_index * self.0.signum())
    }
}

/// A braid word in `B_q`. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordRepr", into = "WordRepr")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

/// Canonical JSON shape: `{"strands": q, "word": [±i, ...]}`.
#[derive(Serialize, Deserialize)]
struct WordRepr {
    strands: usize,
    word: Vec<i32>,
}

impl TryFrom<WordRepr> for BraidWord {
    type Error = Error;

    fn try_from(repr: WordRepr) -> Result<Self, Error> {
        let letters = repr
            .word
            .iter()
            .map(|&v| BraidLetter::from_int(v))
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(repr.strands, letters)
    }
}

impl From<BraidWord> for WordRepr {
    fn from(w: BraidWord) -> Self {
        WordRepr {
            strands: w.strands,
            word: w.letters.iter().map(|l| l.as_int()).collect(),
        }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, Error> {
        if strands == 0 {
            return Err(Error::InvalidParameter("strand count must be >= 1".into()));
        }
        for letter in &letters {
            if letter.index() >= strands {
                return Err(Error::IndexOutOfRange {
                    index: letter.index(),
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn from_ints(strands: usize, word: &[i32]) -> Result<Self, Error> {
        let letters = word
            .iter()
            .map(|&v| BraidLetter::from_int(v))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn generator(strands: usize, index: usize) -> Result<Self, Error> {
        Self::new(strands, vec![BraidLetter::positive(index)])
    }

    pub fn generator_inverse(strands: usize, index: usize) -> Result<Self, Error> {
        Self::new(strands, vec![BraidLetter::negative(index)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn as_ints(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.as_int()).collect()
    }

    fn check_same_strands(&self, other: &Self) -> Result<(), Error> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub fn concat(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_strands(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// Concatenation of several words over the same strand count.
    pub fn concat_all<'a, I>(strands: usize, words: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut out = Self::identity(strands);
        for w in words {
            out = out.concat(w)?;
        }
        Ok(out)
    }

    /// Group inverse: letters reversed, signs flipped.
    pub fn invert(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn power(&self, m: i64) -> Self {
        let base = if m < 0 { self.invert() } else { self.clone() };
        let reps = m.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// `c^-1 * self * c`.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self, Error> {
        c.invert().concat(self)?.concat(c)
    }

    /// The ascending run `s_l s_(l+1) .. s_s`; empty when `s = l-1`.
    pub fn pi(l: usize, s: usize, strands: usize) -> Result<Self, Error> {
        if l < 1 || s + 1 < l || s >= strands {
            return Err(Error::InvalidParameter(format!(
                "pi({}, {}) out of range for {} strands",
                l, s, strands
            )));
        }
        let letters = (l..=s).map(BraidLetter::positive).collect();
        Self::new(strands, letters)
    }

    /// The Garside block `pi(l,s) pi(l,s-1) .. pi(l,l)`; empty when `s = l-1`.
    pub fn delta(l: usize, s: usize, strands: usize) -> Result<Self, Error> {
        if l < 1 || s + 1 < l || s >= strands {
            return Err(Error::InvalidParameter(format!(
                "delta({}, {}) out of range for {} strands",
                l, s, strands
            )));
        }
        let mut out = Self::identity(strands);
        for top in (l..=s).rev() {
            out = out.concat(&Self::pi(l, top, strands)?)?;
        }
        Ok(out)
    }

    /// The positive half twist of `B_q`, `delta(1, q-1)`.
    pub fn half_twist(strands: usize) -> Self {
        Self::delta(1, strands - 1, strands).expect("half twist is always in range")
    }

    /// Letters in reverse order, signs unchanged.
    pub fn rev(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Cancels adjacent inverse pairs until none remain. Does not apply
    /// braid relations, so the result is only freely equal to the input.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<BraidLetter> = Vec::with_capacity(self.len());
        for &letter in &self.letters {
            if stack.last() == Some(&letter.inverse()) {
                stack.pop();
            } else {
                stack.push(letter);
            }
        }
        Self {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Image under `B_q -> S_q`, composed in reading order.
    pub fn permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for letter in &self.letters {
            let i = letter.index() - 1;
            let images = perm.images_mut();
            // postcompose with the adjacent transposition: swap values i, i+1
            let mut pos_i = usize::MAX;
            let mut pos_j = usize::MAX;
            for (x, &v) in images.iter().enumerate() {
                if v == i {
                    pos_i = x;
                } else if v == i + 1 {
                    pos_j = x;
                }
            }
            images[pos_i] = i + 1;
            images[pos_j] = i;
        }
        perm
    }

    /// Sum of letter signs; a conjugacy invariant.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.sign() > 0 {
                    format!("s{}", l.index())
                } else {
                    format!("s{}^-1", l.index())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
