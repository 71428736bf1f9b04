//! Fixed-length bit strings.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A search point `x ∈ {0,1}^n`, packed into 64-bit words.
///
/// Positions are 0-indexed here; position `i` of the 1-indexed
/// mathematical view is index `i - 1`. Bits past `len` in the last word
/// are always zero, so derived equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Individual {
    len: usize,
    words: Box<[u64]>,
}

impl Individual {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)].into_boxed_slice(),
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut x = Self::zeros(len);
        x.words.iter_mut().for_each(|w| *w = u64::MAX);
        x.clear_padding();
        x
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut x = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                x.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        x
    }

    /// Uniformly random string: one `next_u64` per word, in word order.
    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        let mut x = Self::zeros(len);
        x.words.iter_mut().for_each(|w| *w = rng.next_u64());
        x.clear_padding();
        x
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Copy of `self` with the given positions flipped. A position listed
    /// twice is flipped twice.
    pub fn with_flipped(&self, positions: &[usize]) -> Self {
        let mut y = self.clone();
        for &i in positions {
            y.flip(i);
        }
        y
    }

    pub(crate) fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    /// Takes bits from `self` where `mask` is 0 and from `other` where it is 1.
    pub(crate) fn blend(&self, other: &Self, mask: &[u64]) -> Self {
        debug_assert_eq!(self.len, other.len);
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .zip(mask)
            .map(|((a, b), m)| (a & !m) | (b & m))
            .collect();
        Self { len: self.len, words }
    }

    pub(crate) fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl FromStr for Individual {
    type Err = Error;

    /// Parses a string of `0`/`1` characters, first character = position 1.
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidConfig(format!(
                    "bit strings may only contain 0 and 1, found {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bits(&bits))
    }
}

impl fmt::Display for Individual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Individual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Individual({self})")
    }
}
