use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Finite word over the digit alphabet `{0, …, m-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    digits: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(digits: Vec<u8>) -> Self {
        Self { digits }
    }

    pub fn repeat(digit: u8, times: usize) -> Self {
        Self {
            digits: vec![digit; times],
        }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn push(&mut self, d: u8) {
        self.digits.push(d);
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        Self { digits }
    }

    pub fn power(&self, k: usize) -> Self {
        Self {
            digits: self.digits.repeat(k),
        }
    }

    pub fn prefix(&self, len: usize) -> Self {
        Self {
            digits: self.digits[..len.min(self.len())].to_vec(),
        }
    }

    pub fn is_prefix_of(&self, other: &Self) -> bool {
        other.digits.starts_with(&self.digits)
    }

    /// Neither word is an initial segment of the other.
    pub fn is_incomparable(&self, other: &Self) -> bool {
        !self.is_prefix_of(other) && !other.is_prefix_of(self)
    }

    pub fn common_prefix_len(&self, other: &Self) -> usize {
        self.digits
            .iter()
            .zip(&other.digits)
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub fn check_alphabet(&self, alphabet: usize) -> Result<()> {
        match self.digits.iter().find(|&&d| d as usize >= alphabet) {
            Some(&d) => Err(Error::DigitOutOfRange {
                digit: d as usize,
                alphabet,
            }),
            None => Ok(()),
        }
    }

    /// The `index`-th word of length `len` in lexicographic order over `alphabet` letters.
    pub fn nth_of_length(alphabet: usize, len: usize, mut index: usize) -> Self {
        let mut digits = vec![0u8; len];
        for slot in digits.iter_mut().rev() {
            *slot = (index % alphabet) as u8;
            index /= alphabet;
        }
        Self { digits }
    }

    /// All words of length `len`, in lexicographic order.
    pub fn all_of_length(alphabet: usize, len: usize) -> impl Iterator<Item = Word> {
        let count = alphabet.pow(len as u32);
        (0..count).map(move |i| Self::nth_of_length(alphabet, len, i))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.iter().all(|&d| d < 10) {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in word")))
            })
            .collect::<Result<_>>()?;
        Ok(Self { digits })
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<&[u8]> for Word {
    fn from(d: &[u8]) -> Self {
        Self::new(d.to_vec())
    }
}
