use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Permutation of `{0..n}` in one-line form: `images[j]` is the image of `j`.
///
/// The associated matrix sends `e_j` to `e_{images[j]}`, so composition of
/// permutations is matrix multiplication: `(p.compose(q)).matrix() == p.matrix()·q.matrix()`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            images: (0..size).collect(),
        }
    }

    /// Exchange of `0` and `1` (the matrix `F`).
    pub fn flip(size: usize) -> Self {
        Self::transposition(size, 0, 1)
    }

    pub fn transposition(size: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..size).collect();
        images.swap(a, b);
        Self { images }
    }

    /// Cyclic column shift (the matrix `R`): `j ↦ j+1 mod size`.
    pub fn shift(size: usize) -> Self {
        Self {
            images: (0..size).map(|j| (j + 1) % size).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Self {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.size()];
        for (j, &i) in self.images.iter().enumerate() {
            images[i] = j;
        }
        Self { images }
    }

    /// `self ∘ p ∘ self⁻¹`.
    pub fn conjugate(&self, p: &Self) -> Self {
        let mut images = vec![0; p.size()];
        for (j, &i) in p.images.iter().enumerate() {
            images[self.images[j]] = self.images[i];
        }
        Self { images }
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::permutation(&self.images)
    }

    pub fn from_matrix(m: &IntMatrix) -> Result<Self> {
        if !m.is_permutation() {
            return Err(Error::InvalidPermutation(format!("{m} is not a permutation matrix")));
        }
        let images = (0..m.order())
            .map(|j| {
                (0..m.order())
                    .find(|&i| !num_traits::Zero::is_zero(m.get(i, j)))
                    .unwrap()
            })
            .collect();
        Ok(Self { images })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &i)| i == j)
    }

    /// Lengths of the cycles, sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    /// Position of the permutation in lexicographic order of one-line forms.
    pub fn rank(&self) -> usize {
        let n = self.size();
        let mut used = vec![false; n];
        let mut rank = 0;
        for (pos, &v) in self.images.iter().enumerate() {
            let smaller = (0..v).filter(|&u| !used[u]).count();
            rank = rank * (n - pos) + smaller;
            used[v] = true;
        }
        rank
    }

    pub fn unrank(size: usize, mut rank: usize) -> Self {
        let mut available: Vec<usize> = (0..size).collect();
        let mut fact: Vec<usize> = vec![1; size.max(1)];
        for k in 1..size {
            fact[k] = fact[k - 1] * k;
        }
        let mut images = Vec::with_capacity(size);
        for pos in 0..size {
            let f = fact[size - 1 - pos];
            let idx = rank / f;
            rank %= f;
            images.push(available.remove(idx));
        }
        Self { images }
    }

    /// All permutations of `{0..size}` in lexicographic order.
    pub fn all(size: usize) -> Vec<Self> {
        (0..factorial(size)).map(|r| Self::unrank(size, r)).collect()
    }
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `2,0,1` or `[2,0,1]`.
impl std::str::FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}
