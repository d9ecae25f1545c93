//! Maximal cylinder diameter per depth, the quantitative proxy for
//! contractivity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ifs::{cylinder_of_word, Ifs, Word};
use crate::linalg::{cylinder_diameter, IntMatrix};

/// Upper bound on the number of depth-`T` cylinders an evidence run will visit.
pub const MAX_EVIDENCE_LEAVES: u64 = 1 << 25;

/// `profile[t]` is the largest L1 diameter among the cylinders of depth `t`,
/// for `t = 0..=depth`; `profile[0] = 2`.
pub fn diameter_evidence(ifs: &Ifs, depth: usize) -> Result<Vec<BigRational>> {
    let m = ifs.len() as u64;
    let leaves = m.checked_pow(depth as u32).unwrap_or(u64::MAX);
    if leaves > MAX_EVIDENCE_LEAVES {
        return Err(Error::ResourceLimit(format!(
            "{leaves} cylinders at depth {depth} exceed the limit of {MAX_EVIDENCE_LEAVES}"
        )));
    }
    match profile_i128(ifs, depth) {
        Some(p) => Ok(p),
        None => Ok(profile_exact(ifs, depth)),
    }
}

/// Reference implementation over exact big integers, one cylinder at a time.
pub fn profile_exact(ifs: &Ifs, depth: usize) -> Vec<BigRational> {
    (0..=depth)
        .map(|t| {
            Word::all_of_length(ifs.len(), t)
                .map(|w| cylinder_diameter(&cylinder_of_word(ifs, &w).expect("valid word")))
                .max()
                .expect("at least one word")
        })
        .collect()
}

#[derive(Clone)]
struct SmallMat {
    size: usize,
    data: Vec<i128>,
}

impl SmallMat {
    fn from_int(a: &IntMatrix) -> Option<Self> {
        let size = a.order();
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            for e in a.row(i) {
                data.push(e.to_i128()?);
            }
        }
        Some(Self { size, data })
    }

    fn mul(&self, rhs: &SmallMat) -> Option<SmallMat> {
        let n = self.size;
        let mut data = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.data[k * n + j];
                    if b != 0 {
                        let slot = &mut data[i * n + j];
                        *slot = slot.checked_add(a.checked_mul(b)?)?;
                    }
                }
            }
        }
        Some(SmallMat { size: n, data })
    }

    /// Diameter as an unreduced fraction `(num, den)`.
    fn diameter(&self) -> Option<(i128, i128)> {
        let n = self.size;
        let sums: Vec<i128> = (0..n)
            .map(|j| (0..n).try_fold(0i128, |s, i| s.checked_add(self.data[i * n + j])))
            .collect::<Option<_>>()?;
        let mut best = (0i128, 1i128);
        for p in 0..n {
            for q in p + 1..n {
                let mut num = 0i128;
                for k in 0..n {
                    let x = self.data[k * n + p].checked_mul(sums[q])?;
                    let y = self.data[k * n + q].checked_mul(sums[p])?;
                    num = num.checked_add(x.checked_sub(y)?.abs())?;
                }
                let den = sums[p].checked_mul(sums[q])?;
                if num.checked_mul(best.1)? > best.0.checked_mul(den)? {
                    best = (num, den);
                }
            }
        }
        Some(best)
    }
}

fn greater(a: (i128, i128), b: (i128, i128)) -> Option<bool> {
    Some(a.0.checked_mul(b.1)? > b.0.checked_mul(a.1)?)
}

fn max_frac(a: (i128, i128), b: (i128, i128)) -> Option<(i128, i128)> {
    Some(if greater(b, a)? { b } else { a })
}

fn subtree(node: &SmallMat, t: usize, depth: usize, branches: &[SmallMat], best: &mut [(i128, i128)]) -> Option<()> {
    best[t] = max_frac(best[t], node.diameter()?)?;
    if t == depth {
        return Some(());
    }
    for b in branches {
        subtree(&node.mul(b)?, t + 1, depth, branches, best)?;
    }
    Some(())
}

/// Depth-first sweep in machine integers; `None` on overflow.
fn profile_i128(ifs: &Ifs, depth: usize) -> Option<Vec<BigRational>> {
    let branches: Vec<SmallMat> = ifs.branches().iter().map(SmallMat::from_int).collect::<Option<_>>()?;
    let root = SmallMat::from_int(&IntMatrix::identity(ifs.dim() + 1).ok()?)?;
    // Split the top few levels across threads.
    let split = depth.min(4);
    let mut frontier = vec![(root, 0usize)];
    let mut best = vec![(0i128, 1i128); depth + 1];
    for t in 0..split {
        let mut next = Vec::with_capacity(frontier.len() * branches.len());
        for (m, _) in &frontier {
            best[t] = max_frac(best[t], m.diameter()?)?;
            for b in &branches {
                next.push((m.mul(b)?, t + 1));
            }
        }
        frontier = next;
    }
    let partials: Vec<Option<Vec<(i128, i128)>>> = frontier
        .par_iter()
        .map(|(m, t)| {
            let mut local = vec![(0i128, 1i128); depth + 1];
            subtree(m, *t, depth, &branches, &mut local)?;
            Some(local)
        })
        .collect();
    for local in partials {
        let local = local?;
        for t in split..=depth {
            best[t] = max_frac(best[t], local[t])?;
        }
    }
    Some(
        best.into_iter()
            .map(|(num, den)| BigRational::new(BigInt::from(num), BigInt::from(den)))
            .collect(),
    )
}

pub fn is_non_increasing(profile: &[BigRational]) -> bool {
    profile.windows(2).all(|w| w[1] <= w[0])
}

/// Two, the diameter of the whole simplex.
pub fn full_diameter() -> BigRational {
    BigRational::one() + BigRational::one()
}
