#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplex_split::ifs::{generators, pair_from_perms, SplitPair};
use simplex_split::linalg::{IntMatrix, SimplexPoint};
use simplex_split::symmetry::Permutation;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn perm(images: &[usize]) -> Permutation {
    Permutation::new(images.to_vec()).unwrap()
}

pub fn pair(p0: &[usize], p1: &[usize]) -> SplitPair {
    pair_from_perms(p0.len() - 1, perm(p0), perm(p1)).unwrap()
}

/// Random product of `N, F, R, L` of the given length.
pub fn random_sigma(rng: &mut impl Rng, dim: usize, len: usize) -> IntMatrix {
    let g = generators(dim).unwrap();
    let pool = [&g.n, &g.f, &g.r, &g.l];
    let mut acc = IntMatrix::identity(dim + 1).unwrap();
    for _ in 0..len {
        acc = &acc * pool[rng.gen_range(0..4)];
    }
    acc
}

/// Random rational point with small denominators; may sit on the boundary.
pub fn random_point(rng: &mut impl Rng, dim: usize) -> SimplexPoint {
    loop {
        let v: Vec<BigInt> = (0..=dim).map(|_| BigInt::from(rng.gen_range(0..40u32))).collect();
        if let Ok(p) = SimplexPoint::from_integer_vector(&v) {
            return p;
        }
    }
}

pub fn random_interior_point(rng: &mut impl Rng, dim: usize) -> SimplexPoint {
    let v: Vec<BigInt> = (0..=dim).map(|_| BigInt::from(rng.gen_range(1..1000u32))).collect();
    SimplexPoint::from_integer_vector(&v).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, size: usize) -> Permutation {
    use rand::seq::SliceRandom;
    let mut images: Vec<usize> = (0..size).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}
