use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Exact point of the standard simplex: nonnegative rationals summing to 1.
/// Ordered lexicographically by coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexPoint {
    coords: Vec<BigRational>,
}

impl SimplexPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidPoint(format!(
                "need at least 2 coordinates, got {}",
                coords.len()
            )));
        }
        if let Some(c) = coords.iter().find(|c| c.is_negative()) {
            return Err(Error::InvalidPoint(format!("negative coordinate {c}")));
        }
        let sum: BigRational = coords.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidPoint(format!("coordinates sum to {sum}, not 1")));
        }
        Ok(Self { coords })
    }

    /// Normalizes a nonnegative, nonzero integer vector onto the simplex.
    pub fn from_integer_vector(v: &[BigInt]) -> Result<Self> {
        if v.iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidPoint("negative entry".into()));
        }
        let sum: BigInt = v.iter().sum();
        if sum.is_zero() {
            return Err(Error::ZeroImage);
        }
        Self::new(v.iter().map(|x| BigRational::new(x.clone(), sum.clone())).collect())
    }

    /// The vertex `e_i` of the `n`-simplex.
    pub fn vertex(n: usize, i: usize) -> Self {
        assert!(i <= n, "vertex index {i} out of range for dimension {n}");
        Self {
            coords: (0..=n)
                .map(|k| {
                    if k == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        }
    }

    pub fn barycenter(n: usize) -> Self {
        let c = BigRational::new(BigInt::one(), BigInt::from(n + 1));
        Self { coords: vec![c; n + 1] }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Primitive integer vector on the same ray.
    pub fn to_integer_vector(&self) -> Vec<BigInt> {
        let lcm = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        self.coords.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn l1_distance(&self, other: &Self) -> BigRational {
        self.coords.iter().zip(&other.coords).map(|(a, b)| (a - b).abs()).sum()
    }

    /// True iff every coordinate is strictly positive.
    pub fn is_interior(&self) -> bool {
        self.coords.iter().all(|c| c.is_positive())
    }
}

impl fmt::Display for SimplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SimplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SimplexPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        v.serialize(serializer)
    }
}

/// Parses a comma-separated list of exact fractions such as `1/3,1/3,1/3`.
impl FromStr for SimplexPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|part| parse_rational(part.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Projective action `x ↦ Ax / ‖Ax‖₁`.
pub fn project(a: &IntMatrix, x: &SimplexPoint) -> Result<SimplexPoint> {
    if a.order() != x.coords.len() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: x.coords.len(),
        });
    }
    let image: Vec<BigRational> = (0..a.order())
        .map(|i| {
            a.row(i)
                .iter()
                .zip(&x.coords)
                .filter(|(e, _)| !e.is_zero())
                .map(|(e, c)| c * e)
                .sum()
        })
        .collect();
    if image.iter().any(|c| c.is_negative()) {
        return Err(Error::InvalidPoint("projective image leaves the simplex".into()));
    }
    let norm: BigRational = image.iter().sum();
    if norm.is_zero() {
        return Err(Error::ZeroImage);
    }
    SimplexPoint::new(image.into_iter().map(|c| c / &norm).collect())
}

/// Normalized columns of `a`: the vertices of the unimodular simplex `A[Δ]`.
pub fn cylinder_vertices(a: &IntMatrix) -> Vec<SimplexPoint> {
    (0..a.order())
        .map(|j| SimplexPoint::from_integer_vector(&a.column(j)).expect("columns of Σ are nonzero"))
        .collect()
}

/// Lebesgue probability of `A[Δ]`: the reciprocal of the product of column sums.
pub fn cylinder_measure(a: &IntMatrix) -> BigRational {
    let prod: BigInt = a.column_sums().iter().product();
    BigRational::new(BigInt::one(), prod)
}

/// L1 diameter of `A[Δ]`; by convexity the maximum over pairs of vertices.
pub fn cylinder_diameter(a: &IntMatrix) -> BigRational {
    let sums = a.column_sums();
    let cols: Vec<Vec<BigInt>> = (0..a.order()).map(|j| a.column(j)).collect();
    let mut best = BigRational::zero();
    for p in 0..cols.len() {
        for q in p + 1..cols.len() {
            // |c_p/s_p - c_q/s_q|₁ = Σ |c_pk s_q - c_qk s_p| / (s_p s_q)
            let num: BigInt = cols[p]
                .iter()
                .zip(&cols[q])
                .map(|(x, y)| (x * &sums[q] - y * &sums[p]).abs())
                .sum();
            let d = BigRational::new(num, &sums[p] * &sums[q]);
            if d > best {
                best = d;
            }
        }
    }
    best
}
