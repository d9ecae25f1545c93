use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers, rows and columns indexed `0..order`.
///
/// Entries are stored row-major. Matrices are immutable once built; every
/// operation returns a new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        if order < 2 {
            return Err(Error::BadOrder(order));
        }
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: row.len(),
                });
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(Self { order, entries })
    }

    /// Builds a matrix from `f(row, col)`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Result<Self> {
        if order < 2 {
            return Err(Error::BadOrder(order));
        }
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Ok(Self { order, entries })
    }

    pub fn identity(order: usize) -> Result<Self> {
        Self::from_fn(order, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    /// Matrix sending `e_j` to `e_{images[j]}`.
    pub(crate) fn permutation(images: &[usize]) -> Self {
        let order = images.len();
        let mut entries = vec![BigInt::zero(); order * order];
        for (j, &i) in images.iter().enumerate() {
            entries[i * order + j] = BigInt::one();
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The dimension `n` of the simplex the matrix acts on (`order - 1`).
    pub fn dim(&self) -> usize {
        self.order - 1
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        (0..self.order).map(|i| self.get(i, col).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.order;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        Self { order: n, entries }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// Membership in the monoid of nonnegative matrices of determinant ±1.
    pub fn is_sigma(&self) -> bool {
        self.is_nonnegative() && self.det().abs().is_one()
    }

    /// True for 0/1 matrices with exactly one 1 in every row and column.
    pub fn is_permutation(&self) -> bool {
        let n = self.order;
        let mut col_hits = vec![0usize; n];
        for i in 0..n {
            let mut row_hits = 0;
            for j in 0..n {
                let e = self.get(i, j);
                if e.is_one() {
                    row_hits += 1;
                    col_hits[j] += 1;
                } else if !e.is_zero() {
                    return false;
                }
            }
            if row_hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&c| c == 1)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.order).all(|i| {
            (0..self.order).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        let n = self.order;
        let mut entries = vec![BigInt::zero(); n * n];
        // Branch matrices are sparse 0/1 matrices, so skipping zeros of the
        // left factor pays off on long products.
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    if b.is_one() {
                        entries[i * n + j] += a;
                    } else {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(Self { order: n, entries })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::identity(self.order).expect("order checked at construction");
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: v.len(),
            });
        }
        Ok((0..self.order)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect())
    }

    /// Column sums, i.e. the row vector `(1 … 1)·A`.
    pub fn column_sums(&self) -> Vec<BigInt> {
        (0..self.order)
            .map(|j| (0..self.order).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let n = self.order;
        let mut m: Vec<Vec<BigInt>> = self.rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v.div_floor(&prev);
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    /// Minor obtained by deleting `row` and `col`, as a plain row list.
    fn minor_det(&self, row: usize, col: usize) -> BigInt {
        let n = self.order;
        if n == 2 {
            return self.get(1 - row, 1 - col).clone();
        }
        let entries = (0..n)
            .filter(|&i| i != row)
            .flat_map(|i| (0..n).filter(move |&j| j != col).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Self { order: n - 1, entries }.det()
    }

    /// Adjugate (transposed cofactor matrix).
    pub fn adjugate(&self) -> Self {
        let n = self.order;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let c = self.minor_det(i, j);
                entries[j * n + i] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        Self { order: n, entries }
    }

    /// Exact inverse of a matrix with determinant ±1.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let d = self.det();
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular(d));
        }
        let adj = self.adjugate();
        if d.is_one() {
            Ok(adj)
        } else {
            Ok(Self {
                order: adj.order,
                entries: adj.entries.into_iter().map(|e| -e).collect(),
            })
        }
    }

    /// Indices `j` such that column `j` is a positive multiple of `e_j`.
    pub fn fixed_vertices(&self) -> BTreeSet<usize> {
        (0..self.order)
            .filter(|&j| {
                (0..self.order).all(|i| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_positive()
                    } else {
                        e.is_zero()
                    }
                })
            })
            .collect()
    }

    /// True iff the undirected support graph has at least two connected components.
    pub fn is_graph_disconnected(&self) -> bool {
        let n = self.order;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && !self.get(i, j).is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..n).any(|i| find(&mut parent, i) != root)
    }

    pub fn max_entry(&self) -> BigInt {
        self.entries.iter().max().cloned().unwrap_or_default()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        (0..self.order)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| e.to_f64().unwrap_or(f64::INFINITY))
                    .collect()
            })
            .collect()
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on order mismatch; use [`IntMatrix::try_mul`] for a checked product.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.try_mul(rhs).expect("matrix orders must agree")
    }
}

/// Checked product `a·b`.
pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    a.try_mul(b)
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.order {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.order)
            .map(|i| self.row(i).iter().map(|e| e.to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}
