//! Simplex-splitting iterated function systems, their Gauss-type maps and
//! digit expansions.
//!
//! A two-map system is always presented as `(A₀, A₁) = (N·P₀, L·P₁)`: the first
//! branch maps `Δ` onto the half of the simplex spanned by the columns of `N`,
//! the second onto the half spanned by the columns of `L`, both halves cut
//! along the edge `⟨e₀, e₁⟩`.

mod word;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub use word::Word;

use crate::error::{Error, Result};
use crate::linalg::{cylinder_diameter, cylinder_measure, cylinder_vertices, project, IntMatrix, SimplexPoint};
use crate::symmetry::Permutation;

/// The elementary matrices `N`, `F`, `R`, `L` in dimension `dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub dim: usize,
    /// Identity with the first column added into the second.
    pub n: IntMatrix,
    /// Identity with the first two columns exchanged.
    pub f: IntMatrix,
    /// Cyclic column shift, `e_j ↦ e_{j+1}`.
    pub r: IntMatrix,
    /// `F·N·F`.
    pub l: IntMatrix,
}

/// `N` of order `dim + 1`.
pub(crate) fn n_matrix(dim: usize) -> IntMatrix {
    IntMatrix::from_fn(dim + 1, |i, j| {
        if i == j || (i == 0 && j == 1) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
    .expect("order ≥ 2")
}

/// `L` of order `dim + 1`.
pub(crate) fn l_matrix(dim: usize) -> IntMatrix {
    IntMatrix::from_fn(dim + 1, |i, j| {
        if i == j || (i == 1 && j == 0) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
    .expect("order ≥ 2")
}

pub fn generators(dim: usize) -> Result<GeneratorSet> {
    if dim < 1 {
        return Err(Error::Dimension {
            n: dim,
            reason: "the simplex must have dimension at least 1",
        });
    }
    let size = dim + 1;
    let f = Permutation::flip(size).matrix();
    let n = n_matrix(dim);
    let l = &(&f * &n) * &f;
    Ok(GeneratorSet {
        dim,
        n,
        f,
        r: Permutation::shift(size).matrix(),
        l,
    })
}

/// The three contractive classes, by their representative pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FareyVariant {
    /// `(M₀, M₁)`: the Mönkemeyer / multidimensional Farey map.
    Monkemeyer,
    /// `(M₀, M₁F)`: orientation-preserving for odd dimension.
    OrientationPreserving,
    /// `(M₀F, M₁)`: orientation-reversing for odd dimension.
    OrientationReversing,
}

impl FareyVariant {
    pub const ALL: [FareyVariant; 3] = [
        FareyVariant::Monkemeyer,
        FareyVariant::OrientationPreserving,
        FareyVariant::OrientationReversing,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            FareyVariant::Monkemeyer => "mono",
            FareyVariant::OrientationPreserving => "op",
            FareyVariant::OrientationReversing => "or",
        }
    }
}

impl fmt::Display for FareyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FareyVariant::Monkemeyer => "(M0,M1)",
            FareyVariant::OrientationPreserving => "(M0,M1F)",
            FareyVariant::OrientationReversing => "(M0F,M1)",
        })
    }
}

/// Ordered pair `(A₀, A₁) = (N·P₀, L·P₁)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    dim: usize,
    p0: Permutation,
    p1: Permutation,
    a0: IntMatrix,
    a1: IntMatrix,
}

impl SplitPair {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn p0(&self) -> &Permutation {
        &self.p0
    }

    pub fn p1(&self) -> &Permutation {
        &self.p1
    }

    pub fn a0(&self) -> &IntMatrix {
        &self.a0
    }

    pub fn a1(&self) -> &IntMatrix {
        &self.a1
    }

    pub fn branch(&self, digit: u8) -> &IntMatrix {
        match digit {
            0 => &self.a0,
            1 => &self.a1,
            _ => panic!("a split pair has two branches, got digit {digit}"),
        }
    }

    pub fn perms(&self) -> (&Permutation, &Permutation) {
        (&self.p0, &self.p1)
    }

    pub fn ifs(&self) -> Ifs {
        Ifs::from_parts(self.dim, vec![self.a0.clone(), self.a1.clone()])
    }

    /// Product of branch matrices along `w`.
    pub fn word_matrix(&self, w: &Word) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.dim + 1).expect("order ≥ 2");
        for &d in w.digits() {
            acc = &acc * self.branch(d);
        }
        acc
    }
}

/// `(N·P₀, L·P₁)` for arbitrary permutations of `{0..n}`.
pub fn pair_from_perms(dim: usize, p0: Permutation, p1: Permutation) -> Result<SplitPair> {
    if dim < 1 {
        return Err(Error::Dimension {
            n: dim,
            reason: "the simplex must have dimension at least 1",
        });
    }
    for p in [&p0, &p1] {
        if p.size() != dim + 1 {
            return Err(Error::InvalidPermutation(format!(
                "{p} has size {}, expected {}",
                p.size(),
                dim + 1
            )));
        }
    }
    let a0 = &n_matrix(dim) * &p0.matrix();
    let a1 = &l_matrix(dim) * &p1.matrix();
    Ok(SplitPair { dim, p0, p1, a0, a1 })
}

/// `(M₀, M₁) = (NFR, LR)`.
pub fn monkemeyer(dim: usize) -> Result<SplitPair> {
    farey_variant(dim, FareyVariant::Monkemeyer)
}

pub fn farey_variant(dim: usize, variant: FareyVariant) -> Result<SplitPair> {
    if dim < 1 {
        return Err(Error::Dimension {
            n: dim,
            reason: "the simplex must have dimension at least 1",
        });
    }
    let size = dim + 1;
    let f = Permutation::flip(size);
    let r = Permutation::shift(size);
    let fr = f.compose(&r);
    let (p0, p1) = match variant {
        FareyVariant::Monkemeyer => (fr, r),
        FareyVariant::OrientationPreserving => (fr, r.compose(&f)),
        FareyVariant::OrientationReversing => (fr.compose(&f), r),
    };
    pair_from_perms(dim, p0, p1)
}

/// The three pairs `(M₀,M₁)`, `(M₀,M₁F)`, `(M₀F,M₁)`.
pub fn farey_variants(dim: usize) -> Result<[SplitPair; 3]> {
    Ok([
        farey_variant(dim, FareyVariant::Monkemeyer)?,
        farey_variant(dim, FareyVariant::OrientationPreserving)?,
        farey_variant(dim, FareyVariant::OrientationReversing)?,
    ])
}

/// Projective IFS on the `dim`-simplex given by non-invertible matrices of Σ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ifs {
    dim: usize,
    branches: Vec<IntMatrix>,
    inverses: Vec<IntMatrix>,
}

impl Ifs {
    pub fn new(branches: Vec<IntMatrix>) -> Result<Self> {
        let first = branches
            .first()
            .ok_or_else(|| Error::InvalidIfs("no branches".into()))?;
        let dim = first.dim();
        for (a, b) in branches.iter().enumerate() {
            if b.order() != dim + 1 {
                return Err(Error::OrderMismatch {
                    left: dim + 1,
                    right: b.order(),
                });
            }
            if !b.is_sigma() {
                return Err(Error::InvalidIfs(format!(
                    "branch {a} is not a nonnegative unimodular matrix"
                )));
            }
            if b.is_permutation() {
                return Err(Error::InvalidIfs(format!("branch {a} is invertible in Σ")));
            }
        }
        if branches.len() > u8::MAX as usize {
            return Err(Error::InvalidIfs("too many branches".into()));
        }
        Ok(Self::from_parts(dim, branches))
    }

    /// Like [`Ifs::new`] but also requires the cylinders to split the simplex.
    pub fn splitting(branches: Vec<IntMatrix>) -> Result<Self> {
        let ifs = Self::new(branches)?;
        if !ifs.is_simplex_splitting() {
            return Err(Error::InvalidIfs("cylinders do not split the simplex".into()));
        }
        Ok(ifs)
    }

    fn from_parts(dim: usize, branches: Vec<IntMatrix>) -> Self {
        let inverses = branches
            .iter()
            .map(|b| b.inverse_unimodular().expect("branches are unimodular"))
            .collect();
        Self {
            dim,
            branches,
            inverses,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn branches(&self) -> &[IntMatrix] {
        &self.branches
    }

    pub fn branch(&self, digit: u8) -> &IntMatrix {
        &self.branches[digit as usize]
    }

    pub fn inverse(&self, digit: u8) -> &IntMatrix {
        &self.inverses[digit as usize]
    }

    /// Measures sum to 1 and no two cylinders overlap in their interiors.
    ///
    /// Overlap is detected by two exact probes per pair of cylinders: the
    /// barycenter of their shared vertices and each cylinder's own barycenter
    /// must not lie in the interior of both.
    pub fn is_simplex_splitting(&self) -> bool {
        let total: BigRational = self.branches.iter().map(cylinder_measure).sum();
        if !total.is_one() {
            return false;
        }
        let verts: Vec<Vec<SimplexPoint>> = self.branches.iter().map(cylinder_vertices).collect();
        let interior = |a: usize, x: &SimplexPoint| {
            let v = self.inverses[a].apply(&x.to_integer_vector()).expect("orders agree");
            v.iter().all(|c| c.is_positive())
        };
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                let shared: Vec<&SimplexPoint> = verts[a].iter().filter(|v| verts[b].contains(v)).collect();
                let mut probes = vec![barycenter_of(&verts[a]), barycenter_of(&verts[b])];
                if !shared.is_empty() {
                    probes.push(barycenter_of_refs(&shared));
                }
                if probes.iter().any(|p| interior(a, p) && interior(b, p)) {
                    return false;
                }
            }
        }
        true
    }
}

fn barycenter_of(points: &[SimplexPoint]) -> SimplexPoint {
    barycenter_of_refs(&points.iter().collect::<Vec<_>>())
}

fn barycenter_of_refs(points: &[&SimplexPoint]) -> SimplexPoint {
    let k = BigRational::from_integer(BigInt::from(points.len()));
    let dim = points[0].dim();
    let coords = (0..=dim)
        .map(|i| points.iter().map(|p| &p.coords()[i]).sum::<BigRational>() / &k)
        .collect();
    SimplexPoint::new(coords).expect("convex combination stays on the simplex")
}

/// The fully subtractive three-map system on the 2-simplex.
///
/// Branch `a` maps the simplex onto the region where coordinate `a` is the
/// smallest; its Gauss map subtracts the smallest coordinate from the others.
pub fn example5() -> Ifs {
    let rows = |r: [[i64; 3]; 3]| IntMatrix::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).expect("3×3");
    Ifs::splitting(vec![
        rows([[1, 0, 0], [1, 1, 0], [1, 0, 1]]),
        rows([[1, 1, 0], [0, 1, 0], [0, 1, 1]]),
        rows([[1, 0, 1], [0, 1, 1], [0, 0, 1]]),
    ])
    .expect("fully subtractive system splits the simplex")
}

fn check_dim(ifs: &Ifs, x: &SimplexPoint) -> Result<()> {
    if x.dim() != ifs.dim {
        return Err(Error::OrderMismatch {
            left: ifs.dim + 1,
            right: x.dim() + 1,
        });
    }
    Ok(())
}

fn branch_of_vector(ifs: &Ifs, v: &[BigInt]) -> Option<(u8, Vec<BigInt>)> {
    (0..ifs.len() as u8).find_map(|a| {
        let image = ifs.inverse(a).apply(v).expect("orders agree");
        image.iter().all(|c| !c.is_negative()).then_some((a, image))
    })
}

/// Least digit `a` with `x ∈ A_a[Δ]`.
pub fn branch_of(ifs: &Ifs, x: &SimplexPoint) -> Result<u8> {
    check_dim(ifs, x)?;
    branch_of_vector(ifs, &x.to_integer_vector())
        .map(|(a, _)| a)
        .ok_or_else(|| Error::InvalidPoint(format!("{x} lies in no cylinder")))
}

/// Every digit whose cylinder contains `x` (the multivalued reading of the map).
pub fn branches_containing(ifs: &Ifs, x: &SimplexPoint) -> Result<Vec<u8>> {
    check_dim(ifs, x)?;
    let v = x.to_integer_vector();
    Ok((0..ifs.len() as u8)
        .filter(|&a| {
            ifs.inverse(a)
                .apply(&v)
                .expect("orders agree")
                .iter()
                .all(|c| !c.is_negative())
        })
        .collect())
}

/// One step of the Gauss-type map: `x ↦ A_{a(x)}⁻¹(x)`.
pub fn gauss_step(ifs: &Ifs, x: &SimplexPoint) -> Result<(u8, SimplexPoint)> {
    let a = branch_of(ifs, x)?;
    Ok((a, project(ifs.inverse(a), x)?))
}

/// The first `steps` digits of the expansion of `x`.
pub fn expand(ifs: &Ifs, x: &SimplexPoint, steps: usize) -> Result<Word> {
    Ok(orbit(ifs, x, steps)?.0)
}

/// Digits together with the visited points `x, Gx, …, G^steps x`.
pub fn orbit(ifs: &Ifs, x: &SimplexPoint, steps: usize) -> Result<(Word, Vec<SimplexPoint>)> {
    check_dim(ifs, x)?;
    // Work on the primitive integer vector; unimodular inverses keep it primitive.
    let mut v = x.to_integer_vector();
    let mut word = Word::empty();
    let mut points = vec![x.clone()];
    for _ in 0..steps {
        let (a, next) =
            branch_of_vector(ifs, &v).ok_or_else(|| Error::InvalidPoint(format!("{x} leaves the cylinders")))?;
        word.push(a);
        v = next;
        points.push(SimplexPoint::from_integer_vector(&v)?);
    }
    Ok((word, points))
}

pub fn cylinder_of_word(ifs: &Ifs, w: &Word) -> Result<IntMatrix> {
    w.check_alphabet(ifs.len())?;
    let mut acc = IntMatrix::identity(ifs.dim + 1)?;
    for &d in w.digits() {
        acc = &acc * ifs.branch(d);
    }
    Ok(acc)
}

/// Finite-depth bracket for the coding map: the cylinder of a word.
#[derive(Debug, Clone, Serialize)]
pub struct Bracket {
    pub word: Word,
    pub matrix: IntMatrix,
    pub vertices: Vec<SimplexPoint>,
    #[serde(serialize_with = "crate::ser::rational")]
    pub diameter: BigRational,
}

impl Bracket {
    /// Exact membership `x ∈ A_w[Δ]`.
    pub fn contains(&self, x: &SimplexPoint) -> bool {
        let inv = self.matrix.inverse_unimodular().expect("Σ matrices are unimodular");
        inv.apply(&x.to_integer_vector())
            .map(|v| v.iter().all(|c| !c.is_negative()))
            .unwrap_or(false)
    }
}

pub fn pi_approx(ifs: &Ifs, w: &Word) -> Result<Bracket> {
    let matrix = cylinder_of_word(ifs, w)?;
    Ok(Bracket {
        word: w.clone(),
        vertices: cylinder_vertices(&matrix),
        diameter: cylinder_diameter(&matrix),
        matrix,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    fn of(det: &BigInt) -> Self {
        if det.is_positive() {
            Orientation::Preserving
        } else {
            Orientation::Reversing
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Orientation::Preserving => 1,
            Orientation::Reversing => -1,
        }
    }
}

/// Orientation of the two branches; the inverse branches of the Gauss map share the signs.
pub fn orientation(pair: &SplitPair) -> (Orientation, Orientation) {
    (Orientation::of(&pair.a0.det()), Orientation::of(&pair.a1.det()))
}

/// Continuity of the Gauss map across the common face `Δ₀ ∩ Δ₁`.
///
/// The face is spanned by `e₀+e₁` and `e₂,…,e_n`. Both inverse branches map
/// these primitive vectors to primitive nonnegative vectors, so projective
/// agreement is the same as exact agreement, and agreement on a spanning set
/// is agreement on the whole face.
pub fn is_continuous(pair: &SplitPair) -> bool {
    let size = pair.dim + 1;
    let inv0 = pair.a0.inverse_unimodular().expect("unimodular");
    let inv1 = pair.a1.inverse_unimodular().expect("unimodular");
    let mut face = Vec::with_capacity(size - 1);
    let mut mid = vec![BigInt::zero(); size];
    mid[0] = BigInt::one();
    mid[1] = BigInt::one();
    face.push(mid);
    for k in 2..size {
        let mut e = vec![BigInt::zero(); size];
        e[k] = BigInt::one();
        face.push(e);
    }
    face.iter()
        .all(|u| inv0.apply(u).expect("orders agree") == inv1.apply(u).expect("orders agree"))
}

/// `y ↦ (1-y, y)`: the unit interval as the 1-simplex.
pub fn unit_interval_embed(y: &BigRational) -> Result<SimplexPoint> {
    SimplexPoint::new(vec![BigRational::one() - y, y.clone()])
}

/// Inverse of [`unit_interval_embed`].
pub fn unit_interval_project(p: &SimplexPoint) -> Result<BigRational> {
    if p.dim() != 1 {
        return Err(Error::Dimension {
            n: p.dim(),
            reason: "the unit interval is the 1-simplex",
        });
    }
    Ok(p.coords()[1].clone())
}
