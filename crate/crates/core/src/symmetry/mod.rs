//! The symmetry group `S₂ × S_{n-1}` of the splitting along `⟨e₀, e₁⟩`, its
//! action on permutation pairs and matrix pairs, and orbit enumeration.

mod perm;

use serde::Serialize;

pub use perm::{factorial, Permutation};

use crate::error::{Error, Result};
use crate::ifs::{self, FareyVariant, SplitPair};

/// Element `(F^flip, H)` with `H` fixing `0` and `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetryElement {
    flip: bool,
    h: Permutation,
}

impl SymmetryElement {
    pub fn new(flip: bool, h: Permutation) -> Result<Self> {
        if h.size() < 2 || h.apply(0) != 0 || h.apply(1) != 1 {
            return Err(Error::InvalidPermutation(format!("{h} must fix 0 and 1")));
        }
        Ok(Self { flip, h })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            flip: false,
            h: Permutation::identity(size),
        }
    }

    pub fn flip(size: usize) -> Self {
        Self {
            flip: true,
            h: Permutation::identity(size),
        }
    }

    pub fn is_flip(&self) -> bool {
        self.flip
    }

    pub fn h(&self) -> &Permutation {
        &self.h
    }

    /// Group product `self · other` (act by `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            flip: self.flip ^ other.flip,
            h: self.h.compose(&other.h),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            flip: self.flip,
            h: self.h.inverse(),
        }
    }

    /// The permutation `F^flip ∘ H` by which the element conjugates.
    /// `F` and `H` have disjoint supports, so the order does not matter.
    pub fn conjugator(&self) -> Permutation {
        if self.flip {
            Permutation::flip(self.h.size()).compose(&self.h)
        } else {
            self.h.clone()
        }
    }

    /// All `2·(n-1)!` elements for permutations of `{0..size}`.
    pub fn all(size: usize) -> Vec<Self> {
        let tail = size.saturating_sub(2);
        let hs: Vec<Permutation> = Permutation::all(tail)
            .into_iter()
            .map(|p| {
                let mut images = vec![0, 1];
                images.extend(p.images().iter().map(|&i| i + 2));
                Permutation::new(images).expect("extension of a permutation")
            })
            .collect();
        let mut out = Vec::with_capacity(2 * hs.len());
        for flip in [false, true] {
            for h in &hs {
                out.push(Self { flip, h: h.clone() });
            }
        }
        out
    }
}

pub type PermPair = (Permutation, Permutation);

/// `(I,H)·(P₀,P₁) = (HP₀H⁻¹, HP₁H⁻¹)` and `(F,I)·(P₀,P₁) = (FP₁F⁻¹, FP₀F⁻¹)`.
pub fn act(g: &SymmetryElement, pair: &PermPair) -> PermPair {
    let c = g.conjugator();
    let (q0, q1) = (c.conjugate(&pair.0), c.conjugate(&pair.1));
    if g.flip {
        (q1, q0)
    } else {
        (q0, q1)
    }
}

/// The same action at matrix level; the result is again of the form `(N·P₀', L·P₁')`.
pub fn act_on_matrices(g: &SymmetryElement, pair: &SplitPair) -> Result<SplitPair> {
    let c = g.conjugator().matrix();
    let c_inv = c.transpose();
    let conj = |a: &crate::linalg::IntMatrix| &(&c * a) * &c_inv;
    let (b0, b1) = if g.flip {
        (conj(pair.a1()), conj(pair.a0()))
    } else {
        (conj(pair.a0()), conj(pair.a1()))
    };
    let dim = pair.dim();
    let p0 = Permutation::from_matrix(&(&ifs::n_matrix(dim).inverse_unimodular()? * &b0))?;
    let p1 = Permutation::from_matrix(&(&ifs::l_matrix(dim).inverse_unimodular()? * &b1))?;
    let out = ifs::pair_from_perms(dim, p0, p1)?;
    debug_assert_eq!((out.a0(), out.a1()), (&b0, &b1));
    Ok(out)
}

/// Lexicographically least member of the orbit.
pub fn canonical(pair: &PermPair) -> PermPair {
    SymmetryElement::all(pair.0.size())
        .iter()
        .map(|g| act(g, pair))
        .min()
        .expect("group is nonempty")
}

pub fn equivalent(p: &PermPair, q: &PermPair) -> bool {
    p.0.size() == q.0.size() && canonical(p) == canonical(q)
}

pub fn canonical_split_pair(pair: &SplitPair) -> PermPair {
    canonical(&(pair.p0().clone(), pair.p1().clone()))
}

/// Canonical forms of `(M₀,M₁)`, `(M₀,M₁F)`, `(M₀F,M₁)`.
pub fn farey_orbit_ids(dim: usize) -> Result<[PermPair; 3]> {
    let ids = ifs::farey_variants(dim)?.map(|p| canonical_split_pair(&p));
    Ok(ids)
}

pub fn farey_orbit_id(dim: usize, variant: FareyVariant) -> Result<PermPair> {
    Ok(canonical_split_pair(&ifs::farey_variant(dim, variant)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    pub p0: Permutation,
    pub p1: Permutation,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub n: usize,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitEntry>,
}

impl OrbitReport {
    pub fn representatives(&self) -> impl Iterator<Item = PermPair> + '_ {
        self.orbits.iter().map(|o| (o.p0.clone(), o.p1.clone()))
    }
}

pub const DEFAULT_MAX_ORBIT_DIM: usize = 5;

/// Full orbit decomposition of `S_{n+1}²`, representatives in increasing
/// lexicographic order.
///
/// Pairs are indexed by `rank(P₀)·(n+1)! + rank(P₁)`, which is increasing in
/// the lexicographic order of one-line forms, so the first unvisited index met
/// during the sweep is the canonical representative of its orbit.
pub fn enumerate_orbits(dim: usize, max_dim: usize) -> Result<OrbitReport> {
    if dim < 1 {
        return Err(Error::Dimension {
            n: dim,
            reason: "the simplex must have dimension at least 1",
        });
    }
    if dim > max_dim {
        return Err(Error::ResourceLimit(format!(
            "orbit enumeration for n={dim} exceeds the configured bound n≤{max_dim} \
             ({}² pairs)",
            factorial(dim + 1)
        )));
    }
    let size = dim + 1;
    let fact = factorial(size);
    let perms = Permutation::all(size);
    let group = SymmetryElement::all(size);
    let mut visited = vec![false; fact * fact];
    let mut orbits = Vec::new();
    for idx in 0..fact * fact {
        if visited[idx] {
            continue;
        }
        let rep = (perms[idx / fact].clone(), perms[idx % fact].clone());
        let mut members = 0;
        for g in &group {
            let (q0, q1) = act(g, &rep);
            let j = q0.rank() * fact + q1.rank();
            if !visited[j] {
                visited[j] = true;
                members += 1;
            }
        }
        orbits.push(OrbitEntry {
            p0: rep.0,
            p1: rep.1,
            size: members,
        });
    }
    Ok(OrbitReport {
        n: dim,
        orbit_count: orbits.len(),
        orbits,
    })
}
