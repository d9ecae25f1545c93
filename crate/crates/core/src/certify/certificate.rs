//! Finite, re-checkable witnesses of non-contractivity.
//!
//! * `C1`: one word looping at two distinct nodes. `A_v` fixes two vertices,
//!   both of which stay in every `A_v^t[Δ]`.
//! * `C2`: two incomparable words looping at the same node. Their cylinders
//!   have disjoint interiors and share a fixed vertex, which forces some
//!   product of them to have spectral radius above 1.
//! * `C3`: one word whose matrix fixes a vertex and has spectral radius above 1;
//!   the Perron direction and the fixed vertex are two distinct points in every
//!   `A_v^t[Δ]`.
//! * `C4`: one word whose matrix has a disconnected support graph; each closed
//!   coordinate face carries its own invariant point.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::graph::IncompleteGraph;
use crate::ifs::{Ifs, SplitPair, Word};
use crate::linalg::{expanding_component, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CertificateKind {
    C1,
    C2,
    C3,
    C4,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Justification {
    /// The two vertices fixed by `A_v`.
    TwoFixedVertices { vertices: [usize; 2] },
    /// Both words fix `vertex`; they split after `common_prefix` digits.
    SharedFixedVertex { vertex: usize, common_prefix: usize },
    /// `vertex` is fixed and `component` is a strongly connected block that is
    /// not a single cycle of 1s.
    FixedVertexAndExpansion {
        vertex: usize,
        component: Vec<usize>,
        block_edges: usize,
        block_max_entry: String,
    },
    /// Connected components of the undirected support graph.
    Disconnected { parts: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub words: Vec<Word>,
    pub nodes: Vec<usize>,
    pub justification: Justification,
}

impl Certificate {
    /// Longest witness word.
    pub fn word_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Re-checks the certificate against `ifs` from scratch.
    pub fn reverify(&self, ifs: &Ifs) -> Result<(), String> {
        for w in &self.words {
            w.check_alphabet(ifs.len()).map_err(|e| e.to_string())?;
            if w.is_empty() {
                return Err("empty witness word".into());
            }
        }
        let expected_nodes: Vec<usize> = match &self.justification {
            Justification::TwoFixedVertices { vertices } => vertices.to_vec(),
            Justification::SharedFixedVertex { vertex, .. } | Justification::FixedVertexAndExpansion { vertex, .. } => {
                vec![*vertex]
            }
            Justification::Disconnected { .. } => Vec::new(),
        };
        if self.nodes != expected_nodes {
            return Err("listed nodes disagree with the justification".into());
        }
        let product = |w: &Word| {
            w.digits()
                .iter()
                .fold(IntMatrix::identity(ifs.dim() + 1).expect("order ≥ 2"), |acc, &d| {
                    &acc * ifs.branch(d)
                })
        };
        match (&self.kind, &self.justification) {
            (CertificateKind::C1, Justification::TwoFixedVertices { vertices: [i, j] }) => {
                let [w] = self.words.as_slice() else {
                    return Err("C1 needs one word".into());
                };
                if i == j {
                    return Err("C1 vertices must be distinct".into());
                }
                let a = product(w);
                for &k in [i, j] {
                    if !column_is_unit(&a, k) {
                        return Err(format!("A_{w} does not fix e_{k}"));
                    }
                }
                Ok(())
            }
            (CertificateKind::C2, Justification::SharedFixedVertex { vertex, common_prefix }) => {
                let [v, w] = self.words.as_slice() else {
                    return Err("C2 needs two words".into());
                };
                if !v.is_incomparable(w) {
                    return Err(format!("{v} and {w} are comparable"));
                }
                // After the common prefix the words continue with distinct
                // digits, so the cylinders sit in distinct first-level cylinders
                // of the prefix cylinder.
                let p = v.common_prefix_len(w);
                if p != *common_prefix || v.digits()[p] == w.digits()[p] {
                    return Err("common prefix mismatch".into());
                }
                for u in [v, w] {
                    if !column_is_unit(&product(u), *vertex) {
                        return Err(format!("A_{u} does not fix e_{vertex}"));
                    }
                }
                Ok(())
            }
            (CertificateKind::C3, Justification::FixedVertexAndExpansion { vertex, component, .. }) => {
                let [w] = self.words.as_slice() else {
                    return Err("C3 needs one word".into());
                };
                let a = product(w);
                if !column_is_unit(&a, *vertex) {
                    return Err(format!("A_{w} does not fix e_{vertex}"));
                }
                check_expanding_block(&a, component)
            }
            (CertificateKind::C4, Justification::Disconnected { parts }) => {
                let [w] = self.words.as_slice() else {
                    return Err("C4 needs one word".into());
                };
                check_disconnection(&product(w), parts)
            }
            _ => Err("certificate kind and justification disagree".into()),
        }
    }
}

/// Column `k` equals `e_k`.
fn column_is_unit(a: &IntMatrix, k: usize) -> bool {
    (0..a.order()).all(|i| {
        let e = a.get(i, k);
        if i == k {
            e.is_one()
        } else {
            e.is_zero()
        }
    })
}

/// `component` is strongly connected in the support digraph of `a`, closed
/// under mutual reachability, and its block is not a single cycle of 1s.
fn check_expanding_block(a: &IntMatrix, component: &[usize]) -> Result<(), String> {
    let size = a.order();
    if component.is_empty() || component.iter().any(|&k| k >= size) {
        return Err("bad component".into());
    }
    let reach = |from: usize, forward: bool| {
        let mut seen = vec![false; size];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for w in 0..size {
                let e = if forward { a.get(w, u) } else { a.get(u, w) };
                if e.is_positive() && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    };
    let root = component[0];
    let fwd = reach(root, true);
    let bwd = reach(root, false);
    let scc: BTreeSet<usize> = (0..size).filter(|&k| fwd[k] && bwd[k]).collect();
    if scc != component.iter().copied().collect() {
        return Err("recorded component is not a strongly connected component".into());
    }
    let mut edges = 0;
    let mut big = false;
    for &i in component {
        for &j in component {
            let e = a.get(i, j);
            if e.is_positive() {
                edges += 1;
                big |= !e.is_one();
            }
        }
    }
    if edges == 0 {
        return Err("component carries no cycle".into());
    }
    if !big && edges == component.len() {
        return Err("block is a cyclic permutation, spectral radius 1".into());
    }
    Ok(())
}

fn check_disconnection(a: &IntMatrix, parts: &[Vec<usize>]) -> Result<(), String> {
    if parts.len() < 2 || parts.iter().any(Vec::is_empty) {
        return Err("need at least two nonempty parts".into());
    }
    let size = a.order();
    let mut part_of = vec![usize::MAX; size];
    for (p, nodes) in parts.iter().enumerate() {
        for &k in nodes {
            if k >= size || part_of[k] != usize::MAX {
                return Err("parts do not partition the nodes".into());
            }
            part_of[k] = p;
        }
    }
    if part_of.contains(&usize::MAX) {
        return Err("parts do not cover the nodes".into());
    }
    for i in 0..size {
        for j in 0..size {
            if !a.get(i, j).is_zero() && part_of[i] != part_of[j] {
                return Err(format!("entry ({i},{j}) links two parts"));
            }
        }
    }
    Ok(())
}

/// Shortest, then lexicographically least, word looping at two distinct nodes.
pub fn find_c1(g: &IncompleteGraph, max_len: usize) -> Option<Certificate> {
    for len in 1..=max_len {
        for v in Word::all_of_length(2, len) {
            let loops = g.loops_for_word(&v);
            if loops.len() >= 2 {
                let mut it = loops.into_iter();
                let (i, j) = (it.next()?, it.next()?);
                return Some(Certificate {
                    kind: CertificateKind::C1,
                    words: vec![v],
                    nodes: vec![i, j],
                    justification: Justification::TwoFixedVertices { vertices: [i, j] },
                });
            }
        }
    }
    None
}

/// Incomparable loop words at a common node, minimizing total length, then
/// the word pair lexicographically, then the node.
pub fn find_c2(g: &IncompleteGraph, max_len: usize) -> Option<Certificate> {
    let loops: Vec<Vec<Vec<Word>>> = (0..g.node_count()).map(|i| g.loop_words_at(i, max_len)).collect();
    for total in 2..=2 * max_len {
        let mut best: Option<(Word, Word, usize)> = None;
        for (node, by_len) in loops.iter().enumerate() {
            for lv in 1..total {
                let lw = total - lv;
                if lv > max_len || lw > max_len {
                    continue;
                }
                for v in &by_len[lv] {
                    for w in &by_len[lw] {
                        if v >= w || !v.is_incomparable(w) {
                            continue;
                        }
                        let cand = (v.clone(), w.clone(), node);
                        if best.as_ref().is_none_or(|b| cand < *b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        if let Some((v, w, node)) = best {
            let p = v.common_prefix_len(&w);
            return Some(Certificate {
                kind: CertificateKind::C2,
                words: vec![v, w],
                nodes: vec![node],
                justification: Justification::SharedFixedVertex {
                    vertex: node,
                    common_prefix: p,
                },
            });
        }
    }
    None
}

/// Words of length `1..=max_len` with their matrices, by length then lexicographically.
fn words_with_matrices(ifs: &Ifs, max_len: usize) -> impl Iterator<Item = (Word, IntMatrix)> + '_ {
    let mut level: Vec<(Word, IntMatrix)> =
        vec![(Word::empty(), IntMatrix::identity(ifs.dim() + 1).expect("order ≥ 2"))];
    let mut depth = 0;
    std::iter::from_fn(move || {
        if depth == max_len {
            return None;
        }
        depth += 1;
        level = level
            .iter()
            .flat_map(|(w, a)| {
                (0..ifs.len() as u8).map(move |d| {
                    let mut w2 = w.clone();
                    w2.push(d);
                    (w2, a * ifs.branch(d))
                })
            })
            .collect();
        Some(level.clone())
    })
    .flatten()
}

/// Shortest word whose matrix fixes a vertex and has spectral radius above 1.
pub fn find_c3_ifs(ifs: &Ifs, max_len: usize) -> Option<Certificate> {
    words_with_matrices(ifs, max_len).find_map(|(w, a)| {
        let vertex = *a.fixed_vertices().iter().next()?;
        let comp = expanding_component(&a)?;
        let mut block_edges = 0;
        let mut block_max = num_bigint::BigInt::zero();
        for &i in &comp.nodes {
            for &j in &comp.nodes {
                let e = a.get(i, j);
                if e.is_positive() {
                    block_edges += 1;
                    block_max = block_max.max(e.clone());
                }
            }
        }
        Some(Certificate {
            kind: CertificateKind::C3,
            words: vec![w],
            nodes: vec![vertex],
            justification: Justification::FixedVertexAndExpansion {
                vertex,
                component: comp.nodes,
                block_edges,
                block_max_entry: block_max.to_string(),
            },
        })
    })
}

/// Shortest word whose matrix has a disconnected support graph.
pub fn find_c4_ifs(ifs: &Ifs, max_len: usize) -> Option<Certificate> {
    words_with_matrices(ifs, max_len).find_map(|(w, a)| {
        if !a.is_graph_disconnected() {
            return None;
        }
        Some(Certificate {
            kind: CertificateKind::C4,
            words: vec![w],
            nodes: Vec::new(),
            justification: Justification::Disconnected {
                parts: support_components(&a),
            },
        })
    })
}

fn support_components(a: &IntMatrix) -> Vec<Vec<usize>> {
    let size = a.order();
    let mut label = vec![usize::MAX; size];
    let mut parts = Vec::new();
    for s in 0..size {
        if label[s] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut part = vec![s];
        label[s] = id;
        let mut k = 0;
        while k < part.len() {
            let u = part[k];
            k += 1;
            for w in 0..size {
                if label[w] == usize::MAX && (!a.get(u, w).is_zero() || !a.get(w, u).is_zero()) {
                    label[w] = id;
                    part.push(w);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

pub fn find_c3(pair: &SplitPair, max_len: usize) -> Option<Certificate> {
    find_c3_ifs(&pair.ifs(), max_len)
}

pub fn find_c4(pair: &SplitPair, max_len: usize) -> Option<Certificate> {
    find_c4_ifs(&pair.ifs(), max_len)
}

/// First certificate in the order C1, C2, C4, C3, each searched by increasing word length.
pub fn certify_noncontractive(pair: &SplitPair, max_len: usize) -> Option<Certificate> {
    let g = IncompleteGraph::new(pair);
    find_c1(&g, max_len)
        .or_else(|| find_c2(&g, max_len))
        .or_else(|| find_c4(pair, max_len))
        .or_else(|| find_c3(pair, max_len))
}

/// Matrix-level search for systems with any number of branches (C4, then C3).
pub fn certify_ifs(ifs: &Ifs, max_len: usize) -> Option<Certificate> {
    find_c4_ifs(ifs, max_len).or_else(|| find_c3_ifs(ifs, max_len))
}
