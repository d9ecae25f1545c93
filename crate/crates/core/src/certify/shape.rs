//! Classification of the incomplete graph into parabolic/hyperbolic branch shapes.

use std::fmt;

use serde::Serialize;

use super::graph::IncompleteGraph;
use crate::error::Result;
use crate::ifs::SplitPair;
use crate::symmetry::{act_on_matrices, Permutation, SymmetryElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchShape {
    /// A chain through all nodes but one, plus an isolated one-node loop.
    Parabolic,
    /// A single chain through every node.
    Hyperbolic,
}

impl BranchShape {
    fn letter(self) -> char {
        match self {
            BranchShape::Parabolic => 'p',
            BranchShape::Hyperbolic => 'h',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    /// e.g. `(0p,1h)`.
    pub label: String,
    pub zero: BranchShape,
    pub one: BranchShape,
    /// Conjugating permutation in `S_{n-1}` applied before reading the chains.
    pub relabeling: Permutation,
    /// 0-chain from its end node `1` up to `h₀`, after relabeling.
    pub zero_chain: Vec<usize>,
    /// 1-chain from its end node `0` up to `h₁`, after relabeling.
    pub one_chain: Vec<usize>,
    /// Order `k₂, …, k_n` in which the 1-chain visits the nodes `2..n`.
    pub k_order: Vec<usize>,
    /// Position of `0` in a hyperbolic 0-chain (`1` sits at position 0).
    pub zero_position: Option<usize>,
    /// Position of `1` in a hyperbolic 1-chain.
    pub one_position: Option<usize>,
    /// 1-edges `i → j` between nodes of `2..n` with `i < j`.
    pub backtracks: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Shape {
    Standard(ShapeReport),
    Nonstandard { reason: String },
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Standard(r) => f.write_str(&r.label),
            Shape::Nonstandard { reason } => write!(f, "nonstandard ({reason})"),
        }
    }
}

/// Chain ending at `end` (the node with no outgoing `color`-edge), read
/// backwards through fathers, and the kind of the leftover nodes.
fn decompose(g: &IncompleteGraph, color: u8) -> std::result::Result<(Vec<usize>, BranchShape), String> {
    let end = if color == 0 { 1 } else { 0 };
    let size = g.node_count();
    if g.next(color, end).is_some() {
        return Err(format!("node {end} has an outgoing {color}-edge"));
    }
    if g.h(color) == end {
        return Err(format!("duplicated column of color {color} is node {end}"));
    }
    let mut chain = vec![end];
    let mut seen = vec![false; size];
    seen[end] = true;
    let mut cur = end;
    while let Some(p) = g.prev(color, cur) {
        if seen[p] {
            return Err(format!("{color}-chain closes into a cycle"));
        }
        seen[p] = true;
        chain.push(p);
        cur = p;
    }
    let rest: Vec<usize> = (0..size).filter(|&k| !seen[k]).collect();
    match rest.as_slice() {
        [] => Ok((chain, BranchShape::Hyperbolic)),
        [k] if *k == 1 - end && g.next(color, *k) == Some(*k) => Ok((chain, BranchShape::Parabolic)),
        [k] => Err(format!("isolated {color}-loop at node {k}")),
        _ => Err(format!("{} nodes off the {color}-chain", rest.len())),
    }
}

/// Relabels nodes `2..n` so that they appear in increasing order along the
/// 0-chain, then reads off both branch shapes.
pub fn shape(pair: &SplitPair) -> Result<Shape> {
    let g = IncompleteGraph::new(pair);
    let size = pair.dim() + 1;
    let (chain0, _) = match decompose(&g, 0) {
        Ok(c) => c,
        Err(reason) => return Ok(Shape::Nonstandard { reason }),
    };
    let mut images = vec![0, 1];
    images.resize(size, usize::MAX);
    let mut next_label = 2;
    for &k in &chain0 {
        if k >= 2 {
            images[k] = next_label;
            next_label += 1;
        }
    }
    if images.contains(&usize::MAX) {
        return Ok(Shape::Nonstandard {
            reason: "0-chain misses a node of 2..n".into(),
        });
    }
    let h = Permutation::new(images)?;
    let relabeled = act_on_matrices(&SymmetryElement::new(false, h.clone())?, pair)?;
    let g = IncompleteGraph::new(&relabeled);
    let (zero_chain, zero) = match decompose(&g, 0) {
        Ok(c) => c,
        Err(reason) => return Ok(Shape::Nonstandard { reason }),
    };
    let (one_chain, one) = match decompose(&g, 1) {
        Ok(c) => c,
        Err(reason) => return Ok(Shape::Nonstandard { reason }),
    };
    let k_order: Vec<usize> = one_chain.iter().copied().filter(|&k| k >= 2).collect();
    if k_order.len() != size - 2 {
        return Ok(Shape::Nonstandard {
            reason: "1-chain misses a node of 2..n".into(),
        });
    }
    let backtracks = g
        .one_edges
        .iter()
        .copied()
        .filter(|&(i, j)| i >= 2 && j >= 2 && i < j)
        .collect();
    let position = |chain: &[usize], node: usize, s: BranchShape| {
        (s == BranchShape::Hyperbolic).then(|| chain.iter().position(|&k| k == node).expect("node on chain"))
    };
    Ok(Shape::Standard(ShapeReport {
        label: format!("(0{},1{})", zero.letter(), one.letter()),
        zero,
        one,
        relabeling: h,
        zero_position: position(&zero_chain, 0, zero),
        one_position: position(&one_chain, 1, one),
        zero_chain,
        one_chain,
        k_order,
        backtracks,
    }))
}
