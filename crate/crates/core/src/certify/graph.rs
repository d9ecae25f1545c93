use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::ifs::{SplitPair, Word};

/// Two-colored incomplete incidence graph of a split pair.
///
/// For color `c`, an edge `(i, j)` is stored whenever `A_c e_j = e_i` and `j`
/// is not the duplicated column `h_c`. Paths are followed from `i` to `j`, so
/// a path spelled by `v` from `i` to `j` means `A_v e_j = e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncompleteGraph {
    pub n: usize,
    pub zero_edges: BTreeSet<(usize, usize)>,
    pub one_edges: BTreeSet<(usize, usize)>,
    pub h0: usize,
    pub h1: usize,
    #[serde(skip)]
    next: [Vec<Option<usize>>; 2],
    #[serde(skip)]
    prev: [Vec<Option<usize>>; 2],
}

impl IncompleteGraph {
    pub fn new(pair: &SplitPair) -> Self {
        let size = pair.dim() + 1;
        let mut next = [vec![None; size], vec![None; size]];
        let mut prev = [vec![None; size], vec![None; size]];
        let mut edges = [BTreeSet::new(), BTreeSet::new()];
        let mut hs = [0; 2];
        for c in 0..2u8 {
            let a = pair.branch(c);
            let ci = c as usize;
            for j in 0..size {
                let ones: Vec<usize> = (0..size).filter(|&i| a.get(i, j).is_one()).collect();
                debug_assert!((0..size).all(|i| a.get(i, j).is_zero() || a.get(i, j).is_one()));
                if ones.len() == 2 {
                    hs[ci] = j;
                    continue;
                }
                let i = ones[0];
                edges[ci].insert((i, j));
                next[ci][i] = Some(j);
                prev[ci][j] = Some(i);
            }
        }
        let [zero_edges, one_edges] = edges;
        Self {
            n: pair.dim(),
            zero_edges,
            one_edges,
            h0: hs[0],
            h1: hs[1],
            next,
            prev,
        }
    }

    pub fn node_count(&self) -> usize {
        self.n + 1
    }

    pub fn h(&self, color: u8) -> usize {
        if color == 0 {
            self.h0
        } else {
            self.h1
        }
    }

    /// The unique `color`-edge leaving `i`, if any.
    pub fn next(&self, color: u8, i: usize) -> Option<usize> {
        self.next[color as usize][i]
    }

    /// The unique `color`-edge entering `j`, if any.
    pub fn prev(&self, color: u8, j: usize) -> Option<usize> {
        self.prev[color as usize][j]
    }

    /// End node of the path spelled by `v` from `i`.
    pub fn walk(&self, i: usize, v: &Word) -> Option<usize> {
        v.digits().iter().try_fold(i, |node, &c| self.next(c, node))
    }

    /// Whether the path `i →v j` occurs.
    pub fn occurs(&self, i: usize, v: &Word, j: usize) -> bool {
        self.walk(i, v) == Some(j)
    }

    /// Nodes carrying a loop for `v`.
    pub fn loops_for_word(&self, v: &Word) -> BTreeSet<usize> {
        (0..self.node_count()).filter(|&i| self.occurs(i, v, i)).collect()
    }

    /// Every loop word of length `1..=max_len` at node `i`, grouped by length.
    pub fn loop_words_at(&self, i: usize, max_len: usize) -> Vec<Vec<Word>> {
        let mut by_len = vec![Vec::new(); max_len + 1];
        let mut stack = vec![(i, Word::empty())];
        while let Some((node, w)) = stack.pop() {
            if !w.is_empty() && node == i {
                by_len[w.len()].push(w.clone());
            }
            if w.len() == max_len {
                continue;
            }
            for c in 0..2u8 {
                if let Some(nx) = self.next(c, node) {
                    let mut w2 = w.clone();
                    w2.push(c);
                    stack.push((nx, w2));
                }
            }
        }
        for ws in &mut by_len {
            ws.sort();
        }
        by_len
    }

    /// Edges as `(color, from, to)` in a fixed order.
    pub fn colored_edges(&self) -> Vec<(u8, usize, usize)> {
        self.zero_edges
            .iter()
            .map(|&(i, j)| (0, i, j))
            .chain(self.one_edges.iter().map(|&(i, j)| (1, i, j)))
            .collect()
    }
}

pub fn incomplete_graph(pair: &SplitPair) -> IncompleteGraph {
    IncompleteGraph::new(pair)
}
