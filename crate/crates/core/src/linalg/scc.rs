//! Strongly connected components of the incidence digraph of a nonnegative
//! matrix, with the per-component data needed for exact Perron–Frobenius
//! arguments (period, cyclic-permutation blocks).
//!
//! Edge convention: `j → i` whenever the entry in row `i`, column `j` is positive,
//! so that an edge follows the action `e_j ↦ e_i`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Sorted node indices.
    pub nodes: Vec<usize>,
    /// Single node without a self-loop.
    pub is_trivial: bool,
    /// The induced submatrix is the matrix of a single cycle.
    pub is_cyclic_permutation: bool,
    /// gcd of cycle lengths; `None` for trivial components.
    pub period: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SccDecomposition {
    /// Components in topological order of the condensation (sources first).
    pub components: Vec<Component>,
    /// Edges `(from, to)` between component indices.
    pub condensation_edges: Vec<(usize, usize)>,
}

impl SccDecomposition {
    pub fn component_of(&self, node: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.nodes.contains(&node))
            .expect("components partition the nodes")
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1 && !self.components[0].is_trivial
    }
}

fn successors(a: &IntMatrix) -> Vec<Vec<usize>> {
    let n = a.order();
    (0..n)
        .map(|j| (0..n).filter(|&i| a.get(i, j).is_positive()).collect())
        .collect()
}

/// Tarjan's algorithm, iterative.
fn tarjan(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut counter = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next];
                *next += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    out.push(comp);
                }
            }
        }
    }
    // Tarjan emits sinks first.
    out.reverse();
    out
}

fn period(nodes: &[usize], adj: &[Vec<usize>], member: &[bool]) -> usize {
    let start = nodes[0];
    let mut level = vec![usize::MAX; adj.len()];
    level[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut g = 0usize;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !member[v] {
                continue;
            }
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            } else {
                let diff = (level[u] + 1).abs_diff(level[v]);
                g = g.gcd(&diff);
            }
        }
    }
    g
}

pub fn scc(a: &IntMatrix) -> SccDecomposition {
    let n = a.order();
    let adj = successors(a);
    let comps = tarjan(&adj);
    let mut comp_id = vec![0; n];
    for (c, nodes) in comps.iter().enumerate() {
        for &v in nodes {
            comp_id[v] = c;
        }
    }
    let mut components = Vec::with_capacity(comps.len());
    for nodes in &comps {
        let member: Vec<bool> = (0..n).map(|v| comp_id[v] == comp_id[nodes[0]]).collect();
        let mut edges = 0usize;
        let mut all_ones = true;
        for &j in nodes {
            for &i in nodes {
                let e = a.get(i, j);
                if e.is_positive() {
                    edges += 1;
                    if !e.is_one() {
                        all_ones = false;
                    }
                }
            }
        }
        let is_trivial = nodes.len() == 1 && a.get(nodes[0], nodes[0]).is_zero();
        let (is_cyclic_permutation, period) = if is_trivial {
            (false, None)
        } else {
            (all_ones && edges == nodes.len(), Some(period(nodes, &adj, &member)))
        };
        components.push(Component {
            nodes: nodes.clone(),
            is_trivial,
            is_cyclic_permutation,
            period,
        });
    }
    let mut condensation_edges = Vec::new();
    for j in 0..n {
        for &i in &adj[j] {
            let e = (comp_id[j], comp_id[i]);
            if e.0 != e.1 && !condensation_edges.contains(&e) {
                condensation_edges.push(e);
            }
        }
    }
    condensation_edges.sort_unstable();
    SccDecomposition {
        components,
        condensation_edges,
    }
}

/// Exact test for spectral radius > 1 of a nonnegative integer matrix.
///
/// On an irreducible block, integrality and Perron–Frobenius force ρ ≥ 1 with
/// equality exactly for single-cycle permutation blocks; ρ is the maximum over
/// blocks.
pub fn spectral_radius_gt_one(a: &IntMatrix) -> bool {
    scc(a)
        .components
        .iter()
        .any(|c| !c.is_trivial && !c.is_cyclic_permutation)
}

/// The first nontrivial component whose block is not a cyclic permutation.
pub fn expanding_component(a: &IntMatrix) -> Option<Component> {
    scc(a)
        .components
        .into_iter()
        .find(|c| !c.is_trivial && !c.is_cyclic_permutation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn diagonal_gives_self_loop_components() {
        let d = scc(&IntMatrix::identity(2).unwrap());
        assert_eq!(d.components.len(), 2);
        for c in &d.components {
            assert!(!c.is_trivial);
            assert!(c.is_cyclic_permutation);
            assert_eq!(c.period, Some(1));
        }
        assert!(d.condensation_edges.is_empty());
    }

    #[test]
    fn nilpotent_is_trivial() {
        let a = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let d = scc(&a);
        assert_eq!(d.components.len(), 3);
        assert!(d.components.iter().all(|c| c.is_trivial && c.period.is_none()));
        // topological order: column 2 feeds row 1 feeds row 0, so 2 → 1 → 0
        assert_eq!(d.components[0].nodes, vec![2]);
        assert_eq!(d.condensation_edges, vec![(0, 1), (1, 2)]);
        assert!(!spectral_radius_gt_one(&a));
    }

    #[test]
    fn period_two_cycle() {
        let a = m(&[&[0, 1], &[1, 0]]);
        let d = scc(&a);
        assert!(d.is_irreducible());
        assert_eq!(d.components[0].period, Some(2));
        assert!(!spectral_radius_gt_one(&a));
    }

    #[test]
    fn doubled_entry_expands() {
        let a = m(&[&[2, 0], &[0, 1]]);
        assert!(spectral_radius_gt_one(&a));
        assert_eq!(expanding_component(&a).unwrap().nodes, vec![0]);
    }

    #[test]
    fn fixed_vertex_word_matrix() {
        let a01 = m(&[&[1, 0, 1], &[0, 0, 1], &[0, 1, 1]]);
        assert!(spectral_radius_gt_one(&a01));
        let d = scc(&a01);
        // e_0 is a sink-free fixed vertex; {1,2} form the expanding block
        assert_eq!(d.components.len(), 2);
        let c = expanding_component(&a01).unwrap();
        assert_eq!(c.nodes, vec![1, 2]);
        assert_eq!(c.period, Some(1));
    }
}
