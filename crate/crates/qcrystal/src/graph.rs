//! Finite crystal graphs: operator closure, labeled edges, and decomposition
//! into connected components.

use std::collections::{BTreeSet, VecDeque};
use std::collections::BTreeMap;

use thiserror::Error;

use crate::weyl::QueerCrystal;
use crate::word::{CrystalElement, OperatorLabel};

/// Closure was refused because it grew past the configured vertex budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("crystal closure exceeded the vertex budget of {budget}")]
pub struct BudgetExceeded {
    pub budget: usize,
}

/// A finite directed graph with edges labeled by operator indices.  Vertices
/// are kept sorted in their canonical order; only lowering edges are stored,
/// the raising edges being their reverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph<V: CrystalElement> {
    rank: u8,
    vertices: Vec<V>,
    f_edges: BTreeMap<(usize, OperatorLabel), usize>,
}

/// One connected component together with its unique highest weight vertex.
#[derive(Debug, Clone)]
pub struct Component<V: CrystalElement> {
    pub highest: V,
    pub graph: CrystalGraph<V>,
}

impl<V: CrystalElement> CrystalGraph<V> {
    /// Close the seed set under the generating operators (both directions)
    /// and record their lowering edges.  The conjugated odd operators move
    /// along existing even and odd paths, so the closure is also closed
    /// under them.  With a budget, gives up as soon as more vertices than
    /// allowed are seen.
    pub fn closure<I>(rank: u8, seeds: I, budget: Option<usize>) -> Result<Self, BudgetExceeded>
    where
        I: IntoIterator<Item = V>,
    {
        let labels = OperatorLabel::generators(rank);
        let mut seen: BTreeSet<V> = BTreeSet::new();
        let mut queue: VecDeque<V> = VecDeque::new();
        for seed in seeds {
            assert_eq!(seed.rank(), rank, "seed rank mismatch");
            if seen.insert(seed.clone()) {
                queue.push_back(seed);
            }
        }
        if let Some(max) = budget {
            if seen.len() > max {
                return Err(BudgetExceeded { budget: max });
            }
        }
        while let Some(v) = queue.pop_front() {
            for &op in &labels {
                for next in [v.apply_f(op), v.apply_e(op)].into_iter().flatten() {
                    if !seen.contains(&next) {
                        if let Some(max) = budget {
                            if seen.len() >= max {
                                return Err(BudgetExceeded { budget: max });
                            }
                        }
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        let vertices: Vec<V> = seen.into_iter().collect();
        let mut f_edges = BTreeMap::new();
        for (idx, v) in vertices.iter().enumerate() {
            for &op in &labels {
                if let Some(image) = v.apply_f(op) {
                    let target = vertices
                        .binary_search(&image)
                        .expect("closure left an operator image outside the vertex set");
                    f_edges.insert((idx, op), target);
                }
            }
        }
        Ok(CrystalGraph {
            rank,
            vertices,
            f_edges,
        })
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex(&self, idx: usize) -> &V {
        &self.vertices[idx]
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Target of the lowering edge labeled `op` out of vertex `idx`.
    pub fn f_target(&self, idx: usize, op: OperatorLabel) -> Option<usize> {
        self.f_edges.get(&(idx, op)).copied()
    }

    /// Source of the lowering edge labeled `op` into vertex `idx`, i.e. the
    /// raising edge.
    pub fn e_target(&self, idx: usize, op: OperatorLabel) -> Option<usize> {
        self.f_edges
            .iter()
            .find(|&(&(_, edge_op), &to)| edge_op == op && to == idx)
            .map(|(&(from, _), _)| from)
    }

    /// All lowering edges `(from, label, to)` in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, OperatorLabel, usize)> + '_ {
        self.f_edges.iter().map(|(&(from, op), &to)| (from, op, to))
    }

    pub fn edge_count(&self) -> usize {
        self.f_edges.len()
    }

    /// Indices of vertices killed by every raising operator.
    pub fn highest_vertex_indices(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_highest_weight())
            .map(|(idx, _)| idx)
            .collect()
    }

    /// Indices of vertices whose image under `S_{w0}` is highest.
    pub fn lowest_vertex_indices(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_lowest_weight())
            .map(|(idx, _)| idx)
            .collect()
    }

    /// Split into weakly connected components (all labels, both directions).
    /// Each component must contain exactly one highest weight vertex; a
    /// violation is a bug in the operators and panics.  Components are sorted
    /// by their highest vertex.
    pub fn components(&self) -> Vec<Component<V>> {
        let n = self.vertices.len();
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (&(from, _), &to) in &self.f_edges {
            adjacency[from].push(to);
            adjacency[to].push(from);
        }
        let mut assigned = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            let mut member_ids = vec![start];
            assigned[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &adjacency[v] {
                    if !assigned[u] {
                        assigned[u] = true;
                        member_ids.push(u);
                        queue.push_back(u);
                    }
                }
            }
            member_ids.sort_unstable();
            let members: Vec<V> = member_ids.iter().map(|&k| self.vertices[k].clone()).collect();
            let highest: Vec<&V> = members.iter().filter(|v| v.is_highest_weight()).collect();
            assert_eq!(
                highest.len(),
                1,
                "component must contain exactly one highest weight vertex, found {}",
                highest.len()
            );
            let highest = highest[0].clone();
            // Re-index the stored edges into the component's own order.
            let mut f_edges = BTreeMap::new();
            for (local_from, &global_from) in member_ids.iter().enumerate() {
                for (&(from, op), &to) in self.f_edges.range((global_from, OperatorLabel::Even(0))..) {
                    if from != global_from {
                        break;
                    }
                    let local_to = member_ids
                        .binary_search(&to)
                        .expect("edge leaves its component");
                    f_edges.insert((local_from, op), local_to);
                }
            }
            components.push(Component {
                highest,
                graph: CrystalGraph {
                    rank: self.rank,
                    vertices: members,
                    f_edges,
                },
            });
        }
        components.sort_by(|a, b| a.highest.cmp(&b.highest));
        components
    }
}
