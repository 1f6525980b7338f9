//! Exact solvers by breadth-first search over the reconfiguration graph.
//!
//! Nodes are vertex subsets encoded as `u64` masks. Edges are never
//! materialized: the neighbors of a node are the masks obtained by toggling
//! one bit that are again valid (dominating set or vertex cover) and within
//! the size bound.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tar::{Instance, Move, Solution};

pub const DEFAULT_CAP: usize = 20;

/// A vertex cover reconfiguration instance `(G, k, s, C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcrInstance {
    pub graph: Graph,
    pub k: usize,
    pub s: usize,
    pub start: VertexSet,
}

impl VcrInstance {
    pub fn new(graph: Graph, k: usize, s: usize, start: VertexSet) -> Result<Self> {
        graph.check_set(&start)?;
        if !graph.is_vertex_cover(&start) {
            return Err(Error::NotVertexCover);
        }
        if start.len() > k {
            return Err(Error::StartTooLarge { size: start.len(), k });
        }
        Ok(VcrInstance { graph, k, s, start })
    }
}

/// Exhaustive solver with a guard on the number of vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap: cap.min(63) }
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n > self.cap.min(63) {
            Err(Error::CapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Shortest TAR(k) witness from the start to some dominating set of size
    /// at most `s`. Among targets at minimum distance the smallest mask wins.
    pub fn solve(&self, inst: &Instance) -> Result<Solution> {
        self.guard(inst.n())?;
        let space = StateSpace::dominating(&inst.graph, inst.k);
        Ok(space.search(&inst.start, inst.s))
    }

    /// Every dominating set reachable from the start under TAR(k).
    pub fn reachable_sets(&self, inst: &Instance) -> Result<BTreeSet<VertexSet>> {
        self.guard(inst.n())?;
        let space = StateSpace::dominating(&inst.graph, inst.k);
        Ok(space.closure(inst.start.to_mask()).into_iter().map(VertexSet::from_mask).collect())
    }

    pub fn solve_vcr(&self, inst: &VcrInstance) -> Result<Solution> {
        self.guard(inst.graph.n())?;
        let space = StateSpace::vertex_cover(&inst.graph, inst.k);
        Ok(space.search(&inst.start, inst.s))
    }
}

pub fn oracle_solve(inst: &Instance) -> Result<Solution> {
    Oracle::default().solve(inst)
}

pub fn reachable_sets(inst: &Instance) -> Result<BTreeSet<VertexSet>> {
    Oracle::default().reachable_sets(inst)
}

pub fn vcr_oracle_solve(inst: &VcrInstance) -> Result<Solution> {
    Oracle::default().solve_vcr(inst)
}

enum Validity {
    /// closed neighborhood masks; valid iff every one meets the set
    Dominating(Vec<u64>),
    /// edge masks; valid iff every one meets the set
    Cover(Vec<u64>),
}

struct StateSpace {
    n: usize,
    k: usize,
    validity: Validity,
}

impl StateSpace {
    fn dominating(g: &Graph, k: usize) -> Self {
        StateSpace { n: g.n(), k, validity: Validity::Dominating(g.closed_masks()) }
    }

    fn vertex_cover(g: &Graph, k: usize) -> Self {
        let edges = g.edges().map(|(u, v)| 1u64 << u | 1u64 << v).collect();
        StateSpace { n: g.n(), k, validity: Validity::Cover(edges) }
    }

    fn valid(&self, mask: u64) -> bool {
        if mask.count_ones() as usize > self.k {
            return false;
        }
        let masks = match &self.validity {
            Validity::Dominating(m) | Validity::Cover(m) => m,
        };
        masks.iter().all(|&m| m & mask != 0)
    }

    fn neighbors(&self, mask: u64) -> impl Iterator<Item = (u64, Move)> + '_ {
        (0..self.n).filter_map(move |v| {
            let next = mask ^ (1u64 << v);
            if !self.valid(next) {
                return None;
            }
            let m = if mask >> v & 1 == 1 { Move::remove(v) } else { Move::add(v) };
            Some((next, m))
        })
    }

    fn search(&self, start: &VertexSet, s: usize) -> Solution {
        let start = start.to_mask();
        let mut parent: HashMap<u64, Option<(u64, Move)>> = HashMap::new();
        parent.insert(start, None);
        let mut layer = vec![start];
        while !layer.is_empty() {
            if let Some(&target) = layer.iter().filter(|m| m.count_ones() as usize <= s).min() {
                let mut moves = Vec::new();
                let mut cur = target;
                while let Some(&Some((prev, m))) = parent.get(&cur) {
                    moves.push(m);
                    cur = prev;
                }
                moves.reverse();
                return Solution::yes(VertexSet::from_mask(target), Some(moves.into()));
            }
            let mut next_layer = Vec::new();
            for &mask in &layer {
                for (next, m) in self.neighbors(mask) {
                    if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                        e.insert(Some((mask, m)));
                        next_layer.push(next);
                    }
                }
            }
            layer = next_layer;
        }
        Solution::no()
    }

    fn closure(&self, start: u64) -> Vec<u64> {
        let mut seen = std::collections::HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(mask) = stack.pop() {
            for (next, _) in self.neighbors(mask) {
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }
}

/// Solution built from an oracle run on a relabeled subinstance: witness and
/// target are mapped back through `original`.
pub(crate) fn relabel(sol: Solution, original: &[usize]) -> Solution {
    Solution {
        verdict: sol.verdict,
        target: sol.target.map(|t| t.iter().map(|v| original[v]).collect()),
        witness: sol.witness.map(|w| w.map_vertices(|v| original[v])),
    }
}
