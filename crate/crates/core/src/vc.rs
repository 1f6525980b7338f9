//! Solver parameterized by the vertex cover number τ.
//!
//! With a minimum vertex cover `X` and `I = V \ X` independent, each vertex of
//! `X \ D` is assigned one dominator from `D` (its special neighbor). Members
//! of `I ∩ D` that are nobody's special neighbor can then be dropped, possibly
//! after adding a neighbor from `X` to take over their own domination. The
//! survivors in `I` are special neighbors, at most one per vertex of `X \ D`,
//! so the final set has at most `τ` vertices (plus any isolated ones).

use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::{min_vertex_cover, Graph, VertexSet};
use crate::kernel::{finish, fpt_ds_solve_with};
use crate::oracle::Oracle;
use crate::preprocess::{classify, Classification};
use crate::tar::{Instance, Move, Solution, TarSequence};

/// Chosen dominator `t(v) ∈ N[v] ∩ D` for each `v ∈ X \ D`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpecialNeighborMap(BTreeMap<usize, usize>);

impl SpecialNeighborMap {
    pub fn get(&self, v: usize) -> Option<usize> {
        self.0.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `T`, the image of the map.
    pub fn specials(&self) -> VertexSet {
        self.0.values().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    fn forget(&mut self, v: usize) {
        self.0.remove(&v);
    }
}

/// Smallest-id dominator for every vertex of `X \ D`. `D` must dominate.
pub fn special_neighbors(g: &Graph, x: &VertexSet, d: &VertexSet) -> SpecialNeighborMap {
    let map = x
        .iter()
        .filter(|&v| !d.contains(v))
        .map(|v| {
            let t = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| d.contains(u))
                .expect("a dominating set dominates every vertex");
            (v, t)
        })
        .collect();
    SpecialNeighborMap(map)
}

/// Outcome of running the two shrinking rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleRun {
    pub target: VertexSet,
    pub moves: TarSequence,
    pub specials: SpecialNeighborMap,
}

/// Applies the rules to `start` (which must dominate and satisfy
/// `|start| < k`) until neither fires. Each application removes one vertex of
/// `I ∩ D`; rule (ii) first adds the smallest-id neighbor from `X`.
pub fn apply_rules(g: &Graph, x: &VertexSet, start: &VertexSet) -> RuleRun {
    let mut d = start.clone();
    let mut specials = special_neighbors(g, x, &d);
    let mut moves = TarSequence::new();
    loop {
        let t = specials.specials();
        let candidate = d.iter().find(|&v| !x.contains(v) && !t.contains(v) && g.degree(v) > 0);
        let Some(v) = candidate else { break };
        if g.neighbors(v).iter().any(|&u| d.contains(u)) {
            // (i): v is dominated by someone else and dominates nothing it must
            d.remove(v);
            moves.push(Move::remove(v));
        } else {
            // (ii): v only dominates itself; hand that over to a cover neighbor
            let u = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| x.contains(u))
                .expect("neighbors of an independent-side vertex are in the cover");
            d.insert(u);
            moves.push(Move::add(u));
            specials.forget(u);
            d.remove(v);
            moves.push(Move::remove(v));
        }
    }
    RuleRun { target: d, moves, specials }
}

/// OPT-DSR solver for the vertex-cover parameterization. When `s ≤ τ` the
/// kernel pipeline takes over; otherwise the rules produce a target of size
/// at most `τ` plus the number of isolated vertices, and if isolated vertices
/// push it above `s` the kernel pipeline decides instead.
pub fn fpt_vc_solve(inst: &Instance) -> Result<Solution> {
    fpt_vc_solve_with(inst, &Oracle::default())
}

pub fn fpt_vc_solve_with(inst: &Instance, oracle: &Oracle) -> Result<Solution> {
    let (reduced, prefix) = match classify(inst)? {
        Classification::Proceed { instance, prefix } => (instance, prefix),
        decided => return finish(inst, decided.solution().expect("decided classification")),
    };
    let x = min_vertex_cover(&reduced.graph);
    if reduced.s <= x.len() {
        return delegate(inst, &reduced, &prefix, oracle);
    }
    let run = apply_rules(&reduced.graph, &x, &reduced.start);
    if run.target.len() > reduced.s {
        return delegate(inst, &reduced, &prefix, oracle);
    }
    let witness = prefix.then(&run.moves);
    finish(inst, Solution::yes(run.target, Some(witness)))
}

fn delegate(
    inst: &Instance,
    reduced: &Instance,
    prefix: &TarSequence,
    oracle: &Oracle,
) -> Result<Solution> {
    let sol = fpt_ds_solve_with(reduced, oracle)?;
    let sol = Solution { witness: sol.witness.map(|w| prefix.clone().then(&w)), ..sol };
    finish(inst, sol)
}
