//! Trivial-instance detection and normalization to `s < |D| < k`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tar::{Instance, Move, Solution, TarSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// The (possibly shrunk) start set already fits in `s`; `prefix` leads
    /// there from the original start.
    AlreadySolution { target: VertexSet, prefix: TarSequence },
    /// `|D| = k` with `D` minimal: no move is possible at all.
    NoSolution,
    /// `s < |instance.start| < k`. `prefix` leads from the original start to
    /// `instance.start`.
    Proceed { instance: Instance, prefix: TarSequence },
}

impl Classification {
    /// The solution this classification already decides, if any.
    pub fn solution(&self) -> Option<Solution> {
        match self {
            Classification::AlreadySolution { target, prefix } => {
                Some(Solution::yes(target.clone(), Some(prefix.clone())))
            }
            Classification::NoSolution => Some(Solution::no()),
            Classification::Proceed { .. } => None,
        }
    }
}

/// Classifies `inst` as trivially solved, trivially unsolvable, or reduced to
/// `s < |D| < k`. When `|D| = k` and `D` is not minimal, the smallest-id member
/// without a private neighbor is removed and the result classified again.
pub fn classify(inst: &Instance) -> Result<Classification> {
    let g = &inst.graph;
    g.check_set(&inst.start)?;
    if !g.is_dominating(&inst.start) {
        return Err(Error::NotDominating);
    }
    let mut current = inst.start.clone();
    let mut prefix = TarSequence::new();
    loop {
        if !(inst.s < current.len() && current.len() <= inst.k) {
            return Ok(Classification::AlreadySolution { target: current, prefix });
        }
        if current.len() < inst.k {
            let instance = Instance { start: current, ..inst.clone() };
            return Ok(Classification::Proceed { instance, prefix });
        }
        match removable_vertex(g, &current)? {
            None => return Ok(Classification::NoSolution),
            Some(v) => {
                current.remove(v);
                prefix.push(Move::remove(v));
            }
        }
    }
}

fn removable_vertex(g: &Graph, d: &VertexSet) -> Result<Option<usize>> {
    for v in d {
        if g.private_neighbors(d, v)?.is_empty() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// The instance `(G, |V|, s, V)`, equivalent to asking for a dominating set of
/// size at most `s`.
pub fn instance_from_dominating_set_problem(g: Graph, s: usize) -> Instance {
    let n = g.n();
    Instance::new(g, n, s, VertexSet::full(n)).expect("the full vertex set dominates")
}
