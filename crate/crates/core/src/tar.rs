//! Token addition/removal semantics: moves, sequences, instances and the
//! replay validator every solver's witness goes through.

use std::fmt;

use thiserror::Error;

use crate::error::{Error as CoreError, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Add,
    Remove,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub kind: MoveKind,
    pub vertex: usize,
}

impl Move {
    pub fn add(vertex: usize) -> Self {
        Move { kind: MoveKind::Add, vertex }
    }

    pub fn remove(vertex: usize) -> Self {
        Move { kind: MoveKind::Remove, vertex }
    }

    /// The move that undoes this one.
    pub fn inverse(self) -> Self {
        let kind = match self.kind {
            MoveKind::Add => MoveKind::Remove,
            MoveKind::Remove => MoveKind::Add,
        };
        Move { kind, vertex: self.vertex }
    }

    pub fn map_vertex(self, f: impl FnOnce(usize) -> usize) -> Self {
        Move { kind: self.kind, vertex: f(self.vertex) }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MoveKind::Add => write!(f, "+{}", self.vertex),
            MoveKind::Remove => write!(f, "-{}", self.vertex),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveError {
    AlreadyPresent(usize),
    Absent(usize),
}

/// `S Δ {v}` in the direction the move names.
pub fn apply_move(s: &VertexSet, m: Move) -> std::result::Result<VertexSet, MoveError> {
    let mut out = s.clone();
    apply_move_in_place(&mut out, m)?;
    Ok(out)
}

pub(crate) fn apply_move_in_place(
    s: &mut VertexSet,
    m: Move,
) -> std::result::Result<(), MoveError> {
    match m.kind {
        MoveKind::Add if !s.insert(m.vertex) => Err(MoveError::AlreadyPresent(m.vertex)),
        MoveKind::Remove if !s.remove(m.vertex) => Err(MoveError::Absent(m.vertex)),
        _ => Ok(()),
    }
}

/// An ordered list of moves; a reconfiguration witness.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TarSequence(Vec<Move>);

impl TarSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, m: Move) {
        self.0.push(m)
    }

    pub fn extend(&mut self, other: &TarSequence) {
        self.0.extend_from_slice(&other.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Move> + '_ {
        self.0.iter().copied()
    }

    /// Runs the sequence backwards: reversed order, each move inverted.
    pub fn reversed(&self) -> TarSequence {
        self.0.iter().rev().map(|m| m.inverse()).collect()
    }

    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> TarSequence {
        self.0.iter().map(|m| m.map_vertex(&f)).collect()
    }

    /// Replays the moves from `start` without checking domination or size.
    pub fn replay(&self, start: &VertexSet) -> std::result::Result<VertexSet, MoveError> {
        let mut s = start.clone();
        for &m in &self.0 {
            apply_move_in_place(&mut s, m)?;
        }
        Ok(s)
    }

    /// Concatenation `self ++ other`.
    pub fn then(mut self, other: &TarSequence) -> TarSequence {
        self.extend(other);
        self
    }
}

impl FromIterator<Move> for TarSequence {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        TarSequence(iter.into_iter().collect())
    }
}

impl From<Vec<Move>> for TarSequence {
    fn from(moves: Vec<Move>) -> Self {
        TarSequence(moves)
    }
}

/// Why a sequence failed to replay. Steps are 0-based move indices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("start set is not a dominating set")]
    StartNotDominating,
    #[error("start set has {size} vertices, above k = {k}")]
    StartTooLarge { size: usize, k: usize },
    #[error("step {0}: illegal move")]
    IllegalMove(usize),
    #[error("step {0}: the resulting set is not dominating")]
    NotDominatingAtStep(usize),
    #[error("step {0}: the resulting set exceeds the bound k")]
    SizeExceededAtStep(usize),
}

/// Replays `seq` from `start` under TAR(k) and returns the final set.
///
/// Every set along the way, the start included, must be a dominating set of
/// `g` with at most `k` vertices.
pub fn validate_sequence(
    g: &Graph,
    k: usize,
    start: &VertexSet,
    seq: &TarSequence,
) -> std::result::Result<VertexSet, SequenceError> {
    if g.check_set(start).is_err() || !g.is_dominating(start) {
        return Err(SequenceError::StartNotDominating);
    }
    if start.len() > k {
        return Err(SequenceError::StartTooLarge { size: start.len(), k });
    }
    // dominator counts make each step O(deg)
    let mut count = vec![0usize; g.n()];
    for v in start {
        for u in g.closed_iter(v) {
            count[u] += 1;
        }
    }
    let mut undominated = 0;
    let mut current = start.clone();
    for (step, m) in seq.iter().enumerate() {
        if g.check_vertex(m.vertex).is_err() || apply_move_in_place(&mut current, m).is_err() {
            return Err(SequenceError::IllegalMove(step));
        }
        match m.kind {
            MoveKind::Add => {
                for u in g.closed_iter(m.vertex) {
                    if count[u] == 0 {
                        undominated -= 1;
                    }
                    count[u] += 1;
                }
                if current.len() > k {
                    return Err(SequenceError::SizeExceededAtStep(step));
                }
            }
            MoveKind::Remove => {
                for u in g.closed_iter(m.vertex) {
                    count[u] -= 1;
                    if count[u] == 0 {
                        undominated += 1;
                    }
                }
            }
        }
        if undominated > 0 {
            return Err(SequenceError::NotDominatingAtStep(step));
        }
    }
    Ok(current)
}

/// An OPT-DSR instance `(G, k, s, D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    /// Upper bound on every intermediate set.
    pub k: usize,
    /// Target size.
    pub s: usize,
    pub start: VertexSet,
}

impl Instance {
    pub fn new(graph: Graph, k: usize, s: usize, start: VertexSet) -> Result<Self> {
        graph.check_set(&start)?;
        if !graph.is_dominating(&start) {
            return Err(CoreError::NotDominating);
        }
        if start.len() > k {
            return Err(CoreError::StartTooLarge { size: start.len(), k });
        }
        Ok(Instance { graph, k, s, start })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn with_start(&self, start: VertexSet) -> Result<Self> {
        Instance::new(self.graph.clone(), self.k, self.s, start)
    }

    pub fn validate(&self, seq: &TarSequence) -> std::result::Result<VertexSet, SequenceError> {
        validate_sequence(&self.graph, self.k, &self.start, seq)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

/// Solver output. `target` is present exactly on `Yes`; `witness` is absent
/// only for solvers that certify reachability without building the moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub verdict: Verdict,
    pub target: Option<VertexSet>,
    pub witness: Option<TarSequence>,
}

impl Solution {
    pub fn yes(target: VertexSet, witness: Option<TarSequence>) -> Self {
        Solution { verdict: Verdict::Yes, target: Some(target), witness }
    }

    pub fn no() -> Self {
        Solution { verdict: Verdict::No, target: None, witness: None }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    /// Checks the solution's own invariants against `inst`: the witness
    /// replays under TAR(k) to the target, and the target fits in `s`.
    pub fn check(&self, inst: &Instance) -> Result<()> {
        if let (Verdict::Yes, Some(target)) = (self.verdict, &self.target) {
            if target.len() > inst.s {
                return Err(CoreError::InvalidSolution(format!(
                    "target has {} vertices, above s = {}",
                    target.len(),
                    inst.s
                )));
            }
            if !inst.graph.is_dominating(target) {
                return Err(CoreError::InvalidSolution("target is not dominating".into()));
            }
            if let Some(w) = &self.witness {
                let end = inst.validate(w)?;
                if &end != target {
                    return Err(CoreError::InvalidSolution(
                        "witness does not end at the target".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}
