//! Kernelization parameterized by degeneracy plus solution size.
//!
//! A domination core `C` certifies domination: `D` dominates `G` iff
//! `C ⊆ N[D]`. Outside the core, a vertex whose core-neighborhood is contained
//! in another's is redundant (rule R1); it is first evicted from the start set
//! and then deleted from the graph. What is left is solved exhaustively and
//! the witness is lifted back verbatim.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{relabel, Oracle};
use crate::preprocess::{classify, Classification};
use crate::tar::{Instance, Move, Solution, TarSequence};

/// Domination core by iterated elimination: `v` leaves the candidate core when
/// some other candidate `u` has `N[u] ⊆ N[v]`, since dominating `u` then
/// dominates `v`. Candidates are scanned from the largest id down, so among
/// equal closed neighborhoods the smallest id survives.
pub fn domination_core(g: &Graph) -> VertexSet {
    let mut core = VertexSet::full(g.n());
    loop {
        let mut changed = false;
        for v in g.vertices().rev() {
            if core.contains(v) && is_eliminable(g, &core, v) {
                core.remove(v);
                changed = true;
            }
        }
        if !changed {
            return core;
        }
    }
}

/// Whether `v` may leave `core`: some `u ∈ core \ {v}` has `N[u] ⊆ N[v]`.
pub fn is_eliminable(g: &Graph, core: &VertexSet, v: usize) -> bool {
    let nv = g.neighbors(v);
    core.iter().filter(|&u| u != v).any(|u| {
        // N[u] ⊆ N[v] needs u ∈ N(v) and N(u) \ {v} ⊆ N(v)
        nv.binary_search(&u).is_ok()
            && g.neighbors(u).iter().all(|&w| w == v || nv.binary_search(&w).is_ok())
    })
}

fn core_neighborhood(g: &Graph, core: &VertexSet, v: usize) -> VertexSet {
    g.neighbors(v).iter().copied().filter(|&u| core.contains(u)).collect()
}

/// Evicts `v_r` from the start set using `v_l`, whose core-neighborhood
/// contains that of `v_r`: drop `v_r` directly if `v_l` is already present,
/// otherwise add `v_l` first.
pub fn clean_start(
    inst: &Instance,
    core: &VertexSet,
    v_r: usize,
    v_l: usize,
) -> Result<(VertexSet, TarSequence)> {
    let g = &inst.graph;
    g.check_vertex(v_r)?;
    g.check_vertex(v_l)?;
    if v_r == v_l {
        return Err(Error::R1Precondition("v_r and v_l coincide".into()));
    }
    if core.contains(v_r) || core.contains(v_l) {
        return Err(Error::R1Precondition("R1 only applies outside the core".into()));
    }
    if !core_neighborhood(g, core, v_r).is_subset(&core_neighborhood(g, core, v_l)) {
        return Err(Error::R1Precondition(format!(
            "N({v_r}) ∩ C is not contained in N({v_l}) ∩ C"
        )));
    }
    if !inst.start.contains(v_r) {
        return Err(Error::NotInSet(v_r));
    }
    let mut d = inst.start.clone();
    let mut moves = TarSequence::new();
    if !d.contains(v_l) {
        if d.len() >= inst.k {
            return Err(Error::CannotAdd(inst.k));
        }
        d.insert(v_l);
        moves.push(Move::add(v_l));
    }
    d.remove(v_r);
    moves.push(Move::remove(v_r));
    Ok((d, moves))
}

/// Result of exhaustively applying R1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    /// The reduced instance, on vertices `0..original.len()`.
    pub instance: Instance,
    /// Kernel vertex `i` is vertex `original[i]` of the input graph.
    pub original: Vec<usize>,
    /// Moves, in input ids, from the input start to the kernel start.
    pub prefix: TarSequence,
    /// `(v_r, v_l)` pairs in input ids, in application order.
    pub removed: Vec<(usize, usize)>,
    /// The domination core, in kernel ids.
    pub core: VertexSet,
}

impl Kernel {
    pub fn lift_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.original[v]).collect()
    }

    pub fn lift_sequence(&self, seq: &TarSequence) -> TarSequence {
        seq.map_vertices(|v| self.original[v])
    }

    /// Whether no two out-of-core kernel vertices have comparable
    /// core-neighborhoods.
    pub fn core_neighborhoods_distinct(&self) -> bool {
        let g = &self.instance.graph;
        let outside: Vec<usize> = g.vertices().filter(|&v| !self.core.contains(v)).collect();
        let hoods: Vec<VertexSet> =
            outside.iter().map(|&v| core_neighborhood(g, &self.core, v)).collect();
        hoods
            .iter()
            .enumerate()
            .all(|(i, a)| hoods.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(b)))
    }
}

/// Applies R1 until no out-of-core pair has nested core-neighborhoods.
///
/// Expects `s < |D| < k`, which [`classify`] establishes. Scan order: the
/// smallest-id `v_r` that has a partner, paired with its smallest-id `v_l`;
/// on equal core-neighborhoods only the larger id may be removed.
pub fn reduce_r1(inst: &Instance) -> Result<Kernel> {
    let g = &inst.graph;
    let core = domination_core(g);
    let hoods: Vec<VertexSet> = g.vertices().map(|v| core_neighborhood(g, &core, v)).collect();
    let mut alive = vec![true; g.n()];
    let mut current = inst.clone();
    let mut prefix = TarSequence::new();
    let mut removed = Vec::new();

    // Core vertices are never removed, so core-neighborhoods stay fixed and
    // the core remains a core of every intermediate graph.
    while let Some((v_r, v_l)) = find_r1_pair(&core, &hoods, &alive) {
        if current.start.contains(v_r) {
            let (d, moves) = clean_start(&current, &core, v_r, v_l)?;
            current.start = d;
            prefix.extend(&moves);
        }
        alive[v_r] = false;
        removed.push((v_r, v_l));
    }

    let original: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in original.iter().enumerate() {
        index[v] = i;
    }
    let graph = g.induced_subgraph(&original);
    let start: VertexSet = current.start.iter().map(|v| index[v]).collect();
    let kcore: VertexSet = core.iter().map(|v| index[v]).collect();
    let instance = Instance::new(graph, inst.k, inst.s, start)?;
    Ok(Kernel { instance, original, prefix, removed, core: kcore })
}

fn find_r1_pair(core: &VertexSet, hoods: &[VertexSet], alive: &[bool]) -> Option<(usize, usize)> {
    let outside: Vec<usize> = (0..alive.len()).filter(|&v| alive[v] && !core.contains(v)).collect();
    for &v_r in &outside {
        for &v_l in &outside {
            if v_l == v_r || !hoods[v_r].is_subset(&hoods[v_l]) {
                continue;
            }
            if hoods[v_r] == hoods[v_l] && v_r < v_l {
                continue;
            }
            return Some((v_r, v_l));
        }
    }
    None
}

/// A dominating set of size at most `s`, if one exists.
///
/// Branches on the dominators of the smallest-id undominated vertex, so the
/// search tree has at most `(Δ + 1)^s` leaves.
pub fn find_small_ds(g: &Graph, s: usize) -> Option<VertexSet> {
    let mut count = vec![0usize; g.n()];
    let mut chosen = Vec::new();
    if branch_ds(g, s, &mut count, &mut chosen) {
        Some(chosen.into_iter().collect())
    } else {
        None
    }
}

pub fn exists_small_ds(g: &Graph, s: usize) -> bool {
    find_small_ds(g, s).is_some()
}

fn branch_ds(g: &Graph, budget: usize, count: &mut [usize], chosen: &mut Vec<usize>) -> bool {
    let Some(u) = (0..g.n()).find(|&v| count[v] == 0) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // every vertex dominates at most Δ+1 others
    let undominated = count.iter().filter(|&&c| c == 0).count();
    let reach = g.vertices().map(|v| g.degree(v) + 1).max().unwrap_or(1);
    if undominated > budget * reach {
        return false;
    }
    let candidates: Vec<usize> = g.closed_iter(u).collect();
    let mut sorted = candidates;
    sorted.sort_unstable();
    for w in sorted {
        for x in g.closed_iter(w) {
            count[x] += 1;
        }
        chosen.push(w);
        if branch_ds(g, budget - 1, count, chosen) {
            return true;
        }
        chosen.pop();
        for x in g.closed_iter(w) {
            count[x] -= 1;
        }
    }
    false
}

/// Solves OPT-DSR through the R1 kernel: classify, reject when no dominating
/// set of size `s` exists at all, kernelize, search the kernel exhaustively,
/// and lift the witness back.
pub fn fpt_ds_solve(inst: &Instance) -> Result<Solution> {
    fpt_ds_solve_with(inst, &Oracle::default())
}

pub fn fpt_ds_solve_with(inst: &Instance, oracle: &Oracle) -> Result<Solution> {
    let (reduced, prefix) = match classify(inst)? {
        Classification::Proceed { instance, prefix } => (instance, prefix),
        decided => return finish(inst, decided.solution().expect("decided classification")),
    };
    if !exists_small_ds(&reduced.graph, reduced.s) {
        return Ok(Solution::no());
    }
    let kernel = reduce_r1(&reduced)?;
    let prefix = prefix.then(&kernel.prefix);
    let sol = match classify(&kernel.instance)? {
        Classification::Proceed { instance, prefix: inner } => {
            let found = oracle.solve(&instance)?;
            let found = relabel(found, &kernel.original);
            let lifted_inner = kernel.lift_sequence(&inner);
            lift(found, &prefix.then(&lifted_inner))
        }
        decided => {
            let found =
                relabel(decided.solution().expect("decided classification"), &kernel.original);
            lift(found, &prefix)
        }
    };
    finish(inst, sol)
}

fn lift(sol: Solution, prefix: &TarSequence) -> Solution {
    Solution {
        verdict: sol.verdict,
        target: sol.target,
        witness: sol.witness.map(|w| prefix.clone().then(&w)),
    }
}

pub(crate) fn finish(inst: &Instance, sol: Solution) -> Result<Solution> {
    sol.check(inst)?;
    Ok(sol)
}
