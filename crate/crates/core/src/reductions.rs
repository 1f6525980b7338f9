//! Instance transformations from the hardness constructions, used to
//! generate structured instances and to cross-check the oracles.
//!
//! Every construction keeps the source vertices at their ids and appends new
//! vertices above them; `names` labels each output vertex (1-based, matching
//! the file formats).

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::VcrInstance;
use crate::tar::{validate_sequence, Instance, Move, TarSequence};

/// A clique `A` and an independent set `B` partitioning the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.clique.intersection(&self.independent).is_empty()
            && self.clique.union(&self.independent) == VertexSet::full(g.n())
            && g.is_clique(&self.clique)
            && g.is_independent(&self.independent)
    }
}

/// Split partition by the degree-sequence test: with degrees sorted
/// descending, the first `m` vertices (largest `i` with `d_i ≥ i - 1`) form the
/// clique iff the graph is split.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let clique: VertexSet = order[..m].iter().copied().collect();
    let independent: VertexSet = order[m..].iter().copied().collect();
    let p = SplitPartition { clique, independent };
    p.is_valid_for(g).then_some(p)
}

/// Gadget vertices and the source vertex that stands in for each of them in
/// projected sequences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GadgetMap(BTreeMap<usize, usize>);

impl GadgetMap {
    pub fn representative(&self, v: usize) -> Option<usize> {
        self.0.get(&v).copied()
    }

    pub fn is_gadget(&self, v: usize) -> bool {
        self.0.contains_key(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&g, &r)| (g, r))
    }

    fn project(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.representative(v).unwrap_or(v)).collect()
    }
}

/// Output of a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub instance: Instance,
    pub names: Vec<String>,
    pub gadgets: GadgetMap,
    pub partition: Option<SplitPartition>,
}

fn source_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn edge_gadgets(g: &Graph, base: usize) -> (Vec<(usize, usize)>, GadgetMap, Vec<String>) {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let map = edges.iter().enumerate().map(|(i, &(u, _))| (base + i, u)).collect();
    let names = edges.iter().map(|&(u, v)| format!("w{}_{}", u + 1, v + 1)).collect();
    (edges, GadgetMap(map), names)
}

fn nonempty_cover(inst: &VcrInstance) -> Result<()> {
    if inst.start.is_empty() && inst.graph.n() > 0 {
        return Err(Error::ReductionInput(
            "an empty cover does not dominate the output graph".into(),
        ));
    }
    Ok(())
}

/// Vertex cover reconfiguration to a split graph: the source vertices become a
/// clique `A`, and each source edge gets a vertex in `B` adjacent to its two
/// endpoints. Bounds and start set carry over unchanged.
pub fn vcr_to_split(inst: &VcrInstance) -> Result<Reduced> {
    nonempty_cover(inst)?;
    let n = inst.graph.n();
    let mut g = Graph::complete(n);
    let (edges, gadgets, gadget_names) = edge_gadgets(&inst.graph, n);
    for &(u, v) in &edges {
        let w = g.add_vertex();
        g.add_edge(w, u)?;
        g.add_edge(w, v)?;
    }
    let mut names = source_names(n);
    names.extend(gadget_names);
    let partition =
        SplitPartition { clique: VertexSet::full(n), independent: (n..g.n()).collect() };
    let instance = Instance::new(g, inst.k, inst.s, inst.start.clone())?;
    Ok(Reduced { instance, names, gadgets, partition: Some(partition) })
}

/// Vertex cover reconfiguration to dominating set reconfiguration by closing a
/// triangle over every edge. The source graph must have no isolated vertex.
pub fn vcr_to_gadget(inst: &VcrInstance) -> Result<Reduced> {
    nonempty_cover(inst)?;
    let n = inst.graph.n();
    let mut g = inst.graph.clone();
    let (edges, gadgets, gadget_names) = edge_gadgets(&inst.graph, n);
    for &(u, v) in &edges {
        let w = g.add_vertex();
        g.add_edge(w, u)?;
        g.add_edge(w, v)?;
    }
    let mut names = source_names(n);
    names.extend(gadget_names);
    let instance = Instance::new(g, inst.k, inst.s, inst.start.clone()).map_err(|e| match e {
        Error::NotDominating => {
            Error::ReductionInput("isolated vertices outside the cover stay undominated".into())
        }
        other => other,
    })?;
    Ok(Reduced { instance, names, gadgets, partition: None })
}

/// Split graph instance to a bipartite one: clique edges are dropped and a
/// pendant edge `x–y` is added with `y` joined to all of `A`; `y` joins the
/// start set and both bounds grow by one. The start set must lie in `A`.
pub fn split_to_bipartite(inst: &Instance, partition: &SplitPartition) -> Result<Reduced> {
    let src = &inst.graph;
    if !partition.is_valid_for(src) {
        return Err(Error::ReductionInput("not a split partition of the graph".into()));
    }
    if !inst.start.is_subset(&partition.clique) {
        return Err(Error::ReductionInput("start set must lie in the clique side".into()));
    }
    let n = src.n();
    let mut g = src.clone();
    for (u, v) in src.edges() {
        if partition.clique.contains(u) && partition.clique.contains(v) {
            g.remove_edge(u, v);
        }
    }
    let x = g.add_vertex();
    let y = g.add_vertex();
    g.add_edge(x, y)?;
    for a in &partition.clique {
        g.add_edge(y, a)?;
    }
    let mut names = source_names(n);
    names.push("x".into());
    names.push("y".into());
    let mut start = inst.start.clone();
    start.insert(y);
    let instance = Instance::new(g, inst.k + 1, inst.s + 1, start)?;
    let partition = SplitPartition {
        clique: partition.clique.union(&VertexSet::from([x])),
        independent: partition.independent.union(&VertexSet::from([y])),
    };
    Ok(Reduced { instance, names, gadgets: GadgetMap::default(), partition: Some(partition) })
}

/// Dominating Set `(G', k')` to OPT-DSR with `k = 2k' + 1`, `s = k'`.
///
/// `G_0` is `G'` plus a universal vertex `v_0`; `G_1..G_k'` are copies of
/// `G_0`. Each source vertex `v_i` is joined to the closed neighborhood of its
/// copy `v_{j,i}` in every `G_j`. The start set is the `k' + 1` universal
/// vertices. Layout: source vertices keep ids `0..n'`, `v_0` is `n'`, and copy
/// `j` occupies `(n'+1)·j ..` with its universal vertex first.
pub fn ds_to_optdsr_w2(src: &Graph, k: usize) -> Result<Reduced> {
    let n = src.n();
    if k == 0 {
        return Err(Error::ReductionInput("k' must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::ReductionInput("the source graph must have a vertex".into()));
    }
    let block = n + 1;
    let universal = |j: usize| if j == 0 { n } else { block * j };
    let copy = |j: usize, i: usize| if j == 0 { i } else { block * j + 1 + i };
    let mut g = Graph::new(block * (k + 1));
    for j in 0..=k {
        for (u, v) in src.edges() {
            g.add_edge(copy(j, u), copy(j, v))?;
        }
        for i in 0..n {
            g.add_edge(universal(j), copy(j, i))?;
        }
    }
    for i in 0..n {
        for j in 1..=k {
            let mut targets = vec![universal(j), copy(j, i)];
            targets.extend(src.neighbors(i).iter().map(|&u| copy(j, u)));
            for t in targets {
                g.add_edge(i, t)?;
            }
        }
    }
    let mut names = vec![String::new(); g.n()];
    for i in 0..n {
        names[copy(0, i)] = format!("v{}", i + 1);
    }
    names[universal(0)] = "v0".into();
    for j in 1..=k {
        names[universal(j)] = format!("v{j},0");
        for i in 0..n {
            names[copy(j, i)] = format!("v{j},{}", i + 1);
        }
    }
    let start: VertexSet = (0..=k).map(universal).collect();
    let instance = Instance::new(g, 2 * k + 1, k, start)?;
    Ok(Reduced { instance, names, gadgets: GadgetMap::default(), partition: None })
}

/// Rewrites a valid sequence so it never touches a gadget vertex.
///
/// Each intermediate set has its gadget vertices replaced by their
/// representatives (valid because `N[w] ⊆ N[rep(w)]`); consecutive projected
/// sets differ in at most one vertex, so after dropping repeats and erasing
/// loops the projected sets form a TAR(k) sequence from the same start to a
/// target no larger than the original one.
pub fn project_sequence_gadget(
    g: &Graph,
    k: usize,
    start: &VertexSet,
    seq: &TarSequence,
    gadgets: &GadgetMap,
) -> Result<TarSequence> {
    for (w, rep) in gadgets.iter() {
        let nw = g.closed_neighborhood(w)?;
        if !nw.is_subset(&g.closed_neighborhood(rep)?) {
            return Err(Error::ReductionInput(format!(
                "closed neighborhood of gadget {w} is not inside that of {rep}"
            )));
        }
    }
    if start.iter().any(|v| gadgets.is_gadget(v)) {
        return Err(Error::ReductionInput("start set contains a gadget vertex".into()));
    }
    validate_sequence(g, k, start, seq)?;

    let mut path = vec![start.clone()];
    let mut position: HashMap<VertexSet, usize> = HashMap::from([(start.clone(), 0)]);
    let mut current = start.clone();
    for m in seq.iter() {
        crate::tar::apply_move_in_place(&mut current, m).expect("sequence was validated");
        let projected = gadgets.project(&current);
        if let Some(&i) = position.get(&projected) {
            for dropped in path.drain(i + 1..) {
                position.remove(&dropped);
            }
        } else {
            position.insert(projected.clone(), path.len());
            path.push(projected);
        }
    }

    let moves = path
        .windows(2)
        .map(|w| {
            let added = w[1].difference(&w[0]);
            let removed = w[0].difference(&w[1]);
            match (added.first(), removed.first()) {
                (Some(v), None) if added.len() == 1 => Move::add(v),
                (None, Some(v)) if removed.len() == 1 => Move::remove(v),
                _ => unreachable!("projected neighbors differ in exactly one vertex"),
            }
        })
        .collect();
    Ok(moves)
}
