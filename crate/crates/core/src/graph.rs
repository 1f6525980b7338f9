//! Undirected simple graphs over dense vertex ids `0..n`, vertex sets, and the
//! neighborhood and domination predicates everything else is built on.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A subset of the vertices of some graph, iterated in ascending id order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    /// Bit mask of the members; callers guarantee every member is below 64.
    pub fn to_mask(&self) -> u64 {
        self.iter().fold(0u64, |m, v| m | (1u64 << v))
    }

    pub fn from_mask(mask: u64) -> Self {
        (0..64).filter(|&v| mask >> v & 1 == 1).collect()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Undirected simple graph. Adjacency lists are kept sorted, which makes
/// edge lookups a binary search and iteration deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Repeated edges are an error.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("clique edges are valid")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).expect("star edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts the edge `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(true)
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("adjacency is symmetric");
                self.adj[v].remove(pos);
                self.m -= 1;
                true
            }
            Err(_) => false,
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed_iter(v).collect())
    }

    pub(crate) fn closed_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(v).chain(self.adj[v].iter().copied())
    }

    /// `N[S]`, the union of the closed neighborhoods of the members of `s`.
    pub fn closed_neighborhood_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(s.iter().flat_map(|v| self.closed_iter(v)).collect())
    }

    /// Whether every vertex lies in `s` or has a neighbor in it.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        if self.check_set(s).is_err() {
            return false;
        }
        let mut dominated = vec![false; self.n()];
        for v in s {
            for u in self.closed_iter(v) {
                dominated[u] = true;
            }
        }
        dominated.into_iter().all(|d| d)
    }

    /// Vertices `u ∈ N[v]` whose only dominator in `d` is `v` (possibly `v` itself).
    pub fn private_neighbors(&self, d: &VertexSet, v: usize) -> Result<VertexSet> {
        self.check_set(d)?;
        self.check_vertex(v)?;
        if !d.contains(v) {
            return Err(Error::NotInSet(v));
        }
        Ok(self
            .closed_iter(v)
            .filter(|&u| self.closed_iter(u).filter(|&w| d.contains(w)).count() == 1)
            .collect())
    }

    /// A dominating set is minimal when each member has a private neighbor.
    pub fn is_minimal(&self, d: &VertexSet) -> Result<bool> {
        if !self.is_dominating(d) {
            return Err(Error::NotDominating);
        }
        for v in d {
            if self.private_neighbors(d, v)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        self.edges().all(|(u, v)| s.contains(u) || s.contains(v))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.adj[u].iter().all(|&v| !s.contains(v)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Induced subgraph on `keep`, relabeled so that `keep[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = index[u];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j).expect("induced edges are valid");
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("complement edges are valid");
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    /// Proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for root in self.vertices() {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].expect("queued vertices are colored");
                for &u in &self.adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    /// Closed neighborhoods as bit masks; only meaningful for `n <= 64`.
    pub(crate) fn closed_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.vertices().map(|v| self.closed_iter(v).fold(0u64, |m, u| m | (1u64 << u))).collect()
    }
}

/// Degeneracy and a degeneracy ordering, by min-degree peeling with a bucket
/// queue. Every vertex has at most `d` neighbors later in the ordering.
pub fn degeneracy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); max_deg + 1];
    for v in g.vertices() {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    let mut low: usize = 0;
    for _ in 0..n {
        // a removal lowers neighbor degrees by one, so the minimum can drop by at most one
        low = low.saturating_sub(1);
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("bucket is nonempty");
        d = d.max(low);
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                buckets[deg[u]].remove(&u);
                deg[u] -= 1;
                buckets[deg[u]].insert(u);
            }
        }
    }
    (d, order)
}

/// Exact minimum vertex cover by degree-0/degree-1 simplification and
/// branching on a maximum-degree vertex (take it, or take all its neighbors).
pub fn min_vertex_cover(g: &Graph) -> VertexSet {
    let mut search = CoverSearch { g, alive: vec![true; g.n()], chosen: Vec::new(), best: None };
    // the complement of a maximal independent set is a cover and seeds the bound
    let mut greedy = VertexSet::full(g.n());
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    for v in order {
        if g.neighbors(v).iter().all(|&u| greedy.contains(u)) {
            greedy.remove(v);
        }
    }
    search.best = Some(greedy.to_vec());
    search.run();
    search.best.expect("a cover always exists").into_iter().collect()
}

struct CoverSearch<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
}

impl CoverSearch<'_> {
    fn live_degree(&self, v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&u| self.alive[u]).count()
    }

    fn take(&mut self, v: usize, trail: &mut Vec<usize>) {
        self.alive[v] = false;
        self.chosen.push(v);
        trail.push(v);
    }

    fn drop_vertex(&mut self, v: usize, trail: &mut Vec<usize>) {
        self.alive[v] = false;
        trail.push(v);
    }

    fn undo(&mut self, trail: Vec<usize>, chosen_len: usize) {
        for v in trail {
            self.alive[v] = true;
        }
        self.chosen.truncate(chosen_len);
    }

    fn run(&mut self) {
        let chosen_len = self.chosen.len();
        let mut trail = Vec::new();
        // degree-1 vertices force their neighbor; degree-0 vertices drop out
        loop {
            let mut changed = false;
            for v in self.g.vertices() {
                if !self.alive[v] {
                    continue;
                }
                match self.live_degree(v) {
                    0 => {
                        self.drop_vertex(v, &mut trail);
                        changed = true;
                    }
                    1 => {
                        let u =
                            self.g.neighbors(v).iter().copied().find(|&u| self.alive[u]).unwrap();
                        self.take(u, &mut trail);
                        self.drop_vertex(v, &mut trail);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }

        let best_len = self.best.as_ref().map_or(usize::MAX, Vec::len);
        let mut max_v = None;
        let mut max_deg = 0;
        let mut live_edges = 0;
        for v in self.g.vertices().filter(|&v| self.alive[v]) {
            let d = self.live_degree(v);
            live_edges += d;
            if d > max_deg {
                max_deg = d;
                max_v = Some(v);
            }
        }
        live_edges /= 2;

        match max_v {
            None => {
                if self.chosen.len() < best_len {
                    self.best = Some(self.chosen.clone());
                }
            }
            Some(v) => {
                let lower = live_edges.div_ceil(max_deg);
                if self.chosen.len() + lower < best_len {
                    let inner_len = self.chosen.len();
                    let mut inner = Vec::new();
                    self.take(v, &mut inner);
                    self.run();
                    self.undo(inner, inner_len);

                    let nbrs: Vec<usize> =
                        self.g.neighbors(v).iter().copied().filter(|&u| self.alive[u]).collect();
                    let mut inner = Vec::new();
                    self.drop_vertex(v, &mut inner);
                    for u in nbrs {
                        self.take(u, &mut inner);
                    }
                    self.run();
                    self.undo(inner, inner_len);
                }
            }
        }
        self.undo(trail, chosen_len);
    }
}
