//! Seeded instance generators. Every function is deterministic in its RNG.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{Cotree, IntervalModel};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::preprocess::instance_from_dominating_set_problem;
use crate::reductions::SplitPartition;
use crate::tar::Instance;

const CONNECT_ATTEMPTS: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph: each pair is an edge with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// Redraws [`random_graph`] until it is connected.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    for _ in 0..CONNECT_ATTEMPTS {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!("no connected G({n}, {p}) after {CONNECT_ATTEMPTS} draws")))
}

/// Random recursive tree on shuffled labels.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::new(n);
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        g.add_edge(labels[i], labels[parent]).expect("tree edge");
    }
    g
}

/// Forest with each tree edge kept with probability `keep`.
pub fn random_forest<R: Rng>(rng: &mut R, n: usize, keep: f64) -> Graph {
    let tree = random_tree(rng, n);
    let edges: Vec<_> = tree.edges().filter(|_| rng.gen_bool(keep)).collect();
    Graph::from_edges(n, edges).expect("subset of tree edges")
}

/// Split graph with clique `0..a` and independent side `a..a+b`; each
/// clique–independent pair is an edge with probability `p`.
pub fn random_split_graph<R: Rng>(
    rng: &mut R,
    a: usize,
    b: usize,
    p: f64,
) -> (Graph, SplitPartition) {
    let mut g = Graph::complete(a);
    for _ in 0..b {
        let w = g.add_vertex();
        for u in 0..a {
            if rng.gen_bool(p) {
                g.add_edge(w, u).expect("fresh pair");
            }
        }
    }
    let partition =
        SplitPartition { clique: VertexSet::full(a), independent: (a..a + b).collect() };
    (g, partition)
}

/// Random cotree on `n ≥ 1` shuffled leaves.
pub fn random_cotree<R: Rng>(rng: &mut R, n: usize) -> Cotree {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    build_random_cotree(rng, &labels)
}

fn build_random_cotree<R: Rng>(rng: &mut R, leaves: &[usize]) -> Cotree {
    if leaves.len() == 1 {
        return Cotree::Leaf(leaves[0]);
    }
    let parts = rng.gen_range(2..=leaves.len().min(3));
    let mut cuts: Vec<usize> = (1..leaves.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    cuts.push(leaves.len());
    let mut prev = 0;
    let children = cuts
        .into_iter()
        .map(|c| {
            let child = build_random_cotree(rng, &leaves[prev..c]);
            prev = c;
            child
        })
        .collect();
    if rng.gen_bool(0.5) {
        Cotree::Union(children)
    } else {
        Cotree::Join(children)
    }
}

/// Intervals with left endpoints in `0..span` and lengths in `0..=span/2`.
pub fn random_interval_model<R: Rng>(rng: &mut R, n: usize, span: i64) -> IntervalModel {
    let span = span.max(1);
    let intervals = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..span);
            (l, l + rng.gen_range(0..=span / 2))
        })
        .collect();
    IntervalModel::new(intervals).expect("left endpoints never exceed right ones")
}

/// Random dominating set: a random subset completed by adding, for
/// each undominated vertex in random order, a random member of its closed
/// neighborhood.
pub fn random_dominating_set<R: Rng>(rng: &mut R, g: &Graph, density: f64) -> VertexSet {
    let mut d: VertexSet = g.vertices().filter(|_| rng.gen_bool(density)).collect();
    let mut order: Vec<usize> = g.vertices().collect();
    order.shuffle(rng);
    for v in order {
        if !g.closed_iter(v).any(|u| d.contains(u)) {
            let hood: Vec<usize> = g.closed_iter(v).collect();
            d.insert(*hood.choose(rng).expect("closed neighborhood is nonempty"));
        }
    }
    d
}

/// Greedy dominating set: repeatedly take the vertex dominating the most
/// undominated vertices, smallest id on ties.
pub fn greedy_dominating_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut dominated = vec![false; n];
    let mut left = n;
    let mut d = VertexSet::new();
    while left > 0 {
        let gain = |v: usize| g.closed_iter(v).filter(|&u| !dominated[u]).count();
        let best = g
            .vertices()
            .max_by_key(|&v| (gain(v), std::cmp::Reverse(v)))
            .expect("undominated vertices exist");
        for u in g.closed_iter(best) {
            if !dominated[u] {
                dominated[u] = true;
                left -= 1;
            }
        }
        d.insert(best);
    }
    d
}

/// Instance on `g` starting from the greedy dominating set; `k` defaults to
/// one above the start size.
pub fn greedy_instance(g: Graph, k: Option<usize>, s: usize) -> Result<Instance> {
    let start = greedy_dominating_set(&g);
    let k = k.unwrap_or(start.len() + 1);
    Instance::new(g, k, s, start)
}

/// The instance families exposed on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Random { n: usize, p: f64 },
    Tree { n: usize },
    Split { clique: usize, independent: usize, p: f64 },
}

pub fn generate(family: &Family, k: Option<usize>, s: usize, seed: u64) -> Result<Instance> {
    let mut rng = rng(seed);
    let g = match *family {
        Family::Random { n, p } => random_connected_graph(&mut rng, n, p)?,
        Family::Tree { n } => random_tree(&mut rng, n),
        Family::Split { clique, independent, p } => {
            random_split_graph(&mut rng, clique, independent, p).0
        }
    };
    greedy_instance(g, k, s)
}

/// `(G, |V|, s, V)`, the Dominating Set problem as an OPT-DSR instance.
pub fn from_ds(g: Graph, s: usize) -> Instance {
    instance_from_dominating_set_problem(g, s)
}
