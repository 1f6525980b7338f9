use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cotree: leaves are vertices, `Union` is disjoint union and `Join` adds
/// every edge between different children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn min_leaf(&self) -> usize {
        match self {
            Cotree::Leaf(v) => *v,
            Cotree::Union(ch) | Cotree::Join(ch) => {
                ch.iter().map(Cotree::min_leaf).min().expect("validated nodes have children")
            }
        }
    }

    /// Internal nodes need children and every leaf must be distinct.
    pub fn validate(&self) -> Result<()> {
        self.check_nodes()?;
        let leaves = self.leaves();
        let distinct: BTreeSet<usize> = leaves.iter().copied().collect();
        if distinct.len() != leaves.len() {
            return Err(Error::MalformedCotree("a vertex appears at more than one leaf".into()));
        }
        Ok(())
    }

    fn check_nodes(&self) -> Result<()> {
        match self {
            Cotree::Leaf(_) => Ok(()),
            Cotree::Union(ch) | Cotree::Join(ch) => {
                if ch.is_empty() {
                    return Err(Error::MalformedCotree("internal node without children".into()));
                }
                ch.iter().try_for_each(Cotree::check_nodes)
            }
        }
    }

    /// Evaluates the cotree on `n` vertices; leaves must cover exactly `0..n`.
    pub fn to_graph(&self, n: usize) -> Result<Graph> {
        self.validate()?;
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        if leaves != (0..n).collect::<Vec<_>>() {
            return Err(Error::MalformedCotree(format!("leaves do not cover 0..{n}")));
        }
        let mut g = Graph::new(n);
        self.add_edges(&mut g);
        Ok(g)
    }

    fn add_edges(&self, g: &mut Graph) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(ch) => ch.iter().for_each(|c| c.add_edges(g)),
            Cotree::Join(ch) => {
                let parts: Vec<Vec<usize>> = ch.iter().map(Cotree::leaves).collect();
                for (i, a) in parts.iter().enumerate() {
                    for b in &parts[i + 1..] {
                        for &u in a {
                            for &v in b {
                                g.add_edge(u, v).expect("leaves are valid vertices");
                            }
                        }
                    }
                }
                ch.iter().for_each(|c| c.add_edges(g));
            }
        }
    }
}

/// Cotree by splitting alternately on components of the graph and of its
/// complement. Children are ordered by smallest vertex.
pub fn build_cotree(g: &Graph) -> Result<Cotree> {
    if g.n() == 0 {
        return Err(Error::MalformedCotree("the empty graph has no cotree".into()));
    }
    let all: Vec<usize> = g.vertices().collect();
    split(g, &all)
}

fn split(g: &Graph, vertices: &[usize]) -> Result<Cotree> {
    if vertices.len() == 1 {
        return Ok(Cotree::Leaf(vertices[0]));
    }
    let sub = g.induced_subgraph(vertices);
    let comps = sub.components();
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| split(g, &c.iter().map(|&i| vertices[i]).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        return Ok(Cotree::Union(children));
    }
    let co = sub.complement().components();
    if co.len() > 1 {
        let children = co
            .iter()
            .map(|c| split(g, &c.iter().map(|&i| vertices[i]).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        return Ok(Cotree::Join(children));
    }
    Err(Error::NotACograph)
}

struct Summary {
    ds: Vec<usize>,
    /// smallest vertex adjacent to everything in the subtree, if any
    universal: Option<usize>,
}

fn summarize(t: &Cotree) -> Summary {
    match t {
        Cotree::Leaf(v) => Summary { ds: vec![*v], universal: Some(*v) },
        Cotree::Union(ch) if ch.len() == 1 => summarize(&ch[0]),
        Cotree::Union(ch) => {
            let ds = ch.iter().flat_map(|c| summarize(c).ds).collect();
            Summary { ds, universal: None }
        }
        Cotree::Join(ch) => {
            let subs: Vec<Summary> = ch.iter().map(summarize).collect();
            let universal = subs.iter().filter_map(|s| s.universal).min();
            let ds = match universal {
                Some(u) => vec![u],
                None => {
                    // one vertex from each of two different children dominates the join
                    let mins: Vec<usize> = ch.iter().map(Cotree::min_leaf).collect();
                    let (first_child, &first) =
                        mins.iter().enumerate().min_by_key(|&(_, &v)| v).expect("nonempty join");
                    let second = mins
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != first_child)
                        .map(|(_, &v)| v)
                        .min()
                        .expect("a join without a universal vertex has two children");
                    vec![first, second]
                }
            };
            Summary { ds, universal }
        }
    }
}

/// Minimum dominating set of the cograph described by `t`.
///
/// Unions concatenate their children's sets. A join is dominated by a single
/// universal vertex when one exists (smallest id), and otherwise by the
/// smallest vertex together with the smallest vertex of another child.
pub fn canonical_ds_cograph(t: &Cotree) -> Result<VertexSet> {
    t.validate()?;
    Ok(summarize(t).ds.into_iter().collect())
}
