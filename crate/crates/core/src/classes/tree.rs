use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Minimum dominating set of a forest.
///
/// Each component is rooted at its smallest vertex and processed deepest
/// first (reverse BFS order, ties by id): an undominated vertex is covered by
/// selecting its parent, or itself when it is the root. Choosing the parent
/// is never worse, since the parent's closed neighborhood contains every
/// still-undominated vertex the child could reach.
pub fn canonical_ds_tree(g: &Graph) -> Result<VertexSet> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
    }

    let mut dominated = vec![false; n];
    let mut out = VertexSet::new();
    for &v in order.iter().rev() {
        if dominated[v] {
            continue;
        }
        let pick = if parent[v] == usize::MAX { v } else { parent[v] };
        out.insert(pick);
        dominated[pick] = true;
        for &u in g.neighbors(pick) {
            dominated[u] = true;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(canonical_ds_tree(&Graph::path(3)).unwrap(), VertexSet::from([1]));
        assert_eq!(canonical_ds_tree(&Graph::new(1)).unwrap(), VertexSet::from([0]));
        let p4 = canonical_ds_tree(&Graph::path(4)).unwrap();
        assert_eq!(p4.len(), 2);
        assert!(Graph::path(4).is_dominating(&p4));
        assert_eq!(canonical_ds_tree(&Graph::cycle(3)), Err(Error::NotAForest));
        assert_eq!(canonical_ds_tree(&Graph::new(0)).unwrap(), VertexSet::new());
    }
}
