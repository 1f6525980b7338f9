use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Closed integer intervals, one per vertex; vertices are adjacent iff their
/// intervals intersect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalModel {
    intervals: Vec<(i64, i64)>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        if let Some((v, &(l, r))) = intervals.iter().enumerate().find(|(_, &(l, r))| l > r) {
            return Err(Error::InvalidIntervalModel(format!(
                "interval of vertex {v} has left endpoint {l} above right endpoint {r}"
            )));
        }
        Ok(IntervalModel { intervals })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn interval(&self, v: usize) -> (i64, i64) {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    fn intersects(&self, u: usize, v: usize) -> bool {
        let (a, b) = self.intervals[u];
        let (c, d) = self.intervals[v];
        a <= d && c <= b
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.intersects(u, v) {
                    g.add_edge(u, v).expect("distinct in-range vertices");
                }
            }
        }
        g
    }
}

/// Minimum dominating set of an interval graph by the left-to-right greedy:
/// take the undominated interval ending first, and select the interval
/// meeting it that reaches furthest right. Ties go to the smallest id.
pub fn canonical_ds_interval(model: &IntervalModel) -> VertexSet {
    let n = model.n();
    let mut by_right: Vec<usize> = (0..n).collect();
    by_right.sort_by_key(|&v| (model.interval(v).1, v));
    let mut dominated = vec![false; n];
    let mut out = VertexSet::new();
    for &v in &by_right {
        if dominated[v] {
            continue;
        }
        let pick = (0..n)
            .filter(|&u| u == v || model.intersects(u, v))
            .max_by_key(|&u| (model.interval(u).1, std::cmp::Reverse(u)))
            .expect("v meets itself");
        out.insert(pick);
        for (u, flag) in dominated.iter_mut().enumerate() {
            if u == pick || model.intersects(u, pick) {
                *flag = true;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let one = IntervalModel::new(vec![(0, 3)]).unwrap();
        assert_eq!(canonical_ds_interval(&one), VertexSet::from([0]));
        let two = IntervalModel::new(vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(canonical_ds_interval(&two), VertexSet::from([0, 1]));
        let p4 = IntervalModel::new(vec![(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p4.to_graph(), Graph::path(4));
        let ds = canonical_ds_interval(&p4);
        assert_eq!(ds.len(), 2);
        assert!(p4.to_graph().is_dominating(&ds));
        assert!(canonical_ds_interval(&IntervalModel::new(vec![]).unwrap()).is_empty());
        assert!(IntervalModel::new(vec![(3, 1)]).is_err());
    }
}
