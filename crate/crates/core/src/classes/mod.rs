//! Graph classes with a canonical dominating set: a minimum dominating set
//! reachable from every dominating set `D` under TAR(|D|+1). On these classes
//! OPT-DSR reduces to comparing the canonical set's size with `s`.

mod cograph;
mod interval;
mod tree;

pub use cograph::{build_cotree, canonical_ds_cograph, Cotree};
pub use interval::{canonical_ds_interval, IntervalModel};
pub use tree::canonical_ds_tree;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::preprocess::{classify, Classification};
use crate::tar::{Instance, Solution};

/// Structural certificate that the instance graph lies in a supported class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Forest,
    Cotree(Cotree),
    Interval(IntervalModel),
}

impl Evidence {
    /// The canonical dominating set of `inst.graph`, after checking that the
    /// evidence describes that graph.
    pub fn canonical_set(&self, inst: &Instance) -> Result<VertexSet> {
        let g = &inst.graph;
        match self {
            Evidence::Forest => canonical_ds_tree(g),
            Evidence::Cotree(t) => {
                if &t.to_graph(g.n())? != g {
                    return Err(Error::EvidenceMismatch);
                }
                canonical_ds_cograph(t)
            }
            Evidence::Interval(model) => {
                if model.n() != g.n() || &model.to_graph() != g {
                    return Err(Error::EvidenceMismatch);
                }
                Ok(canonical_ds_interval(model))
            }
        }
    }
}

/// Decides the instance through the canonical set. A `Yes` carries no
/// witness unless preprocessing already settled the instance.
pub fn class_solve(inst: &Instance, evidence: &Evidence) -> Result<Solution> {
    let canonical = evidence.canonical_set(inst)?;
    match classify(inst)? {
        Classification::Proceed { instance, .. } => {
            if canonical.len() <= instance.s {
                Ok(Solution::yes(canonical, None))
            } else {
                Ok(Solution::no())
            }
        }
        decided => Ok(decided.solution().expect("decided classification")),
    }
}
