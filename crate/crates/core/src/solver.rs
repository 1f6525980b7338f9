//! Strategy dispatch shared by the command line and the tests.

use std::fmt;

use crate::classes::{build_cotree, class_solve, Evidence};
use crate::error::{Error, Result};
use crate::graph::min_vertex_cover;
use crate::kernel::{finish, fpt_ds_solve_with};
use crate::oracle::Oracle;
use crate::preprocess::classify;
use crate::tar::{Instance, Solution};
use crate::vc::fpt_vc_solve_with;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Oracle,
    FptDs,
    FptVc,
    Class,
}

/// What actually produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Preprocess,
    Oracle,
    FptDs,
    FptVc,
    Class,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Preprocess => "preprocess",
            Route::Oracle => "oracle",
            Route::FptDs => "fpt-ds",
            Route::FptVc => "fpt-vc",
            Route::Class => "class",
        })
    }
}

/// Forest evidence when the graph is a forest, else a cotree when it is a
/// cograph.
pub fn detect_evidence(inst: &Instance) -> Option<Evidence> {
    let g = &inst.graph;
    if g.is_forest() {
        return Some(Evidence::Forest);
    }
    build_cotree(g).ok().map(Evidence::Cotree)
}

/// Solves with the given strategy. `Auto` classifies first, then uses the
/// class solver when evidence is given or the graph is a forest, the oracle
/// when the graph fits under its cap, and otherwise the vertex-cover solver
/// if `τ < s` or the kernel solver if not.
pub fn solve(
    inst: &Instance,
    strategy: Strategy,
    evidence: Option<&Evidence>,
    oracle: &Oracle,
) -> Result<(Solution, Route)> {
    match strategy {
        Strategy::Oracle => Ok((oracle.solve(inst)?, Route::Oracle)),
        Strategy::FptDs => Ok((fpt_ds_solve_with(inst, oracle)?, Route::FptDs)),
        Strategy::FptVc => Ok((fpt_vc_solve_with(inst, oracle)?, Route::FptVc)),
        Strategy::Class => {
            let evidence = match evidence {
                Some(e) => e.clone(),
                None => detect_evidence(inst).ok_or(Error::MissingEvidence)?,
            };
            Ok((class_solve(inst, &evidence)?, Route::Class))
        }
        Strategy::Auto => {
            if let Some(sol) = classify(inst)?.solution() {
                return Ok((finish(inst, sol)?, Route::Preprocess));
            }
            if let Some(e) = evidence {
                return Ok((class_solve(inst, e)?, Route::Class));
            }
            if inst.graph.is_forest() {
                return Ok((class_solve(inst, &Evidence::Forest)?, Route::Class));
            }
            if inst.n() <= oracle.cap {
                return Ok((oracle.solve(inst)?, Route::Oracle));
            }
            if min_vertex_cover(&inst.graph).len() < inst.s {
                Ok((fpt_vc_solve_with(inst, oracle)?, Route::FptVc))
            } else {
                Ok((fpt_ds_solve_with(inst, oracle)?, Route::FptDs))
            }
        }
    }
}
