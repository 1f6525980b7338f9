//! Optimization variant of dominating set reconfiguration under the token
//! addition/removal rule: exact oracle, preprocessing, kernelization, FPT
//! solvers, class-specific solvers and hardness constructions.

pub mod classes;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod preprocess;
pub mod reductions;
pub mod solver;
pub mod tar;
pub mod vc;

pub use error::{Error, Result};
pub use graph::{degeneracy, min_vertex_cover, Graph, VertexSet};
pub use kernel::{domination_core, fpt_ds_solve, reduce_r1, Kernel};
pub use oracle::{oracle_solve, reachable_sets, vcr_oracle_solve, Oracle, VcrInstance};
pub use preprocess::{classify, instance_from_dominating_set_problem, Classification};
pub use tar::{validate_sequence, Instance, Move, MoveKind, Solution, TarSequence, Verdict};
pub use vc::fpt_vc_solve;
