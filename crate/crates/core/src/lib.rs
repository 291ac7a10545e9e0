//! Shortcut edges that shrink graph diameter under a per-vertex budget.
//!
//! Given a graph, a number `k` of new edges and a limit `delta` on how many
//! new edges may touch any vertex, the algorithms in [`algos`] choose which
//! non-edges to add. [`metrics`] measures the result, [`oracle`] solves tiny
//! instances exactly, [`bounds`] evaluates the closed-form guarantees and
//! [`instances`] generates inputs.
//!
//! ```
//! use bcmd::{algos::{log_approx, Params}, instances::gen_path, metrics::exact_diameter, graph::Augmented};
//!
//! let g = gen_path(60).unwrap();
//! let out = log_approx(&g, &Params::new(4, 1)).unwrap();
//! let after = exact_diameter(&Augmented::with_edges(&g, out.plan.added()));
//! assert!(after.value < exact_diameter(&g).value);
//! ```

pub mod algos;
pub mod bounds;
pub mod cli;
pub mod clustering;
pub mod error;
pub mod graph;
pub mod instances;
pub mod metrics;
pub mod oracle;
pub mod plan;
pub mod rng;

pub use algos::{Algorithm, Outcome, Params, Warning};
pub use error::{Error, Result};
pub use graph::{Graph, Hops};
pub use plan::ShortcutPlan;
