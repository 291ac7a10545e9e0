//! Shortcut selection strategies. Every strategy returns a
//! [`ShortcutPlan`] that respects the `k` and per-vertex `delta` budgets.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plan::ShortcutPlan;

mod constant;
mod greedy;
mod log_approx;
mod path;
mod random;
mod tree;

pub use constant::{cluster_tree, constant_approx};
pub use greedy::{greedy_two_sweep, greedy_two_sweep_from};
pub use log_approx::log_approx;
pub use path::{path_construction, path_order, path_segments};
pub use random::random_baseline;
pub use tree::{embed_full_tree, TreeEmbedding, TreeNode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub k: usize,
    pub delta: usize,
    pub beta: usize,
    pub seed: u64,
}

impl Params {
    pub fn new(k: usize, delta: usize) -> Self {
        Params {
            k,
            delta,
            beta: 3,
            seed: 0,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn beta(mut self, beta: usize) -> Self {
        self.beta = beta;
        self
    }

    pub(crate) fn check(&self) -> Result<()> {
        if self.k < 1 {
            return Err(Error::InvalidParameter("k must be >= 1".into()));
        }
        if self.delta < 1 {
            return Err(Error::InvalidParameter("delta must be >= 1".into()));
        }
        Ok(())
    }
}

/// Non-fatal conditions a strategy reports alongside its plan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// Fewer shortcuts than requested could be placed.
    EarlyStop { added: usize, requested: usize },
    /// Random sampling gave up after too many consecutive rejections.
    SamplingExhausted { added: usize, requested: usize },
    /// No segment of the requested size exists.
    NoSegments { beta: usize },
    /// Fewer distinct vertices than requested cluster centers.
    ShortClustering { centers: usize, requested: usize },
    /// `k` was capped to the number of shortcuts the construction can use.
    CappedK { requested: usize, used: usize },
    /// A tree link landed on a non-center vertex because the preferred pair
    /// was already an edge.
    WiringSubstitutions(usize),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::EarlyStop { added, requested } => {
                write!(f, "early stop: added {added} of {requested} shortcuts")
            }
            Warning::SamplingExhausted { added, requested } => {
                write!(f, "sampling exhausted: added {added} of {requested} shortcuts")
            }
            Warning::NoSegments { beta } => write!(f, "no connected set of {beta} vertices; no shortcuts added"),
            Warning::ShortClustering { centers, requested } => {
                write!(f, "only {centers} distinct centers for {requested} requested clusters")
            }
            Warning::CappedK { requested, used } => write!(f, "k capped from {requested} to {used}"),
            Warning::WiringSubstitutions(count) => {
                write!(f, "{count} tree links rewired away from an existing edge")
            }
        }
    }
}

impl Serialize for Warning {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub plan: ShortcutPlan,
    pub warnings: Vec<Warning>,
}

impl Outcome {
    pub(crate) fn new(plan: ShortcutPlan) -> Self {
        Outcome {
            plan,
            warnings: Vec::new(),
        }
    }
}

/// The selectable strategies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Segment family embedded into a full tree (logarithmic approximation).
    Log,
    /// Star from the largest k-center cluster (constant approximation).
    Const,
    /// Size-sorted cluster tree, the multi-level form of `Const`.
    Tree,
    /// Repeatedly join a random budgeted vertex to its farthest partner.
    Greedy2Sweep,
    /// Uniformly random budgeted non-edges.
    Random,
    /// Interval segments of a path embedded into a full 3-tree.
    Path,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Log,
        Algorithm::Const,
        Algorithm::Tree,
        Algorithm::Greedy2Sweep,
        Algorithm::Random,
        Algorithm::Path,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Log => "log",
            Algorithm::Const => "const",
            Algorithm::Tree => "tree",
            Algorithm::Greedy2Sweep => "greedy2sweep",
            Algorithm::Random => "random",
            Algorithm::Path => "path",
        }
    }

    pub fn run(self, graph: &Graph, params: &Params) -> Result<Outcome> {
        match self {
            Algorithm::Log => log_approx(graph, params),
            Algorithm::Const => constant_approx(graph, params),
            Algorithm::Tree => cluster_tree(graph, params),
            Algorithm::Greedy2Sweep => greedy_two_sweep(graph, params),
            Algorithm::Random => random_baseline(graph, params),
            Algorithm::Path => {
                params.check()?;
                let order = path_order(graph).ok_or(Error::NotAPath)?;
                let outcome = path_construction(order.len(), params.k)?;
                let plan = outcome.plan.relabel(graph.n(), |i| order[i]);
                plan.validate(graph)?;
                Ok(Outcome {
                    plan,
                    warnings: outcome.warnings,
                })
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))
    }
}
