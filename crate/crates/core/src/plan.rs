use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A set of shortcut non-edges with per-vertex budget accounting.
///
/// Pairs are stored as `(min, max)` in insertion order. A plan built through
/// [`ShortcutPlan::try_add`] always satisfies its invariants; plans built
/// from raw parts (e.g. read from disk) must go through
/// [`ShortcutPlan::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortcutPlan {
    k_budget: usize,
    delta_budget: usize,
    added: Vec<(usize, usize)>,
    usage: Vec<usize>,
}

impl ShortcutPlan {
    pub fn new(n: usize, k_budget: usize, delta_budget: usize) -> Self {
        ShortcutPlan {
            k_budget,
            delta_budget,
            added: Vec::new(),
            usage: vec![0; n],
        }
    }

    /// Builds a plan without checking it against any graph.
    pub fn from_parts(n: usize, k_budget: usize, delta_budget: usize, added: Vec<(usize, usize)>) -> Self {
        let mut usage = vec![0; n];
        let added: Vec<_> = added.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        for &(u, v) in &added {
            if u < n {
                usage[u] += 1;
            }
            if v < n {
                usage[v] += 1;
            }
        }
        ShortcutPlan {
            k_budget,
            delta_budget,
            added,
            usage,
        }
    }

    pub fn k_budget(&self) -> usize {
        self.k_budget
    }

    pub fn delta_budget(&self) -> usize {
        self.delta_budget
    }

    pub fn added(&self) -> &[(usize, usize)] {
        &self.added
    }

    pub fn len(&self) -> usize {
        self.added.len()
    }

    pub fn is_empty(&self) -> bool {
        self.added.is_empty()
    }

    pub fn usage(&self, v: usize) -> usize {
        self.usage[v]
    }

    pub fn has_budget(&self, v: usize) -> bool {
        self.usage[v] < self.delta_budget
    }

    pub fn is_full(&self) -> bool {
        self.added.len() >= self.k_budget
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.added.contains(&key)
    }

    /// Whether `{u, v}` could be added: distinct, a non-edge of `graph`, not
    /// yet in the plan, both endpoints budgeted and `k` not exhausted.
    pub fn admits(&self, graph: &Graph, u: usize, v: usize) -> bool {
        u != v
            && !self.is_full()
            && self.has_budget(u)
            && self.has_budget(v)
            && !graph.has_edge(u, v)
            && !self.contains(u, v)
    }

    pub fn try_add(&mut self, graph: &Graph, u: usize, v: usize) -> Result<()> {
        let n = self.usage.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfEdge(u));
        }
        if self.is_full() {
            return Err(Error::TooManyShortcuts {
                added: self.added.len() + 1,
                k: self.k_budget,
            });
        }
        if graph.has_edge(u, v) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        if self.contains(u, v) {
            return Err(Error::DuplicateShortcut(u.min(v), u.max(v)));
        }
        for x in [u, v] {
            if !self.has_budget(x) {
                return Err(Error::BudgetViolation {
                    vertex: x,
                    delta: self.delta_budget,
                });
            }
        }
        self.push_unchecked(u, v);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, u: usize, v: usize) {
        self.added.push((u.min(v), u.max(v)));
        self.usage[u] += 1;
        self.usage[v] += 1;
    }

    /// Re-checks every invariant from scratch against `graph`.
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        let n = graph.n();
        if self.usage.len() != n {
            return Err(Error::InvalidParameter(format!(
                "plan is over {} vertices, graph has {n}",
                self.usage.len()
            )));
        }
        if self.added.len() > self.k_budget {
            return Err(Error::TooManyShortcuts {
                added: self.added.len(),
                k: self.k_budget,
            });
        }
        let mut seen = HashSet::new();
        let mut usage = vec![0usize; n];
        for &(u, v) in &self.added {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfEdge(u));
            }
            if graph.has_edge(u, v) {
                return Err(Error::EdgeExists(u, v));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateShortcut(u, v));
            }
            usage[u] += 1;
            usage[v] += 1;
        }
        // report the first violating vertex in plan order
        for &(u, v) in &self.added {
            for x in [u, v] {
                if usage[x] > self.delta_budget {
                    return Err(Error::BudgetViolation {
                        vertex: x,
                        delta: self.delta_budget,
                    });
                }
            }
        }
        debug_assert_eq!(usage, self.usage);
        Ok(())
    }

    /// True when no two shortcuts share an endpoint.
    pub fn is_matching(&self) -> bool {
        self.usage.iter().all(|&u| u <= 1)
    }

    /// Maps every endpoint through `map` into a plan over `n` vertices.
    pub fn relabel(&self, n: usize, map: impl Fn(usize) -> usize) -> ShortcutPlan {
        let added = self.added.iter().map(|&(u, v)| (map(u), map(v))).collect();
        ShortcutPlan::from_parts(n, self.k_budget, self.delta_budget, added)
    }

    pub fn to_json(&self) -> PlanJson {
        PlanJson {
            k: self.k_budget,
            delta: self.delta_budget,
            added: self.added.iter().map(|&(u, v)| [u as u64, v as u64]).collect(),
        }
    }
}

/// JSON form `{"k": .., "delta": .., "added": [[u, v], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanJson {
    pub k: usize,
    pub delta: usize,
    pub added: Vec<[u64; 2]>,
}

impl PlanJson {
    /// Plan over `n` vertices; each endpoint is translated by `index`
    /// (identity for canonical ids, or a label lookup).
    pub fn to_plan(&self, n: usize, index: impl Fn(u64) -> Option<usize>) -> Result<ShortcutPlan> {
        let mut added = Vec::with_capacity(self.added.len());
        for &[a, b] in &self.added {
            let u = index(a).ok_or(Error::VertexOutOfRange { vertex: a as usize, n })?;
            let v = index(b).ok_or(Error::VertexOutOfRange { vertex: b as usize, n })?;
            added.push((u, v));
        }
        Ok(ShortcutPlan::from_parts(n, self.k, self.delta, added))
    }
}
