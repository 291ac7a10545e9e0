//! Exhaustive solver for tiny instances, used as ground truth.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Augmented, BfsScratch, Graph, Hops};
use crate::metrics::{colored_scan, diameter_at_most, ColorPartition};
use crate::plan::ShortcutPlan;

/// Largest number of candidate shortcut sets [`solve_exact`] will examine.
pub const DEFAULT_CAP: u128 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Objective {
    Diameter,
    /// Eccentricity of one designated vertex.
    SingleSource(usize),
    /// Largest distance between the two sides of a partition.
    Colored(ColorPartition),
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Diameter => f.write_str("diameter"),
            Objective::SingleSource(v) => write!(f, "single_source({v})"),
            Objective::Colored(_) => f.write_str("colored"),
        }
    }
}

impl Objective {
    fn check(&self, n: usize) -> Result<()> {
        match self {
            Objective::Diameter => Ok(()),
            Objective::SingleSource(v) if *v < n => Ok(()),
            Objective::SingleSource(v) => Err(Error::VertexOutOfRange { vertex: *v, n }),
            Objective::Colored(p) if p.len() == n => Ok(()),
            Objective::Colored(p) => Err(Error::InvalidParameter(format!(
                "partition covers {} vertices, graph has {n}",
                p.len()
            ))),
        }
    }

    /// Objective value, or `None` once it is known to exceed `limit`.
    fn eval(&self, graph: &Augmented<'_>, limit: Hops, scratch: &mut BfsScratch) -> Option<Hops> {
        let value = match self {
            Objective::Diameter => return diameter_at_most(graph, limit, scratch),
            Objective::SingleSource(v) => crate::graph::farthest_of(scratch.run(graph, &[*v])).0,
            Objective::Colored(p) => colored_scan(graph, p, scratch),
        };
        (value <= limit).then_some(value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum: Hops,
    /// Lexicographically smallest optimal shortcut set.
    pub plan: ShortcutPlan,
    pub objective: Objective,
    /// Feasible shortcut sets examined.
    pub explored: u64,
}

/// Number of subsets of size `0..=k` of `items` elements, saturating.
pub fn candidate_sets(items: u64, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for i in 0..=k as u64 {
        if i > items {
            break;
        }
        if i > 0 {
            term = term.saturating_mul((items - i + 1) as u128) / i as u128;
        }
        total = total.saturating_add(term);
    }
    total
}

pub fn solve_exact(graph: &Graph, k: usize, delta: usize, objective: Objective) -> Result<OracleResult> {
    solve_exact_capped(graph, k, delta, objective, DEFAULT_CAP)
}

/// Enumerates every set of at most `k` non-edges with per-vertex usage at
/// most `delta` and returns the best objective value.
///
/// Non-edges are sorted lexicographically and sets are visited depth-first
/// in lexicographic order, so the first optimum found is the smallest
/// witness. A branch is cut as soon as its last shortcut breaks a budget.
pub fn solve_exact_capped(
    graph: &Graph,
    k: usize,
    delta: usize,
    objective: Objective,
    cap: u128,
) -> Result<OracleResult> {
    let n = graph.n();
    objective.check(n)?;
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !graph.has_edge(u, v))
        .collect();
    let estimate = candidate_sets(non_edges.len() as u64, k);
    if estimate > cap {
        return Err(Error::OracleCapExceeded { estimate, cap });
    }

    let mut search = Search {
        non_edges: &non_edges,
        objective: &objective,
        k,
        delta,
        usage: vec![0; n],
        chosen: Vec::with_capacity(k),
        aug: Augmented::new(graph),
        scratch: BfsScratch::new(),
        best: Hops::Infinite,
        best_set: Vec::new(),
        explored: 0,
        found: false,
    };
    search.visit(0);
    debug_assert!(search.found);

    let added = search.best_set.iter().map(|&i| non_edges[i]).collect();
    let best = search.best;
    let explored = search.explored;
    Ok(OracleResult {
        optimum: best,
        plan: ShortcutPlan::from_parts(n, k, delta, added),
        objective,
        explored,
    })
}

struct Search<'a> {
    non_edges: &'a [(usize, usize)],
    objective: &'a Objective,
    k: usize,
    delta: usize,
    usage: Vec<usize>,
    chosen: Vec<usize>,
    aug: Augmented<'a>,
    scratch: BfsScratch,
    best: Hops,
    best_set: Vec<usize>,
    explored: u64,
    found: bool,
}

impl Search<'_> {
    fn visit(&mut self, from: usize) {
        self.explored += 1;
        // only strictly better sets replace the incumbent
        let limit = match self.best {
            Hops::Finite(0) => return,
            Hops::Finite(b) if self.found => Hops::Finite(b - 1),
            _ => Hops::Infinite,
        };
        if let Some(value) = self.objective.eval(&self.aug, limit, &mut self.scratch) {
            if !self.found || value < self.best {
                self.best = value;
                self.best_set = self.chosen.clone();
                self.found = true;
            }
        }
        if self.chosen.len() == self.k {
            return;
        }
        for i in from..self.non_edges.len() {
            let (u, v) = self.non_edges[i];
            if self.usage[u] >= self.delta || self.usage[v] >= self.delta {
                continue;
            }
            self.usage[u] += 1;
            self.usage[v] += 1;
            self.chosen.push(i);
            self.aug.add(u, v);
            self.visit(i + 1);
            self.aug.remove_last(u, v);
            self.chosen.pop();
            self.usage[u] -= 1;
            self.usage[v] -= 1;
        }
    }
}

/// Objective value of `graph` augmented by `plan`.
pub fn verify_plan(graph: &Graph, plan: &ShortcutPlan, objective: &Objective) -> Result<Hops> {
    plan.validate(graph)?;
    objective.check(graph.n())?;
    let aug = Augmented::with_edges(graph, plan.added());
    let mut scratch = BfsScratch::new();
    Ok(objective
        .eval(&aug, Hops::Infinite, &mut scratch)
        .expect("no limit"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn p5_one_matching_edge() {
        let r = solve_exact(&path(5), 1, 1, Objective::Diameter).unwrap();
        assert_eq!(r.optimum, Hops::Finite(2));
        assert_eq!(r.plan.added(), &[(0, 4)]);
        assert_eq!(verify_plan(&path(5), &r.plan, &Objective::Diameter).unwrap(), Hops::Finite(2));
    }

    #[test]
    fn k_zero_is_identity() {
        let r = solve_exact(&path(6), 0, 1, Objective::Diameter).unwrap();
        assert_eq!(r.optimum, Hops::Finite(5));
        assert!(r.plan.is_empty());
        assert_eq!(r.explored, 1);
        let r = solve_exact(&path(5), 0, 1, Objective::SingleSource(0)).unwrap();
        assert_eq!(r.optimum, Hops::Finite(4));
    }

    #[test]
    fn verify_plan_objectives() {
        let p5 = path(5);
        let plan = ShortcutPlan::from_parts(5, 1, 1, vec![(0, 4)]);
        assert_eq!(verify_plan(&p5, &plan, &Objective::Diameter).unwrap(), Hops::Finite(2));
        let empty = ShortcutPlan::new(5, 1, 1);
        assert_eq!(verify_plan(&p5, &empty, &Objective::SingleSource(0)).unwrap(), Hops::Finite(4));

        let p6 = path(6);
        let plan = ShortcutPlan::from_parts(6, 1, 1, vec![(0, 5)]);
        let part = ColorPartition::from_sides(6, &[0], &[3]).unwrap();
        assert_eq!(verify_plan(&p6, &plan, &Objective::Colored(part)).unwrap(), Hops::Finite(3));
        let bad = ShortcutPlan::from_parts(5, 1, 1, vec![(0, 1)]);
        assert!(verify_plan(&p5, &bad, &Objective::Diameter).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(30);
        match solve_exact_capped(&g, 3, 1, Objective::Diameter, 1000) {
            Err(Error::OracleCapExceeded { estimate, cap: 1000 }) => {
                assert_eq!(estimate, 1 + 435 + 435 * 434 / 2 + 435 * 434 * 433 / 6);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn candidate_set_counts() {
        assert_eq!(candidate_sets(6, 0), 1);
        assert_eq!(candidate_sets(6, 1), 7);
        assert_eq!(candidate_sets(6, 2), 22);
        assert_eq!(candidate_sets(2, 5), 4);
    }
}
