use rand::Rng;

use super::{Outcome, Params, Warning};
use crate::error::{Error, Result};
use crate::graph::{Augmented, BfsScratch, Graph, UNREACHABLE};
use crate::plan::ShortcutPlan;
use crate::rng::seeded;

/// Greedy 2-Sweep: `k` times, pick a uniform random budgeted vertex `u` and
/// join it to the farthest budgeted vertex in the current augmented graph
/// that is not already adjacent to it.
pub fn greedy_two_sweep(graph: &Graph, params: &Params) -> Result<Outcome> {
    run(graph, params, None)
}

/// [`greedy_two_sweep`] with the first `u` fixed instead of drawn.
pub fn greedy_two_sweep_from(graph: &Graph, params: &Params, first: usize) -> Result<Outcome> {
    if first >= graph.n() {
        return Err(Error::VertexOutOfRange { vertex: first, n: graph.n() });
    }
    run(graph, params, Some(first))
}

fn run(graph: &Graph, params: &Params, mut forced: Option<usize>) -> Result<Outcome> {
    params.check()?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = graph.n();
    let mut rng = seeded(params.seed);
    let mut plan = ShortcutPlan::new(n, params.k, params.delta);
    let mut aug = Augmented::new(graph);
    let mut scratch = BfsScratch::new();
    let mut out_warnings = Vec::new();

    'rounds: for _ in 0..params.k {
        let mut pool: Vec<usize> = (0..n).filter(|&v| plan.has_budget(v)).collect();
        loop {
            if pool.len() < 2 {
                out_warnings.push(Warning::EarlyStop {
                    added: plan.len(),
                    requested: params.k,
                });
                break 'rounds;
            }
            let u = match forced.take() {
                Some(f) if plan.has_budget(f) => {
                    let at = pool.iter().position(|&v| v == f).expect("budgeted vertex in pool");
                    pool.swap_remove(at)
                }
                _ => pool.swap_remove(rng.gen_range(0..pool.len())),
            };
            let dist = scratch.run(&aug, &[u]);
            let mut best: Option<usize> = None;
            for (w, &d) in dist.iter().enumerate() {
                if d <= 1 || !plan.has_budget(w) {
                    continue;
                }
                if best.map_or(true, |b| d > dist[b]) {
                    best = Some(w);
                }
            }
            if let Some(v) = best {
                debug_assert!(dist[v] == UNREACHABLE || dist[v] >= 2);
                plan.push_unchecked(u, v);
                aug.add(u, v);
                continue 'rounds;
            }
            // u has no eligible partner; try another u
        }
    }
    Ok(Outcome {
        plan,
        warnings: out_warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Hops;
    use crate::metrics::exact_diameter;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn p5_from_endpoint_closes_the_cycle() {
        let g = path(5);
        let out = greedy_two_sweep_from(&g, &Params::new(1, 1), 0).unwrap();
        assert_eq!(out.plan.added(), &[(0, 4)]);
        let d = exact_diameter(&Augmented::with_edges(&g, out.plan.added())).value;
        assert_eq!(d, Hops::Finite(2));
    }

    #[test]
    fn complete_graph_stops_immediately() {
        for k in 1..4 {
            let out = greedy_two_sweep(&complete(4), &Params::new(k, 2)).unwrap();
            assert!(out.plan.is_empty());
            assert!(matches!(out.warnings[..], [Warning::EarlyStop { added: 0, .. }]));
        }
    }

    #[test]
    fn p3_adds_one_edge_then_stops() {
        for seed in 0..10 {
            let out = greedy_two_sweep(&path(3), &Params::new(2, 1).seed(seed)).unwrap();
            assert_eq!(out.plan.added(), &[(0, 2)]);
            assert_eq!(out.warnings.len(), 1);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let g = path(40);
        let a = greedy_two_sweep(&g, &Params::new(5, 2).seed(7)).unwrap();
        let b = greedy_two_sweep(&g, &Params::new(5, 2).seed(7)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.plan.len(), 5);
    }
}
