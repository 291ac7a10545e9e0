use rand::Rng;

use super::{Outcome, Params, Warning};
use crate::error::Result;
use crate::graph::Graph;
use crate::plan::ShortcutPlan;
use crate::rng::seeded;

/// Uniformly random budgeted non-edges, sampled by rejection.
///
/// Gives up after `100 * k * max(1, n^2 / (2 * non_edges))` consecutive
/// rejections and reports how many shortcuts were placed.
pub fn random_baseline(graph: &Graph, params: &Params) -> Result<Outcome> {
    params.check()?;
    let n = graph.n();
    let mut plan = ShortcutPlan::new(n, params.k, params.delta);
    let non_edges = graph.non_edge_count();
    let exhausted = |plan: &ShortcutPlan| Outcome {
        plan: plan.clone(),
        warnings: vec![Warning::SamplingExhausted {
            added: plan.len(),
            requested: params.k,
        }],
    };
    if n < 2 || non_edges == 0 {
        return Ok(exhausted(&plan));
    }
    let density_factor = ((n as f64) * (n as f64) / (2.0 * non_edges as f64)).max(1.0);
    let limit = (100.0 * params.k as f64 * density_factor).ceil() as u64;

    let mut rng = seeded(params.seed);
    let mut rejections = 0u64;
    while !plan.is_full() {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        if plan.admits(graph, u, v) {
            plan.push_unchecked(u, v);
            rejections = 0;
        } else {
            rejections += 1;
            if rejections >= limit {
                return Ok(exhausted(&plan));
            }
        }
    }
    Ok(Outcome::new(plan))
}
