use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{elapsed_ms, read_graph, ShortcutArgs};
use crate::algos::{path_order, Algorithm, Outcome, Params};
use crate::bounds::{eval_bounds, BoundSet};
use crate::error::{Error, Result};
use crate::graph::{largest_component, Augmented, Graph, Hops, LoadedGraph};
use crate::metrics::{exact_diameter, two_sweep, DiameterResult};
use crate::plan::{PlanJson, ShortcutPlan};

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input: InputInfo,
    pub algorithm: AlgorithmInfo,
    pub before: Measurement,
    /// Best repetition; `None` when every repetition was infeasible.
    pub after: Option<AfterInfo>,
    /// Winning plan in input labels.
    pub plan: PlanJson,
    pub bounds: BoundSet,
    pub timing: Timing,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputInfo {
    pub path: String,
    pub n: usize,
    pub m: usize,
    pub lcc_n: usize,
    pub lcc_m: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgorithmInfo {
    pub name: String,
    pub k: usize,
    pub delta: usize,
    pub beta: usize,
    pub seed: u64,
    pub repeats: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Measurement {
    pub diameter: Hops,
    pub mode: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct AfterInfo {
    pub diameter: Hops,
    pub mode: &'static str,
    pub repetition: usize,
    pub seed: u64,
    pub edges_added: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub load_ms: f64,
    pub before_ms: f64,
    pub run_ms: f64,
    pub total_ms: f64,
}

/// A report plus whether the run should exit with the infeasible status.
#[derive(Clone, Debug)]
pub struct ShortcutRun {
    pub report: Report,
    pub infeasible: bool,
}

pub(crate) fn mode(exact: bool) -> &'static str {
    if exact {
        "exact"
    } else {
        "two_sweep"
    }
}

/// The graph algorithms run on: the input, or its largest component when
/// the input is disconnected.
pub(crate) struct Working {
    pub graph: Graph,
    pub original: Vec<usize>,
    pub warnings: Vec<String>,
}

impl Working {
    pub fn new(loaded: &LoadedGraph) -> Self {
        let full = &loaded.graph;
        if full.n() == 0 || full.is_connected() {
            return Working {
                graph: full.clone(),
                original: (0..full.n()).collect(),
                warnings: Vec::new(),
            };
        }
        let sub = largest_component(full);
        let warnings = vec![format!(
            "input is disconnected; using the largest connected component ({} of {} vertices)",
            sub.graph.n(),
            full.n()
        )];
        Working {
            graph: sub.graph,
            original: sub.original,
            warnings,
        }
    }

    pub fn plan_json(&self, loaded: &LoadedGraph, plan: &ShortcutPlan) -> PlanJson {
        let mut json = plan.to_json();
        for pair in &mut json.added {
            for end in pair.iter_mut() {
                *end = loaded.labels[self.original[*end as usize]];
            }
        }
        json
    }
}

pub(crate) fn measure(graph: &Graph, added: &[(usize, usize)], exact: bool, seed: u64) -> Result<DiameterResult> {
    let aug = Augmented::with_edges(graph, added);
    if exact {
        Ok(exact_diameter(&aug))
    } else {
        two_sweep(&aug, seed)
    }
}

pub(crate) struct Repetitions {
    /// `(diameter, repetition, outcome)` of the best feasible repetition;
    /// ties go to the earliest.
    pub best: Option<(Hops, usize, Outcome)>,
    pub infeasible: Vec<String>,
    pub run_ms: f64,
}

fn is_infeasible(e: &Error) -> bool {
    matches!(e, Error::InfeasibleCapacity(_) | Error::BlockedWiring { .. })
}

/// Runs `repeats` repetitions with seeds `params.seed + r` and keeps the
/// one with the smallest measured diameter.
pub(crate) fn repeat_best(
    graph: &Graph,
    algo: Algorithm,
    params: Params,
    repeats: usize,
    exact: bool,
) -> Result<Repetitions> {
    let start = Instant::now();
    if params.k == 0 {
        let d = measure(graph, &[], exact, params.seed)?.value;
        let plan = ShortcutPlan::new(graph.n(), 0, params.delta);
        return Ok(Repetitions {
            best: Some((d, 0, Outcome { plan, warnings: Vec::new() })),
            infeasible: Vec::new(),
            run_ms: elapsed_ms(start),
        });
    }
    let runs: Vec<Result<(Hops, Outcome)>> = (0..repeats.max(1))
        .into_par_iter()
        .map(|r| {
            let seed = params.seed.wrapping_add(r as u64);
            let out = algo.run(graph, &params.seed(seed))?;
            let d = measure(graph, out.plan.added(), exact, seed)?;
            Ok((d.value, out))
        })
        .collect();

    let mut best: Option<(Hops, usize, Outcome)> = None;
    let mut infeasible = Vec::new();
    for (r, run) in runs.into_iter().enumerate() {
        match run {
            Ok((d, out)) => {
                if best.as_ref().map_or(true, |b| d < b.0) {
                    best = Some((d, r, out));
                }
            }
            Err(e) if is_infeasible(&e) => infeasible.push(e.to_string()),
            Err(e) => return Err(e),
        }
    }
    Ok(Repetitions {
        best,
        infeasible,
        run_ms: elapsed_ms(start),
    })
}

pub fn cmd_shortcut(args: &ShortcutArgs) -> Result<ShortcutRun> {
    let total = Instant::now();
    let algo: Algorithm = args.algo.parse()?;
    if args.delta < 1 {
        return Err(Error::InvalidParameter("delta must be >= 1".into()));
    }
    let loaded = read_graph(&args.graph)?;
    let load_ms = elapsed_ms(total);

    let work = Working::new(&loaded);
    let mut warnings = work.warnings.clone();
    let graph = &work.graph;
    if algo == Algorithm::Path && path_order(&loaded.graph).is_none() {
        return Err(Error::NotAPath);
    }

    let t = Instant::now();
    let before = measure(graph, &[], args.exact_eval, args.seed)?;
    let before_ms = elapsed_ms(t);

    let params = Params::new(args.k, args.delta).beta(args.beta).seed(args.seed);
    let reps = repeat_best(graph, algo, params, args.repeats, args.exact_eval)?;
    warnings.extend(reps.infeasible.iter().cloned());

    let (after, plan) = match &reps.best {
        Some((d, r, out)) => {
            warnings.extend(out.warnings.iter().map(ToString::to_string));
            let after = AfterInfo {
                diameter: *d,
                mode: mode(args.exact_eval),
                repetition: *r,
                seed: args.seed.wrapping_add(*r as u64),
                edges_added: out.plan.len(),
            };
            (Some(after), work.plan_json(&loaded, &out.plan))
        }
        None => (
            None,
            PlanJson {
                k: args.k,
                delta: args.delta,
                added: Vec::new(),
            },
        ),
    };

    let n = graph.n();
    let mut bounds = eval_bounds(n, args.k, args.delta, args.beta, before.value.finite(), None);
    if path_order(graph).is_none() {
        bounds.path_lower = None;
        bounds.path_upper = None;
        bounds.cg_lower = None;
        bounds.cg_upper = None;
    }

    let report = Report {
        input: InputInfo {
            path: args.graph.display().to_string(),
            n: loaded.graph.n(),
            m: loaded.graph.m(),
            lcc_n: n,
            lcc_m: graph.m(),
        },
        algorithm: AlgorithmInfo {
            name: algo.name().to_string(),
            k: args.k,
            delta: args.delta,
            beta: args.beta,
            seed: args.seed,
            repeats: args.repeats,
        },
        before: Measurement {
            diameter: before.value,
            mode: mode(args.exact_eval),
        },
        after,
        plan,
        bounds,
        timing: Timing {
            load_ms,
            before_ms,
            run_ms: reps.run_ms,
            total_ms: elapsed_ms(total),
        },
        warnings,
    };
    Ok(ShortcutRun {
        infeasible: reps.best.is_none(),
        report,
    })
}
