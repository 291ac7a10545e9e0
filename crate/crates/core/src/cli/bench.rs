use std::fmt::Write as _;

use rayon::prelude::*;

use super::shortcut::{measure, repeat_best, Working};
use super::{read_graph, BenchArgs};
use crate::algos::{Algorithm, Params};
use crate::error::{Error, Result};
use crate::graph::Hops;

pub const CSV_HEADER: &str = "algo,k,delta,diam_before,diam_after_min,edges_added,runtime_ms,infeasible_flag";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub algo: Algorithm,
    pub k: usize,
    pub delta: usize,
    pub diam_before: Hops,
    /// `None` when no repetition produced a plan.
    pub diam_after_min: Option<Hops>,
    pub edges_added: usize,
    pub runtime_ms: f64,
    pub infeasible: bool,
}

/// One row per `(algo, delta, k)` cell in that nesting order. Cells run in
/// parallel; the row order does not depend on scheduling.
pub fn cmd_bench(args: &BenchArgs) -> Result<Vec<BenchRow>> {
    let algos = args
        .algos
        .iter()
        .map(|a| a.parse::<Algorithm>())
        .collect::<Result<Vec<_>>>()?;
    if args.delta_list.iter().any(|&d| d == 0) {
        return Err(Error::InvalidParameter("delta values must be >= 1".into()));
    }
    let loaded = read_graph(&args.graph)?;
    let work = Working::new(&loaded);
    for w in &work.warnings {
        eprintln!("warning: {w}");
    }
    let graph = &work.graph;
    let before = measure(graph, &[], args.exact_eval, args.seed)?.value;

    let cells: Vec<(Algorithm, usize, usize)> = algos
        .iter()
        .flat_map(|&a| {
            args.delta_list
                .iter()
                .flat_map(move |&d| args.k_list.iter().map(move |&k| (a, d, k)))
        })
        .collect();

    cells
        .par_iter()
        .map(|&(algo, delta, k)| {
            let params = Params::new(k, delta).beta(args.beta).seed(args.seed);
            let reps = repeat_best(graph, algo, params, args.repeats, args.exact_eval)?;
            Ok(BenchRow {
                algo,
                k,
                delta,
                diam_before: before,
                diam_after_min: reps.best.as_ref().map(|b| b.0),
                edges_added: reps.best.as_ref().map_or(0, |b| b.2.plan.len()),
                runtime_ms: reps.run_ms,
                infeasible: !reps.infeasible.is_empty(),
            })
        })
        .collect()
}

pub(crate) fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let after = r.diam_after_min.map(|d| d.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{:.3},{}",
            r.algo,
            r.k,
            r.delta,
            r.diam_before,
            after,
            r.edges_added,
            r.runtime_ms,
            u8::from(r.infeasible)
        )
        .expect("writing to a String");
    }
    out
}
