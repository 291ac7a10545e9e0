use std::fs;

use serde::Serialize;

use super::{read_graph, OracleArgs};
use crate::error::{Error, Result};
use crate::graph::{Hops, LoadedGraph};
use crate::metrics::ColorPartition;
use crate::oracle::{solve_exact, Objective};
use crate::plan::PlanJson;

#[derive(Clone, Debug, Serialize)]
pub struct OracleOutput {
    pub optimum: Hops,
    pub objective: String,
    /// Smallest optimal plan in input labels.
    pub plan: PlanJson,
    pub explored: u64,
}

fn parse_label(loaded: &LoadedGraph, tok: &str) -> Result<usize> {
    let label: u64 = tok
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad vertex id {tok:?}")))?;
    loaded
        .index_of(label)
        .ok_or_else(|| Error::InvalidParameter(format!("vertex {label} is not in the graph")))
}

fn parse_objective(loaded: &LoadedGraph, spec: &str) -> Result<Objective> {
    if spec == "diameter" {
        return Ok(Objective::Diameter);
    }
    if let Some(v) = spec.strip_prefix("ss:") {
        return Ok(Objective::SingleSource(parse_label(loaded, v)?));
    }
    if let Some(file) = spec.strip_prefix("colored:") {
        let text = fs::read_to_string(file)?;
        let side = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| parse_label(loaded, l))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Objective::Colored(ColorPartition::from_side(loaded.graph.n(), &side)?));
    }
    Err(Error::InvalidParameter(format!(
        "unknown objective {spec:?}; expected diameter, ss:V or colored:FILE"
    )))
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<OracleOutput> {
    let loaded = read_graph(&args.graph)?;
    let objective = parse_objective(&loaded, &args.objective)?;
    let result = solve_exact(&loaded.graph, args.k, args.delta, objective)?;
    let mut plan = result.plan.to_json();
    for pair in &mut plan.added {
        for end in pair.iter_mut() {
            *end = loaded.labels[*end as usize];
        }
    }
    Ok(OracleOutput {
        optimum: result.optimum,
        objective: args.objective.clone(),
        plan,
        explored: result.explored,
    })
}
