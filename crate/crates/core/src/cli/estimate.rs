use serde::Serialize;

use super::{read_graph, EstimateArgs};
use crate::error::{Error, Result};
use crate::graph::{largest_component, Hops};
use crate::metrics::{exact_diameter, two_sweep};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EstimateOutput {
    pub diameter: Hops,
    pub exact: bool,
    /// Endpoints (input labels) of the reported distance.
    pub witness: Option<[u64; 2]>,
    pub n: usize,
    pub m: usize,
    /// Vertices of the graph that was measured.
    pub measured_n: usize,
    pub warnings: Vec<String>,
}

pub fn cmd_estimate(args: &EstimateArgs) -> Result<EstimateOutput> {
    let loaded = read_graph(&args.graph)?;
    let full = &loaded.graph;
    let mut warnings = Vec::new();
    let connected = full.is_connected();

    if !connected && !args.lcc {
        if !args.exact {
            return Err(Error::InvalidParameter(
                "graph is disconnected; pass --lcc to estimate on its largest connected component".into(),
            ));
        }
        warnings.push("graph is disconnected; diameter is infinite (use --lcc for the largest component)".into());
    }

    let (graph, original) = if args.lcc && !connected {
        let sub = largest_component(full);
        warnings.push(format!(
            "restricted to the largest connected component ({} of {} vertices)",
            sub.graph.n(),
            full.n()
        ));
        (sub.graph, sub.original)
    } else {
        (full.clone(), (0..full.n()).collect())
    };

    let result = if args.exact {
        exact_diameter(&graph)
    } else {
        two_sweep(&graph, args.seed)?
    };
    let witness = (result.value.is_finite() && graph.n() > 1).then(|| {
        let (u, v) = result.witness;
        [loaded.labels[original[u]], loaded.labels[original[v]]]
    });
    Ok(EstimateOutput {
        diameter: result.value,
        exact: result.exact,
        witness,
        n: full.n(),
        m: full.m(),
        measured_n: graph.n(),
        warnings,
    })
}
