use super::tree::{embed_full_tree, TreeNode};
use super::{Outcome, Params, Warning};
use crate::clustering::{k_center, Clustering};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plan::ShortcutPlan;

fn clusters(graph: &Graph, params: &Params) -> Result<(Clustering, Vec<Warning>)> {
    params.check()?;
    let requested = params.k.saturating_add(1);
    let clustering = k_center(graph, requested, params.seed)?;
    let mut warnings = Vec::new();
    if clustering.short {
        warnings.push(Warning::ShortClustering {
            centers: clustering.len(),
            requested,
        });
    }
    Ok((clustering, warnings))
}

/// Index of the largest cluster; ties go to the earliest-selected center.
fn largest(clustering: &Clustering) -> usize {
    let mut best = 0;
    for (i, m) in clustering.members.iter().enumerate() {
        if m.len() > clustering.members[best].len() {
            best = i;
        }
    }
    best
}

/// Star shortcutting from the largest of `k + 1` farthest-first clusters.
///
/// Every other center is joined to the smallest-id vertex of the largest
/// cluster that still has budget and is not already adjacent to it. Fails
/// with [`Error::InfeasibleCapacity`] when some center finds no such vertex.
pub fn constant_approx(graph: &Graph, params: &Params) -> Result<Outcome> {
    let (clustering, warnings) = clusters(graph, params)?;
    let hub = largest(&clustering);
    let pool = &clustering.members[hub];
    let mut plan = ShortcutPlan::new(graph.n(), params.k, params.delta);
    for (i, &c) in clustering.centers.iter().enumerate() {
        if i == hub {
            continue;
        }
        let target = pool.iter().copied().find(|&v| plan.admits(graph, c, v));
        match target {
            Some(v) => plan.push_unchecked(c, v),
            None => {
                return Err(Error::InfeasibleCapacity(format!(
                    "largest cluster (center {}) has no budgeted vertex left for center {c}",
                    clustering.centers[hub]
                )))
            }
        }
    }
    Ok(Outcome { plan, warnings })
}

/// Multi-level variant of [`constant_approx`]: clusters sorted by size
/// (descending, ties by selection order) are linked largest-first into a
/// tree, each cluster adopting children while its vertices have budget.
pub fn cluster_tree(graph: &Graph, params: &Params) -> Result<Outcome> {
    let (clustering, mut warnings) = clusters(graph, params)?;
    let mut order: Vec<usize> = (0..clustering.len()).collect();
    order.sort_by(|&a, &b| {
        clustering.members[b]
            .len()
            .cmp(&clustering.members[a].len())
            .then(a.cmp(&b))
    });
    let links = clustering.len() - 1;
    let capacity: usize = clustering.members.iter().map(|m| m.len() * params.delta).sum();
    if capacity < 2 * links {
        return Err(Error::InfeasibleCapacity(format!(
            "total cluster capacity {capacity} cannot host a tree with {links} links"
        )));
    }
    let nodes: Vec<TreeNode> = order
        .iter()
        .map(|&i| TreeNode::new(clustering.members[i].clone(), clustering.centers[i]))
        .collect();
    let emb = embed_full_tree(graph, &nodes, params.delta)?;
    if emb.substitutions > 0 {
        warnings.push(Warning::WiringSubstitutions(emb.substitutions));
    }
    let plan = ShortcutPlan::from_parts(graph.n(), params.k, params.delta, emb.plan.added().to_vec());
    Ok(Outcome { plan, warnings })
}
