use super::tree::{embed_full_tree, TreeNode};
use super::{Outcome, Params, Warning};
use crate::clustering::{farthest_segments, maximal_segments};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plan::ShortcutPlan;

/// Segment-tree shortcutting for connected graphs.
///
/// Builds a maximal family of disjoint `beta`-segments, keeps the `k + 1`
/// chosen farthest-first, and links them into a full tree of branching
/// `beta * delta`. Uses at most `min(k + 1, |family|) - 1` shortcuts.
pub fn log_approx(graph: &Graph, params: &Params) -> Result<Outcome> {
    params.check()?;
    if params.beta < 3 {
        return Err(Error::InvalidParameter("beta must be >= 3".into()));
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = graph.n();
    let family = maximal_segments(graph, params.beta)?;
    if family.is_empty() {
        let mut out = Outcome::new(ShortcutPlan::new(n, params.k, params.delta));
        out.warnings.push(Warning::NoSegments { beta: params.beta });
        return Ok(out);
    }
    let chosen = farthest_segments(graph, &family, params.k.saturating_add(1))?;
    let nodes: Vec<TreeNode> = chosen
        .iter()
        .map(|&i| TreeNode::new(family.segments[i].clone(), family.centers[i]))
        .collect();
    let emb = embed_full_tree(graph, &nodes, params.delta)?;
    let plan = ShortcutPlan::from_parts(n, params.k, params.delta, emb.plan.added().to_vec());
    let mut out = Outcome::new(plan);
    if emb.substitutions > 0 {
        out.warnings.push(Warning::WiringSubstitutions(emb.substitutions));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Augmented, Hops};
    use crate::metrics::exact_diameter;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn p9_with_two_shortcuts() {
        let g = path(9);
        let out = log_approx(&g, &Params::new(2, 1)).unwrap();
        // segments {0,1,2}, {6,7,8}, {3,4,5} in selection order; the root's
        // hosts 0 and 1 link to centers 7 and 4
        assert_eq!(out.plan.added(), &[(0, 7), (1, 4)]);
        out.plan.validate(&g).unwrap();
        let d = exact_diameter(&Augmented::with_edges(&g, out.plan.added())).value;
        assert_eq!(d, Hops::Finite(5));
    }

    #[test]
    fn k_one_adds_at_most_one_edge() {
        for n in 3..15 {
            let out = log_approx(&path(n), &Params::new(1, 1)).unwrap();
            assert!(out.plan.len() <= 1);
        }
    }

    #[test]
    fn tiny_graph_yields_empty_plan_with_warning() {
        let out = log_approx(&path(2), &Params::new(3, 1)).unwrap();
        assert!(out.plan.is_empty());
        assert_eq!(out.warnings, vec![Warning::NoSegments { beta: 3 }]);
    }

    #[test]
    fn rejects_disconnected_and_bad_beta() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert!(matches!(log_approx(&g, &Params::new(1, 1)), Err(Error::Disconnected)));
        assert!(log_approx(&path(5), &Params::new(1, 1).beta(2)).is_err());
        assert!(log_approx(&path(5), &Params::new(0, 1)).is_err());
    }
}
