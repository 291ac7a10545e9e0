use super::tree::{embed_full_tree, TreeNode};
use super::{Outcome, Warning};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plan::ShortcutPlan;

/// Three-vertex segments around the midpoints of `intervals` near-equal
/// intervals of the path `0..n`. Longer intervals come first; an even
/// interval uses its left midpoint.
pub fn path_segments(n: usize, intervals: usize) -> Vec<TreeNode> {
    let base = n / intervals;
    let extra = n % intervals;
    let mut start = 0;
    (0..intervals)
        .map(|i| {
            let len = base + usize::from(i < extra);
            let mid = start + (len - 1) / 2;
            start += len;
            TreeNode::new(vec![mid - 1, mid, mid + 1], mid)
        })
        .collect()
}

/// Matching shortcuts for the path `0 - 1 - ... - (n-1)`.
///
/// The path is cut into `k' + 1` intervals with `k' = min(k, n/3 - 1)` so
/// that every interval holds a full segment; the segments are linked into a
/// full 3-tree.
pub fn path_construction(n: usize, k: usize) -> Result<Outcome> {
    if k < 1 || 2 * k > n {
        return Err(Error::InvalidParameter(format!(
            "path construction needs 1 <= k <= n/2, got n={n} k={k}"
        )));
    }
    let used = k.min((n / 3).saturating_sub(1));
    let mut warnings = Vec::new();
    if used < k {
        warnings.push(Warning::CappedK { requested: k, used });
    }
    if used == 0 {
        return Ok(Outcome {
            plan: ShortcutPlan::new(n, k, 1),
            warnings,
        });
    }
    let path = Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?;
    let nodes = path_segments(n, used + 1);
    let emb = embed_full_tree(&path, &nodes, 1)?;
    let plan = ShortcutPlan::from_parts(n, k, 1, emb.plan.added().to_vec());
    Ok(Outcome { plan, warnings })
}

/// Vertices of `graph` in path order starting from the smaller endpoint, or
/// `None` if the graph is not a simple path.
pub fn path_order(graph: &Graph) -> Option<Vec<usize>> {
    let n = graph.n();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(vec![0]);
    }
    if graph.m() != n - 1 || (0..n).any(|v| graph.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| graph.degree(v) == 1)?;
    let mut order = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        order.push(cur);
        match graph.neighbors(cur).find(|&w| w != prev) {
            Some(next) if order.len() < n => {
                prev = cur;
                cur = next;
            }
            _ => break,
        }
    }
    (order.len() == n).then_some(order)
}
