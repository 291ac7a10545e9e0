use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plan::ShortcutPlan;

/// A vertex set acting as one node of the shortcut tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    /// Ascending vertex ids.
    pub vertices: Vec<usize>,
    /// Preferred endpoint for the link from the parent node.
    pub center: usize,
}

impl TreeNode {
    pub fn new(mut vertices: Vec<usize>, center: usize) -> Self {
        vertices.sort_unstable();
        debug_assert!(vertices.binary_search(&center).is_ok());
        TreeNode { vertices, center }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEmbedding {
    /// `parent[i]` is the parent node of node `i`; the root (node 0) has none.
    pub parent: Vec<Option<usize>>,
    /// `(host in parent, endpoint in child)` per tree edge, in attach order.
    pub wiring: Vec<(usize, usize)>,
    /// Links that could not use the child's center or the first free host.
    pub substitutions: usize,
    /// The wiring as a plan with `k = nodes - 1`.
    pub plan: ShortcutPlan,
}

impl TreeEmbedding {
    pub fn depth(&self, node: usize) -> usize {
        let mut d = 0;
        let mut cur = node;
        while let Some(p) = self.parent[cur] {
            d += 1;
            cur = p;
        }
        d
    }

    pub fn height(&self) -> usize {
        (0..self.parent.len()).map(|i| self.depth(i)).max().unwrap_or(0)
    }

    pub fn children(&self, node: usize) -> Vec<usize> {
        (0..self.parent.len()).filter(|&i| self.parent[i] == Some(node)).collect()
    }
}

/// Links `nodes` into a breadth-first tree rooted at node 0.
///
/// Parents are filled in node order and children attached in node order.
/// Within a parent, hosts are taken in ascending id while they have shortcut
/// budget left (`delta` per vertex), so a node of `b` vertices adopts up to
/// `b * delta` children, one less once its own parent link lands on it. Each
/// link goes to the child's center; when that pair is already an edge the
/// child's other vertices are tried in ascending order, then the parent's
/// next host.
pub fn embed_full_tree(graph: &Graph, nodes: &[TreeNode], delta: usize) -> Result<TreeEmbedding> {
    if nodes.is_empty() {
        return Err(Error::InvalidParameter("tree embedding needs at least one node".into()));
    }
    if delta < 1 {
        return Err(Error::InvalidParameter("delta must be >= 1".into()));
    }
    if let Some(i) = nodes.iter().position(|nd| nd.vertices.is_empty()) {
        return Err(Error::InvalidParameter(format!("tree node {i} is empty")));
    }
    let count = nodes.len();
    let mut plan = ShortcutPlan::new(graph.n(), count - 1, delta);
    let mut parent = vec![None; count];
    let mut wiring = Vec::with_capacity(count - 1);
    let mut substitutions = 0;
    let mut next_child = 1;

    'parents: for p in 0..count {
        if next_child >= count {
            break;
        }
        if p >= next_child {
            return Err(Error::InfeasibleCapacity(format!(
                "tree nodes 0..{p} have no shortcut budget left for node {p}"
            )));
        }
        while next_child < count {
            let child = &nodes[next_child];
            let mut any_host = false;
            let mut link = None;
            'hosts: for &host in &nodes[p].vertices {
                if !plan.has_budget(host) {
                    continue;
                }
                let first_host = !any_host;
                any_host = true;
                let candidates =
                    std::iter::once(child.center).chain(child.vertices.iter().copied().filter(|&v| v != child.center));
                for cand in candidates {
                    if plan.admits(graph, host, cand) {
                        link = Some((host, cand, first_host && cand == child.center));
                        break 'hosts;
                    }
                }
            }
            match link {
                Some((host, cand, preferred)) => {
                    plan.push_unchecked(host, cand);
                    wiring.push((host, cand));
                    parent[next_child] = Some(p);
                    if !preferred {
                        substitutions += 1;
                    }
                    next_child += 1;
                }
                None if any_host => {
                    return Err(Error::BlockedWiring {
                        parent: p,
                        child: next_child,
                    })
                }
                None => continue 'parents,
            }
        }
    }
    Ok(TreeEmbedding {
        parent,
        wiring,
        substitutions,
        plan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn path_segments(count: usize) -> (Graph, Vec<TreeNode>) {
        let g = path(3 * count);
        let nodes = (0..count)
            .map(|i| TreeNode::new(vec![3 * i, 3 * i + 1, 3 * i + 2], 3 * i + 1))
            .collect();
        (g, nodes)
    }

    #[test]
    fn four_segments_form_a_star_of_height_one() {
        let (g, nodes) = path_segments(4);
        let emb = embed_full_tree(&g, &nodes, 1).unwrap();
        assert_eq!(emb.wiring, vec![(0, 4), (1, 7), (2, 10)]);
        assert_eq!(emb.height(), 1);
        assert_eq!(emb.children(0), vec![1, 2, 3]);
        assert!(emb.plan.is_matching());
        assert_eq!(emb.substitutions, 0);
    }

    #[test]
    fn single_node_needs_no_edges() {
        let (g, nodes) = path_segments(1);
        let emb = embed_full_tree(&g, &nodes, 1).unwrap();
        assert!(emb.wiring.is_empty());
        assert_eq!(emb.height(), 0);
    }

    #[test]
    fn ten_segments_branch_three_then_two() {
        let (g, nodes) = path_segments(10);
        let emb = embed_full_tree(&g, &nodes, 1).unwrap();
        assert_eq!(emb.wiring.len(), 9);
        assert_eq!(emb.children(0), vec![1, 2, 3]);
        for p in 1..=3 {
            assert_eq!(emb.children(p).len(), 2);
        }
        assert_eq!(emb.height(), 2);
        assert!(emb.height() as f64 <= (10f64).log2().ceil());
        emb.plan.validate(&g).unwrap();
    }

    #[test]
    fn larger_delta_widens_the_root() {
        let (g, nodes) = path_segments(7);
        let emb = embed_full_tree(&g, &nodes, 2).unwrap();
        assert_eq!(emb.children(0), vec![1, 2, 3, 4, 5, 6]);
        assert!(emb.plan.added().iter().all(|&(u, v)| emb.plan.usage(u) <= 2 && emb.plan.usage(v) <= 2));
    }

    #[test]
    fn substitutes_child_endpoint_when_center_is_adjacent() {
        // node 0 = {0, 1, 2}, node 1 = {3, 4, 5} with center 3 adjacent to 0
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        let nodes = vec![TreeNode::new(vec![0, 1, 2], 1), TreeNode::new(vec![3, 4, 5], 3)];
        let emb = embed_full_tree(&g, &nodes, 1).unwrap();
        assert_eq!(emb.wiring, vec![(0, 4)]);
        assert_eq!(emb.substitutions, 1);
    }

    #[test]
    fn blocked_when_every_cross_pair_is_an_edge() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let nodes = vec![TreeNode::new(vec![0], 0), TreeNode::new(vec![1], 1)];
        assert!(matches!(
            embed_full_tree(&g, &nodes, 1),
            Err(Error::BlockedWiring { parent: 0, child: 1 })
        ));
    }

    #[test]
    fn runs_out_of_capacity_with_singletons() {
        let g = Graph::empty(3);
        let nodes: Vec<_> = (0..3).map(|v| TreeNode::new(vec![v], v)).collect();
        assert!(matches!(embed_full_tree(&g, &nodes, 1), Err(Error::InfeasibleCapacity(_))));
    }
}
