//! Farthest-first k-center clustering and maximal families of disjoint
//! connected segments.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{farthest_of, BfsScratch, Graph, Hops, UNREACHABLE};
use crate::rng::seeded;

/// Farthest-first centers with a nearest-center assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clustering {
    /// Centers in selection order.
    pub centers: Vec<usize>,
    /// `assign[v]` indexes `centers`; `None` only for vertices in components
    /// holding no center.
    pub assign: Vec<Option<usize>>,
    /// Members of each cluster, ascending.
    pub members: Vec<Vec<usize>>,
    /// Largest distance from a vertex to its center.
    pub radius: Hops,
    /// `spread[i]` is the distance of `centers[i + 1]` to the earlier centers.
    pub spread: Vec<Hops>,
    /// Fewer distinct vertices than requested centers: every vertex became a
    /// singleton cluster.
    pub short: bool,
}

impl Clustering {
    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }
}

/// Farthest-first traversal starting from a seeded uniform vertex.
pub fn k_center(graph: &Graph, count: usize, seed: u64) -> Result<Clustering> {
    if graph.n() == 0 {
        return Err(Error::InvalidParameter("k-center on an empty graph".into()));
    }
    let first = seeded(seed).gen_range(0..graph.n());
    k_center_from(graph, count, first)
}

/// Farthest-first traversal from a fixed first center. Each next center
/// maximizes its distance to the chosen set; unreachable vertices count as
/// farthest and ties go to the smallest id.
pub fn k_center_from(graph: &Graph, count: usize, first: usize) -> Result<Clustering> {
    let n = graph.n();
    if count < 1 {
        return Err(Error::InvalidParameter("k-center needs count >= 1".into()));
    }
    if first >= n {
        return Err(Error::VertexOutOfRange { vertex: first, n });
    }

    let mut scratch = BfsScratch::new();
    let mut dist = scratch.run(graph, &[first]).to_vec();
    let mut centers = vec![first];
    let mut spread = Vec::new();
    let mut short = false;
    let mut stack = Vec::new();
    while centers.len() < count {
        let (far, v) = farthest_of(&dist);
        if far == Hops::Finite(0) {
            short = true;
            break;
        }
        centers.push(v);
        spread.push(far);
        // pruned BFS: only expand where the new center is strictly closer
        dist[v] = 0;
        stack.clear();
        stack.push(v);
        let mut head = 0;
        while head < stack.len() {
            let u = stack[head];
            head += 1;
            let next = dist[u] + 1;
            for w in graph.neighbors(u) {
                if next < dist[w] {
                    dist[w] = next;
                    stack.push(w);
                }
            }
        }
    }

    let assign = assign_nearest(graph, &centers);
    let mut members = vec![Vec::new(); centers.len()];
    for (v, a) in assign.iter().enumerate() {
        if let Some(c) = *a {
            members[c].push(v);
        }
    }
    let radius = farthest_of(&dist).0;
    Ok(Clustering {
        centers,
        assign,
        members,
        radius,
        spread,
        short,
    })
}

/// Level-synchronous multi-source BFS; a vertex reached at the same level
/// from several clusters joins the earliest-selected one.
fn assign_nearest(graph: &Graph, centers: &[usize]) -> Vec<Option<usize>> {
    let n = graph.n();
    let mut dist = vec![UNREACHABLE; n];
    let mut label = vec![usize::MAX; n];
    let mut frontier = Vec::new();
    for (i, &c) in centers.iter().enumerate() {
        if dist[c] == UNREACHABLE {
            dist[c] = 0;
            label[c] = i;
            frontier.push(c);
        }
    }
    let mut next = Vec::new();
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        next.clear();
        for &u in &frontier {
            for w in graph.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = level;
                    label[w] = label[u];
                    next.push(w);
                } else if dist[w] == level && label[u] < label[w] {
                    label[w] = label[u];
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
    }
    label
        .into_iter()
        .map(|l| (l != usize::MAX).then_some(l))
        .collect()
}

/// Vertex-disjoint connected vertex sets of equal size, each with a
/// designated center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentFamily {
    pub beta: usize,
    /// Each segment's vertices, ascending.
    pub segments: Vec<Vec<usize>>,
    pub centers: Vec<usize>,
    /// `owner[v]` is the segment containing `v`.
    pub owner: Vec<Option<usize>>,
}

impl SegmentFamily {
    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.owner[v].is_some()
    }

    /// True when the uncovered vertices contain no connected set of `beta`
    /// vertices, i.e. every uncovered component is smaller than `beta`.
    pub fn is_maximal(&self, graph: &Graph) -> bool {
        let n = graph.n();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] || self.is_covered(s) {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut size = 0;
            while let Some(u) = stack.pop() {
                size += 1;
                for w in graph.neighbors(u) {
                    if !seen[w] && !self.is_covered(w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if size >= self.beta {
                return false;
            }
        }
        true
    }
}

/// Greedy maximal family of disjoint `beta`-segments.
///
/// Vertices are scanned in ascending order; from each uncovered vertex a DFS
/// over uncovered vertices (neighbors ascending) collects its first `beta`
/// preorder vertices. Starts whose uncovered component is too small are
/// marked dead together with that component, so every vertex is explored a
/// bounded number of times.
pub fn maximal_segments(graph: &Graph, beta: usize) -> Result<SegmentFamily> {
    if beta < 1 {
        return Err(Error::InvalidParameter("segment size must be >= 1".into()));
    }
    let n = graph.n();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut dead = vec![false; n];
    let mut stamp = vec![0u32; n];
    let mut generation = 0u32;
    let mut segments = Vec::new();
    let mut centers = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut picked = Vec::with_capacity(beta);

    for s in 0..n {
        if owner[s].is_some() || dead[s] {
            continue;
        }
        generation += 1;
        picked.clear();
        stack.clear();
        stamp[s] = generation;
        picked.push(s);
        stack.push((s, 0));
        while picked.len() < beta {
            let Some(top) = stack.last_mut() else { break };
            let (u, i) = *top;
            let nbrs = graph.neighbor_slice(u);
            let mut j = i;
            let mut found = None;
            while j < nbrs.len() {
                let w = nbrs[j] as usize;
                j += 1;
                if owner[w].is_none() && stamp[w] != generation {
                    found = Some(w);
                    break;
                }
            }
            top.1 = j;
            match found {
                Some(w) => {
                    stamp[w] = generation;
                    picked.push(w);
                    stack.push((w, 0));
                }
                None => {
                    stack.pop();
                }
            }
        }
        if picked.len() < beta {
            // the whole uncovered component of s was explored
            for &v in &picked {
                dead[v] = true;
            }
            continue;
        }
        let idx = segments.len();
        let mut seg = picked.clone();
        seg.sort_unstable();
        for &v in &seg {
            owner[v] = Some(idx);
        }
        centers.push(induced_center(graph, &seg));
        segments.push(seg);
    }
    Ok(SegmentFamily {
        beta,
        segments,
        centers,
        owner,
    })
}

/// Minimum-eccentricity vertex of the subgraph induced by `set` (ascending),
/// ties to the smallest id.
fn induced_center(graph: &Graph, set: &[usize]) -> usize {
    if set.len() <= 2 {
        return set[0];
    }
    let local = |v: usize| set.binary_search(&v).ok();
    let adj: Vec<Vec<usize>> = set
        .iter()
        .map(|&v| graph.neighbors(v).filter_map(local).collect())
        .collect();
    let mut best = (usize::MAX, set[0]);
    let mut dist = vec![usize::MAX; set.len()];
    let mut queue = Vec::with_capacity(set.len());
    for s in 0..set.len() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[s] = 0;
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push(w);
                }
            }
        }
        let ecc = dist.iter().copied().max().unwrap_or(0);
        if ecc < best.0 {
            best = (ecc, set[s]);
        }
    }
    best.1
}

/// Farthest-first selection of up to `count` segments, returned as indices
/// into the family in selection order.
///
/// The first pick is segment 0. A per-segment distance table to the chosen
/// set is refreshed after each pick by one multi-source BFS from the new
/// segment, keeping the minimum.
pub fn farthest_segments(graph: &Graph, family: &SegmentFamily, count: usize) -> Result<Vec<usize>> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let total = count.min(family.len());
    let mut to_chosen = vec![UNREACHABLE; family.len()];
    let mut chosen = vec![false; family.len()];
    let mut order = Vec::with_capacity(total);
    let mut scratch = BfsScratch::new();
    let mut next = 0usize;
    while order.len() < total {
        chosen[next] = true;
        order.push(next);
        if order.len() == total {
            break;
        }
        let dist = scratch.run(graph, &family.segments[next]);
        for (j, seg) in family.segments.iter().enumerate() {
            if chosen[j] {
                continue;
            }
            let d = seg.iter().map(|&v| dist[v]).min().unwrap_or(UNREACHABLE);
            to_chosen[j] = to_chosen[j].min(d);
        }
        let mut best: Option<usize> = None;
        for j in 0..family.len() {
            if !chosen[j] && best.map_or(true, |b| to_chosen[j] > to_chosen[b]) {
                best = Some(j);
            }
        }
        next = best.expect("unchosen segment remains");
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn k_center_on_p9_from_zero() {
        let c = k_center_from(&path(9), 3, 0).unwrap();
        assert_eq!(c.centers, vec![0, 8, 4]);
        assert_eq!(c.radius, Hops::Finite(2));
        assert_eq!(c.spread, vec![Hops::Finite(8), Hops::Finite(4)]);
        // vertex 2 is at distance 2 from both 0 and 4 and joins center 0
        assert_eq!(c.assign[2], Some(0));
        assert_eq!(c.assign[6], Some(1));
        assert_eq!(c.members[2], vec![3, 4, 5]);
        assert!(!c.short);
    }

    #[test]
    fn single_center_radius_is_eccentricity() {
        let g = path(7);
        for seed in 0..10 {
            let c = k_center(&g, 1, seed).unwrap();
            let ecc = crate::metrics::eccentricity(&g, c.centers[0]);
            assert_eq!(c.radius, ecc);
            assert_eq!(c.members[0].len(), 7);
        }
    }

    #[test]
    fn k_center_prefers_unreachable_vertices() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let c = k_center_from(&g, 2, 1).unwrap();
        assert_eq!(c.centers, vec![1, 3]);
        assert_eq!(c.spread, vec![Hops::Infinite]);
        assert!(c.assign.iter().all(|a| a.is_some()));
        assert_eq!(c.radius, Hops::Finite(1));
    }

    #[test]
    fn k_center_short_when_vertices_run_out() {
        let c = k_center_from(&path(3), 5, 1).unwrap();
        assert!(c.short);
        assert_eq!(c.centers, vec![1, 0, 2]);
        assert_eq!(c.radius, Hops::Finite(0));
        assert!(c.members.iter().all(|m| m.len() == 1));
    }

    #[test]
    fn k_center_rejects_zero_count() {
        assert!(k_center(&path(3), 0, 0).is_err());
    }

    #[test]
    fn segments_of_p9() {
        let fam = maximal_segments(&path(9), 3).unwrap();
        assert_eq!(fam.segments, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
        assert_eq!(fam.centers, vec![1, 4, 7]);
        assert!(fam.is_maximal(&path(9)));
    }

    #[test]
    fn segments_of_k4_leave_one_vertex_within_reach() {
        let g = complete(4);
        let fam = maximal_segments(&g, 3).unwrap();
        assert_eq!(fam.len(), 1);
        let uncovered: Vec<_> = (0..4).filter(|&v| !fam.is_covered(v)).collect();
        assert_eq!(uncovered, vec![3]);
        let d = crate::graph::bfs(&g, &fam.segments[0]).unwrap();
        assert!(d.get(3).unwrap() <= 2);
    }

    #[test]
    fn segments_of_tiny_path_are_empty() {
        let fam = maximal_segments(&path(2), 3).unwrap();
        assert!(fam.is_empty());
        assert!(fam.is_maximal(&path(2)));
    }

    #[test]
    fn segment_growth_restarts_after_dead_ends() {
        // star with three leaves plus a tail: DFS from 0 takes 0, 1, then
        // backtracks to 2
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        let fam = maximal_segments(&g, 3).unwrap();
        assert_eq!(fam.segments[0], vec![0, 1, 2]);
        assert_eq!(fam.segments[1], vec![3, 4, 5]);
        assert_eq!(fam.centers, vec![0, 4]);
    }

    #[test]
    fn farthest_segments_on_p9() {
        let g = path(9);
        let fam = maximal_segments(&g, 3).unwrap();
        assert_eq!(farthest_segments(&g, &fam, 2).unwrap(), vec![0, 2]);
        assert_eq!(farthest_segments(&g, &fam, 10).unwrap(), vec![0, 2, 1]);
        let one = maximal_segments(&path(4), 3).unwrap();
        assert_eq!(farthest_segments(&path(4), &one, 3).unwrap(), vec![0]);
    }

    #[test]
    fn farthest_segments_rejects_empty_family() {
        let fam = maximal_segments(&path(2), 3).unwrap();
        assert!(matches!(farthest_segments(&path(2), &fam, 2), Err(Error::EmptyFamily)));
    }
}
