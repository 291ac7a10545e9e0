//! Objective evaluation: exact diameter, the 2-Sweep lower bound,
//! eccentricity and colored diameter.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{farthest_of, Adjacency, BfsScratch, Hops, UNREACHABLE};
use crate::rng::seeded;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterResult {
    pub value: Hops,
    /// A pair realizing `value` (exact mode) or the two sweep endpoints.
    pub witness: (usize, usize),
    pub exact: bool,
}

/// Eccentricity of `v`, `Infinite` if some vertex is unreachable from it.
pub fn eccentricity<A: Adjacency + ?Sized>(graph: &A, v: usize) -> Hops {
    let mut scratch = BfsScratch::new();
    farthest_of(scratch.run(graph, &[v])).0
}

/// Exact diameter by one BFS per vertex, run in parallel.
///
/// The witness is the lexicographically smallest pair `(u, v)` with
/// `u < v` at maximum distance, independent of scheduling.
pub fn exact_diameter<A: Adjacency + ?Sized>(graph: &A) -> DiameterResult {
    let n = graph.vertex_count();
    if n <= 1 {
        return DiameterResult {
            value: Hops::Finite(0),
            witness: (0, 0),
            exact: true,
        };
    }
    let value = (0..n)
        .into_par_iter()
        .map_init(BfsScratch::new, |scratch, u| {
            let (ecc, far) = farthest_of(scratch.run(graph, &[u]));
            (ecc, u, far)
        })
        .reduce(
            || (Hops::Finite(0), usize::MAX, usize::MAX),
            |a, b| {
                // larger value wins; on equal values the smaller source wins
                match a.0.cmp(&b.0) {
                    std::cmp::Ordering::Greater => a,
                    std::cmp::Ordering::Less => b,
                    std::cmp::Ordering::Equal => {
                        if a.1 <= b.1 {
                            a
                        } else {
                            b
                        }
                    }
                }
            },
        );
    DiameterResult {
        value: value.0,
        witness: (value.1, value.2),
        exact: true,
    }
}

/// Sequential exact diameter that gives up as soon as some eccentricity
/// exceeds `limit`; returns `None` in that case.
pub(crate) fn diameter_at_most<A: Adjacency + ?Sized>(
    graph: &A,
    limit: Hops,
    scratch: &mut BfsScratch,
) -> Option<Hops> {
    let mut best = Hops::Finite(0);
    for u in 0..graph.vertex_count() {
        let (ecc, _) = farthest_of(scratch.run(graph, &[u]));
        if ecc > limit {
            return None;
        }
        best = best.max(ecc);
    }
    Some(best)
}

/// The 2-Sweep lower bound: BFS from a seeded random vertex `r`, then
/// report the eccentricity of the vertex farthest from `r`.
pub fn two_sweep<A: Adjacency + ?Sized>(graph: &A, seed: u64) -> Result<DiameterResult> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let start = seeded(seed).gen_range(0..n);
    two_sweep_from(graph, start)
}

pub fn two_sweep_from<A: Adjacency + ?Sized>(graph: &A, start: usize) -> Result<DiameterResult> {
    let mut scratch = BfsScratch::new();
    let (first, u) = farthest_of(scratch.run(graph, &[start]));
    if first == Hops::Infinite {
        return Err(Error::Disconnected);
    }
    let (value, v) = farthest_of(scratch.run(graph, &[u]));
    Ok(DiameterResult {
        value,
        witness: (u, v),
        exact: false,
    })
}

/// Vertex coloring with two nonempty sides. Vertices on neither side are
/// ignored by [`colored_diameter`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorPartition {
    side: Vec<Option<Side>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    One,
    Two,
}

impl ColorPartition {
    pub fn new(side: Vec<Option<Side>>) -> Result<Self> {
        let ones = side.iter().filter(|s| **s == Some(Side::One)).count();
        let twos = side.iter().filter(|s| **s == Some(Side::Two)).count();
        if ones == 0 || twos == 0 {
            return Err(Error::EmptySide);
        }
        Ok(ColorPartition { side })
    }

    /// Side 1 is `members`, side 2 is every other vertex.
    pub fn from_side(n: usize, members: &[usize]) -> Result<Self> {
        let mut side = vec![Some(Side::Two); n];
        for &v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            side[v] = Some(Side::One);
        }
        ColorPartition::new(side)
    }

    /// Explicit sides; vertices listed in neither stay uncolored.
    pub fn from_sides(n: usize, one: &[usize], two: &[usize]) -> Result<Self> {
        let mut side = vec![None; n];
        for (members, s) in [(one, Side::One), (two, Side::Two)] {
            for &v in members {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if side[v].is_some() {
                    return Err(Error::InvalidParameter(format!("vertex {v} is on both sides")));
                }
                side[v] = Some(s);
            }
        }
        ColorPartition::new(side)
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    pub fn side_of(&self, v: usize) -> Option<Side> {
        self.side[v]
    }

    pub fn members(&self, s: Side) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == Some(s)).collect()
    }
}

/// Largest distance between a side-1 and a side-2 vertex, running one BFS
/// per vertex of the smaller side.
pub fn colored_diameter<A: Adjacency + ?Sized>(graph: &A, partition: &ColorPartition) -> Result<Hops> {
    let n = graph.vertex_count();
    if partition.len() != n {
        return Err(Error::InvalidParameter(format!(
            "partition covers {} vertices, graph has {n}",
            partition.len()
        )));
    }
    let mut scratch = BfsScratch::new();
    Ok(colored_scan(graph, partition, &mut scratch))
}

pub(crate) fn colored_scan<A: Adjacency + ?Sized>(
    graph: &A,
    partition: &ColorPartition,
    scratch: &mut BfsScratch,
) -> Hops {
    let ones = partition.members(Side::One);
    let twos = partition.members(Side::Two);
    let (sources, target) = if ones.len() <= twos.len() {
        (ones, Side::Two)
    } else {
        (twos, Side::One)
    };
    let mut best = 0u32;
    for &s in &sources {
        let dist = scratch.run(graph, &[s]);
        for (v, &d) in dist.iter().enumerate() {
            if d > best && partition.side_of(v) == Some(target) {
                if d == UNREACHABLE {
                    return Hops::Infinite;
                }
                best = d;
            }
        }
    }
    Hops::Finite(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn exact_diameter_of_small_graphs() {
        let d = exact_diameter(&path(5));
        assert_eq!(d.value, Hops::Finite(4));
        assert_eq!(d.witness, (0, 4));
        assert!(d.exact);
        assert_eq!(exact_diameter(&cycle(5)).value, Hops::Finite(2));
        assert_eq!(exact_diameter(&Graph::empty(1)).value, Hops::Finite(0));
    }

    #[test]
    fn exact_diameter_of_disconnected_graph_is_infinite() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = exact_diameter(&g);
        assert_eq!(d.value, Hops::Infinite);
        assert_eq!(d.witness, (0, 2));
    }

    #[test]
    fn two_sweep_on_cycle_and_path() {
        for seed in 0..20 {
            assert_eq!(two_sweep(&cycle(6), seed).unwrap().value, Hops::Finite(3));
            assert_eq!(two_sweep(&path(5), seed).unwrap().value, Hops::Finite(4));
        }
    }

    #[test]
    fn two_sweep_rejects_disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(two_sweep(&g, 1), Err(Error::Disconnected)));
    }

    #[test]
    fn eccentricities() {
        assert_eq!(eccentricity(&path(5), 2), Hops::Finite(2));
        assert_eq!(eccentricity(&path(5), 0), Hops::Finite(4));
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(eccentricity(&star, 0), Hops::Finite(1));
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(eccentricity(&g, 0), Hops::Infinite);
    }

    #[test]
    fn colored_diameters() {
        let p5 = path(5);
        let part = ColorPartition::from_side(5, &[0]).unwrap();
        assert_eq!(colored_diameter(&p5, &part).unwrap(), Hops::Finite(4));

        let k4 = complete(4);
        for mask in 1u32..15 {
            let members: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
            let part = ColorPartition::from_side(4, &members).unwrap();
            assert_eq!(colored_diameter(&k4, &part).unwrap(), Hops::Finite(1));
        }
    }

    #[test]
    fn colored_diameter_matches_pairwise_brute_force() {
        // P6 with V1 = {0, 5}, V2 = {2, 3}: on a path d(a, b) = |a - b|
        let (one, two) = ([0usize, 5], [2usize, 3]);
        let brute = one
            .iter()
            .flat_map(|&a| two.iter().map(move |&b| a.abs_diff(b)))
            .max()
            .unwrap();
        assert_eq!(brute, 3);
        let part = ColorPartition::from_sides(6, &one, &two).unwrap();
        assert_eq!(colored_diameter(&path(6), &part).unwrap(), Hops::Finite(brute as u32));
    }

    #[test]
    fn colored_partition_needs_two_sides() {
        assert!(matches!(ColorPartition::from_side(2, &[0, 1]), Err(Error::EmptySide)));
        assert!(matches!(ColorPartition::from_side(3, &[]), Err(Error::EmptySide)));
        assert!(matches!(ColorPartition::from_sides(3, &[0], &[]), Err(Error::EmptySide)));
        assert!(ColorPartition::from_sides(3, &[0], &[0]).is_err());
    }

    #[test]
    fn colored_diameter_infinite_across_components() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let part = ColorPartition::from_side(4, &[0]).unwrap();
        assert_eq!(colored_diameter(&g, &part).unwrap(), Hops::Infinite);
    }
}
