//! Immutable simple undirected graphs, BFS, augmentation and connectivity.
//!
//! Vertices are `0..n`. Adjacency is stored in compressed-row form with
//! every neighbor list sorted ascending, so all iteration is deterministic.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::plan::ShortcutPlan;

/// Distance marker for vertices not reachable from any BFS source.
pub const UNREACHABLE: u32 = u32::MAX;

/// Read-only neighborhood access shared by [`Graph`] and [`Augmented`].
pub trait Adjacency: Sync {
    fn vertex_count(&self) -> usize;
    fn for_each_neighbor<F: FnMut(usize)>(&self, v: usize, f: F);
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Builds a canonical graph. Duplicate and reversed edges collapse into
    /// one; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfEdge(u));
            }
            pairs.push((u as u32, v as u32));
            pairs.push((v as u32, u as u32));
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Graph { offsets, targets })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbor_slice(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.neighbor_slice(v).iter().map(|&w| w as usize)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbor_slice(a).binary_search(&(b as u32)).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Number of vertex pairs that are not edges.
    pub fn non_edge_count(&self) -> u64 {
        let n = self.n() as u64;
        n * n.saturating_sub(1) / 2 - self.m() as u64
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || connected_components(self).count == 1
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        Graph::from_edges(json.n, json.edges.iter().map(|e| (e[0], e[1])))
    }

    /// Induced subgraph on `keep` (in the given order); vertex `i` of the
    /// result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = keep.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.neighbors(v)
                .filter_map(move |w| (index[w] != usize::MAX && index[w] > i).then(|| (i, index[w])))
        });
        Graph::from_edges(keep.len(), edges.collect::<Vec<_>>()).expect("induced subgraph of a simple graph")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    #[inline]
    fn for_each_neighbor<F: FnMut(usize)>(&self, v: usize, mut f: F) {
        for &w in self.neighbor_slice(v) {
            f(w as usize);
        }
    }
}

/// A base graph viewed together with a small set of extra edges, without
/// materializing the union.
#[derive(Clone, Debug)]
pub struct Augmented<'a> {
    base: &'a Graph,
    extra: Vec<Vec<usize>>,
}

impl<'a> Augmented<'a> {
    pub fn new(base: &'a Graph) -> Self {
        Augmented {
            base,
            extra: vec![Vec::new(); base.n()],
        }
    }

    pub fn with_edges(base: &'a Graph, edges: &[(usize, usize)]) -> Self {
        let mut aug = Augmented::new(base);
        for &(u, v) in edges {
            aug.add(u, v);
        }
        aug
    }

    pub fn add(&mut self, u: usize, v: usize) {
        self.extra[u].push(v);
        self.extra[v].push(u);
    }

    pub fn remove_last(&mut self, u: usize, v: usize) {
        self.extra[u].pop();
        self.extra[v].pop();
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.base.has_edge(u, v) || self.extra[u].contains(&v)
    }
}

impl Adjacency for Augmented<'_> {
    fn vertex_count(&self) -> usize {
        self.base.n()
    }

    #[inline]
    fn for_each_neighbor<F: FnMut(usize)>(&self, v: usize, mut f: F) {
        for &w in self.base.neighbor_slice(v) {
            f(w as usize);
        }
        for &w in &self.extra[v] {
            f(w);
        }
    }
}

/// Hop count that may be infinite. Orders every finite value below
/// `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hops {
    Finite(u32),
    Infinite,
}

impl Hops {
    pub fn finite(self) -> Option<u32> {
        match self {
            Hops::Finite(d) => Some(d),
            Hops::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Hops::Finite(_))
    }

    fn from_raw(d: u32) -> Self {
        if d == UNREACHABLE {
            Hops::Infinite
        } else {
            Hops::Finite(d)
        }
    }
}

impl fmt::Display for Hops {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hops::Finite(d) => write!(f, "{d}"),
            Hops::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Hops {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Hops::Finite(d) => s.serialize_u32(*d),
            Hops::Infinite => s.serialize_none(),
        }
    }
}

/// BFS hop distances from a source set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distances {
    sources: Vec<usize>,
    dist: Vec<u32>,
}

impl Distances {
    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        let d = self.dist[v];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn hops(&self, v: usize) -> Hops {
        Hops::from_raw(self.dist[v])
    }

    /// Raw distances; unreachable entries hold [`UNREACHABLE`].
    pub fn raw(&self) -> &[u32] {
        &self.dist
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Largest distance and the smallest vertex attaining it;
    /// `Infinite` if some vertex is unreachable.
    pub fn farthest(&self) -> (Hops, usize) {
        farthest_of(&self.dist)
    }
}

pub(crate) fn farthest_of(dist: &[u32]) -> (Hops, usize) {
    let mut best = 0u32;
    let mut arg = 0usize;
    for (v, &d) in dist.iter().enumerate() {
        if d > best {
            best = d;
            arg = v;
        }
    }
    (Hops::from_raw(best), arg)
}

/// Reusable BFS buffers for callers that traverse many times.
#[derive(Clone, Debug, Default)]
pub struct BfsScratch {
    pub(crate) dist: Vec<u32>,
    queue: Vec<usize>,
}

impl BfsScratch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Runs a multi-source BFS and returns the distance buffer, valid until
    /// the next call.
    pub fn run<A: Adjacency + ?Sized>(&mut self, graph: &A, sources: &[usize]) -> &[u32] {
        let n = graph.vertex_count();
        self.dist.clear();
        self.dist.resize(n, UNREACHABLE);
        self.queue.clear();
        for &s in sources {
            if self.dist[s] != 0 {
                self.dist[s] = 0;
                self.queue.push(s);
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let next = self.dist[u] + 1;
            let dist = &mut self.dist;
            let queue = &mut self.queue;
            graph.for_each_neighbor(u, |w| {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push(w);
                }
            });
        }
        &self.dist
    }

    /// Vertices in the order the last BFS reached them.
    pub fn visit_order(&self) -> &[usize] {
        &self.queue
    }
}

/// Multi-source BFS hop distances.
pub fn bfs<A: Adjacency + ?Sized>(graph: &A, sources: &[usize]) -> Result<Distances> {
    if sources.is_empty() {
        return Err(Error::EmptySources);
    }
    let n = graph.vertex_count();
    if let Some(&bad) = sources.iter().find(|&&s| s >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut scratch = BfsScratch::new();
    scratch.run(graph, sources);
    let mut sources = sources.to_vec();
    sources.sort_unstable();
    sources.dedup();
    Ok(Distances {
        sources,
        dist: scratch.dist,
    })
}

/// Returns `G ∪ plan` after re-validating the plan against `graph`.
pub fn augment(graph: &Graph, plan: &ShortcutPlan) -> Result<Graph> {
    plan.validate(graph)?;
    Graph::from_edges(graph.n(), graph.edges().chain(plan.added().iter().copied()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Component label per vertex; labels are numbered by smallest member.
    pub label: Vec<usize>,
    pub sizes: Vec<usize>,
    pub count: usize,
}

pub fn connected_components(graph: &Graph) -> Components {
    let n = graph.n();
    let mut label = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let c = sizes.len();
        label[s] = c;
        stack.push(s);
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for w in graph.neighbors(u) {
                if label[w] == usize::MAX {
                    label[w] = c;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    let count = sizes.len();
    Components { label, sizes, count }
}

/// An extracted subgraph with the map back to the parent's vertex ids.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `original[new_id] = old_id`
    pub original: Vec<usize>,
}

/// Largest connected component; ties go to the component containing the
/// smallest vertex id.
pub fn largest_component(graph: &Graph) -> Subgraph {
    let comps = connected_components(graph);
    let mut best = 0;
    for c in 1..comps.count {
        if comps.sizes[c] > comps.sizes[best] {
            best = c;
        }
    }
    let keep: Vec<usize> = (0..graph.n()).filter(|&v| comps.label[v] == best).collect();
    Subgraph {
        graph: graph.induced(&keep),
        original: keep,
    }
}

/// JSON form `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// A graph loaded from an edge list together with the input labels.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `labels[v]` is the id vertex `v` had in the input text.
    pub labels: Vec<u64>,
}

impl LoadedGraph {
    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn label_index(&self) -> HashMap<u64, usize> {
        self.labels.iter().enumerate().map(|(i, &l)| (l, i)).collect()
    }
}

/// Parses whitespace-separated `u v` lines. Lines starting with `#` or `%`
/// are comments; extra columns (weights, timestamps) are ignored. Ids are
/// compacted to `0..n` in first-seen order.
pub fn load_edge_list(text: &str) -> Result<LoadedGraph> {
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut endpoint = || -> Result<u64> {
            let tok = tokens.next().ok_or(Error::MissingEndpoint { line: lineno })?;
            tok.parse::<u64>().map_err(|_| Error::BadToken {
                line: lineno,
                token: tok.to_string(),
            })
        };
        let u = endpoint()?;
        let v = endpoint()?;
        if u == v {
            return Err(Error::SelfLoop { line: lineno });
        }
        let mut id = |label: u64| {
            *index.entry(label).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            })
        };
        let (a, b) = (id(u), id(v));
        edges.push((a, b));
    }
    let graph = Graph::from_edges(labels.len(), edges)?;
    Ok(LoadedGraph { graph, labels })
}

/// Writes `u v` lines, one per edge, using `labels` when given.
///
/// Edges are ordered so that reading the output back assigns every vertex
/// its current id whenever that is possible, which holds for any graph
/// produced by [`load_edge_list`]: each vertex is introduced in id order,
/// by an edge to a smaller neighbor or together with its successor.
pub fn write_edge_list(graph: &Graph, labels: Option<&[u64]>) -> String {
    let n = graph.n();
    let name = |v: usize| labels.map_or(v as u64, |l| l[v]);
    let mut out = String::new();
    let mut emitted: HashSet<(usize, usize)> = HashSet::new();
    let mut seen = vec![false; n];
    let line = |u: usize, v: usize, out: &mut String| {
        out.push_str(&format!("{} {}\n", name(u), name(v)));
    };
    for v in 0..n {
        if seen[v] || graph.degree(v) == 0 {
            continue;
        }
        let smaller = graph.neighbors(v).find(|&w| w < v && seen[w]);
        let (a, b) = match smaller {
            Some(w) => (w, v),
            None => (v, graph.neighbors(v).find(|&w| w > v).unwrap_or(graph.neighbors(v).next().unwrap())),
        };
        line(a, b, &mut out);
        emitted.insert((a.min(b), a.max(b)));
        seen[a] = true;
        seen[b] = true;
    }
    for (u, v) in graph.edges() {
        if !emitted.contains(&(u, v)) {
            line(u, v, &mut out);
        }
    }
    out
}
