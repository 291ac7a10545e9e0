//! Seeded generators for test and benchmark graphs, including the
//! set-cover gadget.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::seeded;

pub fn gen_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Uniform labeled tree, decoded from a random Prüfer sequence.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("tree needs n >= 1".into()));
    }
    let edges = random_tree_edges(n, &mut seeded(seed));
    Graph::from_edges(n, edges)
}

fn random_tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &code)
}

/// Linear-time Prüfer decoding.
fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &c in code {
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Uniform spanning tree plus `m - (n-1)` distinct non-edges chosen
/// uniformly at random.
pub fn gen_random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph needs n >= 1".into()));
    }
    let pairs = n as u128 * (n as u128 - 1) / 2;
    if m as u128 > pairs {
        return Err(Error::InvalidParameter(format!(
            "m={m} exceeds n(n-1)/2={pairs} for n={n}"
        )));
    }
    if m < n - 1 {
        return Err(Error::InvalidParameter(format!("m={m} is below n-1={} for n={n}", n - 1)));
    }
    let mut rng = seeded(seed);
    let mut edges = random_tree_edges(n, &mut rng);
    let extra = m - (n - 1);
    let mut present: HashSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();

    if (extra as u128) * 2 <= pairs - (n as u128 - 1) {
        // sparse: rejection sampling
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if present.insert(e) {
                edges.push(e);
            }
        }
    } else {
        let mut free: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !present.contains(e))
            .collect();
        let (chosen, _) = free.partial_shuffle(&mut rng, extra);
        edges.extend_from_slice(chosen);
        present.clear();
    }
    Graph::from_edges(n, edges)
}

/// Sets over items `0..items`; the reduction's cover budget is `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCoverInstance {
    pub sets: Vec<Vec<usize>>,
    pub items: usize,
    pub k: usize,
}

impl SetCoverInstance {
    pub fn new(sets: Vec<Vec<usize>>, items: usize, k: usize) -> Result<Self> {
        let inst = SetCoverInstance { sets, items, k };
        inst.validate()?;
        Ok(inst)
    }

    /// Parses `"1,2;2,3"`: sets separated by `;`, 1-based items by `,`.
    /// The item count is the largest item mentioned.
    pub fn parse(spec: &str, k: usize) -> Result<Self> {
        let mut sets = Vec::new();
        for part in spec.split(';') {
            let mut set = Vec::new();
            for tok in part.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let item: usize = tok
                    .parse()
                    .map_err(|_| Error::InvalidInstance(format!("bad item '{tok}'")))?;
                if item == 0 {
                    return Err(Error::InvalidInstance("items are numbered from 1".into()));
                }
                set.push(item - 1);
            }
            sets.push(set);
        }
        let items = sets.iter().flatten().map(|&i| i + 1).max().unwrap_or(0);
        Self::new(sets, items, k)
    }

    pub fn p(&self) -> usize {
        self.sets.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.sets.is_empty() || self.items == 0 {
            return Err(Error::InvalidInstance("need at least one set and one item".into()));
        }
        if self.k == 0 {
            return Err(Error::InvalidInstance("cover budget k must be >= 1".into()));
        }
        let mut seen = vec![false; self.items];
        for (i, set) in self.sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidInstance(format!("set {} is empty", i + 1)));
            }
            for &item in set {
                if item >= self.items {
                    return Err(Error::InvalidInstance(format!("item {} out of range", item + 1)));
                }
                seen[item] = true;
            }
        }
        if let Some(j) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidInstance(format!("item {} is in no set", j + 1)));
        }
        Ok(())
    }

    /// Whether `l > k` and `p > k`, the sizes the reduction argues about.
    pub fn supports_reduction(&self) -> bool {
        self.items > self.k && self.p() > self.k
    }

    /// Whether some `<= k` sets cover all items, by subset enumeration.
    pub fn has_cover(&self) -> bool {
        let p = self.p();
        assert!(p < 64, "subset enumeration needs p < 64");
        let masks: Vec<u128> = self
            .sets
            .iter()
            .map(|s| s.iter().fold(0u128, |m, &i| m | 1 << i))
            .collect();
        let full = if self.items == 128 { u128::MAX } else { (1u128 << self.items) - 1 };
        (0u64..1 << p).any(|choice| {
            choice.count_ones() as usize <= self.k
                && (0..p)
                    .filter(|&i| choice >> i & 1 == 1)
                    .fold(0u128, |m, i| m | masks[i])
                    == full
        })
    }
}

/// Vertex ids of each gadget role.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetRoles {
    pub s: Vec<usize>,
    pub u: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub x: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: Graph,
    pub roles: GadgetRoles,
}

/// The set-cover reduction graph.
///
/// Set vertices form a clique, item vertices hang off the sets that contain
/// them, `a` joins all sets and `b`, and `b` joins a clique of `k+1` extra
/// vertices. Numbering: sets, items, `a`, `b`, extras.
pub fn gen_setcover_gadget(inst: &SetCoverInstance) -> Result<Gadget> {
    inst.validate()?;
    let p = inst.p();
    let l = inst.items;
    let s: Vec<usize> = (0..p).collect();
    let u: Vec<usize> = (p..p + l).collect();
    let a = p + l;
    let b = a + 1;
    let x: Vec<usize> = (b + 1..b + 2 + inst.k).collect();
    let n = b + 2 + inst.k;

    let mut edges = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            edges.push((s[i], s[j]));
        }
        for &item in &inst.sets[i] {
            edges.push((s[i], u[item]));
        }
        edges.push((a, s[i]));
    }
    edges.push((a, b));
    for (t, &xt) in x.iter().enumerate() {
        edges.push((b, xt));
        for &xr in &x[t + 1..] {
            edges.push((xt, xr));
        }
    }
    let graph = Graph::from_edges(n, edges)?;
    Ok(Gadget {
        graph,
        roles: GadgetRoles { s, u, a, b, x },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bfs, connected_components, Hops};
    use crate::metrics::exact_diameter;

    #[test]
    fn path_and_cycle() {
        assert_eq!(exact_diameter(&gen_path(5).unwrap()).value, Hops::Finite(4));
        assert_eq!(exact_diameter(&gen_cycle(6).unwrap()).value, Hops::Finite(3));
        assert_eq!(gen_path(1).unwrap().m(), 0);
        assert!(gen_cycle(2).is_err());
    }

    #[test]
    fn prufer_known_sequence() {
        // sequence [3, 3, 3, 4] on 6 vertices
        let mut e = prufer_decode(6, &[3, 3, 3, 4]);
        e.sort();
        assert_eq!(e, vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn random_connected_shape() {
        for seed in 0..20 {
            let g = gen_random_connected(10, 15, seed).unwrap();
            assert_eq!(g.m(), 15);
            assert_eq!(connected_components(&g).count, 1);
        }
        let dense = gen_random_connected(10, 44, 1).unwrap();
        assert_eq!(dense.m(), 44);
        assert!(gen_random_connected(10, 60, 0).is_err());
        assert!(gen_random_connected(10, 8, 0).is_err());
        assert_eq!(gen_random_connected(1, 0, 0).unwrap().n(), 1);
    }

    #[test]
    fn random_tree_is_tree() {
        for seed in 0..20 {
            let g = gen_random_tree(30, seed).unwrap();
            assert_eq!(g.m(), 29);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn parse_sets() {
        let inst = SetCoverInstance::parse("1,2;2,3", 1).unwrap();
        assert_eq!(inst.sets, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(inst.items, 3);
        assert!(!inst.has_cover());
        assert!(SetCoverInstance::parse("1,0", 1).is_err());
        assert!(SetCoverInstance::parse("1;3", 1).is_err());
    }

    #[test]
    fn gadget_structure() {
        let inst = SetCoverInstance::parse("1,2;2,3", 1).unwrap();
        let h = gen_setcover_gadget(&inst).unwrap();
        let r = &h.roles;
        assert_eq!(h.graph.n(), 2 + 3 + 2 + 2);
        assert_eq!(h.graph.neighbors(r.a).collect::<Vec<_>>(), vec![0, 1, r.b]);
        let mut bn: Vec<usize> = h.graph.neighbors(r.b).collect();
        bn.sort();
        assert_eq!(bn, vec![r.a, r.x[0], r.x[1]]);
        for &u in &r.u {
            let d = bfs(&h.graph, &[u]).unwrap();
            for &x in &r.x {
                assert_eq!(d.get(x), Some(4));
            }
        }
        assert_eq!(exact_diameter(&h.graph).value, Hops::Finite(4));
    }

    #[test]
    fn cover_enumeration() {
        let inst = SetCoverInstance::new(vec![vec![0], vec![1]], 2, 2).unwrap();
        assert!(inst.has_cover());
        let tri = SetCoverInstance::new(vec![vec![0, 1], vec![1, 2], vec![0, 2]], 3, 1).unwrap();
        assert!(!tri.has_cover());
        assert!(tri.supports_reduction());
    }
}
