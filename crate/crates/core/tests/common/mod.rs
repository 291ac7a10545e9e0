#![allow(dead_code)]

use bcmd::graph::Graph;
use bcmd::instances::gen_random_connected;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INF: u32 = u32::MAX;

/// All-pairs distances by Floyd-Warshall over `graph` plus `extra`.
pub fn all_pairs(graph: &Graph, extra: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let n = graph.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in graph.edges().chain(extra.iter().copied()) {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for w in 0..n {
        for u in 0..n {
            if d[u][w] == INF {
                continue;
            }
            for v in 0..n {
                if d[w][v] != INF && d[u][w] + d[w][v] < d[u][v] {
                    d[u][v] = d[u][w] + d[w][v];
                }
            }
        }
    }
    d
}

/// Diameter from a distance matrix; `INF` when disconnected.
pub fn diameter_of(d: &[Vec<u32>]) -> u32 {
    d.iter().flatten().copied().max().unwrap_or(0)
}

pub fn fw_diameter(graph: &Graph, extra: &[(usize, usize)]) -> u32 {
    diameter_of(&all_pairs(graph, extra))
}

/// Best value of `score` over all sets of at most `k` non-edges with
/// per-vertex usage at most `delta`, visiting candidates from the last
/// non-edge backwards.
pub fn brute_force<F>(graph: &Graph, k: usize, delta: usize, score: F) -> u32
where
    F: Fn(&[Vec<u32>]) -> u32,
{
    let n = graph.n();
    let mut non_edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !graph.has_edge(u, v) {
                non_edges.push((u, v));
            }
        }
    }
    non_edges.reverse();
    let mut best = INF;
    let mut chosen = Vec::new();
    let mut usage = vec![0usize; n];
    fn rec<F: Fn(&[Vec<u32>]) -> u32>(
        graph: &Graph,
        cands: &[(usize, usize)],
        from: usize,
        k: usize,
        delta: usize,
        chosen: &mut Vec<(usize, usize)>,
        usage: &mut Vec<usize>,
        best: &mut u32,
        score: &F,
    ) {
        let val = score(&all_pairs(graph, chosen));
        *best = (*best).min(val);
        if chosen.len() == k {
            return;
        }
        for i in from..cands.len() {
            let (u, v) = cands[i];
            if usage[u] < delta && usage[v] < delta {
                usage[u] += 1;
                usage[v] += 1;
                chosen.push((u, v));
                rec(graph, cands, i + 1, k, delta, chosen, usage, best, score);
                chosen.pop();
                usage[u] -= 1;
                usage[v] -= 1;
            }
        }
    }
    rec(graph, &non_edges, 0, k, delta, &mut chosen, &mut usage, &mut best, &score);
    best
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph with `lo..=hi` vertices and a uniformly drawn edge count.
pub fn random_graph(seed: u64, lo: usize, hi: usize) -> Graph {
    let mut r = rng(seed ^ 0x5eed);
    let n = r.gen_range(lo..=hi);
    let max_m = n * (n - 1) / 2;
    let m = r.gen_range(n - 1..=max_m);
    gen_random_connected(n, m, seed).unwrap()
}

/// Sparse connected graph: edge count between `n - 1` and `2n`.
pub fn sparse_graph(seed: u64, lo: usize, hi: usize) -> Graph {
    let mut r = rng(seed ^ 0xabc);
    let n = r.gen_range(lo..=hi);
    let max_m = (n * (n - 1) / 2).min(2 * n);
    let m = r.gen_range(n - 1..=max_m.max(n - 1));
    gen_random_connected(n, m, seed).unwrap()
}
