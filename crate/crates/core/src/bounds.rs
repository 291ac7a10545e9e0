//! Closed-form diameter bounds, returned unrounded. A measured integer
//! diameter `D` meets a lower bound `b` iff `D >= ceil(b)`.

use serde::Serialize;

/// Lower bound on the diameter of an `n`-vertex path after `k` matching
/// shortcuts: `n / (2(k+1)) + log2(k+1) - 2`.
pub fn path_lower(n: usize, k: usize) -> f64 {
    let k1 = (k + 1) as f64;
    n as f64 / (2.0 * k1) + k1.log2() - 2.0
}

/// Diameter achieved by the path construction: `n / (k+1) + 4 log2(k+1) + 1`.
pub fn path_upper(n: usize, k: usize) -> f64 {
    let k1 = (k + 1) as f64;
    n as f64 / k1 + 4.0 * k1.log2() + 1.0
}

/// Unconstrained lower bound for paths: `n / (k+1) - 1`.
pub fn cg_lower(n: usize, k: usize) -> f64 {
    n as f64 / (k + 1) as f64 - 1.0
}

/// Unconstrained achievable diameter for paths: `n / (k+1) + 3`.
pub fn cg_upper(n: usize, k: usize) -> f64 {
    n as f64 / (k + 1) as f64 + 3.0
}

/// Lower bound for any connected graph of diameter `d`: `(d+1)/(k+1) - 1`.
pub fn general_lower(diameter: u32, k: usize) -> f64 {
    (diameter as f64 + 1.0) / (k + 1) as f64 - 1.0
}

/// Guarantee of the segment-tree algorithm:
/// `2(beta - 1 + opt + beta * log_{beta*delta - 1}(k+1))`.
/// Undefined unless `beta * delta - 1 >= 2`.
pub fn segment_tree_upper(opt: u32, beta: usize, delta: usize, k: usize) -> Option<f64> {
    let base = (beta * delta) as f64 - 1.0;
    if base < 2.0 {
        return None;
    }
    let b = beta as f64;
    Some(2.0 * (b - 1.0 + opt as f64 + b * ((k + 1) as f64).ln() / base.ln()))
}

/// Guarantee of the star-from-largest-cluster algorithm: `4 opt + 2`.
pub fn largest_cluster_upper(opt: u32) -> f64 {
    4.0 * opt as f64 + 2.0
}

/// Diameter bound of the size-sorted cluster tree with equal clusters:
/// `(4 opt + 2) log_{n/(k+1) - 1}(k+1)`, defined when `n/(k+1) >= 3`.
pub fn cluster_tree_upper(opt: u32, n: usize, k: usize) -> Option<f64> {
    let branching = n as f64 / (k + 1) as f64 - 1.0;
    if branching < 2.0 {
        return None;
    }
    Some(largest_cluster_upper(opt) * ((k + 1) as f64).ln() / branching.ln())
}

/// Snapshot of every bound defined for one instance.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BoundSet {
    pub path_lower: Option<f64>,
    pub path_upper: Option<f64>,
    pub cg_lower: Option<f64>,
    pub cg_upper: Option<f64>,
    pub general_lower: Option<f64>,
    pub segment_tree_upper_bound: Option<f64>,
    pub largest_cluster_upper_bound: Option<f64>,
}

/// Evaluates all bounds; entries whose hypotheses fail are `None`.
///
/// Path bounds need `n >= 2` and `1 <= k <= n/2`. `diameter` enables the
/// general lower bound, `opt` the two algorithm guarantees.
pub fn eval_bounds(
    n: usize,
    k: usize,
    delta: usize,
    beta: usize,
    diameter: Option<u32>,
    opt: Option<u32>,
) -> BoundSet {
    let path_ok = n >= 2 && k >= 1 && 2 * k <= n;
    let k_ok = k >= 1;
    BoundSet {
        path_lower: path_ok.then(|| path_lower(n, k)),
        path_upper: path_ok.then(|| path_upper(n, k)),
        cg_lower: (k_ok && n >= 2).then(|| cg_lower(n, k)),
        cg_upper: (k_ok && n >= 2).then(|| cg_upper(n, k)),
        general_lower: diameter.filter(|_| k_ok).map(|d| general_lower(d, k)),
        segment_tree_upper_bound: opt.filter(|_| k_ok).and_then(|o| segment_tree_upper(o, beta, delta, k)),
        largest_cluster_upper_bound: opt.map(largest_cluster_upper),
    }
}
