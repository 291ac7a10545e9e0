mod common;

use bcmd::clustering::{farthest_segments, k_center, k_center_from, maximal_segments};
use bcmd::graph::{Graph, Hops};
use bcmd::oracle::{solve_exact, Objective};
use common::INF;
use proptest::prelude::*;

/// Farthest-first traversal over an all-pairs matrix.
fn reference_centers(d: &[Vec<u32>], count: usize, first: usize) -> Vec<usize> {
    let n = d.len();
    let mut centers = vec![first];
    while centers.len() < count {
        let to_set = |v: usize| centers.iter().map(|&c| d[c][v]).min().unwrap();
        let mut best = 0;
        for v in 1..n {
            if to_set(v) > to_set(best) {
                best = v;
            }
        }
        if to_set(best) == 0 {
            break;
        }
        centers.push(best);
    }
    centers
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..16).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

/// Whether some connected set of `beta` vertices avoids `covered`.
fn has_free_segment(g: &Graph, covered: &[bool], beta: usize) -> bool {
    let free: Vec<usize> = (0..g.n()).filter(|&v| !covered[v]).collect();
    if free.len() < beta || free.len() > 20 {
        return free.len() >= beta && free.len() > 20;
    }
    (0u32..1 << free.len()).filter(|m| m.count_ones() as usize == beta).any(|mask| {
        let set: Vec<usize> = (0..free.len()).filter(|i| mask >> i & 1 == 1).map(|i| free[i]).collect();
        let mut reached = vec![set[0]];
        let mut i = 0;
        while i < reached.len() {
            let u = reached[i];
            i += 1;
            for &w in &set {
                if !reached.contains(&w) && g.has_edge(u, w) {
                    reached.push(w);
                }
            }
        }
        reached.len() == beta
    })
}

proptest! {
    #[test]
    fn k_center_matches_reference(g in arb_graph(), count in 1usize..8, first in 0usize..16) {
        let first = first % g.n();
        let c = k_center_from(&g, count, first).unwrap();
        let d = common::all_pairs(&g, &[]);
        prop_assert_eq!(&c.centers, &reference_centers(&d, count, first));
        prop_assert_eq!(c.short, c.centers.len() < count);

        let mut radius = 0;
        for v in 0..g.n() {
            let best = c.centers.iter().map(|&x| d[x][v]).min().unwrap();
            radius = radius.max(best);
            // nearest center, ties to the earliest
            let expect = c.centers.iter().position(|&x| d[x][v] == best);
            prop_assert_eq!(c.assign[v], if best == INF { None } else { expect });
        }
        prop_assert_eq!(c.radius, if radius == INF { Hops::Infinite } else { Hops::Finite(radius) });
        for (i, &x) in c.centers.iter().enumerate() {
            prop_assert_eq!(c.assign[x], Some(i));
        }
        // selection distances never increase
        prop_assert!(c.spread.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn segment_family_is_maximal(g in arb_graph(), beta in 1usize..5) {
        let fam = maximal_segments(&g, beta).unwrap();
        let mut covered = vec![false; g.n()];
        for (i, seg) in fam.segments.iter().enumerate() {
            prop_assert_eq!(seg.len(), beta);
            prop_assert!(g.induced(seg).is_connected());
            prop_assert!(seg.contains(&fam.centers[i]));
            for &v in seg {
                prop_assert!(!covered[v]);
                covered[v] = true;
            }
        }
        prop_assert!(!has_free_segment(&g, &covered, beta));
        prop_assert!(fam.is_maximal(&g));

        // every uncovered vertex lies within beta - 1 of the family
        if g.is_connected() && !fam.is_empty() {
            let d = common::all_pairs(&g, &[]);
            for v in (0..g.n()).filter(|&v| !covered[v]) {
                let near = (0..g.n()).filter(|&c| covered[c]).map(|c| d[v][c]).min().unwrap();
                prop_assert!(near as usize <= beta - 1);
            }
        }
        if !fam.is_empty() {
            let mut all = farthest_segments(&g, &fam, fam.len()).unwrap();
            all.sort();
            prop_assert_eq!(all, (0..fam.len()).collect::<Vec<_>>());
        }
    }
}

#[test]
fn segment_centers_minimize_induced_eccentricity() {
    for seed in 0..60 {
        let g = common::sparse_graph(seed, 4, 30);
        let fam = maximal_segments(&g, 4).unwrap();
        for (seg, &c) in fam.segments.iter().zip(&fam.centers) {
            let d = common::all_pairs(&g.induced(seg), &[]);
            let ecc: Vec<u32> = d.iter().map(|row| *row.iter().max().unwrap()).collect();
            let best = (0..seg.len()).min_by_key(|&i| (ecc[i], seg[i])).unwrap();
            assert_eq!(c, seg[best]);
        }
    }
}

#[test]
fn farthest_segment_choice_maximizes_set_distance() {
    for seed in 0..40 {
        let g = common::sparse_graph(seed, 10, 40);
        let fam = maximal_segments(&g, 3).unwrap();
        if fam.len() < 3 {
            continue;
        }
        let d = common::all_pairs(&g, &[]);
        let set_dist = |a: &[usize], b: &[usize]| {
            a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| d[x][y]).min().unwrap()
        };
        let order = farthest_segments(&g, &fam, 3).unwrap();
        assert_eq!(order[0], 0);
        let chosen = [order[0]];
        let best = (0..fam.len())
            .filter(|j| !chosen.contains(j))
            .map(|j| set_dist(&fam.segments[j], &fam.segments[0]))
            .max()
            .unwrap();
        assert_eq!(set_dist(&fam.segments[order[1]], &fam.segments[0]), best);
    }
}

#[test]
fn radius_is_at_most_unconstrained_optimum() {
    for seed in 0..80 {
        let g = common::random_graph(seed, 3, 10);
        for k in 1..=2usize {
            let opt = solve_exact(&g, k, k, Objective::Diameter).unwrap().optimum;
            for s in 0..3 {
                let c = k_center(&g, k + 1, seed * 3 + s).unwrap();
                assert!(c.radius <= opt, "seed {seed} k {k}: radius {} > {}", c.radius, opt);
            }
        }
    }
}
