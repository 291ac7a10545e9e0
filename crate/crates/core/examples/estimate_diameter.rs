//! Exact diameter versus the 2-Sweep estimate on a random graph.
//!
//! cargo run --example estimate_diameter -- [n] [m] [seed]

use bcmd::instances::gen_random_connected;
use bcmd::metrics::{exact_diameter, two_sweep};

fn main() -> bcmd::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(2000) as usize;
    let m = args.get(1).copied().unwrap_or(4000) as usize;
    let seed = args.get(2).copied().unwrap_or(1);

    let g = gen_random_connected(n, m, seed)?;
    let exact = exact_diameter(&g);
    println!("n={} m={} exact diameter {} between {:?}", g.n(), g.m(), exact.value, exact.witness);
    for s in 0..5 {
        let est = two_sweep(&g, s)?;
        println!("2-sweep seed {s}: {} (sweep {:?})", est.value, est.witness);
    }
    Ok(())
}
