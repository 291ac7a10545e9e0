//! Benchmark sweep over k and delta written as CSV, the same as
//! `bcmd bench`.

use bcmd::cli::{cmd_bench, BenchArgs, CSV_HEADER};
use bcmd::graph::write_edge_list;
use bcmd::instances::gen_random_connected;

fn main() -> bcmd::Result<()> {
    let dir = std::env::temp_dir().join("bcmd-bench-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("graph.txt");
    std::fs::write(&path, write_edge_list(&gen_random_connected(2000, 3000, 2)?, None))?;

    let args = BenchArgs {
        graph: path,
        k_list: vec![8, 16, 32, 64],
        delta_list: vec![1, 25],
        repeats: 5,
        algos: ["log", "const", "tree", "greedy2sweep", "random"].map(String::from).to_vec(),
        seed: 0,
        beta: 3,
        exact_eval: false,
        csv: None,
    };
    println!("{CSV_HEADER}");
    for r in cmd_bench(&args)? {
        let after = r.diam_after_min.map(|d| d.to_string()).unwrap_or_default();
        println!(
            "{},{},{},{},{after},{},{:.1},{}",
            r.algo, r.k, r.delta, r.diam_before, r.edges_added, r.runtime_ms, u8::from(r.infeasible)
        );
    }
    Ok(())
}
