//! Size-sorted cluster tree compared with the single star.

use bcmd::algos::{cluster_tree, constant_approx, Params};
use bcmd::graph::Augmented;
use bcmd::instances::gen_random_connected;
use bcmd::metrics::exact_diameter;

fn main() -> bcmd::Result<()> {
    let g = gen_random_connected(1200, 1500, 11)?;
    println!("before: {}", exact_diameter(&g).value);
    for k in [8, 32, 128] {
        let p = Params::new(k, 1);
        let eval = |edges: &[(usize, usize)]| exact_diameter(&Augmented::with_edges(&g, edges)).value;
        let tree = cluster_tree(&g, &p).map(|o| eval(o.plan.added()).to_string());
        let star = constant_approx(&g, &p).map(|o| eval(o.plan.added()).to_string());
        println!(
            "k={k:>3}: tree {}  star {}",
            tree.unwrap_or_else(|e| e.to_string()),
            star.unwrap_or_else(|e| e.to_string())
        );
    }
    Ok(())
}
