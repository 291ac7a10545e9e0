//! Segment-tree shortcuts for several segment sizes.

use bcmd::algos::{log_approx, Params};
use bcmd::graph::Augmented;
use bcmd::instances::gen_random_connected;
use bcmd::metrics::exact_diameter;

fn main() -> bcmd::Result<()> {
    let g = gen_random_connected(1500, 1700, 7)?;
    println!("before: {}", exact_diameter(&g).value);
    for beta in [3, 4, 6] {
        for delta in [1, 2, 4] {
            let out = log_approx(&g, &Params::new(32, delta).beta(beta))?;
            let d = exact_diameter(&Augmented::with_edges(&g, out.plan.added())).value;
            println!("beta={beta} delta={delta}: {} edges, diameter {d}", out.plan.len());
            for w in &out.warnings {
                println!("  warning: {w}");
            }
        }
    }
    Ok(())
}
