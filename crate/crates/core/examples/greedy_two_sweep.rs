//! Greedy farthest-partner shortcuts against the random baseline.

use bcmd::algos::{greedy_two_sweep, random_baseline, Params};
use bcmd::graph::Augmented;
use bcmd::instances::gen_random_connected;
use bcmd::metrics::two_sweep;

fn main() -> bcmd::Result<()> {
    let g = gen_random_connected(3000, 5000, 5)?;
    println!("before (2-sweep): {}", two_sweep(&g, 0)?.value);
    for k in [8, 32, 128] {
        let p = Params::new(k, 1);
        let greedy = greedy_two_sweep(&g, &p)?;
        let random = random_baseline(&g, &p)?;
        let gd = two_sweep(&Augmented::with_edges(&g, greedy.plan.added()), 0)?.value;
        let rd = two_sweep(&Augmented::with_edges(&g, random.plan.added()), 0)?.value;
        println!("k={k:>3}: greedy {gd:>3}  random {rd:>3}");
    }
    Ok(())
}
