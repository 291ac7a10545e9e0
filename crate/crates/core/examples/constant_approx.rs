//! Star from the largest k-center cluster, and what happens when the
//! cluster cannot absorb all links.

use bcmd::algos::{constant_approx, Params};
use bcmd::graph::{Augmented, Graph};
use bcmd::instances::gen_random_connected;
use bcmd::metrics::exact_diameter;

fn main() -> bcmd::Result<()> {
    let g = gen_random_connected(1000, 1200, 3)?;
    println!("before: {}", exact_diameter(&g).value);
    for seed in 0..3 {
        let out = constant_approx(&g, &Params::new(16, 2).seed(seed))?;
        let d = exact_diameter(&Augmented::with_edges(&g, out.plan.added())).value;
        println!("seed {seed}: {} edges, diameter {d}", out.plan.len());
    }

    let star = Graph::from_edges(6, (1..6).map(|v| (0, v)))?;
    match constant_approx(&star, &Params::new(5, 1)) {
        Ok(out) => println!("star: {:?}", out.plan.added()),
        Err(e) => println!("star K1,5 with k=5, delta=1: {e}"),
    }
    Ok(())
}
