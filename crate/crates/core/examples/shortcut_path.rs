//! Matching shortcuts on a path, checked against the closed-form bounds.

use bcmd::algos::path_construction;
use bcmd::bounds::{path_lower, path_upper};
use bcmd::graph::Augmented;
use bcmd::instances::gen_path;
use bcmd::metrics::exact_diameter;

fn main() -> bcmd::Result<()> {
    let n = 300;
    let g = gen_path(n)?;
    println!("{:>4} {:>8} {:>6} {:>8}", "k", "lower", "diam", "upper");
    for k in [1, 2, 3, 5, 8, 13, 21, 34, 55, 99] {
        let out = path_construction(n, k)?;
        let d = exact_diameter(&Augmented::with_edges(&g, out.plan.added())).value;
        println!(
            "{k:>4} {:>8.0} {d:>6} {:>8.2}",
            path_lower(n, k).ceil(),
            path_upper(n, k)
        );
    }
    Ok(())
}
