//! Every algorithm on one graph with plan checks, plus the single-source
//! and colored objectives.

use bcmd::algos::{Algorithm, Params};
use bcmd::graph::Augmented;
use bcmd::instances::gen_random_connected;
use bcmd::metrics::{colored_diameter, eccentricity, exact_diameter, ColorPartition};

fn main() -> bcmd::Result<()> {
    let g = gen_random_connected(800, 1000, 9)?;
    let half: Vec<usize> = (0..400).collect();
    let part = ColorPartition::from_side(800, &half)?;
    println!(
        "before: diameter {} ecc(0) {} colored {}",
        exact_diameter(&g).value,
        eccentricity(&g, 0),
        colored_diameter(&g, &part)?
    );
    let params = Params::new(24, 2).seed(4);
    for algo in Algorithm::ALL.into_iter().filter(|&a| a != Algorithm::Path) {
        match algo.run(&g, &params) {
            Ok(out) => {
                out.plan.validate(&g)?;
                let aug = Augmented::with_edges(&g, out.plan.added());
                println!(
                    "{algo:<13} {:>2} edges: diameter {} ecc(0) {} colored {}",
                    out.plan.len(),
                    exact_diameter(&aug).value,
                    eccentricity(&aug, 0),
                    colored_diameter(&aug, &part)?
                );
            }
            Err(e) => println!("{algo:<13} {e}"),
        }
    }
    Ok(())
}
