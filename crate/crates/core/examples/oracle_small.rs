//! Exact optima on tiny graphs for all three objectives.

use bcmd::instances::{gen_cycle, gen_path};
use bcmd::metrics::ColorPartition;
use bcmd::oracle::{solve_exact, Objective};

fn main() -> bcmd::Result<()> {
    for n in 5..=9 {
        let g = gen_path(n)?;
        for (k, delta) in [(1, 1), (2, 1), (2, 2)] {
            let r = solve_exact(&g, k, delta, Objective::Diameter)?;
            println!("P{n} k={k} delta={delta}: {} via {:?} ({} sets)", r.optimum, r.plan.added(), r.explored);
        }
    }
    let c8 = gen_cycle(8)?;
    let r = solve_exact(&c8, 1, 1, Objective::SingleSource(0))?;
    println!("C8 eccentricity of 0 with one shortcut: {} via {:?}", r.optimum, r.plan.added());

    let p8 = gen_path(8)?;
    let part = ColorPartition::from_side(8, &[0, 1, 2])?;
    let r = solve_exact(&p8, 1, 1, Objective::Colored(part))?;
    println!("P8 colored {{0,1,2}} vs rest: {} via {:?}", r.optimum, r.plan.added());
    Ok(())
}
