//! The set-cover gadget: one matching shortcut round brings the diameter
//! from 4 to 3 exactly when a small enough cover exists.

use bcmd::instances::{gen_setcover_gadget, SetCoverInstance};
use bcmd::metrics::exact_diameter;
use bcmd::oracle::{solve_exact, Objective};

fn main() -> bcmd::Result<()> {
    for (sets, k) in [("1;2", 2), ("1,2;2,3;1,3", 1), ("1,2;2,3;1,3", 2), ("1,2,3;3,4;4", 1)] {
        let inst = SetCoverInstance::parse(sets, k)?;
        let h = gen_setcover_gadget(&inst)?;
        let base = exact_diameter(&h.graph).value;
        let best = solve_exact(&h.graph, k, 1, Objective::Diameter)?;
        println!(
            "sets {sets:<12} k={k}: cover {} | n={} base {base} optimum {} via {:?}",
            inst.has_cover(),
            h.graph.n(),
            best.optimum,
            best.plan.added()
        );
    }
    Ok(())
}
