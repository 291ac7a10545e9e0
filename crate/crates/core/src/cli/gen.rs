use std::fs;
use std::path::PathBuf;

use super::{GenArgs, GenKind};
use crate::error::{Error, Result};
use crate::graph::write_edge_list;
use crate::instances::{gen_cycle, gen_path, gen_random_connected, gen_random_tree, gen_setcover_gadget, SetCoverInstance};

fn need(value: Option<usize>, flag: &str, kind: &str) -> Result<usize> {
    value.ok_or_else(|| Error::InvalidParameter(format!("--kind {kind} needs --{flag}")))
}

/// Default roles path: `h.txt` becomes `h.roles.json`.
fn roles_path(args: &GenArgs) -> PathBuf {
    args.roles
        .clone()
        .unwrap_or_else(|| args.out.with_extension("roles.json"))
}

/// Writes the generated edge list, plus the roles file for gadgets. Returns
/// the paths written.
pub fn cmd_gen(args: &GenArgs) -> Result<Vec<PathBuf>> {
    let graph = match args.kind {
        GenKind::Path => gen_path(need(args.n, "n", "path")?)?,
        GenKind::Cycle => gen_cycle(need(args.n, "n", "cycle")?)?,
        GenKind::Tree => gen_random_tree(need(args.n, "n", "tree")?, args.seed)?,
        GenKind::Random => gen_random_connected(
            need(args.n, "n", "random")?,
            need(args.m, "m", "random")?,
            args.seed,
        )?,
        GenKind::Gadget => {
            let sets = args
                .sets
                .as_deref()
                .ok_or_else(|| Error::InvalidParameter("--kind gadget needs --sets".into()))?;
            let inst = SetCoverInstance::parse(sets, need(args.k, "k", "gadget")?)?;
            let gadget = gen_setcover_gadget(&inst)?;
            fs::write(&args.out, write_edge_list(&gadget.graph, None))?;
            let roles = roles_path(args);
            fs::write(&roles, serde_json::to_string(&gadget.roles)? + "\n")?;
            return Ok(vec![args.out.clone(), roles]);
        }
    };
    fs::write(&args.out, write_edge_list(&graph, None))?;
    Ok(vec![args.out.clone()])
}
