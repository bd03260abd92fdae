//! Hyperplanes of UC_2(K5) found two ways, and the special coloring check,
//! including a complex with a square removed.
//!
//!     cargo run --example hyperplanes

use braidscope::config_space::build;
use braidscope::graph::families;
use braidscope::hyperplanes::{hyperplanes_by_bfs, hyperplanes_by_components, verify_special_coloring};
use braidscope::Limits;

fn main() -> braidscope::Result<()> {
    let limits = Limits::default();
    let g = families::complete(5);
    let x = build(&g, 2, None, &limits)?;
    let walked = hyperplanes_by_bfs(&x)?;
    let counted = hyperplanes_by_components(&g, 2, &limits)?;
    println!("square walk: {} hyperplanes, component count: {}", walked.len(), counted.len());
    for h in &walked {
        let e = g.edge(h.color);
        println!("  edge {} ({}-{}) crosses {} edges", e.name, g.name(e.a), g.name(e.b), h.members.len());
    }
    let report = verify_special_coloring(&x)?;
    println!("special coloring: {}", report.passed);
    let broken = verify_special_coloring(&x.without_cube(2, 0))?;
    match broken.violation {
        Some(v) => println!("without one square: axiom {} fails ({})", v.axiom, v.detail),
        None => println!("without one square: still special"),
    }
    Ok(())
}
