//! Builds UC_n of a few graphs and prints f-vectors, Euler characteristics
//! and the nonpositive curvature check.
//!
//!     cargo run --example config_space

use braidscope::config_space::{build, check_npc, is_surface};
use braidscope::graph::{families, normalize, subdivide_for, Graph};
use braidscope::Limits;

fn main() -> braidscope::Result<()> {
    let limits = Limits::default();
    let graphs: Vec<(&str, Graph, usize)> = vec![
        ("K5", families::complete(5), 2),
        ("K3,3", families::complete_bipartite(3, 3), 2),
        ("tripod", families::star(3, 1), 2),
        ("theta4", normalize(&families::theta(4)), 3),
        ("K4", families::complete(4), 3),
    ];
    for (name, g, n) in graphs {
        let g = subdivide_for(&g, n);
        let x = build(&g, n, None, &limits)?;
        let npc = check_npc(&x);
        print!(
            "{name:<7} n={n}  f = {:?}  chi = {}  components = {}  npc = {}",
            x.f_vector(),
            x.euler_characteristic(),
            x.components().1,
            npc.passed
        );
        if n == 2 {
            print!("  closed surface = {}", is_surface(&x)?.is_surface);
        }
        println!();
    }
    Ok(())
}
