//! Explicit elements with cyclic centralizers: a rotation around a shortest
//! cycle and a swap at a tripod, with their cyclic reductions and supports.
//!
//!     cargo run --example witnesses

use braidscope::config_space::Configuration;
use braidscope::diagrams::{find_tripod, DiagramGroupoid};
use braidscope::graph::{families, girth_cycle, subdivide_for};

fn main() -> braidscope::Result<()> {
    for (name, g, n) in [("K4", families::complete(4), 3), ("K3,3", families::complete_bipartite(3, 3), 2)] {
        let s = subdivide_for(&g, n);
        let dg = DiagramGroupoid::new(&s, n)?;
        let mut elements = Vec::new();
        if let Some(c) = girth_cycle(&s).filter(|c| c.len() > n) {
            let base = Configuration::new(c.vertices[..n].to_vec())?;
            elements.push(("rotation", dg.make_rotation(&c, &base)?));
        }
        if let Some(t) = find_tripod(&s, n) {
            elements.push(("tripod swap", dg.make_tripod_swap(&t)?));
        }
        for (kind, d) in elements {
            let red = dg.cyclically_reduce(&d)?;
            let view = dg.support_view(&red);
            println!("{name} n={n} {kind}: {}", dg.view(&d).word);
            println!("  reduced base {}, conjugator {:?}", view.reduced_base, view.conjugator);
            println!(
                "  support {} (connected {}), {} particles inside",
                view.support_edges.join(" "),
                view.support_connected,
                view.particles_in_support
            );
            println!("  cyclic centralizer witness: {}", dg.cyclic_centralizer_witness(&d)?);
        }
    }
    Ok(())
}
