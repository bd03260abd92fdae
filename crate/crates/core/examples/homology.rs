//! Integral homology of configuration spaces through Smith normal form.
//!
//!     cargo run --example homology

use braidscope::config_space::build;
use braidscope::graph::{families, normalize, subdivide_for, Graph};
use braidscope::homology::complex_homology;
use braidscope::Limits;

fn main() -> braidscope::Result<()> {
    let limits = Limits::default();
    let graphs: Vec<(&str, Graph, usize)> = vec![
        ("K5", families::complete(5), 2),
        ("K3,3", families::complete_bipartite(3, 3), 2),
        ("rose(3)", normalize(&families::rose(3, 0)), 3),
        ("theta3", normalize(&families::theta(3)), 2),
    ];
    for (name, g, n) in graphs {
        let x = build(&subdivide_for(&g, n), n, None, &limits)?;
        let h = complex_homology(&x, &limits)?;
        let groups: Vec<String> = h.groups.iter().map(|grp| format!("H{} = {grp}", grp.dim)).collect();
        println!("{name:<8} n={n}  chi = {:>3}  {}", h.euler_characteristic, groups.join(", "));
    }
    Ok(())
}
