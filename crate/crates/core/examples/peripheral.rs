//! Checks a candidate collection of peripheral subgraphs: every pair of
//! triangles in K6 through vertex 1, then a collection that misses a pair.
//!
//!     cargo run --example peripheral

use braidscope::classifier::{check_peripheral_collection, parse_collection};
use braidscope::graph::families;
use braidscope::Limits;

fn main() -> braidscope::Result<()> {
    let g = families::complete(6);
    let mut text = String::new();
    for a in 2..=6 {
        for b in a + 1..=6 {
            let rest: Vec<usize> = (2..=6).filter(|&x| x != a && x != b).collect();
            text += &format!("1-{a}-{b}-1 {0}-{1}-{2}-{0}\n", rest[0], rest[1], rest[2]);
        }
    }
    for (label, text) in [("all ten pairs", text.clone()), ("first nine", text.lines().take(9).collect::<Vec<_>>().join("\n"))] {
        let c = parse_collection(&g, &text)?;
        let r = check_peripheral_collection(&g, &c, &Limits::default())?;
        println!("{label}: {} members", r.members);
        println!("  covers disjoint cycles   {}", r.covers_disjoint_cycles.holds);
        println!("  segment intersections    {}", r.intersections_are_segments.holds);
        println!("  paths stay inside        {}", r.paths_stay_inside.holds);
        println!("  conclusion: {}", r.conclusion);
    }
    Ok(())
}
