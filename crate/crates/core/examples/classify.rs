//! Full classification report for a graph file, or a classification grid for
//! complete graphs when no file is given.
//!
//!     cargo run --example classify -- crates/core/data/k6.txt 3

use braidscope::classifier::full_report;
use braidscope::classifier::table::{table, Family};
use braidscope::cli::to_canonical_json;
use braidscope::graph::{normalize, parse_graph};
use braidscope::Limits;

fn main() -> braidscope::Result<()> {
    let limits = Limits::default();
    let mut args = std::env::args().skip(1);
    if let Some(path) = args.next() {
        let text = std::fs::read_to_string(&path).expect("readable graph file");
        let g = normalize(&parse_graph(&text)?);
        let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
        print!("{}", to_canonical_json(&full_report(&g, n, &limits)?));
        return Ok(());
    }
    let t = table(Family::Complete, 7, 2..=4, &limits)?;
    println!("graph  n  hyperbolic  toral_rel_hyp  acyl");
    for r in &t.rows {
        println!(
            "{:<6} {}  {:<10}  {:<13}  {:?}",
            r.graph, r.particles, r.hyperbolic, r.toral_rel_hyp, r.acyl_hyp_status
        );
    }
    Ok(())
}
