//! Reduces words in the braid groupoid of a graph, compares them, and checks
//! the result against a ball in the universal cover.
//!
//!     cargo run --example word_problem -- "+e5 +e3 -e5 -e3"

use braidscope::config_space::{build, Configuration};
use braidscope::diagrams::{ball_oracle, DiagramGroupoid};
use braidscope::graph::families;
use braidscope::Limits;

fn main() -> braidscope::Result<()> {
    let g = families::complete(5);
    let dg = DiagramGroupoid::new(&g, 2)?;
    let base = Configuration::parse(&g, "1,2")?;
    let text = std::env::args().nth(1).unwrap_or_else(|| "+e5 +e3 -e5 -e3 +e3 +e10 -e4".into());
    let letters = dg.parse_word(&text)?;
    let d = dg.diagram(&base, &letters)?;
    let view = dg.view(&d);
    println!("input       {text}");
    println!("base        {}  terminus {}", view.base, view.terminus);
    println!("reduced     {} (length {})", view.word, view.length);
    println!("spherical   {}", d.is_spherical());

    let inverse = dg.inverse(&d);
    let back = dg.concat(&d, &inverse)?;
    println!("d * d^-1 is the identity: {}", dg.equal(&back, &dg.identity(&base)?));

    let x = build(&g, 2, None, &Limits::default())?;
    let ball = ball_oracle(&x, &base, 4, &Limits::default())?;
    println!("radius-4 ball in the universal cover: {} vertices", ball.len());
    if let Some(v) = ball.locate(&d.letters) {
        println!("reduced word ends at depth {} of the cover", ball.depth(v));
    }
    Ok(())
}
