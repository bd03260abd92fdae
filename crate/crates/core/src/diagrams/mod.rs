//! Words in the fundamental groupoid of UC_n(Γ).
//!
//! A letter moves one particle along one edge. A word is legal at a base
//! configuration when every letter's origin is occupied and its target free.
//! Two letters commute when their edges are vertex-disjoint; a reduced word
//! never contains `x ... x⁻¹` with everything in between commuting with `x`.
//! The normal form is the lexicographically least word in the commutation
//! class of the reduced word.

mod ball;
mod cyclic;
mod piling;
mod witnesses;

use std::fmt;

use serde::Serialize;

use crate::config_space::Configuration;
use crate::error::{Error, IllegalReason, Result};
use crate::graph::Graph;
use crate::hyperplanes::ColoringGraph;

pub use ball::{ball_oracle, Ball};
pub use cyclic::{SupportData, SupportView};
pub use piling::Piling;
pub use witnesses::{find_tripod, Tripod};

/// Traversal of a Γ-edge: forward goes from `edge.a` to `edge.b`.
/// Letters order by edge id, with the forward letter first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub edge: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn forward(edge: usize) -> Self {
        Letter { edge, inverse: false }
    }

    pub fn backward(edge: usize) -> Self {
        Letter { edge, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { edge: self.edge, inverse: !self.inverse }
    }

    /// Letter moving a particle from `from` to `to` across `edge`.
    pub fn along(g: &Graph, edge: usize, from: usize) -> Self {
        Letter { edge, inverse: g.edge(edge).a != from }
    }

    pub fn origin(self, g: &Graph) -> usize {
        let e = g.edge(self.edge);
        if self.inverse {
            e.b
        } else {
            e.a
        }
    }

    pub fn target(self, g: &Graph) -> usize {
        let e = g.edge(self.edge);
        if self.inverse {
            e.a
        } else {
            e.b
        }
    }

    pub fn token(self, g: &Graph) -> String {
        format!("{}{}", if self.inverse { '-' } else { '+' }, g.edge(self.edge).name)
    }
}

/// A word together with its base, checked to be legal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LegalWord {
    pub base: Configuration,
    pub letters: Vec<Letter>,
    pub terminus: Configuration,
}

/// A groupoid element in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    pub base: Configuration,
    pub letters: Vec<Letter>,
    pub terminus: Configuration,
}

impl Diagram {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_spherical(&self) -> bool {
        self.base == self.terminus
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordView {
    pub base: String,
    pub word: String,
    pub terminus: String,
    pub length: usize,
}

/// The diagram groupoid of `n` particles on a simple graph.
#[derive(Clone, Debug)]
pub struct DiagramGroupoid<'g> {
    graph: &'g Graph,
    particles: usize,
    delta: ColoringGraph,
}

impl<'g> DiagramGroupoid<'g> {
    pub fn new(graph: &'g Graph, particles: usize) -> Result<Self> {
        if !graph.is_simple() {
            return Err(Error::precondition("diagram groupoids need a simple graph"));
        }
        if particles > graph.vertex_count() {
            return Err(Error::precondition("more particles than vertices"));
        }
        Ok(DiagramGroupoid { graph, particles, delta: ColoringGraph::new(graph) })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn commute(&self, a: Letter, b: Letter) -> bool {
        self.delta.adjacent(a.edge, b.edge)
    }

    /// Parses whitespace-separated tokens `+e` / `-e`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for (i, tok) in text.split_whitespace().enumerate() {
            let (sign, name) = tok.split_at(tok.chars().next().map_or(0, char::len_utf8));
            let inverse = match sign {
                "+" => false,
                "-" => true,
                _ => return Err(Error::parse(1, format!("token {} ({tok:?}) lacks a sign", i + 1))),
            };
            let edge = self
                .graph
                .edge_id(name)
                .ok_or_else(|| Error::parse(1, format!("token {} names unknown edge {name:?}", i + 1)))?;
            out.push(Letter { edge, inverse });
        }
        Ok(out)
    }

    pub fn format_word(&self, letters: &[Letter]) -> String {
        letters.iter().map(|l| l.token(self.graph)).collect::<Vec<_>>().join(" ")
    }

    pub fn view(&self, d: &Diagram) -> WordView {
        WordView {
            base: d.base.display(self.graph),
            word: self.format_word(&d.letters),
            terminus: d.terminus.display(self.graph),
            length: d.len(),
        }
    }

    fn check_base(&self, base: &Configuration) -> Result<()> {
        if base.len() != self.particles {
            return Err(Error::precondition(format!(
                "base has {} particles, expected {}",
                base.len(),
                self.particles
            )));
        }
        if base.vertices().iter().any(|&v| v >= self.graph.vertex_count()) {
            return Err(Error::precondition("base names an unknown vertex"));
        }
        Ok(())
    }

    /// Applies one letter, failing when the move is blocked.
    pub fn apply(&self, config: &Configuration, l: Letter) -> std::result::Result<Configuration, IllegalReason> {
        let (o, t) = (l.origin(self.graph), l.target(self.graph));
        if !config.contains(o) {
            return Err(IllegalReason::OriginUnoccupied);
        }
        if config.contains(t) {
            return Err(IllegalReason::TargetOccupied);
        }
        Ok(config.moved(o, t))
    }

    pub fn check_legal(&self, base: &Configuration, letters: &[Letter]) -> Result<LegalWord> {
        self.check_base(base)?;
        let mut cur = base.clone();
        for (index, &l) in letters.iter().enumerate() {
            cur = self.apply(&cur, l).map_err(|reason| Error::IllegalMove { index, reason })?;
        }
        Ok(LegalWord { base: base.clone(), letters: letters.to_vec(), terminus: cur })
    }

    /// Cancels `x ... x⁻¹` pairs across commuting letters until none remain.
    pub fn cancel(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for &x in letters {
            let mut hit = None;
            for (j, &y) in out.iter().enumerate().rev() {
                if y == x.inv() {
                    hit = Some(j);
                    break;
                }
                if !self.commute(x, y) {
                    break;
                }
            }
            match hit {
                Some(j) => {
                    out.remove(j);
                }
                None => out.push(x),
            }
        }
        out
    }

    /// Lexicographically least rearrangement by commutations.
    pub fn lex_normal(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut rest: Vec<Letter> = letters.to_vec();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                let free = rest[..i].iter().all(|&y| self.commute(rest[i], y));
                if free && best.is_none_or(|b| rest[i] < rest[b]) {
                    best = Some(i);
                }
            }
            out.push(rest.remove(best.expect("the first letter is always available")));
        }
        out
    }

    pub fn reduce(&self, w: &LegalWord) -> Diagram {
        let letters = self.lex_normal(&self.cancel(&w.letters));
        Diagram { base: w.base.clone(), letters, terminus: w.terminus.clone() }
    }

    /// Checks legality and reduces in one go.
    pub fn diagram(&self, base: &Configuration, letters: &[Letter]) -> Result<Diagram> {
        Ok(self.reduce(&self.check_legal(base, letters)?))
    }

    pub fn identity(&self, base: &Configuration) -> Result<Diagram> {
        self.diagram(base, &[])
    }

    pub fn concat(&self, d1: &Diagram, d2: &Diagram) -> Result<Diagram> {
        if d1.terminus != d2.base {
            return Err(Error::Mismatch(format!(
                "terminus {} differs from base {}",
                d1.terminus.display(self.graph),
                d2.base.display(self.graph)
            )));
        }
        let mut letters = d1.letters.clone();
        letters.extend_from_slice(&d2.letters);
        let w = LegalWord { base: d1.base.clone(), letters, terminus: d2.terminus.clone() };
        Ok(self.reduce(&w))
    }

    pub fn inverse(&self, d: &Diagram) -> Diagram {
        let letters: Vec<Letter> = d.letters.iter().rev().map(|l| l.inv()).collect();
        let w = LegalWord { base: d.terminus.clone(), letters, terminus: d.base.clone() };
        self.reduce(&w)
    }

    pub fn equal(&self, d1: &Diagram, d2: &Diagram) -> bool {
        d1.base == d2.base && d1.letters == d2.letters
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.inverse { '-' } else { '+' }, self.edge)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn legality_errors_carry_position() {
        let g = families::cycle(4);
        let dg = DiagramGroupoid::new(&g, 2).unwrap();
        let base = Configuration::new(vec![0, 2]).unwrap();
        // e1 joins 0-1, e2 joins 1-2
        let w = dg.parse_word("+e1 +e2").unwrap();
        assert_eq!(
            dg.check_legal(&base, &w).unwrap_err(),
            Error::IllegalMove { index: 1, reason: IllegalReason::TargetOccupied }
        );
        let w = dg.parse_word("-e1").unwrap();
        assert_eq!(
            dg.check_legal(&base, &w).unwrap_err(),
            Error::IllegalMove { index: 0, reason: IllegalReason::OriginUnoccupied }
        );
    }

    #[test]
    fn cancellation_across_commuting_letters() {
        let g = families::cycle(4);
        let dg = DiagramGroupoid::new(&g, 2).unwrap();
        let base = Configuration::new(vec![0, 2]).unwrap();
        // +e1 moves 0->1, +e3 moves 2->3, -e1 moves 1->0: e1 and e3 are disjoint
        let d = dg.diagram(&base, &dg.parse_word("+e1 +e3 -e1").unwrap()).unwrap();
        assert_eq!(dg.format_word(&d.letters), "+e3");
        assert_eq!(d.terminus, Configuration::new(vec![0, 3]).unwrap());
    }

    #[test]
    fn normal_form_sorts_commuting_letters() {
        let g = families::cycle(4);
        let dg = DiagramGroupoid::new(&g, 2).unwrap();
        let base = Configuration::new(vec![0, 2]).unwrap();
        let d = dg.diagram(&base, &dg.parse_word("+e3 +e1").unwrap()).unwrap();
        assert_eq!(dg.format_word(&d.letters), "+e1 +e3");
    }

    #[test]
    fn inverse_and_concat() {
        let g = families::complete(5);
        let dg = DiagramGroupoid::new(&g, 2).unwrap();
        let base = Configuration::new(vec![0, 1]).unwrap();
        let d = dg.diagram(&base, &[Letter::along(&g, g.edge_between(0, 2).unwrap(), 0)]).unwrap();
        let id = dg.concat(&d, &dg.inverse(&d)).unwrap();
        assert!(id.is_empty());
        assert!(dg.concat(&d, &d).is_err());
    }
}
