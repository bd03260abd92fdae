use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use super::{Diagram, DiagramGroupoid, Letter, LegalWord};
use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::graph::Subgraph;

/// A spherical diagram conjugated to a cyclically reduced one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportData {
    /// Cyclically reduced diagram, based at the conjugated base.
    pub reduced: Diagram,
    /// Word from the original base to the base of `reduced`.
    pub conjugator: LegalWord,
    /// Edges used by `reduced` with their endpoints.
    pub support: Subgraph,
    /// Particles of the reduced base lying in the support.
    pub particles: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportView {
    pub reduced: String,
    pub reduced_base: String,
    pub conjugator: String,
    pub support_edges: Vec<String>,
    pub support_connected: bool,
    pub particles_in_support: usize,
}

impl<'g> DiagramGroupoid<'g> {
    /// Positions of letters that can be moved to the front by commutations.
    fn initial_positions(&self, w: &[Letter]) -> Vec<usize> {
        (0..w.len()).filter(|&i| w[..i].iter().all(|&y| self.commute(w[i], y))).collect()
    }

    fn terminal_positions(&self, w: &[Letter]) -> Vec<usize> {
        (0..w.len()).filter(|&i| w[i + 1..].iter().all(|&y| self.commute(w[i], y))).collect()
    }

    /// Conjugates a spherical diagram to a cyclically reduced one by peeling
    /// off initial letters whose inverses are terminal.
    pub fn cyclically_reduce(&self, d: &Diagram) -> Result<SupportData> {
        if !d.is_spherical() {
            return Err(Error::NonSpherical);
        }
        let g = self.graph();
        let mut w = d.letters.clone();
        let mut base = d.base.clone();
        let mut conj = Vec::new();
        loop {
            let terminal = self.terminal_positions(&w);
            let mut best: Option<(Letter, usize, usize)> = None;
            for i in self.initial_positions(&w) {
                for &j in &terminal {
                    if j != i && w[j] == w[i].inv() && best.is_none_or(|(b, _, _)| w[i] < b) {
                        best = Some((w[i], i, j));
                    }
                }
            }
            let Some((x, i, j)) = best else { break };
            base = self.apply(&base, x).expect("an initial letter is legal at the base");
            conj.push(x);
            let (hi, lo) = (i.max(j), i.min(j));
            w.remove(hi);
            w.remove(lo);
        }
        let reduced = self.reduce(&LegalWord { base: base.clone(), letters: w, terminus: base.clone() });
        let conjugator = self.check_legal(&d.base, &conj)?;
        let support = Subgraph::from_edges(g, reduced.letters.iter().map(|l| l.edge));
        let particles = base.vertices().iter().copied().filter(|v| support.vertices.contains(v)).collect();
        Ok(SupportData { reduced, conjugator, support, particles })
    }

    /// Sufficient condition for a cyclic centralizer: the cyclically reduced
    /// diagram has connected support holding every particle.
    pub fn cyclic_centralizer_witness(&self, d: &Diagram) -> Result<bool> {
        if d.is_empty() {
            return Err(Error::precondition("the trivial diagram has no cyclic reduction witness"));
        }
        let s = self.cyclically_reduce(d)?;
        Ok(s.support.is_connected(self.graph()) && s.particles.len() == self.particles())
    }

    pub fn support_view(&self, s: &SupportData) -> SupportView {
        let g = self.graph();
        SupportView {
            reduced: self.format_word(&s.reduced.letters),
            reduced_base: s.reduced.base.display(g),
            conjugator: self.format_word(&s.conjugator.letters),
            support_edges: s.support.edges.iter().map(|&e| g.edge(e).name.clone()).collect(),
            support_connected: s.support.is_connected(g),
            particles_in_support: s.particles.len(),
        }
    }

    /// All normal forms reachable from a spherical diagram by moving its first
    /// letter to the end. Cyclic reductions of conjugate diagrams land in the
    /// same class.
    pub fn rotation_class(&self, d: &Diagram, cap: usize) -> Result<BTreeSet<(Configuration, Vec<Letter>)>> {
        if !d.is_spherical() {
            return Err(Error::NonSpherical);
        }
        let mut seen: HashSet<(Configuration, Vec<Letter>)> = HashSet::new();
        let mut queue = VecDeque::from([(d.base.clone(), d.letters.clone())]);
        seen.insert((d.base.clone(), d.letters.clone()));
        while let Some((base, w)) = queue.pop_front() {
            if w.is_empty() {
                continue;
            }
            for i in self.initial_positions(&w) {
                let x = w[i];
                let mut rest = w.clone();
                rest.remove(i);
                rest.push(x);
                let nb = self.apply(&base, x).expect("initial letters are legal");
                let nf = self.lex_normal(&rest);
                if seen.len() >= cap {
                    return Err(Error::ResourceLimit { what: "rotation class", needed: cap as u128 + 1, cap: cap as u128 });
                }
                if seen.insert((nb.clone(), nf.clone())) {
                    queue.push_back((nb, nf));
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn conjugate_reduces_back() {
        let g = families::cycle(5);
        let dg = DiagramGroupoid::new(&g, 2).unwrap();
        let base = Configuration::new(vec![0, 1]).unwrap();
        let cycle = crate::graph::simple_cycles(&g, 10).unwrap().remove(0);
        let rot = dg.make_rotation(&cycle, &base).unwrap();
        // conjugate by a move of the particle at 1 to 2 (edge e2 joins 1-2)
        let c = dg.diagram(&base, &dg.parse_word("+e2").unwrap()).unwrap();
        let rotated_base = dg.concat(&dg.concat(&dg.inverse(&c), &rot).unwrap(), &c).unwrap();
        let a = dg.cyclically_reduce(&rot).unwrap();
        let b = dg.cyclically_reduce(&rotated_base).unwrap();
        assert_eq!(a.reduced.len(), b.reduced.len());
        let class = dg.rotation_class(&a.reduced, 10_000).unwrap();
        assert!(class.contains(&(b.reduced.base.clone(), b.reduced.letters.clone())));
        assert!(dg.cyclic_centralizer_witness(&rot).unwrap());
    }

    #[test]
    fn non_spherical_rejected() {
        let g = families::path(3);
        let dg = DiagramGroupoid::new(&g, 1).unwrap();
        let d = dg.diagram(&Configuration::new(vec![0]).unwrap(), &dg.parse_word("+e1").unwrap()).unwrap();
        assert_eq!(dg.cyclically_reduce(&d).unwrap_err(), Error::NonSpherical);
    }
}
