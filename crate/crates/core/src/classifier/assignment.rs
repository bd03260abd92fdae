use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};

/// Particle counts per connected component, in the order of
/// [`Graph::components`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParticleAssignment {
    pub counts: Vec<usize>,
}

impl ParticleAssignment {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Every way to place `n` particles on `components` components,
    /// lexicographically decreasing in the first component.
    pub fn enumerate(components: usize, n: usize) -> Vec<ParticleAssignment> {
        fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<ParticleAssignment>) {
            if slots == 1 {
                cur.push(left);
                out.push(ParticleAssignment { counts: cur.clone() });
                cur.pop();
                return;
            }
            for k in (0..=left).rev() {
                cur.push(k);
                rec(left - k, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if components > 0 {
            rec(n, components, &mut Vec::new(), &mut out);
        }
        out
    }

    pub(crate) fn check(&self, components: usize) -> Result<()> {
        if self.counts.len() != components {
            return Err(Error::precondition(format!(
                "assignment has {} entries but the graph has {components} components",
                self.counts.len()
            )));
        }
        Ok(())
    }
}

/// The connected components as standalone graphs, keeping names.
pub fn component_graphs(g: &Graph) -> Vec<Graph> {
    g.components().into_iter().map(|c| g.extract(&Subgraph::induced(g, c)).0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions() {
        let all = ParticleAssignment::enumerate(3, 2);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|a| a.total() == 2));
        assert_eq!(all[0].counts, vec![2, 0, 0]);
        assert_eq!(ParticleAssignment::enumerate(1, 4), vec![ParticleAssignment { counts: vec![4] }]);
    }
}
