use std::collections::HashMap;

use super::{Diagram, DiagramGroupoid, Letter};
use crate::config_space::{Configuration, CubeComplex, Step};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::util::UnionFind;

#[derive(Clone, Debug)]
struct CoverVertex {
    projection: usize,
    depth: usize,
    parent: Option<(usize, Step)>,
    /// 1-cube index -> neighbouring cover vertex
    nbrs: HashMap<usize, usize>,
}

/// A combinatorial ball in the universal cover of a nonpositively curved
/// cube complex, grown layer by layer from the base vertex.
///
/// New vertices at distance k + 1 are the outward edges of layer k, glued
/// together exactly when two of them close up a square over a common vertex
/// of layer k - 1. In a CAT(0) cube complex this recovers the cover without
/// using any word-problem machinery, so it serves as an oracle for diagram
/// equality.
#[derive(Clone, Debug)]
pub struct Ball<'x> {
    complex: &'x CubeComplex,
    steps: Vec<Vec<Step>>,
    vertices: Vec<CoverVertex>,
}

/// Builds the radius-`radius` ball around `base` in the universal cover.
pub fn ball_oracle<'x>(x: &'x CubeComplex, base: &Configuration, radius: usize, limits: &Limits) -> Result<Ball<'x>> {
    if !x.has_dimension(2) {
        return Err(Error::precondition("the cover construction needs the 2-skeleton"));
    }
    let root = x
        .find_vertex(base)
        .ok_or_else(|| Error::precondition("base is not a vertex of the complex"))?;
    let steps: Vec<Vec<Step>> = (0..x.count(0)).map(|v| x.steps(v)).collect();
    let mut vertices = vec![CoverVertex { projection: root, depth: 0, parent: None, nbrs: HashMap::new() }];
    let mut layers: Vec<Vec<usize>> = vec![vec![0]];
    for k in 0..radius {
        let mut cands: Vec<(usize, Step)> = Vec::new();
        let mut cand_index: HashMap<(usize, usize), usize> = HashMap::new();
        for &u in &layers[k] {
            for s in &steps[vertices[u].projection] {
                if !vertices[u].nbrs.contains_key(&s.cube) {
                    cand_index.insert((u, s.cube), cands.len());
                    cands.push((u, *s));
                }
            }
        }
        let mut uf = UnionFind::new(cands.len());
        if k >= 1 {
            for &z in &layers[k - 1] {
                let ups: Vec<(Step, usize)> = steps[vertices[z].projection]
                    .iter()
                    .filter_map(|s| {
                        let u = *vertices[z].nbrs.get(&s.cube)?;
                        (vertices[u].depth == k).then_some((*s, u))
                    })
                    .collect();
                for (i, &(s1, u1)) in ups.iter().enumerate() {
                    for &(s2, u2) in &ups[i + 1..] {
                        if x.span(vertices[z].projection, &[s1, s2]).is_none() {
                            continue;
                        }
                        let parallel = |u: usize, s: Step| {
                            steps[vertices[u].projection]
                                .iter()
                                .find(|t| t.edge == s.edge && t.from_vertex == s.from_vertex)
                                .copied()
                        };
                        let (Some(t1), Some(t2)) = (parallel(u1, s2), parallel(u2, s1)) else {
                            return Err(Error::precondition("a square is missing a side"));
                        };
                        debug_assert_eq!(t1.target, t2.target);
                        if let (Some(&c1), Some(&c2)) = (cand_index.get(&(u1, t1.cube)), cand_index.get(&(u2, t2.cube))) {
                            uf.union(c1, c2);
                        }
                    }
                }
            }
        }
        let (labels, count) = uf.labels();
        if vertices.len() + count > limits.max_ball_vertices {
            return Err(Error::ResourceLimit {
                what: "ball vertices",
                needed: (vertices.len() + count) as u128,
                cap: limits.max_ball_vertices as u128,
            });
        }
        let first = vertices.len();
        let mut layer = Vec::with_capacity(count);
        for c in 0..count {
            layer.push(first + c);
        }
        let mut created = vec![false; count];
        for (ci, &(u, s)) in cands.iter().enumerate() {
            let id = first + labels[ci];
            if !created[labels[ci]] {
                created[labels[ci]] = true;
                vertices.push(CoverVertex { projection: s.target, depth: k + 1, parent: Some((u, s)), nbrs: HashMap::new() });
            }
            debug_assert_eq!(vertices[id].projection, s.target);
            vertices[u].nbrs.insert(s.cube, id);
            vertices[id].nbrs.insert(s.cube, u);
        }
        layers.push(layer);
    }
    Ok(Ball { complex: x, steps, vertices })
}

impl<'x> Ball<'x> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn depth(&self, v: usize) -> usize {
        self.vertices[v].depth
    }

    pub fn projection(&self, v: usize) -> Configuration {
        self.complex.vertex(self.vertices[v].projection)
    }

    /// A geodesic word from the base to cover vertex `v`.
    pub fn word(&self, v: usize) -> Vec<Letter> {
        let g = self.complex.graph();
        let mut out = Vec::new();
        let mut cur = v;
        while let Some((p, s)) = self.vertices[cur].parent {
            out.push(Letter::along(g, s.edge, s.from_vertex));
            cur = p;
        }
        out.reverse();
        out
    }

    /// Follows a word from the base; `None` when it is illegal or leaves the ball.
    pub fn locate(&self, letters: &[Letter]) -> Option<usize> {
        let g = self.complex.graph();
        let mut cur = 0;
        for &l in letters {
            let from = l.origin(g);
            let s = self.steps[self.vertices[cur].projection]
                .iter()
                .find(|s| s.edge == l.edge && s.from_vertex == from)?;
            cur = *self.vertices[cur].nbrs.get(&s.cube)?;
        }
        Some(cur)
    }

    /// The diagrams represented by the ball, one per vertex, in BFS order.
    pub fn diagrams(&self, dg: &DiagramGroupoid<'_>) -> Result<Vec<Diagram>> {
        let base = self.projection(0);
        (0..self.len()).map(|v| dg.diagram(&base, &self.word(v))).collect()
    }
}
