//! Hyperplanes of UC_n(Γ), the coloring graph Δ and the special-coloring check.
//!
//! Two routes to the hyperplanes are provided and meant to be compared: one
//! closes 1-cubes under square parallelism, the other reads hyperplanes
//! labelled by an edge e off the components of UC_{n-1}(Γ ∖ e).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::config_space::{build, Configuration, Cube, CubeComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};
use crate::limits::Limits;
use crate::util::{ParityUnionFind, UnionFind};

/// A hyperplane: the Γ-edge labelling its dual 1-cubes and the stationary
/// configurations of those 1-cubes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Hyperplane {
    pub color: usize,
    pub members: Vec<Configuration>,
}

/// Hyperplanes as parallelism classes of 1-cubes across squares.
pub fn hyperplanes_by_bfs(x: &CubeComplex) -> Result<Vec<Hyperplane>> {
    if !x.has_dimension(2) {
        return Err(Error::precondition("hyperplanes need the 2-skeleton"));
    }
    let g = x.graph();
    let mut uf = UnionFind::new(x.count(1));
    for sq in x.cubes(2) {
        for i in 0..2 {
            // the two facets dropping the other moving edge are parallel to moving[i]
            let lo = x.find(&sq.facet(g, 1 - i, false));
            let hi = x.find(&sq.facet(g, 1 - i, true));
            if let (Some(a), Some(b)) = (lo, hi) {
                uf.union(a, b);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..x.count(1) {
        classes.entry(uf.find(i)).or_default().push(i);
    }
    let mut out: Vec<Hyperplane> = classes
        .into_values()
        .map(|ms| {
            let color = x.cube(1, ms[0]).moving[0];
            let mut members: Vec<Configuration> = ms
                .iter()
                .map(|&i| Configuration::new(x.cube(1, i).stationary.clone()).expect("sorted"))
                .collect();
            members.sort();
            Hyperplane { color, members }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Hyperplanes labelled e read off UC_{n-1}(Γ ∖ e), where Γ ∖ e removes both
/// endpoints of e.
pub fn hyperplanes_by_components(g: &Graph, n: usize, limits: &Limits) -> Result<Vec<Hyperplane>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (e, ed) in g.edges().iter().enumerate() {
        let keep = g.vertices().filter(|&v| v != ed.a && v != ed.b);
        let (h, vmap, _) = g.extract(&Subgraph::induced(g, keep));
        let back: Vec<usize> = {
            let mut b = vec![0; h.vertex_count()];
            for (old, new) in vmap.iter().enumerate() {
                if let Some(nv) = new {
                    b[*nv] = old;
                }
            }
            b
        };
        let y = build(&h, n - 1, Some(1), limits)?;
        let (labels, count) = y.components();
        let mut groups: Vec<Vec<Configuration>> = vec![Vec::new(); count];
        for (v, &l) in labels.iter().enumerate() {
            let c = Configuration::new(y.vertex(v).vertices().iter().map(|&u| back[u]).collect())?;
            groups[l].push(c);
        }
        for mut members in groups {
            members.sort();
            out.push(Hyperplane { color: e, members });
        }
    }
    out.sort();
    Ok(out)
}

/// The coloring graph: vertices are Γ-edges, adjacent when vertex-disjoint.
#[derive(Clone, Debug)]
pub struct ColoringGraph {
    adj: Vec<Vec<bool>>,
}

impl ColoringGraph {
    pub fn new(g: &Graph) -> Self {
        let m = g.edge_count();
        let adj = (0..m)
            .map(|e| {
                (0..m)
                    .map(|f| {
                        let (x, y) = (g.edge(e), g.edge(f));
                        e != f && !x.touches(y.a) && !x.touches(y.b)
                    })
                    .collect()
            })
            .collect();
        ColoringGraph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, e: usize, f: usize) -> bool {
        self.adj[e][f]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.adj.len();
        (0..m).flat_map(|e| (e + 1..m).map(move |f| (e, f))).filter(|&(e, f)| self.adj[e][f]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringViolation {
    pub axiom: u8,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub passed: bool,
    pub hyperplanes: usize,
    pub violation: Option<ColoringViolation>,
}

/// Oriented color of a 1-cube traversed from its lower to its upper end,
/// computed from the two configurations: (Γ-edge, moves from edge.a to edge.b).
fn traversal_color(x: &CubeComplex, lo: usize, hi: usize) -> Option<(usize, bool)> {
    let (t, h) = (x.vertex(lo), x.vertex(hi));
    let from: Vec<usize> = t.vertices().iter().copied().filter(|&v| !h.contains(v)).collect();
    let to: Vec<usize> = h.vertices().iter().copied().filter(|&v| !t.contains(v)).collect();
    if from.len() != 1 || to.len() != 1 {
        return None;
    }
    let e = x.graph().edge_between(from[0], to[0])?;
    Some((e, x.graph().edge(e).a == from[0]))
}

/// Checks the four axioms of a special coloring for the coloring by Γ-edges.
pub fn verify_special_coloring(x: &CubeComplex) -> Result<ColoringReport> {
    if !x.has_dimension(2) {
        return Err(Error::precondition("the coloring check needs the 2-skeleton"));
    }
    let g = x.graph();
    let delta = ColoringGraph::new(g);
    let fail = |axiom: u8, detail: String, hyperplanes: usize| {
        Ok(ColoringReport { passed: false, hyperplanes, violation: Some(ColoringViolation { axiom, detail }) })
    };
    let ends: Vec<(usize, usize)> = (0..x.count(1))
        .map(|i| x.edge_endpoints(i).ok_or_else(|| Error::precondition("a 1-cube is missing a vertex")))
        .collect::<Result<_>>()?;

    // Orientation classes: parity true means the lower ends do not correspond.
    let mut puf = ParityUnionFind::new(x.count(1));
    let mut squares: Vec<(usize, usize)> = Vec::new();
    for sq in x.cubes(2) {
        let mut pair = [0usize; 2];
        for (i, slot) in pair.iter_mut().enumerate() {
            let e1 = x.find(&sq.facet(g, 1 - i, false));
            let e2 = x.find(&sq.facet(g, 1 - i, true));
            let f1 = x.find(&sq.facet(g, i, false));
            let f2 = x.find(&sq.facet(g, i, true));
            let (Some(e1), Some(e2), Some(f1), Some(f2)) = (e1, e2, f1, f2) else {
                return Err(Error::precondition("a square is missing a side"));
            };
            let rungs = [ends[f1], ends[f2]];
            let joined = |p: usize, q: usize| rungs.iter().any(|&(s, t)| (s == p && t == q) || (s == q && t == p));
            let same = joined(ends[e1].0, ends[e2].0) && joined(ends[e1].1, ends[e2].1);
            let flipped = joined(ends[e1].0, ends[e2].1) && joined(ends[e1].1, ends[e2].0);
            if !same && !flipped {
                return fail(1, format!("square {} is not a square", sq.display(g)), 0);
            }
            if !puf.union(e1, e2, !same) {
                return fail(1, format!("one-sided hyperplane through {}", sq.display(g)), 0);
            }
            *slot = e1;
        }
        squares.push((pair[0], pair[1]));
    }

    // Axiom 1: the color of an oriented hyperplane is well defined.
    let mut color: HashMap<usize, (usize, bool)> = HashMap::new();
    for (i, &(lo, hi)) in ends.iter().enumerate() {
        let (root, parity) = puf.find(i);
        let Some((e, fwd)) = traversal_color(x, lo, hi) else {
            return fail(1, format!("1-cube {} does not move one particle along an edge", x.cube(1, i).display(g)), 0);
        };
        let c = (e, fwd ^ parity);
        match color.get(&root) {
            Some(&prev) if prev != c => {
                return fail(1, format!("hyperplane through {} has two colors", x.cube(1, i).display(g)), color.len());
            }
            _ => {
                color.insert(root, c);
            }
        }
    }
    let hyperplanes = color.len();

    // Axiom 2: crossing hyperplanes have adjacent colors.
    for (k, &(a, b)) in squares.iter().enumerate() {
        let ca = color[&puf.find(a).0].0;
        let cb = color[&puf.find(b).0].0;
        if !delta.adjacent(ca, cb) {
            return fail(2, format!("square {} crosses colors {} and {}", x.cube(2, k).display(g), g.edge(ca).name, g.edge(cb).name), hyperplanes);
        }
    }

    for v in 0..x.count(0) {
        let steps = x.steps(v);
        // Axiom 3: distinct outgoing colors.
        let mut seen = BTreeSet::new();
        for s in &steps {
            if !seen.insert((s.edge, g.edge(s.edge).a == s.from_vertex)) {
                return fail(3, format!("two edges leave {} with color {}", x.vertex(v).display(g), g.edge(s.edge).name), hyperplanes);
            }
        }
        // Axiom 4: adjacent outgoing colors span a square.
        for (i, s) in steps.iter().enumerate() {
            for t in &steps[i + 1..] {
                if delta.adjacent(s.edge, t.edge) && x.span(v, &[*s, *t]).is_none() {
                    let cube = Cube {
                        moving: {
                            let mut m = vec![s.edge, t.edge];
                            m.sort_unstable();
                            m
                        },
                        stationary: x.vertex(v).vertices().iter().copied().filter(|&u| u != s.from_vertex && u != t.from_vertex).collect(),
                    };
                    return fail(4, format!("missing square {} at {}", cube.display(g), x.vertex(v).display(g)), hyperplanes);
                }
            }
        }
    }
    Ok(ColoringReport { passed: true, hyperplanes, violation: None })
}
