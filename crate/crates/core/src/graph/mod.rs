//! Finite graphs with named vertices and edges.
//!
//! Vertices and edges are addressed by dense indices in insertion order; the
//! names are only used for I/O. Loops and parallel edges are allowed here, the
//! configuration-space code requires a simple graph (see [`normalize`]).

mod cycles;
mod enumerate;
pub mod families;
mod io;
mod shape;
mod transform;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

pub use cycles::{girth_cycle, simple_cycles, Cycle};
pub use enumerate::connected_graphs_up_to;
pub use io::{parse_graph, write_graph};
pub use shape::{classify_shape, Shape};
pub use transform::{arcs, canonical_signature, normalize, smooth, subdivide_for, Arc};
pub(crate) use transform::subdivide_edges;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    /// The endpoint opposite to `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

#[derive(Clone, Debug, Default)]
pub struct Graph {
    names: Vec<String>,
    vertex_index: HashMap<String, usize>,
    edges: Vec<Edge>,
    edge_index: HashMap<String, usize>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex; fails if the name is taken.
    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if self.vertex_index.contains_key(&name) {
            return Err(Error::precondition(format!("duplicate vertex {name}")));
        }
        let id = self.names.len();
        self.vertex_index.insert(name.clone(), id);
        self.names.push(name);
        self.incidence.push(Vec::new());
        Ok(id)
    }

    /// Adds a vertex under a fresh name derived from `stem`.
    pub fn add_fresh_vertex(&mut self, stem: &str) -> usize {
        let name = fresh_name(stem, |s| self.vertex_index.contains_key(s));
        self.add_vertex(name).expect("fresh name")
    }

    pub fn add_edge_named(&mut self, name: impl Into<String>, a: usize, b: usize) -> Result<usize> {
        let name = name.into();
        if a >= self.names.len() || b >= self.names.len() {
            return Err(Error::precondition(format!("edge {name} has an unknown endpoint")));
        }
        if self.edge_index.contains_key(&name) {
            return Err(Error::precondition(format!("duplicate edge {name}")));
        }
        let id = self.edges.len();
        self.edge_index.insert(name.clone(), id);
        self.edges.push(Edge { name, a, b });
        self.incidence[a].push(id);
        if a != b {
            self.incidence[b].push(id);
        }
        Ok(id)
    }

    /// Adds an edge with a generated name `e<k>`.
    pub fn add_edge(&mut self, a: usize, b: usize) -> usize {
        let stem = format!("e{}", self.edges.len() + 1);
        let name = fresh_name(&stem, |s| self.edge_index.contains_key(s));
        self.add_edge_named(name, a, b).expect("endpoints exist")
    }

    /// Adds an edge under a fresh name derived from `stem`.
    pub fn add_fresh_edge(&mut self, stem: &str, a: usize, b: usize) -> usize {
        let name = fresh_name(stem, |s| self.edge_index.contains_key(s));
        self.add_edge_named(name, a, b).expect("endpoints exist")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_id(&self, name: &str) -> Option<usize> {
        self.edge_index.get(name).copied()
    }

    /// Edge ids incident to `v`; a loop is listed once.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].iter().map(|&e| if self.edges[e].is_loop() { 2 } else { 1 }).sum()
    }

    pub fn is_essential(&self, v: usize) -> bool {
        self.degree(v) >= 3
    }

    pub fn essential_vertices(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.is_essential(v)).collect()
    }

    /// `(edge, neighbour)` pairs around `v`; a loop contributes one pair.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.incidence[v].iter().map(move |&e| (e, self.edges[e].other(v)))
    }

    /// First edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.incidence[u].iter().copied().find(|&e| {
            let ed = &self.edges[e];
            (ed.a == u && ed.b == v) || (ed.a == v && ed.b == u)
        })
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            if e.is_loop() || !seen.insert((e.a.min(e.b), e.a.max(e.b))) {
                return false;
            }
        }
        true
    }

    /// Component label per vertex, labels numbered by smallest member.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.vertex_count()];
        let mut count = 0;
        for s in self.vertices() {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for (_, w) in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (label, count) = self.component_labels();
        let mut out = vec![Vec::new(); count];
        for (v, &l) in label.iter().enumerate() {
            out[l].push(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// Rank of H_1.
    pub fn first_betti(&self) -> usize {
        let (_, c) = self.component_labels();
        self.edge_count() + c - self.vertex_count()
    }

    /// Standalone copy of the subgraph spanned by `vertices` and `edges`.
    /// Returns the new graph with the vertex and edge maps old -> new.
    pub fn extract(&self, sub: &Subgraph) -> (Graph, Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut g = Graph::new();
        let mut vmap = vec![None; self.vertex_count()];
        for &v in &sub.vertices {
            vmap[v] = Some(g.add_vertex(self.names[v].clone()).expect("unique names"));
        }
        let mut emap = vec![None; self.edge_count()];
        for &e in &sub.edges {
            let ed = &self.edges[e];
            let (a, b) = (vmap[ed.a].expect("closed"), vmap[ed.b].expect("closed"));
            emap[e] = Some(g.add_edge_named(ed.name.clone(), a, b).expect("unique names"));
        }
        (g, vmap, emap)
    }
}

pub(crate) fn fresh_name(stem: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(stem) {
        return stem.to_string();
    }
    (1..)
        .map(|i| format!("{stem}_{i}"))
        .find(|s| !taken(s))
        .expect("unbounded search")
}

/// A subgraph of a parent graph, stored as index sets of the parent.
/// Every edge's endpoints are members.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgraph {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<usize>,
}

impl Subgraph {
    /// Induced subgraph on a vertex set.
    pub fn induced(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Self {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| vertices.contains(&e.a) && vertices.contains(&e.b))
            .map(|(i, _)| i)
            .collect();
        Subgraph { vertices, edges }
    }

    /// Subgraph spanned by edges together with their endpoints.
    pub fn from_edges(g: &Graph, edges: impl IntoIterator<Item = usize>) -> Self {
        let edges: BTreeSet<usize> = edges.into_iter().collect();
        let vertices = edges.iter().flat_map(|&e| [g.edge(e).a, g.edge(e).b]).collect();
        Subgraph { vertices, edges }
    }

    pub fn whole(g: &Graph) -> Self {
        Subgraph { vertices: g.vertices().collect(), edges: (0..g.edge_count()).collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_disjoint(&self, other: &Subgraph) -> bool {
        self.vertices.is_disjoint(&other.vertices)
    }

    pub fn contains(&self, other: &Subgraph) -> bool {
        other.vertices.is_subset(&self.vertices) && other.edges.is_subset(&self.edges)
    }

    pub fn union(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            vertices: self.vertices.intersection(&other.vertices).copied().collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
        }
    }

    /// Degree of `v` counting only member edges (loops twice).
    pub fn degree_in(&self, g: &Graph, v: usize) -> usize {
        g.incident(v)
            .iter()
            .filter(|e| self.edges.contains(e))
            .map(|&e| if g.edge(e).is_loop() { 2 } else { 1 })
            .sum()
    }

    /// Vertex sets of the components, ordered by smallest vertex.
    pub fn components(&self, g: &Graph) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in &self.vertices {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = BTreeSet::from([s]);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &e in g.incident(v) {
                    if !self.edges.contains(&e) {
                        continue;
                    }
                    let w = g.edge(e).other(v);
                    if seen.insert(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, g: &Graph) -> bool {
        self.components(g).len() <= 1
    }

    pub fn first_betti(&self, g: &Graph) -> usize {
        self.edges.len() + self.components(g).len() - self.vertices.len()
    }

    /// Restriction to a vertex set: the induced subgraph of `self` on `vs`.
    pub fn restrict(&self, g: &Graph, vs: &BTreeSet<usize>) -> Subgraph {
        Subgraph {
            vertices: self.vertices.intersection(vs).copied().collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&e| vs.contains(&g.edge(e).a) && vs.contains(&g.edge(e).b))
                .collect(),
        }
    }
}
