use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// A simple cycle as a closed vertex sequence: `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }

    /// Builds a cycle from a closed vertex walk in a simple graph.
    pub fn from_vertices(g: &Graph, vertices: Vec<usize>) -> Option<Cycle> {
        let k = vertices.len();
        if k < 3 {
            return None;
        }
        let mut seen = vertices.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != k {
            return None;
        }
        let edges = (0..k)
            .map(|i| g.edge_between(vertices[i], vertices[(i + 1) % k]))
            .collect::<Option<Vec<_>>>()?;
        Some(Cycle { vertices, edges })
    }
}

/// A shortest cycle (loops and digons included), if the graph has one.
/// Ties go to the cycle through the lowest-index edge.
pub fn girth_cycle(g: &Graph) -> Option<Cycle> {
    let mut best: Option<Cycle> = None;
    for (e, ed) in g.edges().iter().enumerate() {
        if ed.is_loop() {
            return Some(Cycle { vertices: vec![ed.a], edges: vec![e] });
        }
        // shortest path from b back to a avoiding e
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        seen[ed.b] = true;
        let mut queue = VecDeque::from([ed.b]);
        while let Some(v) = queue.pop_front() {
            if v == ed.a {
                break;
            }
            for (f, w) in g.neighbors(v) {
                if f != e && !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, f));
                    queue.push_back(w);
                }
            }
        }
        if !seen[ed.a] {
            continue;
        }
        let mut vertices = vec![ed.a];
        let mut edges = Vec::new();
        let mut cur = ed.a;
        while let Some((p, f)) = prev[cur] {
            edges.push(f);
            vertices.push(p);
            cur = p;
        }
        // vertices: a .. b, edges along; close with e from b to a
        edges.push(e);
        let c = Cycle { vertices, edges };
        if best.as_ref().is_none_or(|b| c.len() < b.len()) {
            best = Some(c);
        }
    }
    best
}

/// All simple cycles of a simple graph, ordered by sorted vertex set and then
/// by canonical form (rotated to start at the smallest vertex, oriented
/// towards the smaller neighbour). Fails once more than `cap` are found.
pub fn simple_cycles(g: &Graph, cap: usize) -> Result<Vec<Cycle>> {
    if !g.is_simple() {
        return Err(Error::precondition("cycle enumeration needs a simple graph"));
    }
    let mut out = Vec::new();
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        extend(g, s, &mut path, &mut on_path, &mut out, cap)?;
        on_path[s] = false;
    }
    let mut keyed: Vec<(Vec<usize>, Cycle)> = out
        .into_iter()
        .map(|vs| {
            let c = Cycle::from_vertices(g, vs).expect("valid cycle");
            (c.sorted_vertices(), c)
        })
        .collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}

fn extend(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    let v = *path.last().unwrap();
    for (_, w) in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            if out.len() >= cap {
                return Err(Error::ResourceLimit {
                    what: "simple cycles",
                    needed: cap as u128 + 1,
                    cap: cap as u128,
                });
            }
            out.push(path.clone());
        } else if w > s && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, s, path, on_path, out, cap)?;
            path.pop();
            on_path[w] = false;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn complete_graph_cycle_counts() {
        // K_4: 4 triangles + 3 squares; K_5: 10 + 15 + 12
        assert_eq!(simple_cycles(&families::complete(4), 100).unwrap().len(), 7);
        assert_eq!(simple_cycles(&families::complete(5), 100).unwrap().len(), 37);
        assert_eq!(simple_cycles(&families::complete_bipartite(3, 3), 100).unwrap().len(), 15);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            simple_cycles(&families::complete(5), 10),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn canonical_orientation() {
        let cs = simple_cycles(&families::cycle(5), 10).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn girth() {
        assert_eq!(girth_cycle(&families::complete_bipartite(3, 3)).unwrap().len(), 4);
        assert_eq!(girth_cycle(&families::theta(2)).unwrap().len(), 2);
        assert!(girth_cycle(&families::star(3, 2)).is_none());
    }
}
