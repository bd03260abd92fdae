use std::collections::{BTreeMap, HashSet};

use super::{cycles::girth_cycle, fresh_name, Graph};

/// A maximal path whose interior vertices all have degree 2.
///
/// `vertices` runs from `start` to `end` inclusive; for a closed arc the two
/// coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub start: usize,
    pub end: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Arc {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.start == self.end
    }
}

/// Vertices treated as arc endpoints: degree other than 2, plus the smallest
/// vertex of every component that is a bare cycle.
fn branch_vertices(g: &Graph) -> Vec<bool> {
    let mut branch: Vec<bool> = g.vertices().map(|v| g.degree(v) != 2).collect();
    for comp in g.components() {
        if comp.iter().all(|&v| !branch[v]) {
            branch[comp[0]] = true;
        }
    }
    branch
}

/// Decomposes the graph into arcs between branch vertices, in order of their
/// first edge as discovered from branch vertices in index order.
pub fn arcs(g: &Graph) -> Vec<Arc> {
    let branch = branch_vertices(g);
    let mut used = vec![false; g.edge_count()];
    let mut out = Vec::new();
    for s in g.vertices().filter(|&v| branch[v]) {
        for &e0 in g.incident(s) {
            if used[e0] {
                continue;
            }
            let mut vertices = vec![s];
            let mut edges = Vec::new();
            let (mut cur, mut e) = (s, e0);
            loop {
                used[e] = true;
                edges.push(e);
                let next = g.edge(e).other(cur);
                vertices.push(next);
                if branch[next] {
                    break;
                }
                cur = next;
                e = *g.incident(cur).iter().find(|&&f| !used[f]).expect("degree-2 interior vertex");
            }
            out.push(Arc { start: s, end: *vertices.last().unwrap(), vertices, edges });
        }
    }
    out
}

/// Replaces edge `e` by a path with `counts[e]` new interior vertices.
/// Original vertices keep their indices; new vertices follow.
pub(crate) fn subdivide_edges(g: &Graph, counts: &[usize]) -> Graph {
    let mut out = Graph::new();
    for v in g.vertices() {
        out.add_vertex(g.name(v)).expect("distinct");
    }
    let reserved: HashSet<&str> = g.edges().iter().map(|e| e.name.as_str()).collect();
    for (i, e) in g.edges().iter().enumerate() {
        let k = counts.get(i).copied().unwrap_or(0);
        if k == 0 {
            out.add_edge_named(e.name.clone(), e.a, e.b).expect("distinct");
            continue;
        }
        let mut prev = e.a;
        for j in 1..=k {
            let v = out.add_fresh_vertex(&format!("{}_{j}", e.name));
            let name = fresh_name(&format!("{}_{j}", e.name), |s| {
                reserved.contains(s) || out.edge_id(s).is_some()
            });
            out.add_edge_named(name, prev, v).expect("fresh");
            prev = v;
        }
        let name = fresh_name(&format!("{}_{}", e.name, k + 1), |s| {
            reserved.contains(s) || out.edge_id(s).is_some()
        });
        out.add_edge_named(name, prev, e.b).expect("fresh");
    }
    out
}

/// Makes a multigraph simple without changing its homeomorphism type:
/// loops get two interior vertices, parallel edges one each.
pub fn normalize(g: &Graph) -> Graph {
    let mut multiplicity: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in g.edges() {
        *multiplicity.entry((e.a.min(e.b), e.a.max(e.b))).or_default() += 1;
    }
    let counts: Vec<usize> = g
        .edges()
        .iter()
        .map(|e| {
            if e.is_loop() {
                2
            } else if multiplicity[&(e.a.min(e.b), e.a.max(e.b))] > 1 {
                1
            } else {
                0
            }
        })
        .collect();
    if counts.iter().all(|&c| c == 0) {
        return g.clone();
    }
    subdivide_edges(g, &counts)
}

/// Subdivides so that the discrete configuration space of `n` particles is a
/// deformation retract of the topological one:
///
/// * every arc between two distinct essential vertices has length at least `n - 1`,
/// * every cycle has length at least `n + 1`,
/// * there are at least `n` vertices (when the graph has an edge).
///
/// The result is simple and original vertices keep their indices and names.
pub fn subdivide_for(g: &Graph, n: usize) -> Graph {
    let mut cur = normalize(g);
    let need = n.saturating_sub(1);
    let mut counts = vec![0; cur.edge_count()];
    for arc in arcs(&cur) {
        if arc.start != arc.end
            && cur.is_essential(arc.start)
            && cur.is_essential(arc.end)
            && arc.len() < need
        {
            counts[arc.edges[0]] += need - arc.len();
        }
    }
    if counts.iter().any(|&c| c > 0) {
        cur = subdivide_edges(&cur, &counts);
    }
    while let Some(c) = girth_cycle(&cur) {
        if c.len() > n {
            break;
        }
        let e = *c.edges.iter().min().unwrap();
        let mut counts = vec![0; cur.edge_count()];
        counts[e] = n + 1 - c.len();
        cur = subdivide_edges(&cur, &counts);
    }
    if cur.vertex_count() < n && cur.edge_count() > 0 {
        let mut counts = vec![0; cur.edge_count()];
        counts[0] = n - cur.vertex_count();
        cur = subdivide_edges(&cur, &counts);
    }
    cur
}

/// Suppresses degree-2 vertices, keeping branch vertices with their names.
/// Arcs become edges named after their first edge; a bare cycle becomes a loop.
pub fn smooth(g: &Graph) -> Graph {
    let branch = branch_vertices(g);
    let mut out = Graph::new();
    let mut map = vec![usize::MAX; g.vertex_count()];
    for v in g.vertices().filter(|&v| branch[v]) {
        map[v] = out.add_vertex(g.name(v)).expect("distinct");
    }
    for arc in arcs(g) {
        out.add_fresh_edge(&g.edge(arc.edges[0]).name, map[arc.start], map[arc.end]);
    }
    out
}

/// Name-level description used to compare graphs up to the identity on names:
/// sorted vertex names and the sorted multiset of endpoint-name pairs.
pub fn canonical_signature(g: &Graph) -> (Vec<String>, Vec<(String, String)>) {
    let mut vs: Vec<String> = g.vertices().map(|v| g.name(v).to_string()).collect();
    vs.sort();
    let mut es: Vec<(String, String)> = g
        .edges()
        .iter()
        .map(|e| {
            let (x, y) = (g.name(e.a).to_string(), g.name(e.b).to_string());
            if x <= y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    es.sort();
    (vs, es)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn normalize_makes_simple() {
        let g = normalize(&families::rose(2, 1));
        assert!(g.is_simple());
        assert_eq!(g.first_betti(), 2);
        let t = normalize(&families::theta(3));
        assert!(t.is_simple());
        assert_eq!(t.vertex_count(), 5);
        let k = families::complete(4);
        assert_eq!(normalize(&k), k);
    }

    #[test]
    fn triangle_for_three_particles_is_a_square() {
        let g = subdivide_for(&families::cycle(3), 3);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(girth_cycle(&g).unwrap().len(), 4);
    }

    #[test]
    fn arcs_cover_edges() {
        let g = subdivide_for(&families::complete(4), 3);
        let a = arcs(&g);
        assert_eq!(a.len(), 6);
        assert!(a.iter().all(|x| x.len() == 2));
        assert_eq!(a.iter().map(Arc::len).sum::<usize>(), g.edge_count());
    }

    #[test]
    fn smoothing_undoes_subdivision() {
        for g in [families::complete(4), families::complete_bipartite(2, 3), families::dumbbell()] {
            let s = subdivide_for(&g, 4);
            assert_eq!(canonical_signature(&smooth(&s)), canonical_signature(&smooth(&g)));
        }
        let c = smooth(&families::cycle(5));
        assert_eq!(c.vertex_count(), 1);
        assert!(c.has_loops());
    }
}
