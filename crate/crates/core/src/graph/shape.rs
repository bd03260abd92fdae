use serde::Serialize;

use super::{smooth, Graph};

/// Homeomorphism type of a connected graph, as far as the classification
/// needs it. Vertex ids refer to the graph that was classified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    /// A point or an arc.
    Segment,
    Cycle,
    Star { center: usize, arms: usize },
    Theta { ends: [usize; 2] },
    HGraph { ends: [usize; 2] },
    CycleWithTwoRays { ends: [usize; 2] },
    /// One essential vertex carrying `cycles` loops and `rays` leaf arcs, with at least one loop.
    Rose { center: usize, cycles: usize, rays: usize },
    /// One cycle with leaf arcs attached at its essential vertices.
    Sun { cycle_vertices: Vec<usize>, rays: usize },
    /// Two essential vertices joined by `cycles + 1` arcs, plus leaf arcs at either.
    Pulsar { ends: [usize; 2], cycles: usize, rays: usize },
    Tree,
    General,
}

impl Shape {
    /// Segments, cycles, stars and roses: at most one essential vertex.
    pub fn is_rose_like(&self) -> bool {
        matches!(self, Shape::Segment | Shape::Cycle | Shape::Star { .. } | Shape::Rose { .. })
    }

    pub fn is_tree(&self) -> bool {
        matches!(self, Shape::Segment | Shape::Star { .. } | Shape::HGraph { .. } | Shape::Tree)
    }

    /// A single cycle with leaf arcs: cycles, roses with one loop, suns and
    /// cycles with two rays.
    pub fn is_sun_like(&self) -> bool {
        match self {
            Shape::Cycle | Shape::Sun { .. } | Shape::CycleWithTwoRays { .. } => true,
            Shape::Rose { cycles, .. } => *cycles == 1,
            _ => false,
        }
    }

    /// Pulsars in the wide sense, thetas included.
    pub fn is_pulsar_like(&self) -> bool {
        matches!(self, Shape::Pulsar { .. } | Shape::Theta { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Shape::Segment => "segment",
            Shape::Cycle => "cycle",
            Shape::Star { .. } => "star",
            Shape::Theta { .. } => "theta",
            Shape::HGraph { .. } => "h_graph",
            Shape::CycleWithTwoRays { .. } => "cycle_with_two_rays",
            Shape::Rose { .. } => "rose",
            Shape::Sun { .. } => "sun",
            Shape::Pulsar { .. } => "pulsar",
            Shape::Tree => "tree",
            Shape::General => "general",
        }
    }
}

/// Classifies a connected graph up to homeomorphism. Disconnected graphs are
/// reported as [`Shape::General`].
pub fn classify_shape(g: &Graph) -> Shape {
    if !g.is_connected() || g.vertex_count() == 0 {
        return Shape::General;
    }
    let s = smooth(g);
    let orig = |v: usize| g.vertex_id(s.name(v)).expect("smoothing keeps names");
    let nv = s.vertex_count();
    let ne = s.edge_count();
    let b1 = ne + 1 - nv;
    let deg: Vec<usize> = s.vertices().map(|v| s.degree(v)).collect();
    let ess: Vec<usize> = s.vertices().filter(|&v| deg[v] >= 3).collect();
    let leaf = |v: usize| deg[v] == 1;
    let loops_at = |v: usize| s.incident(v).iter().filter(|&&e| s.edge(e).is_loop()).count();
    let edges_between = |u: usize, v: usize| {
        s.edges().iter().filter(|e| (e.a == u && e.b == v) || (e.a == v && e.b == u)).count()
    };
    let pendant_at = |c: usize| s.neighbors(c).filter(|&(e, w)| !s.edge(e).is_loop() && leaf(w)).count();

    if ess.is_empty() {
        return if b1 == 0 { Shape::Segment } else { Shape::Cycle };
    }
    if ess.len() == 1 {
        let c = ess[0];
        return if b1 == 0 {
            Shape::Star { center: orig(c), arms: deg[c] }
        } else {
            Shape::Rose { center: orig(c), cycles: loops_at(c), rays: pendant_at(c) }
        };
    }
    if ess.len() == 2 {
        let (u, v) = (ess[0], ess[1]);
        let ends = [orig(u), orig(v)];
        let both3 = deg[u] == 3 && deg[v] == 3;
        let uv = edges_between(u, v);
        let no_loops = loops_at(u) == 0 && loops_at(v) == 0;
        if both3 && no_loops && uv == 3 {
            return Shape::Theta { ends };
        }
        if both3 && b1 == 0 {
            return Shape::HGraph { ends };
        }
        if both3 && b1 == 1 && uv == 2 {
            return Shape::CycleWithTwoRays { ends };
        }
        // every vertex other than u, v is a leaf hanging off u or v
        let all_pendant = s.vertices().all(|w| w == u || w == v || leaf(w));
        if no_loops && uv >= 2 && all_pendant {
            return Shape::Pulsar { ends, cycles: uv - 1, rays: nv - 2 };
        }
    }
    if b1 == 0 {
        return Shape::Tree;
    }
    if b1 == 1 {
        // the cycle is what remains after removing leaves once
        let core: Vec<usize> = s.vertices().filter(|&v| !leaf(v)).collect();
        let core_is_cycle = core.iter().all(|&v| {
            let inner = s.neighbors(v).filter(|&(_, w)| !leaf(w)).count();
            let l = loops_at(v);
            inner + l == 2
        });
        if core_is_cycle {
            let cycle_vertices = core.iter().map(|&v| orig(v)).collect();
            return Shape::Sun { cycle_vertices, rays: nv - core.len() };
        }
    }
    Shape::General
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, normalize, parse_graph};

    fn shape_name(g: &Graph) -> &'static str {
        classify_shape(g).name()
    }

    #[test]
    fn basic_shapes() {
        assert_eq!(shape_name(&families::path(4)), "segment");
        assert_eq!(shape_name(&families::path(1)), "segment");
        assert_eq!(shape_name(&families::cycle(6)), "cycle");
        assert_eq!(classify_shape(&families::star(3, 2)), Shape::Star { center: 0, arms: 3 });
        assert_eq!(shape_name(&normalize(&families::theta(3))), "theta");
        assert_eq!(shape_name(&normalize(&families::theta(4))), "pulsar");
        assert_eq!(shape_name(&normalize(&families::rose(2, 1))), "rose");
        assert_eq!(shape_name(&families::complete(4)), "general");
        assert_eq!(shape_name(&families::dumbbell()), "general");
    }

    #[test]
    fn h_graph_and_cycle_with_rays() {
        let h = parse_graph("v a\nv b\nv c\nv d\nv e\nv f\ne 1 a c\ne 2 b c\ne 3 c d\ne 4 d e\ne 5 d f\n").unwrap();
        assert_eq!(shape_name(&h), "h_graph");
        let cr = parse_graph("v a\nv b\nv c\nv d\nv x\nv y\ne 1 a b\ne 2 b c\ne 3 c d\ne 4 d a\ne 5 a x\ne 6 c y\n").unwrap();
        assert_eq!(shape_name(&cr), "cycle_with_two_rays");
    }

    #[test]
    fn suns_and_pulsars() {
        // square with a ray at three corners
        let sun = parse_graph(
            "v a\nv b\nv c\nv d\nv x\nv y\nv z\ne 1 a b\ne 2 b c\ne 3 c d\ne 4 d a\ne 5 a x\ne 6 b y\ne 7 c z\n",
        )
        .unwrap();
        assert!(matches!(classify_shape(&sun), Shape::Sun { rays: 3, .. }));
        // K_{2,3} with a ray at one end is a pulsar
        let mut p = families::complete_bipartite(2, 3);
        let r = p.add_vertex("r").unwrap();
        p.add_edge(0, r);
        assert!(matches!(classify_shape(&p), Shape::Pulsar { cycles: 2, rays: 1, .. }));
        // a ray off a degree-2 vertex of a theta is general
        let mut t = normalize(&families::theta(3));
        let r = t.add_vertex("r").unwrap();
        t.add_edge(2, r);
        assert_eq!(shape_name(&t), "general");
    }
}
