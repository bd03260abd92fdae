//! Standard graph families used in examples, tables and tests.

use super::Graph;

fn with_vertices(names: impl IntoIterator<Item = String>) -> Graph {
    let mut g = Graph::new();
    for n in names {
        g.add_vertex(n).expect("distinct names");
    }
    g
}

/// Complete graph K_m on vertices `1..=m`.
pub fn complete(m: usize) -> Graph {
    let mut g = with_vertices((1..=m).map(|i| i.to_string()));
    for i in 0..m {
        for j in i + 1..m {
            g.add_edge(i, j);
        }
    }
    g
}

/// Complete bipartite graph K_{p,q} on `a1..ap` and `b1..bq`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let names = (1..=p).map(|i| format!("a{i}")).chain((1..=q).map(|j| format!("b{j}")));
    let mut g = with_vertices(names);
    for i in 0..p {
        for j in 0..q {
            g.add_edge(i, p + j);
        }
    }
    g
}

/// Cycle on `k >= 3` vertices `0..k`.
pub fn cycle(k: usize) -> Graph {
    let mut g = with_vertices((0..k).map(|i| i.to_string()));
    for i in 0..k {
        g.add_edge(i, (i + 1) % k);
    }
    g
}

/// Path with `k` vertices `0..k`.
pub fn path(k: usize) -> Graph {
    let mut g = with_vertices((0..k).map(|i| i.to_string()));
    for i in 1..k {
        g.add_edge(i - 1, i);
    }
    g
}

/// Star with centre `c` and `arms` arms of the given length.
pub fn star(arms: usize, length: usize) -> Graph {
    let mut g = with_vertices(["c".to_string()]);
    for a in 0..arms {
        let mut prev = 0;
        for s in 1..=length {
            let v = g.add_vertex(format!("a{a}_{s}")).expect("distinct");
            g.add_edge(prev, v);
            prev = v;
        }
    }
    g
}

/// Rose with `petals` loops and `rays` pendant edges at a centre `c`.
/// Loops are kept as loops; pass through [`super::normalize`] before use.
pub fn rose(petals: usize, rays: usize) -> Graph {
    let mut g = with_vertices(["c".to_string()]);
    for _ in 0..petals {
        g.add_edge(0, 0);
    }
    for r in 0..rays {
        let v = g.add_vertex(format!("r{r}")).expect("distinct");
        g.add_edge(0, v);
    }
    g
}

/// Two vertices `u`, `v` joined by `k` parallel edges.
pub fn theta(k: usize) -> Graph {
    let mut g = with_vertices(["u".to_string(), "v".to_string()]);
    for _ in 0..k {
        g.add_edge(0, 1);
    }
    g
}

/// Two triangles joined by a bridge.
pub fn dumbbell() -> Graph {
    let mut g = with_vertices((0..6).map(|i| i.to_string()));
    for (a, b) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)] {
        g.add_edge(a, b);
    }
    g
}

/// Disjoint union; vertex and edge names of `h` get a suffix when they clash.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let mut out = g.clone();
    let mut map = Vec::with_capacity(h.vertex_count());
    for v in h.vertices() {
        map.push(out.add_fresh_vertex(h.name(v)));
    }
    for e in h.edges() {
        out.add_fresh_edge(&e.name, map[e.a], map[e.b]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3, 4).edge_count(), 12);
        assert_eq!(cycle(6).first_betti(), 1);
        assert_eq!(star(4, 2).vertex_count(), 9);
        assert_eq!(rose(3, 2).first_betti(), 3);
        assert_eq!(theta(3).first_betti(), 2);
        let u = disjoint_union(&cycle(3), &cycle(3));
        assert_eq!(u.vertex_count(), 6);
        assert_eq!(u.components().len(), 2);
    }
}
