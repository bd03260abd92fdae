use std::collections::BTreeSet;

use super::Graph;

type Adj = Vec<u16>;

fn code(adj: &Adj, perm: &[usize]) -> u64 {
    // perm[i] = old vertex placed at position i
    let k = perm.len();
    let mut c = 0u64;
    for i in 0..k {
        for j in i + 1..k {
            c <<= 1;
            if adj[perm[i]] >> perm[j] & 1 == 1 {
                c |= 1;
            }
        }
    }
    c
}

/// Canonical code: the largest adjacency code over all vertex orders that
/// sort vertices by a degree-based invariant.
fn canonical(adj: &Adj) -> u64 {
    let k = adj.len();
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let inv: Vec<(u32, Vec<u32>)> = (0..k)
        .map(|v| {
            let mut nd: Vec<u32> = (0..k).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if inv[c[0]] == inv[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut perm = Vec::with_capacity(k);
    search(adj, &classes, 0, &mut vec![false; k], &mut perm, &mut best);
    best
}

fn search(adj: &Adj, classes: &[Vec<usize>], ci: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, best: &mut u64) {
    if ci == classes.len() {
        *best = (*best).max(code(adj, perm));
        return;
    }
    let class = &classes[ci];
    let placed_here = perm.len() - classes[..ci].iter().map(Vec::len).sum::<usize>();
    if placed_here == class.len() {
        search(adj, classes, ci + 1, used, perm, best);
        return;
    }
    for &v in class {
        if !used[v] {
            used[v] = true;
            perm.push(v);
            search(adj, classes, ci, used, perm, best);
            perm.pop();
            used[v] = false;
        }
    }
}

fn to_graph(adj: &Adj) -> Graph {
    let mut g = Graph::new();
    for i in 0..adj.len() {
        g.add_vertex(i.to_string()).expect("distinct");
    }
    for i in 0..adj.len() {
        for j in i + 1..adj.len() {
            if adj[i] >> j & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// All connected simple graphs with 1 to `max_vertices` vertices, one per
/// isomorphism class, ordered by vertex count and then by canonical code.
pub fn connected_graphs_up_to(max_vertices: usize) -> Vec<Graph> {
    assert!(max_vertices <= 10, "enumeration is meant for small graphs");
    let mut out = Vec::new();
    if max_vertices == 0 {
        return out;
    }
    let mut level: Vec<Adj> = vec![vec![0]];
    out.push(to_graph(&level[0]));
    for k in 1..max_vertices {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for mask in 1u16..(1 << k) {
                let mut a = adj.clone();
                a.push(mask);
                for (v, row) in a.iter_mut().enumerate().take(k) {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                if seen.insert(canonical(&a)) {
                    next.push(a);
                }
            }
        }
        let mut keyed: Vec<(u64, Adj)> = next.into_iter().map(|a| (canonical(&a), a)).collect();
        keyed.sort();
        level = keyed.into_iter().map(|(_, a)| a).collect();
        out.extend(level.iter().map(to_graph));
    }
    out
}
