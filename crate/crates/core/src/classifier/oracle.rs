//! Brute-force search for two disjoint subgraphs whose braid groups commute.
//!
//! The search runs on the smoothed graph with every arc cut into three
//! edges. A nontrivial factor always contains a simple cycle (one particle)
//! or a cycle or tripod (two or more), so the second subgraph only ranges
//! over those; the first then ranges over the components of what is left,
//! which is the largest choice available. Both properties involved only get
//! easier to satisfy with more particles or a larger subgraph, so putting
//! the fewest particles on the second subgraph loses nothing.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{simple_cycles, smooth, subdivide_edges, Graph};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleWitness {
    /// The factor carrying F₂ (or merely nontrivial, for the hyperbolicity search).
    pub lambda1: Vec<String>,
    pub particles1: usize,
    pub lambda2: Vec<String>,
    pub particles2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub found: bool,
    pub witness: Option<OracleWitness>,
}

/// The graph the oracle searches.
pub fn oracle_graph(g: &Graph, limits: &Limits) -> Result<Graph> {
    let s = smooth(g);
    if s.vertex_count() > limits.max_oracle_vertices {
        return Err(Error::ResourceLimit {
            what: "oracle smoothed vertices",
            needed: s.vertex_count() as u128,
            cap: limits.max_oracle_vertices as u128,
        });
    }
    Ok(subdivide_edges(&s, &vec![2; s.edge_count()]))
}

/// Finds disjoint connected Λ₁, Λ₂ with both braid groups nontrivial.
pub fn oracle_nonhyperbolic(g: &Graph, n: usize, limits: &Limits) -> Result<OracleResult> {
    search(g, n, limits, nontrivial)
}

/// Finds disjoint connected Λ₁, Λ₂ with B(Λ₁) containing F₂ and B(Λ₂) nontrivial.
pub fn oracle_f2xz(g: &Graph, n: usize, limits: &Limits) -> Result<OracleResult> {
    search(g, n, limits, contains_f2)
}

struct Piece {
    betti: usize,
    degrees: Vec<usize>,
}

impl Piece {
    fn is_segment(&self) -> bool {
        self.betti == 0 && self.degrees.iter().all(|&d| d <= 2)
    }

    fn is_cycle(&self) -> bool {
        self.betti == 1 && self.degrees.iter().all(|&d| d == 2)
    }

    fn is_three_star(&self) -> bool {
        self.betti == 0
            && self.degrees.iter().filter(|&&d| d == 3).count() == 1
            && self.degrees.iter().all(|&d| d <= 3)
    }
}

fn nontrivial(k: &Piece, r: usize) -> bool {
    match r {
        0 => false,
        1 => k.betti >= 1,
        _ => !k.is_segment(),
    }
}

fn contains_f2(k: &Piece, r: usize) -> bool {
    match r {
        0 => false,
        1 => k.betti >= 2,
        2 => !(k.is_segment() || k.is_cycle() || k.is_three_star()),
        _ => !(k.is_segment() || k.is_cycle()),
    }
}

fn search(g: &Graph, n: usize, limits: &Limits, good: fn(&Piece, usize) -> bool) -> Result<OracleResult> {
    let o = oracle_graph(g, limits)?;
    let mut candidates: Vec<(Vec<usize>, usize)> = simple_cycles(&o, limits.max_cycles)?
        .into_iter()
        .map(|c| (c.sorted_vertices(), 1))
        .collect();
    for v in o.vertices().filter(|&v| o.degree(v) >= 3) {
        let nbrs: Vec<usize> = o.neighbors(v).map(|(_, w)| w).sorted().collect();
        for three in nbrs.into_iter().combinations(3) {
            let mut vs = vec![v];
            vs.extend(three);
            vs.sort_unstable();
            candidates.push((vs, 2));
        }
    }
    for (lambda2, s) in candidates {
        if s >= n {
            continue;
        }
        let r = n - s;
        for (comp, piece) in pieces_avoiding(&o, &lambda2) {
            if good(&piece, r) {
                let label = |vs: &[usize]| vs.iter().map(|&v| o.name(v).to_string()).collect();
                return Ok(OracleResult {
                    found: true,
                    witness: Some(OracleWitness {
                        lambda1: label(&comp),
                        particles1: r,
                        lambda2: label(&lambda2),
                        particles2: s,
                    }),
                });
            }
        }
    }
    Ok(OracleResult { found: false, witness: None })
}

fn pieces_avoiding(o: &Graph, removed: &[usize]) -> Vec<(Vec<usize>, Piece)> {
    let mut gone = vec![false; o.vertex_count()];
    for &v in removed {
        gone[v] = true;
    }
    let mut seen = gone.clone();
    let mut out = Vec::new();
    for s in o.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for (_, w) in o.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let degrees: Vec<usize> =
            comp.iter().map(|&v| o.neighbors(v).filter(|&(_, w)| !gone[w]).count()).collect();
        let edges = degrees.iter().sum::<usize>() / 2;
        let piece = Piece { betti: edges + 1 - comp.len(), degrees };
        out.push((comp, piece));
    }
    out
}
