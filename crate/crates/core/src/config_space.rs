//! The discrete unordered configuration space UC_n(Γ) as a cube complex.
//!
//! A d-cube is a set of d pairwise vertex-disjoint edges (the moving edges)
//! together with n - d stationary vertices avoiding their endpoints. Its faces
//! replace a moving edge by one of its endpoints.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// An unordered placement of particles: a sorted set of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Configuration(Vec<usize>);

impl Configuration {
    /// Sorts and checks for repeats.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::precondition("configuration repeats a vertex"));
        }
        Ok(Configuration(vertices))
    }

    /// Parses comma-separated vertex names.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut vs = Vec::new();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            vs.push(g.vertex_id(tok).ok_or_else(|| Error::precondition(format!("unknown vertex {tok}")))?);
        }
        Configuration::new(vs)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// The configuration with the particle at `from` moved to `to`.
    pub fn moved(&self, from: usize, to: usize) -> Configuration {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&x| x != from).collect();
        let pos = v.binary_search(&to).unwrap_or_else(|p| p);
        v.insert(pos, to);
        Configuration(v)
    }

    pub fn without(&self, v: usize) -> Configuration {
        Configuration(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    pub fn display(&self, g: &Graph) -> String {
        format!("{{{}}}", self.0.iter().map(|&v| g.name(v)).join(","))
    }
}

/// A cube of UC_n(Γ), addressed by its label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    /// Moving edges, sorted by edge id.
    pub moving: Vec<usize>,
    /// Stationary vertices, sorted.
    pub stationary: Vec<usize>,
}

impl Cube {
    pub fn dim(&self) -> usize {
        self.moving.len()
    }

    /// The face replacing moving edge `i` by its first (`upper = false`) or
    /// second endpoint.
    pub fn facet(&self, g: &Graph, i: usize, upper: bool) -> Cube {
        let e = g.edge(self.moving[i]);
        let v = if upper { e.b } else { e.a };
        let mut moving = self.moving.clone();
        moving.remove(i);
        let mut stationary = self.stationary.clone();
        let pos = stationary.binary_search(&v).unwrap_or_else(|p| p);
        stationary.insert(pos, v);
        Cube { moving, stationary }
    }

    /// The corner choosing endpoint b of moving edge i whenever bit i is set.
    pub fn corner(&self, g: &Graph, bits: u64) -> Configuration {
        let mut v = self.stationary.clone();
        for (i, &e) in self.moving.iter().enumerate() {
            let ed = g.edge(e);
            v.push(if bits >> i & 1 == 1 { ed.b } else { ed.a });
        }
        v.sort_unstable();
        Configuration(v)
    }

    pub fn display(&self, g: &Graph) -> String {
        format!(
            "[{}|{}]",
            self.moving.iter().map(|&e| g.edge(e).name.as_str()).join(","),
            self.stationary.iter().map(|&v| g.name(v)).join(",")
        )
    }
}

/// One step out of a 0-cube along a 1-cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    /// Index of the 1-cube.
    pub cube: usize,
    /// Γ-edge travelled.
    pub edge: usize,
    pub from_vertex: usize,
    pub to_vertex: usize,
    /// Index of the 0-cube reached.
    pub target: usize,
}

#[derive(Clone, Debug)]
pub struct CubeComplex {
    graph: Graph,
    particles: usize,
    requested_top: usize,
    cubes: Vec<Vec<Cube>>,
    index: Vec<HashMap<Cube, usize>>,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Builds UC_n(Γ) up to dimension `max_dim` (all dimensions when `None`).
pub fn build(g: &Graph, n: usize, max_dim: Option<usize>, limits: &Limits) -> Result<CubeComplex> {
    if !g.is_simple() {
        return Err(Error::precondition("configuration spaces need a simple graph; normalize first"));
    }
    let vertices_needed = binomial(g.vertex_count(), n);
    if vertices_needed > limits.max_cells {
        return Err(Error::ResourceLimit { what: "0-cubes", needed: vertices_needed, cap: limits.max_cells });
    }
    let top = max_dim.unwrap_or(n).min(n);
    let mut cubes: Vec<Vec<Cube>> = Vec::new();
    let mut total: u128 = 0;
    for d in 0..=top {
        let mut level = Vec::new();
        let mut used = vec![false; g.vertex_count()];
        let mut matching = Vec::new();
        let mut overflow = false;
        for_each_matching(g, d, 0, &mut used, &mut matching, &mut |m, used| {
            if overflow {
                return;
            }
            let free: Vec<usize> = g.vertices().filter(|&v| !used[v]).collect();
            for st in free.into_iter().combinations(n - d) {
                total += 1;
                if total > limits.max_cells {
                    overflow = true;
                    return;
                }
                level.push(Cube { moving: m.to_vec(), stationary: st });
            }
        });
        if overflow {
            return Err(Error::ResourceLimit { what: "cells", needed: total, cap: limits.max_cells });
        }
        if level.is_empty() && d > 0 {
            break;
        }
        cubes.push(level);
    }
    Ok(CubeComplex::from_cubes(g.clone(), n, top, cubes))
}

fn for_each_matching(
    g: &Graph,
    d: usize,
    start: usize,
    used: &mut Vec<bool>,
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize], &[bool]),
) {
    if cur.len() == d {
        f(cur, used);
        return;
    }
    for e in start..g.edge_count() {
        let ed = g.edge(e);
        if used[ed.a] || used[ed.b] {
            continue;
        }
        used[ed.a] = true;
        used[ed.b] = true;
        cur.push(e);
        for_each_matching(g, d, e + 1, used, cur, f);
        cur.pop();
        used[ed.a] = false;
        used[ed.b] = false;
    }
}

impl CubeComplex {
    fn from_cubes(graph: Graph, particles: usize, requested_top: usize, cubes: Vec<Vec<Cube>>) -> Self {
        let index = cubes
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect())
            .collect();
        CubeComplex { graph, particles, requested_top, cubes, index }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    /// Highest dimension with a cube (0 for an empty complex).
    pub fn dim(&self) -> usize {
        self.cubes.iter().rposition(|l| !l.is_empty()).unwrap_or(0)
    }

    /// Whether cubes were built up to dimension `d` (or to the top).
    pub fn has_dimension(&self, d: usize) -> bool {
        self.requested_top >= d.min(self.particles)
    }

    /// Number of levels built (top dimension + 1 unless truncated).
    pub fn levels(&self) -> usize {
        self.cubes.len()
    }

    pub fn count(&self, d: usize) -> usize {
        self.cubes.get(d).map_or(0, Vec::len)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.dim();
        (0..=top).map(|d| self.count(d)).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.cubes.iter().map(Vec::len).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cubes.iter().enumerate().map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) }).sum()
    }

    pub fn cubes(&self, d: usize) -> &[Cube] {
        self.cubes.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn cube(&self, d: usize, i: usize) -> &Cube {
        &self.cubes[d][i]
    }

    pub fn find(&self, cube: &Cube) -> Option<usize> {
        self.index.get(cube.dim())?.get(cube).copied()
    }

    pub fn vertex(&self, i: usize) -> Configuration {
        Configuration(self.cubes[0][i].stationary.clone())
    }

    pub fn find_vertex(&self, c: &Configuration) -> Option<usize> {
        self.find(&Cube { moving: Vec::new(), stationary: c.0.clone() })
    }

    /// 0-cube indices of the lower and upper facets of a 1-cube.
    pub fn edge_endpoints(&self, i: usize) -> Option<(usize, usize)> {
        let c = &self.cubes[1][i];
        let lo = self.find(&c.facet(&self.graph, 0, false))?;
        let hi = self.find(&c.facet(&self.graph, 0, true))?;
        Some((lo, hi))
    }

    /// Steps leaving a 0-cube, ordered by moving particle and then by edge.
    pub fn steps(&self, v: usize) -> Vec<Step> {
        let config = self.vertex(v);
        let mut out = Vec::new();
        if self.cubes.len() < 2 {
            return out;
        }
        for &s in config.vertices() {
            let rest = config.without(s);
            for (e, w) in self.graph.neighbors(s) {
                if config.contains(w) {
                    continue;
                }
                let cube = Cube { moving: vec![e], stationary: rest.0.clone() };
                if let Some(ci) = self.find(&cube) {
                    if let Some(target) = self.find_vertex(&config.moved(s, w)) {
                        out.push(Step { cube: ci, edge: e, from_vertex: s, to_vertex: w, target });
                    }
                }
            }
        }
        out
    }

    /// Connected components of the 1-skeleton, as labels on 0-cubes.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let nv = self.count(0);
        let mut uf = crate::util::UnionFind::new(nv);
        for i in 0..self.count(1) {
            if let Some((a, b)) = self.edge_endpoints(i) {
                uf.union(a, b);
            }
        }
        uf.labels()
    }

    /// The same complex with one cube removed. Used to build deliberately
    /// broken complexes for the checkers.
    pub fn without_cube(&self, d: usize, i: usize) -> CubeComplex {
        let mut cubes = self.cubes.clone();
        cubes[d].remove(i);
        CubeComplex::from_cubes(self.graph.clone(), self.particles, self.requested_top, cubes)
    }

    /// The cube spanned at `v` by the given steps, if it exists.
    pub fn span(&self, v: usize, steps: &[Step]) -> Option<usize> {
        let config = self.vertex(v);
        let mut moving: Vec<usize> = steps.iter().map(|s| s.edge).collect();
        moving.sort_unstable();
        let stationary: Vec<usize> = config
            .vertices()
            .iter()
            .copied()
            .filter(|x| !steps.iter().any(|s| s.from_vertex == *x))
            .collect();
        if stationary.len() + steps.len() != config.len() {
            return None;
        }
        let cube = Cube { moving, stationary };
        self.find(&cube)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NpcViolation {
    /// A face of a cube is missing from the complex.
    MissingFace { cube: String, face: String },
    /// A clique in a vertex link that does not span a cube.
    EmptySimplex { vertex: String, moves: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NpcReport {
    pub passed: bool,
    pub vertices_checked: usize,
    pub cubes_checked: usize,
    pub violation: Option<NpcViolation>,
}

/// Gromov's link condition: cubes are closed under faces and every vertex
/// link is a flag complex.
pub fn check_npc(x: &CubeComplex) -> NpcReport {
    let g = x.graph();
    let mut cubes_checked = 0;
    for d in 1..x.levels() {
        for c in x.cubes(d) {
            cubes_checked += 1;
            for i in 0..d {
                for upper in [false, true] {
                    let f = c.facet(g, i, upper);
                    if x.find(&f).is_none() {
                        return NpcReport {
                            passed: false,
                            vertices_checked: 0,
                            cubes_checked,
                            violation: Some(NpcViolation::MissingFace { cube: c.display(g), face: f.display(g) }),
                        };
                    }
                }
            }
        }
    }
    for v in 0..x.count(0) {
        let steps = x.steps(v);
        let k = steps.len();
        let adj: Vec<Vec<bool>> = (0..k)
            .map(|i| (0..k).map(|j| i != j && x.span(v, &[steps[i], steps[j]]).is_some()).collect())
            .collect();
        let mut clique = Vec::new();
        if let Some(bad) = find_empty_simplex(x, v, &steps, &adj, 0, &mut clique) {
            return NpcReport {
                passed: false,
                vertices_checked: v + 1,
                cubes_checked,
                violation: Some(NpcViolation::EmptySimplex {
                    vertex: x.vertex(v).display(g),
                    moves: bad
                        .iter()
                        .map(|&i| {
                            let s = steps[i];
                            format!("{}:{}->{}", g.edge(s.edge).name, g.name(s.from_vertex), g.name(s.to_vertex))
                        })
                        .collect(),
                }),
            };
        }
    }
    NpcReport { passed: true, vertices_checked: x.count(0), cubes_checked, violation: None }
}

fn find_empty_simplex(
    x: &CubeComplex,
    v: usize,
    steps: &[Step],
    adj: &[Vec<bool>],
    start: usize,
    clique: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if clique.len() >= 3 {
        let chosen: Vec<Step> = clique.iter().map(|&i| steps[i]).collect();
        if x.span(v, &chosen).is_none() {
            return Some(clique.clone());
        }
    }
    for i in start..steps.len() {
        if clique.iter().all(|&j| adj[i][j]) {
            clique.push(i);
            if let Some(b) = find_empty_simplex(x, v, steps, adj, i + 1, clique) {
                return Some(b);
            }
            clique.pop();
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub is_surface: bool,
    /// Length of each vertex link when it is a single cycle.
    pub link_cycle_lengths: Vec<Option<usize>>,
}

/// For two particles: whether every vertex link is a single cycle, i.e. the
/// complex is a closed surface.
pub fn is_surface(x: &CubeComplex) -> Result<SurfaceReport> {
    if x.particles() != 2 {
        return Err(Error::precondition("surface check is for two particles"));
    }
    let mut lengths = Vec::with_capacity(x.count(0));
    for v in 0..x.count(0) {
        let steps = x.steps(v);
        let k = steps.len();
        let adj: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..k).filter(|&j| i != j && x.span(v, &[steps[i], steps[j]]).is_some()).collect())
            .collect();
        let is_cycle = k >= 3 && adj.iter().all(|n| n.len() == 2) && {
            let mut seen = vec![false; k];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(i) = stack.pop() {
                for &j in &adj[i] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        lengths.push(is_cycle.then_some(k));
    }
    let is_surface = x.count(0) > 0 && lengths.iter().all(Option::is_some);
    Ok(SurfaceReport { is_surface, link_cycle_lengths: lengths })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn uc(g: &Graph, n: usize) -> CubeComplex {
        build(g, n, None, &Limits::default()).unwrap()
    }

    #[test]
    fn k5_two_particles() {
        let x = uc(&families::complete(5), 2);
        assert_eq!(x.f_vector(), vec![10, 30, 15]);
        assert_eq!(x.euler_characteristic(), -5);
        let s = is_surface(&x).unwrap();
        assert!(s.is_surface);
        assert!(s.link_cycle_lengths.iter().all(|&l| l == Some(6)));
        assert!(check_npc(&x).passed);
    }

    #[test]
    fn cycle_four_two_particles() {
        let x = uc(&families::cycle(4), 2);
        assert_eq!(x.f_vector(), vec![6, 8, 2]);
        assert_eq!(x.components().1, 1);
    }

    #[test]
    fn cap_triggers() {
        let limits = Limits { max_cells: 5, ..Limits::default() };
        assert!(matches!(
            build(&families::complete(5), 2, None, &limits),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn removing_a_cube_breaks_npc() {
        let x = uc(&families::complete(6), 3);
        assert!(check_npc(&x).passed);
        let broken = x.without_cube(3, 0);
        let r = check_npc(&broken);
        assert!(!r.passed);
        assert!(matches!(r.violation, Some(NpcViolation::EmptySimplex { .. })));
        let broken = x.without_cube(1, 0);
        assert!(matches!(check_npc(&broken).violation, Some(NpcViolation::MissingFace { .. })));
    }

    #[test]
    fn configuration_moves() {
        let c = Configuration::new(vec![3, 1]).unwrap();
        assert_eq!(c.vertices(), &[1, 3]);
        assert_eq!(c.moved(1, 4).vertices(), &[3, 4]);
        assert!(Configuration::new(vec![1, 1]).is_err());
    }
}
