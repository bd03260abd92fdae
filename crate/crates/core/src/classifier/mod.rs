//! Group-theoretic properties of graph braid groups decided from the graph.
//!
//! Fast predicates read the answer off cycles, essential vertices and the
//! shape of the graph; [`oracle`] recomputes the non-hyperbolicity and
//! F₂×ℤ questions by searching for pairs of disjoint subgraphs carrying
//! independent particle motions.

mod assignment;
pub mod oracle;
mod peripheral;
mod report;
pub mod table;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{classify_shape, simple_cycles, subdivide_for, Cycle, Graph, Shape};
use crate::limits::Limits;

pub use assignment::{component_graphs, ParticleAssignment};
pub use peripheral::{check_peripheral_collection, parse_collection, ConditionResult, PeripheralCollection, PeripheralReport};
pub use report::{
    full_report, AssignmentReport, ClassificationReport, ComplexStats, GraphSummary, OracleAgreement, OracleStatus, Section,
    WitnessElement, SCHEMA_VERSION,
};

/// A yes/no answer with an explanation of what decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn yes(witness: impl Into<String>) -> Self {
        Verdict { holds: true, witness: Some(witness.into()) }
    }

    pub fn no(witness: impl Into<String>) -> Self {
        Verdict { holds: false, witness: Some(witness.into()) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AcylStatus {
    Trivial,
    InfiniteCyclic,
    AcylindricallyHyperbolic,
    /// A direct product of at least two nontrivial braid groups.
    NotAcylindricallyHyperbolic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FreeCertificate {
    Free { reason: String },
    /// No criterion applies; this is never a claim of non-freeness.
    Unknown { reason: String },
}

impl FreeCertificate {
    pub fn is_free(&self) -> bool {
        matches!(self, FreeCertificate::Free { .. })
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::precondition("this predicate needs a connected nonempty graph"));
    }
    Ok(())
}

fn names(g: &Graph, vs: impl IntoIterator<Item = usize>) -> String {
    let v: Vec<&str> = vs.into_iter().map(|v| g.name(v)).collect();
    format!("[{}]", v.join(" "))
}

/// The subdivided graph on which cycle-based predicates are evaluated,
/// with its simple cycles.
pub struct Prepared {
    pub graph: Graph,
    pub cycles: Vec<Cycle>,
    masks: Vec<Vec<u64>>,
}

impl Prepared {
    pub fn new(g: &Graph, n: usize, limits: &Limits) -> Result<Self> {
        let graph = subdivide_for(g, n.max(3));
        let cycles = simple_cycles(&graph, limits.max_cycles)?;
        let words = graph.vertex_count().div_ceil(64);
        let masks = cycles
            .iter()
            .map(|c| {
                let mut m = vec![0u64; words];
                for &v in &c.vertices {
                    m[v / 64] |= 1 << (v % 64);
                }
                m
            })
            .collect();
        Ok(Prepared { graph, cycles, masks })
    }

    fn disjoint(&self, i: usize, j: usize) -> bool {
        self.masks[i].iter().zip(&self.masks[j]).all(|(a, b)| a & b == 0)
    }

    fn first_disjoint_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.cycles.len() {
            for j in i + 1..self.cycles.len() {
                if self.disjoint(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn cycle_names(&self, i: usize) -> String {
        names(&self.graph, self.cycles[i].vertices.iter().copied())
    }

    /// Components of the graph minus a vertex set, as vertex lists.
    fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let g = &self.graph;
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in g.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for (_, w) in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn component_betti(&self, comp: &[usize]) -> usize {
        let g = &self.graph;
        let mut inside = vec![false; g.vertex_count()];
        for &v in comp {
            inside[v] = true;
        }
        let edges = g.edges().iter().filter(|e| inside[e.a] && inside[e.b]).count();
        edges + 1 - comp.len()
    }

    fn removed_mask(&self, vs: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.graph.vertex_count()];
        for &v in vs {
            m[v] = true;
        }
        m
    }
}

/// Trivial iff every component holding one particle is a tree and every
/// component holding two or more is a segment.
pub fn is_trivial(g: &Graph, assignment: &ParticleAssignment) -> Result<Verdict> {
    let comps = component_graphs(g);
    assignment.check(comps.len())?;
    for (c, &k) in comps.iter().zip(&assignment.counts) {
        let bad = match k {
            0 => false,
            1 => c.first_betti() > 0,
            _ => classify_shape(c) != Shape::Segment,
        };
        if bad {
            let vs: Vec<String> = c.vertices().map(|v| c.name(v).to_string()).collect();
            return Ok(Verdict::no(format!("component [{}] with {k} particle(s)", vs.join(" "))));
        }
    }
    Ok(Verdict::yes("every occupied component is a tree (one particle) or a segment"))
}

/// Infinite cyclic: one particle on a graph with b₁ = 1, two particles on a
/// cycle or a star with three arms, three or more particles on a cycle.
pub fn is_infinite_cyclic(g: &Graph, n: usize) -> Result<Verdict> {
    require_connected(g)?;
    let shape = classify_shape(g);
    let holds = match n {
        0 => false,
        1 => g.first_betti() == 1,
        2 => matches!(shape, Shape::Cycle | Shape::Star { arms: 3, .. }),
        _ => shape == Shape::Cycle,
    };
    let why = if n == 1 { format!("first Betti number {}", g.first_betti()) } else { format!("shape {}", shape.name()) };
    Ok(Verdict { holds, witness: Some(why) })
}

/// Hyperbolicity by the shape classification.
pub fn is_hyperbolic(g: &Graph, n: usize, limits: &Limits) -> Result<Verdict> {
    require_connected(g)?;
    let shape = classify_shape(g);
    match n {
        0 | 1 => Ok(Verdict::yes("free group")),
        2 => {
            let p = Prepared::new(g, n, limits)?;
            Ok(match p.first_disjoint_pair() {
                Some((i, j)) => Verdict::no(format!("disjoint cycles {} and {}", p.cycle_names(i), p.cycle_names(j))),
                None => Verdict::yes("no two disjoint cycles"),
            })
        }
        3 => {
            let ok = shape.is_tree() || shape.is_sun_like() || shape.is_rose_like() || shape.is_pulsar_like();
            Ok(Verdict { holds: ok, witness: Some(format!("shape {}", shape.name())) })
        }
        _ => Ok(Verdict { holds: shape.is_rose_like(), witness: Some(format!("shape {}", shape.name())) }),
    }
}

/// Hyperbolicity through the intermediate conditions: no disjoint cycles
/// (n ≥ 2), no essential vertex off a cycle (n ≥ 3), at most one essential
/// vertex (n ≥ 4).
pub fn hyperbolic_by_conditions(g: &Graph, n: usize, limits: &Limits) -> Result<Verdict> {
    require_connected(g)?;
    if n <= 1 {
        return Ok(Verdict::yes("free group"));
    }
    let p = Prepared::new(g, n, limits)?;
    if let Some((i, j)) = p.first_disjoint_pair() {
        return Ok(Verdict::no(format!("disjoint cycles {} and {}", p.cycle_names(i), p.cycle_names(j))));
    }
    let sg = &p.graph;
    if n >= 3 {
        for v in sg.essential_vertices() {
            if let Some(i) = (0..p.cycles.len()).find(|&i| !p.cycles[i].contains_vertex(v)) {
                return Ok(Verdict::no(format!("essential vertex {} off cycle {}", sg.name(v), p.cycle_names(i))));
            }
        }
    }
    if n >= 4 {
        let ess = sg.essential_vertices();
        if ess.len() >= 2 {
            return Ok(Verdict::no(format!("essential vertices {} and {}", sg.name(ess[0]), sg.name(ess[1]))));
        }
    }
    Ok(Verdict::yes("no obstruction"))
}

/// Toral relative hyperbolicity, i.e. absence of F₂×ℤ.
pub fn is_toral_rel_hyp(g: &Graph, n: usize, limits: &Limits) -> Result<Verdict> {
    require_connected(g)?;
    let shape = classify_shape(g);
    match n {
        0 | 1 => Ok(Verdict::yes("free group")),
        2 => {
            let p = Prepared::new(g, n, limits)?;
            Ok(match obstruction_a(&p) {
                Some(w) => Verdict::no(w),
                None => Verdict::yes("no cycle is disjoint from a subgraph with two independent cycles"),
            })
        }
        3 => {
            let p = Prepared::new(g, n, limits)?;
            let found = obstruction_a(&p)
                .or_else(|| obstruction_bce(&p))
                .or_else(|| obstruction_d(&p));
            Ok(match found {
                Some(w) => Verdict::no(w),
                None => Verdict::yes("none of the five obstructions occurs"),
            })
        }
        4 => {
            let ok = shape.is_rose_like()
                || matches!(shape, Shape::HGraph { .. } | Shape::CycleWithTwoRays { .. } | Shape::Theta { .. });
            Ok(Verdict { holds: ok, witness: Some(format!("shape {}", shape.name())) })
        }
        _ => Ok(Verdict { holds: shape.is_rose_like(), witness: Some(format!("shape {}", shape.name())) }),
    }
}

/// (a) a cycle C with a component of Γ − C of first Betti number at least 2.
fn obstruction_a(p: &Prepared) -> Option<String> {
    for (i, c) in p.cycles.iter().enumerate() {
        let removed = p.removed_mask(&c.vertices);
        for comp in p.components_avoiding(&removed) {
            if p.component_betti(&comp) >= 2 {
                return Some(format!(
                    "(a) cycle {} misses the component {} of first Betti number {}",
                    p.cycle_names(i),
                    names(&p.graph, comp.iter().copied()),
                    p.component_betti(&comp)
                ));
            }
        }
    }
    None
}

/// (b) a vertex of degree ≥ 4 off a cycle; (c) a component of Γ − C holding
/// two essential vertices; (e) a component of Γ − C holding a cycle through
/// an essential vertex.
fn obstruction_bce(p: &Prepared) -> Option<String> {
    let g = &p.graph;
    for (i, c) in p.cycles.iter().enumerate() {
        for v in g.vertices() {
            if g.degree(v) >= 4 && !c.contains_vertex(v) {
                return Some(format!("(b) vertex {} of degree {} is off cycle {}", g.name(v), g.degree(v), p.cycle_names(i)));
            }
        }
        let removed = p.removed_mask(&c.vertices);
        for comp in p.components_avoiding(&removed) {
            let ess: Vec<usize> = comp.iter().copied().filter(|&v| g.is_essential(v)).collect();
            if ess.len() >= 2 {
                return Some(format!(
                    "(c) essential vertices {} and {} lie in one component off cycle {}",
                    g.name(ess[0]),
                    g.name(ess[1]),
                    p.cycle_names(i)
                ));
            }
        }
        for j in 0..p.cycles.len() {
            if j != i && p.disjoint(i, j) {
                if let Some(&w) = p.cycles[j].vertices.iter().find(|&&w| g.is_essential(w)) {
                    return Some(format!(
                        "(e) cycle {} through essential vertex {} is disjoint from cycle {}",
                        p.cycle_names(j),
                        g.name(w),
                        p.cycle_names(i)
                    ));
                }
            }
        }
    }
    None
}

/// (d) an essential vertex v with a component of Γ − v of first Betti number at least 2.
fn obstruction_d(p: &Prepared) -> Option<String> {
    let g = &p.graph;
    for v in g.essential_vertices() {
        let removed = p.removed_mask(&[v]);
        for comp in p.components_avoiding(&removed) {
            if p.component_betti(&comp) >= 2 {
                return Some(format!(
                    "(d) essential vertex {} misses the component {} of first Betti number {}",
                    g.name(v),
                    names(g, comp.iter().copied()),
                    p.component_betti(&comp)
                ));
            }
        }
    }
    None
}

/// Trivial, infinite cyclic, or acylindrically hyperbolic.
pub fn acyl_hyp_status(g: &Graph, n: usize) -> Result<AcylStatus> {
    require_connected(g)?;
    if is_trivial(g, &ParticleAssignment { counts: vec![n] })?.holds {
        return Ok(AcylStatus::Trivial);
    }
    if is_infinite_cyclic(g, n)?.holds {
        return Ok(AcylStatus::InfiniteCyclic);
    }
    Ok(AcylStatus::AcylindricallyHyperbolic)
}

/// Sufficient conditions for freeness; never reports "not free".
pub fn free_certificate(g: &Graph, n: usize, limits: &Limits) -> Result<FreeCertificate> {
    require_connected(g)?;
    let shape = classify_shape(g);
    if n <= 1 {
        return Ok(FreeCertificate::Free { reason: "fundamental group of a graph".into() });
    }
    if shape.is_rose_like() {
        return Ok(FreeCertificate::Free { reason: format!("{} with at most one essential vertex", shape.name()) });
    }
    if n == 2 {
        let p = Prepared::new(g, n, limits)?;
        let on_all = p.graph.vertices().find(|&v| p.cycles.iter().all(|c| c.contains_vertex(v)));
        if let Some(v) = on_all {
            let reason = if p.cycles.is_empty() {
                "tree".to_string()
            } else {
                format!("vertex {} lies on every cycle", p.graph.name(v))
            };
            return Ok(FreeCertificate::Free { reason });
        }
    }
    Ok(FreeCertificate::Unknown { reason: "no freeness criterion applies".into() })
}

/// Contains a non-abelian free subgroup: some component with one particle has
/// two independent cycles, some component with two particles is not a
/// segment, cycle or three-armed star, or some component with three or more
/// particles is neither a segment nor a cycle.
pub fn contains_free_nonabelian(g: &Graph, assignment: &ParticleAssignment) -> Result<Verdict> {
    let comps = component_graphs(g);
    assignment.check(comps.len())?;
    for (c, &k) in comps.iter().zip(&assignment.counts) {
        let shape = classify_shape(c);
        let hit = match k {
            0 => false,
            1 => c.first_betti() >= 2,
            2 => !matches!(shape, Shape::Segment | Shape::Cycle | Shape::Star { arms: 3, .. }),
            _ => !matches!(shape, Shape::Segment | Shape::Cycle),
        };
        if hit {
            let vs: Vec<String> = c.vertices().map(|v| c.name(v).to_string()).collect();
            return Ok(Verdict::yes(format!(
                "component [{}] ({}) with {k} particle(s)",
                vs.join(" "),
                shape.name()
            )));
        }
    }
    Ok(Verdict::no("every occupied component has a free abelian braid group"))
}
