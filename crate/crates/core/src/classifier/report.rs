use serde::Serialize;

use super::oracle::{oracle_f2xz, oracle_nonhyperbolic, OracleWitness};
use super::{
    acyl_hyp_status, component_graphs, contains_free_nonabelian, free_certificate, hyperbolic_by_conditions,
    is_hyperbolic, is_infinite_cyclic, is_toral_rel_hyp, is_trivial, AcylStatus, FreeCertificate,
    ParticleAssignment, Verdict,
};
use crate::config_space::{build, check_npc, is_surface, CubeComplex};
use crate::diagrams::{find_tripod, DiagramGroupoid, Diagram};
use crate::error::{Error, Result};
use crate::graph::{canonical_signature, classify_shape, girth_cycle, subdivide_for, Graph};
use crate::homology::{complex_homology, HomologySummary};
use crate::hyperplanes::{hyperplanes_by_bfs, verify_special_coloring};
use crate::limits::Limits;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub fingerprint: String,
    pub vertices: usize,
    pub edges: usize,
    pub first_betti: usize,
    /// Shape of each connected component.
    pub shapes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AssignmentReport {
    pub counts: Vec<usize>,
    pub trivial: Verdict,
    pub infinite_cyclic: Verdict,
    pub free_certificate: FreeCertificate,
    pub hyperbolic: Verdict,
    pub hyperbolic_by_conditions: Verdict,
    pub toral_rel_hyp: Verdict,
    pub acyl_hyp_status: AcylStatus,
    pub contains_f2: Verdict,
    pub contains_f2xz: Verdict,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OracleStatus {
    Agree { oracle_found: bool, witness: Option<OracleWitness> },
    Disagree { oracle_found: bool, witness: Option<OracleWitness> },
    Skipped { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleAgreement {
    pub nonhyperbolic: OracleStatus,
    pub f2xz: OracleStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessElement {
    pub kind: String,
    pub base: String,
    pub word: String,
    pub length: usize,
    pub support_connected: bool,
    pub particles_in_support: usize,
    pub cyclic_centralizer: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexStats {
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
    pub components: usize,
    pub npc: bool,
    pub hyperplanes: Option<usize>,
    pub special_coloring: Option<bool>,
    pub surface: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Section<T> {
    Computed(T),
    Skipped { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub graph: GraphSummary,
    pub particles: usize,
    pub assignments: Vec<AssignmentReport>,
    /// Only for connected graphs.
    pub oracle: Option<OracleAgreement>,
    /// An element with cyclic centralizer, for acylindrically hyperbolic cases.
    pub witness_element: Option<WitnessElement>,
    pub complex: Section<ComplexStats>,
    pub homology: Section<HomologySummary>,
    pub consistency_violations: Vec<String>,
}

/// FNV-1a over the name-level signature.
fn fingerprint(g: &Graph) -> String {
    let (vs, es) = canonical_signature(g);
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |s: &str| {
        for b in s.bytes().chain([0u8]) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    for v in &vs {
        feed(v);
    }
    for (a, b) in &es {
        feed(a);
        feed(b);
    }
    format!("{h:016x}")
}

struct Factor {
    trivial: bool,
    cyclic: Verdict,
    hyperbolic: Verdict,
    by_conditions: Verdict,
    toral: Verdict,
    acyl: AcylStatus,
    free: FreeCertificate,
    f2: bool,
}

fn factor(c: &Graph, k: usize, limits: &Limits) -> Result<Factor> {
    let one = ParticleAssignment { counts: vec![k] };
    Ok(Factor {
        trivial: is_trivial(c, &one)?.holds,
        cyclic: is_infinite_cyclic(c, k)?,
        hyperbolic: is_hyperbolic(c, k, limits)?,
        by_conditions: hyperbolic_by_conditions(c, k, limits)?,
        toral: is_toral_rel_hyp(c, k, limits)?,
        acyl: acyl_hyp_status(c, k)?,
        free: free_certificate(c, k, limits)?,
        f2: contains_free_nonabelian(c, &one)?.holds,
    })
}

fn assignment_report(g: &Graph, comps: &[Graph], a: &ParticleAssignment, limits: &Limits) -> Result<AssignmentReport> {
    let mut factors = Vec::new();
    for (c, &k) in comps.iter().zip(&a.counts) {
        if k > 0 {
            factors.push(factor(c, k, limits)?);
        }
    }
    let nontrivial: Vec<&Factor> = factors.iter().filter(|f| !f.trivial).collect();
    let trivial = is_trivial(g, a)?;
    let contains_f2 = contains_free_nonabelian(g, a)?;
    let product = nontrivial.len() >= 2;
    let (hyperbolic, hyperbolic_by_conditions, infinite_cyclic, free_certificate, acyl) = match nontrivial.as_slice() {
        [] => (
            Verdict::yes("trivial group"),
            Verdict::yes("trivial group"),
            Verdict::no("trivial group"),
            FreeCertificate::Free { reason: "trivial group".into() },
            AcylStatus::Trivial,
        ),
        [f] => (
            f.hyperbolic.clone(),
            f.by_conditions.clone(),
            f.cyclic.clone(),
            f.free.clone(),
            f.acyl,
        ),
        _ => {
            let why = format!("direct product of {} nontrivial factors", nontrivial.len());
            (
                Verdict::no(why.clone()),
                Verdict::no(why.clone()),
                Verdict::no(why.clone()),
                FreeCertificate::Unknown { reason: why },
                AcylStatus::NotAcylindricallyHyperbolic,
            )
        }
    };
    let contains_f2xz = if let [f] = nontrivial.as_slice() {
        Verdict { holds: !f.toral.holds, witness: f.toral.witness.clone() }
    } else if let Some(f) = nontrivial.iter().find(|f| !f.toral.holds) {
        Verdict::yes(f.toral.witness.clone().unwrap_or_default())
    } else if product && nontrivial.iter().any(|f| f.f2) {
        Verdict::yes("a factor contains F2 and another factor is nontrivial")
    } else {
        Verdict::no("no factor contains F2 x Z and no F2 factor has a nontrivial partner")
    };
    let toral_rel_hyp = Verdict { holds: !contains_f2xz.holds, witness: contains_f2xz.witness.clone() };
    Ok(AssignmentReport {
        counts: a.counts.clone(),
        trivial,
        infinite_cyclic,
        free_certificate,
        hyperbolic,
        hyperbolic_by_conditions,
        toral_rel_hyp,
        acyl_hyp_status: acyl,
        contains_f2,
        contains_f2xz,
    })
}

fn flag<T>(r: Result<T>) -> Result<Section<T>> {
    match r {
        Ok(v) => Ok(Section::Computed(v)),
        Err(e @ Error::ResourceLimit { .. }) => Ok(Section::Skipped { reason: e.to_string() }),
        Err(e) => Err(e),
    }
}

fn oracle_status(predicate_says_found: bool, r: Result<super::oracle::OracleResult>) -> Result<OracleStatus> {
    match r {
        Ok(o) if o.found == predicate_says_found => Ok(OracleStatus::Agree { oracle_found: o.found, witness: o.witness }),
        Ok(o) => Ok(OracleStatus::Disagree { oracle_found: o.found, witness: o.witness }),
        Err(e @ Error::ResourceLimit { .. }) => Ok(OracleStatus::Skipped { reason: e.to_string() }),
        Err(e) => Err(e),
    }
}

fn complex_stats(x: &CubeComplex) -> Result<ComplexStats> {
    let n = x.particles();
    let (hyperplanes, special_coloring) = if n >= 2 && x.dim() >= 2 {
        (Some(hyperplanes_by_bfs(x)?.len()), Some(verify_special_coloring(x)?.passed))
    } else {
        (None, None)
    };
    Ok(ComplexStats {
        f_vector: x.f_vector(),
        euler_characteristic: x.euler_characteristic(),
        components: x.components().1,
        npc: check_npc(x).passed,
        hyperplanes,
        special_coloring,
        surface: if n == 2 { Some(is_surface(x)?.is_surface) } else { None },
    })
}

fn witness_element(s: &Graph, n: usize) -> Result<Option<WitnessElement>> {
    let dg = DiagramGroupoid::new(s, n)?;
    let (kind, d): (&str, Diagram) = if let Some(c) = girth_cycle(s).filter(|c| c.len() > n) {
        let base = crate::config_space::Configuration::new(c.vertices[..n].to_vec())?;
        ("rotation", dg.make_rotation(&c, &base)?)
    } else if let Some(t) = find_tripod(s, n) {
        ("tripod_swap", dg.make_tripod_swap(&t)?)
    } else {
        return Ok(None);
    };
    let support = dg.cyclically_reduce(&d)?;
    let view = dg.support_view(&support);
    Ok(Some(WitnessElement {
        kind: kind.to_string(),
        base: d.base.display(s),
        word: dg.format_word(&d.letters),
        length: d.len(),
        support_connected: view.support_connected,
        particles_in_support: view.particles_in_support,
        cyclic_centralizer: dg.cyclic_centralizer_witness(&d)?,
    }))
}

fn consistency(r: &ClassificationReport) -> Vec<String> {
    let mut out = Vec::new();
    for a in &r.assignments {
        let tag = format!("{:?}", a.counts);
        if a.trivial.holds
            && (a.infinite_cyclic.holds || a.contains_f2.holds || a.contains_f2xz.holds || !a.hyperbolic.holds)
        {
            out.push(format!("{tag}: trivial group with a nontrivial property"));
        }
        if a.hyperbolic.holds && !a.toral_rel_hyp.holds {
            out.push(format!("{tag}: hyperbolic but not toral relatively hyperbolic"));
        }
        if a.toral_rel_hyp.holds == a.contains_f2xz.holds {
            out.push(format!("{tag}: toral relative hyperbolicity does not exclude F2 x Z"));
        }
        if a.infinite_cyclic.holds && (a.contains_f2.holds || !a.hyperbolic.holds) {
            out.push(format!("{tag}: infinite cyclic group that contains F2 or is not hyperbolic"));
        }
        if a.hyperbolic.holds != a.hyperbolic_by_conditions.holds {
            out.push(format!("{tag}: the two hyperbolicity criteria disagree"));
        }
        if r.assignments.len() == 1 && (a.acyl_hyp_status == AcylStatus::AcylindricallyHyperbolic) != a.contains_f2.holds {
            out.push(format!("{tag}: acylindrical hyperbolicity does not match containing F2"));
        }
        if let (FreeCertificate::Free { .. }, Section::Computed(h)) = (&a.free_certificate, &r.homology) {
            if r.assignments.len() == 1 && h.groups.iter().any(|g| !g.torsion.is_empty()) {
                out.push(format!("{tag}: free certificate but homology has torsion"));
            }
        }
    }
    if let Some(o) = &r.oracle {
        for (name, s) in [("nonhyperbolic", &o.nonhyperbolic), ("F2 x Z", &o.f2xz)] {
            if matches!(s, OracleStatus::Disagree { .. }) {
                out.push(format!("{name} oracle disagrees with the predicate"));
            }
        }
    }
    if let Some(w) = &r.witness_element {
        if !w.cyclic_centralizer {
            out.push("witness element fails the cyclic centralizer test".into());
        }
    }
    out
}

/// Every verdict for `n` particles, per particle assignment when the graph is
/// disconnected, with oracle cross-checks and complex statistics where the
/// limits allow.
pub fn full_report(g: &Graph, n: usize, limits: &Limits) -> Result<ClassificationReport> {
    if g.vertex_count() == 0 {
        return Err(Error::precondition("empty graph"));
    }
    if !g.is_simple() {
        return Err(Error::precondition("normalize the graph first"));
    }
    let comps = component_graphs(g);
    let assignments = ParticleAssignment::enumerate(comps.len(), n)
        .iter()
        .map(|a| assignment_report(g, &comps, a, limits))
        .collect::<Result<Vec<_>>>()?;
    let connected = comps.len() == 1;
    let oracle = if connected {
        let a = &assignments[0];
        Some(OracleAgreement {
            nonhyperbolic: oracle_status(!a.hyperbolic.holds, oracle_nonhyperbolic(g, n, limits))?,
            f2xz: oracle_status(a.contains_f2xz.holds, oracle_f2xz(g, n, limits))?,
        })
    } else {
        None
    };
    let s = subdivide_for(g, n);
    let witness = if connected && n >= 1 && assignments[0].acyl_hyp_status == AcylStatus::AcylindricallyHyperbolic {
        witness_element(&s, n)?
    } else {
        None
    };
    let built = flag(build(&s, n, None, limits))?;
    let (complex, homology) = match &built {
        Section::Computed(x) => (flag(complex_stats(x))?, flag(complex_homology(x, limits))?),
        Section::Skipped { reason } => {
            (Section::Skipped { reason: reason.clone() }, Section::Skipped { reason: reason.clone() })
        }
    };
    let mut report = ClassificationReport {
        schema_version: SCHEMA_VERSION,
        graph: GraphSummary {
            fingerprint: fingerprint(g),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            first_betti: g.first_betti(),
            shapes: comps.iter().map(|c| classify_shape(c).name().to_string()).collect(),
        },
        particles: n,
        assignments,
        oracle,
        witness_element: witness,
        complex,
        homology,
        consistency_violations: Vec::new(),
    };
    report.consistency_violations = consistency(&report);
    Ok(report)
}
