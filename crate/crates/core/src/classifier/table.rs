use std::ops::RangeInclusive;

use serde::Serialize;

use super::{acyl_hyp_status, is_hyperbolic, is_infinite_cyclic, is_toral_rel_hyp, is_trivial, AcylStatus, ParticleAssignment};
use crate::error::{Error, Result};
use crate::graph::{families, Graph};
use crate::limits::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// K_m for 2 ≤ m ≤ max.
    Complete,
    /// K_{p,q} for 1 ≤ p ≤ q ≤ max.
    CompleteBipartite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub graph: String,
    /// (m) for K_m, (p, q) for K_{p,q}.
    pub parameters: Vec<usize>,
    pub particles: usize,
    pub trivial: bool,
    pub infinite_cyclic: bool,
    pub hyperbolic: bool,
    pub toral_rel_hyp: bool,
    pub acyl_hyp_status: AcylStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub schema_version: u32,
    pub family: Family,
    pub rows: Vec<TableRow>,
}

pub fn family_members(family: Family, max: usize) -> Vec<(String, Vec<usize>, Graph)> {
    match family {
        Family::Complete => (2..=max).map(|m| (format!("K{m}"), vec![m], families::complete(m))).collect(),
        Family::CompleteBipartite => (1..=max)
            .flat_map(|p| (p..=max).map(move |q| (p, q)))
            .map(|(p, q)| (format!("K{p},{q}"), vec![p, q], families::complete_bipartite(p, q)))
            .collect(),
    }
}

pub fn classify_row(g: &Graph, n: usize, limits: &Limits) -> Result<(bool, bool, bool, bool, AcylStatus)> {
    Ok((
        is_trivial(g, &ParticleAssignment { counts: vec![n] })?.holds,
        is_infinite_cyclic(g, n)?.holds,
        is_hyperbolic(g, n, limits)?.holds,
        is_toral_rel_hyp(g, n, limits)?.holds,
        acyl_hyp_status(g, n)?,
    ))
}

/// Classification grid over a built-in family, ordered by graph then particle count.
pub fn table(family: Family, max: usize, particles: RangeInclusive<usize>, limits: &Limits) -> Result<Table> {
    if *particles.start() == 0 {
        return Err(Error::precondition("particle counts start at 1"));
    }
    let mut rows = Vec::new();
    for (name, parameters, g) in family_members(family, max) {
        for n in particles.clone() {
            let (trivial, infinite_cyclic, hyperbolic, toral_rel_hyp, acyl) = classify_row(&g, n, limits)?;
            rows.push(TableRow {
                graph: name.clone(),
                parameters: parameters.clone(),
                particles: n,
                trivial,
                infinite_cyclic,
                hyperbolic,
                toral_rel_hyp,
                acyl_hyp_status: acyl,
            });
        }
    }
    Ok(Table { schema_version: super::SCHEMA_VERSION, family, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complete_grid() {
        let t = table(Family::Complete, 4, 1..=2, &Limits::default()).unwrap();
        assert_eq!(t.rows.len(), 6);
        assert!(t.rows.iter().all(|r| r.hyperbolic && r.toral_rel_hyp));
        assert!(t.rows[0].trivial);
    }

    #[test]
    fn bipartite_members_are_ordered() {
        let names: Vec<String> = family_members(Family::CompleteBipartite, 2).into_iter().map(|m| m.0).collect();
        assert_eq!(names, ["K1,1", "K1,2", "K2,2"]);
    }
}
