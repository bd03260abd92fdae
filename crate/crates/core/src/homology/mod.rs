//! Cellular chain complex of a cube complex and integral homology.

mod snf;

use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::config_space::CubeComplex;
use crate::error::{Error, Result};
use crate::limits::Limits;

pub use snf::invariant_factors;

/// Sparse integer matrix stored by columns; each column is sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = v;
            }
        }
        out
    }

    /// self * other, or `None` on overflow.
    pub fn mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        let mut cols = Vec::with_capacity(other.cols.len());
        for col in &other.cols {
            let mut acc: std::collections::BTreeMap<usize, i64> = Default::default();
            for &(k, b) in col {
                for &(i, a) in &self.cols[k] {
                    let e = acc.entry(i).or_default();
                    *e = e.checked_add(a.checked_mul(b)?)?;
                }
            }
            cols.push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
        }
        Some(SparseMatrix { rows: self.rows, cols })
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

/// Cellular chains: `boundaries[d]` maps d-chains to (d-1)-chains, `boundaries[0]` is empty.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<SparseMatrix>,
}

/// Boundary with moving edges in increasing order:
/// ∂ = Σ_i (-1)^i (F_i^b - F_i^a), with i counted from 0.
pub fn chain_complex(x: &CubeComplex) -> Result<ChainComplex> {
    if !x.has_dimension(x.particles()) {
        return Err(Error::precondition("homology needs the full complex"));
    }
    let g = x.graph();
    let top = x.dim();
    let ranks: Vec<usize> = (0..=top).map(|d| x.count(d)).collect();
    let mut boundaries = vec![SparseMatrix { rows: 0, cols: vec![Vec::new(); ranks[0]] }];
    for d in 1..=top {
        let mut cols = Vec::with_capacity(ranks[d]);
        for c in x.cubes(d) {
            let mut col = Vec::with_capacity(2 * d);
            for i in 0..d {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let lo = x.find(&c.facet(g, i, false)).ok_or_else(|| Error::precondition("missing face"))?;
                let hi = x.find(&c.facet(g, i, true)).ok_or_else(|| Error::precondition("missing face"))?;
                col.push((hi, sign));
                col.push((lo, -sign));
            }
            col.sort_unstable();
            cols.push(col);
        }
        boundaries.push(SparseMatrix { rows: ranks[d - 1], cols });
    }
    Ok(ChainComplex { ranks, boundaries })
}

impl ChainComplex {
    /// Checks ∂_{d-1} ∘ ∂_d = 0 for every d.
    pub fn boundary_squared_vanishes(&self) -> bool {
        (2..self.boundaries.len()).all(|d| {
            self.boundaries[d - 1].mul(&self.boundaries[d]).is_some_and(|m| m.is_zero())
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub dim: usize,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub groups: Vec<HomologyGroup>,
    pub euler_characteristic: i64,
}

impl HomologySummary {
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    pub fn group(&self, d: usize) -> Option<&HomologyGroup> {
        self.groups.get(d)
    }
}

pub fn homology(c: &ChainComplex, limits: &Limits) -> Result<HomologySummary> {
    let top = c.ranks.len().saturating_sub(1);
    let mut factors = vec![Vec::new(); top + 2];
    for (d, slot) in factors.iter_mut().enumerate().take(top + 1).skip(1) {
        *slot = invariant_factors(&c.boundaries[d], limits)?;
    }
    let rank = |d: usize| factors.get(d).map_or(0, Vec::len);
    let mut groups = Vec::new();
    for d in 0..c.ranks.len() {
        let free = c.ranks[d] - rank(d) - rank(d + 1);
        let torsion = factors[d + 1]
            .iter()
            .filter(|f| **f > num_bigint::BigInt::from(1))
            .map(|f| {
                f.to_u64().ok_or(Error::ResourceLimit { what: "torsion coefficient bits", needed: f.bits() as u128, cap: 64 })
            })
            .collect::<Result<Vec<u64>>>()?;
        groups.push(HomologyGroup { dim: d, rank: free, torsion });
    }
    let euler_characteristic =
        c.ranks.iter().enumerate().map(|(d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) }).sum();
    Ok(HomologySummary { groups, euler_characteristic })
}

/// Chain complex and homology of a cube complex.
pub fn complex_homology(x: &CubeComplex, limits: &Limits) -> Result<HomologySummary> {
    homology(&chain_complex(x)?, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config_space::build;
    use crate::graph::{families, normalize, subdivide_for};

    fn hom(g: &crate::graph::Graph, n: usize) -> HomologySummary {
        let x = build(g, n, None, &Limits::default()).unwrap();
        let c = chain_complex(&x).unwrap();
        assert!(c.boundary_squared_vanishes());
        homology(&c, &Limits::default()).unwrap()
    }

    #[test]
    fn k5_two_particles_is_a_nonorientable_surface() {
        let h = hom(&families::complete(5), 2);
        assert_eq!(h.euler_characteristic, -5);
        assert_eq!(h.groups[0].to_string(), "Z");
        assert_eq!(h.groups[1].to_string(), "Z^6 + Z/2");
        assert_eq!(h.groups[2].to_string(), "0");
    }

    #[test]
    fn k33_two_particles_is_nonorientable() {
        // odd Euler characteristic rules out an orientable closed surface
        let h = hom(&families::complete_bipartite(3, 3), 2);
        assert_eq!(h.euler_characteristic, -3);
        assert_eq!(h.betti(), vec![1, 4, 0]);
        assert_eq!(h.groups[1].torsion, vec![2]);
    }

    #[test]
    fn circle_and_rose() {
        assert_eq!(hom(&families::cycle(5), 1).betti(), vec![1, 1]);
        let r = subdivide_for(&normalize(&families::rose(3, 0)), 1);
        assert_eq!(hom(&r, 1).betti(), vec![1, 3]);
    }
}
