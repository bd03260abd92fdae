use serde::Serialize;

use super::{Diagram, DiagramGroupoid, Letter};
use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};

/// A vertex of degree at least 3 with two arms of `n - 1` vertices each and
/// a third neighbour used as a siding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tripod {
    pub center: usize,
    pub tip: usize,
    /// Vertices walking away from the centre.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Tripod {
    /// The configuration the swap is based at: the centre and the right arm.
    pub fn base(&self) -> Result<Configuration> {
        let mut v = vec![self.center];
        v.extend_from_slice(&self.right);
        Configuration::new(v)
    }
}

/// First tripod with arms of `n - 1` vertices, scanning centres by index and
/// neighbour choices in adjacency order.
pub fn find_tripod(g: &Graph, n: usize) -> Option<Tripod> {
    if n < 2 {
        return None;
    }
    let arm = n - 1;
    for c in g.vertices().filter(|&v| g.degree(v) >= 3) {
        let nbrs: Vec<usize> = g.neighbors(c).map(|(_, w)| w).filter(|&w| w != c).collect();
        for &l in &nbrs {
            for &r in &nbrs {
                for &t in &nbrs {
                    if l == r || l == t || r == t {
                        continue;
                    }
                    let mut blocked = vec![false; g.vertex_count()];
                    blocked[c] = true;
                    blocked[t] = true;
                    let mut left = Vec::new();
                    let found = arms(g, l, arm, &mut blocked, &mut left, &mut |blocked| {
                        let mut right = Vec::new();
                        arms(g, r, arm, blocked, &mut right, &mut |_| true).then_some(right)
                    });
                    if let Some(right) = found {
                        return Some(Tripod { center: c, tip: t, left, right });
                    }
                }
            }
        }
    }
    None
}

/// Depth-first search for a simple path of `len` vertices starting at
/// `start`, avoiding blocked vertices; calls `k` with the path blocked.
fn arms<T>(
    g: &Graph,
    start: usize,
    len: usize,
    blocked: &mut Vec<bool>,
    path: &mut Vec<usize>,
    k: &mut dyn FnMut(&mut Vec<bool>) -> T,
) -> T
where
    T: Found,
{
    if blocked[start] {
        return T::none();
    }
    blocked[start] = true;
    path.push(start);
    let result = if path.len() == len {
        k(blocked)
    } else {
        let mut res = T::none();
        let nbrs: Vec<usize> = g.neighbors(start).map(|(_, w)| w).collect();
        for w in nbrs {
            res = arms(g, w, len, blocked, path, k);
            if res.is_found() {
                break;
            }
        }
        res
    };
    if !result.is_found() {
        path.pop();
        blocked[start] = false;
    }
    result
}

trait Found {
    fn none() -> Self;
    fn is_found(&self) -> bool;
}

impl Found for bool {
    fn none() -> Self {
        false
    }
    fn is_found(&self) -> bool {
        *self
    }
}

impl<T> Found for Option<T> {
    fn none() -> Self {
        None
    }
    fn is_found(&self) -> bool {
        self.is_some()
    }
}

impl<'g> DiagramGroupoid<'g> {
    fn step(&self, cur: &mut Configuration, letters: &mut Vec<Letter>, from: usize, to: usize) -> Result<()> {
        let g = self.graph();
        let e = g
            .edge_between(from, to)
            .ok_or_else(|| Error::precondition(format!("{} and {} are not adjacent", g.name(from), g.name(to))))?;
        let l = Letter::along(g, e, from);
        *cur = self
            .apply(cur, l)
            .map_err(|reason| Error::IllegalMove { index: letters.len(), reason })?;
        letters.push(l);
        Ok(())
    }

    /// Moves every particle one step along the cycle, repeatedly, until the
    /// configuration returns to `base`.
    pub fn make_rotation(&self, cycle: &Cycle, base: &Configuration) -> Result<Diagram> {
        let len = cycle.len();
        if base.len() != self.particles() {
            return Err(Error::precondition("base size differs from the particle count"));
        }
        if len < self.particles() + 1 {
            return Err(Error::precondition("the cycle needs more vertices than particles"));
        }
        let pos_of = |v: usize| cycle.vertices.iter().position(|&c| c == v);
        if base.vertices().iter().any(|&v| pos_of(v).is_none()) {
            return Err(Error::precondition("every particle must sit on the cycle"));
        }
        let mut cur = base.clone();
        let mut letters = Vec::new();
        loop {
            let mut pending: Vec<usize> = cur.vertices().iter().map(|&v| pos_of(v).unwrap()).collect();
            while !pending.is_empty() {
                let i = pending
                    .iter()
                    .position(|&p| !cur.contains(cycle.vertices[(p + 1) % len]))
                    .expect("some particle has a free slot ahead");
                let p = pending.remove(i);
                self.step(&mut cur, &mut letters, cycle.vertices[p], cycle.vertices[(p + 1) % len])?;
            }
            if cur == *base {
                break;
            }
        }
        self.diagram(base, &letters)
    }

    /// Loop in which the particle at the centre waits on the tip while the
    /// others pass to the left arm, then the particles return in a new order.
    pub fn make_tripod_swap(&self, tripod: &Tripod) -> Result<Diagram> {
        let n = self.particles();
        if n < 2 || tripod.left.len() != n - 1 || tripod.right.len() != n - 1 {
            return Err(Error::precondition("tripod arms must have n - 1 vertices"));
        }
        // spine position k in -(n-1)..=(n-1); 0 is the centre
        let spine = |k: isize| -> usize {
            match k {
                0 => tripod.center,
                k if k > 0 => tripod.right[k as usize - 1],
                k => tripod.left[(-k) as usize - 1],
            }
        };
        let base = tripod.base()?;
        let mut cur = base.clone();
        let mut letters = Vec::new();
        let m = n as isize;
        self.step(&mut cur, &mut letters, tripod.center, tripod.tip)?;
        for i in 1..m {
            for k in ((i - m)..i).rev() {
                self.step(&mut cur, &mut letters, spine(k + 1), spine(k))?;
            }
        }
        self.step(&mut cur, &mut letters, tripod.tip, tripod.center)?;
        for k in 0..m - 1 {
            self.step(&mut cur, &mut letters, spine(k), spine(k + 1))?;
        }
        for j in 1..m {
            for k in -j..(m - 1 - j) {
                self.step(&mut cur, &mut letters, spine(k), spine(k + 1))?;
            }
        }
        if cur != base {
            return Err(Error::precondition("tripod swap did not close up"));
        }
        self.diagram(&base, &letters)
    }
}
