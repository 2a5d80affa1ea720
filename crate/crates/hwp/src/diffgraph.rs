//! Circulant graphs G(D, g) and the cross-difference subgraph G[Δ] of K_(g:x).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::corekit::gcd;
use crate::error::{HwpError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentProfile {
    pub count: usize,
    pub length: usize,
    /// Components are single edges (only possible for a circulant with D = {g/2}).
    pub is_matching: bool,
}

#[derive(Clone, Debug)]
pub struct CirculantGraph {
    pub g: usize,
    pub diffs: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// Vertex sets of the connected components, each sorted.
    pub components: Vec<Vec<usize>>,
}

impl CirculantGraph {
    pub fn profile(&self) -> ComponentProfile {
        let length = self.components.first().map_or(0, |c| c.len());
        ComponentProfile {
            count: self.components.len(),
            length,
            is_matching: self.diffs.len() == 1 && 2 * self.diffs[0] == self.g,
        }
    }
}

/// G(D, g): vertices Z_g, edges {i, i+d} for d in D.
pub fn circulant(diffs: &[usize], g: usize) -> Result<CirculantGraph> {
    if diffs.is_empty() {
        return Err(HwpError::InvalidInput("empty difference set".into()));
    }
    if g < 2 {
        return Err(HwpError::InvalidInput(format!("modulus {g} too small")));
    }
    let set: BTreeSet<usize> = diffs.iter().copied().collect();
    if let Some(d) = set.iter().find(|&&d| d == 0 || d > g / 2) {
        return Err(HwpError::InvalidInput(format!("difference {d} outside 1..={}", g / 2)));
    }
    let mut edges = BTreeSet::new();
    for &d in &set {
        for i in 0..g {
            let j = (i + d) % g;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let mut comp = vec![usize::MAX; g];
    let mut components = Vec::new();
    for s in 0..g {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut stack = vec![s];
        let mut members = vec![];
        comp[s] = id;
        while let Some(u) = stack.pop() {
            members.push(u);
            for &d in &set {
                for w in [(u + d) % g, (u + g - d) % g] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    Ok(CirculantGraph { g, diffs: set.into_iter().collect(), edges: edges.into_iter().collect(), components })
}

/// Component structure of G[Δ] restricted to one part-cycle carrying `diffs`.
pub fn predict_profile(diffs: &[usize], g: usize) -> Result<ComponentProfile> {
    let x = diffs.len();
    if x < 2 {
        return Err(HwpError::InvalidInput("a part-cycle needs at least 2 parts".into()));
    }
    if g == 0 {
        return Err(HwpError::InvalidInput("modulus 0".into()));
    }
    let d = diffs.iter().map(|&d| d % g).sum::<usize>() % g;
    if x == 2 && d == 0 {
        return Err(HwpError::InvalidInput("two parts with total difference 0 give double edges".into()));
    }
    if 2 * d == g {
        return Ok(ComponentProfile { count: g / 2, length: 2 * x, is_matching: false });
    }
    let h = gcd(d, g);
    Ok(ComponentProfile { count: h, length: (g / h) * x, is_matching: false })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffAssignment {
    pub g: usize,
    /// Cycles over part indices; a 2-element entry is the 2-cycle on one edge.
    pub part_cycles: Vec<Vec<usize>>,
    /// `diffs[c][k]` is the difference on the edge part_cycles[c][k] -> part_cycles[c][k+1].
    pub diffs: Vec<Vec<usize>>,
}

impl DiffAssignment {
    pub fn single(g: usize, part_cycle: Vec<usize>, diffs: Vec<usize>) -> Self {
        DiffAssignment { g, part_cycles: vec![part_cycle], diffs: vec![diffs] }
    }
}

/// Cycles of G[Δ] as flat ids part*g + level. The edge from (i_k, j) goes to
/// (i_{k+1}, j + d_k mod g).
pub fn build_g_delta(a: &DiffAssignment) -> Result<Vec<Vec<usize>>> {
    let g = a.g;
    if g == 0 {
        return Err(HwpError::InvalidInput("modulus 0".into()));
    }
    if a.part_cycles.len() != a.diffs.len() {
        return Err(HwpError::InvalidInput("one difference list per part-cycle required".into()));
    }
    let mut seen = BTreeSet::new();
    for pc in &a.part_cycles {
        for &p in pc {
            if !seen.insert(p) {
                return Err(HwpError::InvalidInput(format!("part {p} appears twice in the part-cycles")));
            }
        }
    }
    let mut out = Vec::new();
    for (pc, ds) in a.part_cycles.iter().zip(&a.diffs) {
        let x = pc.len();
        if ds.len() != x {
            return Err(HwpError::InvalidInput(format!("{} differences for a part-cycle of length {x}", ds.len())));
        }
        let prof = predict_profile(ds, g)?;
        let d = ds.iter().map(|&d| d % g).sum::<usize>() % g;
        let h = if d == 0 { g } else { gcd(d, g) };
        // one walk per residue class of the starting level mod h
        for s in 0..h {
            let mut cyc = Vec::with_capacity(prof.length);
            let mut lev = s;
            loop {
                for k in 0..x {
                    cyc.push(pc[k] * g + lev);
                    lev = (lev + ds[k]) % g;
                }
                if lev == s {
                    break;
                }
            }
            out.push(cyc);
        }
    }
    Ok(out)
}

/// Shorthand for the common case of one part-cycle.
pub fn g_delta_cycles(g: usize, part_cycle: &[usize], diffs: &[usize]) -> Result<Vec<Vec<usize>>> {
    build_g_delta(&DiffAssignment::single(g, part_cycle.to_vec(), diffs.to_vec()))
}
