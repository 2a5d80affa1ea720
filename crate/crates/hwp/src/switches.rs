//! 4-cycle and 6-cycle switches: replace the edge set E(X) of a 2-regular host
//! by E(X) ⊕ E(C) for an alternating cycle C.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::corekit::canonicalize;
use crate::error::{HwpError, Result};

pub type Edge = (usize, usize);

#[inline]
pub fn edge(a: usize, b: usize) -> Edge {
    (a.min(b), a.max(b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SwitchKind {
    Four,
    Six,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwitchSpec {
    pub kind: SwitchKind,
    /// Consecutive pairs alternate between host edges and non-host edges.
    pub cycle: Vec<usize>,
}

impl SwitchSpec {
    pub fn new(cycle: Vec<usize>) -> Result<Self> {
        let kind = match cycle.len() {
            4 => SwitchKind::Four,
            6 => SwitchKind::Six,
            n => return Err(HwpError::InvalidInput(format!("switch cycle of length {n}"))),
        };
        let distinct: BTreeSet<_> = cycle.iter().collect();
        if distinct.len() != cycle.len() {
            return Err(HwpError::InvalidInput(format!("switch cycle {cycle:?} repeats a vertex")));
        }
        Ok(SwitchSpec { kind, cycle })
    }

    /// Switch that removes `remove` and adds `add`, given as the two alternating
    /// matchings of C in order (remove[i] and add[i] share a vertex, as do add[i] and remove[i+1]).
    pub fn from_matchings(remove: &[Edge], add: &[Edge]) -> Result<Self> {
        let mut cyc = Vec::new();
        for (r, _) in remove.iter().zip(add) {
            cyc.push(r.0);
            cyc.push(r.1);
        }
        let spec = SwitchSpec::new(cyc)?;
        let n = spec.cycle.len();
        for (i, a) in add.iter().enumerate() {
            if edge(spec.cycle[2 * i + 1], spec.cycle[(2 * i + 2) % n]) != edge(a.0, a.1) {
                return Err(HwpError::InvalidInput(format!("edges {remove:?} / {add:?} do not alternate")));
            }
        }
        Ok(spec)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let n = self.cycle.len();
        (0..n).map(|i| edge(self.cycle[i], self.cycle[(i + 1) % n])).collect()
    }
}

/// Apply the switch in place to an edge set.
pub fn apply_switch_to_edges(host: &mut HashSet<Edge>, spec: &SwitchSpec) -> Result<()> {
    let es = spec.edges();
    let phase = usize::from(!host.contains(&es[0]));
    for (i, e) in es.iter().enumerate() {
        let should_be_host = i % 2 == phase;
        if host.contains(e) != should_be_host {
            return Err(HwpError::InvalidInput(format!(
                "switch cycle {:?} does not alternate on the host at edge {e:?}",
                spec.cycle
            )));
        }
    }
    for e in es {
        if !host.remove(&e) {
            host.insert(e);
        }
    }
    Ok(())
}

/// Cycles of a 2-regular edge set, recovered by traversal.
pub fn cycles_from_edges<'a>(edges: impl IntoIterator<Item = &'a Edge>) -> Result<Vec<Vec<usize>>> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut keys: Vec<usize> = adj.keys().copied().collect();
    keys.sort_unstable();
    for k in &keys {
        if adj[k].len() != 2 {
            return Err(HwpError::Internal(format!("vertex {k} has degree {}", adj[k].len())));
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &s in &keys {
        if seen.contains(&s) {
            continue;
        }
        let mut cyc = vec![s];
        seen.insert(s);
        let (mut prev, mut cur) = (s, adj[&s][0]);
        while cur != s {
            cyc.push(cur);
            seen.insert(cur);
            let n = &adj[&cur];
            let next = if n[0] != prev { n[0] } else { n[1] };
            prev = cur;
            cur = next;
        }
        out.push(cyc);
    }
    Ok(out)
}

pub fn edges_of_cycles(cycles: &[Vec<usize>]) -> HashSet<Edge> {
    let mut s = HashSet::new();
    for c in cycles {
        let n = c.len();
        for i in 0..n {
            s.insert(edge(c[i], c[(i + 1) % n]));
        }
    }
    s
}

/// Host given as disjoint cycles; result again as disjoint cycles.
pub fn apply_switch(host: &[Vec<usize>], spec: &SwitchSpec) -> Result<Vec<Vec<usize>>> {
    let mut edges = edges_of_cycles(host);
    let before_vertices: BTreeSet<usize> = host.iter().flatten().copied().collect();
    let count = edges.len();
    apply_switch_to_edges(&mut edges, spec)?;
    let out = cycles_from_edges(&edges)?;
    if cfg!(debug_assertions) {
        let after: BTreeSet<usize> = out.iter().flatten().copied().collect();
        debug_assert_eq!(after, before_vertices, "switch changed the vertex set");
        debug_assert_eq!(edges.len(), count, "switch changed the edge count");
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SwitchClass {
    /// One cycle replaced by one cycle of the same length.
    SameLengthCycle,
    /// One cycle replaced by three.
    SplitInto3,
    /// Two cycles replaced by one.
    Merged2,
    /// Three cycles replaced by one.
    Merged3,
    /// Nothing changed, or a shape none of the above describes.
    Other,
}

fn cycle_bag(cycles: &[Vec<usize>]) -> BTreeMap<Vec<usize>, usize> {
    let mut m = BTreeMap::new();
    for c in cycles {
        let key = canonicalize(c).unwrap_or_else(|_| c.clone());
        *m.entry(key).or_insert(0) += 1;
    }
    m
}

/// Compares the cycles that disappeared with the cycles that appeared.
pub fn classify_switch_result(before: &[Vec<usize>], after: &[Vec<usize>]) -> SwitchClass {
    let b = cycle_bag(before);
    let a = cycle_bag(after);
    let diff = |x: &BTreeMap<Vec<usize>, usize>, y: &BTreeMap<Vec<usize>, usize>| -> Vec<usize> {
        let mut lens = Vec::new();
        for (c, &k) in x {
            let other = y.get(c).copied().unwrap_or(0);
            for _ in other..k {
                lens.push(c.len());
            }
        }
        lens
    };
    let removed = diff(&b, &a);
    let added = diff(&a, &b);
    match (removed.len(), added.len()) {
        (1, 1) if removed[0] == added[0] => SwitchClass::SameLengthCycle,
        (1, 3) if added.iter().sum::<usize>() == removed[0] => SwitchClass::SplitInto3,
        (2, 1) if removed.iter().sum::<usize>() == added[0] => SwitchClass::Merged2,
        (3, 1) if removed.iter().sum::<usize>() == added[0] => SwitchClass::Merged3,
        _ => SwitchClass::Other,
    }
}
