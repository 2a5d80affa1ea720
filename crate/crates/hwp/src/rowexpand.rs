//! Expanding a table row along a part-cycle into 2x-cycle factors of K_(6:x)
//! plus inside edges. Vertex (part, level) has flat id part*6 + level.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::corekit::{OneFactor, TwoFactor};
use crate::diffgraph::g_delta_cycles;
use crate::error::{HwpError, Result};

const G: usize = 6;

/// A 1-factorization f1..f5 of K_6 on levels 0..5.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K6Factorization {
    pub f: [[(usize, usize); 3]; 5],
}

impl K6Factorization {
    /// 1-based, matching the usual f1..f5 naming.
    pub fn factor(&self, i: usize) -> &[(usize, usize); 3] {
        &self.f[i - 1]
    }
}

pub fn k6_fixture() -> K6Factorization {
    K6Factorization {
        f: [
            [(0, 1), (2, 3), (4, 5)],
            [(0, 5), (1, 2), (3, 4)],
            [(0, 3), (1, 5), (2, 4)],
            [(0, 4), (1, 3), (2, 5)],
            [(0, 2), (1, 4), (3, 5)],
        ],
    }
}

/// f3 ∪ f4 as a vertex sequence.
pub const SIX_CYCLE_F3_F4: [usize; 6] = [0, 3, 1, 5, 2, 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    pub diff: usize,
    pub sign: Sign,
}

impl PathStep {
    /// Difference between the endpoints of the 2-path.
    pub fn effective(&self) -> usize {
        match self.sign {
            Sign::Plus => (self.diff + 1) % G,
            Sign::Minus => (self.diff + G - 1) % G,
            Sign::None => self.diff,
        }
    }
}

fn row_sum(row: &[usize]) -> usize {
    row.iter().sum::<usize>() % G
}

/// Plus on even positions and minus on odd ones, except that the last 2
/// (sum ≡ 2) or last 4 (sum ≡ 4) entries are all minus.
pub fn mixed_signs(row: &[usize]) -> Result<Vec<PathStep>> {
    let x = row.len();
    if x < 2 || x % 2 != 0 {
        return Err(HwpError::Precondition(format!("mixed rows need even x >= 2, got {x}")));
    }
    let s = row_sum(row);
    let tail = match s {
        0 => 0,
        2 => 2,
        4 => 4,
        _ => return Err(HwpError::Precondition(format!("mixed row sum {s} is odd"))),
    };
    if tail > x {
        return Err(HwpError::Precondition(format!("row sum {s} needs at least {tail} columns")));
    }
    Ok(row
        .iter()
        .enumerate()
        .map(|(k, &d)| {
            let sign = if k >= x - tail || k % 2 == 1 { Sign::Minus } else { Sign::Plus };
            PathStep { diff: d % G, sign }
        })
        .collect())
}

/// Row with sum ≡ 3: G[Δ] is three 2x-cycles.
pub fn expand_uniform_row(row: &[usize], part_cycle: &[usize]) -> Result<TwoFactor> {
    if row.len() != part_cycle.len() {
        return Err(HwpError::InvalidInput("row and part-cycle lengths differ".into()));
    }
    if row_sum(row) != 3 {
        return Err(HwpError::Precondition(format!("uniform row sum {} is not 3 mod 6", row_sum(row))));
    }
    let x = row.len();
    TwoFactor::from_cycles(2 * x, g_delta_cycles(G, part_cycle, row)?)
}

/// Row with even sum: each cross edge is extended by an f1 ∪ f2 inside edge
/// (one level up for +, down for -). The six resulting 2x-cycles split by the
/// parity of their starting level into two factors.
pub fn expand_mixed_row(row: &[usize], part_cycle: &[usize]) -> Result<(TwoFactor, TwoFactor)> {
    let x = row.len();
    if part_cycle.len() != x {
        return Err(HwpError::InvalidInput("row and part-cycle lengths differ".into()));
    }
    let steps = mixed_signs(row)?;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for start in 0..G {
        let mut cyc = Vec::with_capacity(2 * x);
        let mut lev = start;
        for k in 0..x {
            let (a, b) = (part_cycle[k], part_cycle[(k + 1) % x]);
            cyc.push(a * G + lev);
            let mid = (lev + steps[k].diff) % G;
            cyc.push(b * G + mid);
            lev = match steps[k].sign {
                Sign::Plus => (mid + 1) % G,
                _ => (mid + G - 1) % G,
            };
        }
        if lev != start {
            return Err(HwpError::Internal(format!("mixed row {row:?} does not close")));
        }
        if start % 2 == 0 { even.push(cyc) } else { odd.push(cyc) }
    }
    Ok((TwoFactor::from_cycles(2 * x, even)?, TwoFactor::from_cycles(2 * x, odd)?))
}

/// All-zero row: alternate zero-difference cross edges with f5 inside edges to get
/// three 2x-cycles; the unused zero-difference cross edges form a perfect matching.
pub fn expand_zero_row(part_cycle: &[usize]) -> Result<(TwoFactor, OneFactor)> {
    let x = part_cycle.len();
    if x < 4 || x % 2 != 0 {
        return Err(HwpError::Precondition(format!("zero rows need even x >= 4, got {x}")));
    }
    let f5 = k6_fixture().f[4];
    let mut cycles = Vec::new();
    let mut used = BTreeSet::new();
    for &(a, b) in &f5 {
        let mut cyc = vec![part_cycle[0] * G + a];
        for (k, &p) in part_cycle.iter().enumerate().skip(1) {
            let (arrive, leave) = if k % 2 == 1 { (a, b) } else { (b, a) };
            cyc.push(p * G + arrive);
            cyc.push(p * G + leave);
        }
        cyc.push(part_cycle[0] * G + b);
        let n = cyc.len();
        for i in 0..n {
            let (p, q) = (cyc[i], cyc[(i + 1) % n]);
            used.insert((p.min(q), p.max(q)));
        }
        cycles.push(cyc);
    }
    let mut matching = Vec::new();
    for k in 0..x {
        let (p, q) = (part_cycle[k], part_cycle[(k + 1) % x]);
        for l in 0..G {
            let e = ((p * G + l).min(q * G + l), (p * G + l).max(q * G + l));
            if !used.contains(&e) {
                matching.push(e);
            }
        }
    }
    Ok((TwoFactor::from_cycles(2 * x, cycles)?, OneFactor::new(matching)))
}
