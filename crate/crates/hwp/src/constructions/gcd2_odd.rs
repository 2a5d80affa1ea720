//! HWP(6x; 6, 2x; 1, 3x-2) for x ≡ 1, 5 (mod 6): six parts of size x, cycle
//! switches on difference graphs and on Walecki cycles inside the parts.

use std::collections::HashSet;

use serde::Serialize;

use super::fixtures::{K6Factors, K6_F, K6_F_PRIME, K6_F_STAR};
use super::{assemble, Kernel};
use crate::corekit::{Certificate, Layout, NKind, Params};
use crate::diffgraph::g_delta_cycles;
use crate::error::{HwpError, Result};
use crate::mrsm::{sigma_power, walecki_kx};
use crate::switches::{
    apply_switch_to_edges, classify_switch_result, cycles_from_edges, edge, edges_of_cycles, Edge,
    SwitchClass, SwitchSpec,
};

/// One switch of the pipeline with the structure it was expected to produce.
#[derive(Clone, Debug, Serialize)]
pub struct SwitchRecord {
    pub label: String,
    pub expected: SwitchClass,
    pub observed: SwitchClass,
}

type EdgeSet = HashSet<Edge>;

struct Ctx {
    x: usize,
    trace: Vec<SwitchRecord>,
}

impl Ctx {
    fn v(&self, p: usize, l: usize) -> usize {
        p * self.x + l % self.x
    }

    fn pair_graph(&self, pairs: &[(usize, usize)], d1: usize, d2: usize) -> Result<EdgeSet> {
        let mut s = EdgeSet::new();
        for &(a, b) in pairs {
            s.extend(edges_of_cycles(&g_delta_cycles(self.x, &[a, b], &[d1, d2])?));
        }
        Ok(s)
    }

    fn switch(&mut self, host: &mut EdgeSet, spec: &SwitchSpec, label: String, expected: SwitchClass) -> Result<()> {
        let before = cycles_from_edges(host.iter())?;
        apply_switch_to_edges(host, spec)?;
        let after = cycles_from_edges(host.iter())?;
        let observed = classify_switch_result(&before, &after);
        self.trace.push(SwitchRecord { label, expected, observed });
        Ok(())
    }

    /// Six-cycle switch at `level` that removes `remove` and adds `add`, both
    /// given as part pairs in alternating order.
    fn level_switch(&self, level: usize, cycle_parts: [usize; 6]) -> Result<SwitchSpec> {
        SwitchSpec::new(cycle_parts.iter().map(|&p| self.v(p, level)).collect())
    }
}

fn component_len(edges: &EdgeSet, v: usize) -> Result<usize> {
    let cycles = cycles_from_edges(edges.iter())?;
    Ok(cycles.iter().find(|c| c.contains(&v)).map_or(0, |c| c.len()))
}

pub fn solve_gcd2_odd(x: usize) -> Result<Certificate> {
    solve_gcd2_odd_traced(x).map(|(c, _)| c)
}

/// Also returns every switch applied, with its expected and observed effect.
pub fn solve_gcd2_odd_traced(x: usize) -> Result<(Certificate, Vec<SwitchRecord>)> {
    if x < 5 || !matches!(x % 6, 1 | 5) {
        return Err(HwpError::Precondition(format!("x = {x} is not ≡ 1, 5 (mod 6) with x >= 5")));
    }
    let params = Params::new(x, 1, NKind::TwoX)?;
    let mut cx = Ctx { x, trace: Vec::new() };
    let h = (x - 1) / 2;
    let f1 = K6_F[0];
    let mut factors: Vec<EdgeSet> = Vec::new();

    // C: differences (h, h) on the pairs of F1; the A/B switches trade edges with it
    let mut c_factor = cx.pair_graph(&f1, h, h)?;

    // A_k (k odd) and B_k (k even): H_k on both parts of each F1 pair, merged by a
    // 4-cycle switch against C
    let walecki = walecki_kx(x)?;
    for k in 1..=h {
        let hk = &walecki.cycles[k - 1];
        let hedges: Vec<(usize, usize)> = (0..x).map(|i| (hk[i], hk[(i + 1) % x])).collect();
        let hset: HashSet<Edge> = hedges.iter().map(|&(a, b)| edge(a, b)).collect();
        let s = |j: usize| sigma_power(x, j, k - 1);
        let start = if k % 2 == 1 { (s(1), s(2)) } else { (s(x.div_ceil(2)), s((x + 3) / 2)) };
        let i0 = hedges
            .iter()
            .position(|&(a, b)| edge(a, b) == edge(start.0, start.1))
            .ok_or_else(|| HwpError::Internal(format!("H_{k} lacks its starting edge")))?;
        let mut fac = EdgeSet::new();
        for &(i1, i2) in &f1 {
            for &(a, b) in &hedges {
                fac.insert(edge(cx.v(i1, a), cx.v(i1, b)));
                fac.insert(edge(cx.v(i2, a), cx.v(i2, b)));
            }
        }
        // the first edge of H_k, from the starting one, that admits a switch
        // keeping C's component a single 2x-cycle
        let mut found = None;
        'scan: for off in 0..x {
            let (p0, q0) = hedges[(i0 + off) % x];
            for (p, q) in [(p0, q0), (q0, p0)] {
                for sp in [h, x - h] {
                    for sq in [h, x - h] {
                        let (pp, qq) = ((p + sp) % x, (q + sq) % x);
                        if !hset.contains(&edge(pp, qq)) {
                            continue;
                        }
                        let mut ok = true;
                        for &(i1, i2) in &f1 {
                            let (a, b, c, d) = (cx.v(i1, p), cx.v(i1, q), cx.v(i2, qq), cx.v(i2, pp));
                            let mut trial = c_factor.clone();
                            let spec = SwitchSpec::new(vec![b, c, d, a])?;
                            if apply_switch_to_edges(&mut trial, &spec).is_err() || component_len(&trial, a)? != 2 * x {
                                ok = false;
                                break;
                            }
                        }
                        if ok {
                            found = Some((p, q, pp, qq));
                            break 'scan;
                        }
                    }
                }
            }
        }
        let (p, q, pp, qq) = found.ok_or_else(|| HwpError::Internal(format!("no admissible switch for H_{k}")))?;
        let name = if k % 2 == 1 { "A" } else { "B" };
        for &(i1, i2) in &f1 {
            let (a, b, c, d) = (cx.v(i1, p), cx.v(i1, q), cx.v(i2, qq), cx.v(i2, pp));
            let on_fac = SwitchSpec::new(vec![a, b, c, d])?;
            cx.switch(&mut fac, &on_fac, format!("{name}_{k} merge on parts {i1},{i2}"), SwitchClass::Merged2)?;
            cx.switch(&mut c_factor, &on_fac, format!("{name}_{k} induced on C, parts {i1},{i2}"), SwitchClass::SameLengthCycle)?;
        }
        factors.push(fac);
    }
    factors.push(c_factor);

    // D: the Hamilton cycle with differences (1,0,1,0,1,0) around the six parts,
    // split into three 2x-cycles at level 0
    let mut xd: EdgeSet = edges_of_cycles(&g_delta_cycles(x, &[0, 1, 2, 3, 4, 5], &[1, 0, 1, 0, 1, 0])?);
    let top = x - 1;
    if x % 6 == 5 {
        let s4 = cx.level_switch(top, [1, 2, 3, 4, 5, 0])?;
        cx.switch(&mut xd, &s4, format!("S4 on D at level {top}"), SwitchClass::SameLengthCycle)?;
    }
    let s3 = cx.level_switch(0, [1, 2, 3, 4, 5, 0])?;
    cx.switch(&mut xd, &s3, "S3 on D at level 0".into(), SwitchClass::SplitInto3)?;
    factors.push(xd);

    // E: differences (x-1, 0) on the F1 pairs, merged at level 0 by the switch
    // complementary to S3, then split at the top level
    let mut xe = cx.pair_graph(&f1, x - 1, 0)?;
    let s3e = cx.level_switch(0, [0, 1, 2, 3, 4, 5])?;
    cx.switch(&mut xe, &s3e, "S3 induced on E at level 0".into(), SwitchClass::Merged3)?;
    let s5 = cx.level_switch(top, [0, 1, 4, 5, 2, 3])?;
    cx.switch(&mut xe, &s5, format!("S5 on E at level {top}"), SwitchClass::SplitInto3)?;
    factors.push(xe);

    // F_l: remaining difference pairs on F1
    for (d1, d2) in remaining_f1_pairs(x) {
        factors.push(cx.pair_graph(&f1, d1, d2)?);
    }
    // G_m: pairs of F2..F5 with d1 odd and d2 = x-1-d1
    for fj in &K6_F[1..] {
        for d1 in (1..x - 1).step_by(2) {
            factors.push(cx.pair_graph(fj, d1, x - 1 - d1)?);
        }
    }

    // H and I: what is left at each level is K_6 minus two 1-factors
    let mut k = Kernel { parts: 6, part_size: x, ..Default::default() };
    for l in 0..x {
        let fz: &K6Factors = if l < top {
            &K6_F
        } else if x % 6 == 1 {
            &K6_F_PRIME
        } else {
            &K6_F_STAR
        };
        let inside: EdgeSet = fz[2].iter().chain(fz[3].iter()).map(|&(a, b)| edge(cx.v(a, l), cx.v(b, l))).collect();
        let cyc = cycles_from_edges(inside.iter())?;
        if cyc.len() != 1 {
            return Err(HwpError::Internal("level 6-cycle is not a single cycle".into()));
        }
        k.six.extend(cyc);
        k.matching.extend(fz[4].iter().map(|&(a, b)| (cx.v(a, l), cx.v(b, l))));
    }

    for f in &factors {
        k.n_factors.push(cycles_from_edges(f.iter())?);
    }
    let cert = assemble(&params, Layout::new(6, x), k)?;
    Ok((cert, cx.trace))
}

/// Difference pairs (d1, d2) on the F1 pairs not taken by A-E; split by x mod 12.
pub fn remaining_f1_pairs(x: usize) -> Vec<(usize, usize)> {
    let mut ds: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    if matches!(x % 12, 7 | 11) {
        out.push((2, 2));
        ds.extend((3..=(x - 5) / 2).step_by(2));
        ds.extend(((x + 3) / 2..x.saturating_sub(3)).step_by(2));
    } else {
        ds.extend((2..=(x - 5) / 2).step_by(2));
        ds.extend(((x + 3) / 2..x - 2).step_by(2));
    }
    out.extend(ds.into_iter().map(|d| (d, x - 1 - d)));
    out
}
