//! HWP(12t; 6, 4; 1, 6t-2).

use super::fixtures::{K12_C, K12_D, K12_E, K12_F};
use super::{assemble, Kernel};
use crate::corekit::{Certificate, Layout, NKind, Params};
use crate::diffgraph::g_delta_cycles;
use crate::error::Result;
use crate::providers::one_factorization_k2n;

const ROWS_OTHER_PAIRS: [[usize; 2]; 3] = [[1, 2], [0, 3], [2, 1]];

/// HWP(12; 6, 4; 1, 4) on two parts of size 6: difference pairs (1,2) and (0,3),
/// two mixed 4-cycle factors, inside 6-cycles and an inside matching.
pub fn kernel_k12() -> Result<Kernel> {
    let id = |(p, l): (usize, usize)| p * 6 + l;
    let mut n_factors = vec![g_delta_cycles(6, &[0, 1], &[1, 2])?, g_delta_cycles(6, &[0, 1], &[0, 3])?];
    for piece in [K12_C, K12_D] {
        n_factors.push(piece.iter().map(|c| c.iter().map(|&v| id(v)).collect()).collect());
    }
    let six = K12_E.iter().enumerate().map(|(p, c)| c.iter().map(|&l| p * 6 + l).collect()).collect();
    let matching = K12_F
        .iter()
        .enumerate()
        .flat_map(|(p, m)| m.iter().map(move |&(a, b)| (p * 6 + a, p * 6 + b)))
        .collect();
    Ok(Kernel { parts: 2, part_size: 6, n_factors, six, matching })
}

/// Pairs of parts follow a 1-factorization of K_2t whose first matching is
/// {01, 23, ...}; the kernel goes on the first matching and the rows
/// (1,2), (0,3), (2,1) on every other one.
pub fn solve_x2(t: usize) -> Result<Certificate> {
    let params = Params::new(2, t, NKind::TwoX)?;
    let matchings = one_factorization_k2n(t)?;
    let kernel = kernel_k12()?;
    let mut all = Kernel { parts: 2 * t, part_size: 6, ..Default::default() };
    for &(a, b) in &matchings[0] {
        let k = kernel.relabel(|v| if v < 6 { a * 6 + v } else { b * 6 + v - 6 });
        if all.n_factors.is_empty() {
            all.n_factors = vec![Vec::new(); k.n_factors.len()];
        }
        for (dst, src) in all.n_factors.iter_mut().zip(k.n_factors) {
            dst.extend(src);
        }
        all.six.extend(k.six);
        all.matching.extend(k.matching);
    }
    for m in &matchings[1..] {
        for row in ROWS_OTHER_PAIRS {
            let mut f = Vec::new();
            for &(a, b) in m {
                f.extend(g_delta_cycles(6, &[a, b], &row)?);
            }
            all.n_factors.push(f);
        }
    }
    assemble(&params, Layout::new(2 * t, 6), all)
}
