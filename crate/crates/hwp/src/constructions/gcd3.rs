//! HWP(6xt; 6, 3x; 1, 3xt-2) for odd x: every vertex of a C_x-factorization
//! becomes a part of size 3.

use super::fixtures::{K18_NINE_FACTORS, K18_ONE_FACTOR, K18_SIX_FACTOR};
use super::{assemble, disjoint_copies, weighting_compose, Kernel, SolveOptions};
use crate::corekit::{Certificate, Layout, NKind, Params};
use crate::diffgraph::g_delta_cycles;
use crate::error::{HwpError, Result};
use crate::providers::{cm_factorization_k2n_minus_f, cx_factorization_k2x_minus_f, cx_factorization_k4x_minus_f, resolvable_cm_factorization_equipartite, Factorization};
use crate::switches::{cycles_from_edges, edge};

/// The explicit HWP(18; 6, 9; 1, 7).
pub fn solve_gcd3_x3() -> Result<Certificate> {
    let params = Params::new(3, 1, NKind::ThreeX)?;
    let id = |(p, l): (usize, usize)| p * 6 + l;
    let k = Kernel {
        parts: 3,
        part_size: 6,
        n_factors: K18_NINE_FACTORS.iter().map(|f| f.iter().map(|c| c.iter().map(|&v| id(v)).collect()).collect()).collect(),
        six: K18_SIX_FACTOR.iter().map(|c| c.iter().map(|&v| id(v)).collect()).collect(),
        matching: K18_ONE_FACTOR.iter().map(|e| (id(e[0]), id(e[1]))).collect(),
    };
    assemble(&params, Layout::new(3, 6), k)
}

fn constant(x: usize, head: usize, tail: &[usize]) -> Vec<usize> {
    let mut r = vec![head; x - tail.len()];
    r.extend_from_slice(tail);
    r
}

/// Two difference rows over Z_3 for the distinguished factor.
pub fn first_factor_rows(x: usize) -> [Vec<usize>; 2] {
    if x % 3 == 1 {
        [constant(x, 0, &[2, 2]), constant(x, 2, &[0, 0])]
    } else {
        [constant(x, 0, &[2]), constant(x, 2, &[0])]
    }
}

/// Three difference rows over Z_3 for every other factor; columns are permutations of Z_3.
pub fn remaining_factor_rows(x: usize) -> [Vec<usize>; 3] {
    match x % 3 {
        2 => [constant(x, 0, &[1]), constant(x, 1, &[0]), constant(x, 2, &[])],
        0 => [constant(x, 0, &[1]), constant(x, 1, &[2]), constant(x, 2, &[0])],
        _ => [constant(x, 0, &[2, 1, 1]), constant(x, 1, &[1, 2, 0]), constant(x, 2, &[0, 0, 2])],
    }
}

/// Three rows over Z_3 whose columns are permutations and whose sums are all
/// nonzero, so each row turns an x-cycle into a single 3x-cycle.
pub fn weight3_rows(x: usize) -> Result<Vec<Vec<usize>>> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    if x < 2 {
        return Err(HwpError::Precondition("need at least two columns".into()));
    }
    for s in PERMS {
        for t in PERMS {
            let rows: Vec<Vec<usize>> = (0..3)
                .map(|r| {
                    let mut row = vec![r; x - 2];
                    row.push(s[r]);
                    row.push(t[r]);
                    row
                })
                .collect();
            if rows.iter().all(|row| row.iter().sum::<usize>() % 3 != 0) {
                return Ok(rows);
            }
        }
    }
    Err(HwpError::Internal(format!("no weight-3 rows for x = {x}")))
}

/// Kernel on the 3-weighted cocktail graph: `cx` factors K_2n - F with F = {(2p, 2p+1)}.
/// The first factor gets two rows plus two mixed factors H1, H2; every other
/// factor gets three rows. The F pairs carry the 6-cycle factor (differences
/// `six_diffs`) and the matching (difference `match_shift`).
fn cocktail_kernel(x: usize, cx: &Factorization, six_diffs: [usize; 2], match_shift: usize) -> Result<Kernel> {
    let v = |p: usize, l: usize| p * 3 + l % 3;
    let mut k = Kernel { parts: cx.vertex_count(), part_size: 3, ..Default::default() };
    let first = first_factor_rows(x);
    let rest = remaining_factor_rows(x);
    for (i, fac) in cx.factors.iter().enumerate() {
        let rows: &[Vec<usize>] = if i == 0 { &first } else { &rest };
        for row in rows {
            let mut f = Vec::new();
            for c in fac {
                f.extend(g_delta_cycles(3, c, row)?);
            }
            k.n_factors.push(f);
        }
        if i == 0 {
            // H1 walks each part 0,1,2 in turn; H2 takes the remaining inside edge 0-2
            // and the crossing edges (p,0)-(q,1), (p,1)-(q,2)
            let h1 = fac.iter().map(|c| c.iter().flat_map(|&p| [v(p, 0), v(p, 1), v(p, 2)]).collect()).collect();
            let mut h2 = Vec::new();
            for c in fac {
                let mut es = Vec::new();
                for j in 0..c.len() {
                    let (p, q) = (c[j], c[(j + 1) % c.len()]);
                    es.extend([edge(v(p, 0), v(p, 2)), edge(v(p, 0), v(q, 1)), edge(v(p, 1), v(q, 2))]);
                }
                h2.extend(cycles_from_edges(es.iter())?);
            }
            k.n_factors.push(h1);
            k.n_factors.push(h2);
        }
    }
    for p in 0..cx.vertex_count() / 2 {
        let (a, b) = (2 * p, 2 * p + 1);
        k.six.extend(g_delta_cycles(3, &[a, b], &six_diffs)?);
        k.matching.extend((0..3).map(|l| (v(a, l), v(b, l + match_shift))));
    }
    Ok(k)
}

/// Kernel of HWP(6x; 6, 3x; 1, 3x-2) on 2x parts of size 3.
pub fn kernel_gcd3(x: usize, opts: &SolveOptions) -> Result<Kernel> {
    let (cx, _) = cx_factorization_k2x_minus_f(x, &opts.providers)?;
    cocktail_kernel(x, &cx, [1, 1], 0)
}

/// HWP(6x; 6, 3x; 1, 3x-2), x odd >= 5.
pub fn solve_gcd3_t1(x: usize, opts: &SolveOptions) -> Result<Certificate> {
    if x < 5 || x % 2 == 0 {
        return Err(HwpError::Precondition(format!("x = {x} must be odd and at least 5")));
    }
    let params = Params::new(x, 1, NKind::ThreeX)?;
    assemble(&params, Layout::new(2 * x, 3), kernel_gcd3(x, opts)?)
}

/// t = 1: one weighted K_2x - F. t = 2: one weighted K_4x - F with 2x-1 factors.
/// t >= 3: one weighted K_2xt - F in the same way, falling back to
/// [`solve_gcd3_grouped`] when no C_x-factorization of K_2xt - F is found.
pub fn solve_gcd3(x: usize, t: usize, opts: &SolveOptions) -> Result<Certificate> {
    if x < 5 || x % 2 == 0 {
        return Err(HwpError::Precondition(format!("x = {x} must be odd and at least 5")));
    }
    match t {
        0 => Err(HwpError::InvalidInput("t must be at least 1".into())),
        1 => solve_gcd3_t1(x, opts),
        2 => {
            let params = Params::new(x, 2, NKind::ThreeX)?;
            let (cx, _) = cx_factorization_k4x_minus_f(x, &opts.providers)?;
            assemble(&params, Layout::new(4 * x, 3), cocktail_kernel(x, &cx, [0, 1], 1)?)
        }
        _ => {
            let params = Params::new(x, t, NKind::ThreeX)?;
            match cm_factorization_k2n_minus_f(x * t, x, &opts.providers) {
                Ok((cx, _)) => assemble(&params, Layout::new(2 * x * t, 3), cocktail_kernel(x, &cx, [1, 1], 0)?),
                Err(HwpError::ProviderExhausted { what, hint }) => match solve_gcd3_grouped(x, t, opts) {
                    Err(HwpError::ProviderExhausted { what: grouped, .. }) => {
                        Err(HwpError::ProviderExhausted { what: format!("{what}; {grouped}"), hint })
                    }
                    r => r,
                },
                Err(e) => Err(e),
            }
        }
    }
}

/// t >= 3 by groups: the t = 1 kernel on each group of 2x parts, plus a
/// C_x-factorization of K_(2x:t) weighted by 3 for the edges between groups.
pub fn solve_gcd3_grouped(x: usize, t: usize, opts: &SolveOptions) -> Result<Certificate> {
    if x < 5 || x % 2 == 0 || t < 2 {
        return Err(HwpError::Precondition(format!("grouped route needs odd x >= 5 and t >= 2, got x = {x}, t = {t}")));
    }
    let params = Params::new(x, t, NKind::ThreeX)?;
    let kernel = kernel_gcd3(x, opts)?;
    let mut all = disjoint_copies(&kernel, t);
    let (cross, _) = resolvable_cm_factorization_equipartite(2 * x, t, x, &opts.providers)?;
    all.n_factors.extend(weighting_compose(&cross, &weight3_rows(x)?, 3)?);
    assemble(&params, Layout::new(2 * x * t, 3), all)
}
