//! HWP(6xt; 6, 2x; 1, 3xt-2) for x ≡ 2, 4 (mod 6).

use super::{assemble, disjoint_copies, weighting_compose, Kernel, SolveOptions};
use crate::corekit::{Certificate, Layout, NKind, Params};
use crate::error::{HwpError, Result};
use crate::mrsm::{concat_tables_ab, table_family};
use crate::providers::resolvable_cm_factorization_equipartite;
use crate::rowexpand::{expand_mixed_row, expand_uniform_row, expand_zero_row, k6_fixture, SIX_CYCLE_F3_F4};
use crate::switches::edges_of_cycles;

fn cycles_of(f: &crate::corekit::TwoFactor) -> Vec<Vec<usize>> {
    f.cycles.iter().map(|c| c.vertices().to_vec()).collect()
}

/// HWP(6x; 6, 2x; 1, 3x-2) on x parts of size 6, from the table family of x.
pub fn kernel_gcd2_even(x: usize) -> Result<Kernel> {
    let (_, tables) = table_family(x)?;
    let mut k = Kernel { parts: x, part_size: 6, ..Default::default() };
    let mut zero_matching = None;
    for t in &tables {
        let part_cycle: Vec<usize> = t.column_index.iter().map(|e| e.0).collect();
        for r in 0..t.row_count {
            let row = t.row(r);
            if row.iter().sum::<usize>() % 6 == 3 {
                k.n_factors.push(cycles_of(&expand_uniform_row(row, &part_cycle)?));
            } else if row.iter().all(|&d| d == 0) {
                let (f, m) = expand_zero_row(&part_cycle)?;
                k.n_factors.push(cycles_of(&f));
                zero_matching = Some(m);
            } else {
                let (a, b) = expand_mixed_row(row, &part_cycle)?;
                k.n_factors.push(cycles_of(&a));
                k.n_factors.push(cycles_of(&b));
            }
        }
    }
    k.six = (0..x).map(|p| SIX_CYCLE_F3_F4.iter().map(|&l| p * 6 + l).collect()).collect();
    k.matching = match zero_matching {
        // f5 went into the zero-row cycles; the leftover zero-difference edges match instead
        Some(m) => m.edges,
        None => {
            let f5 = k6_fixture().f[4];
            (0..x).flat_map(|p| f5.iter().map(move |&(a, b)| (p * 6 + a, p * 6 + b))).collect()
        }
    };
    Ok(k)
}

/// Six C_2x-factors of C_(6:x) on the base cycle (0, 1, ..., x-1), one per row of
/// the concatenated six-row table.
pub fn build_c2x_factorization_of_weighted_cycle(x: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    if x == 2 {
        return Err(HwpError::Precondition(
            "a base cycle of length 2 doubles its edge; x = 2 uses the dedicated N = 4 construction".into(),
        ));
    }
    let table = concat_tables_ab(x)?;
    let base: Vec<usize> = (0..x).collect();
    let factors = table
        .entries
        .iter()
        .map(|row| expand_uniform_row(row, &base).map(|f| cycles_of(&f)))
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(factors.iter().map(|f| edges_of_cycles(f).len()).sum::<usize>(), 36 * x);
    Ok(factors)
}

pub fn solve_gcd2_even(x: usize, t: usize, opts: &SolveOptions) -> Result<Certificate> {
    if !matches!(x % 6, 2 | 4) {
        return Err(HwpError::Precondition(format!("x = {x} is not ≡ 2, 4 (mod 6)")));
    }
    if x == 2 {
        return super::solve_x2(t);
    }
    let params = Params::new(x, t, NKind::TwoX)?;
    let kernel = kernel_gcd2_even(x)?;
    if t == 1 {
        return assemble(&params, Layout::new(x, 6), kernel);
    }
    let mut all = disjoint_copies(&kernel, t);
    if x % 4 == 0 {
        let (cx, _) = resolvable_cm_factorization_equipartite(x, t, x, &opts.providers)?;
        let rows = concat_tables_ab(x)?.entries;
        all.n_factors.extend(weighting_compose(&cx, &rows, 6)?);
    } else {
        // K_(x:t) has no built-in C_x-factorization here; the cross edges are
        // also K_(2x:t) weighted by 3, and 2x ≡ 0 (mod 4) is built in
        let (c2x, _) = resolvable_cm_factorization_equipartite(2 * x, t, 2 * x, &opts.providers)?;
        all.n_factors.extend(weighting_compose(&c2x, &zero_sum_rows_z3(2 * x), 3)?);
    }
    assemble(&params, Layout::new(x * t, 6), all)
}

/// Three rows over Z_3 of even length whose columns are permutations of Z_3
/// and whose sums are all 0, so each lifted cycle keeps the base length.
pub fn zero_sum_rows_z3(len: usize) -> Vec<Vec<usize>> {
    debug_assert!(len % 2 == 0);
    let cols = [[0, 1, 2], [0, 2, 1]];
    (0..3).map(|r| (0..len).map(|j| cols[j % 2][r]).collect()).collect()
}
