mod common;

use std::collections::{BTreeSet, HashSet};

use common::{audit, census};
use hwp::constructions::{
    build_c2x_factorization_of_weighted_cycle, first_factor_rows, fixtures, kernel_gcd2_even, remaining_factor_rows,
    route, solve_gcd2_even, solve_gcd2_odd, solve_gcd2_odd_traced, solve_gcd3, solve_gcd3_grouped, solve_gcd3_t1,
    solve_gcd3_x3, solve_x2, weight3_rows, weighting_compose, zero_sum_rows_z3, Route,
};
use hwp::providers::resolvable_cm_factorization_equipartite;
use hwp::switches::SwitchClass;
use hwp::{solve, verify, HwpError, NKind, Params, SolveOptions};

fn opts() -> SolveOptions {
    SolveOptions::default()
}

#[test]
fn four_cycle_family() {
    for t in [1, 2, 3, 7] {
        let c = solve_x2(t).unwrap();
        census(&c, 2, t, 4);
        audit(&c);
        assert!(verify(&c).is_valid());
        assert_eq!(route(&Params::new(2, t, NKind::TwoX).unwrap()).unwrap(), Route::X2);
    }
    let c = solve_x2(2).unwrap();
    assert_eq!((c.header.v, c.header.beta, c.n_factors.len()), (24, 10, 10));
    let c = solve_x2(3).unwrap();
    assert_eq!((c.header.v, c.header.beta), (36, 16));
}

#[test]
fn even_x_single_group() {
    for x in [4, 8, 10, 14, 16, 20, 22] {
        let c = solve_gcd2_even(x, 1, &opts()).unwrap();
        census(&c, x, 1, 2 * x);
        audit(&c);
    }
}

#[test]
fn even_x_several_groups() {
    for (x, t) in [(4, 2), (4, 3), (8, 2), (10, 2), (14, 2), (4, 4)] {
        let c = solve_gcd2_even(x, t, &opts()).unwrap();
        census(&c, x, t, 2 * x);
        audit(&c);
    }
}

#[test]
fn zero_row_kernel_supplies_the_matching() {
    // class b has the all-zero row, whose leftover edges are the matching
    let k = kernel_gcd2_even(14).unwrap();
    assert_eq!(k.matching.len(), 42);
    assert!(k.matching.iter().all(|&(a, b)| a % 6 == b % 6 && a / 6 != b / 6));
    // class a takes the matching from the fifth 1-factor inside every part
    let k = kernel_gcd2_even(8).unwrap();
    assert!(k.matching.iter().all(|&(a, b)| a / 6 == b / 6));
}

#[test]
fn odd_x_switch_pipeline() {
    for x in [5, 7, 11, 13, 17, 19] {
        let (c, trace) = solve_gcd2_odd_traced(x).unwrap();
        census(&c, x, 1, 2 * x);
        audit(&c);
        assert!(!trace.is_empty());
        for r in &trace {
            assert_eq!(r.expected, r.observed, "x={x}: {}", r.label);
        }
        // (x+5)/2 + (x-5)/2 + 4(x-1)/2 factors
        assert_eq!(c.n_factors.len(), (x + 5) / 2 + (x - 5) / 2 + 4 * (x - 1) / 2);
    }
}

#[test]
fn every_switch_kind_is_exercised() {
    let mut seen = HashSet::new();
    for x in [5, 7] {
        let (_, trace) = solve_gcd2_odd_traced(x).unwrap();
        for r in trace {
            let kind = if r.label.starts_with("A_") {
                "S1"
            } else if r.label.starts_with("B_") {
                "S2"
            } else {
                &r.label[..2]
            };
            seen.insert((kind.to_string(), r.observed));
        }
    }
    let kinds: BTreeSet<&str> = seen.iter().map(|(k, _)| k.as_str()).collect();
    assert_eq!(kinds, ["S1", "S2", "S3", "S4", "S5"].into_iter().collect());
    assert!(seen.contains(&("S1".into(), SwitchClass::Merged2)));
    assert!(seen.contains(&("S3".into(), SwitchClass::SplitInto3)));
    assert!(seen.contains(&("S5".into(), SwitchClass::SplitInto3)));
}

#[test]
fn odd_x_rejects_bad_residues() {
    assert!(solve_gcd2_odd(3).is_err());
    assert!(solve_gcd2_odd(9).is_err());
}

#[test]
fn k18_fixture() {
    let c = solve_gcd3_x3().unwrap();
    census(&c, 3, 1, 9);
    audit(&c);
    let edges = common::raw_edge_counts(&c);
    assert_eq!(edges.len(), 153);
    assert_eq!(8 * 18 + 9, 153);
    assert!(fixtures::K18_ONE_FACTOR.contains(&[(1, 0), (1, 3)]));
    assert!(c.one_factor.edges.contains(&(6, 9)));
    let six: BTreeSet<Vec<usize>> = c.six_factor.cycles.iter().map(|c| c.vertices().to_vec()).collect();
    let want: BTreeSet<Vec<usize>> = fixtures::K18_SIX_FACTOR
        .iter()
        .map(|cy| hwp::canonicalize(&cy.iter().map(|&(p, l)| p * 6 + l).collect::<Vec<_>>()).unwrap())
        .collect();
    assert_eq!(six, want);
}

#[test]
fn three_x_single_group() {
    for x in [5, 7] {
        let c = solve_gcd3_t1(x, &opts()).unwrap();
        census(&c, x, 1, 3 * x);
        audit(&c);
    }
}

#[test]
fn three_x_two_and_three_groups() {
    for (x, t) in [(5, 2), (7, 2), (5, 3)] {
        let c = solve_gcd3(x, t, &opts()).unwrap();
        census(&c, x, t, 3 * x);
        audit(&c);
    }
}

#[test]
fn three_x_group_route() {
    let c = solve_gcd3_grouped(5, 3, &opts()).unwrap();
    census(&c, 5, 3, 15);
    audit(&c);
}

#[test]
fn difference_rows_over_z3() {
    assert_eq!(first_factor_rows(7), [vec![0, 0, 0, 0, 0, 2, 2], vec![2, 2, 2, 2, 2, 0, 0]]);
    assert_eq!(first_factor_rows(5), [vec![0, 0, 0, 0, 2], vec![2, 2, 2, 2, 0]]);
    for x in (5..40).step_by(2) {
        let rows = remaining_factor_rows(x);
        for col in 0..x {
            let c: BTreeSet<usize> = rows.iter().map(|r| r[col]).collect();
            assert_eq!(c.len(), 3, "x={x}");
        }
        assert!(rows.iter().all(|r| r.iter().sum::<usize>() % 3 != 0), "x={x}");
        let w = weight3_rows(x).unwrap();
        for col in 0..x {
            let c: BTreeSet<usize> = w.iter().map(|r| r[col]).collect();
            assert_eq!(c, [0, 1, 2].into_iter().collect());
        }
        assert!(w.iter().all(|r| r.iter().sum::<usize>() % 3 != 0));
    }
    for len in [2, 4, 10, 28] {
        let z = zero_sum_rows_z3(len);
        assert_eq!(z.len(), 3);
        assert!(z.iter().all(|r| r.len() == len && r.iter().sum::<usize>() % 3 == 0));
        for col in 0..len {
            let c: BTreeSet<usize> = z.iter().map(|r| r[col]).collect();
            assert_eq!(c.len(), 3);
        }
    }
}

#[test]
fn unsupported_parameters() {
    let unsupported = |x, t, k| matches!(solve(&Params::new(x, t, k).unwrap(), &opts()), Err(HwpError::Unsupported(_)));
    assert!(unsupported(5, 2, NKind::TwoX));
    assert!(unsupported(3, 1, NKind::TwoX));
    assert!(unsupported(6, 1, NKind::TwoX));
    assert!(unsupported(4, 1, NKind::ThreeX));
    assert!(unsupported(3, 2, NKind::ThreeX));
    assert!(!unsupported(3, 1, NKind::ThreeX));
    assert!(Params::new(0, 1, NKind::TwoX).is_err() || unsupported(0, 1, NKind::TwoX));
}

#[test]
fn weighted_cycle_factorizations() {
    for x in [8, 10, 4, 14] {
        let fs = build_c2x_factorization_of_weighted_cycle(x).unwrap();
        assert_eq!(fs.len(), 6);
        let mut all = BTreeSet::new();
        for f in &fs {
            assert_eq!(f.len(), 3);
            for c in f {
                assert_eq!(c.len(), 2 * x);
                for i in 0..c.len() {
                    let (a, b) = (c[i], c[(i + 1) % c.len()]);
                    let (pa, pb) = (a / 6, b / 6);
                    assert!((pa + 1) % x == pb || (pb + 1) % x == pa);
                    assert!(all.insert((a.min(b), a.max(b))));
                }
            }
        }
        assert_eq!(all.len(), 36 * x);
    }
    assert!(build_c2x_factorization_of_weighted_cycle(2).is_err());
}

#[test]
fn weighting_lifts_a_factorization() {
    let (cx, _) = resolvable_cm_factorization_equipartite(4, 3, 4, &Default::default()).unwrap();
    let rows = zero_sum_rows_z3(4);
    let lifted = weighting_compose(&cx, &rows, 3).unwrap();
    // w x (t-1) / 2 factors
    assert_eq!(lifted.len(), 3 * 4 * 2 / 2);
    let mut all = BTreeSet::new();
    for f in &lifted {
        let mut vs = BTreeSet::new();
        for c in f {
            assert_eq!(c.len(), 4);
            for i in 0..4 {
                let (a, b) = (c[i], c[(i + 1) % 4]);
                assert!(vs.insert(a));
                assert_ne!(a / 12, b / 12);
                assert!(all.insert((a.min(b), a.max(b))));
            }
        }
        assert_eq!(vs.len(), 36);
    }
    assert_eq!(all.len(), 3 * 12 * 12);
    assert!(weighting_compose(&cx, &rows[..2], 3).is_err());
}

#[test]
fn solve_matches_the_direct_pipelines() {
    let a = solve(&Params::new(4, 1, NKind::TwoX).unwrap(), &opts()).unwrap();
    let b = solve_gcd2_even(4, 1, &opts()).unwrap();
    assert_eq!(a, b);
    let a = solve(&Params::new(5, 1, NKind::TwoX).unwrap(), &opts()).unwrap();
    assert_eq!(a, solve_gcd2_odd(5).unwrap());
}
