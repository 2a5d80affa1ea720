use std::collections::BTreeSet;

use hwp::constructions::solve_x2;
use hwp::corekit::{canonicalize, edge_multiset, verify, Certificate, CheckKind, Cycle, Header, OneFactor, TwoFactor};
use hwp::{solve, HwpError, NKind, Params, SolveOptions};
use proptest::prelude::*;

fn k12() -> Certificate {
    solve_x2(1).unwrap()
}

#[test]
fn canonicalize_rotates_to_minimum() {
    assert_eq!(canonicalize(&[2, 0, 1]).unwrap(), vec![0, 1, 2]);
}

#[test]
fn canonicalize_orients_toward_smaller_neighbour() {
    assert_eq!(canonicalize(&[0, 2, 1]).unwrap(), vec![0, 1, 2]);
    assert_eq!(canonicalize(&[5, 9, 3, 7]).unwrap(), vec![3, 7, 5, 9]);
}

#[test]
fn canonicalize_rejects_repeats_and_short_input() {
    assert!(matches!(canonicalize(&[1, 2, 1, 3]), Err(HwpError::MalformedCycle(_))));
    assert!(matches!(canonicalize(&[1, 2]), Err(HwpError::MalformedCycle(_))));
}

proptest! {
    #[test]
    fn canonical_form_depends_only_on_the_cyclic_edge_set(
        verts in prop::collection::btree_set(0usize..500, 3..16),
        shuffle_seed in any::<u64>(),
        rot in 0usize..16,
        flip in any::<bool>(),
    ) {
        let mut vs: Vec<usize> = verts.into_iter().collect();
        // deterministic shuffle from the seed
        let mut s = shuffle_seed | 1;
        for i in (1..vs.len()).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            vs.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let c = canonicalize(&vs).unwrap();
        let n = vs.len();
        let mut other: Vec<usize> = (0..n).map(|k| vs[(k + rot) % n]).collect();
        if flip {
            other.reverse();
        }
        prop_assert_eq!(&canonicalize(&other).unwrap(), &c);
        prop_assert_eq!(&canonicalize(&c).unwrap(), &c);
        prop_assert_eq!(c[0], *c.iter().min().unwrap());
        prop_assert!(c[1] < c[n - 1]);
        let edges = |w: &[usize]| (0..w.len()).map(|i| {
            let (a, b) = (w[i], w[(i + 1) % w.len()]);
            (a.min(b), a.max(b))
        }).collect::<BTreeSet<_>>();
        prop_assert_eq!(edges(&c), edges(&vs));
    }
}

#[test]
fn k12_output_covers_every_pair_once() {
    let m = edge_multiset(&k12());
    assert_eq!(m.len(), 66);
    assert!(m.values().all(|&k| k == 1));
}

#[test]
fn edge_multiset_of_empty_and_triangle() {
    let mut cert = k12();
    cert.n_factors.clear();
    cert.six_factor.cycles.clear();
    cert.one_factor.edges.clear();
    assert!(edge_multiset(&cert).is_empty());
    cert.six_factor.cycles.push(Cycle::new(&[4, 7, 9]).unwrap());
    let m = edge_multiset(&cert);
    assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![((4, 7), 1), ((4, 9), 1), ((7, 9), 1)]);
}

#[test]
fn edge_count_identity_holds_symbolically() {
    for x in 2..40 {
        for t in 1..6 {
            for kind in [NKind::TwoX, NKind::ThreeX] {
                let p = Params::new(x, t, kind).unwrap();
                let v = p.v();
                assert_eq!(p.beta() * v + v + v / 2, v * (v - 1) / 2, "{p}");
                assert_eq!(p.alpha() + p.beta(), (v - 2) / 2);
                assert_eq!(p.beta(), 3 * x * t - 2);
            }
        }
    }
}

#[test]
fn duplicated_edge_fails_the_partition_check() {
    let mut cert = k12();
    // swap a matching edge for an edge already used by the 6-cycle factor
    let six_edge = cert.six_factor.cycles[0].edges().next().unwrap();
    cert.one_factor.edges[0] = six_edge;
    let rep = verify(&cert);
    assert!(!rep.check(CheckKind::EdgePartition).passed);
    assert!(rep.check(CheckKind::EdgePartition).details.iter().any(|d| d.contains("used 2 times")));
    assert!(!rep.is_valid());
}

#[test]
fn wrong_beta_fails_the_arithmetic_check() {
    let mut cert = k12();
    cert.n_factors.pop();
    cert.header.beta = 3;
    let rep = verify(&cert);
    assert!(!rep.check(CheckKind::Arithmetic).passed);
    assert!(rep.to_string().contains("alpha + beta = 4 but (v-2)/2 = 5"));
}

#[test]
fn all_checks_run_even_when_several_fail() {
    let mut cert = k12();
    cert.header.m = 5;
    cert.one_factor = OneFactor::new(vec![(0, 1)]);
    let rep = verify(&cert);
    let failed: Vec<CheckKind> = rep.failed().map(|c| c.kind).collect();
    assert!(failed.contains(&CheckKind::Arithmetic));
    assert!(failed.contains(&CheckKind::Matching));
    assert!(failed.contains(&CheckKind::EdgePartition));
    assert_eq!(rep.checks.len(), 5);
}

#[test]
fn wrong_cycle_length_fails_the_n_factor_check() {
    let mut cert = k12();
    let c = cert.n_factors[0].cycles.remove(0);
    let d = cert.n_factors[0].cycles.remove(0);
    // splice two 4-cycles into one 8-cycle with the same vertices
    let mut joined = c.vertices().to_vec();
    joined.extend_from_slice(d.vertices());
    cert.n_factors[0].cycles.push(Cycle::raw(joined));
    let rep = verify(&cert);
    assert!(!rep.check(CheckKind::NFactors).passed);
}

#[test]
fn json_round_trip_preserves_the_certificate() {
    let cert = solve(&Params::new(4, 1, NKind::TwoX).unwrap(), &SolveOptions::default()).unwrap();
    let s = cert.to_json().unwrap();
    let back = Certificate::from_json(&s).unwrap();
    assert_eq!(back, cert);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["schema"], "hwp-cert/1");
    assert_eq!(v["v"], 24);
    assert_eq!(v["n"], 8);
    assert_eq!(v["beta"], 10);
    assert_eq!(v["six_factor"][0][0], serde_json::json!([0, 0]));
}

#[test]
fn json_with_unknown_schema_is_rejected() {
    let mut v: serde_json::Value = serde_json::from_str(&k12().to_json().unwrap()).unwrap();
    v["schema"] = "hwp-cert/9".into();
    assert!(Certificate::from_json(&v.to_string()).is_err());
}

#[test]
fn json_out_of_range_vertex_is_reported_by_verify() {
    let mut v: serde_json::Value = serde_json::from_str(&k12().to_json().unwrap()).unwrap();
    v["one_factor"][0][0] = serde_json::json!([7, 0]);
    let cert = Certificate::from_json(&v.to_string()).unwrap();
    let rep = verify(&cert);
    assert!(!rep.check(CheckKind::Matching).passed);
    assert!(!rep.is_valid());
}

#[test]
fn oversized_header_is_refused_without_allocation() {
    let cert = Certificate {
        header: Header { v: 6_000_000, m: 6, n: 4, alpha: 1, beta: 2_999_998, parts: 1_000_000, part_size: 6 },
        six_factor: TwoFactor { cycle_length: 6, cycles: vec![] },
        n_factors: vec![],
        one_factor: OneFactor::default(),
    };
    let rep = verify(&cert);
    assert_eq!(rep.failed().count(), 5);
}

#[test]
fn two_factor_rejects_wrong_length_cycles() {
    assert!(TwoFactor::from_cycles(4, vec![vec![0, 1, 2]]).is_err());
}
