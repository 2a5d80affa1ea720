//! Checks on certificates that do not go through the library's own verifier.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hwp::Certificate;

pub fn raw_edge_counts(cert: &Certificate) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    let mut add = |a: usize, b: usize| *m.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    let cycles = cert.six_factor.cycles.iter().chain(cert.n_factors.iter().flat_map(|f| f.cycles.iter()));
    for c in cycles {
        let vs = c.vertices();
        for i in 0..vs.len() {
            add(vs[i], vs[(i + 1) % vs.len()]);
        }
    }
    for &(a, b) in &cert.one_factor.edges {
        add(a, b);
    }
    m
}

/// One 6-cycle factor, 3xt-2 N-cycle factors and one perfect matching, each spanning.
pub fn census(cert: &Certificate, x: usize, t: usize, n: usize) {
    let h = &cert.header;
    let v = 6 * x * t;
    assert_eq!((h.v, h.m, h.n, h.alpha, h.beta), (v, 6, n, 1, 3 * x * t - 2));
    assert_eq!(h.parts * h.part_size, v);
    assert_eq!(cert.six_factor.cycles.len(), v / 6);
    assert!(cert.six_factor.cycles.iter().all(|c| c.vertices().len() == 6));
    assert_eq!(cert.n_factors.len(), 3 * x * t - 2);
    for f in &cert.n_factors {
        assert_eq!(f.cycles.len(), v / n);
        let mut seen = vec![false; v];
        for c in &f.cycles {
            assert_eq!(c.vertices().len(), n);
            for &u in c.vertices() {
                assert!(!std::mem::replace(&mut seen[u], true));
            }
        }
    }
    let mut seen = vec![false; v];
    for &(a, b) in &cert.one_factor.edges {
        assert!(!std::mem::replace(&mut seen[a], true));
        assert!(!std::mem::replace(&mut seen[b], true));
    }
    assert!(seen.iter().all(|&s| s));
    assert_eq!(h.alpha + h.beta, (v - 2) / 2);
}

/// Every pair of K_v once; per part pair every level difference g times; per part
/// every inside pair once.
pub fn audit(cert: &Certificate) {
    let v = cert.header.v;
    let g = cert.header.part_size;
    let counts = raw_edge_counts(cert);
    assert_eq!(counts.len(), v * (v - 1) / 2);
    assert!(counts.values().all(|&k| k == 1));
    let mut cross: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    let mut inside: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in counts.keys() {
        let (pa, pb) = (a / g, b / g);
        if pa == pb {
            *inside.entry(pa).or_insert(0) += 1;
        } else {
            // a < b implies pa < pb
            *cross.entry((pa, pb, (b % g + g - a % g) % g)).or_insert(0) += 1;
        }
    }
    let parts = cert.header.parts;
    assert_eq!(cross.len(), parts * (parts - 1) / 2 * g);
    assert!(cross.values().all(|&k| k == g));
    assert_eq!(inside.len(), parts);
    assert!(inside.values().all(|&k| k == g * (g - 1) / 2));
}
