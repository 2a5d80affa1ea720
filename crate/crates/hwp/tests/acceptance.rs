//! One line per acceptance criterion, with timings. Exits non-zero if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hwp::constructions::{fixtures, kernel_gcd2_even, solve_gcd2_odd_traced, solve_gcd3_x3, solve_x2};
use hwp::diffgraph::{g_delta_cycles, predict_profile};
use hwp::mrsm::{pair_unions, table_family, validate_table_family, walecki_2kx, walecki_kx, TableClass};
use hwp::providers::{resolvable_cm_factorization_equipartite, Provenance};
use hwp::switches::{apply_switch, edge, edges_of_cycles, SwitchSpec};
use hwp::{canonicalize, solve, verify, Certificate, CheckKind, NKind, Params, SolveOptions};

type Check = Result<String, String>;
type Listing = Vec<Vec<Vec<(usize, usize)>>>;
type Criterion = fn(&mut Emitted) -> Check;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

struct Emitted(Vec<(usize, usize, Certificate)>);

impl Emitted {
    fn solve(&mut self, x: usize, t: usize, kind: NKind) -> Result<Certificate, String> {
        let p = Params::new(x, t, kind).map_err(|e| e.to_string())?;
        let c = solve(&p, &SolveOptions::default()).map_err(|e| e.to_string())?;
        self.keep(x, t, &c)?;
        Ok(c)
    }

    fn keep(&mut self, x: usize, t: usize, c: &Certificate) -> Result<(), String> {
        let rep = verify(c);
        ensure!(rep.is_valid(), "HWP({}) does not verify:\n{rep}", c.header.v);
        self.0.push((x, t, c.clone()));
        Ok(())
    }
}

fn census(c: &Certificate, x: usize, t: usize, n: usize) -> Result<(), String> {
    std::panic::catch_unwind(|| {
        common::census(c, x, t, n);
        common::audit(c);
    })
    .map_err(|_| format!("census or edge audit failed for v = {}", c.header.v))
}

fn within(limit: Duration, took: Duration) -> Result<(), String> {
    ensure!(took <= limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

fn c1(em: &mut Emitted) -> Check {
    let c = solve_x2(1).map_err(|e| e.to_string())?;
    em.keep(2, 1, &c)?;
    census(&c, 2, 1, 4)?;
    ensure!(c.n_factors.len() == 4, "{} C4-factors", c.n_factors.len());
    let edges = common::raw_edge_counts(&c);
    ensure!(edges.len() == 66 && edges.values().all(|&k| k == 1), "edge multiset wrong");
    Ok("HWP(12;6,4;1,4): 1 C6-factor, 4 C4-factors, 1 matching, 66 edges once".into())
}

fn c2(em: &mut Emitted) -> Check {
    for t in [2, 3] {
        let s = Instant::now();
        let c = em.solve(2, t, NKind::TwoX)?;
        census(&c, 2, t, 4)?;
        within(Duration::from_secs(1), s.elapsed())?;
    }
    Ok("HWP(24;6,4;1,10) and HWP(36;6,4;1,16)".into())
}

fn c3(em: &mut Emitted) -> Check {
    for x in [4, 8] {
        let c = em.solve(x, 1, NKind::TwoX)?;
        census(&c, x, 1, 2 * x)?;
        let (class, tables) = table_family(x).map_err(|e| e.to_string())?;
        ensure!(class == TableClass::A, "x = {x} is not class a");
        let rep = validate_table_family(x, class, &tables);
        ensure!(rep.items.len() == 3 && rep.passed(), "x = {x}: {rep:?}");
    }
    Ok("HWP(24;6,8;1,10), HWP(48;6,16;1,22), table items 1-3 for x = 4, 8".into())
}

fn c4(em: &mut Emitted) -> Check {
    let (class, tables) = table_family(14).map_err(|e| e.to_string())?;
    ensure!(class == TableClass::B && tables[0].row(0).iter().all(|&e| e == 0), "no zero row in T_0");
    let k = kernel_gcd2_even(14).map_err(|e| e.to_string())?;
    ensure!(k.matching.len() == 42 && k.matching.iter().all(|&(a, b)| a % 6 == b % 6 && a / 6 != b / 6), "matching is not the zero-row leftover");
    let c = em.solve(14, 1, NKind::TwoX)?;
    census(&c, 14, 1, 28)?;
    Ok("HWP(84;6,28;1,40) with the zero row split into cycles and the matching".into())
}

fn c5(em: &mut Emitted) -> Check {
    let mut kinds = BTreeSet::new();
    let mut n = 0;
    for x in [5, 7] {
        let (c, trace) = solve_gcd2_odd_traced(x).map_err(|e| e.to_string())?;
        em.keep(x, 1, &c)?;
        census(&c, x, 1, 2 * x)?;
        for r in &trace {
            ensure!(r.expected == r.observed, "x = {x}, {}: expected {:?}, got {:?}", r.label, r.expected, r.observed);
            let k = if r.label.starts_with("A_") {
                "S1"
            } else if r.label.starts_with("B_") {
                "S2"
            } else {
                &r.label[..2]
            };
            kinds.insert(k.to_string());
        }
        n += trace.len();
    }
    ensure!(kinds.len() == 5, "switch kinds seen: {kinds:?}");
    Ok(format!("HWP(30;6,10;1,13), HWP(42;6,14;1,19); {n} switches, all as classified, kinds {kinds:?}"))
}

/// Factors F_1..F_9 of the K_18 listing, as lists of vertex tuples (closing repeat dropped).
fn parse_k18_listing(text: &str) -> Result<Listing, String> {
    let start = text.find("${F_1}=").ok_or("listing not found")?;
    let rest = &text[start..];
    let end = rest.find("Note that").unwrap_or(rest.len());
    let block = &rest[..end];
    let mut factors = Vec::new();
    for chunk in block.split("${F_").skip(1) {
        let mut groups = Vec::new();
        for g in chunk.split("\\{").skip(1) {
            let body = g.split("\\}").next().ok_or("unclosed group")?;
            let mut pts = Vec::new();
            for p in body.split('(').skip(1) {
                let inner = p.split(')').next().ok_or("unclosed pair")?;
                let nums: Vec<usize> = inner.split(',').map(|s| s.trim().parse().map_err(|_| format!("bad number in {inner:?}"))).collect::<Result<_, _>>()?;
                ensure!(nums.len() == 2, "pair {inner:?}");
                pts.push((nums[0], nums[1]));
            }
            if pts.len() > 2 && pts.first() == pts.last() {
                pts.pop();
            }
            groups.push(pts);
        }
        factors.push(groups);
    }
    Ok(factors)
}

fn c6(em: &mut Emitted) -> Check {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../paper.md");
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let listed = parse_k18_listing(&text)?;
    ensure!(listed.len() == 9, "{} factors listed", listed.len());
    for (i, f) in fixtures::K18_NINE_FACTORS.iter().enumerate() {
        let ours: Vec<Vec<(usize, usize)>> = f.iter().map(|c| c.to_vec()).collect();
        ensure!(ours == listed[i], "F_{} differs", i + 1);
    }
    let six: Vec<Vec<(usize, usize)>> = fixtures::K18_SIX_FACTOR.iter().map(|c| c.to_vec()).collect();
    ensure!(six == listed[7], "F_8 differs");
    let one: Vec<Vec<(usize, usize)>> = fixtures::K18_ONE_FACTOR.iter().map(|c| c.to_vec()).collect();
    ensure!(one == listed[8], "F_9 differs");

    let c = solve_gcd3_x3().map_err(|e| e.to_string())?;
    em.keep(3, 1, &c)?;
    census(&c, 3, 1, 9)?;
    let flat = |cy: &[(usize, usize)]| canonicalize(&cy.iter().map(|&(p, l)| p * 6 + l).collect::<Vec<_>>()).unwrap();
    let want: BTreeSet<Vec<usize>> = listed[..7].iter().flatten().map(|cy| flat(cy)).collect();
    let got: BTreeSet<Vec<usize>> = c.n_factors.iter().flat_map(|f| f.cycles.iter().map(|cy| cy.vertices().to_vec())).collect();
    ensure!(want == got, "certificate 9-cycles differ from the listing");
    let edges = common::raw_edge_counts(&c);
    ensure!(edges.len() == 153 && edges.values().all(|&k| k == 1), "{} edges", edges.len());
    Ok("HWP(18;6,9;1,7): F_1..F_9 match the listing verbatim; 153 edges once".into())
}

fn c7(em: &mut Emitted) -> Check {
    let (_, prov) = resolvable_cm_factorization_equipartite(2, 5, 5, &Default::default()).map_err(|e| e.to_string())?;
    let nodes = match prov {
        Provenance::Search { nodes, .. } => nodes,
        p => return Err(format!("provider came from {p:?}, not search")),
    };
    let c = em.solve(5, 1, NKind::ThreeX)?;
    census(&c, 5, 1, 15)?;
    Ok(format!("HWP(30;6,15;1,13); K_10 - F into C_5-factors found by search in {nodes} nodes"))
}

fn pair_counts(cycles: &[Vec<usize>]) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    for c in cycles {
        for i in 0..c.len() {
            *m.entry(edge(c[i], c[(i + 1) % c.len()])).or_insert(0) += 1;
        }
    }
    m
}

fn c8(_: &mut Emitted) -> Check {
    // (a)
    for x in (4..=24).step_by(2) {
        let m = pair_counts(&walecki_2kx(x).map_err(|e| e.to_string())?.cycles);
        ensure!(m.len() == x * (x - 1) / 2 && m.values().all(|&k| k == 2), "2K_{x} cover");
    }
    for x in (3..=25).step_by(2) {
        let m = pair_counts(&walecki_kx(x).map_err(|e| e.to_string())?.cycles);
        ensure!(m.len() == x * (x - 1) / 2 && m.values().all(|&k| k == 1), "K_{x} partition");
    }
    // (b)
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    let mut done = 0;
    while done < 500 {
        let g = if rng.random_bool(0.5) { 3 } else { 6 };
        let x = rng.random_range(2..=12);
        let ds: Vec<usize> = (0..x).map(|_| rng.random_range(0..g)).collect();
        if x == 2 && ds.iter().sum::<usize>() % g == 0 {
            continue;
        }
        let pc: Vec<usize> = (0..x).collect();
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..x {
            for j in 0..g {
                let (a, b) = (pc[k] * g + j, pc[(k + 1) % x] * g + (j + ds[k]) % g);
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
        }
        let mut seen = HashSet::new();
        let mut sizes = Vec::new();
        for &s in adj.keys() {
            if seen.insert(s) {
                let (mut st, mut n) = (vec![s], 0);
                while let Some(u) = st.pop() {
                    n += 1;
                    for &w in &adj[&u] {
                        if seen.insert(w) {
                            st.push(w);
                        }
                    }
                }
                sizes.push(n);
            }
        }
        let p = predict_profile(&ds, g).map_err(|e| e.to_string())?;
        ensure!(sizes.len() == p.count && sizes.iter().all(|&s| s == p.length), "g={g} diffs {ds:?}: {sizes:?} vs {p:?}");
        let built = g_delta_cycles(g, &pc, &ds).map_err(|e| e.to_string())?;
        ensure!(built.len() == p.count && built.iter().all(|c| c.len() == p.length), "built cycles for {ds:?}");
        done += 1;
    }
    // (c)
    let mut done = 0;
    while done < 200 {
        let n = rng.random_range(8..40);
        let mut vs: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            vs.swap(i, rng.random_range(0..=i));
        }
        let mut host = Vec::new();
        let mut i = 0;
        while n - i >= 6 && rng.random_bool(0.6) {
            let len = rng.random_range(3..=(n - i - 3).min(10));
            host.push(vs[i..i + len].to_vec());
            i += len;
        }
        host.push(vs[i..].to_vec());
        let he = edges_of_cycles(&host);
        let es: Vec<_> = {
            let mut v: Vec<_> = he.iter().copied().collect();
            v.sort_unstable();
            v
        };
        let k = rng.random_range(2..=3);
        let mut cyc = Vec::new();
        for _ in 0..k {
            let (a, b) = es[rng.random_range(0..es.len())];
            if rng.random_bool(0.5) { cyc.extend([a, b]) } else { cyc.extend([b, a]) }
        }
        let distinct: BTreeSet<_> = cyc.iter().collect();
        if distinct.len() != cyc.len() || (1..cyc.len()).step_by(2).any(|i| he.contains(&edge(cyc[i], cyc[(i + 1) % cyc.len()]))) {
            continue;
        }
        let out = apply_switch(&host, &SwitchSpec::new(cyc).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let ae = edges_of_cycles(&out);
        let mut deg = BTreeMap::new();
        for &(a, b) in &ae {
            *deg.entry(a).or_insert(0) += 1;
            *deg.entry(b).or_insert(0) += 1;
        }
        ensure!(ae.len() == he.len() && deg.len() == n && deg.values().all(|&d| d == 2), "switch broke 2-regularity");
        done += 1;
    }
    // (d)
    let mut fams = 0;
    for x in (4..=28).filter(|&x| TableClass::of(x).is_some()) {
        let (_, tables) = table_family(x).map_err(|e| e.to_string())?;
        let cover = pair_unions(&tables);
        ensure!(cover.len() == x * (x - 1) / 2, "x = {x}: {} pairs", cover.len());
        for (k, v) in cover {
            let mut v = v;
            v.sort_unstable();
            ensure!(v == (0..6).collect::<Vec<_>>(), "x = {x}, pair {k:?}: {v:?}");
        }
        fams += 1;
    }
    Ok(format!("Walecki x <= 25, 500 difference graphs, 200 switches, {fams} table families"))
}

fn c9(em: &mut Emitted) -> Check {
    // a few more families so every pipeline is represented
    for (x, t, k) in [(4, 2, NKind::TwoX), (10, 2, NKind::TwoX), (5, 2, NKind::ThreeX), (5, 3, NKind::ThreeX), (7, 1, NKind::ThreeX)] {
        em.solve(x, t, k)?;
    }
    for (x, t, c) in &em.0 {
        let h = &c.header;
        ensure!(h.beta == 3 * x * t - 2, "v = {}: beta {}", h.v, h.beta);
        ensure!(h.alpha + h.beta == (h.v - 2) / 2, "v = {}: alpha + beta", h.v);
        ensure!(c.n_factors.len() == h.beta, "v = {}: {} N-factors", h.v, c.n_factors.len());
        ensure!(verify(c).check(CheckKind::Arithmetic).passed, "v = {}: arithmetic check", h.v);
    }
    Ok(format!("beta = 3xt - 2 and alpha + beta = (v-2)/2 on all {} certificates", em.0.len()))
}

fn main() {
    let criteria: [(Criterion, Duration); 9] = [
        (c1, Duration::from_secs(1)),
        (c2, Duration::from_secs(2)),
        (c3, Duration::from_secs(5)),
        (c4, Duration::from_secs(10)),
        (c5, Duration::from_secs(10)),
        (c6, Duration::from_secs(1)),
        (c7, Duration::from_secs(30)),
        (c8, Duration::from_secs(60)),
        (c9, Duration::from_secs(60)),
    ];
    let mut em = Emitted(Vec::new());
    let mut failed = 0;
    for (i, (f, limit)) in criteria.iter().enumerate() {
        let s = Instant::now();
        let r = f(&mut em);
        let took = s.elapsed();
        let r = r.and_then(|msg| within(*limit, took).map(|_| msg));
        match r {
            Ok(msg) => println!("criterion {}: PASS ({:.3} s) {msg}", i + 1, took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL ({:.3} s) {msg}", i + 1, took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
