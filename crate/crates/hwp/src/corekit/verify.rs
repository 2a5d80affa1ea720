//! Certificate checker. Deliberately shares no cycle-building code with the
//! constructions: it only walks the vertex lists it is handed.

use std::collections::BTreeMap;
use std::fmt;

use super::types::{Certificate, Cycle, Layout};

const MAX_DETAILS: usize = 12;
/// Beyond this the dense edge table would not fit in memory.
const MAX_V: usize = 60_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// α+β = (v-2)/2, 6 | v, N | v, factor census
    Arithmetic,
    NFactors,
    SixFactor,
    Matching,
    EdgePartition,
}

impl CheckKind {
    pub fn label(&self) -> &'static str {
        match self {
            CheckKind::Arithmetic => "(a) parameter arithmetic",
            CheckKind::NFactors => "(b) N-cycle factors",
            CheckKind::SixFactor => "(c) 6-cycle factor",
            CheckKind::Matching => "(d) perfect matching",
            CheckKind::EdgePartition => "(e) edge partition of K_v",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub kind: CheckKind,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
    pub fn check(&self, kind: CheckKind) -> &CheckResult {
        self.checks.iter().find(|c| c.kind == kind).expect("every check is always run")
    }
    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.kind.label())?;
            for d in &c.details {
                writeln!(f, "    {d}")?;
            }
        }
        write!(f, "{}", if self.is_valid() { "certificate valid" } else { "certificate INVALID" })
    }
}

struct Collector {
    kind: CheckKind,
    details: Vec<String>,
    failures: usize,
}

impl Collector {
    fn new(kind: CheckKind) -> Self {
        Collector { kind, details: Vec::new(), failures: 0 }
    }
    fn fail(&mut self, msg: impl FnOnce() -> String) {
        if self.failures < MAX_DETAILS {
            self.details.push(msg());
        }
        self.failures += 1;
    }
    fn finish(mut self) -> CheckResult {
        if self.failures > MAX_DETAILS {
            self.details.push(format!("... {} more", self.failures - MAX_DETAILS));
        }
        CheckResult { kind: self.kind, passed: self.failures == 0, details: self.details }
    }
}

fn show(layout: Layout, id: usize) -> String {
    if layout.part_size == 0 {
        return format!("#{id}");
    }
    format!("({},{})", id / layout.part_size, id % layout.part_size)
}

/// Spanning disjoint union of cycles of length `len`.
fn check_cycle_factor(col: &mut Collector, name: &str, cycles: &[Cycle], len: usize, v: usize, layout: Layout) {
    let mut hits = vec![0u32; v];
    for (ci, c) in cycles.iter().enumerate() {
        let vs = c.vertices();
        if vs.len() != len {
            col.fail(|| format!("{name} cycle {ci}: length {} (expected {len})", vs.len()));
        }
        if vs.len() < 3 {
            col.fail(|| format!("{name} cycle {ci}: fewer than 3 vertices"));
        }
        for &u in vs {
            if u >= v {
                col.fail(|| format!("{name} cycle {ci}: vertex {} out of range", show(layout, u)));
            } else {
                hits[u] += 1;
            }
        }
    }
    for (u, &h) in hits.iter().enumerate() {
        match h {
            1 => {}
            0 => col.fail(|| format!("{name}: vertex {} not covered", show(layout, u))),
            _ => col.fail(|| format!("{name}: vertex {} covered {h} times", show(layout, u))),
        }
    }
}

/// Run all five checks; never panics and never short-circuits.
pub fn verify(cert: &Certificate) -> VerificationReport {
    let h = cert.header;
    let layout = h.layout();
    if h.v > MAX_V {
        let refuse = |kind| CheckResult {
            kind,
            passed: false,
            details: vec![format!("v = {} exceeds the checkable limit {MAX_V}", h.v)],
        };
        return VerificationReport {
            checks: [
                CheckKind::Arithmetic,
                CheckKind::NFactors,
                CheckKind::SixFactor,
                CheckKind::Matching,
                CheckKind::EdgePartition,
            ]
            .into_iter()
            .map(refuse)
            .collect(),
        };
    }
    let v = h.v;

    let mut a = Collector::new(CheckKind::Arithmetic);
    if v % 2 != 0 {
        a.fail(|| format!("v = {v} is odd"));
    }
    if v % 6 != 0 {
        a.fail(|| format!("6 does not divide v = {v}"));
    }
    if h.n < 3 || v % h.n != 0 {
        a.fail(|| format!("N = {} does not divide v = {v} or is below 3", h.n));
    }
    if h.m != 6 {
        a.fail(|| format!("M = {} (expected 6)", h.m));
    }
    if h.alpha != 1 {
        a.fail(|| format!("alpha = {} (expected 1)", h.alpha));
    }
    if 2 * (h.alpha + h.beta) + 2 != v {
        a.fail(|| format!("alpha + beta = {} but (v-2)/2 = {}", h.alpha + h.beta, (v as f64 - 2.0) / 2.0));
    }
    if v % 6 == 0 && v >= 6 && h.beta + 2 != v / 2 {
        a.fail(|| format!("beta = {} but 3xt-2 = {}", h.beta, (v / 2) as i64 - 2));
    }
    if layout.v() != v {
        a.fail(|| format!("parts * part_size = {} != v = {v}", layout.v()));
    }
    if cert.n_factors.len() != h.beta {
        a.fail(|| format!("{} N-factors supplied, beta = {}", cert.n_factors.len(), h.beta));
    }
    if cert.six_factor.cycle_length != 6 && !cert.six_factor.cycles.is_empty() {
        a.fail(|| format!("six factor declares cycle length {}", cert.six_factor.cycle_length));
    }
    // every vertex has degree v-1 = 2*(alpha + beta) + 1
    let edge_total = (h.alpha + h.beta) * v + v / 2;
    if v >= 1 && edge_total != v * (v - 1) / 2 {
        a.fail(|| format!("edge count {edge_total} != C(v,2) = {}", v * (v - 1) / 2));
    }
    let a = a.finish();

    let mut b = Collector::new(CheckKind::NFactors);
    for (i, f) in cert.n_factors.iter().enumerate() {
        if f.cycle_length != h.n {
            b.fail(|| format!("N-factor {i}: declared cycle length {} (expected {})", f.cycle_length, h.n));
        }
        check_cycle_factor(&mut b, &format!("N-factor {i}"), &f.cycles, h.n, v, layout);
    }
    let b = b.finish();

    let mut c = Collector::new(CheckKind::SixFactor);
    check_cycle_factor(&mut c, "6-factor", &cert.six_factor.cycles, 6, v, layout);
    let c = c.finish();

    let mut d = Collector::new(CheckKind::Matching);
    let mut hits = vec![0u32; v];
    for &(p, q) in &cert.one_factor.edges {
        if p == q {
            d.fail(|| format!("loop at {}", show(layout, p)));
        }
        for u in [p, q] {
            if u >= v {
                d.fail(|| format!("vertex {} out of range", show(layout, u)));
            } else {
                hits[u] += 1;
            }
        }
    }
    for (u, &k) in hits.iter().enumerate() {
        if k != 1 {
            d.fail(|| format!("vertex {} matched {k} times", show(layout, u)));
        }
    }
    let d = d.finish();

    let mut e = Collector::new(CheckKind::EdgePartition);
    // dense upper-triangular counter
    let tri = |p: usize, q: usize| -> usize {
        let (p, q) = if p < q { (p, q) } else { (q, p) };
        p * v - p * (p + 1) / 2 + (q - p - 1)
    };
    let mut count = vec![0u8; v * v.saturating_sub(1) / 2];
    let mut bump = |p: usize, q: usize, e: &mut Collector| {
        if p >= v || q >= v || p == q {
            e.fail(|| format!("unusable edge {}-{}", show(layout, p), show(layout, q)));
            return;
        }
        let k = tri(p, q);
        count[k] = count[k].saturating_add(1);
    };
    let all_cycles = cert.n_factors.iter().flat_map(|f| f.cycles.iter()).chain(cert.six_factor.cycles.iter());
    for cy in all_cycles {
        let vs = cy.vertices();
        let n = vs.len();
        for i in 0..n {
            bump(vs[i], vs[(i + 1) % n], &mut e);
        }
    }
    for &(p, q) in &cert.one_factor.edges {
        bump(p, q, &mut e);
    }
    for p in 0..v {
        for q in p + 1..v {
            match count[tri(p, q)] {
                1 => {}
                0 => e.fail(|| format!("edge {}-{} missing", show(layout, p), show(layout, q))),
                k => e.fail(|| format!("edge {}-{} used {k} times", show(layout, p), show(layout, q))),
            }
        }
    }
    let e = e.finish();

    VerificationReport { checks: vec![a, b, c, d, e] }
}

/// Every edge occurrence across all factors and the matching.
pub fn edge_multiset(cert: &Certificate) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    let cycles = cert.n_factors.iter().flat_map(|f| f.cycles.iter()).chain(cert.six_factor.cycles.iter());
    for cy in cycles {
        let vs = cy.vertices();
        let n = vs.len();
        for i in 0..n {
            let (p, q) = (vs[i], vs[(i + 1) % n]);
            *m.entry((p.min(q), p.max(q))).or_insert(0) += 1;
        }
    }
    for &(p, q) in &cert.one_factor.edges {
        *m.entry((p.min(q), p.max(q))).or_insert(0) += 1;
    }
    m
}
