//! Budgeted backtracking for resolvable cycle factorizations, optionally
//! restricted to factorizations invariant under a vertex permutation.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{HwpError, Result};

/// A graph to factor into 2-factors of `cycle_length`-cycles.
#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub cycle_length: usize,
    /// When set, search for base factors whose images under the powers of this
    /// permutation form the factorization. Every edge orbit must be full length.
    pub symmetry: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SearchStatus {
    Found,
    /// The whole space was explored without a solution.
    NoSolution,
    BudgetExhausted,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub status: SearchStatus,
    /// Factors as lists of cycles; empty unless found.
    pub factors: Vec<Vec<Vec<usize>>>,
    pub nodes: u64,
    pub restarts: u32,
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Step {
    Found,
    Fail,
    Budget,
}

const NONE: u32 = u32::MAX;

struct State<'a> {
    n: usize,
    m: usize,
    base_factors: usize,
    plain: bool,
    orbit: &'a [u32],
    order: Vec<Vec<usize>>,
    used: Vec<bool>,
    covered: Vec<bool>,
    path: Vec<usize>,
    current: Vec<Vec<usize>>,
    done: Vec<Vec<Vec<usize>>>,
    nodes: u64,
    budget: u64,
}

impl State<'_> {
    #[inline]
    fn orb(&self, u: usize, v: usize) -> u32 {
        self.orbit[u * self.n + v]
    }

    fn next_factor(&mut self) -> Step {
        if self.done.len() == self.base_factors {
            return Step::Found;
        }
        let saved = std::mem::replace(&mut self.covered, vec![false; self.n]);
        let r = self.next_cycle();
        self.covered = saved;
        r
    }

    fn dead_vertex(&self) -> bool {
        (0..self.n).any(|w| {
            !self.covered[w]
                && self.order[w]
                    .iter()
                    .filter(|&&v| !self.covered[v] && !self.used[self.orb(w, v) as usize])
                    .take(2)
                    .count()
                    < 2
        })
    }

    fn next_cycle(&mut self) -> Step {
        let Some(start) = (0..self.n).find(|&w| !self.covered[w]) else {
            let f = std::mem::take(&mut self.current);
            self.done.push(f);
            let r = self.next_factor();
            if r != Step::Found {
                self.current = self.done.pop().unwrap();
            }
            return r;
        };
        if !self.current.is_empty() && self.dead_vertex() {
            return Step::Fail;
        }
        self.path.push(start);
        self.covered[start] = true;
        let r = self.extend();
        self.covered[start] = false;
        self.path.pop();
        r
    }

    fn extend(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::Budget;
        }
        let u = *self.path.last().unwrap();
        let len = self.path.len();
        if len == self.m {
            let o = self.orb(u, self.path[0]);
            if o == NONE || self.used[o as usize] {
                return Step::Fail;
            }
            self.used[o as usize] = true;
            self.current.push(self.path.clone());
            let saved = std::mem::take(&mut self.path);
            let r = self.next_cycle();
            self.path = saved;
            if r != Step::Found {
                self.current.pop();
            }
            self.used[o as usize] = false;
            return r;
        }
        // factors are interchangeable: the factor being started takes the
        // smallest free edge at its first vertex
        let forced = if self.plain && len == 1 && self.current.is_empty() {
            self.order[u].iter().copied().filter(|&v| !self.used[self.orb(u, v) as usize]).min()
        } else {
            None
        };
        let cands = self.order[u].clone();
        for v in cands {
            if self.covered[v] || forced.is_some_and(|f| f != v) {
                continue;
            }
            if len == self.m - 1 && v < self.path[1] {
                continue;
            }
            let o = self.orb(u, v);
            if self.used[o as usize] {
                continue;
            }
            self.used[o as usize] = true;
            self.covered[v] = true;
            self.path.push(v);
            let r = self.extend();
            self.path.pop();
            self.covered[v] = false;
            self.used[o as usize] = false;
            if r != Step::Fail {
                return r;
            }
        }
        Step::Fail
    }
}

fn luby(mut i: u64) -> u64 {
    // 1 1 2 1 1 2 4 1 1 2 ...
    loop {
        let mut k = 1u32;
        while (1u64 << k) - 1 < i {
            k += 1;
        }
        if (1u64 << k) - 1 == i {
            return 1u64 << (k - 1);
        }
        i -= (1u64 << (k - 1)) - 1;
    }
}

fn perm_power(p: &[usize], r: usize) -> Vec<usize> {
    let mut q: Vec<usize> = (0..p.len()).collect();
    for _ in 0..r {
        q = q.iter().map(|&v| p[v]).collect();
    }
    q
}

/// Deterministic for fixed (spec, budget, seed). The first run keeps the natural
/// neighbour order; later runs shuffle it and follow a Luby restart schedule.
pub fn search_factorization(spec: &SearchSpec, budget: u64, seed: u64) -> Result<SearchResult> {
    let (n, m) = (spec.n, spec.cycle_length);
    if m < 3 || n == 0 || n % m != 0 {
        return Err(HwpError::InvalidInput(format!("cannot split {n} vertices into {m}-cycles")));
    }
    let mut adj = vec![Vec::new(); n];
    let mut orbit = vec![NONE; n * n];
    for &(a, b) in &spec.edges {
        if a >= n || b >= n || a == b {
            return Err(HwpError::InvalidInput(format!("bad edge ({a},{b})")));
        }
        if orbit[a * n + b] != NONE {
            return Err(HwpError::InvalidInput(format!("repeated edge ({a},{b})")));
        }
        orbit[a * n + b] = 0;
        orbit[b * n + a] = 0;
        adj[a].push(b);
        adj[b].push(a);
    }
    if adj.iter().any(|l| l.len() % 2 != 0) {
        return Err(HwpError::InvalidInput("graph has a vertex of odd degree".into()));
    }
    let (order, mut orbit_count) = match &spec.symmetry {
        None => (1usize, 0u32),
        Some(p) => {
            if p.len() != n {
                return Err(HwpError::InvalidInput("symmetry has the wrong size".into()));
            }
            let mut o = 1;
            while perm_power(p, o).iter().enumerate().any(|(i, &v)| i != v) {
                o += 1;
                if o > n * n {
                    return Err(HwpError::InvalidInput("symmetry is not a permutation".into()));
                }
            }
            (o, 0)
        }
    };
    // number the edge orbits
    for x in orbit.iter_mut() {
        if *x == 0 {
            *x = NONE - 1;
        }
    }
    for a in 0..n {
        for &b in &adj[a] {
            if orbit[a * n + b] != NONE - 1 {
                continue;
            }
            let id = orbit_count;
            orbit_count += 1;
            let (mut u, mut v) = (a, b);
            let mut size = 0;
            loop {
                if orbit[u * n + v] == id {
                    break;
                }
                if orbit[u * n + v] != NONE - 1 {
                    return Err(HwpError::InvalidInput("symmetry does not preserve the edge set".into()));
                }
                orbit[u * n + v] = id;
                orbit[v * n + u] = id;
                size += 1;
                if let Some(p) = &spec.symmetry {
                    (u, v) = (p[u], p[v]);
                } else {
                    break;
                }
            }
            if size != order {
                return Err(HwpError::InvalidInput(format!("edge orbit of size {size}, symmetry order {order}")));
            }
        }
    }
    let total_factors = spec.edges.len() / n;
    if spec.edges.len() % n != 0 || total_factors % order != 0 {
        return Err(HwpError::InvalidInput("edge count incompatible with the requested factor shape".into()));
    }
    let base_factors = total_factors / order;

    let unit = (budget / 64).max(20_000);
    let mut spent = 0u64;
    let mut run = 0u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut ord = adj.clone();
        if run > 0 {
            for l in ord.iter_mut() {
                l.shuffle(&mut rng);
            }
        }
        let run_budget = if run == 0 { unit.max(budget / 4) } else { unit * luby(run as u64) };
        let run_budget = run_budget.min(budget - spent);
        let mut st = State {
            n,
            m,
            base_factors,
            plain: spec.symmetry.is_none(),
            orbit: &orbit,
            order: ord,
            used: vec![false; orbit_count as usize],
            covered: vec![false; n],
            path: Vec::with_capacity(m),
            current: Vec::new(),
            done: Vec::new(),
            nodes: 0,
            budget: run_budget,
        };
        let r = st.next_factor();
        spent += st.nodes.min(run_budget);
        match r {
            Step::Found => {
                let factors = develop(&st.done, spec.symmetry.as_deref(), order);
                return Ok(SearchResult { status: SearchStatus::Found, factors, nodes: spent, restarts: run });
            }
            Step::Fail => {
                return Ok(SearchResult { status: SearchStatus::NoSolution, factors: vec![], nodes: spent, restarts: run })
            }
            Step::Budget => {}
        }
        run += 1;
        if spent >= budget {
            return Ok(SearchResult { status: SearchStatus::BudgetExhausted, factors: vec![], nodes: spent, restarts: run });
        }
    }
}

fn develop(base: &[Vec<Vec<usize>>], perm: Option<&[usize]>, order: usize) -> Vec<Vec<Vec<usize>>> {
    let Some(p) = perm else {
        return base.to_vec();
    };
    let mut out = Vec::new();
    for b in base {
        for r in 0..order {
            let q = perm_power(p, r);
            out.push(b.iter().map(|c| c.iter().map(|&v| q[v]).collect()).collect());
        }
    }
    out
}
