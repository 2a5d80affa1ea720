//! Factorizations that the constructions consume but do not build themselves:
//! 1-factorizations of K_2n, and resolvable C_m-factorizations of complete
//! equipartite graphs (K_2x - F is K_(2:x)). Each comes from a built-in
//! construction, a bounded search, or an imported file, and is checked before use.

mod equipartite;
mod round_robin;
pub mod search;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{HwpError, Result};

pub use equipartite::{
    cm_factorization_k2n_minus_f, cx_factorization_k2x_minus_f, cx_factorization_k4x_minus_f, equipartite_admissible,
    resolvable_cm_factorization_equipartite, Provenance,
};
pub use round_robin::one_factorization_k2n;
pub use search::{search_factorization, SearchResult, SearchSpec, SearchStatus};

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const BUDGET_ENV: &str = "HWP_SEARCH_BUDGET";
pub const PROVIDER_SCHEMA: &str = "hwp-provider/1";

#[derive(Clone, Debug)]
pub struct ProviderOptions {
    /// Backtracking nodes allowed per search strategy.
    pub budget: u64,
    pub seed: u64,
    /// Factorizations supplied from files; used in preference to search when the shape matches.
    pub imports: Vec<Factorization>,
}

impl Default for ProviderOptions {
    fn default() -> Self {
        let budget = std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET);
        ProviderOptions { budget, seed: 0x5eed_2024, imports: Vec::new() }
    }
}

/// A resolvable C_m-factorization of K_(part_size : parts); vertex ids are
/// part * part_size + level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub parts: usize,
    pub part_size: usize,
    pub cycle_length: usize,
    pub factors: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    schema: String,
    parts: usize,
    part_size: usize,
    cycle_length: usize,
    factors: Vec<Vec<Vec<[usize; 2]>>>,
}

impl Factorization {
    pub fn vertex_count(&self) -> usize {
        self.parts * self.part_size
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.part_size, self.parts, self.cycle_length)
    }

    /// Exact check: every factor spans with m-cycles, and every cross-part edge
    /// is used exactly once overall.
    pub fn check(&self) -> Result<()> {
        let (h, u, m) = self.shape();
        let v = h * u;
        let bad = |msg: String| Err(HwpError::Internal(format!("factorization of K_({h}:{u}) into C_{m}: {msg}")));
        if h == 0 || u < 2 || m < 3 {
            return bad("degenerate shape".into());
        }
        let expected = h * (u - 1) / 2;
        if self.factors.len() != expected || h * (u - 1) % 2 != 0 {
            return bad(format!("{} factors, expected {expected}", self.factors.len()));
        }
        let mut seen = HashSet::new();
        for (i, f) in self.factors.iter().enumerate() {
            let mut hit = vec![false; v];
            for c in f {
                if c.len() != m {
                    return bad(format!("factor {i} has a cycle of length {}", c.len()));
                }
                for k in 0..m {
                    let (a, b) = (c[k], c[(k + 1) % m]);
                    if a >= v || b >= v {
                        return bad(format!("factor {i}: vertex out of range"));
                    }
                    if a / h == b / h {
                        return bad(format!("factor {i}: edge {a}-{b} inside a part"));
                    }
                    if !seen.insert((a.min(b), a.max(b))) {
                        return bad(format!("edge {a}-{b} used twice"));
                    }
                    if std::mem::replace(&mut hit[a], true) {
                        return bad(format!("factor {i}: vertex {a} covered twice"));
                    }
                }
            }
            if hit.iter().any(|&x| !x) {
                return bad(format!("factor {i} is not spanning"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let h = self.part_size;
        let w = Wire {
            schema: PROVIDER_SCHEMA.into(),
            parts: self.parts,
            part_size: h,
            cycle_length: self.cycle_length,
            factors: self
                .factors
                .iter()
                .map(|f| f.iter().map(|c| c.iter().map(|&id| [id / h, id % h]).collect()).collect())
                .collect(),
        };
        Ok(serde_json::to_string(&w)?)
    }

    /// Parses and checks; an imported object that is not an exact factorization is rejected.
    pub fn from_json(s: &str) -> Result<Self> {
        let w: Wire = serde_json::from_str(s)?;
        if w.schema != PROVIDER_SCHEMA {
            return Err(HwpError::InvalidInput(format!("unknown provider schema {:?}", w.schema)));
        }
        let h = w.part_size;
        let mut factors = Vec::new();
        for f in w.factors {
            let mut fc = Vec::new();
            for c in f {
                let mut cc = Vec::new();
                for [p, l] in c {
                    if p >= w.parts || l >= h {
                        return Err(HwpError::InvalidInput(format!("vertex [{p},{l}] outside K_({h}:{})", w.parts)));
                    }
                    cc.push(p * h + l);
                }
                fc.push(cc);
            }
            factors.push(fc);
        }
        let f = Factorization { parts: w.parts, part_size: h, cycle_length: w.cycle_length, factors };
        f.check().map_err(|e| HwpError::InvalidInput(format!("imported object rejected: {e}")))?;
        Ok(f)
    }
}

/// All edges of K_(h:u) in the standard labelling.
pub fn equipartite_edges(h: usize, u: usize) -> Vec<(usize, usize)> {
    let v = h * u;
    let mut e = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            if a / h != b / h {
                e.push((a, b));
            }
        }
    }
    e
}
