use serde::Serialize;

use super::search::{search_factorization, SearchSpec, SearchStatus};
use super::{equipartite_edges, one_factorization_k2n, Factorization, ProviderOptions, BUDGET_ENV};
use crate::diffgraph::g_delta_cycles;
use crate::error::{HwpError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    BuiltIn(&'static str),
    Search { strategy: &'static str, nodes: u64 },
    Imported,
}

const EXCEPTIONS: [(usize, usize, usize); 4] = [(2, 3, 3), (6, 3, 3), (2, 6, 3), (6, 2, 6)];

/// Necessary and sufficient conditions for a resolvable C_m-factorization of K_(h:u).
pub fn equipartite_admissible(h: usize, u: usize, m: usize) -> Result<()> {
    let no = |why: String| Err(HwpError::Precondition(format!("K_({h}:{u}) has no resolvable C_{m}-factorization: {why}")));
    if m < 3 || u < 2 || h < 1 {
        return no("needs m >= 3, u >= 2, h >= 1".into());
    }
    if (h * u) % m != 0 {
        return no(format!("{m} does not divide {}", h * u));
    }
    if (h * (u - 1)) % 2 != 0 {
        return no("h(u-1) is odd".into());
    }
    if u == 2 && m % 2 != 0 {
        return no("a bipartite graph has no odd cycles".into());
    }
    if EXCEPTIONS.contains(&(h, u, m)) {
        return no("listed exception".into());
    }
    Ok(())
}

/// C_m-factorization of K_(h:u): import, then built-ins, then search.
pub fn resolvable_cm_factorization_equipartite(h: usize, u: usize, m: usize, opts: &ProviderOptions) -> Result<(Factorization, Provenance)> {
    equipartite_admissible(h, u, m)?;
    if let Some(f) = opts.imports.iter().find(|f| f.shape() == (h, u, m)) {
        f.check()?;
        return Ok((f.clone(), Provenance::Imported));
    }
    let (f, prov) = provide(h, u, m, opts)?;
    f.check()?;
    Ok((f, prov))
}

fn provide(h: usize, u: usize, m: usize, opts: &ProviderOptions) -> Result<(Factorization, Provenance)> {
    if m == h && h % 4 == 0 {
        return Ok((halves(h, u)?, Provenance::BuiltIn("split parts into halves, difference pairs (2i, -(2i+1))")));
    }
    if u > 2 && u % 2 == 0 && m % 2 == 0 && (2 * h) % m == 0 && (h, 2, m) != (6, 2, 6) {
        let (pair, prov) = resolvable_cm_factorization_equipartite(h, 2, m, opts)?;
        let f = product(h, u, m, &pair)?;
        let prov = match prov {
            Provenance::BuiltIn(_) => Provenance::BuiltIn("1-factorization of K_u times bipartite factorization"),
            p => p,
        };
        return Ok((f, prov));
    }
    let mut last_nodes = 0;
    let mut tried = Vec::new();
    for (name, spec) in strategies(h, u, m) {
        let r = search_factorization(&spec, opts.budget, opts.seed)?;
        tried.push(format!("{name}: {:?} after {} nodes", r.status, r.nodes));
        last_nodes += r.nodes;
        if r.status == SearchStatus::Found {
            let f = Factorization { parts: u, part_size: h, cycle_length: m, factors: r.factors };
            return Ok((f, Provenance::Search { strategy: name, nodes: last_nodes }));
        }
    }
    Err(HwpError::ProviderExhausted {
        what: format!("C_{m}-factorization of K_({h}:{u}) [{}]", tried.join("; ")),
        hint: format!("import one with --import <file> (schema {}) or raise {BUDGET_ENV}", super::PROVIDER_SCHEMA),
    })
}

/// m = h ≡ 0 (mod 4): halve every part, pair the halves by a 1-factorization of
/// K_2u without the matching that rejoins parts, and cover each K_{w,w} with
/// Hamilton cycles from difference pairs (2i, -(2i+1)).
fn halves(h: usize, u: usize) -> Result<Factorization> {
    let w = h / 2;
    let matchings = one_factorization_k2n(u)?;
    let mut factors = Vec::new();
    // matching 0 is {01, 23, ...}: the two halves of one part
    for mt in &matchings[1..] {
        for i in 0..w / 2 {
            let d = [2 * i % w, (w - (2 * i + 1) % w) % w];
            let mut f = Vec::new();
            for &(a, b) in mt {
                // group g at level j has flat id g*w + j, which is also its id in K_(h:u)
                f.extend(g_delta_cycles(w, &[a, b], &d)?);
            }
            factors.push(f);
        }
    }
    Ok(Factorization { parts: u, part_size: h, cycle_length: h, factors })
}

fn product(h: usize, u: usize, m: usize, pair: &Factorization) -> Result<Factorization> {
    let mut factors = Vec::new();
    for mt in one_factorization_k2n(u / 2)? {
        for pf in &pair.factors {
            let mut f = Vec::new();
            for &(p, q) in &mt {
                let lift = |id: usize| if id < h { p * h + id } else { q * h + id - h };
                f.extend(pf.iter().map(|c| c.iter().map(|&id| lift(id)).collect::<Vec<_>>()));
            }
            factors.push(f);
        }
    }
    Ok(Factorization { parts: u, part_size: h, cycle_length: m, factors })
}

fn strategies(h: usize, u: usize, m: usize) -> Vec<(&'static str, SearchSpec)> {
    let v = h * u;
    let edges = equipartite_edges(h, u);
    let mut out = Vec::new();
    if h == 2 && u >= 3 {
        out.push(("rotational Z_(u-1) with two fixed points", SearchSpec { n: v, edges: edges.clone(), cycle_length: m, symmetry: Some(cocktail_rotation(u)) }));
    } else if u % 2 == 1 && h > 1 && !(h % 4 == 2 && (u * (u - 1) / 2) % 2 == 1) {
        // a base factor uses every level difference once per part pair; around
        // each cycle they sum to 0, so h(h-1)/2 * u(u-1)/2 must be even
        let p = (0..v).map(|id| (id / h) * h + (id % h + 1) % h).collect();
        out.push(("rotational Z_h on levels", SearchSpec { n: v, edges: edges.clone(), cycle_length: m, symmetry: Some(p) }));
    } else if h % 2 == 0 && h > 2 {
        let p = (0..v).map(|id| (id / h) * h + (id % h + 2) % h).collect();
        out.push(("rotational Z_(h/2) on levels", SearchSpec { n: v, edges: edges.clone(), cycle_length: m, symmetry: Some(p) }));
    }
    out.push(("plain", SearchSpec { n: v, edges, cycle_length: m, symmetry: None }));
    out
}

/// Symmetry of K_(2:u) seen as K_2u minus a matching: Z_(u-1) acting on two
/// copies with two fixed points. For odd u the matching pairs i with i+(u-1)/2
/// inside a copy; for even u it pairs the two copies of i.
fn cocktail_rotation(u: usize) -> Vec<usize> {
    let n = u - 1;
    let half = n / 2;
    // natural (i, copy) -> K_(2:u) id
    let to_id = |i: usize, c: usize| -> usize {
        if u % 2 == 1 {
            let (part, level) = if i < half { (c * half + i, 0) } else { (c * half + i - half, 1) };
            2 * part + level
        } else {
            2 * i + c
        }
    };
    let mut p = vec![0; 2 * u];
    for c in 0..2 {
        for i in 0..n {
            p[to_id(i, c)] = to_id((i + 1) % n, c);
        }
    }
    p[2 * n] = 2 * n;
    p[2 * n + 1] = 2 * n + 1;
    p
}

/// x-1 C_x-factors of K_2x - F, F = {(2p, 2p+1)}, as a factorization of K_(2:x).
pub fn cx_factorization_k2x_minus_f(x: usize, opts: &ProviderOptions) -> Result<(Factorization, Vec<(usize, usize)>)> {
    if x < 3 {
        return Err(HwpError::Precondition(format!("C_{x}-factorization needs x >= 3")));
    }
    if x == 3 {
        return Err(HwpError::Precondition("K_6 - F has no C_3-factorization".into()));
    }
    let (f, _) = resolvable_cm_factorization_equipartite(2, x, x, opts)?;
    Ok((f, (0..x).map(|p| (2 * p, 2 * p + 1)).collect()))
}

/// n-1 C_m-factors of K_2n - F, F = {(2p, 2p+1)}, as a factorization of K_(2:n).
pub fn cm_factorization_k2n_minus_f(n: usize, m: usize, opts: &ProviderOptions) -> Result<(Factorization, Vec<(usize, usize)>)> {
    let (f, _) = resolvable_cm_factorization_equipartite(2, n, m, opts)?;
    Ok((f, (0..n).map(|p| (2 * p, 2 * p + 1)).collect()))
}

/// 2x-1 C_x-factors of K_4x - F, F = {(2p, 2p+1)}, as a factorization of K_(2:2x).
pub fn cx_factorization_k4x_minus_f(x: usize, opts: &ProviderOptions) -> Result<(Factorization, Vec<(usize, usize)>)> {
    if x < 3 {
        return Err(HwpError::Precondition(format!("C_{x}-factorization needs x >= 3")));
    }
    if x == 3 {
        return Err(HwpError::Precondition("K_12 - F has no C_3-factorization".into()));
    }
    let (f, _) = resolvable_cm_factorization_equipartite(2, 2 * x, x, opts)?;
    Ok((f, (0..2 * x).map(|p| (2 * p, 2 * p + 1)).collect()))
}
