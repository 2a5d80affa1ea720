//! Pipelines that assemble full certificates, and the dispatcher that picks one.

pub mod fixtures;
mod gcd2_even;
mod gcd2_odd;
mod gcd3;
mod x2;

use serde::Serialize;

use crate::corekit::{verify, Certificate, Header, Layout, NKind, OneFactor, Params, TwoFactor};
use crate::diffgraph::g_delta_cycles;
use crate::error::{HwpError, Result};
use crate::providers::{Factorization, ProviderOptions};

pub use gcd2_even::{build_c2x_factorization_of_weighted_cycle, kernel_gcd2_even, solve_gcd2_even, zero_sum_rows_z3};
pub use gcd2_odd::{solve_gcd2_odd, solve_gcd2_odd_traced, SwitchRecord};
pub use gcd3::{first_factor_rows, remaining_factor_rows, solve_gcd3, solve_gcd3_grouped, solve_gcd3_t1, solve_gcd3_x3, weight3_rows, kernel_gcd3};
pub use x2::{kernel_k12, solve_x2};

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub providers: ProviderOptions,
}

/// Raw factors of HWP(v; 6, N; 1, β) on some layout, before canonicalization.
#[derive(Clone, Debug, Default)]
pub struct Kernel {
    pub parts: usize,
    pub part_size: usize,
    pub n_factors: Vec<Vec<Vec<usize>>>,
    pub six: Vec<Vec<usize>>,
    pub matching: Vec<(usize, usize)>,
}

impl Kernel {
    /// Copy with every vertex id passed through `f`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Kernel {
        let cyc = |c: &Vec<usize>| c.iter().map(|&v| f(v)).collect::<Vec<_>>();
        Kernel {
            parts: self.parts,
            part_size: self.part_size,
            n_factors: self.n_factors.iter().map(|fa| fa.iter().map(cyc).collect()).collect(),
            six: self.six.iter().map(cyc).collect(),
            matching: self.matching.iter().map(|&(a, b)| (f(a), f(b))).collect(),
        }
    }

    /// Kernel of a group of `self.parts` parts placed at part offset `first_part`.
    pub fn shifted(&self, first_part: usize) -> Kernel {
        let off = first_part * self.part_size;
        self.relabel(|v| v + off)
    }
}

/// `t` disjoint copies of `k` on consecutive groups of parts; the i-th factors
/// of the copies are merged into one spanning factor.
pub fn disjoint_copies(k: &Kernel, t: usize) -> Kernel {
    let mut all = Kernel { parts: k.parts * t, part_size: k.part_size, ..Default::default() };
    all.n_factors = vec![Vec::new(); k.n_factors.len()];
    for q in 0..t {
        let c = k.shifted(q * k.parts);
        for (dst, src) in all.n_factors.iter_mut().zip(c.n_factors) {
            dst.extend(src);
        }
        all.six.extend(c.six);
        all.matching.extend(c.matching);
    }
    all
}

pub(crate) fn assemble(params: &Params, layout: Layout, k: Kernel) -> Result<Certificate> {
    let n = params.n();
    let cert = Certificate {
        header: Header::for_params(params, layout),
        six_factor: TwoFactor::from_cycles(6, k.six)?,
        n_factors: k.n_factors.into_iter().map(|f| TwoFactor::from_cycles(n, f)).collect::<Result<_>>()?,
        one_factor: OneFactor::new(k.matching),
    };
    let rep = verify(&cert);
    if !rep.is_valid() {
        return Err(HwpError::Internal(format!("{params} failed verification:\n{rep}")));
    }
    Ok(cert)
}

/// Lift a C_a-factorization of K_(x:t) to K_(wx:t): every factor and every row of
/// `rows` (w rows over Z_w, one entry per cycle position) gives the factor whose
/// cycles are G[Δ] along each base cycle. Super vertex s becomes part s, with
/// vertices s*w + j.
pub fn weighting_compose(cx: &Factorization, rows: &[Vec<usize>], w: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    let a = cx.cycle_length;
    if rows.len() != w || rows.iter().any(|r| r.len() != a) {
        return Err(HwpError::Precondition(format!("need {w} rows of length {a}")));
    }
    let mut out = Vec::with_capacity(w * cx.factors.len());
    for f in &cx.factors {
        for row in rows {
            let mut fac = Vec::new();
            for c in f {
                fac.extend(g_delta_cycles(w, c, row)?);
            }
            out.push(fac);
        }
    }
    let (x, t) = (cx.part_size, cx.parts);
    debug_assert_eq!(out.len(), w * x * (t - 1) / 2);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    /// N = 4
    X2,
    /// N = 2x, x ≡ 2, 4 (mod 6), x > 2
    Gcd2Even,
    /// N = 2x, x ≡ 1, 5 (mod 6), t = 1
    Gcd2Odd,
    /// N = 9, t = 1
    Gcd3Fixture,
    /// N = 3x, x odd >= 5
    Gcd3,
}

/// Which pipeline handles `p`, or why none does.
pub fn route(p: &Params) -> Result<Route> {
    let (x, t) = (p.x, p.t);
    let unsupported = |why: String| Err(HwpError::Unsupported(format!("{p}: {why}")));
    match p.n_kind {
        NKind::TwoX => {
            if x == 2 {
                Ok(Route::X2)
            } else if x % 3 == 0 {
                unsupported(format!("gcd(6, N) = 6 (N = {}); this case is not constructed here", p.n()))
            } else if x % 2 == 0 {
                Ok(Route::Gcd2Even)
            } else if t == 1 {
                Ok(Route::Gcd2Odd)
            } else {
                unsupported("N = 2x with x odd is only constructed for t = 1".into())
            }
        }
        NKind::ThreeX => {
            if x % 2 == 0 {
                unsupported(format!("gcd(6, N) = 6 (N = {}); this case is not constructed here", p.n()))
            } else if x == 3 {
                if t == 1 {
                    Ok(Route::Gcd3Fixture)
                } else {
                    unsupported("N = 9 is only constructed for t = 1".into())
                }
            } else {
                Ok(Route::Gcd3)
            }
        }
    }
}

/// Build and verify a certificate for `p`.
pub fn solve(p: &Params, opts: &SolveOptions) -> Result<Certificate> {
    match route(p)? {
        Route::X2 => solve_x2(p.t),
        Route::Gcd2Even => solve_gcd2_even(p.x, p.t, opts),
        Route::Gcd2Odd => solve_gcd2_odd(p.x),
        Route::Gcd3Fixture => solve_gcd3_x3(),
        Route::Gcd3 => solve_gcd3(p.x, p.t, opts),
    }
}
