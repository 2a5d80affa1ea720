use crate::error::{HwpError, Result};

/// Circle-method 1-factorization of K_{2n}, relabelled so that the first
/// matching is {01, 23, 45, ...}.
pub fn one_factorization_k2n(n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if n == 0 {
        return Err(HwpError::InvalidInput("K_0 has no 1-factorization".into()));
    }
    let v = 2 * n;
    if n == 1 {
        return Ok(vec![vec![(0, 1)]]);
    }
    let r = v - 1;
    let raw: Vec<Vec<(usize, usize)>> = (0..r)
        .map(|round| {
            let mut f = vec![(round, v - 1)];
            f.extend((1..n).map(|k| ((round + k) % r, (round + r - k) % r)));
            f
        })
        .collect();
    let mut relabel = vec![0; v];
    for (i, &(a, b)) in raw[0].iter().enumerate() {
        relabel[a] = 2 * i;
        relabel[b] = 2 * i + 1;
    }
    Ok(raw
        .into_iter()
        .map(|f| {
            let mut g: Vec<_> = f
                .into_iter()
                .map(|(a, b)| {
                    let (p, q) = (relabel[a], relabel[b]);
                    (p.min(q), p.max(q))
                })
                .collect();
            g.sort_unstable();
            g
        })
        .collect())
}
