//! Modified row-sum matrices over Z_6, the Walecki cycle families that index
//! their columns, and the fixed tables used to weight a cycle by 6.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{HwpError, Result};

pub const G6: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WaleckiFamily {
    pub x: usize,
    /// Even x: vertex x-1 plays the role of infinity.
    pub cycles: Vec<Vec<usize>>,
}

impl WaleckiFamily {
    pub fn infinity(&self) -> Option<usize> {
        (self.x % 2 == 0).then(|| self.x - 1)
    }
}

/// Hamilton cycles C_0..C_{x-2} doubly covering K_x, x even.
/// C_0 = (inf, 0, x-2, 1, x-3, ..., x/2, (x-2)/2), developed mod x-1 with inf fixed.
pub fn walecki_2kx(x: usize) -> Result<WaleckiFamily> {
    if x < 4 || x % 2 != 0 {
        return Err(HwpError::Precondition(format!("walecki_2kx needs even x >= 4, got {x}")));
    }
    let inf = x - 1;
    let n = x - 1;
    let mut base = vec![inf, 0];
    let (mut lo, mut hi) = (0, x - 2);
    let mut take_hi = true;
    while base.len() < x {
        if take_hi {
            base.push(hi);
            hi -= 1;
        } else {
            lo += 1;
            base.push(lo);
        }
        take_hi = !take_hi;
    }
    let cycles = (0..n)
        .map(|k| base.iter().map(|&c| if c == inf { inf } else { (c + k) % n }).collect())
        .collect();
    Ok(WaleckiFamily { x, cycles })
}

/// σ^r(u_j) for σ = (u_0)(u_1 ... u_{x-1}).
pub fn sigma_power(x: usize, j: usize, r: usize) -> usize {
    if j == 0 {
        0
    } else {
        (j - 1 + r) % (x - 1) + 1
    }
}

/// Hamilton decomposition H_1..H_{(x-1)/2} of K_x, x odd, with u_j = j.
pub fn walecki_kx(x: usize) -> Result<WaleckiFamily> {
    if x < 3 || x % 2 == 0 {
        return Err(HwpError::Precondition(format!("walecki_kx needs odd x >= 3, got {x}")));
    }
    let mut h1 = vec![0, 1];
    let (mut lo, mut hi) = (2, x - 1);
    let mut take_lo = true;
    while h1.len() < x {
        if take_lo {
            h1.push(lo);
            lo += 1;
        } else {
            h1.push(hi);
            hi -= 1;
        }
        take_lo = !take_lo;
    }
    let cycles = (0..(x - 1) / 2).map(|r| h1.iter().map(|&j| sigma_power(x, j, r)).collect()).collect();
    Ok(WaleckiFamily { x, cycles })
}

/// Column indices of T_0..T_{x-2}: T_j takes the edges of C_{j(x-2)/2} in order,
/// starting with the edge leaving infinity.
pub fn order_tables(fam: &WaleckiFamily) -> Result<Vec<Vec<(usize, usize)>>> {
    let x = fam.x;
    if fam.infinity().is_none() || fam.cycles.len() != x - 1 {
        return Err(HwpError::Precondition("order_tables needs the even-x family".into()));
    }
    let step = (x - 2) / 2;
    Ok((0..x - 1)
        .map(|j| {
            let c = &fam.cycles[(j * step) % (x - 1)];
            (0..x).map(|l| (c[l], c[(l + 1) % x])).collect()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mrsm {
    pub g: usize,
    pub row_count: usize,
    pub x: usize,
    /// entries[r][l]
    pub entries: Vec<Vec<usize>>,
    /// Ordered part pair for each column; empty when the table is not yet placed on a cycle.
    pub column_index: Vec<(usize, usize)>,
    /// Integer (not reduced) left-to-right row sums.
    pub row_sums: Vec<usize>,
}

impl Mrsm {
    pub fn new(g: usize, entries: Vec<Vec<usize>>, column_index: Vec<(usize, usize)>) -> Result<Self> {
        let x = entries.first().map_or(0, |r| r.len());
        if entries.iter().any(|r| r.len() != x) {
            return Err(HwpError::InvalidInput("ragged matrix".into()));
        }
        if !column_index.is_empty() && column_index.len() != x {
            return Err(HwpError::InvalidInput("column index length differs from column count".into()));
        }
        if entries.iter().flatten().any(|&e| e >= g) {
            return Err(HwpError::InvalidInput(format!("entry outside Z_{g}")));
        }
        let row_sums = entries.iter().map(|r| r.iter().sum()).collect();
        Ok(Mrsm { g, row_count: entries.len(), x, entries, column_index, row_sums })
    }

    fn from_columns(cols: &[[usize; 3]], column_index: Vec<(usize, usize)>) -> Result<Self> {
        let entries = (0..3).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        Mrsm::new(G6, entries, column_index)
    }

    pub fn column(&self, l: usize) -> Vec<usize> {
        self.entries.iter().map(|r| r[l]).collect()
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.entries[r]
    }

    pub fn row_residues(&self) -> Vec<usize> {
        self.row_sums.iter().map(|s| s % self.g).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableClass {
    /// x ≡ 4, 8 (mod 12)
    A,
    /// x ≡ 2, 10 (mod 12)
    B,
}

impl TableClass {
    pub fn of(x: usize) -> Option<Self> {
        match x % 12 {
            4 | 8 => Some(TableClass::A),
            2 | 10 => Some(TableClass::B),
            _ => None,
        }
    }
}

fn add3(c: [usize; 3], d: [i64; 3]) -> [usize; 3] {
    let f = |a: usize, b: i64| (a as i64 + b).rem_euclid(6) as usize;
    [f(c[0], d[0]), f(c[1], d[1]), f(c[2], d[2])]
}

/// The last-table rewrite of two consecutive columns: adds (1,1,-2) and (1,-2,1).
pub fn step5_rewrite(first: [usize; 3], second: [usize; 3]) -> ([usize; 3], [usize; 3]) {
    (add3(first, [1, 1, -2]), add3(second, [1, -2, 1]))
}

fn fill_tables(x: usize, class: TableClass) -> Result<Vec<Mrsm>> {
    let index = order_tables(&walecki_2kx(x)?)?;
    // 1-based columns, slot 0 unused
    let mut tables: Vec<Vec<[usize; 3]>> = Vec::with_capacity(x - 1);
    let mut t0 = vec![[0; 3]; x + 1];
    t0[1] = [0, 2, 5];
    for i in (2..x - 1).step_by(2) {
        t0[i] = [0, 1, 2];
    }
    for i in (3..x).step_by(2) {
        t0[i] = [0, 2, 1];
    }
    t0[x] = match class {
        TableClass::A => [3, 4, 1],
        TableClass::B => [0, 1, 4],
    };
    tables.push(t0);
    const THREE: [i64; 3] = [3, 3, 3];
    for k in 1..=x - 2 {
        let p = &tables[k - 1];
        let last = k == x - 2;
        let mut t = vec![[0; 3]; x + 1];
        t[1] = add3(p[x], if last { [3, 0, 0] } else { THREE });
        for i in (3..x).step_by(2) {
            t[i] = add3(p[x + 1 - i], THREE);
        }
        for i in (2..x - 1).step_by(2) {
            // class b shifts the even middle columns of the last table as well;
            // without it the pairing with T_{x-3} fails
            t[i] = if last && class == TableClass::B { add3(p[x + 1 - i], THREE) } else { p[x + 1 - i] };
        }
        t[x] = match (class, last, k) {
            (TableClass::A, true, _) => add3(p[1], [3, 4, 4]),
            (TableClass::A, false, _) => p[1],
            (TableClass::B, true, _) => add3(p[1], [0, 1, 1]),
            (TableClass::B, false, 1) => add3(p[1], [0, 3, 3]),
            (TableClass::B, false, _) => add3(p[1], THREE),
        };
        if last {
            let (a, b) = step5_rewrite(t[2], t[3]);
            t[2] = a;
            t[3] = b;
        }
        tables.push(t);
    }
    tables.into_iter().zip(index).map(|(t, idx)| Mrsm::from_columns(&t[1..], idx)).collect()
}

/// x-1 three-row tables for x ≡ 4, 8 (mod 12).
pub fn fill_tables_a(x: usize) -> Result<Vec<Mrsm>> {
    if TableClass::of(x) != Some(TableClass::A) {
        return Err(HwpError::Precondition(format!("fill_tables_a needs x ≡ 4, 8 (mod 12), got {x}")));
    }
    fill_tables(x, TableClass::A)
}

/// x-1 three-row tables for x ≡ 2, 10 (mod 12), x >= 10.
pub fn fill_tables_b(x: usize) -> Result<Vec<Mrsm>> {
    if TableClass::of(x) != Some(TableClass::B) || x < 10 {
        return Err(HwpError::Precondition(format!("fill_tables_b needs x ≡ 2, 10 (mod 12) and x >= 10, got {x}")));
    }
    fill_tables(x, TableClass::B)
}

/// Whichever family applies to x.
pub fn table_family(x: usize) -> Result<(TableClass, Vec<Mrsm>)> {
    match TableClass::of(x) {
        Some(TableClass::A) => Ok((TableClass::A, fill_tables_a(x)?)),
        Some(TableClass::B) => Ok((TableClass::B, fill_tables_b(x)?)),
        None => Err(HwpError::Precondition(format!("no table family for x = {x}"))),
    }
}

/// Six-row table on a 2-cycle; every row sums to 3 mod 6.
pub fn table_a() -> Mrsm {
    let e = vec![vec![0, 3], vec![3, 0], vec![2, 1], vec![1, 2], vec![4, 5], vec![5, 4]];
    Mrsm::new(G6, e, vec![]).expect("fixed table")
}

/// Six-row table on a 4-cycle; every row sums to 3 mod 6.
pub fn table_b() -> Mrsm {
    let e = vec![
        vec![0, 0, 0, 3],
        vec![3, 3, 3, 0],
        vec![2, 2, 4, 1],
        vec![4, 1, 2, 2],
        vec![5, 4, 1, 5],
        vec![1, 5, 5, 4],
    ];
    Mrsm::new(G6, e, vec![]).expect("fixed table")
}

/// Six-row table with x columns, all columns permutations of Z_6 and all row sums ≡ 3.
/// x = 6s+2: s copies of B then s+1 of A; x = 6s+4: s copies of A then s+1 of B.
pub fn concat_tables_ab(x: usize) -> Result<Mrsm> {
    if x < 2 || !matches!(x % 6, 2 | 4) {
        return Err(HwpError::Precondition(format!("concat_tables_ab needs x ≡ 2, 4 (mod 6), got {x}")));
    }
    let s = x / 6;
    let (a, b) = (table_a(), table_b());
    let blocks: Vec<&Mrsm> = if x % 6 == 2 {
        std::iter::repeat_n(&b, s).chain(std::iter::repeat_n(&a, s + 1)).collect()
    } else {
        std::iter::repeat_n(&a, s).chain(std::iter::repeat_n(&b, s + 1)).collect()
    };
    let entries = (0..6).map(|r| blocks.iter().flat_map(|m| m.entries[r].iter().copied()).collect()).collect();
    Mrsm::new(G6, entries, vec![])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ColumnRule {
    /// Entries within each column are distinct.
    Distinct,
    /// Each column is a permutation of Z_g.
    FullGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RowSumRule {
    Any,
    AllCongruent(usize),
    /// All rows but one are ≡ r; the remaining row is even.
    AllButOneEven(usize),
    /// All rows but one are ≡ r; the remaining row is all zeros.
    AllButOneZeroRow(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MrsmExpectations {
    pub columns: ColumnRule,
    pub row_sums: RowSumRule,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct MrsmReport {
    pub items: Vec<(String, bool, String)>,
}

impl MrsmReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.1)
    }
    fn push(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.items.push((name.into(), ok, detail.into()));
    }
    pub fn item(&self, name: &str) -> Option<bool> {
        self.items.iter().find(|i| i.0 == name).map(|i| i.1)
    }
}

fn row_rule_holds(m: &Mrsm, rule: RowSumRule) -> bool {
    let res = m.row_residues();
    let odd_one_out = |r: usize, ok: &dyn Fn(usize) -> bool| {
        let off: Vec<usize> = (0..m.row_count).filter(|&i| res[i] != r).collect();
        off.len() == 1 && ok(off[0])
    };
    match rule {
        RowSumRule::Any => true,
        RowSumRule::AllCongruent(r) => res.iter().all(|&s| s == r % m.g),
        RowSumRule::AllButOneEven(r) => odd_one_out(r, &|i| res[i] % 2 == 0),
        RowSumRule::AllButOneZeroRow(r) => odd_one_out(r, &|i| m.entries[i].iter().all(|&e| e == 0)),
    }
}

pub fn validate_mrsm(m: &Mrsm, exp: MrsmExpectations) -> MrsmReport {
    let mut rep = MrsmReport::default();
    let sums_ok = m.entries.iter().zip(&m.row_sums).all(|(r, &s)| r.iter().sum::<usize>() == s);
    rep.push("row sums consistent", sums_ok, "");
    let bad_cols: Vec<usize> = (0..m.x)
        .filter(|&l| {
            let mut c = m.column(l);
            c.sort_unstable();
            let distinct = c.windows(2).all(|w| w[0] != w[1]);
            match exp.columns {
                ColumnRule::Distinct => !distinct,
                ColumnRule::FullGroup => c != (0..m.g).collect::<Vec<_>>(),
            }
        })
        .collect();
    rep.push("columns", bad_cols.is_empty(), format!("bad columns {bad_cols:?}"));
    rep.push(
        "row sums",
        row_rule_holds(m, exp.row_sums),
        format!("residues {:?}, rule {:?}", m.row_residues(), exp.row_sums),
    );
    rep
}

/// For each unordered column-index pair {u,v}, collects entries as differences
/// from min(u,v) to max(u,v) (negating when the column runs the other way).
pub fn pair_unions(tables: &[Mrsm]) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut cover: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for t in tables {
        for (l, &(u, v)) in t.column_index.iter().enumerate() {
            let col = t.column(l);
            let (key, vals): (_, Vec<usize>) = if u < v {
                ((u, v), col)
            } else {
                ((v, u), col.iter().map(|&d| (t.g - d) % t.g).collect())
            };
            cover.entry(key).or_default().extend(vals);
        }
    }
    cover
}

/// The numbered properties of a table family, checked programmatically.
pub fn validate_table_family(x: usize, class: TableClass, tables: &[Mrsm]) -> MrsmReport {
    let mut rep = MrsmReport::default();
    if tables.len() + 1 != x || x < 4 {
        rep.push("family size", false, format!("{} tables for x = {x}", tables.len()));
        return rep;
    }
    let check = |range: std::ops::Range<usize>, rule| {
        let bad: Vec<usize> = range
            .filter(|&j| !validate_mrsm(&tables[j], MrsmExpectations { columns: ColumnRule::Distinct, row_sums: rule }).passed())
            .collect();
        (bad.is_empty(), format!("failing tables {bad:?}"))
    };
    match class {
        TableClass::A => {
            let (ok, d) = check(0..x - 2, RowSumRule::AllCongruent(3));
            rep.push("item 1: T_0..T_{x-3} rows ≡ 3", ok, d);
            let (ok, d) = check(x - 2..x - 1, RowSumRule::AllButOneEven(3));
            rep.push("item 2: T_{x-2} two rows ≡ 3, one even", ok, d);
        }
        TableClass::B => {
            let (ok, d) = check(0..1, RowSumRule::AllButOneZeroRow(3));
            rep.push("item 1: T_0 two rows ≡ 3, one zero row", ok, d);
            let (ok, d) = check(1..x - 2, RowSumRule::AllCongruent(3));
            rep.push("item 2: T_1..T_{x-3} rows ≡ 3", ok, d);
            let (ok, d) = check(x - 2..x - 1, RowSumRule::AllButOneEven(3));
            rep.push("item 3: T_{x-2} two rows ≡ 3, one even", ok, d);
        }
    }
    let cover = pair_unions(tables);
    let full: Vec<usize> = (0..G6).collect();
    let bad: Vec<_> = cover
        .iter()
        .filter(|(_, vals)| {
            let mut s = (*vals).clone();
            s.sort_unstable();
            s != full
        })
        .map(|(k, _)| *k)
        .collect();
    let all_pairs = cover.len() == x * (x - 1) / 2;
    let name = match class {
        TableClass::A => "item 3: column-pair unions are Z_6",
        TableClass::B => "item 4: column-pair unions are Z_6",
    };
    rep.push(name, bad.is_empty() && all_pairs, format!("{} pairs, bad {bad:?}", cover.len()));
    rep
}
