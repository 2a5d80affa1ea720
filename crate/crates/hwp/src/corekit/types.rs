use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HwpError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NKind {
    /// N = 2x
    TwoX,
    /// N = 3x
    ThreeX,
}

impl fmt::Display for NKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NKind::TwoX => write!(f, "2x"),
            NKind::ThreeX => write!(f, "3x"),
        }
    }
}

impl std::str::FromStr for NKind {
    type Err = HwpError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2x" | "2X" | "two-x" => Ok(NKind::TwoX),
            "3x" | "3X" | "three-x" => Ok(NKind::ThreeX),
            _ => Err(HwpError::InvalidInput(format!("unknown N kind {s:?}, expected 2x or 3x"))),
        }
    }
}

/// Parameters of HWP(6xt; 6, N; 1, 3xt-2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub x: usize,
    pub t: usize,
    pub n_kind: NKind,
}

impl Params {
    pub fn new(x: usize, t: usize, n_kind: NKind) -> Result<Self> {
        if x < 2 {
            return Err(HwpError::InvalidInput(format!("x must be at least 2, got {x}")));
        }
        if t < 1 {
            return Err(HwpError::InvalidInput("t must be at least 1".into()));
        }
        Ok(Params { x, t, n_kind })
    }

    pub fn v(&self) -> usize {
        6 * self.x * self.t
    }
    pub fn m(&self) -> usize {
        6
    }
    pub fn n(&self) -> usize {
        match self.n_kind {
            NKind::TwoX => 2 * self.x,
            NKind::ThreeX => 3 * self.x,
        }
    }
    pub fn alpha(&self) -> usize {
        1
    }
    pub fn beta(&self) -> usize {
        3 * self.x * self.t - 2
    }
    pub fn l(&self) -> usize {
        let n = self.n();
        6 * n / gcd(6, n)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HWP({};6,{};1,{})", self.v(), self.n(), self.beta())
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// How flat vertex ids split into parts: id = part * part_size + level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Layout {
    pub parts: usize,
    pub part_size: usize,
}

impl Layout {
    pub fn new(parts: usize, part_size: usize) -> Self {
        Layout { parts, part_size }
    }
    pub fn v(&self) -> usize {
        self.parts * self.part_size
    }
    #[inline]
    pub fn id(&self, part: usize, level: usize) -> usize {
        part * self.part_size + level % self.part_size
    }
    pub fn parted(&self, id: usize) -> PartedVertex {
        PartedVertex { part: id / self.part_size, level: id % self.part_size }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartedVertex {
    pub part: usize,
    pub level: usize,
}

impl PartedVertex {
    pub fn new(part: usize, level: usize) -> Self {
        PartedVertex { part, level }
    }
    pub fn flat(&self, part_size: usize) -> usize {
        self.part * part_size + self.level
    }
    pub fn from_flat(id: usize, part_size: usize) -> Self {
        PartedVertex { part: id / part_size, level: id % part_size }
    }
}

impl fmt::Display for PartedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.part, self.level)
    }
}

/// Rotate to the minimum id, then orient so the second vertex is the smaller neighbour.
pub fn canonicalize(vertices: &[usize]) -> Result<Vec<usize>> {
    let n = vertices.len();
    if n < 3 {
        return Err(HwpError::MalformedCycle(format!("length {n} < 3: {vertices:?}")));
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(HwpError::MalformedCycle(format!("vertex {} repeated in {vertices:?}", w[0])));
    }
    let (start, _) = vertices.iter().enumerate().min_by_key(|&(_, v)| *v).unwrap();
    let next = vertices[(start + 1) % n];
    let prev = vertices[(start + n - 1) % n];
    let out = if next < prev {
        (0..n).map(|k| vertices[(start + k) % n]).collect()
    } else {
        (0..n).map(|k| vertices[(start + n - k) % n]).collect()
    };
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validated, canonical cycle.
    pub fn new(vertices: &[usize]) -> Result<Self> {
        Ok(Cycle { vertices: canonicalize(vertices)? })
    }

    /// Unvalidated vertex list, as read from an untrusted certificate.
    pub fn raw(vertices: Vec<usize>) -> Self {
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
    pub fn len(&self) -> usize {
        self.vertices.len()
    }
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    pub cycle_length: usize,
    pub cycles: Vec<Cycle>,
}

impl TwoFactor {
    /// Canonicalizes every cycle and sorts the cycles. Spanning is left to the verifier.
    pub fn from_cycles(cycle_length: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut cs = cycles.iter().map(|c| Cycle::new(c)).collect::<Result<Vec<_>>>()?;
        if let Some(c) = cs.iter().find(|c| c.len() != cycle_length) {
            return Err(HwpError::Internal(format!(
                "cycle of length {} in a factor of {cycle_length}-cycles",
                c.len()
            )));
        }
        cs.sort();
        Ok(TwoFactor { cycle_length, cycles: cs })
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cycles.iter().flat_map(|c| c.edges())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OneFactor {
    pub edges: Vec<(usize, usize)>,
}

impl OneFactor {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut e: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        e.sort_unstable();
        OneFactor { edges: e }
    }
}

/// Numbers stated by a certificate. Kept raw so the verifier can reject bad arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Header {
    pub v: usize,
    pub m: usize,
    pub n: usize,
    pub alpha: usize,
    pub beta: usize,
    pub parts: usize,
    pub part_size: usize,
}

impl Header {
    pub fn for_params(p: &Params, layout: Layout) -> Self {
        Header {
            v: p.v(),
            m: p.m(),
            n: p.n(),
            alpha: p.alpha(),
            beta: p.beta(),
            parts: layout.parts,
            part_size: layout.part_size,
        }
    }
    pub fn layout(&self) -> Layout {
        Layout::new(self.parts, self.part_size)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub header: Header,
    pub six_factor: TwoFactor,
    pub n_factors: Vec<TwoFactor>,
    pub one_factor: OneFactor,
}

impl Certificate {
    pub fn layout(&self) -> Layout {
        self.header.layout()
    }
}
