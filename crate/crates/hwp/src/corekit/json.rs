use serde::{Deserialize, Serialize};

use super::types::{Certificate, Cycle, Header, OneFactor, TwoFactor};
use crate::error::{HwpError, Result};

pub const CERT_SCHEMA: &str = "hwp-cert/1";

type Pv = [usize; 2];

#[derive(Serialize, Deserialize)]
struct Wire {
    #[serde(default = "default_schema")]
    schema: String,
    v: usize,
    m: usize,
    n: usize,
    alpha: usize,
    beta: usize,
    parts: usize,
    part_size: usize,
    six_factor: Vec<Vec<Pv>>,
    n_factors: Vec<Vec<Vec<Pv>>>,
    one_factor: Vec<[Pv; 2]>,
}

fn default_schema() -> String {
    CERT_SCHEMA.to_string()
}

impl Certificate {
    pub fn to_json(&self) -> Result<String> {
        let ps = self.header.part_size.max(1);
        let pv = |id: usize| [id / ps, id % ps];
        let cyc = |c: &Cycle| c.vertices().iter().map(|&u| pv(u)).collect::<Vec<_>>();
        let w = Wire {
            schema: CERT_SCHEMA.into(),
            v: self.header.v,
            m: self.header.m,
            n: self.header.n,
            alpha: self.header.alpha,
            beta: self.header.beta,
            parts: self.header.parts,
            part_size: self.header.part_size,
            six_factor: self.six_factor.cycles.iter().map(cyc).collect(),
            n_factors: self.n_factors.iter().map(|f| f.cycles.iter().map(cyc).collect()).collect(),
            one_factor: self.one_factor.edges.iter().map(|&(a, b)| [pv(a), pv(b)]).collect(),
        };
        Ok(serde_json::to_string(&w)?)
    }

    /// Parses structure only; no mathematical property is checked here.
    /// Coordinates outside the declared layout are mapped to an id >= v so that
    /// `verify` reports them.
    pub fn from_json(s: &str) -> Result<Self> {
        let w: Wire = serde_json::from_str(s)?;
        if w.schema != CERT_SCHEMA {
            return Err(HwpError::InvalidInput(format!("unknown schema {:?}", w.schema)));
        }
        let v = w.parts * w.part_size;
        let flat = |p: Pv| {
            if p[0] < w.parts && p[1] < w.part_size {
                p[0] * w.part_size + p[1]
            } else {
                v
            }
        };
        let cycle = |c: &Vec<Pv>| Cycle::raw(c.iter().map(|&p| flat(p)).collect());
        Ok(Certificate {
            header: Header {
                v: w.v,
                m: w.m,
                n: w.n,
                alpha: w.alpha,
                beta: w.beta,
                parts: w.parts,
                part_size: w.part_size,
            },
            six_factor: TwoFactor { cycle_length: 6, cycles: w.six_factor.iter().map(cycle).collect() },
            n_factors: w
                .n_factors
                .iter()
                .map(|f| TwoFactor { cycle_length: w.n, cycles: f.iter().map(cycle).collect() })
                .collect(),
            one_factor: OneFactor {
                edges: w.one_factor.iter().map(|e| (flat(e[0]), flat(e[1]))).collect(),
            },
        })
    }
}

pub fn write_certificate(cert: &Certificate, path: &std::path::Path) -> Result<()> {
    std::fs::write(path, cert.to_json()?)?;
    Ok(())
}

pub fn read_certificate(path: &std::path::Path) -> Result<Certificate> {
    Certificate::from_json(&std::fs::read_to_string(path)?)
}
