//! Vertex model, factors, certificates and the independent verifier.

mod json;
mod types;
mod verify;

pub use json::{CERT_SCHEMA, read_certificate, write_certificate};
pub use types::{
    canonicalize, gcd, Certificate, Cycle, Header, Layout, NKind, OneFactor, Params, PartedVertex,
    TwoFactor,
};
pub use verify::{edge_multiset, verify, CheckKind, CheckResult, VerificationReport};
