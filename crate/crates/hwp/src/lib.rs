//! Constructions and independent verification for the uniform Hamilton-Waterloo
//! problem HWP(6xt; 6, N; 1, 3xt-2) with N = 2x or N = 3x.
//!
//! Every construction pipeline returns a [`Certificate`] that has already passed
//! [`verify`]. Certificates serialize to a small JSON schema so they can be checked
//! by other tools.

pub mod constructions;
pub mod corekit;
pub mod diffgraph;
pub mod error;
pub mod mrsm;
pub mod providers;
pub mod rowexpand;
pub mod switches;

pub use constructions::{solve, SolveOptions};
pub use corekit::{
    canonicalize, edge_multiset, verify, Certificate, CheckKind, Cycle, Header, Layout, NKind,
    OneFactor, Params, PartedVertex, TwoFactor, VerificationReport,
};
pub use error::{HwpError, Result};
