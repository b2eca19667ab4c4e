//! Exact computation of the map from polynomial representation rings of Levi
//! subgroups to the cohomology of flag varieties `G/P`, together with the
//! Schubert calculus it needs and the presented cohomology rings of even
//! orthogonal Grassmannians.

pub mod error;
pub mod linalg;
pub mod polyalg;
pub mod rootsys;
pub mod springer;
pub mod schubert;
pub mod invariants;
pub mod ximap;
pub mod ogring;
pub mod cli;

pub use error::{Error, Result};
