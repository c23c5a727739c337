//! Exact computation and verification of Euler characteristics of
//! triangulated manifolds, driven entirely by rational arithmetic.
//!
//! The centerpiece is the even-face formula: for a semi-Eulerian complex of
//! even dimension d, χ = Σ β_n·f_n, where the β coefficients come from
//! Bernoulli numbers and vanish at odd indices, so the sum only sees
//! even-dimensional face counts. The crate verifies this formula, the
//! Dehn-Sommerville relations, the reflection identity behind them, and the
//! boundary extension, all as exact identities on a generated corpus of
//! triangulations.

pub mod coefficients;
pub mod error;
pub mod exactmath;

pub use error::{Error, Result};
