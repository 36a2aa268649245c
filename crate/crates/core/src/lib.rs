//! Exact arithmetic for truncated big Witt rings and zeta functions of
//! varieties over finite fields.
pub mod arithgeom;
pub mod checks;
pub mod cli;
pub mod error;
pub mod lambda;
pub mod ringcore;
pub mod witt;

pub use error::{Error, Result};
pub use ringcore::{GhostRing, IntPolynomial, Integer, TruncatedSeries};
pub use witt::{ghost_inverse, teichmuller, GhostVector, WittVector};
