//! Exact arithmetic substrate: integers, integer polynomials, truncated
//! power series over a generic coefficient ring, and small finite fields.

pub mod field;
pub mod multipoly;
pub mod poly;
pub mod ring;
pub mod series;

pub use field::{find_irreducible, prime_power, FiniteField};
pub use multipoly::{count_affine_points, EnumerationBudget, MultiPoly, PolySystem};
pub use poly::IntPolynomial;
pub use ring::{GhostRing, Integer};
pub use series::TruncatedSeries;
