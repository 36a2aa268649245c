//! Zeta functions of varieties over finite fields.
//!
//! Point counts come from closed forms, the elliptic trace recursion or
//! enumeration. A zeta function is the Witt vector whose ghost coordinates
//! are those counts, which makes products, base change and symmetric powers
//! ring operations on `W(Z)`.

mod brute;
mod counts;
mod reconstruct;
mod spec;
mod zeta;

pub use brute::{brute_sym_count, closed_point_degrees};
pub use counts::{
    check_weil_bound, elliptic_affine_points, elliptic_counts_from_n1, elliptic_point_count,
    enumerated_point_counts, point_counts,
};
pub use reconstruct::{rational_reconstruct, RationalFunction};
pub use spec::{PointCounts, VarietySpec};
pub(crate) use spec::int_list;
pub use zeta::{
    base_change, closed_point_counts, euler_product_zeta, sym_power_counts, sym_zeta, zeta,
    zeta_from_counts, zeta_generating_series,
};
