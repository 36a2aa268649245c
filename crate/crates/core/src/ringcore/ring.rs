//! The coefficient-ring contract shared by every layer of the Witt tower.
//!
//! Witt multiplication, Frobenius and the ghost inverse are all computed
//! through ghost coordinates, which only determine a Witt vector when the
//! coefficient ring has no additive torsion. [`GhostRing`] captures exactly
//! what that route needs: ring operations plus a partial division by positive
//! integers. Since `W_N(A)` satisfies the contract whenever `A` does, the
//! construction nests (`W(W(Z))` and beyond).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Zero;

/// The arbitrary-precision integers used throughout the crate.
pub type Integer = BigInt;

/// A commutative, torsion-free ring with identity.
///
/// Elements know enough about their ring to produce its zero and one
/// (`zero_like`, `one_like`); this is what lets `W_N(A)` carry its precision
/// inside the value instead of in a separate ring object.
pub trait GhostRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// `n * self`, the n-fold sum (negated for negative `n`).
    fn mul_int(&self, n: &Integer) -> Self;

    /// The unique `y` with `n * y == self`, or `None` if no such `y` exists.
    fn div_int(&self, n: u64) -> Option<Self>;

    /// Inner truncation precision when the ring is itself a truncated Witt
    /// ring. Used to reject nested vectors with mixed inner precision.
    fn inner_precision(&self) -> Option<usize> {
        None
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl GhostRing for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }

    fn one_like(&self) -> Self {
        BigInt::from(1)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn mul_int(&self, n: &Integer) -> Self {
        self * n
    }

    fn div_int(&self, n: u64) -> Option<Self> {
        assert!(n > 0, "division by zero");
        let (q, r) = self.div_rem(&BigInt::from(n));
        Zero::is_zero(&r).then_some(q)
    }
}

/// Residue of `x` modulo `n` as a string, for integrality error reports.
pub(crate) fn residue_repr<A: GhostRing>(x: &A) -> String {
    format!("{x:?}")
}
