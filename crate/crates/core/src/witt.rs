//! Truncated big Witt vectors `W_N(A)`.
//!
//! A Witt vector is a power series `1 + a_1 t + .. + a_N t^N` over `A`.
//! Witt addition is multiplication of series; Witt multiplication is the
//! unique functorial product with `[a] * [b] = [ab]` on Teichmüller elements
//! `[a] = (1 - a t)^-1`.
//!
//! Every coefficient ring here is torsion-free, so a Witt vector is
//! determined by its ghost coordinates `(b_1, .., b_N)`, read off from
//! `t P'/P = sum b_n t^n`. Multiplication and the Frobenius operators are
//! computed on that side: pointwise product, resp. `gh_m(F_n P) = gh_mn(P)`,
//! followed by the Newton recursion
//! `n a_n = b_n + a_1 b_{n-1} + .. + a_{n-1} b_1`
//! to return to coefficients.
//!
//! `W_N(A)` is itself a [`GhostRing`] (division by `n` is the series `n`th
//! root), so the construction nests: `WittVector<WittVector<Integer>>` is
//! `W_M(W_N(Z))`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ringcore::ring::{residue_repr, GhostRing, Integer};
use crate::ringcore::TruncatedSeries;

/// An element of `W_N(A)`. The constant coefficient is always the identity
/// of `A` and the precision `N` is at least 1.
///
/// Equality compares coefficients up to the smaller of the two precisions,
/// so vectors of different precision compare equal when one truncates to
/// the other.
#[derive(Clone)]
pub struct WittVector<A> {
    series: TruncatedSeries<A>,
}

/// Ghost coordinates `(b_1, .., b_N)` of a Witt vector. Indexing through
/// [`GhostVector::get`] is 1-based to match `gh_n`.
#[derive(Clone, PartialEq)]
pub struct GhostVector<A> {
    coords: Vec<A>,
}

fn check_uniform_inner<A: GhostRing>(items: &[A]) -> Result<()> {
    let first = items[0].inner_precision();
    if let Some(bad) = items.iter().find(|c| c.inner_precision() != first) {
        return Err(Error::InvalidArgument(format!(
            "mixed inner precision: {:?} vs {:?}",
            first,
            bad.inner_precision()
        )));
    }
    Ok(())
}

impl<A: GhostRing> WittVector<A> {
    /// Wraps a series with constant term 1 and precision at least 1.
    pub fn new(series: TruncatedSeries<A>) -> Result<Self> {
        if series.precision() == 0 {
            return Err(Error::precision("Witt vector", 1, 0));
        }
        if !series.has_unit_constant() {
            return Err(Error::NonUnitConstant(residue_repr(series.coeff(0))));
        }
        check_uniform_inner(series.coeffs())?;
        Ok(WittVector { series })
    }

    /// Builds `1 + a_1 t + .. + a_N t^N` from `[a_1, .., a_N]`; `one` is the
    /// identity of `A` and fixes the ring when the tail is empty.
    pub fn from_tail(one: A, tail: Vec<A>) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(one);
        coeffs.extend(tail);
        Self::new(TruncatedSeries::new(coeffs))
    }

    /// The additive identity, the series `1`.
    pub fn zero(like: &A, precision: usize) -> Self {
        assert!(precision >= 1, "Witt vectors need precision >= 1");
        WittVector {
            series: TruncatedSeries::one(like, precision),
        }
    }

    /// The multiplicative identity `[1] = (1 - t)^-1`.
    pub fn one(like: &A, precision: usize) -> Self {
        teichmuller(like.one_like(), precision)
    }

    pub fn precision(&self) -> usize {
        self.series.precision()
    }

    pub fn series(&self) -> &TruncatedSeries<A> {
        &self.series
    }

    /// Coefficient of `t^k`, `0 <= k <= N`.
    pub fn coeff(&self, k: usize) -> &A {
        self.series.coeff(k)
    }

    /// `[a_1, .., a_N]`.
    pub fn tail(&self) -> &[A] {
        &self.series.coeffs()[1..]
    }

    /// The identity of the coefficient ring.
    pub fn ring_one(&self) -> &A {
        self.series.coeff(0)
    }

    pub fn truncate(&self, precision: usize) -> Result<Self> {
        if precision == 0 || precision > self.precision() {
            return Err(Error::precision(
                "truncation",
                precision.max(1),
                self.precision(),
            ));
        }
        Ok(WittVector {
            series: self.series.truncate(precision),
        })
    }

    /// Witt sum: product of the underlying series at the common precision.
    pub fn witt_add(&self, rhs: &Self) -> Self {
        WittVector {
            series: self.series.mul(&rhs.series),
        }
    }

    /// Additive inverse: the inverse series.
    pub fn witt_neg(&self) -> Self {
        WittVector {
            series: self
                .series
                .inverse()
                .expect("Witt vectors have unit constant term"),
        }
    }

    pub fn witt_sub(&self, rhs: &Self) -> Self {
        self.witt_add(&rhs.witt_neg())
    }

    /// Witt product, computed as the Newton inverse of the pointwise product
    /// of ghost coordinates.
    ///
    /// Panics if the Newton recursion hits a non-divisible residue, which
    /// cannot happen for a torsion-free coefficient ring.
    pub fn witt_mul(&self, rhs: &Self) -> Self {
        let gh = self.ghost().mul(&rhs.ghost());
        ghost_inverse(&gh).expect("ghost product of Witt vectors is integral")
    }

    /// Ghost coordinates: degrees `1..=N` of `t P'(t) / P(t)`.
    pub fn ghost(&self) -> GhostVector<A> {
        let inv = self
            .series
            .inverse()
            .expect("Witt vectors have unit constant term");
        let log_deriv = self.series.euler_derivative().mul(&inv);
        GhostVector {
            coords: log_deriv.into_coeffs().into_iter().skip(1).collect(),
        }
    }

    /// Frobenius `F_n`, characterized by `gh_m(F_n P) = gh_{mn}(P)`. The
    /// result has precision `floor(N / n)`.
    pub fn frobenius(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("Frobenius index must be positive".into()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let out_prec = self.precision() / n;
        if out_prec == 0 {
            return Err(Error::precision(
                format!("Frobenius F_{n}"),
                n,
                self.precision(),
            ));
        }
        let gh = self.ghost();
        let sub = GhostVector {
            coords: (1..=out_prec).map(|m| gh.get(m * n).clone()).collect(),
        };
        Ok(ghost_inverse(&sub).expect("Frobenius of a Witt vector is integral"))
    }

    /// Pushes coefficients through a ring homomorphism `A -> B`.
    pub fn map<B: GhostRing>(&self, f: impl Fn(&A) -> B) -> WittVector<B> {
        WittVector {
            series: self.series.map(f),
        }
    }

    /// The `n`-fold Witt sum, negated for negative `n`: the series power.
    pub fn scale(&self, n: &Integer) -> Self {
        WittVector {
            series: self
                .series
                .pow(n)
                .expect("Witt vectors have unit constant term"),
        }
    }
}

/// The Teichmüller element `[a] = (1 - a t)^-1 = sum a^n t^n`.
pub fn teichmuller<A: GhostRing>(a: A, precision: usize) -> WittVector<A> {
    assert!(precision >= 1, "Witt vectors need precision >= 1");
    let mut coeffs = Vec::with_capacity(precision + 1);
    coeffs.push(a.one_like());
    for k in 1..=precision {
        let next = coeffs[k - 1].mul(&a);
        coeffs.push(next);
    }
    WittVector {
        series: TruncatedSeries::new(coeffs),
    }
}

/// Recovers the Witt vector with the given ghost coordinates through
/// `n a_n = b_n + a_1 b_{n-1} + .. + a_{n-1} b_1`.
///
/// Each step divides by `n` in `A`. A failure means `b` is not the ghost
/// vector of any element of `W_N(A)`; the error names the degree and the
/// non-divisible value.
pub fn ghost_inverse<A: GhostRing>(b: &GhostVector<A>) -> Result<WittVector<A>> {
    let n_max = b.len();
    let one = b.coords[0].one_like();
    let mut a: Vec<A> = Vec::with_capacity(n_max + 1);
    a.push(one);
    for n in 1..=n_max {
        let mut acc = b.get(n).clone();
        for i in 1..n {
            if a[i].is_zero() {
                continue;
            }
            acc = acc.add(&a[i].mul(b.get(n - i)));
        }
        let an = acc.div_int(n as u64).ok_or_else(|| Error::Integrality {
            degree: n,
            divisor: n as u64,
            residue: residue_repr(&acc),
        })?;
        a.push(an);
    }
    Ok(WittVector {
        series: TruncatedSeries::new(a),
    })
}

impl<A: GhostRing> GhostVector<A> {
    pub fn new(coords: Vec<A>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::precision("ghost vector", 1, 0));
        }
        check_uniform_inner(&coords)?;
        Ok(GhostVector { coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `gh_n`, 1-based.
    pub fn get(&self, n: usize) -> &A {
        &self.coords[n - 1]
    }

    pub fn coords(&self) -> &[A] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<A> {
        self.coords
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GhostVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(x, y)| x.add(y))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        GhostVector {
            coords: self.coords.iter().map(GhostRing::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        GhostVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(x, y)| x.mul(y))
                .collect(),
        }
    }
}

impl<A: GhostRing> PartialEq for WittVector<A> {
    fn eq(&self, other: &Self) -> bool {
        let n = self.precision().min(other.precision());
        self.series.coeffs()[..=n] == other.series.coeffs()[..=n]
    }
}

impl<A: GhostRing> fmt::Debug for WittVector<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{}{:?}", self.precision(), self.tail())
    }
}

impl<A: GhostRing> fmt::Debug for GhostVector<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gh{:?}", self.coords)
    }
}

impl<A: GhostRing> GhostRing for WittVector<A> {
    fn zero_like(&self) -> Self {
        WittVector::zero(self.ring_one(), self.precision())
    }

    fn one_like(&self) -> Self {
        WittVector::one(self.ring_one(), self.precision())
    }

    fn is_zero(&self) -> bool {
        self.tail().iter().all(GhostRing::is_zero)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.witt_add(rhs)
    }

    fn neg(&self) -> Self {
        self.witt_neg()
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.witt_mul(rhs)
    }

    fn mul_int(&self, n: &Integer) -> Self {
        self.scale(n)
    }

    /// The unique `Q` with `n Q = P`, i.e. `Q^n = P` as series.
    fn div_int(&self, n: u64) -> Option<Self> {
        self.series
            .nth_root(n)
            .ok()
            .map(|series| WittVector { series })
    }

    fn inner_precision(&self) -> Option<usize> {
        Some(self.precision())
    }
}

/// Convenience for `W_N(Z)`: the vector with tail `[a_1, .., a_N]`.
pub fn witt_from_ints(tail: &[i64]) -> WittVector<Integer> {
    WittVector::from_tail(
        BigInt::from(1),
        tail.iter().map(|&a| BigInt::from(a)).collect(),
    )
    .expect("nonempty tail")
}
