//! Power series over a [`GhostRing`], truncated at a fixed degree.
//!
//! A series of precision `N` stores the coefficients of `t^0..=t^N`. Binary
//! operations work at the smaller of the two precisions; coefficients past
//! the recorded precision are never read.

use num_bigint::BigInt;

use super::ring::{residue_repr, GhostRing, Integer};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<A> {
    coeffs: Vec<A>,
}

impl<A: GhostRing> TruncatedSeries<A> {
    /// Builds a series from the coefficients of `t^0..=t^N`; precision is
    /// `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty: a series needs at least its constant term
    /// to know which ring it lives over.
    pub fn new(coeffs: Vec<A>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs a constant term");
        TruncatedSeries { coeffs }
    }

    /// Builds a series of the given precision from a prefix of coefficients,
    /// padding with zeros or cutting as needed.
    pub fn from_prefix(mut coeffs: Vec<A>, precision: usize) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs a constant term");
        let zero = coeffs[0].zero_like();
        coeffs.resize(precision + 1, zero);
        TruncatedSeries { coeffs }
    }

    /// The constant series `c` at precision `n`.
    pub fn constant(c: A, precision: usize) -> Self {
        Self::from_prefix(vec![c], precision)
    }

    /// The series `1` at precision `n`, over the ring of `like`.
    pub fn one(like: &A, precision: usize) -> Self {
        Self::constant(like.one_like(), precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<A> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &A {
        &self.coeffs[k]
    }

    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision <= self.precision());
        TruncatedSeries {
            coeffs: self.coeffs[..=precision].to_vec(),
        }
    }

    pub fn has_unit_constant(&self) -> bool {
        self.coeffs[0].is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        TruncatedSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(GhostRing::neg).collect(),
        }
    }

    /// Convolution truncated at the common precision.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if !self.has_unit_constant() {
            return Err(Error::NonUnitConstant(residue_repr(&self.coeffs[0])));
        }
        let n = self.precision();
        let mut out: Vec<A> = Vec::with_capacity(n + 1);
        out.push(self.coeffs[0].one_like());
        for k in 1..=n {
            // q_k = -sum_{j=1..k} p_j q_{k-j}
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out.push(acc.neg());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self^e` by repeated squaring; negative exponents go through the
    /// inverse and so need a unit constant term.
    pub fn pow(&self, e: &Integer) -> Result<Self> {
        use num_traits::Signed;
        let base = if e.is_negative() {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = e.abs();
        let mut base = base;
        let mut acc = Self::one(&self.coeffs[0], self.precision());
        let zero = BigInt::from(0);
        let two = BigInt::from(2);
        while e > zero {
            if &e % &two == BigInt::from(1) {
                acc = acc.mul(&base);
            }
            e /= &two;
            if e > zero {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// The `n`th root with constant term 1, computed degree by degree.
    ///
    /// With `q = p^(1/n)` and `p_0 = 1`, differentiating `q^n = p` gives
    /// `n k q_k = sum_{j=1..k} ((n+1) j - n k) p_j q_{k-j}`, so each step is
    /// one exact division by `n k` in the coefficient ring. A failed division
    /// means no root with coefficients in the ring exists.
    pub fn nth_root(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("root index must be positive".into()));
        }
        if !self.has_unit_constant() {
            return Err(Error::NonUnitConstant(residue_repr(&self.coeffs[0])));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let prec = self.precision();
        let nn = BigInt::from(n);
        let mut out: Vec<A> = Vec::with_capacity(prec + 1);
        out.push(self.coeffs[0].one_like());
        for k in 1..=prec {
            let kk = BigInt::from(k);
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let weight = (&nn + 1u32) * BigInt::from(j) - &nn * &kk;
                if weight == BigInt::from(0) {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]).mul_int(&weight));
            }
            let divisor = n * k as u64;
            let qk = acc.div_int(divisor).ok_or_else(|| Error::Integrality {
                degree: k,
                divisor: n,
                residue: residue_repr(&acc),
            })?;
            out.push(qk);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `t * d/dt`: scales the coefficient of `t^k` by `k`.
    pub fn euler_derivative(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.mul_int(&BigInt::from(k)))
                .collect(),
        }
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }

    /// Applies a ring map coefficient by coefficient.
    pub fn map<B: GhostRing>(&self, f: impl Fn(&A) -> B) -> TruncatedSeries<B> {
        TruncatedSeries::new(self.coeffs.iter().map(f).collect())
    }
}

impl<A: GhostRing> std::fmt::Debug for TruncatedSeries<A> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} + O(t^{})", self.coeffs, self.precision() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedSeries<BigInt> {
        TruncatedSeries::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn binomial_square() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, 1, 0])), s(&[1, 2, 1]));
    }

    #[test]
    fn identity_is_neutral() {
        let p = s(&[1, -4, 7, 2]);
        assert_eq!(p.mul(&s(&[1, 0, 0, 0])), p);
    }

    #[test]
    fn geometric_series_telescopes() {
        let geo = s(&[1, 2, 4, 8, 16]);
        assert_eq!(s(&[1, -2, 0, 0, 0]).mul(&geo), s(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn mixed_precision_truncates_to_min() {
        let p = s(&[1, 1, 1, 1]).mul(&s(&[1, 1]));
        assert_eq!(p.precision(), 1);
        assert_eq!(p, s(&[1, 2]));
    }

    #[test]
    fn inverse_of_one_minus_two_t() {
        assert_eq!(s(&[1, -2, 0, 0]).inverse().unwrap(), s(&[1, 2, 4, 8]));
        assert_eq!(s(&[1]).inverse().unwrap(), s(&[1]));
    }

    #[test]
    fn inverse_rejects_non_unit() {
        assert!(matches!(
            s(&[2, 1]).inverse(),
            Err(Error::NonUnitConstant(_))
        ));
    }

    #[test]
    fn square_root_of_binomial_square() {
        assert_eq!(s(&[1, 2, 1, 0, 0]).nth_root(2).unwrap(), s(&[1, 1, 0, 0, 0]));
        let p = s(&[1, 5, -3]);
        assert_eq!(p.nth_root(1).unwrap(), p);
    }

    #[test]
    fn nth_root_reports_integrality_failure() {
        // sqrt(1 + t) = 1 + t/2 - ...
        let err = s(&[1, 1, 0]).nth_root(2).unwrap_err();
        assert!(matches!(err, Error::Integrality { degree: 1, divisor: 2, .. }));
    }

    #[test]
    fn negative_power_is_inverse_power() {
        let p = s(&[1, -1, 0, 0]);
        assert_eq!(p.pow(&BigInt::from(-2)).unwrap(), s(&[1, 2, 3, 4]));
        assert_eq!(p.pow(&BigInt::from(0)).unwrap(), s(&[1, 0, 0, 0]));
    }
}
