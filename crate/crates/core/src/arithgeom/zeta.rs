use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::counts::point_counts;
use super::spec::{PointCounts, VarietySpec};
use crate::error::{Error, Result};
use crate::lambda::sigma_witt;
use crate::ringcore::{EnumerationBudget, Integer, TruncatedSeries};
use crate::witt::{ghost_inverse, GhostVector, WittVector};

fn inconsistent(e: Error) -> Error {
    match e {
        Error::Integrality {
            degree, residue, ..
        } => Error::InconsistentCounts {
            degree,
            reason: format!("Newton step leaves a non-integral coefficient ({residue})"),
        },
        other => other,
    }
}

/// `Z(X, t)` as the Witt vector with ghost coordinates `N_1, .., N_N`.
pub fn zeta_from_counts(c: &PointCounts, precision: usize) -> Result<WittVector<Integer>> {
    if precision == 0 {
        return Err(Error::InvalidArgument("precision must be positive".into()));
    }
    c.require_range("zeta at this precision", precision)?;
    let ghost = GhostVector::new(c.counts[..precision].to_vec())?;
    ghost_inverse(&ghost).map_err(inconsistent)
}

fn mobius(mut n: usize) -> i64 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Number of closed points of each degree `d = 1..=precision`,
/// `a_d = (1/d) sum_{e | d} mu(e) N_{d/e}`.
pub fn closed_point_counts(c: &PointCounts, precision: usize) -> Result<Vec<Integer>> {
    c.require_range("closed point counts", precision)?;
    (1..=precision)
        .map(|d| {
            let mut s = BigInt::zero();
            for e in (1..=d).filter(|e| d % e == 0) {
                match mobius(e) {
                    1 => s += c.get(d / e),
                    -1 => s -= c.get(d / e),
                    _ => {}
                }
            }
            let (a, rem) = s.div_rem(&BigInt::from(d));
            if !rem.is_zero() {
                return Err(Error::InconsistentCounts {
                    degree: d,
                    reason: format!("Moebius sum {s} is not divisible by {d}"),
                });
            }
            if a.is_negative() {
                return Err(Error::InconsistentCounts {
                    degree: d,
                    reason: format!("negative number of closed points ({a})"),
                });
            }
            Ok(a)
        })
        .collect()
}

/// `Z(X, t) = prod_d (1 - t^d)^{-a_d}` over closed points.
pub fn euler_product_zeta(c: &PointCounts, precision: usize) -> Result<WittVector<Integer>> {
    if precision == 0 {
        return Err(Error::InvalidArgument("precision must be positive".into()));
    }
    let a = closed_point_counts(c, precision)?;
    let mut acc = TruncatedSeries::one(&BigInt::one(), precision);
    for (i, ad) in a.iter().enumerate() {
        let d = i + 1;
        if ad.is_zero() {
            continue;
        }
        // (1 - t^d)^{-a} = sum_k C(a + k - 1, k) t^{dk}
        let mut factor = vec![BigInt::zero(); precision + 1];
        let mut binom = BigInt::one();
        for k in 0..=precision / d {
            if k > 0 {
                binom = binom * (ad + BigInt::from(k - 1)) / BigInt::from(k);
            }
            factor[d * k] = binom.clone();
        }
        acc = acc.mul(&TruncatedSeries::new(factor));
    }
    WittVector::new(acc)
}

/// Counts of `X` over `F_{q^r}`: `N'_m = N_{rm}`, with range `floor(R / r)`.
pub fn base_change(c: &PointCounts, r: usize) -> Result<PointCounts> {
    if r == 0 {
        return Err(Error::InvalidArgument("base change degree must be positive".into()));
    }
    c.require_range("base change", r)?;
    let q = u32::try_from(r)
        .ok()
        .and_then(|r| c.q.checked_pow(r))
        .ok_or_else(|| Error::InvalidArgument(format!("q^{r} overflows u64")))?;
    let counts = c.counts.iter().skip(r - 1).step_by(r).cloned().collect();
    PointCounts::new(q, counts)
}

/// `N_r(Sym^n X)` for `r = 1..=range`, the `n`-th Witt coefficient of the
/// vector with ghost coordinates `N_r, N_{2r}, .., N_{nr}`.
pub fn sym_power_counts(c: &PointCounts, n: usize, range: usize) -> Result<PointCounts> {
    if n == 0 {
        return Ok(PointCounts::point(c.q, range));
    }
    c.require_range(&format!("Sym^{n} counts to range {range}"), n * range)?;
    let counts = (1..=range)
        .map(|r| {
            let ghost = GhostVector::new((1..=n).map(|k| c.get(k * r).clone()).collect())?;
            let w = ghost_inverse(&ghost).map_err(inconsistent)?;
            Ok(w.coeff(n).clone())
        })
        .collect::<Result<Vec<_>>>()?;
    PointCounts::new(c.q, counts)
}

/// `Z(X, t)` of a spec to `t`-precision `precision`.
pub fn zeta(spec: &VarietySpec, precision: usize, budget: EnumerationBudget) -> Result<WittVector<Integer>> {
    zeta_from_counts(&point_counts(spec, precision, budget)?, precision)
}

/// `Z(Sym^n X, t)` to `t`-precision `precision`; needs counts to range
/// `n * precision`.
pub fn sym_zeta(
    spec: &VarietySpec,
    n: usize,
    precision: usize,
    budget: EnumerationBudget,
) -> Result<WittVector<Integer>> {
    spec.validate()?;
    let counts = if n == 0 {
        PointCounts::point(spec.q(), precision)
    } else {
        let c = point_counts(spec, n * precision, budget)?;
        sym_power_counts(&c, n, precision)?
    };
    zeta_from_counts(&counts, precision)
}

/// `sum_n Z(Sym^n X, t) u^n` in `W_M(W_N(Z))`, computed as `σ_u(Z(X, t))`
/// from the zeta function at precision `M * N`.
pub fn zeta_generating_series(
    spec: &VarietySpec,
    outer: usize,
    inner: usize,
    budget: EnumerationBudget,
) -> Result<WittVector<WittVector<Integer>>> {
    if outer == 0 || inner == 0 {
        return Err(Error::InvalidArgument("precisions must be positive".into()));
    }
    let z = zeta(spec, outer * inner, budget)?;
    sigma_witt(&z, outer)
}
