//! Point counts `N_r = #X(F_{q^r})` for each kind of [`VarietySpec`].

use num_bigint::BigInt;
use num_traits::One;

use super::spec::{PointCounts, VarietySpec};
use crate::error::{Error, Result};
use crate::ringcore::field::{Fe, FiniteField};
use crate::ringcore::{count_affine_points, EnumerationBudget, Integer};

/// `N_1, .., N_R` for `spec`.
///
/// Affine and projective space use the closed forms `q^{mr}` and
/// `1 + q^r + .. + q^{mr}`. Elliptic curves count `N_1` by enumeration and
/// continue with the trace recursion `s_r = a s_{r-1} - q s_{r-2}`,
/// `N_r = q^r + BigInt::one() - s_r`. Products multiply pointwise. Equations are
/// enumerated over each `F_{p^r}`.
pub fn point_counts(
    spec: &VarietySpec,
    range: usize,
    budget: EnumerationBudget,
) -> Result<PointCounts> {
    spec.validate()?;
    let q = spec.q();
    let counts = match spec {
        VarietySpec::Affine { dim, q } => (1..=range)
            .map(|r| BigInt::from(*q).pow(*dim * r as u32))
            .collect(),
        VarietySpec::Projective { dim, q } => (1..=range)
            .map(|r| {
                let qr = BigInt::from(*q).pow(r as u32);
                (0..=*dim).map(|i| qr.pow(i)).sum()
            })
            .collect(),
        VarietySpec::Elliptic { p, a, b } => {
            let n1 = elliptic_point_count(*p, *a, *b, 1, budget)?;
            let counts = elliptic_counts_from_n1(*p, &n1, range);
            check_weil_bound(*p, &counts)?;
            counts
        }
        VarietySpec::Product { factors } => {
            let mut acc = vec![BigInt::one(); range];
            for f in factors {
                let c = point_counts(f, range, budget)?;
                for (x, y) in acc.iter_mut().zip(c.counts) {
                    *x *= y;
                }
            }
            acc
        }
        VarietySpec::Counts { counts, .. } => {
            if counts.len() < range {
                return Err(Error::precision("supplied point counts", range, counts.len()));
            }
            counts[..range].to_vec()
        }
        VarietySpec::Equations { p, .. } => {
            let system = spec.poly_system()?;
            (1..=range)
                .map(|r| {
                    let field = FiniteField::new(*p, r)?;
                    count_affine_points(&system, &field, budget)
                })
                .collect::<Result<_>>()?
        }
    };
    PointCounts::new(q, counts)
}

/// Continues `N_1` to `N_1..N_R` using the Frobenius trace recursion.
pub fn elliptic_counts_from_n1(p: u64, n1: &Integer, range: usize) -> Vec<Integer> {
    let q = BigInt::from(p);
    let trace = &q + BigInt::one() - n1;
    // s_0 = 2, s_1 = a, s_r = a s_{r-1} - q s_{r-2}
    let mut prev = BigInt::from(2);
    let mut cur = trace.clone();
    let mut qr = q.clone();
    let mut out = Vec::with_capacity(range);
    for _ in 0..range {
        out.push(&qr + BigInt::one() - &cur);
        let next = &trace * &cur - &q * &prev;
        prev = cur;
        cur = next;
        qr *= &q;
    }
    out
}

/// Validates `|q^r + BigInt::one() - N_r| <= 2 q^{r/2}` for every supplied `r`.
pub fn check_weil_bound(q: u64, counts: &[Integer]) -> Result<()> {
    let q = BigInt::from(q);
    let mut qr = q.clone();
    for (i, n) in counts.iter().enumerate() {
        let s = &qr + BigInt::one() - n;
        if &s * &s > BigInt::from(4) * &qr {
            return Err(Error::InconsistentCounts {
                degree: i + 1,
                reason: format!("N = {n} violates the Weil bound"),
            });
        }
        qr *= &q;
    }
    Ok(())
}

/// Affine points of `y^2 = x^3 + a x + b` over `F_{p^k}` (the single point
/// at infinity is not listed).
///
/// Scans `x` against a table of square roots, so the work is linear in the
/// field size; that size is what the budget is checked against.
pub fn elliptic_affine_points(
    field: &FiniteField,
    a: i64,
    b: i64,
    budget: EnumerationBudget,
) -> Result<Vec<(Fe, Fe)>> {
    budget.check(field.size() as u128)?;
    let size = field.size() as usize;
    const NONE: Fe = Fe::MAX;
    let mut sqrt = vec![NONE; size];
    for y in field.elements() {
        sqrt[field.mul(y, y) as usize] = y;
    }
    let (a, b) = (field.from_int(a), field.from_int(b));
    let mut out = Vec::new();
    for x in field.elements() {
        let x2 = field.mul(x, x);
        let rhs = field.add(field.add(field.mul(x2, x), field.mul(a, x)), b);
        let y = sqrt[rhs as usize];
        if y == NONE {
            continue;
        }
        out.push((x, y));
        let minus_y = field.neg(y);
        if minus_y != y {
            out.push((x, minus_y));
        }
    }
    Ok(out)
}

/// `#E(F_{p^k})` by enumeration, including the point at infinity.
pub fn elliptic_point_count(
    p: u64,
    a: i64,
    b: i64,
    k: usize,
    budget: EnumerationBudget,
) -> Result<Integer> {
    VarietySpec::elliptic(p, a, b)?;
    let field = FiniteField::new(p, k)?;
    let n = elliptic_affine_points(&field, a, b, budget)?.len();
    Ok(BigInt::from(n) + 1)
}

/// Exhaustive counts of `spec` over `F_{q^r}` for `r = 1..=range`, with no
/// recursion or closed form. Only enumerable specs are supported.
pub fn enumerated_point_counts(
    spec: &VarietySpec,
    range: usize,
    budget: EnumerationBudget,
) -> Result<PointCounts> {
    spec.validate()?;
    let counts = match spec {
        VarietySpec::Elliptic { p, a, b } => (1..=range)
            .map(|r| elliptic_point_count(*p, *a, *b, r, budget))
            .collect::<Result<Vec<_>>>()?,
        VarietySpec::Equations { .. } => return point_counts(spec, range, budget),
        VarietySpec::Product { factors } => {
            let mut acc = vec![BigInt::one(); range];
            for f in factors {
                let c = enumerated_point_counts(f, range, budget)?;
                for (x, y) in acc.iter_mut().zip(c.counts) {
                    *x *= y;
                }
            }
            acc
        }
        _ => {
            return Err(Error::InvalidSpec(
                "only elliptic, equations and their products are enumerable".into(),
            ))
        }
    };
    PointCounts::new(spec.q(), counts)
}
