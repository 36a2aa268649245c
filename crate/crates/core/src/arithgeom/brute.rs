//! Symmetric-power point counts by direct enumeration of closed points.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::counts::elliptic_affine_points;
use super::spec::VarietySpec;
use crate::error::{Error, Result};
use crate::ringcore::field::{prime_power, Fe, FiniteField};
use crate::ringcore::{EnumerationBudget, Integer};

/// Rational points of `spec` over `F_{p^k}`, as coordinate tuples. The
/// point at infinity of an elliptic curve is the empty tuple.
fn points(spec: &VarietySpec, field: &FiniteField, budget: EnumerationBudget) -> Result<Vec<Vec<Fe>>> {
    match spec {
        VarietySpec::Elliptic { a, b, .. } => {
            let mut pts: Vec<Vec<Fe>> = elliptic_affine_points(field, *a, *b, budget)?
                .into_iter()
                .map(|(x, y)| vec![x, y])
                .collect();
            pts.push(Vec::new());
            Ok(pts)
        }
        VarietySpec::Equations { .. } => spec.poly_system()?.affine_points(field, budget),
        _ => Err(Error::InvalidSpec(
            "brute-force symmetric powers need an elliptic or equations spec".into(),
        )),
    }
}

/// Closed points of `X / F_{q^r}` of degree `d = 1..=n`.
///
/// A point of `X(F_{q^{rd}})` lies on a closed point of degree `d` exactly
/// when its orbit under `x -> x^{q^r}` has size `d`.
pub fn closed_point_degrees(
    spec: &VarietySpec,
    n: usize,
    r: usize,
    budget: EnumerationBudget,
) -> Result<Vec<Integer>> {
    spec.validate()?;
    let (p, k) = prime_power(spec.q()).expect("validated spec");
    let k = k as usize;
    let mut out = Vec::with_capacity(n);
    for d in 1..=n {
        let field = FiniteField::new(p, k * r * d)?;
        let step = (k * r) as u32;
        let mut exact = 0u64;
        for pt in points(spec, &field, budget)? {
            let mut image = pt.clone();
            let mut orbit = 0;
            loop {
                orbit += 1;
                for c in image.iter_mut() {
                    *c = field.frobenius(*c, step);
                }
                if image == pt {
                    break;
                }
            }
            if orbit == d {
                exact += 1;
            }
        }
        out.push(BigInt::from(exact / d as u64));
    }
    Ok(out)
}

/// `N_r(Sym^n X)`: the number of effective zero-cycles of degree `n` on
/// `X / F_{q^r}`, i.e. multisets of closed points with total degree `n`.
pub fn brute_sym_count(
    spec: &VarietySpec,
    n: usize,
    r: usize,
    budget: EnumerationBudget,
) -> Result<Integer> {
    if r == 0 {
        return Err(Error::InvalidArgument("extension degree must be positive".into()));
    }
    let closed = closed_point_degrees(spec, n, r, budget)?;
    // ways[m] = multisets of total degree m using degrees seen so far
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for (i, c) in closed.iter().enumerate() {
        let d = i + 1;
        let mut next = vec![BigInt::zero(); n + 1];
        for (base, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            // m copies from c points of degree d: C(c + m - 1, m)
            let mut choose = BigInt::one();
            let mut m = 0;
            while base + m * d <= n {
                if m > 0 {
                    choose = choose * (c + BigInt::from(m - 1)) / BigInt::from(m);
                }
                next[base + m * d] += w * &choose;
                m += 1;
            }
        }
        ways = next;
    }
    Ok(ways.swap_remove(n))
}
