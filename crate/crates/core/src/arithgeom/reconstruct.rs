use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ringcore::poly::render_ascending;
use crate::ringcore::{IntPolynomial, Integer, TruncatedSeries};
use crate::witt::WittVector;

/// `num / den` in `Z[t]`, both with constant term 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        for (name, p) in [("numerator", &num), ("denominator", &den)] {
            if !p.coeff(0).is_one() {
                return Err(Error::InvalidArgument(format!(
                    "{name} must have constant term 1, got {p}"
                )));
            }
        }
        Ok(RationalFunction { num, den })
    }

    /// The power series `num / den` to `t`-precision `precision`.
    pub fn expand(&self, precision: usize) -> TruncatedSeries<Integer> {
        let series = |p: &IntPolynomial| {
            TruncatedSeries::from_prefix(p.coeffs().to_vec(), precision)
        };
        let inv = series(&self.den).inverse().expect("constant term 1");
        series(&self.num).mul(&inv)
    }

    /// Product form such as `1/((1-t)(1-2t)^2)`, available when numerator
    /// and denominator split into factors `1 - c t` with integer `c`.
    pub fn factored(&self) -> Option<String> {
        let num = linear_factors(&self.num)?;
        let den = linear_factors(&self.den)?;
        let num_str = if num.is_empty() { "1".to_string() } else { num };
        Some(if den.is_empty() {
            num_str
        } else if den.matches('(').count() == 1 && !den.contains('^') {
            format!("{num_str}/{den}")
        } else {
            format!("{num_str}/({den})")
        })
    }
}

/// `(1-ct)` factors grouped by `c` with exponents, or `None` when `p` does
/// not split completely.
fn linear_factors(p: &IntPolynomial) -> Option<String> {
    let mut roots = p.reciprocal_integer_roots();
    if roots.len() != p.degree().unwrap_or(0) {
        return None;
    }
    roots.sort_by(|a, b| a.abs().cmp(&b.abs()).then(a.cmp(b)));
    let mut out = String::new();
    let mut i = 0;
    while i < roots.len() {
        let c = &roots[i];
        let mult = roots[i..].iter().take_while(|x| *x == c).count();
        let term = match c {
            c if c.is_one() => "1-t".to_string(),
            c if *c == -BigInt::one() => "1+t".to_string(),
            c if c.is_negative() => format!("1+{}t", -c),
            c => format!("1-{c}t"),
        };
        out.push('(');
        out.push_str(&term);
        out.push(')');
        if mult > 1 {
            out.push_str(&format!("^{mult}"));
        }
        i += mult;
    }
    Some(out)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.factored() {
            Some(s) => f.write_str(&s),
            None => write!(
                f,
                "({})/({})",
                render_ascending(self.num.coeffs(), "t"),
                render_ascending(self.den.coeffs(), "t")
            ),
        }
    }
}

/// Solves `A x = b` over the rationals and returns one solution with free
/// variables set to zero, or `None` if the system is inconsistent.
fn solve(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> Option<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pr) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pr);
        let inv = rows[row][col].recip();
        for x in rows[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != row && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..=ncols {
                    let delta = &f * &rows[row][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if rows[row..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][ncols].clone();
    }
    Some(x)
}

/// Finds `num / den` with both degrees at most `dmax` whose expansion agrees
/// with `p` through `t^N`.
///
/// Denominator degrees are tried in increasing order and the first integral
/// solution wins. `N >= 2 dmax` is required, i.e. at least `2 dmax + 1`
/// coefficients counting the constant term.
pub fn rational_reconstruct(p: &WittVector<Integer>, dmax: usize) -> Result<RationalFunction> {
    let n = p.precision();
    if n < 2 * dmax {
        return Err(Error::precision(
            format!("rational reconstruction with dmax = {dmax}"),
            2 * dmax,
            n,
        ));
    }
    let coeffs = p.series().coeffs();
    let big = |k: usize| BigRational::from_integer(coeffs[k].clone());
    for e in 0..=dmax {
        // sum_{j=1}^{e} q_j p_{k-j} = -p_k for k = dmax+1..=N
        let rows: Vec<Vec<BigRational>> = (dmax + 1..=n)
            .map(|k| {
                let mut row: Vec<BigRational> =
                    (1..=e).map(|j| if j <= k { big(k - j) } else { BigRational::zero() }).collect();
                row.push(-big(k));
                row
            })
            .collect();
        let Some(sol) = (if rows.is_empty() { Some(vec![BigRational::zero(); e]) } else { solve(rows, e) }) else {
            continue;
        };
        if sol.iter().any(|x| !x.is_integer()) {
            continue;
        }
        let mut den = vec![BigInt::one()];
        den.extend(sol.into_iter().map(|x| x.to_integer()));
        let den = IntPolynomial::new(den);
        let prod = TruncatedSeries::from_prefix(den.coeffs().to_vec(), n).mul(p.series());
        let num = IntPolynomial::new(prod.coeffs()[..=dmax].to_vec());
        let rf = cancel_common_factors(RationalFunction::new(num, den)?);
        debug_assert_eq!(&rf.expand(n), p.series());
        return Ok(rf);
    }
    Err(Error::NoRationalSolution { dmax })
}

fn cancel_common_factors(mut rf: RationalFunction) -> RationalFunction {
    for c in rf.num.reciprocal_integer_roots() {
        if let Some(den) = rf.den.div_linear_factor(&c) {
            rf.den = den;
            rf.num = rf.num.div_linear_factor(&c).expect("root of the numerator");
        }
    }
    rf
}
