//! Dense integer polynomials, `Z[z]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::ring::{self, Integer};

/// A polynomial with integer coefficients, stored in ascending degree order
/// with no trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<Integer>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * z^k`.
    pub fn monomial(c: Integer, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `f(z^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k > 0);
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `f(-z)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Exact division by `(1 - c z)`. Returns `None` if it leaves a remainder.
    pub fn div_linear_factor(&self, c: &Integer) -> Option<Self> {
        // f = (1 - c z) g  =>  g_k = f_k + c g_{k-1}
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        let mut g = Vec::with_capacity(d);
        let mut prev = BigInt::zero();
        for k in 0..d {
            let gk = &self.coeffs[k] + c * &prev;
            g.push(gk.clone());
            prev = gk;
        }
        // the top coefficient must close out: f_d = -c g_{d-1}
        (self.coeffs[d] == -(c * &prev)).then(|| Self::new(g))
    }

    /// Integers `c` with `(1 - c z)` dividing `self`, each listed with
    /// multiplicity, assuming constant term 1.
    pub fn reciprocal_integer_roots(&self) -> Vec<Integer> {
        let mut roots = Vec::new();
        let mut rest = self.clone();
        'outer: while let Some(d) = rest.degree() {
            if d == 0 {
                break;
            }
            // c must divide the leading coefficient (up to sign)
            let lead = rest.coeffs[d].abs();
            for cand in divisors(&lead) {
                for c in [cand.clone(), -cand] {
                    if let Some(q) = rest.div_linear_factor(&c) {
                        roots.push(c);
                        rest = q;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        roots
    }
}

/// Positive divisors of `n` by trial division; `n` is expected small.
fn divisors(n: &Integer) -> Vec<Integer> {
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

impl ring::GhostRing for IntPolynomial {
    fn zero_like(&self) -> Self {
        Self::zero()
    }

    fn one_like(&self) -> Self {
        Self::constant(BigInt::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    fn mul_int(&self, n: &Integer) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * n).collect())
    }

    fn div_int(&self, n: u64) -> Option<Self> {
        let n = BigInt::from(n);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(&n);
            if !Zero::is_zero(&r) {
                return None;
            }
            out.push(q);
        }
        Some(IntPolynomial { coeffs: out })
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders in the variable `z`, ascending degree: `1 - 3z + 2z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_ascending(&self.coeffs, "z"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Ascending-degree rendering shared by polynomial and rational-function
/// display.
pub(crate) fn render_ascending(coeffs: &[Integer], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_mag = k == 0 || !mag.is_one();
        if show_mag {
            out.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => out.push_str(var),
            _ => {
                out.push_str(var);
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::GhostRing;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn multiplication_and_eval() {
        let f = p(&[1, -1]).mul(&p(&[1, -2]));
        assert_eq!(f, p(&[1, -3, 2]));
        assert_eq!(f.eval(&BigInt::from(1)), BigInt::from(0));
    }

    #[test]
    fn division_by_integer_is_coefficientwise() {
        assert_eq!(p(&[2, 4, -6]).div_int(2), Some(p(&[1, 2, -3])));
        assert_eq!(p(&[2, 3]).div_int(2), None);
    }

    #[test]
    fn linear_factors() {
        let f = p(&[1, -3, 2]);
        assert_eq!(f.div_linear_factor(&BigInt::from(2)), Some(p(&[1, -1])));
        assert_eq!(f.div_linear_factor(&BigInt::from(3)), None);
        let mut roots = f.reciprocal_integer_roots();
        roots.sort();
        assert_eq!(roots, vec![BigInt::from(1), BigInt::from(2)]);
        // 1 - 2t + 5t^2 has no integer reciprocal roots
        assert!(p(&[1, -2, 5]).reciprocal_integer_roots().is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 2]).to_string(), "1 - 3z + 2z^2");
        assert_eq!(p(&[0, -1]).to_string(), "-z");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn substitution() {
        assert_eq!(p(&[1, 2]).substitute_power(3), p(&[1, 0, 0, 2]));
        assert_eq!(p(&[1, 2, 3]).negate_variable(), p(&[1, -2, 3]));
    }
}
