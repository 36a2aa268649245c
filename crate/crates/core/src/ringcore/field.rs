//! Small finite fields `F_{p^k}` for exhaustive point counting.
//!
//! Elements are encoded as integers `0..p^k`: base-`p` digit `i` is the
//! coefficient of `z^i` in the residue polynomial modulo the defining
//! irreducible. The prime subfield is `0..p`.

use num_bigint::BigInt;

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Largest extension degree supported; `p^k` must also fit in a `u64`.
pub const MAX_DEGREE: usize = 32;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over `F_p`, ascending, trimmed. Only what the
/// irreducibility test needs.
mod fp_poly {
    pub(super) fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        pow_mod(a, p - 2, p)
    }

    pub(super) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc as u128 * b as u128 % p as u128) as u64;
            }
            b = (b as u128 * b as u128 % p as u128) as u64;
            e >>= 1;
        }
        acc
    }

    pub(super) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).copied().unwrap_or(0);
                    let y = b.get(i).copied().unwrap_or(0);
                    (x + p - y) % p
                })
                .collect(),
        )
    }

    pub(super) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let dr = r.len() - 1;
            let c = r[dr] * lead_inv % p;
            for i in 0..=dm {
                let t = c * m[i] % p;
                r[dr - dm + i] = (r[dr - dm + i] + p - t) % p;
            }
            r = trim(r);
        }
        r
    }

    pub(super) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    /// `x^(p^e) mod m`.
    pub(super) fn x_pow_p_pow(e: u32, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = rem(&[0, 1], m, p);
        for _ in 0..e {
            // raise to the p-th power by square-and-multiply
            let mut base = acc.clone();
            let mut result = vec![1u64];
            let mut k = p;
            while k > 0 {
                if k & 1 == 1 {
                    result = mul_mod(&result, &base, m, p);
                }
                base = mul_mod(&base, &base, m, p);
                k >>= 1;
            }
            acc = result;
        }
        acc
    }

    pub(super) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }
}

/// Rabin's test: a monic `f` of degree `k` over `F_p` is irreducible iff
/// `x^(p^k) = x mod f` and `gcd(x^(p^(k/l)) - x, f) = 1` for every prime
/// `l | k`.
fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let f = fp_poly::trim(f.to_vec());
    let Some(k) = f.len().checked_sub(1) else {
        return false;
    };
    if k == 0 {
        return false;
    }
    let x = fp_poly::rem(&[0, 1], &f, p);
    if fp_poly::x_pow_p_pow(k as u32, &f, p) != x {
        return false;
    }
    distinct_prime_factors(k as u64).into_iter().all(|l| {
        let h = fp_poly::x_pow_p_pow((k as u64 / l) as u32, &f, p);
        let g = fp_poly::gcd(&fp_poly::sub(&h, &x, p), &f, p);
        g.len() == 1
    })
}

/// The lexicographically smallest monic irreducible of degree `k` over
/// `F_p`, ordering candidates by their ascending coefficient tuple
/// `(c_0, .., c_{k-1})`.
pub fn find_irreducible(p: u64, k: usize) -> Result<IntPolynomial> {
    let digits = find_irreducible_digits(p, k)?;
    Ok(IntPolynomial::new(digits.into_iter().map(BigInt::from).collect()))
}

fn find_irreducible_digits(p: u64, k: usize) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if k == 0 || k > MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "extension degree {k} outside 1..={MAX_DEGREE}"
        )));
    }
    if k == 1 {
        return Ok(vec![0, 1]);
    }
    let count = p
        .checked_pow(k as u32)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{k} overflows")))?;
    for idx in 0..count {
        // c_0 is the most significant digit of idx, so idx order is
        // lexicographic order on (c_0, .., c_{k-1})
        let mut coeffs = vec![0u64; k + 1];
        let mut rest = idx;
        for i in (0..k).rev() {
            coeffs[i] = rest % p;
            rest /= p;
        }
        coeffs[k] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        if is_irreducible_mod_p(&coeffs, p) {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// An element of a [`FiniteField`], encoded as described in the module docs.
pub type Fe = u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: usize,
    /// Monic, ascending, length `k + 1`.
    modulus: Vec<u64>,
    size: u64,
}

impl FiniteField {
    /// `F_{p^k}` with the modulus chosen by [`find_irreducible`].
    pub fn new(p: u64, k: usize) -> Result<Self> {
        let modulus = find_irreducible_digits(p, k)?;
        Self::with_modulus(p, modulus)
    }

    /// `F_p[z] / (modulus)`; the modulus must be monic and irreducible.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidArgument(format!(
                "{p} is not a supported prime"
            )));
        }
        let modulus = fp_poly::trim(modulus.into_iter().map(|c| c % p).collect());
        let k = modulus.len().saturating_sub(1);
        if k == 0 || k > MAX_DEGREE || modulus[k] != 1 {
            return Err(Error::InvalidArgument(
                "modulus must be monic of degree 1..=32".into(),
            ));
        }
        if !is_irreducible_mod_p(&modulus, p) {
            return Err(Error::InvalidArgument(format!(
                "modulus {modulus:?} is reducible over F_{p}"
            )));
        }
        let size = p
            .checked_pow(k as u32)
            .ok_or_else(|| Error::InvalidArgument(format!("{p}^{k} overflows")))?;
        Ok(FiniteField {
            p,
            k,
            modulus,
            size,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> IntPolynomial {
        IntPolynomial::new(self.modulus.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn elements(&self) -> std::ops::Range<Fe> {
        0..self.size
    }

    pub fn zero(&self) -> Fe {
        0
    }

    pub fn one(&self) -> Fe {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        n.rem_euclid(self.p as i64) as u64
    }

    fn digits(&self, x: Fe) -> [u64; MAX_DEGREE] {
        let mut d = [0u64; MAX_DEGREE];
        let mut rest = x;
        for slot in d.iter_mut().take(self.k) {
            *slot = rest % self.p;
            rest /= self.p;
        }
        d
    }

    fn compose(&self, d: &[u64]) -> Fe {
        d[..self.k]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut s = [0u64; MAX_DEGREE];
        for i in 0..self.k {
            s[i] = (x[i] + y[i]) % self.p;
        }
        self.compose(&s)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let x = self.digits(a);
        let mut s = [0u64; MAX_DEGREE];
        for i in 0..self.k {
            s[i] = (self.p - x[i]) % self.p;
        }
        self.compose(&s)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        if self.k == 1 {
            return a * b % p;
        }
        let k = self.k;
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        // z^k = -(m_0 + .. + m_{k-1} z^{k-1})
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let t = c * self.modulus[i] % p;
                prod[d - k + i] = (prod[d - k + i] + p - t) % p;
            }
        }
        self.compose(&prod)
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via `a^(q-2)`; `None` for zero.
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        (a != 0).then(|| self.pow(a, self.size - 2))
    }

    /// `a^(p^e)`, the `e`-th power of the absolute Frobenius.
    pub fn frobenius(&self, a: Fe, e: u32) -> Fe {
        (0..e).fold(a, |x, _| self.pow(x, self.p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(find_irreducible(2, 2).unwrap(), IntPolynomial::from_i64s(&[1, 1, 1]));
        assert_eq!(find_irreducible(3, 2).unwrap(), IntPolynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(find_irreducible(5, 1).unwrap(), IntPolynomial::from_i64s(&[0, 1]));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn rejects_reducible_modulus() {
        assert!(FiniteField::with_modulus(2, vec![1, 0, 1]).is_err());
        assert!(FiniteField::with_modulus(4, vec![1, 1, 1]).is_err());
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        let f = FiniteField::new(3, 3).unwrap();
        for a in f.elements().skip(1) {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), 1);
        }
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn additive_group_has_characteristic_p() {
        let f = FiniteField::new(5, 2).unwrap();
        for a in f.elements() {
            let five_a = (0..5).fold(0, |acc, _| f.add(acc, a));
            assert_eq!(five_a, 0);
            assert_eq!(f.sub(a, a), 0);
        }
    }
}
