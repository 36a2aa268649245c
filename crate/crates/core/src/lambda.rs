//! Opposite λ-ring structure maps `σ_t = λ_{-t}^{-1}`.
//!
//! - On `Z`: `σ_t(a) = (1 - t)^{-a}`, so `σ^n(a) = C(a + n - 1, n)`.
//! - On `Z[z]`: `σ_t(z) = [z]`, hence `σ_t(f) = f([z])`, the Witt sum
//!   `sum c_i [z^i]`.
//! - On `W(A)`: `σ_u` sends `[a]` to the double Teichmüller element
//!   `([1] - [a] u)^{-1}`.
//!
//! For `σ_u` on a general element we use the rule that its outer ghost
//! coordinates are the Frobenius images: `gh_n(σ_u(P)) = F_n(P)`. On sums of
//! Teichmüller elements this agrees with the double Teichmüller values (both
//! sides have `gh_n = sum [a]^n = sum [a^n]`), and it needs nothing beyond
//! the truncated data of `P`. That agreement is exercised in the tests rather
//! than assumed.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ringcore::{GhostRing, IntPolynomial, Integer, TruncatedSeries};
use crate::witt::{ghost_inverse, teichmuller, GhostVector, WittVector};

/// `σ_t(a) = (1 - t)^{-a}` in `W_N(Z)`. Negative `a` is allowed.
pub fn sigma_int(a: &Integer, precision: usize) -> WittVector<Integer> {
    // c_n = c_{n-1} (a + n - 1) / n, i.e. rising factorial over n!
    let mut coeffs = Vec::with_capacity(precision + 1);
    coeffs.push(BigInt::from(1));
    for n in 1..=precision {
        let next = &coeffs[n - 1] * (a + BigInt::from(n - 1)) / BigInt::from(n);
        coeffs.push(next);
    }
    WittVector::new(TruncatedSeries::new(coeffs)).expect("constant term 1, precision >= 1")
}

/// `σ_t(f) = f([z]) = sum_i c_i [z^i]` in `W_N(Z[z])`.
pub fn sigma_poly(f: &IntPolynomial, precision: usize) -> WittVector<IntPolynomial> {
    let one = IntPolynomial::constant(BigInt::from(1));
    let mut acc = WittVector::zero(&one, precision);
    for (i, c) in f.coeffs().iter().enumerate() {
        if GhostRing::is_zero(c) {
            continue;
        }
        let zi = IntPolynomial::monomial(BigInt::from(1), i);
        acc = acc.witt_add(&teichmuller(zi, precision).scale(c));
    }
    acc
}

/// Recovers `λ_t(x)` from `s = σ_t(x)`: `λ_t = (σ_{-t})^{-1}`.
pub fn lambda_from_sigma<A: GhostRing>(s: &WittVector<A>) -> TruncatedSeries<A> {
    s.witt_neg().series().negate_variable()
}

/// `σ_u(P)` in `W_M(W_{N'}(A))` with `N' = floor(N / M)`: the element whose
/// outer ghost coordinate `n` is `F_n(P)` truncated to `N'`.
///
/// Needs `N >= M` so that every Frobenius image keeps at least one inner
/// coefficient.
pub fn sigma_witt<A: GhostRing>(
    p: &WittVector<A>,
    outer: usize,
) -> Result<WittVector<WittVector<A>>> {
    if outer == 0 {
        return Err(Error::InvalidArgument("outer precision must be positive".into()));
    }
    let n = p.precision();
    if n < outer {
        return Err(Error::precision(
            format!("sigma_u with outer precision {outer}"),
            outer,
            n,
        ));
    }
    let inner = n / outer;
    let coords = (1..=outer)
        .map(|k| p.frobenius(k)?.truncate(inner))
        .collect::<Result<Vec<_>>>()?;
    ghost_inverse(&GhostVector::new(coords)?)
}

/// The double Teichmüller element `[[ [a] ]] = ([1] - [a] u)^{-1}` in
/// `W_M(W_N(A))`, with outer coefficients `[a^k]`.
pub fn double_teichmuller<A: GhostRing>(
    a: A,
    outer: usize,
    inner: usize,
) -> WittVector<WittVector<A>> {
    teichmuller(teichmuller(a, inner), outer)
}

/// Betti numbers `b_0, .., b_{2m}`. Entries may be any integers; the
/// generating-series formula is formal in them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector(pub Vec<Integer>);

impl BettiVector {
    pub fn from_i64s(b: &[i64]) -> Self {
        BettiVector(b.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `P(X, z) = sum (-1)^i b_i z^i`.
    pub fn poincare_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.0
                .iter()
                .enumerate()
                .map(|(i, b)| if i % 2 == 1 { -b } else { b.clone() })
                .collect(),
        )
    }

    /// `χ = P(X, 1)`.
    pub fn euler_characteristic(&self) -> Integer {
        self.poincare_polynomial().eval(&BigInt::from(1))
    }
}

/// The generating series `sum_n P(Sym^n X, z) t^n` as the Witt element
/// `sum_i (-1)^i b_i [z^i]`; as a series this is
/// `prod_i (1 - z^i t)^{(-1)^{i+1} b_i}`.
pub fn macdonald_poincare(b: &BettiVector, precision: usize) -> WittVector<IntPolynomial> {
    let one = IntPolynomial::constant(BigInt::from(1));
    let mut acc = WittVector::zero(&one, precision);
    for (i, bi) in b.0.iter().enumerate() {
        let signed = if i % 2 == 1 { -bi } else { bi.clone() };
        let zi = IntPolynomial::monomial(BigInt::from(1), i);
        acc = acc.witt_add(&teichmuller(zi, precision).scale(&signed));
    }
    acc
}

/// Specializes `z := value` coefficientwise, `W(Z[z]) -> W(Z)`.
pub fn specialize(p: &WittVector<IntPolynomial>, value: &Integer) -> WittVector<Integer> {
    p.map(|f| f.eval(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witt::witt_from_ints;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn sigma_of_integers() {
        assert_eq!(sigma_int(&int(1), 4), teichmuller(int(1), 4));
        assert!(sigma_int(&int(0), 4).is_zero());
        assert_eq!(sigma_int(&int(3), 3), witt_from_ints(&[3, 6, 10]));
        // (1 - t)^2
        assert_eq!(sigma_int(&int(-2), 3), witt_from_ints(&[-2, 1, 0]));
    }

    #[test]
    fn sigma_of_z() {
        let s = sigma_poly(&IntPolynomial::z(), 2);
        assert_eq!(s.tail(), &[poly(&[0, 1]), poly(&[0, 0, 1])]);
        assert!(sigma_poly(&IntPolynomial::zero(), 3).is_zero());
        let four = sigma_poly(&poly(&[4]), 5);
        assert_eq!(four, sigma_int(&int(4), 5).map(|c| IntPolynomial::constant(c.clone())));
    }

    #[test]
    fn lambda_recovered_from_sigma() {
        let l = lambda_from_sigma(&sigma_int(&int(2), 4));
        let expect: Vec<BigInt> = [1, 2, 1, 0, 0].iter().map(|&x| int(x)).collect();
        assert_eq!(l.coeffs(), expect.as_slice());
        let l = lambda_from_sigma(&WittVector::zero(&int(1), 3));
        assert_eq!(l.coeffs(), &[int(1), int(0), int(0), int(0)]);
        let l = lambda_from_sigma(&sigma_poly(&IntPolynomial::z(), 3));
        assert_eq!(
            l.coeffs(),
            &[poly(&[1]), poly(&[0, 1]), IntPolynomial::zero(), IntPolynomial::zero()]
        );
    }

    #[test]
    fn sigma_u_of_teichmuller_is_double_teichmuller() {
        for a in [-3, 0, 1, 2, 5] {
            let s = sigma_witt(&teichmuller(int(a), 6), 2).unwrap();
            assert_eq!(s, double_teichmuller(int(a), 2, 3));
        }
    }

    #[test]
    fn sigma_u_of_zero_is_zero() {
        let s = sigma_witt(&WittVector::zero(&int(1), 4), 4).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.precision(), 4);
        assert_eq!(s.ring_one().precision(), 1);
    }

    #[test]
    fn sigma_u_of_projective_line() {
        // [1] + [2]: u-coefficients [1] + [2] and [1] + [2] + [4]
        let n = 6;
        let p = teichmuller(int(1), n).witt_add(&teichmuller(int(2), n));
        let s = sigma_witt(&p, 2).unwrap();
        let t = |a: i64| teichmuller(int(a), 3);
        assert_eq!(s.coeff(1), &t(1).witt_add(&t(2)));
        assert_eq!(s.coeff(2), &t(1).witt_add(&t(2)).witt_add(&t(4)));
    }

    #[test]
    fn sigma_u_needs_precision() {
        let p = teichmuller(int(2), 3);
        assert!(matches!(sigma_witt(&p, 4), Err(Error::Precision { .. })));
    }

    #[test]
    fn macdonald_for_sphere_like_betti() {
        // b = (1, 0, 1): (1 - t)^{-1} (1 - z^2 t)^{-1}
        let m = macdonald_poincare(&BettiVector::from_i64s(&[1, 0, 1]), 2);
        assert_eq!(m.tail(), &[poly(&[1, 0, 1]), poly(&[1, 0, 1, 0, 1])]);
        let point = macdonald_poincare(&BettiVector::from_i64s(&[1]), 4);
        assert_eq!(point, WittVector::one(&poly(&[1]), 4));
    }

    #[test]
    fn macdonald_specializes_to_euler_characteristic() {
        let b = BettiVector::from_i64s(&[1, 4, 6, 4, 1]);
        assert_eq!(b.euler_characteristic(), int(0));
        let m = macdonald_poincare(&b, 5);
        assert_eq!(specialize(&m, &int(1)), sigma_int(&int(0), 5));
        let b = BettiVector::from_i64s(&[1, 2, 1]);
        assert_eq!(specialize(&macdonald_poincare(&b, 5), &int(1)), sigma_int(&int(0), 5));
        let b = BettiVector::from_i64s(&[1, 0, 3]);
        assert_eq!(specialize(&macdonald_poincare(&b, 5), &int(1)), sigma_int(&int(4), 5));
    }
}
