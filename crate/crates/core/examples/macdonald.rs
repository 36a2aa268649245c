//! Poincaré polynomials of symmetric powers of a surface with Betti numbers
//! (1, 2, 3, 2, 1).
use num_bigint::BigInt;
use wittzeta::lambda::{macdonald_poincare, sigma_int, specialize, BettiVector};

fn main() {
    let b = BettiVector::from_i64s(&[1, 2, 3, 2, 1]);
    println!("P(X, z) = {}", b.poincare_polynomial());

    let m = macdonald_poincare(&b, 4);
    for n in 0..=4 {
        println!("P(Sym^{n} X, z) = {}", m.coeff(n));
    }

    let chi = b.euler_characteristic();
    let euler = specialize(&m, &BigInt::from(1));
    assert_eq!(euler, sigma_int(&chi, 4));
    println!("chi(X) = {chi}, chi(Sym^n X) = {:?}", euler.series().coeffs());
}
