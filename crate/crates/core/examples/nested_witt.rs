//! W(W(Z)): Witt vectors whose coefficients are Witt vectors.
use num_bigint::BigInt;
use wittzeta::lambda::{double_teichmuller, sigma_witt};
use wittzeta::teichmuller;

fn main() -> wittzeta::Result<()> {
    let (outer, inner) = (3, 4);
    let dt = double_teichmuller(BigInt::from(2), outer, inner);
    for k in 1..=outer {
        println!("u^{k}: {:?}", dt.coeff(k));
    }

    // sigma_u of [2] + [5] lands in W_3(W_4(Z))
    let p = teichmuller(BigInt::from(2), outer * inner).witt_add(&teichmuller(BigInt::from(5), outer * inner));
    let s = sigma_witt(&p, outer)?;
    let expect = double_teichmuller(BigInt::from(2), outer, inner)
        .witt_add(&double_teichmuller(BigInt::from(5), outer, inner));
    assert_eq!(s, expect);
    println!("sigma_u([2] + [5]) ghost: {:?}", s.ghost());

    let sq = s.witt_mul(&s);
    println!("its square: {:?}", sq.coeff(1));
    Ok(())
}
