//! Teichmüller elements multiply like their arguments, and ghost
//! coordinates turn Witt arithmetic into pointwise arithmetic.
use num_bigint::BigInt;
use wittzeta::{ghost_inverse, teichmuller, GhostVector};

fn main() -> wittzeta::Result<()> {
    let n = 5;
    let two = teichmuller(BigInt::from(2), n);
    let three = teichmuller(BigInt::from(3), n);

    let product = two.witt_mul(&three);
    println!("[2] * [3] = {product:?}");
    assert_eq!(product, teichmuller(BigInt::from(6), n));

    let sum = two.witt_add(&three);
    println!("[2] + [3] = {sum:?}");
    println!("ghost([2] + [3]) = {:?}", sum.ghost());

    let back = ghost_inverse(&GhostVector::new(vec![BigInt::from(5); n])?)?;
    println!("ghost coordinates (5, 5, ..) come from {back:?}");
    Ok(())
}
