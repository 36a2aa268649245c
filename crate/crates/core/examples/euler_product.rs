use wittzeta::arithgeom::{closed_point_counts, euler_product_zeta, zeta_from_counts, PointCounts};

fn main() -> wittzeta::Result<()> {
    // the affine line over F_2: a_d is the number of monic irreducibles of degree d
    let c = PointCounts::from_i64s(2, &[2, 4, 8, 16, 32, 64])?;
    let a = closed_point_counts(&c, 6)?;
    println!("closed points by degree: {:?}", a.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let z = euler_product_zeta(&c, 6)?;
    assert_eq!(z, zeta_from_counts(&c, 6)?);
    println!("Z = {:?}", z.series().coeffs());

    // N = (3, 1) passes the Newton step but would need -1 closed points of degree 2
    let bad = PointCounts::from_i64s(2, &[3, 1])?;
    println!("(3, 1) as a Witt vector: {:?}", zeta_from_counts(&bad, 2)?);
    if let Err(e) = euler_product_zeta(&bad, 2) {
        println!("(3, 1) as an Euler product: {e}");
    }
    Ok(())
}
