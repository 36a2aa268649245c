//! y^2 = x^3 + x over F_5: one enumeration, then the trace recursion.
use wittzeta::arithgeom::{
    check_weil_bound, elliptic_point_count, point_counts, rational_reconstruct, zeta, VarietySpec,
};
use wittzeta::ringcore::EnumerationBudget;

fn main() -> wittzeta::Result<()> {
    let budget = EnumerationBudget::default();
    let e = VarietySpec::elliptic(5, 1, 0)?;
    let c = point_counts(&e, 6, budget)?;
    check_weil_bound(5, &c.counts)?;
    println!("N_r = {:?}", c.counts.iter().map(|n| n.to_string()).collect::<Vec<_>>());

    for k in 1..=3 {
        let direct = elliptic_point_count(5, 1, 0, k, budget)?;
        assert_eq!(&direct, c.get(k));
        println!("#E(F_5^{k}) by enumeration: {direct}");
    }

    let z = zeta(&e, 8, budget)?;
    let rf = rational_reconstruct(&z, 2)?;
    println!("Z(E, t) = {rf}");
    Ok(())
}
