use wittzeta::arithgeom::{base_change, point_counts, zeta_from_counts, VarietySpec};
use wittzeta::ringcore::EnumerationBudget;

fn main() -> wittzeta::Result<()> {
    let p1 = VarietySpec::projective(1, 2);
    let counts = point_counts(&p1, 12, EnumerationBudget::default())?;
    let z = zeta_from_counts(&counts, 12)?;

    for r in 1..=3 {
        let over_ext = zeta_from_counts(&base_change(&counts, r)?, 12 / r)?;
        let frob = z.frobenius(r)?;
        println!("F_{r} Z(P1/F2) = {frob:?}");
        assert_eq!(frob, over_ext);
    }

    // F_n acts on ghost coordinates by gh_m -> gh_{mn}
    let w = wittzeta::witt::witt_from_ints(&[1, -2, 3, 0, 5, 1]);
    let g = w.frobenius(2)?.ghost();
    assert_eq!(g.get(1), w.ghost().get(2));
    println!("gh(F_2 w) = {g:?}, gh(w) = {:?}", w.ghost());
    Ok(())
}
