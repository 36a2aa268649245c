use wittzeta::arithgeom::{rational_reconstruct, sym_zeta, VarietySpec};
use wittzeta::ringcore::EnumerationBudget;

fn main() -> wittzeta::Result<()> {
    let budget = EnumerationBudget::default();
    for q in [2, 3] {
        let s = sym_zeta(&VarietySpec::projective(2, q), 2, 12, budget)?;
        let rf = rational_reconstruct(&s, 6)?;
        println!("Z(Sym^2 P^2 / F_{q}) = {rf}");
        println!("  first ghost coordinate {}", s.ghost().get(1));
    }
    Ok(())
}
