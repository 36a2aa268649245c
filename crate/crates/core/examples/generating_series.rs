//! The symmetric-power generating series is sigma_u of the zeta function.
use wittzeta::arithgeom::{sym_zeta, zeta_generating_series, VarietySpec};
use wittzeta::ringcore::EnumerationBudget;

fn main() -> wittzeta::Result<()> {
    let budget = EnumerationBudget::default();
    let e = VarietySpec::elliptic(5, 1, 0)?;
    let ee = VarietySpec::product(vec![e.clone(), e])?;

    let g = zeta_generating_series(&ee, 3, 3, budget)?;
    for n in 0..=3 {
        let coeff = g.coeff(n);
        assert_eq!(coeff, &sym_zeta(&ee, n, 3, budget)?);
        println!("Z(Sym^{n}(E x E), t) = {:?}", coeff.series().coeffs());
    }
    Ok(())
}
