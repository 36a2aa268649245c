use wittzeta::arithgeom::{brute_sym_count, point_counts, sym_power_counts, VarietySpec};
use wittzeta::ringcore::EnumerationBudget;

fn main() -> wittzeta::Result<()> {
    let budget = EnumerationBudget::default();
    let specs = [
        VarietySpec::elliptic(5, 1, 0)?,
        VarietySpec::equations(3, &["x", "y"], &["x^2 + y^2 - 1"])?,
    ];
    for spec in &specs {
        let c = point_counts(spec, 6, budget)?;
        println!("{spec:?}");
        for n in 0..=3 {
            let newton = sym_power_counts(&c, n, 2)?;
            for r in 1..=2 {
                let brute = brute_sym_count(spec, n, r, budget)?;
                assert_eq!(newton.get(r), &brute);
                println!("  N_{r}(Sym^{n}) = {brute}");
            }
        }
    }
    Ok(())
}
