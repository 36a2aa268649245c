use wittzeta::arithgeom::{point_counts, sym_zeta, zeta, VarietySpec};
use wittzeta::ringcore::EnumerationBudget;

fn main() -> wittzeta::Result<()> {
    let budget = EnumerationBudget::default();
    for m in 0..=3 {
        let spec = VarietySpec::projective(m, 3);
        let c = point_counts(&spec, 4, budget)?;
        println!("P^{m}/F3: N_r = {:?}", c.counts.iter().map(|n| n.to_string()).collect::<Vec<_>>());
        println!("  Z = {:?}", zeta(&spec, 4, budget)?.series().coeffs());
    }

    // Sym^n P^1 is P^n
    for n in 1..=4 {
        let s = sym_zeta(&VarietySpec::projective(1, 3), n, 6, budget)?;
        assert_eq!(s, zeta(&VarietySpec::projective(n as u32, 3), 6, budget)?);
    }
    println!("Sym^n P^1 = P^n for n <= 4");
    Ok(())
}
