use wittzeta::arithgeom::{point_counts, VarietySpec};
use wittzeta::ringcore::{find_irreducible, EnumerationBudget, FiniteField};

fn main() -> wittzeta::Result<()> {
    for (p, k) in [(2u64, 3usize), (3, 2), (5, 2)] {
        println!("F_{}: modulus {}", p.pow(k as u32), find_irreducible(p, k)?);
    }

    let f = FiniteField::new(3, 2)?;
    let g = f.elements().find(|&a| a != 0 && (1..8).all(|e| f.pow(a, e) != 1)).unwrap();
    println!("generator of F_9*: {g}, its Frobenius image {}", f.frobenius(g, 1));

    // a conic over F_3 and its extensions
    let conic = VarietySpec::equations(3, &["x", "y"], &["x^2 + y^2 - 1"])?;
    let c = point_counts(&conic, 4, EnumerationBudget::default())?;
    println!("x^2 + y^2 = 1: {:?}", c.counts.iter().map(|n| n.to_string()).collect::<Vec<_>>());
    Ok(())
}
