//! Orbit counts as polynomials in p on each unit residue class mod n.

use formcount::counting::orbit_count;
use formcount::porc::porc_table;

fn main() -> formcount::Result<()> {
    for n in 3..=8 {
        let table = porc_table(n)?;
        println!("n = {n}");
        for (r, poly) in &table.classes {
            println!("  p = {r} (mod {n}): {poly}");
        }
        println!("  not covered: p in {:?}", table.uncovered_primes());

        // spot check against the closed formula
        for p in [101u64, 103, 107, 109] {
            if let Some(poly) = table.for_prime(p) {
                let value = poly.evaluate(&p.into());
                assert_eq!(value.to_integer(), orbit_count(p, n)?.orbit_count);
            }
        }
    }
    Ok(())
}
