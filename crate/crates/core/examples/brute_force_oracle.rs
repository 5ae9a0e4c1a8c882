//! Both brute-force counters against the formula, plus fixed points of
//! every class representative.

use std::time::Instant;

use formcount::census::class_families;
use formcount::counting::{orbit_count, predicted_fix};
use formcount::forms::enumerate_irreducible_forms;
use formcount::oracle::{fix_count, orbit_count_bfs, orbit_count_burnside_brute, DEFAULT_BURNSIDE_BUDGET};
use formcount::DEFAULT_ENUMERATION_BOUND as BOUND;

fn main() -> formcount::Result<()> {
    println!("{:>3}{:>3}{:>9}{:>7}{:>10}{:>10}", "p", "n", "formula", "bfs", "burnside", "ms");
    for (p, n) in [(2, 4), (3, 5), (5, 4), (5, 5), (7, 5), (3, 6)] {
        let t = Instant::now();
        let formula = orbit_count(p, n as u64)?.orbit_count;
        let bfs = orbit_count_bfs(p, n, BOUND)?.count();
        let burnside = orbit_count_burnside_brute(p, n, BOUND, DEFAULT_BURNSIDE_BUDGET)?;
        println!(
            "{p:>3}{n:>3}{formula:>9}{bfs:>7}{burnside:>10}{:>10}",
            t.elapsed().as_millis()
        );
    }

    let (p, n) = (5, 6);
    println!("\nfixed points at p = {p}, n = {n}:");
    let forms = enumerate_irreducible_forms(p, n, BOUND)?;
    for fam in class_families(p)? {
        let found = fix_count(&forms, &fam.representative);
        let predicted = predicted_fix(p, n as u64, &fam)?;
        println!("  {:<12} e={:<2} predicted {predicted:>5}  found {found:>5}", fam.kind.to_string(), fam.e);
    }
    Ok(())
}
