//! Orbit counts from the closed formula, with the four Burnside terms.
//!
//! ```text
//! cargo run --example orbit_counts -- 7 8
//! ```

use formcount::counting::orbit_count;
use formcount::numtheory::primes_between;

fn main() -> formcount::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, n) = match args[..] {
        [p, n] => (p, n),
        _ => (5, 5),
    };

    let report = orbit_count(p, n)?;
    println!("p = {p}, n = {n}");
    if let Some(t) = &report.terms {
        println!("  a = {}\n  b = {}\n  c = {}\n  d = {}", t.a, t.b, t.c, t.d);
    }
    println!("  |GL(2,p)| = {}", report.group_order);
    println!("  orbits    = {}", report.orbit_count);

    println!("\norbit counts for n = 3..=8 over the primes below 30:");
    print!("{:>4}", "p");
    for n in 3..=8 {
        print!("{:>10}", format!("n={n}"));
    }
    println!();
    for p in primes_between(2, 30) {
        print!("{p:>4}");
        for n in 3..=8 {
            print!("{:>10}", orbit_count(p, n)?.orbit_count);
        }
        println!();
    }
    Ok(())
}
