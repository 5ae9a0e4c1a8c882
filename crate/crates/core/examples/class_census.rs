//! Conjugacy-class families of GL(2,p) and the fixed-point prediction for
//! each one.

use formcount::census::{class_families, gl2_order, total_class_count};
use formcount::counting::predicted_fix;

fn main() -> formcount::Result<()> {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let n: u64 = std::env::args().nth(2).and_then(|a| a.parse().ok()).unwrap_or(6);

    let families = class_families(p)?;
    println!("GL(2,{p}): order {}, {} classes", gl2_order(p)?, total_class_count(&families));
    println!("{:<13}{:>4}{:>8}{:>8}  {:<16}{:>10}", "family", "e", "count", "size", "representative", format!("fix(n={n})"));
    for fam in &families {
        println!(
            "{:<13}{:>4}{:>8}{:>8}  {:<16}{:>10}",
            fam.kind.to_string(),
            fam.e,
            fam.class_count.to_string(),
            fam.class_size,
            fam.representative.to_string(),
            predicted_fix(p, n, fam)?.to_string()
        );
    }
    Ok(())
}
