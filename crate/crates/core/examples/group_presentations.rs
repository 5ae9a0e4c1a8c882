//! Presentations of the indecomposable (d,2) groups. Pass `gap` as the
//! third argument for GAP input.
//!
//! ```text
//! cargo run --example group_presentations -- 5 8 gap
//! ```

use formcount::counting::indecomposable_group_count;
use formcount::presentations::presentations;
use formcount::DEFAULT_ENUMERATION_BOUND;

fn main() -> formcount::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p = args.first().and_then(|a| a.parse().ok()).unwrap_or(5);
    let d = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let gap = args.get(2).is_some_and(|a| a == "gap");

    let list = presentations(p, d, DEFAULT_ENUMERATION_BOUND)?;
    println!("# {} groups (expected {})", list.len(), indecomposable_group_count(p, d)?);
    for g in &list {
        println!();
        if gap {
            print!("{}", g.to_gap());
        } else {
            print!("{g}");
        }
    }
    Ok(())
}
