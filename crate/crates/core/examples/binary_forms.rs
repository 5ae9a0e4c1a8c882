//! Binary forms, the GL(2,p) action and enumeration of irreducible forms.

use formcount::finitefield::Mat2;
use formcount::forms::{enumerate_irreducible_forms, BinaryForm};
use formcount::oracle::orbit_count_bfs;
use formcount::DEFAULT_ENUMERATION_BOUND as BOUND;

fn main() -> formcount::Result<()> {
    let f = BinaryForm::new(5, &[1, 0, 0, 0, 2])?;
    let g = Mat2::new(5, 1, 1, 0, 1)?;
    let h = Mat2::new(5, 2, 0, 1, 3)?;
    println!("f = {f}, irreducible: {}", f.is_irreducible());
    println!("f.g = {}", f.act(&g)?);
    // right action: (f.g).h = f.(gh)
    assert_eq!(f.act(&g)?.act(&h)?, f.act(&g.mul(&h)?)?);

    let forms = enumerate_irreducible_forms(5, 4, BOUND)?;
    println!("{} irreducible quartic forms over GF(5), up to scalars", forms.len());

    let part = orbit_count_bfs(5, 4, BOUND)?;
    for orbit in &part.orbits {
        println!("  orbit of {:<22} size {}", orbit[0].to_string(), orbit.len());
    }
    Ok(())
}
