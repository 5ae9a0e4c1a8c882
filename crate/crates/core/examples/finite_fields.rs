//! Prime fields, extension fields, polynomials and small matrices.

use formcount::finitefield::{count_monic_irreducible, ExtensionField, Field, Mat2, Polynomial, PrimeField};
use num_bigint::BigUint;

fn main() -> formcount::Result<()> {
    let f7 = PrimeField::new(7)?;
    println!("in GF(7): 3 * 5 = {}, 3^-1 = {}", f7.mul(&3, &5), f7.inv(&3)?);

    let gf9 = ExtensionField::new(3, 2)?;
    let t = gf9.generator();
    println!("GF(9) modulus (low degree first): {:?}", gf9.modulus());
    println!("t^4 = {:?}, t^8 = {:?}", gf9.pow_u64(&t, 4), gf9.pow_u64(&t, 8));
    let frob = gf9.pow(&t, &BigUint::from(3u32));
    println!("Frobenius of t: {frob:?}");

    let f = Polynomial::from_ints(f7, &[3, 0, 0, 1]);
    println!("x^3 + 3 irreducible over GF(7): {}", f.is_irreducible()?);
    for n in 1..=6 {
        println!("monic irreducibles of degree {n} over GF(7): {}", count_monic_irreducible(7, n)?);
    }

    let g = Mat2::new(7, 0, 3, 1, 1)?;
    println!("{g}: det {}, trace {}, projective order {}", g.det(), g.trace(), g.projective_order());
    Ok(())
}
