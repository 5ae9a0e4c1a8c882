//! The forms a, b attached to an anisotropic element, and the count of
//! beta in GF(p^m) making a - beta*b irreducible.

use formcount::census::representative_anisotropic;
use formcount::numtheory::divisors;
use formcount::oracle::{build_ab, eigenbasis_check, lemma1_count, lemma1_expected, LEMMA1_SCAN_BOUND};
use formcount::DEFAULT_ENUMERATION_BOUND as BOUND;

fn main() -> formcount::Result<()> {
    for p in [3u64, 5, 7] {
        for e in divisors(p + 1)?.into_iter().filter(|&e| e > 1) {
            let [_, r, _, s] = representative_anisotropic(p, e)?.entries();
            let (a, b) = build_ab(p, e, s, r)?;
            println!("p = {p}, e = {e}, g = [[0,{r}],[1,{s}]]");
            println!("  a = {a}\n  b = {b}");
            let mut m = 1;
            while p.pow(m) <= LEMMA1_SCAN_BOUND {
                let found = lemma1_count(p, e, s, r, m)?;
                let expected = lemma1_expected(p, e, m)?;
                println!("  m = {m}: {found} irreducible (expected {expected})");
                m += 1;
            }
            let n = 2 * e as usize;
            if p.pow(n as u32) <= BOUND {
                println!("  fixed forms of degree {n} lie in span(a^i b^j): {}", eigenbasis_check(p, n, e, s, r, BOUND)?);
            }
        }
    }
    Ok(())
}
