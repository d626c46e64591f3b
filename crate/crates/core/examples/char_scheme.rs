//! The determinant form det(Ax - By) of a pencil, its zero scheme on P^1, and
//! a projective equivalence between two such schemes over F_5.
//!
//!     cargo run --example char_scheme

use quadpencil::correspondence::{gc_to_orb, Triple};
use quadpencil::etale::EtaleAlgebra;
use quadpencil::field::FieldDescriptor;
use quadpencil::gl2::GL2Elem;
use quadpencil::pencil::{char_scheme, char_schemes_equivalent_fp};
use quadpencil::poly::UniPoly;
use quadpencil::random::random_gln;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> quadpencil::error::Result<()> {
    let q = FieldDescriptor::Rationals;
    let t = Triple::quasi_split(EtaleAlgebra::new(UniPoly::from_i64(q, &[0, -1, 0, 1]))?);
    let p = gc_to_orb(&t)?;
    println!("over Q, t^3 - t: det(Ax - By) = {}", p.determinant_form());
    println!("discriminant {}", p.determinant_form().discriminant());

    let f5 = FieldDescriptor::prime(5)?;
    let l = EtaleAlgebra::new(UniPoly::from_i64(f5, &[1, 1, 0, 1]))?;
    let p = gc_to_orb(&Triple::new(l.clone(), l.from_i64(&[2, 1]))?)?;
    let g2 = GL2Elem::from_i64(f5, 1, 2, 3, 2)?;
    let gn = random_gln(f5, 3, &mut ChaCha8Rng::seed_from_u64(7))?;
    let moved = p.act(&g2, &gn)?;

    let s1 = char_scheme(&p)?;
    let s2 = char_scheme(&moved)?;
    println!("\nover F_5: S = {s1}, S' = {s2}");
    match char_schemes_equivalent_fp(&s1, &s2)? {
        Some(w) => println!("S ∘ {w} is proportional to S'"),
        None => println!("not equivalent"),
    }
    Ok(())
}
