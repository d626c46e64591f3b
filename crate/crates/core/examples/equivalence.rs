//! Two presentations of the same triple over F_5: moving θ by a Möbius map
//! changes the modulus and α but not the equivalence class.
//!
//!     cargo run --example equivalence

use quadpencil::correspondence::{mobius_on_triple, triples_equivalent_fp, Triple};
use quadpencil::etale::EtaleAlgebra;
use quadpencil::field::FieldDescriptor;
use quadpencil::gl2::GL2Elem;
use quadpencil::poly::UniPoly;

fn main() -> quadpencil::error::Result<()> {
    let f5 = FieldDescriptor::prime(5)?;
    let l = EtaleAlgebra::new(UniPoly::from_i64(f5, &[1, 1, 0, 1]))?;
    let t1 = Triple::new(l.clone(), l.from_i64(&[2, 0, 1]))?;
    let t2 = mobius_on_triple(&t1, &GL2Elem::from_i64(f5, 2, 1, 1, 1)?)?;
    println!("T1: f = {}, α = {}", t1.modulus(), t1.alpha());
    println!("T2: f = {}, α = {}", t2.modulus(), t2.alpha());

    match triples_equivalent_fp(&t1, &t2)? {
        Some(w) => println!("equivalent via {}, θ1 ↦ {}", w.mobius, w.theta_image),
        None => println!("not equivalent"),
    }

    let t3 = Triple::new(l.clone(), l.from_i64(&[0, 1]))?;
    println!("T1 ~ (L, θ, θ): {}", triples_equivalent_fp(&t1, &t3)?.is_some());
    Ok(())
}
