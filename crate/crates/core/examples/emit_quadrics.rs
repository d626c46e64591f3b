//! The two quadrics α·t_θ and αθ·t_θ written as polynomials.
//!
//!     cargo run --example emit_quadrics

use quadpencil::cli::quadric_text;
use quadpencil::correspondence::{gc_to_orb, Triple};
use quadpencil::etale::EtaleAlgebra;
use quadpencil::field::FieldDescriptor;
use quadpencil::poly::UniPoly;

fn main() -> quadpencil::error::Result<()> {
    let q = FieldDescriptor::Rationals;
    let l = EtaleAlgebra::new(UniPoly::from_i64(q, &[1, -1, 0, 0, 0, 1]))?;
    for alpha in [l.one(), l.from_i64(&[1, 0, -2])] {
        let p = gc_to_orb(&Triple::new(l.clone(), alpha.clone())?)?;
        println!("α = {alpha}");
        println!("  Q1 = {}", quadric_text(p.first()));
        println!("  Q2 = {}", quadric_text(p.second()));
    }
    Ok(())
}
