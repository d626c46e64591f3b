//! Möbius symmetries of F_11[t]/(t^5 - 1): θ ↦ ζθ and θ ↦ ζ/θ, and the
//! orbit of a square class under them.
//!
//!     cargo run --example fibers

use quadpencil::correspondence::{aut_set_fp, fiber_fp, Triple};
use quadpencil::etale::EtaleAlgebra;
use quadpencil::field::FieldDescriptor;
use quadpencil::poly::UniPoly;

fn main() -> quadpencil::error::Result<()> {
    let f11 = FieldDescriptor::prime(11)?;
    let l = EtaleAlgebra::new(UniPoly::from_i64(f11, &[-1, 0, 0, 0, 0, 1]))?;
    let aut = aut_set_fp(&Triple::quasi_split(l.clone()))?;
    println!("{} Möbius maps preserve t^5 - 1:", aut.len());
    for g in &aut {
        println!("  {g}");
    }

    let t = Triple::new(l.clone(), l.from_i64(&[0, 1]))?;
    let orbit = fiber_fp(&t)?;
    println!("\nclasses in the orbit of α = θ: {}", orbit.len());
    for a in &orbit {
        println!("  {a}");
    }
    Ok(())
}
