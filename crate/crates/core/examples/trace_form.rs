//! The trace form t_θ(x, y) = Tr(xy / f'(θ)) on Q[t]/(t^3 - t), its
//! scalings by α and αθ, and the duality Tr(θ^i / f'(θ)) = δ(i, n-1).
//!
//!     cargo run --example trace_form

use quadpencil::etale::EtaleAlgebra;
use quadpencil::field::FieldDescriptor;
use quadpencil::poly::UniPoly;

fn main() -> quadpencil::error::Result<()> {
    let q = FieldDescriptor::Rationals;
    let l = EtaleAlgebra::new(UniPoly::from_i64(q, &[0, -1, 0, 1]))?;

    for i in 0..l.degree() {
        println!("Tr(θ^{i} / f'(θ)) = {}", l.serre_check(i));
    }

    let alpha = l.from_i64(&[2, 0, 1]);
    println!("\nGram of t_θ:\n{}", l.gram_scaled(&l.one(), 0));
    println!("Gram of α·t_θ, α = {alpha}:\n{}", l.gram_scaled(&alpha, 0));
    println!("Gram of αθ·t_θ:\n{}", l.gram_scaled(&alpha, 1));
    println!("N(α) = {}, Tr(α) = {}", l.norm(&alpha), l.trace(&alpha));
    Ok(())
}
