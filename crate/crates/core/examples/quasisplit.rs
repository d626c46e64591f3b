//! Quasi-split triples over F_3: the square-class test, the exhaustive search
//! for a common isotropic m-space, and the trivialization αℓ² ∈ k^× read off
//! the subspace when one exists.
//!
//!     cargo run --example quasisplit

use quadpencil::correspondence::{gc_to_orb, Triple};
use quadpencil::etale::EtaleAlgebra;
use quadpencil::field::FieldDescriptor;
use quadpencil::poly::UniPoly;
use quadpencil::quasisplit::{brute_force_isotropic_fp, extract_trivialization, is_quasisplit_fp};

fn main() -> quadpencil::error::Result<()> {
    let f3 = FieldDescriptor::prime(3)?;
    let l = EtaleAlgebra::new(UniPoly::from_i64(f3, &[0, -1, 0, 1]))?;
    println!("L = F_3[t]/({}), {} square classes\n", l.modulus(), l.class_count_fp()?);

    let mut seen = Vec::new();
    for alpha in l.units_fp()? {
        let key = l.square_class_key(&alpha)?;
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let t = Triple::new(l.clone(), alpha.clone())?;
        let split = is_quasisplit_fp(&t)?;
        let found = brute_force_isotropic_fp(&gc_to_orb(&t)?, l.half_degree(), 1_000_000)?;
        print!("α = {:<16} quasi-split: {split:<5}  isotropic line: ", alpha.to_string());
        match found {
            Some(m) => {
                let tr = extract_trivialization(&t, &m)?;
                let v: Vec<String> = m.basis()[0].iter().map(ToString::to_string).collect();
                println!("({})  ->  α·({})² = {}", v.join(", "), tr.ell, tr.a);
            }
            None => println!("none"),
        }
    }
    Ok(())
}
