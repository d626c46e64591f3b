//! A stable pencil over F_7 goes to a triple (L, θ, α) and back. The frame
//! returned with the triple carries the original pencil onto the rebuilt one.
//!
//!     cargo run --example roundtrip

use quadpencil::correspondence::{gc_to_orb, orb_to_gc};
use quadpencil::field::FieldDescriptor;
use quadpencil::random::random_stable_pencil;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> quadpencil::error::Result<()> {
    let f7 = FieldDescriptor::prime(7)?;
    let pencil = random_stable_pencil(f7, 5, &mut ChaCha8Rng::seed_from_u64(42))?;
    println!("{pencil}\n");

    let (triple, frame) = orb_to_gc(&pencil)?;
    println!("f = {}", triple.modulus());
    println!("α = {}", triple.alpha());
    println!("member change g2 = {}", frame.g2);

    let rebuilt = frame.transport(&gc_to_orb(&triple)?)?;
    println!("\nexact after transport: {}", rebuilt == pencil.act_gl2(&frame.g2));

    let (again, _) = orb_to_gc(&gc_to_orb(&triple)?)?;
    let l = triple.algebra();
    println!(
        "gc -> orb -> gc keeps f: {}, keeps the class of α: {}",
        again.modulus() == triple.modulus(),
        l.square_class_equal_fp(triple.alpha(), again.alpha())?
    );
    Ok(())
}
