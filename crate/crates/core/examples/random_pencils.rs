//! Seeded random stable pencils and how their square classes are spread.
//!
//!     cargo run --example random_pencils -- 11 40

use std::collections::BTreeMap;

use quadpencil::correspondence::orb_to_gc;
use quadpencil::field::FieldDescriptor;
use quadpencil::quasisplit::is_quasisplit_fp;
use quadpencil::random::random_stable_pencil;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> quadpencil::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let count: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(30);
    let field = FieldDescriptor::prime(p)?;

    let mut by_factors: BTreeMap<String, (u32, u32)> = BTreeMap::new();
    for seed in 0..count {
        let pencil = random_stable_pencil(field, 3, &mut ChaCha8Rng::seed_from_u64(seed))?;
        let (t, _) = orb_to_gc(&pencil)?;
        let shape = t
            .algebra()
            .factors()
            .map(|fs| fs.iter().map(|f| f.degree().unwrap_or(0).to_string()).collect::<Vec<_>>().join("+"))
            .unwrap_or_default();
        let e = by_factors.entry(shape).or_default();
        e.0 += 1;
        e.1 += u32::from(is_quasisplit_fp(&t)?);
    }
    println!("{count} random stable pencils of ternary quadrics over F_{p}");
    println!("factor degrees   pencils   quasi-split");
    for (shape, (n, split)) in by_factors {
        println!("{shape:<16} {n:<9} {split}");
    }
    Ok(())
}
