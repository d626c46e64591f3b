//! Divisor classes on y² = f(t) over F_7. A divisor in Mumford form
//! (g, h) gives α = (-1)^{deg g} g(θ); the pencil of (L, θ, α) then carries a
//! common isotropic subspace spanned by low powers of θ.
//!
//!     cargo run --example descent

use quadpencil::descent::{jp_check, HyperCurve, MumfordDivisor};
use quadpencil::field::FieldDescriptor;
use quadpencil::poly::UniPoly;

fn main() -> quadpencil::error::Result<()> {
    let f7 = FieldDescriptor::prime(7)?;
    let curve = HyperCurve::new(UniPoly::from_i64(f7, &[1, 3, 0, 0, 0, 1]))?;
    println!("y² = {}, genus {}", curve.f(), curve.genus());

    let points = curve.non_weierstrass_points_fp()?;
    println!("{} affine points off the branch locus", points.len());

    // one point, then two points with different t
    let second = points.iter().find(|(t, _)| *t != points[0].0).expect("two t values").clone();
    for pts in [vec![points[0].clone()], vec![points[0].clone(), second]] {
        let d = MumfordDivisor::from_points(f7, &pts)?;
        let r = jp_check(&curve, &d, 1_000_000)?;
        println!(
            "\ng = {}, h = {}\n  α = {}, N(α) square: {:?}\n  powers of θ below degree {} isotropic: {}, oracle at dim {}: {}",
            d.g,
            d.h,
            r.alpha,
            r.norm_is_square,
            r.degree_count_dim,
            r.degree_count_isotropic,
            r.claimed_dim,
            r.oracle.label()
        );
    }
    Ok(())
}
