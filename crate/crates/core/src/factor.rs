//! Factorization over `F_p`: square-free decomposition, distinct-degree
//! splitting and Cantor-Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::poly::UniPoly;

/// Seed used when the caller does not supply a random stream. The output is
/// sorted, so it never depends on the seed.
pub const DEFAULT_SPLIT_SEED: u64 = 0x5eed;

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients. The product of the factors (with multiplicity) times the
/// leading coefficient of `f` equals `f`.
pub fn factor_poly_fp(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SPLIT_SEED);
    factor_poly_fp_with(f, &mut rng)
}

pub fn factor_poly_fp_with<R: Rng>(f: &UniPoly, rng: &mut R) -> Result<Vec<(UniPoly, usize)>> {
    let p = f.field().require_prime()?;
    match f.degree() {
        None | Some(0) => return Err(Error::Invalid("factoring a constant polynomial".into())),
        _ => {}
    }
    let mut out = Vec::new();
    for (sqf, mult) in squarefree(&f.monic(), p) {
        for (g, d) in distinct_degree(&sqf, p) {
            for h in equal_degree(&g, d, p, rng) {
                out.push((h, mult));
            }
        }
    }
    out.sort();
    Ok(out)
}

fn pth_root(f: &UniPoly, p: u64) -> UniPoly {
    let coeffs: Vec<Scalar> = f.coeffs().iter().step_by(p as usize).cloned().collect();
    UniPoly::new(f.field(), coeffs)
}

fn squarefree(f: &UniPoly, p: u64) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree(&pth_root(f, p), p) {
            out.push((g, m * p as usize));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac.monic(), i));
        }
        i += 1;
        c = c.exact_div(&y);
        w = y;
    }
    if !c.is_one() {
        for (g, m) in squarefree(&pth_root(&c.monic(), p), p) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Pairs `(g, d)` where `g` is the product of all degree-`d` factors of the
/// square-free `f`.
fn distinct_degree(f: &UniPoly, p: u64) -> Vec<(UniPoly, usize)> {
    let field = f.field();
    let t = UniPoly::x(field);
    let pe = BigUint::from(p);
    let mut rest = f.clone();
    let mut h = t.rem(&rest);
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&pe, &rest);
        let g = rest.gcd(&h.sub(&t));
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest.monic(), deg));
    }
    out
}

fn equal_degree<R: Rng>(g: &UniPoly, d: usize, p: u64, rng: &mut R) -> Vec<UniPoly> {
    let n = g.degree().expect("nonzero");
    if n == d {
        return vec![g.monic()];
    }
    let field = g.field();
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = random_poly(field, n, p, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut b = g.gcd(&a);
        if b.is_one() {
            let c = a.pow_mod(&exp, g).sub(&UniPoly::one(field));
            b = g.gcd(&c);
        }
        let db = b.degree().unwrap_or(0);
        if db > 0 && db < n {
            let mut out = equal_degree(&b, d, p, rng);
            out.extend(equal_degree(&g.exact_div(&b), d, p, rng));
            return out;
        }
    }
}

fn random_poly<R: Rng>(field: FieldDescriptor, below: usize, p: u64, rng: &mut R) -> UniPoly {
    UniPoly::new(
        field,
        (0..below)
            .map(|_| Scalar::Mod {
                value: rng.gen_range(0..p),
                p,
            })
            .collect(),
    )
}

/// Irreducibility over `F_p`: `f` has no factor of degree `d <= deg/2`,
/// tested by `gcd(f, t^{p^d} - t) = 1`.
pub fn is_irreducible_fp(f: &UniPoly) -> Result<bool> {
    let p = f.field().require_prime()?;
    let n = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(n) => n,
    };
    let t = UniPoly::x(f.field());
    let pe = BigUint::from(p);
    let mut h = t.rem(f);
    for _ in 1..=n / 2 {
        h = h.pow_mod(&pe, f);
        if !f.gcd(&h.sub(&t)).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn product(fs: &[(UniPoly, usize)], field: FieldDescriptor) -> UniPoly {
        fs.iter()
            .fold(UniPoly::one(field), |acc, (g, m)| acc.mul(&g.pow(*m)))
    }

    #[test]
    fn splits_t3_minus_t_over_f5() {
        let f5 = fp(5);
        let f = UniPoly::from_i64(f5, &[0, -1, 0, 1]);
        let fs = factor_poly_fp(&f).unwrap();
        let expect = vec![
            (UniPoly::from_i64(f5, &[0, 1]), 1),
            (UniPoly::from_i64(f5, &[1, 1]), 1),
            (UniPoly::from_i64(f5, &[-1, 1]), 1),
        ];
        let mut expect = expect;
        expect.sort();
        assert_eq!(fs, expect);
    }

    #[test]
    fn t2_plus_1() {
        let f3 = fp(3);
        let f = UniPoly::from_i64(f3, &[1, 0, 1]);
        assert_eq!(factor_poly_fp(&f).unwrap(), vec![(f.clone(), 1)]);
        let f5 = fp(5);
        let f = UniPoly::from_i64(f5, &[1, 0, 1]);
        let fs = factor_poly_fp(&f).unwrap();
        // (t - 3)(t - 2), sorted by constant term residue
        assert_eq!(
            fs,
            vec![
                (UniPoly::from_i64(f5, &[-3, 1]), 1),
                (UniPoly::from_i64(f5, &[-2, 1]), 1)
            ]
        );
    }

    #[test]
    fn repeated_and_pth_power_factors() {
        let f3 = fp(3);
        // (t+1)^3 (t^2+1)^2 * 2
        let a = UniPoly::from_i64(f3, &[1, 1]).pow(3);
        let b = UniPoly::from_i64(f3, &[1, 0, 1]).pow(2);
        let f = a.mul(&b).scale(&f3.from_i64(2));
        let fs = factor_poly_fp(&f).unwrap();
        assert_eq!(
            fs,
            vec![
                (UniPoly::from_i64(f3, &[1, 1]), 3),
                (UniPoly::from_i64(f3, &[1, 0, 1]), 2)
            ]
        );
        assert_eq!(product(&fs, f3).scale(&f.leading()), f);
    }

    #[test]
    fn rejects_rationals() {
        let f = UniPoly::from_i64(FieldDescriptor::Rationals, &[1, 1]);
        assert!(matches!(factor_poly_fp(&f), Err(Error::WrongField(_))));
    }

    /// Brute-force irreducibility: no monic divisor of degree 1..=n/2.
    fn brute_irreducible(f: &UniPoly, p: u64) -> bool {
        let n = f.degree().unwrap();
        let field = f.field();
        for d in 1..=n / 2 {
            let count = p.pow(d as u32);
            for code in 0..count {
                let mut c = code;
                let mut coeffs = Vec::new();
                for _ in 0..d {
                    coeffs.push(field.from_i64((c % p) as i64));
                    c /= p;
                }
                coeffs.push(field.one());
                let g = UniPoly::new(field, coeffs);
                if f.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn random_polys_factor_correctly() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [3u64, 5, 7] {
            let field = fp(p);
            for _ in 0..60 {
                let deg = rng.gen_range(1..=7);
                let mut coeffs: Vec<Scalar> = (0..deg)
                    .map(|_| field.from_i64(rng.gen_range(0..p) as i64))
                    .collect();
                coeffs.push(field.from_i64(rng.gen_range(1..p) as i64));
                let f = UniPoly::new(field, coeffs);
                let fs = factor_poly_fp_with(&f, &mut rng).unwrap();
                assert_eq!(product(&fs, field).scale(&f.leading()), f);
                for (g, _) in &fs {
                    assert!(g.is_monic());
                    assert!(is_irreducible_fp(g).unwrap());
                    assert!(brute_irreducible(g, p));
                }
            }
        }
    }
}
