//! Seeded random objects by rejection sampling. Over `Q` entries are small
//! integers in `-3..=3`.

use rand::Rng;

use crate::correspondence::Triple;
use crate::error::{Error, Result};
use crate::etale::{AlgElement, EtaleAlgebra};
use crate::field::{FieldDescriptor, Scalar};
use crate::gl2::GL2Elem;
use crate::matrix::Matrix;
use crate::pencil::Pencil;
use crate::poly::UniPoly;

/// Rejection loops give up after this many draws.
pub const MAX_ATTEMPTS: usize = 100_000;

pub fn random_scalar<R: Rng>(field: FieldDescriptor, rng: &mut R) -> Scalar {
    match field {
        FieldDescriptor::Prime(p) => Scalar::Mod {
            value: rng.gen_range(0..p),
            p,
        },
        FieldDescriptor::Rationals => field.from_i64(rng.gen_range(-3..=3)),
    }
}

pub fn random_nonzero<R: Rng>(field: FieldDescriptor, rng: &mut R) -> Scalar {
    loop {
        let s = random_scalar(field, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

fn retry<T, R: Rng>(rng: &mut R, what: &str, mut draw: impl FnMut(&mut R) -> Option<T>) -> Result<T> {
    for _ in 0..MAX_ATTEMPTS {
        if let Some(x) = draw(rng) {
            return Ok(x);
        }
    }
    Err(Error::Invalid(format!("no {what} found after {MAX_ATTEMPTS} draws")))
}

/// Monic separable polynomial of degree `n`.
pub fn random_separable_monic<R: Rng>(field: FieldDescriptor, n: usize, rng: &mut R) -> Result<UniPoly> {
    retry(rng, "separable polynomial", |rng| {
        let mut c: Vec<Scalar> = (0..n).map(|_| random_scalar(field, rng)).collect();
        c.push(field.one());
        let f = UniPoly::new(field, c);
        f.is_separable().then_some(f)
    })
}

pub fn random_element<R: Rng>(l: &EtaleAlgebra, rng: &mut R) -> AlgElement {
    let c = (0..l.degree()).map(|_| random_scalar(l.field(), rng)).collect();
    l.element(c).expect("right length")
}

pub fn random_unit<R: Rng>(l: &EtaleAlgebra, rng: &mut R) -> Result<AlgElement> {
    retry(rng, "unit", |rng| {
        let x = random_element(l, rng);
        l.is_unit(&x).then_some(x)
    })
}

pub fn random_algebra<R: Rng>(field: FieldDescriptor, n: usize, rng: &mut R) -> Result<EtaleAlgebra> {
    EtaleAlgebra::new(random_separable_monic(field, n, rng)?)
}

pub fn random_triple<R: Rng>(field: FieldDescriptor, n: usize, rng: &mut R) -> Result<Triple> {
    let l = random_algebra(field, n, rng)?;
    let alpha = random_unit(&l, rng)?;
    Triple::new(l, alpha)
}

pub fn random_symmetric<R: Rng>(field: FieldDescriptor, n: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let v = random_scalar(field, rng);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

/// Stable pencil of two independent random symmetric matrices.
pub fn random_stable_pencil<R: Rng>(field: FieldDescriptor, n: usize, rng: &mut R) -> Result<Pencil> {
    retry(rng, "stable pencil", |rng| {
        let a = random_symmetric(field, n, rng);
        let b = random_symmetric(field, n, rng);
        Pencil::new(a, b).ok().filter(Pencil::is_stable)
    })
}

pub fn random_gl2<R: Rng>(field: FieldDescriptor, rng: &mut R) -> Result<GL2Elem> {
    retry(rng, "invertible 2x2 matrix", |rng| {
        GL2Elem::new(
            random_scalar(field, rng),
            random_scalar(field, rng),
            random_scalar(field, rng),
            random_scalar(field, rng),
        )
        .ok()
    })
}

pub fn random_gln<R: Rng>(field: FieldDescriptor, n: usize, rng: &mut R) -> Result<Matrix> {
    retry(rng, "invertible matrix", |rng| {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, random_scalar(field, rng));
            }
        }
        (!m.det().ok()?.is_zero()).then_some(m)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_generation_is_deterministic() {
        let f = FieldDescriptor::prime(7).unwrap();
        let a = random_stable_pencil(f, 5, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let b = random_stable_pencil(f, 5, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert_eq!(a, b);
        assert!(a.is_stable());
        let t = random_triple(FieldDescriptor::Rationals, 3, &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
        assert!(t.algebra().is_unit(t.alpha()));
    }
}
