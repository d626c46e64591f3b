//! The bijection between orbits of stable pencils and triples `(L, θ, α)`,
//! the passage to hyperelliptic curves, and the `F_p` searches over Moebius
//! moves (automorphism sets, fibers, equivalence).

use crate::descent::HyperCurve;
use crate::error::{Error, Result};
use crate::etale::{AlgElement, EtaleAlgebra};
use crate::field::{FieldDescriptor, Scalar};
use crate::gl2::GL2Elem;
use crate::matrix::Matrix;
use crate::pencil::Pencil;
use crate::poly::UniPoly;

/// `(L, θ, α)` with `θ` the class of `t`: a general generator is moved into
/// this position by re-presenting `L` through its minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    algebra: EtaleAlgebra,
    alpha: AlgElement,
}

impl Triple {
    pub fn new(algebra: EtaleAlgebra, alpha: AlgElement) -> Result<Self> {
        algebra.element(alpha.coeffs().to_vec())?;
        algebra.inverse(&alpha)?;
        Ok(Triple { algebra, alpha })
    }

    /// `(L, θ', α)` for an arbitrary generator `θ'`, re-presented as
    /// `(k[t]/(P_{θ'}), t, α)` via `t ↦ θ'`.
    pub fn with_generator(algebra: &EtaleAlgebra, theta: &AlgElement, alpha: &AlgElement) -> Result<Self> {
        let minp = algebra.min_poly(theta);
        if minp.degree() != Some(algebra.degree()) {
            return Err(Error::NotGenerator);
        }
        let q = algebra.express_in(alpha, theta)?;
        let l2 = EtaleAlgebra::new(minp)?;
        let alpha2 = l2.reduce(&q);
        Triple::new(l2, alpha2)
    }

    pub fn quasi_split(algebra: EtaleAlgebra) -> Self {
        let one = algebra.one();
        Triple {
            algebra,
            alpha: one,
        }
    }

    pub fn algebra(&self) -> &EtaleAlgebra {
        &self.algebra
    }

    pub fn alpha(&self) -> &AlgElement {
        &self.alpha
    }

    pub fn theta(&self) -> AlgElement {
        self.algebra.theta()
    }

    pub fn modulus(&self) -> &UniPoly {
        self.algebra.modulus()
    }

    pub fn field(&self) -> FieldDescriptor {
        self.algebra.field()
    }
}

/// Data fixed by [`orb_to_gc`]: the `GL_2` element that made `w_0`
/// nondegenerate and the basis `γ(θ^i) = Θ^i v` of `k^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub g2: GL2Elem,
    /// Columns `v, Θv, ..., Θ^{n-1}v`.
    pub gamma: Matrix,
}

impl Frame {
    /// Carries the pencil of the triple back to the `w_0`-normalized input.
    pub fn transport(&self, p: &Pencil) -> Result<Pencil> {
        p.act(&GL2Elem::identity(p.field()), &self.gamma.inverse()?)
    }
}

/// `(α t_θ, αθ t_θ)` as Gram matrices in the power basis.
pub fn gc_to_orb(t: &Triple) -> Result<Pencil> {
    let l = &t.algebra;
    l.inverse(&t.alpha)?;
    Pencil::new(l.gram_scaled(&t.alpha, 0), l.gram_scaled(&t.alpha, 1))
}

/// Inverse of [`gc_to_orb`] up to the returned frame.
pub fn orb_to_gc(p: &Pencil) -> Result<(Triple, Frame)> {
    let field = p.field();
    let n = p.dim();
    let (g2, _) = p.find_nondegenerate_member()?;
    let normalized = p.act_gl2(&g2);
    let w0 = normalized.first();
    let w1 = normalized.second();
    let big_theta = w0.inverse()?.mul(w1);
    let f = big_theta.char_poly()?;
    if !f.is_separable() {
        return Err(Error::Unstable);
    }
    let gamma = cyclic_basis(&big_theta).ok_or(Error::InternalNoCyclicVector)?;
    let pulled = gamma.transpose().mul(w0).mul(&gamma);

    let l = EtaleAlgebra::new(f)?;
    // Σ_k α_k · gram(θ^k) = pulled, n^2 equations in n unknowns
    let grams: Vec<Matrix> = (0..n).map(|k| l.gram_scaled(&l.theta_pow(k), 0)).collect();
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            rows.push(grams.iter().map(|g| g.get(i, j)).collect::<Vec<_>>());
            rhs.push(pulled.get(i, j));
        }
    }
    let system = Matrix::from_rows(field, rows)?;
    let sol = system.solve_unique(&rhs)?;
    let alpha = l.element(sol)?;
    let triple = Triple::new(l, alpha)?;
    debug_assert_eq!(triple.algebra.gram_scaled(&triple.alpha, 0), pulled);
    Ok((triple, Frame { g2, gamma }))
}

/// First `v` in the scan order (unit vectors, pairwise sums, then every
/// vector over `F_p`) whose Krylov basis `v, Θv, ...` spans.
fn cyclic_basis(m: &Matrix) -> Option<Matrix> {
    let field = m.field();
    let n = m.rows();
    let krylov = |v: Vec<Scalar>| -> Option<Matrix> {
        let mut cols = Vec::with_capacity(n);
        let mut cur = v;
        for _ in 0..n {
            let next = m.mul_vec(&cur);
            cols.push(cur);
            cur = next;
        }
        let g = Matrix::from_columns(field, n, &cols);
        (g.rank() == n).then_some(g)
    };
    let unit = |i: usize| -> Vec<Scalar> {
        (0..n)
            .map(|k| if k == i { field.one() } else { field.zero() })
            .collect()
    };
    for i in 0..n {
        if let Some(g) = krylov(unit(i)) {
            return Some(g);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let v: Vec<Scalar> = unit(i).iter().zip(unit(j)).map(|(a, b)| a + &b).collect();
            if let Some(g) = krylov(v) {
                return Some(g);
            }
        }
    }
    let p = field.order()?;
    let total = p.checked_pow(n as u32)?;
    (1..total).find_map(|mut code| {
        let v = (0..n)
            .map(|_| {
                let s = Scalar::Mod { value: code % p, p };
                code /= p;
                s
            })
            .collect();
        krylov(v)
    })
}

pub fn triple_to_curve(t: &Triple) -> Result<HyperCurve> {
    HyperCurve::new(t.algebra.min_poly(&t.theta()))
}

pub fn curve_to_triple(c: &HyperCurve, alpha: &AlgElement) -> Result<Triple> {
    Triple::new(c.algebra().clone(), alpha.clone())
}

/// Moves `θ` to `A·θ = (aθ + b)/(cθ + d)`. The new `α` is `α(cθ + d)/r`
/// with `r` the frame ratio, so that the pencil moves by `A` exactly:
/// `gc_to_orb(result) = act(gc_to_orb(t), A, basis)` where `basis` comes from
/// [`mobius_basis`]. The class of `α` is unchanged.
pub fn mobius_on_triple(t: &Triple, g: &GL2Elem) -> Result<Triple> {
    let l = &t.algebra;
    let theta_p = l.mobius(g, &t.theta())?;
    let r = l.frame_ratio(g)?;
    let den = l.add(&l.scale(&t.theta(), &g.c), &l.from_scalar(g.d.clone()));
    let alpha_p = l.div(&l.mul(&t.alpha, &den), &r)?;
    Triple::with_generator(l, &theta_p, &alpha_p)
}

/// Columns `(A·θ)^j` in the power basis of `θ`.
pub fn mobius_basis(t: &Triple, g: &GL2Elem) -> Result<Matrix> {
    let l = &t.algebra;
    let theta_p = l.mobius(g, &t.theta())?;
    let mut cols = Vec::with_capacity(l.degree());
    let mut cur = l.one();
    for _ in 0..l.degree() {
        cols.push(cur.coeffs().to_vec());
        cur = l.mul(&cur, &theta_p);
    }
    Ok(Matrix::from_columns(l.field(), l.degree(), &cols))
}

/// `{A ∈ PGL_2(F_p) : A·θ has the same minimal polynomial as θ}`, in
/// lexicographic order.
pub fn aut_set_fp(t: &Triple) -> Result<Vec<GL2Elem>> {
    let l = &t.algebra;
    let f = l.modulus();
    let theta = t.theta();
    let mut out = Vec::new();
    for g in GL2Elem::projective_elements(l.field())? {
        if let Ok(tp) = l.mobius(&g, &theta) {
            if &l.min_poly(&tp) == f {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// One element per square class in `{Σ a_i (A·θ)^i : A ∈ Aut}` where
/// `α = Σ a_i θ^i`, in order of first appearance.
pub fn fiber_fp(t: &Triple) -> Result<Vec<AlgElement>> {
    let l = &t.algebra;
    let q = l.to_poly(&t.alpha);
    let mut keys = Vec::new();
    let mut out = Vec::new();
    for g in aut_set_fp(t)? {
        let image = l.eval_poly(&q, &l.mobius(&g, &t.theta())?);
        let key = l.square_class_key(&image)?;
        if !keys.contains(&key) {
            keys.push(key);
            out.push(image);
        }
    }
    Ok(out)
}

/// A Moebius move `A` and the image of `θ_1` under the algebra isomorphism
/// `L_1 → L_2` that it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub mobius: GL2Elem,
    pub theta_image: AlgElement,
}

/// Searches `PGL_2(F_p)` for `A` with `P_{A·θ_1} = f_2`; each hit gives an
/// isomorphism `L_2 → L_1`, `t ↦ A·θ_1`, and the classes of `α` are compared
/// through it. Every isomorphism arises this way, since `A·θ_1` ranges over
/// all generators of `L_1` that are Moebius images of `θ_1`.
pub fn triples_equivalent_fp(t1: &Triple, t2: &Triple) -> Result<Option<EquivalenceWitness>> {
    let field = t1.field();
    field.require_prime()?;
    if t2.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), t2.field().to_string()));
    }
    if t1.algebra.degree() != t2.algebra.degree() {
        return Ok(None);
    }
    let l1 = &t1.algebra;
    let l2 = &t2.algebra;
    for g in GL2Elem::projective_elements(field)? {
        let Ok(tp) = l1.mobius(&g, &t1.theta()) else {
            continue;
        };
        if &l1.min_poly(&tp) != l2.modulus() {
            continue;
        }
        let moved = mobius_on_triple(t1, &g)?;
        if l2.square_class_equal_fp(moved.alpha(), t2.alpha())? {
            let theta_image = l2.reduce(&l1.express_in(&t1.theta(), &tp)?);
            return Ok(Some(EquivalenceWitness {
                mobius: g,
                theta_image,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn cubic(field: FieldDescriptor) -> EtaleAlgebra {
        EtaleAlgebra::new(UniPoly::from_i64(field, &[0, -1, 0, 1])).unwrap()
    }

    #[test]
    fn gc_to_orb_example() {
        let t = Triple::quasi_split(cubic(FieldDescriptor::Rationals));
        let p = gc_to_orb(&t).unwrap();
        let q = FieldDescriptor::Rationals;
        assert_eq!(p.first(), &Matrix::from_i64(q, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 1]]));
        assert_eq!(p.second(), &Matrix::from_i64(q, &[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]));
        assert!(p.is_stable());
    }

    #[test]
    fn gc_to_orb_scalings() {
        let f = fp(7);
        let l = cubic(f);
        let t = Triple::quasi_split(l.clone());
        let p = gc_to_orb(&t).unwrap();
        let c = l.from_i64(&[2, 1, 3]);
        let t2 = Triple::new(l.clone(), l.mul(&c, &c)).unwrap();
        let gn = l.regular_rep(&c);
        assert_eq!(
            gc_to_orb(&t2).unwrap(),
            p.act(&GL2Elem::identity(f), &gn).unwrap()
        );
        let a = f.from_i64(3);
        let t3 = Triple::new(l.clone(), l.from_scalar(a.clone())).unwrap();
        let p3 = gc_to_orb(&t3).unwrap();
        assert_eq!(p3.first(), &p.first().scale(&a));
        assert_eq!(p3.second(), &p.second().scale(&a));
    }

    #[test]
    fn orb_to_gc_quasi_split() {
        let f = fp(7);
        let t = Triple::quasi_split(cubic(f));
        let p = gc_to_orb(&t).unwrap();
        let (t2, frame) = orb_to_gc(&p).unwrap();
        assert_eq!(t2, t);
        assert_eq!(frame.gamma, Matrix::identity(f, 3));
    }

    #[test]
    fn orb_to_gc_transport() {
        let f = fp(7);
        let l = cubic(f);
        let t = Triple::new(l.clone(), l.from_i64(&[1, 2, 0])).unwrap();
        let p0 = gc_to_orb(&t).unwrap();
        let gn = Matrix::from_i64(f, &[&[1, 2, 0], &[0, 1, 3], &[1, 0, 2]]);
        for g2 in [GL2Elem::identity(f), GL2Elem::swap(f), GL2Elem::from_i64(f, 1, 2, 3, 1).unwrap()] {
            let p = p0.act(&g2, &gn).unwrap();
            let (t2, frame) = orb_to_gc(&p).unwrap();
            let back = frame.transport(&gc_to_orb(&t2).unwrap()).unwrap();
            assert_eq!(back, p.act_gl2(&frame.g2));
            assert!(triples_equivalent_fp(&t, &t2).unwrap().is_some());
        }
    }

    #[test]
    fn mobius_moves_pencil_exactly() {
        let f = fp(7);
        let l = cubic(f);
        let t = Triple::new(l.clone(), l.from_i64(&[3, 0, 1])).unwrap();
        let g = GL2Elem::from_i64(f, 2, 1, 1, 3).unwrap();
        let moved = mobius_on_triple(&t, &g).unwrap();
        let expect = gc_to_orb(&t)
            .unwrap()
            .act(&g, &mobius_basis(&t, &g).unwrap())
            .unwrap();
        assert_eq!(gc_to_orb(&moved).unwrap(), expect);
    }

    #[test]
    fn mobius_translation_shifts_modulus() {
        let q = FieldDescriptor::Rationals;
        let t = Triple::quasi_split(cubic(q));
        let g = GL2Elem::from_i64(q, 1, 1, 0, 1).unwrap();
        let moved = mobius_on_triple(&t, &g).unwrap();
        // f(t - 1) = t^3 - 3t^2 + 2t
        assert_eq!(moved.modulus(), &UniPoly::from_i64(q, &[0, 2, -3, 1]));
        assert_eq!(mobius_on_triple(&t, &GL2Elem::identity(q)).unwrap(), t);
    }

    #[test]
    fn curve_roundtrip() {
        let q = FieldDescriptor::Rationals;
        let l = cubic(q);
        let t = Triple::quasi_split(l.clone());
        let c = triple_to_curve(&t).unwrap();
        assert_eq!(c.f(), l.modulus());
        assert_eq!(c.genus(), 1);
        assert_eq!(curve_to_triple(&c, &l.one()).unwrap(), t);
        assert!(matches!(
            curve_to_triple(&c, &l.theta()),
            Err(Error::NotUnit { .. })
        ));
    }

    #[test]
    fn aut_set_contains_negation() {
        let f = fp(5);
        let t = Triple::quasi_split(cubic(f));
        let aut = aut_set_fp(&t).unwrap();
        assert!(aut.contains(&GL2Elem::identity(f)));
        let neg = GL2Elem::from_i64(f, -1, 0, 0, 1).unwrap().normalized();
        assert!(aut.contains(&neg));
        let fib = fiber_fp(&t).unwrap();
        assert_eq!(fib.len(), 1);
    }

    #[test]
    fn inequivalent_classes_f3() {
        let f = fp(3);
        let l = cubic(f);
        let one = Triple::quasi_split(l.clone());
        let alpha = l.reduce(&UniPoly::interpolate(
            f,
            &[0, 1, -1].map(|v| f.from_i64(v)),
            &[1, 1, -1].map(|v| f.from_i64(v)),
        ));
        let t = Triple::new(l, alpha).unwrap();
        assert!(triples_equivalent_fp(&one, &t).unwrap().is_none());
        assert!(triples_equivalent_fp(&t, &t).unwrap().is_some());
    }
}
