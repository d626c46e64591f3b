//! The étale algebra `L = k[t]/(f)` for a monic separable `f` of odd degree,
//! its trace form `t_θ` and the square-class group `L^× / k^× L^{×2}`.
//!
//! Elements are coefficient vectors in the power basis `1, θ, ..., θ^{n-1}`
//! where `θ` is the class of `t`. They carry no back-reference to their
//! algebra; every operation goes through the [`EtaleAlgebra`] value.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::factor::factor_poly_fp;
use crate::field::{FieldDescriptor, Scalar};
use crate::gl2::GL2Elem;
use crate::matrix::Matrix;
use crate::poly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgElement {
    coeffs: Vec<Scalar>,
}

impl AlgElement {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// `Some(c)` if the element is the constant `c`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.coeffs[1..].iter().all(Scalar::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.coeffs[0].field();
        let p = UniPoly::new(field, self.coeffs.clone());
        write!(f, "{}", p.to_string().replace('t', "θ"))
    }
}

/// Certifies `α = c · γ²` for the `α` it was built against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareClassWitness {
    c: Scalar,
    gamma: AlgElement,
}

impl SquareClassWitness {
    /// Checks the certificate on construction.
    pub fn new(alg: &EtaleAlgebra, alpha: &AlgElement, c: Scalar, gamma: AlgElement) -> Result<Self> {
        let w = SquareClassWitness { c, gamma };
        if alg.verify_square_class_witness(alpha, &w) {
            Ok(w)
        } else {
            Err(Error::BadWitness)
        }
    }

    /// An unchecked pair, e.g. parsed from input; verify before trusting it.
    pub fn unchecked(c: Scalar, gamma: AlgElement) -> Self {
        SquareClassWitness { c, gamma }
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn gamma(&self) -> &AlgElement {
        &self.gamma
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaleAlgebra {
    field: FieldDescriptor,
    modulus: UniPoly,
    derivative: UniPoly,
    /// Monic irreducible factors of the modulus, only over `F_p`.
    factors: Option<Vec<UniPoly>>,
}

impl EtaleAlgebra {
    /// `k[t]/(f)`; `f` must be monic, separable and of odd degree `>= 3`.
    pub fn new(modulus: UniPoly) -> Result<Self> {
        let n = modulus.degree().unwrap_or(0);
        if n < 3 || n % 2 == 0 {
            return Err(Error::BadModulus(format!("degree {n} is not odd and >= 3")));
        }
        if !modulus.is_monic() {
            return Err(Error::BadModulus("not monic".into()));
        }
        if modulus.discriminant().is_zero() {
            return Err(Error::BadModulus(format!("{modulus} is not separable")));
        }
        let field = modulus.field();
        let factors = if field.is_prime_field() {
            Some(factor_poly_fp(&modulus)?.into_iter().map(|(g, _)| g).collect())
        } else {
            None
        };
        Ok(EtaleAlgebra {
            field,
            derivative: modulus.derivative(),
            modulus,
            factors,
        })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonzero modulus")
    }

    /// `m` with `n = 2m + 1`.
    pub fn half_degree(&self) -> usize {
        (self.degree() - 1) / 2
    }

    /// Irreducible factors of the modulus (prime fields only).
    pub fn factors(&self) -> Option<&[UniPoly]> {
        self.factors.as_deref()
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<AlgElement> {
        if coeffs.len() != self.degree() {
            return Err(Error::DimMismatch(format!(
                "element has {} coefficients, algebra degree is {}",
                coeffs.len(),
                self.degree()
            )));
        }
        if coeffs.iter().any(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch(self.field.to_string(), "element".into()));
        }
        Ok(AlgElement { coeffs })
    }

    pub fn from_i64(&self, coeffs: &[i64]) -> AlgElement {
        self.reduce(&UniPoly::from_i64(self.field, coeffs))
    }

    /// Class of a polynomial modulo `f`.
    pub fn reduce(&self, p: &UniPoly) -> AlgElement {
        let r = p.rem(&self.modulus);
        AlgElement {
            coeffs: (0..self.degree()).map(|i| r.coeff(i)).collect(),
        }
    }

    pub fn to_poly(&self, x: &AlgElement) -> UniPoly {
        UniPoly::new(self.field, x.coeffs.clone())
    }

    pub fn zero(&self) -> AlgElement {
        self.from_scalar(self.field.zero())
    }

    pub fn one(&self) -> AlgElement {
        self.from_scalar(self.field.one())
    }

    pub fn from_scalar(&self, c: Scalar) -> AlgElement {
        let mut coeffs = vec![self.field.zero(); self.degree()];
        coeffs[0] = c;
        AlgElement { coeffs }
    }

    /// The class of `t`.
    pub fn theta(&self) -> AlgElement {
        self.theta_pow(1)
    }

    pub fn theta_pow(&self, k: usize) -> AlgElement {
        self.reduce(&UniPoly::monomial(self.field.one(), k))
    }

    pub fn add(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        AlgElement {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        AlgElement {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self, x: &AlgElement) -> AlgElement {
        AlgElement {
            coeffs: x.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, x: &AlgElement, c: &Scalar) -> AlgElement {
        AlgElement {
            coeffs: x.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        self.reduce(&self.to_poly(x).mul(&self.to_poly(y)))
    }

    /// `θ · x`, by shifting and folding the top coefficient back in.
    pub fn mul_theta(&self, x: &AlgElement) -> AlgElement {
        let n = self.degree();
        let top = x.coeffs[n - 1].clone();
        let mut coeffs = Vec::with_capacity(n);
        coeffs.push(self.field.zero());
        coeffs.extend_from_slice(&x.coeffs[..n - 1]);
        if !top.is_zero() {
            for (i, c) in coeffs.iter_mut().enumerate() {
                *c = &*c - &(&top * &self.modulus.coeff(i));
            }
        }
        AlgElement { coeffs }
    }

    pub fn pow(&self, x: &AlgElement, e: u64) -> AlgElement {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse via the extended Euclidean algorithm. A zero divisor yields
    /// `NotUnit` carrying the nontrivial gcd with the modulus.
    pub fn inverse(&self, x: &AlgElement) -> Result<AlgElement> {
        let px = self.to_poly(x);
        if px.is_zero() {
            return Err(Error::NotUnit {
                gcd: self.modulus.clone(),
            });
        }
        let (g, u, _) = UniPoly::ext_gcd(&px, &self.modulus)?;
        if !g.is_one() {
            return Err(Error::NotUnit { gcd: g });
        }
        Ok(self.reduce(&u))
    }

    pub fn is_unit(&self, x: &AlgElement) -> bool {
        let px = self.to_poly(x);
        !px.is_zero() && px.gcd(&self.modulus).is_one()
    }

    pub fn div(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        Ok(self.mul(x, &self.inverse(y)?))
    }

    /// `q(x)` for a polynomial `q`.
    pub fn eval_poly(&self, q: &UniPoly, x: &AlgElement) -> AlgElement {
        let mut acc = self.zero();
        for c in q.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.from_scalar(c.clone()));
        }
        acc
    }

    /// Matrix of multiplication by `x`: column `j` holds `x θ^j`.
    /// For `x = θ` this is the companion matrix of `f`.
    pub fn regular_rep(&self, x: &AlgElement) -> Matrix {
        let n = self.degree();
        let mut cols = Vec::with_capacity(n);
        let mut cur = x.clone();
        for _ in 0..n {
            cols.push(cur.coeffs.clone());
            cur = self.mul_theta(&cur);
        }
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn trace(&self, x: &AlgElement) -> Scalar {
        self.regular_rep(x).trace()
    }

    pub fn norm(&self, x: &AlgElement) -> Scalar {
        self.regular_rep(x).det().expect("square")
    }

    pub fn char_poly(&self, x: &AlgElement) -> UniPoly {
        self.regular_rep(x).char_poly().expect("square")
    }

    /// Minimal polynomial of `x` over `k`: the first linear dependency among
    /// `1, x, x^2, ...`.
    pub fn min_poly(&self, x: &AlgElement) -> UniPoly {
        let n = self.degree();
        let mut powers = vec![self.one()];
        for d in 1..=n {
            let next = self.mul(&powers[d - 1], x);
            powers.push(next);
            let m = Matrix::from_columns(
                self.field,
                n,
                &powers.iter().map(|p| p.coeffs.clone()).collect::<Vec<_>>(),
            );
            let ker = m.kernel();
            if let Some(v) = ker.first() {
                // a dependency among 1..x^d with a nonzero x^d coefficient
                return UniPoly::new(self.field, v.clone()).monic();
            }
        }
        unreachable!("an element of an n-dimensional algebra satisfies a degree-n polynomial")
    }

    pub fn is_generator(&self, x: &AlgElement) -> bool {
        self.min_poly(x).degree() == Some(self.degree())
    }

    /// Writes `x` as `q(gen)` with `deg q < n`; `gen` must generate `L`.
    pub fn express_in(&self, x: &AlgElement, gen: &AlgElement) -> Result<UniPoly> {
        let n = self.degree();
        let mut cols = Vec::with_capacity(n);
        let mut cur = self.one();
        for _ in 0..n {
            cols.push(cur.coeffs.clone());
            cur = self.mul(&cur, gen);
        }
        let m = Matrix::from_columns(self.field, n, &cols);
        match m.solve_unique(&x.coeffs) {
            Ok(sol) => Ok(UniPoly::new(self.field, sol)),
            Err(Error::Singular) => Err(Error::NotGenerator),
            Err(e) => Err(e),
        }
    }

    /// `θ*_{n-1}(x)`: the coefficient of `θ^{n-1}`.
    pub fn dual_top_coeff(&self, x: &AlgElement) -> Scalar {
        x.coeffs[self.degree() - 1].clone()
    }

    /// Gram matrix of `α θ^e · t_θ` in the power basis:
    /// `G[i][j] = θ*_{n-1}(α θ^{i+j+e})`.
    pub fn gram_scaled(&self, alpha: &AlgElement, e: usize) -> Matrix {
        let n = self.degree();
        let mut tops = Vec::with_capacity(2 * n - 1);
        let mut cur = alpha.clone();
        for _ in 0..e {
            cur = self.mul_theta(&cur);
        }
        for _ in 0..2 * n - 1 {
            tops.push(self.dual_top_coeff(&cur));
            cur = self.mul_theta(&cur);
        }
        let mut g = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, tops[i + j].clone());
            }
        }
        g
    }

    /// `Tr(θ^i / f'(θ))`, which equals 1 for `i = n - 1` and 0 below.
    pub fn serre_check(&self, i: usize) -> Scalar {
        let fp_theta = self.reduce(&self.derivative);
        let inv = self
            .inverse(&fp_theta)
            .expect("f'(θ) is a unit for separable f");
        self.trace(&self.mul(&self.theta_pow(i), &inv))
    }

    /// Moebius image `(a x + b)(c x + d)^{-1}`.
    pub fn mobius(&self, g: &GL2Elem, x: &AlgElement) -> Result<AlgElement> {
        let num = self.add(&self.scale(x, &g.a), &self.from_scalar(g.b.clone()));
        let den = self.add(&self.scale(x, &g.c), &self.from_scalar(g.d.clone()));
        self.div(&num, &den)
    }

    /// `r = f'(θ) / P'_{θ'}(θ')` for `θ' = A·θ`, so that `t_{θ'} = r · t_θ`.
    ///
    /// The result is checked against the closed form
    /// `N(cθ+d) (cθ+d)^{n-2} / det(A)^{n-1}`.
    pub fn frame_ratio(&self, g: &GL2Elem) -> Result<AlgElement> {
        let theta_p = self.mobius(g, &self.theta())?;
        let minp = self.min_poly(&theta_p);
        if minp.degree() != Some(self.degree()) {
            return Err(Error::NotGenerator);
        }
        let num = self.reduce(&self.derivative);
        let den = self.eval_poly(&minp.derivative(), &theta_p);
        let r = self.div(&num, &den)?;
        debug_assert_eq!(Some(&r), self.frame_ratio_closed_form(g).ok().as_ref());
        Ok(r)
    }

    /// `N(cθ+d) (cθ+d)^{n-2} / det(A)^{n-1}`.
    pub fn frame_ratio_closed_form(&self, g: &GL2Elem) -> Result<AlgElement> {
        let n = self.degree();
        let den = self.add(
            &self.scale(&self.theta(), &g.c),
            &self.from_scalar(g.d.clone()),
        );
        self.inverse(&den)?;
        let norm = self.norm(&den);
        let scalar = &norm * &g.det().powi(-((n - 1) as i64));
        Ok(self.scale(&self.pow(&den, (n - 2) as u64), &scalar))
    }

    /// Whether `α = c γ²` exactly.
    pub fn verify_square_class_witness(&self, alpha: &AlgElement, w: &SquareClassWitness) -> bool {
        if w.gamma.coeffs.len() != self.degree() || w.c.field() != self.field {
            return false;
        }
        let sq = self.mul(&w.gamma, &w.gamma);
        !w.c.is_zero() && self.is_unit(&w.gamma) && self.scale(&sq, &w.c) == *alpha
    }

    /// Quadratic characters of a unit on the factor fields `F_p[t]/(f_i)`:
    /// `true` where the image is a square.
    pub fn square_signature(&self, x: &AlgElement) -> Result<Vec<bool>> {
        let p = self.field.require_prime()?;
        if !self.is_unit(x) {
            self.inverse(x)?;
        }
        let factors = self.factors.as_ref().expect("prime field algebra has factors");
        let px = self.to_poly(x);
        Ok(factors
            .iter()
            .map(|fi| {
                let d = fi.degree().expect("nonconstant") as u32;
                let exp = (BigUint::from(p).pow(d) - 1u32) / 2u32;
                px.pow_mod(&exp, fi).is_one()
            })
            .collect())
    }

    /// Signature of the non-square constants: `(-1)^{d_i}` per factor.
    fn nonsquare_constant_signature(&self) -> Vec<bool> {
        self.factors
            .as_ref()
            .expect("prime field")
            .iter()
            .map(|fi| fi.degree().expect("nonconstant") % 2 == 0)
            .collect()
    }

    /// Canonical label of the class of `x` in `L^× / k^× L^{×2}` over `F_p`:
    /// the signature normalized to be `true` at the first odd-degree factor.
    pub fn square_class_key(&self, x: &AlgElement) -> Result<Vec<bool>> {
        let mut sig = self.square_signature(x)?;
        let flip = self.nonsquare_constant_signature();
        let pivot = flip
            .iter()
            .position(|&s| !s)
            .expect("odd total degree has an odd-degree factor");
        if !sig[pivot] {
            for (s, f) in sig.iter_mut().zip(&flip) {
                *s = *s == *f;
            }
        }
        Ok(sig)
    }

    /// Whether `α / β ∈ k^× L^{×2}` (over `F_p`).
    pub fn square_class_equal_fp(&self, alpha: &AlgElement, beta: &AlgElement) -> Result<bool> {
        Ok(self.square_class_key(alpha)? == self.square_class_key(beta)?)
    }

    pub fn is_trivial_class_fp(&self, alpha: &AlgElement) -> Result<bool> {
        self.square_class_equal_fp(alpha, &self.one())
    }

    /// Number of classes in `L^× / k^× L^{×2}` over `F_p`: `2^{r-1}`.
    pub fn class_count_fp(&self) -> Result<usize> {
        self.field.require_prime()?;
        Ok(1 << (self.factors.as_ref().expect("prime field").len() - 1))
    }

    /// Every element of `L` over `F_p`, in base-`p` counting order of the
    /// coefficient vector (lowest coefficient fastest).
    pub fn elements_fp(&self) -> Result<impl Iterator<Item = AlgElement> + '_> {
        let p = self.field.require_prime()?;
        let n = self.degree() as u32;
        let total = p
            .checked_pow(n)
            .ok_or_else(|| Error::Invalid("algebra too large to enumerate".into()))?;
        Ok((0..total).map(move |mut code| {
            let mut coeffs = Vec::with_capacity(n as usize);
            for _ in 0..n {
                coeffs.push(Scalar::Mod { value: code % p, p });
                code /= p;
            }
            AlgElement { coeffs }
        }))
    }

    pub fn units_fp(&self) -> Result<impl Iterator<Item = AlgElement> + '_> {
        Ok(self.elements_fp()?.filter(|x| self.is_unit(x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn fp(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn cubic(field: FieldDescriptor) -> EtaleAlgebra {
        EtaleAlgebra::new(UniPoly::from_i64(field, &[0, -1, 0, 1])).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        let f = q();
        assert!(EtaleAlgebra::new(UniPoly::from_i64(f, &[0, 0, 1])).is_err());
        assert!(EtaleAlgebra::new(UniPoly::from_i64(f, &[0, 0, 0, 1])).is_err());
        assert!(EtaleAlgebra::new(UniPoly::from_i64(f, &[0, -1, 0, 2])).is_err());
        assert!(EtaleAlgebra::new(UniPoly::from_i64(f, &[1, 0, 0, 0, 1])).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let l = cubic(q());
        let th = l.theta();
        assert_eq!(l.mul(&th, &l.theta_pow(2)), th);
        match l.inverse(&th) {
            Err(Error::NotUnit { gcd }) => assert_eq!(gcd, UniPoly::x(q())),
            other => panic!("expected NotUnit, got {other:?}"),
        }
        let l5 = cubic(fp(5));
        let x = l5.sub(&l5.theta(), &l5.from_scalar(fp(5).from_i64(2)));
        let u = l5.inverse(&x).unwrap();
        assert_eq!(l5.mul(&x, &u), l5.one());
    }

    #[test]
    fn regular_rep_examples() {
        let l = cubic(q());
        assert_eq!(l.regular_rep(&l.one()), Matrix::identity(q(), 3));
        let c = l.regular_rep(&l.theta());
        assert_eq!(
            c,
            Matrix::from_i64(q(), &[&[0, 0, 0], &[1, 0, 1], &[0, 1, 0]])
        );
        assert_eq!(l.regular_rep(&l.theta_pow(2)), c.mul(&c));
    }

    #[test]
    fn trace_norm_generator() {
        let l = cubic(q());
        assert_eq!(l.trace(&l.theta()), q().zero());
        assert_eq!(l.trace(&l.theta_pow(2)), q().from_i64(2));
        assert_eq!(l.trace(&l.one()), q().from_i64(3));
        assert!(l.norm(&l.theta()).is_zero());
        assert!(l.is_generator(&l.theta()));
        assert!(!l.is_generator(&l.one()));
        assert_eq!(l.min_poly(&l.one()), UniPoly::from_i64(q(), &[-1, 1]));
        // θ^2 has roots 0, 1, 1: minimal polynomial t^2 - t
        assert_eq!(l.min_poly(&l.theta_pow(2)), UniPoly::from_i64(q(), &[0, -1, 1]));
    }

    #[test]
    fn dual_top_coeff_examples() {
        let l = cubic(q());
        assert!(l.dual_top_coeff(&l.theta_pow(2)).is_one());
        assert!(l.dual_top_coeff(&l.theta()).is_zero());
        assert!(l.dual_top_coeff(&l.mul(&l.theta(), &l.theta_pow(2))).is_zero());
    }

    #[test]
    fn gram_examples() {
        let l = cubic(q());
        assert_eq!(
            l.gram_scaled(&l.one(), 0),
            Matrix::from_i64(q(), &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 1]])
        );
        assert_eq!(
            l.gram_scaled(&l.one(), 1),
            Matrix::from_i64(q(), &[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])
        );
    }

    #[test]
    fn serre_examples() {
        let l = cubic(q());
        assert!(l.serre_check(0).is_zero());
        assert!(l.serre_check(1).is_zero());
        assert!(l.serre_check(2).is_one());
    }

    /// Partial fractions over the roots 0, 1, -1 of t^3 - t:
    /// Σ r^2 / f'(r) = 0/(-1) + 1/2 + 1/2 = 1.
    #[test]
    fn serre_by_roots() {
        let f = UniPoly::from_i64(q(), &[0, -1, 0, 1]);
        let df = f.derivative();
        let total = [0i64, 1, -1].iter().fold(q().zero(), |acc, &r| {
            let r = q().from_i64(r);
            &acc + &(&r * &r).div(&df.eval(&r))
        });
        assert!(total.is_one());
    }

    #[test]
    fn frame_ratio_identity_and_translation() {
        let l = cubic(fp(5));
        let id = GL2Elem::identity(fp(5));
        assert_eq!(l.frame_ratio(&id).unwrap(), l.one());
        let tr = GL2Elem::from_i64(fp(5), 1, 1, 0, 1).unwrap();
        assert_eq!(
            l.frame_ratio(&tr).unwrap(),
            l.frame_ratio_closed_form(&tr).unwrap()
        );
        let sc = GL2Elem::from_i64(fp(5), 2, 0, 0, 1).unwrap();
        assert_eq!(
            l.frame_ratio(&sc).unwrap(),
            l.frame_ratio_closed_form(&sc).unwrap()
        );
        // θ ↦ 1/θ needs θ invertible; here f(0) = 0
        let sw = GL2Elem::swap(fp(5));
        assert!(matches!(l.frame_ratio(&sw), Err(Error::NotUnit { .. })));
    }

    #[test]
    fn square_class_example_f3() {
        let l = cubic(fp(3));
        // factor values at (0, 1, -1) = (1, 1, -1): interpolate
        let alpha = l.reduce(&UniPoly::interpolate(
            fp(3),
            &[0, 1, -1].map(|v| fp(3).from_i64(v)),
            &[1, 1, -1].map(|v| fp(3).from_i64(v)),
        ));
        assert!(!l.square_class_equal_fp(&alpha, &l.one()).unwrap());
        assert!(l.square_class_equal_fp(&alpha, &alpha).unwrap());
        assert_eq!(l.class_count_fp().unwrap(), 4);
    }

    #[test]
    fn witness_examples() {
        let l = EtaleAlgebra::new(UniPoly::from_i64(q(), &[-1, 0, 0, 1])).unwrap();
        let alpha = l.scale(&l.theta_pow(2), &q().from_i64(4));
        let w = SquareClassWitness::unchecked(q().one(), l.scale(&l.theta(), &q().from_i64(2)));
        assert!(l.verify_square_class_witness(&alpha, &w));
        let w1 = SquareClassWitness::unchecked(q().one(), l.one());
        assert!(!l.verify_square_class_witness(&l.theta(), &w1));
        let minus9 = l.from_scalar(q().from_i64(-9));
        let w2 = SquareClassWitness::unchecked(q().from_i64(-1), l.from_scalar(q().from_i64(3)));
        assert!(l.verify_square_class_witness(&minus9, &w2));
        assert!(SquareClassWitness::new(&l, &l.theta(), q().one(), l.one()).is_err());
    }
}
