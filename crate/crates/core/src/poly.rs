//! Dense univariate polynomials over a [`FieldDescriptor`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::Matrix;

/// Coefficients lowest degree first; trailing zeros are always trimmed so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: FieldDescriptor,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: FieldDescriptor, coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        let mut p = UniPoly { field, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(field: FieldDescriptor, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldDescriptor) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// The polynomial `t`.
    pub fn x(field: FieldDescriptor) -> Self {
        Self::monomial(field.one(), 1)
    }

    pub fn monomial(c: Scalar, deg: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(field, coeffs)
    }

    /// `t - a`.
    pub fn linear_root(a: &Scalar) -> Self {
        let field = a.field();
        Self::new(field, vec![-a, field.one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.field,
            (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.field,
            (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(self.field, out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(self.field, quot), Self::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(self.field).rem(modulus);
        let base = self.rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` with `u*a + v*b = g`, `g` monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        if a.field != b.field {
            return Err(Error::FieldMismatch(a.field.to_string(), b.field.to_string()));
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::Invalid("gcd of two zero polynomials".into()));
        }
        let field = a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(field), Self::zero(field));
        let (mut t0, mut t1) = (Self::zero(field), Self::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.leading().inv().expect("nonzero gcd");
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Resultant via the Sylvester determinant, taking the actual degrees.
    pub fn resultant(a: &Self, b: &Self) -> Scalar {
        let field = a.field;
        match (a.degree(), b.degree()) {
            (None, _) | (_, None) => field.zero(),
            (Some(0), Some(db)) => a.leading().pow(db as u64),
            (Some(da), Some(0)) => b.leading().pow(da as u64),
            (Some(da), Some(db)) => sylvester(a, da, b, db).det().expect("square"),
        }
    }

    /// `(-1)^{n(n-1)/2} Res(f, f')/lc(f)` for `n = deg f`.
    ///
    /// Evaluated without the division: the first Sylvester column is cleared
    /// against the leading row, which also keeps the formula valid when the
    /// characteristic divides `n` (so `deg f' < n - 1`).
    pub fn discriminant(&self) -> Scalar {
        let n = self.degree().unwrap_or(0);
        formal_discriminant(&self.coeffs, n, self.field)
    }

    /// Lagrange interpolation through `(xs[i], ys[i])` with distinct `xs`.
    pub fn interpolate(field: FieldDescriptor, xs: &[Scalar], ys: &[Scalar]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let mut acc = Self::zero(field);
        for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
            let mut basis = Self::one(field);
            let mut denom = field.one();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Self::linear_root(xj));
                    denom = &denom * &(xi - xj);
                }
            }
            acc = acc.add(&basis.scale(&yi.div(&denom)));
        }
        acc
    }

    pub fn is_separable(&self) -> bool {
        self.degree().is_some_and(|d| d >= 1) && self.gcd(&self.derivative()).is_one()
    }
}

/// Sylvester matrix of `a` (formal degree `da`) and `b` (formal degree `db`),
/// rows of `a`-shifts first, coefficients highest degree first.
pub(crate) fn sylvester(a: &UniPoly, da: usize, b: &UniPoly, db: usize) -> Matrix {
    sylvester_formal(&coeffs_to(a, da), &coeffs_to(b, db), a.field)
}

/// Discriminant of `sum coeffs[i] t^i` viewed as a polynomial of formal
/// degree `n` (the leading coefficient `coeffs[n]` may vanish).
pub(crate) fn formal_discriminant(coeffs: &[Scalar], n: usize, field: FieldDescriptor) -> Scalar {
    if n <= 1 {
        return field.one();
    }
    let coeff = |i: usize| coeffs.get(i).cloned().unwrap_or_else(|| field.zero());
    let f = UniPoly::new(field, (0..=n).map(coeff).collect());
    // derivative with formal degree n-1
    let df = UniPoly::new(
        field,
        (1..=n).map(|i| &coeff(i) * &field.from_i64(i as i64)).collect(),
    );
    let mut s = sylvester_formal(&coeffs_to(&f, n), &coeffs_to(&df, n - 1), field);
    // clear column 0 of the first derivative row against row 0
    let nf = field.from_i64(n as i64);
    let first_df_row = n - 1;
    for c in 0..s.cols() {
        let v = &s.get(first_df_row, c) - &(&nf * &s.get(0, c));
        s.set(first_df_row, c, v);
    }
    let minor = s.minor(0, 0);
    let det = minor.det().expect("square");
    let sign_exp = n * (n - 1) / 2;
    if sign_exp % 2 == 1 {
        -det
    } else {
        det
    }
}

fn coeffs_to(p: &UniPoly, deg: usize) -> Vec<Scalar> {
    (0..=deg).map(|i| p.coeff(i)).collect()
}

fn sylvester_formal(a: &[Scalar], b: &[Scalar], field: FieldDescriptor) -> Matrix {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let size = da + db;
    let mut m = Matrix::zeros(field, size, size);
    for r in 0..db {
        for k in 0..=da {
            m.set(r, r + k, a[da - k].clone());
        }
    }
    for r in 0..da {
        for k in 0..=db {
            m.set(db + r, r + k, b[db - k].clone());
        }
    }
    m
}

impl Ord for UniPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for UniPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{c}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
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

    #[test]
    fn ext_gcd_examples() {
        let a = UniPoly::from_i64(q(), &[-1, 0, 1]);
        let b = UniPoly::from_i64(q(), &[-1, 1]);
        let (g, u, v) = UniPoly::ext_gcd(&a, &b).unwrap();
        assert_eq!(g, b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);

        let f5 = fp(5);
        let a = UniPoly::from_i64(f5, &[0, -1, 0, 1]);
        let b = UniPoly::from_i64(f5, &[0, 0, 1]);
        let (g, u, v) = UniPoly::ext_gcd(&a, &b).unwrap();
        assert_eq!(g, UniPoly::x(f5));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);

        let a = UniPoly::from_i64(q(), &[-2, 1]);
        let one = UniPoly::one(q());
        let (g, _, v) = UniPoly::ext_gcd(&a, &one).unwrap();
        assert!(g.is_one());
        assert!(v.is_one());
    }

    #[test]
    fn ext_gcd_errors() {
        let a = UniPoly::from_i64(q(), &[1, 1]);
        let b = UniPoly::from_i64(fp(5), &[1, 1]);
        assert!(matches!(
            UniPoly::ext_gcd(&a, &b),
            Err(Error::FieldMismatch(..))
        ));
        assert!(UniPoly::ext_gcd(&UniPoly::zero(q()), &UniPoly::zero(q())).is_err());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(
            UniPoly::from_i64(q(), &[0, -1, 0, 1]).discriminant(),
            q().from_i64(4)
        );
        assert!(UniPoly::from_i64(q(), &[0, 0, 1]).discriminant().is_zero());
        // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
        assert_eq!(
            UniPoly::from_i64(q(), &[-6, 11, -6, 1]).discriminant(),
            q().from_i64(4)
        );
        // quadratic b^2 - 4ac
        assert_eq!(
            UniPoly::from_i64(q(), &[3, 5, 2]).discriminant(),
            q().from_i64(25 - 24)
        );
    }

    #[test]
    fn discriminant_when_char_divides_degree() {
        // t^5 - t over F_5: f' = -1, separable, disc must be nonzero
        let f = UniPoly::from_i64(fp(5), &[0, -1, 0, 0, 0, 1]);
        assert!(f.is_separable());
        assert!(!f.discriminant().is_zero());
        // t^5 - 1 = (t - 1)^5 over F_5
        let g = UniPoly::from_i64(fp(5), &[-1, 0, 0, 0, 0, 1]);
        assert!(g.discriminant().is_zero());
    }

    #[test]
    fn div_rem_and_compose() {
        let f = UniPoly::from_i64(q(), &[0, -1, 0, 1]);
        let g = UniPoly::from_i64(q(), &[1, 1]);
        let (qq, r) = f.div_rem(&g);
        assert_eq!(qq.mul(&g).add(&r), f);
        let shifted = f.compose(&UniPoly::from_i64(q(), &[-1, 1]));
        // f(t-1) = t^3 - 3t^2 + 2t
        assert_eq!(shifted, UniPoly::from_i64(q(), &[0, 2, -3, 1]));
    }

    #[test]
    fn resultant_of_linear_factors() {
        let a = UniPoly::from_i64(q(), &[-1, 1]);
        let b = UniPoly::from_i64(q(), &[-3, 0, 1]);
        // Res(t - 1, t^2 - 3) = 1 - 3
        assert_eq!(UniPoly::resultant(&a, &b), q().from_i64(-2));
    }
}
