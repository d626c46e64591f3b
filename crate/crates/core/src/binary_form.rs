//! Binary forms `F(x, y) = sum c_i x^{n-i} y^i` and the determinant form of a
//! pair of symmetric matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::gl2::GL2Elem;
use crate::matrix::Matrix;
use crate::poly::{formal_discriminant, UniPoly};

/// `coeffs[i]` multiplies `x^{n-i} y^i`; there are always `n + 1` of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    field: FieldDescriptor,
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(field: FieldDescriptor, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("binary form needs at least one coefficient".into()));
        }
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), "form coefficient".into()));
        }
        Ok(BinaryForm { field, coeffs })
    }

    pub fn from_i64(field: FieldDescriptor, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
            .expect("nonempty literal")
    }

    /// `y^n f(x/y)` for a polynomial of degree at most `n`.
    pub fn homogenize(f: &UniPoly, n: usize) -> Self {
        let field = f.field();
        BinaryForm {
            field,
            coeffs: (0..=n).map(|i| f.coeff(n - i)).collect(),
        }
    }

    /// `F(t, 1)`.
    pub fn dehomogenize(&self) -> UniPoly {
        let n = self.degree();
        UniPoly::new(self.field, (0..=n).map(|j| self.coeffs[n - j].clone()).collect())
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn eval(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .fold(self.field.zero(), |acc, (i, c)| {
                &acc + &(&(c * &x.pow((n - i) as u64)) * &y.pow(i as u64))
            })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        BinaryForm {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Projective normalization: first nonzero coefficient becomes 1.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => self.scale(&lead.inv().expect("nonzero")),
        }
    }

    /// Whether `self = s * other` for some nonzero scalar `s`.
    pub fn proportional_to(&self, other: &Self) -> bool {
        self.degree() == other.degree()
            && !self.is_zero()
            && !other.is_zero()
            && self.normalized() == other.normalized()
    }

    /// Discriminant, normalized so that it equals `disc(F(t, 1))` whenever the
    /// `x^n` coefficient is nonzero. It is the same polynomial in the
    /// coefficients in general, so a root at `(1 : 0)` needs no special case:
    /// it vanishes exactly when `F` has a repeated linear factor over the
    /// algebraic closure.
    pub fn discriminant(&self) -> Scalar {
        let n = self.degree();
        let coeffs: Vec<Scalar> = (0..=n).map(|j| self.coeffs[n - j].clone()).collect();
        formal_discriminant(&coeffs, n, self.field)
    }

    /// `F ∘ A`, i.e. `(x, y) ↦ (ax + by, cx + dy)`.
    pub fn act(&self, g: &GL2Elem) -> Result<Self> {
        if g.field() != self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), g.field().to_string()));
        }
        if g.det().is_zero() {
            return Err(Error::Singular2x2);
        }
        let n = self.degree();
        let first = UniPoly::new(self.field, vec![g.b.clone(), g.a.clone()]);
        let second = UniPoly::new(self.field, vec![g.d.clone(), g.c.clone()]);
        let mut acc = UniPoly::zero(self.field);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = first.pow(n - i).mul(&second.pow(i)).scale(c);
            acc = acc.add(&term);
        }
        Ok(Self::homogenize(&acc, n))
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = |v: &str, e: usize| match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            let vars: Vec<String> = [mono("x", n - i), mono("y", i)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect();
            let vars = vars.join("*");
            terms.push(match (c.is_one(), vars.is_empty()) {
                (_, true) => c.to_string(),
                (true, false) => vars,
                (false, false) => format!("{c}*{vars}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `det(A x - B y)` as a degree-`n` binary form.
///
/// Interpolates `det(A λ - B)` at `λ = 0..=n`; when the field has fewer than
/// `n + 1` elements it expands the polynomial matrix symbolically instead.
pub fn det_binary_form(a: &Matrix, b: &Matrix) -> Result<BinaryForm> {
    check_pair(a, b)?;
    let n = a.rows();
    let field = a.field();
    let points = field.small_elements(n + 1);
    let f = if points.len() == n + 1 {
        let values: Vec<Scalar> = points
            .iter()
            .map(|l| a.scale(l).sub(b).det().expect("square"))
            .collect();
        UniPoly::interpolate(field, &points, &values)
    } else {
        det_binary_form_symbolic(a, b)
    };
    Ok(BinaryForm::homogenize(&f, n))
}

fn check_pair(a: &Matrix, b: &Matrix) -> Result<()> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
    }
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimMismatch("pencil members of different size".into()));
    }
    Ok(())
}

/// `det(A λ - B)` as a polynomial in `λ`, by Bareiss elimination over `k[λ]`.
pub(crate) fn det_binary_form_symbolic(a: &Matrix, b: &Matrix) -> UniPoly {
    let n = a.rows();
    let field = a.field();
    let mut m: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| UniPoly::new(field, vec![-b.entry(i, j), a.get(i, j)]))
                .collect()
        })
        .collect();
    if n == 0 {
        return UniPoly::one(field);
    }
    let mut negate = false;
    let mut prev = UniPoly::one(field);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return UniPoly::zero(field),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    #[test]
    fn det_form_examples() {
        let a = Matrix::identity(q(), 3);
        let b = Matrix::from_i64(q(), &[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        // x (x - y)(x + y) = x^3 - x y^2
        assert_eq!(
            det_binary_form(&a, &b).unwrap(),
            BinaryForm::from_i64(q(), &[1, 0, -1, 0])
        );
        let a = Matrix::from_i64(q(), &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 1]]);
        let b = Matrix::from_i64(q(), &[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(
            det_binary_form(&a, &b).unwrap(),
            BinaryForm::from_i64(q(), &[-1, 0, 1, 0])
        );
        let same = det_binary_form(&a, &a).unwrap();
        assert!(same.discriminant().is_zero());
    }

    #[test]
    fn symbolic_matches_interpolation() {
        let a = Matrix::from_i64(q(), &[&[2, 1, 0], &[1, -1, 3], &[0, 3, 5]]);
        let b = Matrix::from_i64(q(), &[&[1, 0, 4], &[0, 2, 1], &[4, 1, -3]]);
        let interp = det_binary_form(&a, &b).unwrap();
        let sym = BinaryForm::homogenize(&det_binary_form_symbolic(&a, &b), 3);
        assert_eq!(interp, sym);
    }

    #[test]
    fn small_field_uses_symbolic_path() {
        // n = 5 over F_3: only 3 interpolation points exist
        let f3 = FieldDescriptor::prime(3).unwrap();
        let a = Matrix::identity(f3, 5);
        let b = Matrix::diagonal(
            f3,
            &[0, 1, 2, 0, 1].map(|v| f3.from_i64(v)),
        );
        let form = det_binary_form(&a, &b).unwrap();
        // x^2 (x - y)^2 (x - 2y)
        let expect = BinaryForm::homogenize(
            &UniPoly::from_i64(f3, &[0, 1])
                .pow(2)
                .mul(&UniPoly::from_i64(f3, &[-1, 1]).pow(2))
                .mul(&UniPoly::from_i64(f3, &[-2, 1])),
            5,
        );
        assert_eq!(form, expect);
    }

    #[test]
    fn discriminant_examples() {
        let f = BinaryForm::from_i64(q(), &[1, 0, -1, 0]);
        assert_eq!(f.discriminant(), q().from_i64(4));
        assert!(BinaryForm::from_i64(q(), &[0, 1, 0, 0]).discriminant().is_zero());
        assert!(BinaryForm::from_i64(q(), &[1, 0, 0, 0]).discriminant().is_zero());
        // root at (1:0) but simple: x^2 y - x y^2 ... = y * x * (x - y)
        assert!(!BinaryForm::from_i64(q(), &[0, 1, -1, 0]).discriminant().is_zero());
        // y^2 * x: double root at (1:0)
        assert!(BinaryForm::from_i64(q(), &[0, 0, 1, 0]).discriminant().is_zero());
    }

    #[test]
    fn act_examples() {
        let f = BinaryForm::from_i64(q(), &[1, 0, -1, 0]);
        assert_eq!(f.act(&GL2Elem::identity(q())).unwrap(), f);
        // swap: y^3 - y x^2
        assert_eq!(
            f.act(&GL2Elem::swap(q())).unwrap(),
            BinaryForm::from_i64(q(), &[0, -1, 0, 1])
        );
        let cube = BinaryForm::from_i64(q(), &[1, 0, 0, 0]);
        let g = GL2Elem::from_i64(q(), 2, 0, 0, 1).unwrap();
        assert_eq!(
            cube.act(&g).unwrap(),
            BinaryForm::from_i64(q(), &[8, 0, 0, 0])
        );
    }
}
