//! Pencils of quadrics `Ax - By` over `k`, their determinant forms and the
//! `GL_2(k) × GL_n(k)` action.

use std::fmt;

use crate::binary_form::{det_binary_form, BinaryForm};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::gl2::GL2Elem;
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    a: Matrix,
    b: Matrix,
}

/// Which member of the pencil was made the first one by
/// [`Pencil::find_nondegenerate_member`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberChoice {
    First,
    Second,
    /// `A - λB`.
    Combination(Scalar),
}

impl Pencil {
    /// Two symmetric, linearly independent `n × n` matrices, `n` odd `>= 3`.
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return Err(Error::DimMismatch("pencil members differ in size".into()));
        }
        if a.field() != b.field() {
            return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
        }
        let n = a.rows();
        if n < 3 || n % 2 == 0 {
            return Err(Error::BadPencil(format!("size {n} is not odd and >= 3")));
        }
        if !a.is_symmetric() || !b.is_symmetric() {
            return Err(Error::BadPencil("members must be symmetric".into()));
        }
        let stacked = Matrix::from_columns(
            a.field(),
            n * n,
            &[flatten(&a), flatten(&b)],
        );
        if stacked.rank() < 2 {
            return Err(Error::BadPencil("members are linearly dependent".into()));
        }
        Ok(Pencil { a, b })
    }

    pub fn first(&self) -> &Matrix {
        &self.a
    }

    pub fn second(&self) -> &Matrix {
        &self.b
    }

    pub fn field(&self) -> FieldDescriptor {
        self.a.field()
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    /// The member `Ax - By`.
    pub fn member(&self, x: &Scalar, y: &Scalar) -> Matrix {
        self.a.scale(x).sub(&self.b.scale(y))
    }

    /// `det(Ax - By)`.
    pub fn determinant_form(&self) -> BinaryForm {
        det_binary_form(&self.a, &self.b).expect("validated pencil")
    }

    pub fn is_stable(&self) -> bool {
        !self.determinant_form().discriminant().is_zero()
    }

    /// `(A, B) ↦ (gnᵀ(dA + cB)gn, gnᵀ(bA + aB)gn)`.
    ///
    /// With this orientation the generator `θ = A^{-1}B` of a pencil moves to
    /// `(aθ + b)/(cθ + d)`, and the determinant form `F` becomes
    /// `det(gn)^2 · F(dx - by, -cx + ay)`.
    pub fn act(&self, g2: &GL2Elem, gn: &Matrix) -> Result<Pencil> {
        if gn.rows() != self.dim() || gn.cols() != self.dim() {
            return Err(Error::DimMismatch("GL_n element has the wrong size".into()));
        }
        if gn.det()?.is_zero() {
            return Err(Error::Singular);
        }
        let gt = gn.transpose();
        let a = self.a.scale(&g2.d).add(&self.b.scale(&g2.c));
        let b = self.a.scale(&g2.b).add(&self.b.scale(&g2.a));
        Ok(Pencil {
            a: gt.mul(&a).mul(gn),
            b: gt.mul(&b).mul(gn),
        })
    }

    pub fn act_gl2(&self, g2: &GL2Elem) -> Pencil {
        self.act(g2, &Matrix::identity(self.field(), self.dim()))
            .expect("identity is invertible")
    }

    /// A `GL_2` change making the first member invertible. The scan tries `A`,
    /// then `B`, then `A - λB` for `λ = 1, 2, ...`.
    ///
    /// Fails with `FieldTooSmall` only when every rational member of a stable
    /// pencil over `F_p` is degenerate, which needs `p + 1 <= n`.
    pub fn find_nondegenerate_member(&self) -> Result<(GL2Elem, MemberChoice)> {
        if !self.is_stable() {
            return Err(Error::Unstable);
        }
        let field = self.field();
        if !self.a.det()?.is_zero() {
            return Ok((GL2Elem::identity(field), MemberChoice::First));
        }
        if !self.b.det()?.is_zero() {
            return Ok((GL2Elem::swap(field), MemberChoice::Second));
        }
        // det(A - λB) has at most n roots, so n + 1 candidates suffice over Q
        let limit = match field.order() {
            Some(p) => p - 1,
            None => self.dim() as u64 + 1,
        };
        for l in 1..=limit {
            let lambda = field.from_i64(l as i64);
            if !self.member(&field.one(), &lambda).det()?.is_zero() {
                // d = 1, c = -λ puts A - λB first and keeps B second
                let g = GL2Elem::new(field.one(), field.zero(), -&lambda, field.one())?;
                return Ok((g, MemberChoice::Combination(lambda)));
            }
        }
        Err(Error::FieldTooSmall)
    }
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.to_rows().into_iter().flatten().collect()
}

impl fmt::Display for Pencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "A =\n{}", self.a)?;
        write!(f, "B =\n{}", self.b)
    }
}

/// Zero locus of the determinant form on `P^1`, stored with its first
/// nonzero coefficient equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharScheme {
    form: BinaryForm,
}

impl CharScheme {
    pub fn from_form(form: &BinaryForm) -> Self {
        CharScheme {
            form: form.normalized(),
        }
    }

    pub fn form(&self) -> &BinaryForm {
        &self.form
    }
}

impl fmt::Display for CharScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form)
    }
}

pub fn char_scheme(p: &Pencil) -> Result<CharScheme> {
    let form = p.determinant_form();
    if form.discriminant().is_zero() {
        return Err(Error::Unstable);
    }
    Ok(CharScheme::from_form(&form))
}

/// The lexicographically first `g ∈ PGL_2(F_p)` with `S1 ∘ g ∝ S2`.
pub fn char_schemes_equivalent_fp(s1: &CharScheme, s2: &CharScheme) -> Result<Option<GL2Elem>> {
    let field = s1.form.field();
    field.require_prime()?;
    if s2.form.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), s2.form.field().to_string()));
    }
    if s1.form.degree() != s2.form.degree() {
        return Ok(None);
    }
    for g in GL2Elem::projective_elements(field)? {
        if s1.form.act(&g)?.proportional_to(&s2.form) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// `dim ker Q`.
pub fn degeneracy(q: &Matrix) -> usize {
    q.cols() - q.rank()
}
