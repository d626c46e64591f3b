use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};

/// An element `[[a, b], [c, d]]` of `GL_2(k)`.
///
/// Acting on a generator it is the Moebius map `θ ↦ (aθ + b)/(cθ + d)`; acting
/// on binary forms it is the substitution `(x, y) ↦ (ax + by, cx + dy)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GL2Elem {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl GL2Elem {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self> {
        let field = a.field();
        if [&b, &c, &d].iter().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), "GL2 entry".into()));
        }
        let g = GL2Elem { a, b, c, d };
        if g.det().is_zero() {
            return Err(Error::Singular2x2);
        }
        Ok(g)
    }

    pub fn from_i64(field: FieldDescriptor, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(
            field.from_i64(a),
            field.from_i64(b),
            field.from_i64(c),
            field.from_i64(d),
        )
    }

    pub fn identity(field: FieldDescriptor) -> Self {
        Self::from_i64(field, 1, 0, 0, 1).expect("invertible")
    }

    /// `[[0, 1], [1, 0]]`: exchanges the two members of a pencil.
    pub fn swap(field: FieldDescriptor) -> Self {
        Self::from_i64(field, 0, 1, 1, 0).expect("invertible")
    }

    pub fn field(&self) -> FieldDescriptor {
        self.a.field()
    }

    pub fn det(&self) -> Scalar {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// `[[d, -b], [-c, a]]`.
    pub fn adjugate(&self) -> Self {
        GL2Elem {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn inverse(&self) -> Self {
        self.adjugate().scale(&self.det().inv().expect("invertible"))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        GL2Elem {
            a: &self.a * s,
            b: &self.b * s,
            c: &self.c * s,
            d: &self.d * s,
        }
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        GL2Elem {
            a: &(&self.a * &other.a) + &(&self.b * &other.c),
            b: &(&self.a * &other.b) + &(&self.b * &other.d),
            c: &(&self.c * &other.a) + &(&self.d * &other.c),
            d: &(&self.c * &other.b) + &(&self.d * &other.d),
        }
    }

    /// Representative of the class in `PGL_2`: first nonzero entry is 1.
    pub fn normalized(&self) -> Self {
        let lead = [&self.a, &self.b, &self.c, &self.d]
            .into_iter()
            .find(|x| !x.is_zero())
            .expect("invertible matrix has a nonzero entry");
        self.scale(&lead.inv().expect("nonzero"))
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// Moebius image of a field element, `None` at the pole.
    pub fn mobius(&self, x: &Scalar) -> Option<Scalar> {
        let den = &(&self.c * x) + &self.d;
        let inv = den.inv()?;
        Some(&(&(&self.a * x) + &self.b) * &inv)
    }

    /// Normalized representatives of `PGL_2(F_p)`, in lexicographic order of
    /// the residues `(a, b, c, d)`. There are `p^3 - p` of them.
    pub fn projective_elements(field: FieldDescriptor) -> Result<Vec<Self>> {
        let p = field.require_prime()?;
        let mut out = Vec::with_capacity((p * p * p - p) as usize);
        let s = |v: u64| Scalar::Mod { value: v, p };
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        let lead = [a, b, c, d].into_iter().find(|&x| x != 0);
                        if lead != Some(1) {
                            continue;
                        }
                        if let Ok(g) = GL2Elem::new(s(a), s(b), s(c), s(d)) {
                            out.push(g);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GL2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
