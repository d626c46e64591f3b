//! Dense exact matrices: Bareiss determinants, row reduction, kernels and
//! characteristic polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::poly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimMismatch("ragged matrix rows".into()));
        }
        if rows.iter().flatten().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                "entry of another field".into(),
            ));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(field: FieldDescriptor, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
        .expect("well-formed literal")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldDescriptor, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn diagonal(field: FieldDescriptor, diag: &[Scalar]) -> Self {
        let mut m = Self::zeros(field, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j].clone()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = &out.get(i, j) + &(a * other.entry(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Product; panics on shape or field mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix product shapes")
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    acc = &acc + &(self.entry(i, j) * x);
                }
                acc
            })
            .collect()
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.entry(i, i))
    }

    /// Delete row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j));
            }
        }
        Matrix {
            field: self.field,
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Determinant by fraction-free Bareiss elimination with row pivoting.
    pub fn det(&self) -> Result<Scalar> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(self.field.one());
        }
        let mut m = self.to_rows();
        let mut negate = false;
        let mut prev = self.field.one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(self.field.zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div(&prev);
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            let inv = m[r][c].inv().expect("pivot");
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let factor = m[i][c].clone();
                    for j in 0..self.cols {
                        let v = &m[i][j] - &(&factor * &m[r][j]);
                        m[i][j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let out = Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: m.into_iter().flatten().collect(),
        };
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : M x = 0}`; empty iff injective.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.entry(row, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square()?;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// The unique solution of `M x = rhs` (possibly over-determined).
    ///
    /// `Singular` if the solution is not unique, `Invalid` if inconsistent.
    pub fn solve_unique(&self, rhs: &[Scalar]) -> Result<Vec<Scalar>> {
        if rhs.len() != self.rows {
            return Err(Error::DimMismatch("right-hand side length".into()));
        }
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(Error::Invalid("inconsistent linear system".into()));
        }
        if pivots.len() < self.cols {
            return Err(Error::Singular);
        }
        Ok((0..self.cols).map(|i| r.get(i, self.cols)).collect())
    }

    /// Characteristic polynomial `det(t I - M)`, monic of degree `n`.
    ///
    /// Faddeev-LeVerrier over `Q`; over `F_p` the recurrence divides by
    /// `1..n`, which may vanish, so a Hessenberg reduction is used instead.
    pub fn char_poly(&self) -> Result<UniPoly> {
        self.require_square()?;
        Ok(match self.field {
            FieldDescriptor::Rationals => self.char_poly_faddeev(),
            FieldDescriptor::Prime(_) => self.char_poly_hessenberg(),
        })
    }

    pub(crate) fn char_poly_faddeev(&self) -> UniPoly {
        let n = self.rows;
        let f = self.field;
        let mut coeffs = vec![f.zero(); n + 1];
        coeffs[n] = f.one();
        let id = Self::identity(f, n);
        let mut m = Self::zeros(f, n, n);
        for k in 1..=n {
            m = self.mul(&m).add(&id.scale(&coeffs[n + 1 - k]));
            let am = self.mul(&m);
            coeffs[n - k] = -am.trace().div(&f.from_i64(k as i64));
        }
        UniPoly::new(f, coeffs)
    }

    pub(crate) fn char_poly_hessenberg(&self) -> UniPoly {
        let n = self.rows;
        let f = self.field;
        let mut h = self.to_rows();
        // similarity reduction to upper Hessenberg form
        for c in 0..n.saturating_sub(2) {
            let r = c + 1;
            let Some(p) = (r..n).find(|&i| !h[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                h.swap(p, r);
                for row in h.iter_mut() {
                    row.swap(p, r);
                }
            }
            let pivot_inv = h[r][c].inv().expect("pivot");
            for i in r + 1..n {
                if h[i][c].is_zero() {
                    continue;
                }
                let u = &h[i][c] * &pivot_inv;
                for j in 0..n {
                    let v = &h[i][j] - &(&u * &h[r][j]);
                    h[i][j] = v;
                }
                for row in h.iter_mut() {
                    let v = &row[r] + &(&u * &row[i]);
                    row[r] = v;
                }
            }
        }
        // p_m = (t - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
        let mut ps: Vec<UniPoly> = vec![UniPoly::one(f)];
        for m in 0..n {
            let lin = UniPoly::new(f, vec![-&h[m][m], f.one()]);
            let mut pm = lin.mul(&ps[m]);
            let mut prod = f.one();
            for i in (0..m).rev() {
                prod = &prod * &h[i + 1][i];
                let coef = &h[i][m] * &prod;
                if !coef.is_zero() {
                    pm = pm.sub(&ps[i].scale(&coef));
                }
            }
            ps.push(pm);
        }
        ps.pop().expect("nonempty")
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &UniPoly) -> Self {
        let n = self.rows;
        let mut acc = Self::zeros(self.field, n, n);
        let id = Self::identity(self.field, n);
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc).add(&id.scale(c));
        }
        acc
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
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

    #[test]
    fn char_poly_examples() {
        let id = Matrix::identity(q(), 3);
        // (t-1)^3
        assert_eq!(
            id.char_poly().unwrap(),
            UniPoly::from_i64(q(), &[-1, 3, -3, 1])
        );
        let swap = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.char_poly().unwrap(), UniPoly::from_i64(q(), &[-1, 0, 1]));
        // companion of t^3 - t
        let comp = Matrix::from_i64(q(), &[&[0, 0, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(
            comp.char_poly().unwrap(),
            UniPoly::from_i64(q(), &[0, -1, 0, 1])
        );
        let f3 = FieldDescriptor::prime(3).unwrap();
        let comp3 = Matrix::from_i64(f3, &[&[0, 0, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(
            comp3.char_poly().unwrap(),
            UniPoly::from_i64(f3, &[0, -1, 0, 1])
        );
        assert!(matches!(
            Matrix::zeros(q(), 2, 3).char_poly(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(q(), 3).kernel().is_empty());
        assert_eq!(Matrix::zeros(q(), 3, 3).kernel().len(), 3);
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn det_with_pivoting() {
        let m = Matrix::from_i64(q(), &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 1]]);
        assert_eq!(m.det().unwrap(), q().from_i64(-1));
        let m = Matrix::from_i64(q(), &[&[2, 3, 1], &[4, 6, 5], &[1, 0, 7]]);
        // cofactor expansion along row 3: 1*(15-6) - 0 + 7*(12-12) = 9
        assert_eq!(m.det().unwrap(), q().from_i64(9));
        assert!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).det().unwrap().is_zero());
    }

    #[test]
    fn solve_unique_detects_inconsistency() {
        let m = Matrix::from_i64(q(), &[&[1, 0], &[0, 1], &[1, 1]]);
        let ok = m
            .solve_unique(&[q().from_i64(1), q().from_i64(2), q().from_i64(3)])
            .unwrap();
        assert_eq!(ok, vec![q().from_i64(1), q().from_i64(2)]);
        assert!(m
            .solve_unique(&[q().from_i64(1), q().from_i64(2), q().from_i64(4)])
            .is_err());
    }

    #[test]
    fn inverse_of_singular_fails() {
        assert!(matches!(
            Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).inverse(),
            Err(Error::Singular)
        ));
    }
}
