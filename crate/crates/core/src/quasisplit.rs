//! Common isotropic subspaces of a pencil, trivializations of `α` read off
//! from them, and an exhaustive search over `F_p` used as ground truth.

use crate::correspondence::{gc_to_orb, Triple};
use crate::error::{Error, Result};
use crate::etale::{EtaleAlgebra, SquareClassWitness};
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::Matrix;
use crate::pencil::Pencil;

/// A subspace of `k^n` given by a basis of `d` independent row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldDescriptor,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn new(field: FieldDescriptor, ambient: usize, basis: Vec<Vec<Scalar>>) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimMismatch("basis vector has the wrong length".into()));
        }
        let s = Subspace {
            field,
            ambient,
            basis,
        };
        if !s.basis.is_empty() && s.rows_matrix().rank() != s.basis.len() {
            return Err(Error::Invalid("basis vectors are dependent".into()));
        }
        Ok(s)
    }

    /// The span of arbitrary vectors, stored by its reduced echelon basis.
    pub fn span(field: FieldDescriptor, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace {
                field,
                ambient,
                basis: Vec::new(),
            };
        }
        let m = Matrix::from_rows(field, vectors.to_vec()).expect("equal lengths");
        let (r, pivots) = m.rref();
        Subspace {
            field,
            ambient,
            basis: (0..pivots.len()).map(|i| r.row(i)).collect(),
        }
    }

    /// `span{1, θ, ..., θ^{d-1}}` in the power basis.
    pub fn initial_powers(l: &EtaleAlgebra, d: usize) -> Self {
        let basis = (0..d).map(|i| l.theta_pow(i).into_coeffs()).collect();
        Subspace {
            field: l.field(),
            ambient: l.degree(),
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    fn rows_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.basis.clone()).expect("equal lengths")
    }

    /// `n × d` matrix whose columns are the basis.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.basis.is_empty() || other.basis.is_empty() {
            return Subspace::span(self.field, self.ambient, &[]);
        }
        // Σ x_i u_i = Σ y_j w_j  ⟺  (x, y) ∈ ker [U | -W]
        let mut cols: Vec<Vec<Scalar>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(|c| -c).collect()));
        let m = Matrix::from_columns(self.field, self.ambient, &cols);
        let vecs: Vec<Vec<Scalar>> = m
            .kernel()
            .iter()
            .map(|k| combine(self.field, self.ambient, &k[..self.basis.len()], &self.basis))
            .collect();
        Subspace::span(self.field, self.ambient, &vecs)
    }

    /// `{v ∈ self : x·v ∈ self}`.
    pub fn stable_part(&self, l: &EtaleAlgebra, x: &crate::etale::AlgElement) -> Subspace {
        if self.basis.is_empty() {
            return self.clone();
        }
        // Σ c_k x·b_k = Σ e_k b_k  ⟺  (c, e) ∈ ker [xB | -B]
        let mut cols: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|b| l.mul(x, &l.element(b.clone()).expect("ambient = degree")).into_coeffs())
            .collect();
        cols.extend(self.basis.iter().map(|b| b.iter().map(|c| -c).collect()));
        let m = Matrix::from_columns(self.field, self.ambient, &cols);
        let vecs: Vec<Vec<Scalar>> = m
            .kernel()
            .iter()
            .map(|k| combine(self.field, self.ambient, &k[..self.basis.len()], &self.basis))
            .collect();
        Subspace::span(self.field, self.ambient, &vecs)
    }

    /// Image under multiplication by `x ∈ L`.
    pub fn map_by(&self, l: &EtaleAlgebra, x: &crate::etale::AlgElement) -> Subspace {
        let vecs: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|v| {
                l.mul(x, &l.element(v.clone()).expect("ambient = degree"))
                    .into_coeffs()
            })
            .collect();
        Subspace::span(self.field, self.ambient, &vecs)
    }

    pub fn is_isotropic_for(&self, p: &Pencil) -> Result<bool> {
        Ok(is_totally_isotropic(p.first(), self)? && is_totally_isotropic(p.second(), self)?)
    }
}

fn combine(field: FieldDescriptor, n: usize, coefs: &[Scalar], vecs: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    for (coef, u) in coefs.iter().zip(vecs) {
        for (vi, ui) in v.iter_mut().zip(u) {
            *vi = &*vi + &(coef * ui);
        }
    }
    v
}

/// Outcome of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Found(Subspace),
    NotFound,
    Unknown { needed: u128, budget: u128 },
    NotRun,
}

impl OracleVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            OracleVerdict::Found(_) => "found",
            OracleVerdict::NotFound => "none",
            OracleVerdict::Unknown { .. } => "unknown",
            OracleVerdict::NotRun => "not-run",
        }
    }
}

/// `BᵀGB = 0` for the basis matrix `B`.
pub fn is_totally_isotropic(g: &Matrix, m: &Subspace) -> Result<bool> {
    if g.rows() != m.ambient || g.cols() != m.ambient {
        return Err(Error::DimMismatch(format!(
            "form of size {} against subspace of k^{}",
            g.rows(),
            m.ambient
        )));
    }
    if m.dim() == 0 {
        return Ok(true);
    }
    let b = m.basis_matrix();
    Ok(b.transpose().mul(g).mul(&b).is_zero())
}

/// `P(M) ⊆ X`: `M` is isotropic for both members.
pub fn subspace_in_x(p: &Pencil, m: &Subspace) -> Result<bool> {
    if !p.is_stable() {
        return Err(Error::Unstable);
    }
    m.is_isotropic_for(p)
}

/// `γ^{-1} · span{1, ..., θ^{m-1}}` for a witness `α = cγ²`.
pub fn canonical_isotropic(t: &Triple, w: &SquareClassWitness) -> Result<Subspace> {
    let l = t.algebra();
    if !l.verify_square_class_witness(t.alpha(), w) {
        return Err(Error::BadWitness);
    }
    let ginv = l.inverse(w.gamma())?;
    let m = Subspace::initial_powers(l, l.half_degree());
    let out = m.map_by(l, &ginv);
    debug_assert!(out.is_isotropic_for(&gc_to_orb(t)?).unwrap_or(false));
    Ok(out)
}

/// A trivialization `αℓ² = a` read off a common isotropic subspace.
#[derive(Clone, Debug)]
pub struct Trivialization {
    pub witness: SquareClassWitness,
    pub ell: crate::etale::AlgElement,
    pub a: Scalar,
    /// `dim M_j` for `M_0 = M`, `M_{j+1} = M_j ∩ θM_j`, `j < m`.
    pub chain_dims: Vec<usize>,
    /// `dim N_j` for `N_0 = M`, `N_{j+1} = {x ∈ N_j : θx ∈ N_j}`, `j < m`.
    pub preimage_chain_dims: Vec<usize>,
}

/// Finds `ℓ != 0` with `ℓ, ℓθ, ..., ℓθ^{m-1} ∈ M`, which forces `αℓ² ∈ k^×`.
///
/// Such an `ℓ` lives in `N_{m-1} = {x : θ^i x ∈ M, i < m}`. The image chain
/// `M_j = M ∩ θM ∩ ... ∩ θ^j M` has the same dimension bound `m - j` but
/// its elements satisfy `ℓθ^{-i} ∈ M` instead, so it only serves as a check.
/// `ℓ` is the first reduced echelon basis vector of `N_{m-1}`.
pub fn extract_trivialization(t: &Triple, m: &Subspace) -> Result<Trivialization> {
    let l = t.algebra();
    let half = l.half_degree();
    if m.ambient != l.degree() || m.dim() != half {
        return Err(Error::DimMismatch(format!(
            "need a {half}-dimensional subspace of k^{}",
            l.degree()
        )));
    }
    if !m.is_isotropic_for(&gc_to_orb(t)?)? {
        return Err(Error::NotIsotropic);
    }
    let theta = l.theta();
    let start = Subspace::span(m.field, m.ambient, &m.basis);
    let mut image = start.clone();
    let mut pre = start;
    let mut dims = vec![image.dim()];
    let mut pre_dims = vec![pre.dim()];
    for j in 1..half {
        image = image.intersect(&image.map_by(l, &theta));
        pre = pre.stable_part(l, &theta);
        for d in [image.dim(), pre.dim()] {
            if d < half - j {
                return Err(Error::ChainCollapse {
                    step: j,
                    dim: d,
                    expected: half - j,
                });
            }
        }
        dims.push(image.dim());
        pre_dims.push(pre.dim());
    }
    let ell = l.element(pre.basis[0].clone())?;
    let prod = l.mul(t.alpha(), &l.mul(&ell, &ell));
    let a = prod.as_scalar().filter(|a| !a.is_zero()).ok_or(Error::NotIsotropic)?;
    let gamma = l.inverse(&ell)?;
    let witness = SquareClassWitness::new(l, t.alpha(), a.clone(), gamma)?;
    Ok(Trivialization {
        witness,
        ell,
        a,
        chain_dims: dims,
        preimage_chain_dims: pre_dims,
    })
}

pub fn is_quasisplit_fp(t: &Triple) -> Result<bool> {
    t.algebra().is_trivial_class_fp(t.alpha())
}

/// Number of `d`-dimensional subspaces of `F_p^n`, or `None` on overflow.
pub fn gaussian_binomial(n: usize, d: usize, p: u64) -> Option<u128> {
    if d > n {
        return Some(0);
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        num = num.checked_mul(p.checked_pow((n - i) as u32)?.checked_sub(1)?)?;
        den = den.checked_mul(p.checked_pow((i + 1) as u32)?.checked_sub(1)?)?;
    }
    Some(num / den)
}

/// First `d`-dimensional subspace isotropic for both members, visiting each
/// subspace once through its reduced echelon form (pivot sets in
/// lexicographic order, free entries in counting order).
pub fn brute_force_isotropic_fp(p: &Pencil, d: usize, budget: u128) -> Result<Option<Subspace>> {
    let field = p.field();
    let q = field.require_prime()?;
    let n = p.dim();
    let needed = gaussian_binomial(n, d, q).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    if d == 0 {
        return Ok(Some(Subspace::span(field, n, &[])));
    }
    if d > n {
        return Ok(None);
    }
    let to_u64 = |m: &Matrix| -> Vec<Vec<u64>> {
        (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j).residue()).collect())
            .collect()
    };
    let search = Search {
        p: q,
        n,
        forms: [to_u64(p.first()), to_u64(p.second())],
    };
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        let mut rows = Vec::with_capacity(d);
        let mut images = Vec::with_capacity(d);
        if search.dfs(&pivots, &mut rows, &mut images, &mut |_| true) {
            let basis = rows
                .iter()
                .map(|r: &Vec<u64>| r.iter().map(|&v| Scalar::Mod { value: v, p: q }).collect())
                .collect();
            return Ok(Some(Subspace::new(field, n, basis)?));
        }
        if !next_combination(&mut pivots, n) {
            return Ok(None);
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let d = c.len();
    for i in (0..d).rev() {
        if c[i] < n - d + i {
            c[i] += 1;
            for j in i + 1..d {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

struct Search {
    p: u64,
    n: usize,
    forms: [Vec<Vec<u64>>; 2],
}

impl Search {
    fn apply(&self, form: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
        form.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0u128, |acc, (&a, &b)| (acc + a as u128 * b as u128) % self.p as u128)
                    as u64
            })
            .collect()
    }

    fn dot(&self, u: &[u64], v: &[u64]) -> u64 {
        u.iter()
            .zip(v)
            .fold(0u128, |acc, (&a, &b)| (acc + a as u128 * b as u128) % self.p as u128) as u64
    }

    /// Extends `rows` by the echelon row with pivot `pivots[rows.len()]`.
    /// `leaf` sees each complete isotropic basis and returns `true` to stop.
    fn dfs(
        &self,
        pivots: &[usize],
        rows: &mut Vec<Vec<u64>>,
        images: &mut Vec<[Vec<u64>; 2]>,
        leaf: &mut dyn FnMut(&[Vec<u64>]) -> bool,
    ) -> bool {
        let i = rows.len();
        if i == pivots.len() {
            return leaf(rows);
        }
        let piv = pivots[i];
        let free: Vec<usize> = (piv + 1..self.n).filter(|c| !pivots.contains(c)).collect();
        let mut digits = vec![0u64; free.len()];
        loop {
            let mut row = vec![0u64; self.n];
            row[piv] = 1;
            for (&c, &v) in free.iter().zip(&digits) {
                row[c] = v;
            }
            let img = [self.apply(&self.forms[0], &row), self.apply(&self.forms[1], &row)];
            let ok = (0..2).all(|k| {
                self.dot(&row, &img[k]) == 0 && images.iter().all(|im| self.dot(&row, &im[k]) == 0)
            });
            if ok {
                rows.push(row);
                images.push(img);
                if self.dfs(pivots, rows, images, leaf) {
                    return true;
                }
                rows.pop();
                images.pop();
            }
            // increment the free digits, first free column fastest
            let mut k = 0;
            loop {
                if k == digits.len() {
                    return false;
                }
                digits[k] += 1;
                if digits[k] < self.p {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }
}
