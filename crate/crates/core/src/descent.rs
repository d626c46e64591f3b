//! Odd-degree hyperelliptic curves `y^2 = f(t)`, Mumford divisors and the
//! descent map `D ↦ α_D = (-1)^{deg g} g(θ)`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::correspondence::{gc_to_orb, Triple};
use crate::error::{Error, Result};
use crate::etale::{AlgElement, EtaleAlgebra};
use crate::field::{FieldDescriptor, Scalar};
use crate::quasisplit::{brute_force_isotropic_fp, OracleVerdict, Subspace};
use crate::poly::UniPoly;

/// `y^2 = f(t)`, `f` monic separable of degree `2m + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperCurve {
    algebra: EtaleAlgebra,
}

impl HyperCurve {
    pub fn new(f: UniPoly) -> Result<Self> {
        Ok(HyperCurve {
            algebra: EtaleAlgebra::new(f)?,
        })
    }

    pub fn f(&self) -> &UniPoly {
        self.algebra.modulus()
    }

    pub fn genus(&self) -> usize {
        self.algebra.half_degree()
    }

    pub fn field(&self) -> FieldDescriptor {
        self.algebra.field()
    }

    /// `L = k[t]/(f)`.
    pub fn algebra(&self) -> &EtaleAlgebra {
        &self.algebra
    }

    /// Affine points `(t, y)` over `F_p` with `y != 0`, `y` the smaller root
    /// first, in increasing `t`.
    pub fn non_weierstrass_points_fp(&self) -> Result<Vec<(Scalar, Scalar)>> {
        let field = self.field();
        let mut out = Vec::new();
        for t in field.elements()? {
            let v = self.f().eval(&t);
            if v.is_zero() {
                continue;
            }
            if let Some(y) = v.sqrt_fp() {
                out.push((t.clone(), -&y));
                out.push((t, y));
            }
        }
        out.sort();
        Ok(out)
    }
}

/// `{g = 0, y = h} - deg(g)·∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MumfordDivisor {
    pub g: UniPoly,
    pub h: UniPoly,
}

impl MumfordDivisor {
    pub fn zero(field: FieldDescriptor) -> Self {
        MumfordDivisor {
            g: UniPoly::one(field),
            h: UniPoly::zero(field),
        }
    }

    /// The divisor through the given points, which must have distinct `t`.
    pub fn from_points(field: FieldDescriptor, points: &[(Scalar, Scalar)]) -> Result<Self> {
        let mut g = UniPoly::one(field);
        for (t, _) in points {
            g = g.mul(&UniPoly::linear_root(t));
        }
        let ts: Vec<Scalar> = points.iter().map(|(t, _)| t.clone()).collect();
        let ys: Vec<Scalar> = points.iter().map(|(_, y)| y.clone()).collect();
        let mut sorted = ts.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != ts.len() {
            return Err(Error::BadDivisor("points must have distinct t".into()));
        }
        Ok(MumfordDivisor {
            g,
            h: UniPoly::interpolate(field, &ts, &ys),
        })
    }
}

/// `g` monic, `deg h < deg g <= m` and `h^2 ≡ f (mod g)`.
pub fn validate_mumford(c: &HyperCurve, d: &MumfordDivisor) -> bool {
    if d.g.field() != c.field() || d.h.field() != c.field() || !d.g.is_monic() {
        return false;
    }
    let dg = d.g.degree().expect("monic is nonzero");
    if dg > c.genus() {
        return false;
    }
    if let Some(dh) = d.h.degree() {
        if dh >= dg {
            return false;
        }
    }
    d.h.mul(&d.h).sub(c.f()).rem(&d.g).is_zero()
}

/// `(-1)^{deg g} g(θ)`, a unit when `gcd(g, f) = 1`.
pub fn divisor_to_alpha(c: &HyperCurve, d: &MumfordDivisor) -> Result<AlgElement> {
    if !validate_mumford(c, d) {
        return Err(Error::BadDivisor(format!("g = {}, h = {}", d.g, d.h)));
    }
    let l = c.algebra();
    let mut alpha = l.reduce(&d.g);
    if d.g.degree().expect("nonzero") % 2 == 1 {
        alpha = l.neg(&alpha);
    }
    l.inverse(&alpha)?;
    Ok(alpha)
}

/// Largest `d` for which `span{1, ..., θ^{d-1}}` is forced isotropic for
/// `α_D t_θ` and `α_D θ t_θ` by degree counting: `deg g + 2(d-1) + 1 <= 2m - 1`,
/// i.e. `d = m - ⌈deg g / 2⌉`.
pub fn guaranteed_isotropic_dim(m: usize, deg_g: usize) -> usize {
    m.saturating_sub(deg_g.div_ceil(2))
}

/// `⌊(m-1)/2⌋ + 1`, the dimension claimed for every class in the image of
/// the descent map.
pub fn claimed_isotropic_dim(m: usize) -> usize {
    (m.saturating_sub(1)) / 2 + 1
}

#[derive(Clone, Debug)]
pub struct JpReport {
    pub alpha: AlgElement,
    pub norm_is_square: Option<bool>,
    pub degree_count_dim: usize,
    pub degree_count_isotropic: bool,
    pub claimed_dim: usize,
    /// Exhaustive search at `claimed_dim`; `NotRun` over `Q`.
    pub oracle: OracleVerdict,
}

impl JpReport {
    /// The oracle ruled out the claimed dimension.
    pub fn discrepancy(&self) -> bool {
        matches!(self.oracle, OracleVerdict::NotFound)
    }
}

pub fn jp_check(c: &HyperCurve, d: &MumfordDivisor, budget: u128) -> Result<JpReport> {
    let alpha = divisor_to_alpha(c, d)?;
    let l = c.algebra();
    let m = c.genus();
    let deg_g = d.g.degree().expect("nonzero");
    let triple = Triple::new(l.clone(), alpha.clone())?;
    let pencil = gc_to_orb(&triple)?;
    let dc = guaranteed_isotropic_dim(m, deg_g);
    let span = Subspace::initial_powers(l, dc);
    let isotropic = span.is_isotropic_for(&pencil)?;
    let field = c.field();
    let (norm_is_square, oracle) = if field.is_prime_field() {
        let claimed = claimed_isotropic_dim(m);
        let verdict = match brute_force_isotropic_fp(&pencil, claimed, budget) {
            Ok(Some(s)) => OracleVerdict::Found(s),
            Ok(None) => OracleVerdict::NotFound,
            Err(Error::BudgetExceeded { needed, budget }) => {
                OracleVerdict::Unknown { needed, budget }
            }
            Err(e) => return Err(e),
        };
        (Some(l.norm(&alpha).is_square()), verdict)
    } else {
        (None, OracleVerdict::NotRun)
    };
    Ok(JpReport {
        alpha,
        norm_is_square,
        degree_count_dim: dc,
        degree_count_isotropic: isotropic,
        claimed_dim: claimed_isotropic_dim(m),
        oracle,
    })
}

/// A divisor through `k` distinct non-Weierstrass points with distinct `t`,
/// `k` uniform in `1..=m`. `None` when the curve has too few such points.
pub fn random_divisor_fp<R: Rng>(c: &HyperCurve, rng: &mut R) -> Result<Option<MumfordDivisor>> {
    let mut pts = c.non_weierstrass_points_fp()?;
    pts.shuffle(rng);
    let k = rng.gen_range(1..=c.genus());
    let mut chosen: Vec<(Scalar, Scalar)> = Vec::with_capacity(k);
    for (t, y) in pts {
        if chosen.len() == k {
            break;
        }
        if chosen.iter().all(|(s, _)| *s != t) {
            chosen.push((t, y));
        }
    }
    if chosen.len() < k {
        return Ok(None);
    }
    MumfordDivisor::from_points(c.field(), &chosen).map(Some)
}
