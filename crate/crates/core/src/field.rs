//! Base fields: the rationals and prime fields of odd characteristic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest prime accepted for `F_p`. Keeps products comfortably inside `u128`
/// and makes trial-division primality checks instant.
pub const MAX_PRIME: u64 = 1 << 31;

/// The base field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u64),
}

impl FieldDescriptor {
    /// `F_p` for an odd prime `p`.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 3 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "{p} is not an odd prime below 2^31"
            )));
        }
        Ok(FieldDescriptor::Prime(p))
    }

    /// Number of elements, `None` for `Q`.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldDescriptor::Rationals => None,
            FieldDescriptor::Prime(p) => Some(*p),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.order().unwrap_or(0)
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldDescriptor::Prime(_))
    }

    /// Errors with `WrongField` unless this is some `F_p`; returns `p`.
    pub fn require_prime(&self) -> Result<u64> {
        match self {
            FieldDescriptor::Prime(p) => Ok(*p),
            FieldDescriptor::Rationals => Err(Error::WrongField(self.to_string())),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldDescriptor::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
            FieldDescriptor::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Mod {
                    value: r.to_u64().expect("residue fits"),
                    p: *p,
                }
            }
        }
    }

    /// `num/den` embedded in the field; fails if `den` vanishes in `k`.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        match self {
            FieldDescriptor::Rationals => {
                Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone())))
            }
            FieldDescriptor::Prime(_) => {
                let d = self.from_bigint(den);
                let inv = d
                    .inv()
                    .ok_or_else(|| Error::Invalid(format!("denominator {den} vanishes in {self}")))?;
                Ok(&self.from_bigint(num) * &inv)
            }
        }
    }

    /// All elements of `F_p` in the order `0, 1, ..., p-1`.
    pub fn elements(&self) -> Result<impl Iterator<Item = Scalar>> {
        let p = self.require_prime()?;
        Ok((0..p).map(move |value| Scalar::Mod { value, p }))
    }

    /// `count` distinct elements `0, 1, 2, ...` (fewer if the field is smaller).
    pub fn small_elements(&self, count: usize) -> Vec<Scalar> {
        let bound = match self {
            FieldDescriptor::Rationals => count as u64,
            FieldDescriptor::Prime(p) => (count as u64).min(*p),
        };
        (0..bound).map(|i| self.from_i64(i as i64)).collect()
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of a [`FieldDescriptor`].
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// `BigRational` invariant); residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rat(_) => FieldDescriptor::Rationals,
            Scalar::Mod { p, .. } => FieldDescriptor::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    /// Division; panics on a zero divisor.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv().expect("division by zero scalar")
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power allowing negative exponents (nonzero base).
    pub fn powi(&self, e: i64) -> Scalar {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inv().expect("negative power of zero").pow(e.unsigned_abs())
        }
    }

    /// Whether this is a square in its field (zero counts as a square).
    pub fn is_square(&self) -> bool {
        match self {
            Scalar::Rat(r) => {
                !r.is_negative() && is_perfect_square(r.numer()) && is_perfect_square(r.denom())
            }
            Scalar::Mod { value, p } => *value == 0 || pow_mod(*value, (p - 1) / 2, *p) == 1,
        }
    }

    /// A square root in `F_p` (Tonelli-Shanks), `None` if there is none.
    /// Returns the root in `[0, p)` with the smaller representative.
    pub fn sqrt_fp(&self) -> Option<Scalar> {
        let (a, p) = match self {
            Scalar::Mod { value, p } => (*value, *p),
            Scalar::Rat(_) => return None,
        };
        if a == 0 {
            return Some(self.clone());
        }
        if pow_mod(a, (p - 1) / 2, p) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while pow_mod(z, (p - 1) / 2, p) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a, q, p);
        let mut r = pow_mod(a, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt != 1 {
                tt = mul_mod(tt, tt, p);
                i += 1;
            }
            let b = pow_mod(c, 1u64 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        let r = r.min(p - r);
        Some(Scalar::Mod { value: r, p })
    }

    /// Residue value in `[0, p)`; panics over `Q`.
    pub fn residue(&self) -> u64 {
        match self {
            Scalar::Mod { value, .. } => *value,
            Scalar::Rat(_) => panic!("residue() on a rational scalar"),
        }
    }

    fn check_same(&self, other: &Scalar) {
        if let (Scalar::Mod { p, .. }, Scalar::Mod { p: q, .. }) = (self, other) {
            assert_eq!(p, q, "scalar arithmetic across different prime fields");
        } else {
            assert_eq!(
                self.field(),
                other.field(),
                "scalar arithmetic across different fields"
            );
        }
    }
}

fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Mod { value: a, p: p1 }, Scalar::Mod { value: b, p: p2 }) => {
                p1.cmp(p2).then(a.cmp(b))
            }
            (Scalar::Rat(_), Scalar::Mod { .. }) => Ordering::Less,
            (Scalar::Mod { .. }, Scalar::Rat(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: mul_mod(*a, *b, *p),
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
