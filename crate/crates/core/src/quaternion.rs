//! Quaternions `w + x e1 + y e2 + z e3` and their conjugations.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::table::QUATERNION_TABLE;
use crate::text;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::real(T::zero())
    }

    pub fn one() -> Self {
        Self::real(T::one())
    }

    pub fn real(w: T) -> Self {
        Quaternion::new(w, T::zero(), T::zero(), T::zero())
    }

    /// Basis unit `e_k` (`k = 0` is the identity).
    pub fn unit(k: usize) -> Self {
        let mut c = [T::zero(), T::zero(), T::zero(), T::zero()];
        c[k] = T::one();
        Self::from_coeffs(c)
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(T::from_int(w), T::from_int(x), T::from_int(y), T::from_int(z))
    }

    pub fn from_coeffs(c: [T; 4]) -> Self {
        let [w, x, y, z] = c;
        Quaternion { w, x, y, z }
    }

    pub fn coeffs(&self) -> [T; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn coeff(&self, k: usize) -> &T {
        match k {
            0 => &self.w,
            1 => &self.x,
            2 => &self.y,
            3 => &self.z,
            _ => panic!("quaternion component {k} out of range"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, s: &T) -> Self {
        Quaternion::new(
            self.w.clone() * s.clone(),
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
        )
    }

    /// Hamilton product, driven by the generated basis table.
    pub fn mul(&self, rhs: &Self) -> Self {
        let a = self.coeffs();
        let b = rhs.coeffs();
        let mut out = [T::zero(), T::zero(), T::zero(), T::zero()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let p = QUATERNION_TABLE.product(i, j);
                let term = ai.clone() * bj.clone();
                out[p.index] = if p.sign > 0 {
                    out[p.index].clone() + term
                } else {
                    out[p.index].clone() - term
                };
            }
        }
        Self::from_coeffs(out)
    }

    /// The `†` conjugate: all three imaginary parts flip sign.
    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// `N(q) = w² + x² + y² + z²`.
    pub fn norm2(&self) -> T {
        self.coeffs().into_iter().fold(T::zero(), |acc, c| acc + c.clone() * c)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm2();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&(T::one() / n)))
    }

    /// Quaternionic transpose: only `e2` changes sign. Reverses products,
    /// `(qp)ᵗ = pᵗqᵗ`, and equals `-e2 q† e2`.
    pub fn transpose(&self) -> Self {
        Quaternion::new(self.w.clone(), self.x.clone(), -self.y.clone(), self.z.clone())
    }

    /// `*`-conjugation: `e1` and `e2` change sign. Unlike `†` and `ᵗ` this
    /// is multiplicative, `(qp)* = q*p*`.
    pub fn star(&self) -> Self {
        Quaternion::new(self.w.clone(), -self.x.clone(), -self.y.clone(), self.z.clone())
    }

    pub fn conjugation(&self, which: Conjugation) -> Self {
        let [s1, s2, s3] = which.sign_pattern();
        let sign = |v: &T, s: i8| if s < 0 { -v.clone() } else { v.clone() };
        Quaternion::new(self.w.clone(), sign(&self.x, s1), sign(&self.y, s2), sign(&self.z, s3))
    }

    /// Real part `x0`.
    pub fn re(&self) -> T {
        self.w.clone()
    }
}

/// The six non-standard quaternionic conjugations, numbered 1..6 in the
/// order of their sign patterns:
/// `(-,+,+) (+,-,+) (+,+,-) (+,-,-) (-,+,-) (-,-,+)`.
///
/// Selectors 1..3 flip a single unit and coincide with `-e_i q† e_i`;
/// selectors 4..6 keep a single unit and coincide with `-e_i q e_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjugation {
    FlipE1,
    FlipE2,
    FlipE3,
    KeepE1,
    KeepE2,
    KeepE3,
}

impl Conjugation {
    pub const ALL: [Conjugation; 6] = [
        Conjugation::FlipE1,
        Conjugation::FlipE2,
        Conjugation::FlipE3,
        Conjugation::KeepE1,
        Conjugation::KeepE2,
        Conjugation::KeepE3,
    ];

    pub fn from_selector(selector: u8) -> Result<Self> {
        match selector {
            1..=6 => Ok(Self::ALL[usize::from(selector) - 1]),
            _ => Err(Error::InvalidSelector(format!("conjugation selector {selector} (expected 1..6)"))),
        }
    }

    pub fn selector(self) -> u8 {
        Self::ALL.iter().position(|c| *c == self).unwrap() as u8 + 1
    }

    /// Signs applied to `(e1, e2, e3)`.
    pub fn sign_pattern(self) -> [i8; 3] {
        match self {
            Conjugation::FlipE1 => [-1, 1, 1],
            Conjugation::FlipE2 => [1, -1, 1],
            Conjugation::FlipE3 => [1, 1, -1],
            Conjugation::KeepE1 => [1, -1, -1],
            Conjugation::KeepE2 => [-1, 1, -1],
            Conjugation::KeepE3 => [-1, -1, 1],
        }
    }

    /// The unit `e_i` of the closed form and whether `q` is daggered first.
    pub fn closed_form(self) -> (usize, bool) {
        match self {
            Conjugation::FlipE1 => (1, true),
            Conjugation::FlipE2 => (2, true),
            Conjugation::FlipE3 => (3, true),
            Conjugation::KeepE1 => (1, false),
            Conjugation::KeepE2 => (2, false),
            Conjugation::KeepE3 => (3, false),
        }
    }

    /// Evaluates `-e_i q† e_i` or `-e_i q e_i`.
    pub fn apply_closed_form<T: Scalar>(self, q: &Quaternion<T>) -> Quaternion<T> {
        let (i, dagger) = self.closed_form();
        let e = Quaternion::<T>::unit(i);
        let inner = if dagger { q.conj() } else { q.clone() };
        -e.mul(&inner).mul(&e)
    }
}

/// Applies conjugation number `which` (1..6).
pub fn six_conjugations<T: Scalar>(q: &Quaternion<T>, which: u8) -> Result<Quaternion<T>> {
    Ok(q.conjugation(Conjugation::from_selector(which)?))
}

impl<T: Scalar> Add for Quaternion<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Quaternion::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<T: Scalar> Sub for Quaternion<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Quaternion::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<T: Scalar> Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<T: Scalar> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(&self.coeffs()))
    }
}

impl<T: Scalar> FromStr for Quaternion<T> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let c = text::parse::<T>(s, 4)?;
        Ok(Quaternion::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
    }
}
