//! Barred quaternionic operators `q0 + q1|e1 + q2|e2 + q3|e3`.
//!
//! `q|e_m` acts as `ψ ↦ q ψ e_m`. Operators with `q2 = q3 = 0` are complex
//! linear; the general case is real linear.
//!
//! Composition follows operator notation: `a.compose(&b)` applies `b`
//! first. This is the only reading that reproduces the standard product
//! formula, e.g. `(1|e1)(1|e2) = -1|e3` because `(ψ e2) e1 = -ψ e3`.

use std::array;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json;
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;
use crate::table::QUATERNION_TABLE;
use crate::text;

/// Element of `span{1, e1}`.
pub type ComplexValue<T> = Complex<T>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarredQuaternion<T> {
    /// `q[0]` multiplies from the left only; `q[m]` is the coefficient of `|e_m`.
    pub q: [Quaternion<T>; 4],
}

impl<T: Scalar> BarredQuaternion<T> {
    pub fn new(q0: Quaternion<T>, q1: Quaternion<T>, q2: Quaternion<T>, q3: Quaternion<T>) -> Self {
        BarredQuaternion { q: [q0, q1, q2, q3] }
    }

    pub fn zero() -> Self {
        BarredQuaternion { q: array::from_fn(|_| Quaternion::zero()) }
    }

    pub fn identity() -> Self {
        Self::left(Quaternion::one())
    }

    /// Pure left multiplication by `q`.
    pub fn left(q: Quaternion<T>) -> Self {
        Self::barred(q, 0)
    }

    /// `q|e_m`; `m = 0` is plain left multiplication.
    pub fn barred(q: Quaternion<T>, m: usize) -> Self {
        let mut b = Self::zero();
        b.q[m] = q;
        b
    }

    /// `e_l|e_m` with `e_0 = 1`.
    pub fn units(l: usize, m: usize) -> Self {
        Self::barred(Quaternion::unit(l), m)
    }

    pub fn scalar(s: T) -> Self {
        Self::left(Quaternion::real(s))
    }

    /// `g = -(1 + e1|e1 + e2|e2 + e3|e3) / 2`, which acts as `q ↦ q†`.
    pub fn g_operator() -> Self {
        let mut g = Self::zero();
        for m in 0..4 {
            g.q[m] = Quaternion::unit(m);
        }
        g.scale(&-T::half())
    }

    pub fn is_zero(&self) -> bool {
        self.q.iter().all(Quaternion::is_zero)
    }

    pub fn is_complex_linear(&self) -> bool {
        self.q[2].is_zero() && self.q[3].is_zero()
    }

    /// True when only the left coefficient is set.
    pub fn is_quaternionic(&self) -> bool {
        self.q[1..].iter().all(Quaternion::is_zero)
    }

    pub fn scale(&self, s: &T) -> Self {
        BarredQuaternion { q: array::from_fn(|m| self.q[m].scale(s)) }
    }

    /// `q0 ψ + q1 ψ e1 + q2 ψ e2 + q3 ψ e3`.
    pub fn apply(&self, psi: &Quaternion<T>) -> Quaternion<T> {
        let mut out = self.q[0].mul(psi);
        for m in 1..4 {
            if !self.q[m].is_zero() {
                out = out + self.q[m].mul(psi).mul(&Quaternion::unit(m));
            }
        }
        out
    }

    /// Operator product `self ∘ rhs` (`rhs` acts first).
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for a in 0..4 {
            if self.q[a].is_zero() {
                continue;
            }
            for b in 0..4 {
                if rhs.q[b].is_zero() {
                    continue;
                }
                // (q_a|e_a)(p_b|e_b) ψ = q_a p_b ψ (e_b e_a)
                let unit = QUATERNION_TABLE.product(b, a);
                let term = self.q[a].mul(&rhs.q[b]);
                out.q[unit.index] = if unit.sign > 0 {
                    out.q[unit.index].clone() + term
                } else {
                    out.q[unit.index].clone() - term
                };
            }
        }
        out
    }

    /// `[self, rhs] = self∘rhs - rhs∘self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.compose(rhs) - rhs.compose(self)
    }

    /// Flips every left and right imaginary unit: `(q|e_m)† = q†|e_m† = -q†|e_m`.
    pub fn dagger(&self) -> Self {
        BarredQuaternion {
            q: array::from_fn(|m| if m == 0 { self.q[0].conj() } else { -self.q[m].conj() }),
        }
    }

    /// `q0ᵗ + q1ᵗ|e1 - q2ᵗ|e2 + q3ᵗ|e3`.
    pub fn transpose(&self) -> Self {
        BarredQuaternion {
            q: array::from_fn(|m| if m == 2 { -self.q[2].transpose() } else { self.q[m].transpose() }),
        }
    }

    /// `Tr = Re q0 + e1 Re q1`, defined on complex linear operators only.
    pub fn complex_trace(&self) -> Result<ComplexValue<T>> {
        if !self.is_complex_linear() {
            return Err(Error::NotComplexLinear("complex trace needs q2 = q3 = 0".into()));
        }
        Ok(self.extended_complex_trace())
    }

    /// `Re q0 + e1 Re q1` without the complex-linearity check. It is not
    /// cyclic on real linear operators.
    pub(crate) fn extended_complex_trace(&self) -> ComplexValue<T> {
        Complex::new(self.q[0].re(), self.q[1].re())
    }

    /// `tr = Re q0`.
    pub fn real_trace(&self) -> T {
        self.q[0].re()
    }
}

/// `(q - e1 q e1) / 2 = x0 + e1 x1`.
pub fn complex_projection<T: Scalar>(q: &Quaternion<T>) -> ComplexValue<T> {
    let e1 = Quaternion::<T>::unit(1);
    let p = (q.clone() - e1.mul(q).mul(&e1)).scale(&T::half());
    debug_assert!(p.y.is_zero() && p.z.is_zero());
    Complex::new(p.w, p.x)
}

/// Real part `x0`.
pub fn real_projection<T: Scalar>(q: &Quaternion<T>) -> T {
    q.re()
}

pub fn complex_to_quaternion<T: Scalar>(c: &ComplexValue<T>) -> Quaternion<T> {
    Quaternion::new(c.re.clone(), c.im.clone(), T::zero(), T::zero())
}

impl<T: Scalar> BarredQuaternion<T> {
    /// `{"q0": [..4], "q1": .., "q2": .., "q3": ..}`.
    pub fn to_json(&self) -> Value {
        json!({
            "q0": json::scalars(&self.q[0].coeffs()),
            "q1": json::scalars(&self.q[1].coeffs()),
            "q2": json::scalars(&self.q[2].coeffs()),
            "q3": json::scalars(&self.q[3].coeffs()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let mut out = Self::zero();
        for (m, slot) in out.q.iter_mut().enumerate() {
            let c = json::parse_scalars::<T>(json::field(v, &format!("q{m}"))?, 4)?;
            *slot = Quaternion::from_coeffs(array::from_fn(|k| c[k].clone()));
        }
        Ok(out)
    }
}

impl<T: Scalar> Add for BarredQuaternion<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2, a3] = self.q;
        let [b0, b1, b2, b3] = rhs.q;
        BarredQuaternion { q: [a0 + b0, a1 + b1, a2 + b2, a3 + b3] }
    }
}

impl<T: Scalar> Sub for BarredQuaternion<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for BarredQuaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        BarredQuaternion { q: self.q.map(|q| -q) }
    }
}

impl<T: Scalar> fmt::Display for BarredQuaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.q[0].is_zero() {
            parts.push(self.q[0].to_string());
        }
        for m in 1..4 {
            if !self.q[m].is_zero() {
                parts.push(format!("({})|e{m}", self.q[m]));
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

impl<T: Scalar> FromStr for BarredQuaternion<T> {
    type Err = Error;

    /// Accepts `q0 + (q1)|e1 + ...`, bare unit forms such as `e2|e3`, and
    /// signed slots such as `-(1/2 e1)|e2`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty barred operator".into()));
        }
        let mut out = Self::zero();
        for (negative, term) in text::split_signed_terms(&compact)? {
            let (left, slot) = match term.split_once('|') {
                Some((l, r)) => {
                    let m = match r {
                        "e1" => 1,
                        "e2" => 2,
                        "e3" => 3,
                        _ => return Err(Error::Parse(format!("bad barred unit {r:?}"))),
                    };
                    (l, m)
                }
                None => (term, 0),
            };
            let inner = left.strip_prefix('(').and_then(|l| l.strip_suffix(')')).unwrap_or(left);
            let q: Quaternion<T> = inner.parse()?;
            let q = if negative { -q } else { q };
            out.q[slot] = out.q[slot].clone() + q;
        }
        Ok(out)
    }
}
