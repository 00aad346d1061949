//! Left- and right-barred octonionic operators.
//!
//! Without associativity `o|e_m` is ambiguous, so the barred slot carries a
//! grouping: `o)e_m` acts as `ψ ↦ (oψ)e_m` and `o(e_m` as `ψ ↦ o(ψe_m)`.
//! The 64 left-barred units `e_l)e_m` span every real linear map of the
//! octonions, and right-barred terms are reduced to that form on
//! construction. A bare `o|e_m` is never built except where both
//! groupings agree.

use std::array;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use serde_json::{json, Value};

use crate::barred_quaternion::{BarredQuaternion, ComplexValue};
use crate::error::{Error, Result};
use crate::json;
use crate::linalg::RealMatrix;
use crate::matrix_bridge::{or_to_r8, r8_to_or, right_term_to_r8};
use crate::octonion::Octonion;
use crate::scalar::Scalar;
use crate::text;

/// `o0 + Σ o_m)e_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftBarredOctonion<T> {
    pub o0: Octonion<T>,
    pub om: [Octonion<T>; 7],
}

/// `o(e_m`, acting as `ψ ↦ o(ψ e_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RightBarredTerm<T> {
    pub o: Octonion<T>,
    pub m: usize,
}

impl<T: Scalar> RightBarredTerm<T> {
    pub fn new(o: Octonion<T>, m: usize) -> Result<Self> {
        if !(1..=7).contains(&m) {
            return Err(Error::InvalidSelector(format!("barred unit e{m}")));
        }
        Ok(RightBarredTerm { o, m })
    }

    /// `e_l(e_m` with `e_0 = 1`.
    pub fn units(l: usize, m: usize) -> Self {
        RightBarredTerm { o: Octonion::unit(l), m }
    }

    pub fn apply(&self, psi: &Octonion<T>) -> Octonion<T> {
        self.o.mul(&psi.mul(&Octonion::unit(self.m)))
    }
}

impl<T: Scalar> LeftBarredOctonion<T> {
    pub fn zero() -> Self {
        LeftBarredOctonion { o0: Octonion::zero(), om: array::from_fn(|_| Octonion::zero()) }
    }

    pub fn identity() -> Self {
        Self::left(Octonion::one())
    }

    pub fn left(o: Octonion<T>) -> Self {
        Self::barred(o, 0)
    }

    /// `o)e_m`; `m = 0` is plain left multiplication.
    pub fn barred(o: Octonion<T>, m: usize) -> Self {
        let mut a = Self::zero();
        *a.slot_mut(m) = o;
        a
    }

    /// `e_l)e_m` with `e_0 = 1`.
    pub fn units(l: usize, m: usize) -> Self {
        Self::barred(Octonion::unit(l), m)
    }

    pub fn slot(&self, m: usize) -> &Octonion<T> {
        if m == 0 {
            &self.o0
        } else {
            &self.om[m - 1]
        }
    }

    pub fn slot_mut(&mut self, m: usize) -> &mut Octonion<T> {
        if m == 0 {
            &mut self.o0
        } else {
            &mut self.om[m - 1]
        }
    }

    /// Left-barred form of a right-barred term.
    pub fn reduce_right(t: &RightBarredTerm<T>) -> Self {
        r8_to_or(&right_term_to_r8(t)).expect("left-barred basis is complete")
    }

    /// Embeds a barred quaternion; `q|e_m` is unambiguous on the
    /// quaternionic units.
    pub fn from_barred_quaternion(a: &BarredQuaternion<T>) -> Self {
        let mut out = Self::zero();
        for (m, q) in a.q.iter().enumerate() {
            *out.slot_mut(m) = Octonion::from_quaternion(q);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.o0.is_zero() && self.om.iter().all(Octonion::is_zero)
    }

    pub fn scale(&self, s: &T) -> Self {
        LeftBarredOctonion { o0: self.o0.scale(s), om: array::from_fn(|k| self.om[k].scale(s)) }
    }

    /// `o0 ψ + Σ (o_m ψ) e_m`.
    pub fn apply(&self, psi: &Octonion<T>) -> Octonion<T> {
        let mut out = self.o0.mul(psi);
        for (k, o) in self.om.iter().enumerate() {
            if !o.is_zero() {
                out = out + o.mul(psi).mul(&Octonion::unit(k + 1));
            }
        }
        out
    }

    pub fn to_matrix(&self) -> RealMatrix<T> {
        or_to_r8(self)
    }

    /// Operator product `self ∘ rhs` (`rhs` acts first), taken through the
    /// 8×8 images.
    pub fn compose(&self, rhs: &Self) -> Self {
        r8_to_or(&self.to_matrix().mul(&rhs.to_matrix())).expect("left-barred basis is complete")
    }

    /// The 64 coefficients, slot-major.
    pub fn coefficients(&self) -> Vec<T> {
        (0..8).flat_map(|m| self.slot(m).c.clone()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "o0": json::scalars(&self.o0.c),
            "om": self.om.iter().map(|o| json::scalars(&o.c)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let oct = |v: &Value| -> Result<Octonion<T>> {
            let c = json::parse_scalars::<T>(v, 8)?;
            Ok(Octonion::new(c.try_into().map_err(|_| Error::Parse("octonion".into()))?))
        };
        let om_json = json::field(v, "om")?.as_array().ok_or_else(|| Error::Parse("om must be an array".into()))?;
        if om_json.len() != 7 {
            return Err(Error::Parse("om must hold 7 octonions".into()));
        }
        let mut out = Self::zero();
        out.o0 = oct(json::field(v, "o0")?)?;
        for (k, o) in om_json.iter().enumerate() {
            out.om[k] = oct(o)?;
        }
        Ok(out)
    }
}

impl<T: Scalar> Add for LeftBarredOctonion<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut om = self.om;
        for (a, b) in om.iter_mut().zip(rhs.om) {
            *a = a.clone() + b;
        }
        LeftBarredOctonion { o0: self.o0 + rhs.o0, om }
    }
}

impl<T: Scalar> Sub for LeftBarredOctonion<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for LeftBarredOctonion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        LeftBarredOctonion { o0: -self.o0, om: self.om.map(|o| -o) }
    }
}

impl<T: Scalar> fmt::Display for LeftBarredOctonion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.o0.is_zero() {
            parts.push(self.o0.to_string());
        }
        for (k, o) in self.om.iter().enumerate() {
            if !o.is_zero() {
                parts.push(format!("({o}))e{}", k + 1));
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

impl<T: Scalar> FromStr for LeftBarredOctonion<T> {
    type Err = Error;

    /// Accepts sums of `o`, `(o))e_m` or `e_l)e_m`, right-barred `(o)(e_m`
    /// or `e_l(e_m` (reduced on the spot), and `o|e_m` read with the left
    /// grouping.
    fn from_str(s: &str) -> Result<Self> {
        let compact = mark_groupings(s);
        if compact.is_empty() {
            return Err(Error::Parse("empty barred operator".into()));
        }
        let unwrap = |t: &str| -> Result<Octonion<T>> {
            t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t).parse()
        };
        let slot = |d: &str| -> Result<usize> {
            d.strip_prefix('e')
                .and_then(|d| d.parse().ok())
                .filter(|m| (1..8).contains(m))
                .ok_or_else(|| Error::Parse(format!("bad barred unit {d:?}")))
        };
        let mut out = Self::zero();
        for (negative, term) in text::split_signed_terms(&compact)? {
            let part = if let Some((o, m)) = term.split_once(['>', '|']) {
                Self::barred(unwrap(o)?, slot(m)?)
            } else if let Some((o, m)) = term.split_once('<') {
                Self::reduce_right(&RightBarredTerm::new(unwrap(o)?, slot(m)?)?)
            } else {
                Self::left(unwrap(term)?)
            };
            out = if negative { out - part } else { out + part };
        }
        Ok(out)
    }
}

/// Strips whitespace and rewrites the grouping brackets of `o)e_m` and
/// `o(e_m` as `>` and `<`. A `(` opens a group only at the start of a term.
fn mark_groupings(s: &str) -> String {
    let mut out = String::new();
    let mut depth = 0usize;
    for c in s.chars().filter(|c| !c.is_whitespace()) {
        let at_term_start = matches!(out.chars().last(), None | Some('+' | '-')) && depth == 0;
        let c = match c {
            '(' if at_term_start || depth > 0 => {
                depth += 1;
                '('
            }
            '(' => '<',
            ')' if depth > 0 => {
                depth -= 1;
                ')'
            }
            ')' => '>',
            other => other,
        };
        out.push(c);
    }
    out
}

/// `o = c1 + e2 c2 + e4 c3 + e6 c4` with complex `c_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctonionicState<T> {
    pub c: [ComplexValue<T>; 4],
}

impl<T: Scalar> OctonionicState<T> {
    pub fn new(c1: ComplexValue<T>, c2: ComplexValue<T>, c3: ComplexValue<T>, c4: ComplexValue<T>) -> Self {
        OctonionicState { c: [c1, c2, c3, c4] }
    }

    // e2 e1 = -e3, e4 e1 = -e5 and e6 e1 = e7.
    const SIGNS: [bool; 4] = [true, false, false, true];

    pub fn decompose(o: &Octonion<T>) -> Self {
        let c = array::from_fn(|k| {
            let im = o.c[2 * k + 1].clone();
            Complex::new(o.c[2 * k].clone(), if Self::SIGNS[k] { im } else { -im })
        });
        OctonionicState { c }
    }

    pub fn compose(&self) -> Octonion<T> {
        Octonion::new(array::from_fn(|i| {
            let z = &self.c[i / 2];
            if i % 2 == 0 {
                z.re.clone()
            } else if Self::SIGNS[i / 2] {
                z.im.clone()
            } else {
                -z.im.clone()
            }
        }))
    }
}

/// The symbols `1, e_m, 1|e_m, e_m|e_m, e_m)e_n, e_m(e_n` counted when
/// octonionic barred operators are first introduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OctonionSymbol {
    One,
    Left(usize),
    RightOne(usize),
    Both(usize),
    LeftBarred(usize, usize),
    RightBarred(usize, usize),
}

impl OctonionSymbol {
    /// All 106 symbols: `15 + 7 + 42 + 42`.
    pub fn family() -> Vec<OctonionSymbol> {
        let mut out = vec![OctonionSymbol::One];
        out.extend((1..8).map(OctonionSymbol::Left));
        out.extend((1..8).map(OctonionSymbol::RightOne));
        out.extend((1..8).map(OctonionSymbol::Both));
        for (m, n) in (1..8).flat_map(|m| (1..8).map(move |n| (m, n))).filter(|(m, n)| m != n) {
            out.push(OctonionSymbol::LeftBarred(m, n));
        }
        for (m, n) in (1..8).flat_map(|m| (1..8).map(move |n| (m, n))).filter(|(m, n)| m != n) {
            out.push(OctonionSymbol::RightBarred(m, n));
        }
        out
    }

    /// Left-barred form. `1|e_m` and `e_m|e_m` use the left grouping, which
    /// agrees with the right one for these symbols.
    pub fn operator<T: Scalar>(self) -> LeftBarredOctonion<T> {
        match self {
            OctonionSymbol::One => LeftBarredOctonion::identity(),
            OctonionSymbol::Left(m) => LeftBarredOctonion::units(m, 0),
            OctonionSymbol::RightOne(m) => LeftBarredOctonion::units(0, m),
            OctonionSymbol::Both(m) => LeftBarredOctonion::units(m, m),
            OctonionSymbol::LeftBarred(m, n) => LeftBarredOctonion::units(m, n),
            OctonionSymbol::RightBarred(m, n) => LeftBarredOctonion::reduce_right(&RightBarredTerm::units(m, n)),
        }
    }
}

impl fmt::Display for OctonionSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OctonionSymbol::One => f.write_str("1"),
            OctonionSymbol::Left(m) => write!(f, "e{m}"),
            OctonionSymbol::RightOne(m) => write!(f, "1|e{m}"),
            OctonionSymbol::Both(m) => write!(f, "e{m}|e{m}"),
            OctonionSymbol::LeftBarred(m, n) => write!(f, "e{m})e{n}"),
            OctonionSymbol::RightBarred(m, n) => write!(f, "e{m}(e{n}"),
        }
    }
}

/// `(e_k)e1 - e_k(e1) / 2`, which vanishes on the quaternion subalgebra
/// for `k = 3`.
pub fn correction<T: Scalar>(k: usize) -> LeftBarredOctonion<T> {
    (LeftBarredOctonion::units(k, 1) - LeftBarredOctonion::reduce_right(&RightBarredTerm::units(k, 1))).scale(&T::half())
}

/// `(e_k)e1 + e_k(e1) / 2`.
pub fn hermitian_partner<T: Scalar>(k: usize) -> LeftBarredOctonion<T> {
    (LeftBarredOctonion::units(k, 1) + LeftBarredOctonion::reduce_right(&RightBarredTerm::units(k, 1))).scale(&T::half())
}

/// Antihermitian units for complex linear octonionic operators and their
/// hermitian counterparts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositeUnit {
    /// `e2 + [(e3)e1 - e3(e1)] / 2`
    E2,
    /// `e4 + [(e5)e1 - e5(e1)] / 2`
    E4,
    /// `e6 - [(e7)e1 - e7(e1)] / 2`
    E6,
    /// `[(e3)e1 + e3(e1)] / 2`
    H3,
    /// `[(e5)e1 + e5(e1)] / 2`
    H5,
    /// `[(e7)e1 + e7(e1)] / 2`
    H7,
}

impl CompositeUnit {
    pub const ALL: [CompositeUnit; 6] =
        [CompositeUnit::E2, CompositeUnit::E4, CompositeUnit::E6, CompositeUnit::H3, CompositeUnit::H5, CompositeUnit::H7];

    pub fn from_selector(s: &str) -> Result<Self> {
        Ok(match s.trim().trim_matches('"') {
            "e2" => CompositeUnit::E2,
            "e4" => CompositeUnit::E4,
            "e6" => CompositeUnit::E6,
            "h3" => CompositeUnit::H3,
            "h5" => CompositeUnit::H5,
            "h7" => CompositeUnit::H7,
            other => return Err(Error::InvalidSelector(format!("composite unit {other:?}"))),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            CompositeUnit::E2 => "e2",
            CompositeUnit::E4 => "e4",
            CompositeUnit::E6 => "e6",
            CompositeUnit::H3 => "h3",
            CompositeUnit::H5 => "h5",
            CompositeUnit::H7 => "h7",
        }
    }

    pub fn is_antihermitian(self) -> bool {
        matches!(self, CompositeUnit::E2 | CompositeUnit::E4 | CompositeUnit::E6)
    }

    pub fn operator<T: Scalar>(self) -> LeftBarredOctonion<T> {
        let unit = |k| LeftBarredOctonion::units(k, 0);
        match self {
            CompositeUnit::E2 => unit(2) + correction(3),
            CompositeUnit::E4 => unit(4) + correction(5),
            CompositeUnit::E6 => unit(6) - correction(7),
            CompositeUnit::H3 => hermitian_partner(3),
            CompositeUnit::H5 => hermitian_partner(5),
            CompositeUnit::H7 => hermitian_partner(7),
        }
    }
}

/// Outcome of the antihermiticity check, with a failing basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<T> {
    pub antihermitian: bool,
    pub witness: Option<(Octonion<T>, Octonion<T>)>,
}

impl<T: Scalar> Verdict<T> {
    pub fn to_json(&self) -> Value {
        let witness = match &self.witness {
            Some((psi, phi)) => json!({ "psi": psi.to_string(), "phi": phi.to_string() }),
            None => Value::Null,
        };
        json!({ "antihermitian": self.antihermitian, "witness": witness })
    }
}

/// Checks `[(Aψ)†φ]_c = -[ψ†(Aφ)]_c` on every pair of basis octonions,
/// which covers all states by real bilinearity.
pub fn antihermiticity_test<T: Scalar>(a: &LeftBarredOctonion<T>) -> Verdict<T> {
    let images: Vec<Octonion<T>> = (0..8).map(|k| a.apply(&Octonion::unit(k))).collect();
    for i in 0..8 {
        for j in 0..8 {
            let (psi, phi) = (Octonion::<T>::unit(i), Octonion::<T>::unit(j));
            let lhs = images[i].conj().mul(&phi).complex_part();
            let rhs = -psi.conj().mul(&images[j]).complex_part();
            if lhs != rhs {
                return Verdict { antihermitian: false, witness: Some((psi, phi)) };
            }
        }
    }
    Verdict { antihermitian: true, witness: None }
}
