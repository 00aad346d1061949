//! Rotations and boosts of `q = ct + e1 x + e2 y + e3 z` generated by
//! barred quaternions.
//!
//! Generators are exact; finite transformations are `exp(θ M)` with `M`
//! the 4×4 real image of the generator, evaluated in `f64`.

use std::fmt;
use std::str::FromStr;

use crate::barred_quaternion::BarredQuaternion;
use crate::error::{Error, Result};
use crate::group_lab::{defining_constraint, Carrier, Family, GroupSpec, OperatorMatrix};
use crate::linalg::RealMatrix;
use crate::matrix_bridge::qr_to_r4;
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;

/// A space-time point `ct + e1 x + e2 y + e3 z`.
pub type Event = Quaternion<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LorentzKind {
    BoostX,
    BoostY,
    BoostZ,
    RotX,
    RotY,
    RotZ,
}

impl LorentzKind {
    pub const ALL: [LorentzKind; 6] = [
        LorentzKind::BoostX,
        LorentzKind::BoostY,
        LorentzKind::BoostZ,
        LorentzKind::RotX,
        LorentzKind::RotY,
        LorentzKind::RotZ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LorentzKind::BoostX => "boost_x",
            LorentzKind::BoostY => "boost_y",
            LorentzKind::BoostZ => "boost_z",
            LorentzKind::RotX => "rot_x",
            LorentzKind::RotY => "rot_y",
            LorentzKind::RotZ => "rot_z",
        }
    }

    pub fn is_boost(self) -> bool {
        matches!(self, LorentzKind::BoostX | LorentzKind::BoostY | LorentzKind::BoostZ)
    }
}

impl fmt::Display for LorentzKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LorentzKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LorentzKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidSelector(format!("lorentz generator {s:?}")))
    }
}

/// The exact barred generator:
/// boosts `(e3|e2 - e2|e3)/2`, `(e1|e3 - e3|e1)/2`, `(e2|e1 - e1|e2)/2`,
/// rotations `(e_u - 1|e_u)/2`.
pub fn generator<T: Scalar>(kind: LorentzKind) -> BarredQuaternion<T> {
    let u = BarredQuaternion::<T>::units;
    let g = match kind {
        LorentzKind::BoostX => u(3, 2) - u(2, 3),
        LorentzKind::BoostY => u(1, 3) - u(3, 1),
        LorentzKind::BoostZ => u(2, 1) - u(1, 2),
        LorentzKind::RotX => u(1, 0) - u(0, 1),
        LorentzKind::RotY => u(2, 0) - u(0, 2),
        LorentzKind::RotZ => u(3, 0) - u(0, 3),
    };
    g.scale(&T::half())
}

/// True when `gA + A†g = 0` holds exactly.
pub fn is_lorentz_generator<T: Scalar>(a: &BarredQuaternion<T>) -> bool {
    let spec = GroupSpec::new(Family::OTilde, Carrier::Qr, 1);
    defining_constraint(spec, &OperatorMatrix::single(a.clone())).iter().all(|v| v.is_zero())
}

/// `exp(A)` by scaling and squaring with a Taylor series.
pub fn expm(a: &RealMatrix<f64>) -> RealMatrix<f64> {
    let n = a.rows();
    let norm = (0..n).map(|r| a.row(r).iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max);
    let mut squarings = 0;
    let mut scaled = norm;
    while scaled > 0.5 {
        scaled /= 2.0;
        squarings += 1;
    }
    let a = a.scale(&(0.5f64).powi(squarings));
    let mut sum = RealMatrix::identity(n);
    let mut term = RealMatrix::identity(n);
    for k in 1..=30 {
        term = term.mul(&a).scale(&(1.0 / k as f64));
        sum = sum.add(&term);
        if term.data().iter().all(|v| v.abs() < 1e-18) {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    sum
}

/// `exp(θ M)` for a generator kind.
pub fn transform_matrix(kind: LorentzKind, theta: f64) -> RealMatrix<f64> {
    expm(&qr_to_r4(&generator::<f64>(kind)).scale(&theta))
}

pub fn transform(kind: LorentzKind, theta: f64, ev: &Event) -> Event {
    apply_matrix(&transform_matrix(kind, theta), ev)
}

pub fn apply_matrix(m: &RealMatrix<f64>, ev: &Event) -> Event {
    Quaternion::from_coeffs(m.mul_vec(&ev.coeffs()).try_into().expect("4 components"))
}

/// Rotation by `alpha` about the unit axis `u`, via the exponential of
/// `Σ u_i rot_i`.
pub fn rotation_about(u: [f64; 3], alpha: f64, ev: &Event) -> Event {
    let kinds = [LorentzKind::RotX, LorentzKind::RotY, LorentzKind::RotZ];
    let mut m = RealMatrix::zeros(4, 4);
    for (k, c) in kinds.iter().zip(u) {
        m = m.add(&qr_to_r4(&generator::<f64>(*k)).scale(&c));
    }
    apply_matrix(&expm(&m.scale(&alpha)), ev)
}

/// `exp(α/2 e·u) q exp(-α/2 e·u)`.
pub fn rotation_sandwich(u: [f64; 3], alpha: f64, ev: &Event) -> Event {
    let (s, c) = (alpha / 2.0).sin_cos();
    let left = Quaternion::new(c, s * u[0], s * u[1], s * u[2]);
    left.mul(ev).mul(&left.conj())
}

/// `[q† g q]_r = (ct)² - x² - y² - z²`.
pub fn interval(ev: &Event) -> f64 {
    let gq = BarredQuaternion::<f64>::g_operator().apply(ev);
    ev.conj().mul(&gq).re()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Span;
    use crate::Rational;

    type B = BarredQuaternion<Rational>;

    fn close(a: &Event, b: &Event, tol: f64) -> bool {
        a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn generators_are_exact_lorentz_generators() {
        assert_eq!(generator::<Rational>(LorentzKind::BoostX), "(1/2 e3)|e2 - (1/2 e2)|e3".parse::<B>().unwrap());
        assert_eq!(generator::<Rational>(LorentzKind::RotZ), "1/2 e3 - (1/2)|e3".parse::<B>().unwrap());
        for k in LorentzKind::ALL {
            assert!(is_lorentz_generator(&generator::<Rational>(k)), "{k}");
        }
        assert!(!is_lorentz_generator(&B::units(1, 1)));
    }

    #[test]
    fn commutators() {
        let g = |k| generator::<Rational>(k);
        assert_eq!(g(LorentzKind::RotX).commutator(&g(LorentzKind::RotY)), g(LorentzKind::RotZ));
        let rot: Vec<Vec<Rational>> = [LorentzKind::RotX, LorentzKind::RotY, LorentzKind::RotZ]
            .iter()
            .map(|k| OperatorMatrix::single(g(*k)).full_params())
            .collect();
        let span = Span::new(&rot, 16);
        for (a, b) in [(LorentzKind::BoostX, LorentzKind::BoostY), (LorentzKind::BoostY, LorentzKind::BoostZ), (LorentzKind::BoostZ, LorentzKind::BoostX)] {
            let c = OperatorMatrix::single(g(a).commutator(&g(b)));
            assert!(!c.is_zero());
            assert!(span.contains(&c.full_params()));
        }
    }

    #[test]
    fn transform_examples() {
        let e1 = Quaternion::new(0.0, 1.0, 0.0, 0.0);
        let out = transform(LorentzKind::RotZ, std::f64::consts::FRAC_PI_2, &e1);
        assert!(close(&out, &Quaternion::new(0.0, 0.0, 1.0, 0.0), 1e-12));
        let ev = Quaternion::new(0.3, -1.0, 2.0, 0.5);
        for k in LorentzKind::ALL {
            assert!(close(&transform(k, 0.0, &ev), &ev, 0.0));
        }
        let theta = 0.7f64;
        let b = transform(LorentzKind::BoostX, theta, &Quaternion::new(1.0, 0.0, 0.0, 0.0));
        assert!(close(&b, &Quaternion::new(theta.cosh(), -theta.sinh(), 0.0, 0.0), 1e-12));
        let r = transform(LorentzKind::RotX, 1.1, &ev);
        assert!((r.w - ev.w).abs() < 1e-12);
    }

    #[test]
    fn intervals() {
        assert_eq!(interval(&Quaternion::new(1.0, 0.0, 0.0, 0.0)), 1.0);
        assert_eq!(interval(&Quaternion::new(1.0, 1.0, 0.0, 0.0)), 0.0);
        let ev = Quaternion::new(2.0, 0.5, -1.0, 0.25);
        for k in LorentzKind::ALL {
            let after = interval(&transform(k, 1.7, &ev));
            assert!((after - interval(&ev)).abs() <= 1e-12 * (1.0 + interval(&ev).abs()), "{k}");
        }
    }

    #[test]
    fn rotation_matches_sandwich() {
        let n = (1.0f64 + 4.0 + 9.0).sqrt();
        let u = [1.0 / n, -2.0 / n, 3.0 / n];
        let ev = Quaternion::new(0.0, 0.4, 1.5, -2.0);
        let a = rotation_about(u, 1.3, &ev);
        let b = rotation_sandwich(u, 1.3, &ev);
        assert!(close(&a, &b, 1e-12));
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("boost_y".parse::<LorentzKind>().unwrap(), LorentzKind::BoostY);
        assert!("spin".parse::<LorentzKind>().is_err());
    }
}
