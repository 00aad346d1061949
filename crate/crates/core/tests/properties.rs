use hypalg::barred_octonion::{LeftBarredOctonion, RightBarredTerm};
use hypalg::barred_quaternion::{complex_projection, complex_to_quaternion, BarredQuaternion};
use hypalg::group_lab::OperatorMatrix;
use hypalg::linalg::RealMatrix;
use hypalg::lorentz::{self, Event, LorentzKind};
use hypalg::matrix_bridge::{or_to_r8, q_to_c2, qr_to_r4, r4_to_qr, r8_to_or, right_term_to_r8};
use hypalg::octonion::{associator, Octonion};
use hypalg::quaternion::Quaternion;
use hypalg::Rational;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use proptest::prelude::*;

type R = Rational;
type Q = Quaternion<R>;
type O = Octonion<R>;
type B = BarredQuaternion<R>;
type L = LeftBarredOctonion<R>;

fn rational() -> impl Strategy<Value = R> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| R::new(BigInt::from(n), BigInt::from(d)))
}

fn quaternion() -> impl Strategy<Value = Q> {
    prop::array::uniform4(rational()).prop_map(Q::from_coeffs)
}

fn octonion() -> impl Strategy<Value = O> {
    prop::array::uniform8(rational()).prop_map(O::new)
}

fn barred() -> impl Strategy<Value = B> {
    prop::array::uniform4(quaternion()).prop_map(|[a, b, c, d]| B::new(a, b, c, d))
}

fn complex_linear() -> impl Strategy<Value = B> {
    (quaternion(), quaternion()).prop_map(|(a, b)| B::new(a, b, Q::zero(), Q::zero()))
}

fn left_barred() -> impl Strategy<Value = L> {
    (octonion(), prop::array::uniform7(octonion())).prop_map(|(o0, om)| L { o0, om })
}

fn operator_matrix(n: usize) -> impl Strategy<Value = OperatorMatrix<R>> {
    prop::collection::vec(barred(), n * n).prop_map(move |e| OperatorMatrix::from_entries(n, e).unwrap())
}

fn q(s: &str) -> Q {
    s.parse().unwrap()
}

/// Hamilton product written out component by component.
fn hamilton(a: &Q, b: &Q) -> Q {
    let [a0, a1, a2, a3] = a.coeffs();
    let [b0, b1, b2, b3] = b.coeffs();
    Q::new(
        a0.clone() * &b0 - a1.clone() * &b1 - a2.clone() * &b2 - a3.clone() * &b3,
        a0.clone() * &b1 + a1.clone() * &b0 + a2.clone() * &b3 - a3.clone() * &b2,
        a0.clone() * &b2 - a1.clone() * &b3 + a2.clone() * &b0 + a3.clone() * &b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )
}

/// Cayley-Dickson doubling `(a + bℓ)(c + dℓ) = (ac - d̄b) + (da + bc̄)ℓ`
/// with `ℓ = e4` and `e_k ℓ = e_{k+4}`.
fn cayley_dickson(x: &O, y: &O) -> O {
    let half = |o: &O, k: usize| Q::new(o.c[k].clone(), o.c[k + 1].clone(), o.c[k + 2].clone(), o.c[k + 3].clone());
    let (a, b, c, d) = (half(x, 0), half(x, 4), half(y, 0), half(y, 4));
    let lo = hamilton(&a, &c) - hamilton(&d.conj(), &b);
    let hi = hamilton(&d, &a) + hamilton(&b, &c.conj());
    let (lo, hi) = (lo.coeffs(), hi.coeffs());
    O::new(std::array::from_fn(|k| if k < 4 { lo[k].clone() } else { hi[k - 4].clone() }))
}

/// `w + x e1 + y e2 + z e3` as `[[w + ix, -(y + iz)], [y - iz, w - ix]]`
/// built directly from the Pauli matrices.
fn pauli(a: &Q) -> [[Complex<R>; 2]; 2] {
    let [w, x, y, z] = a.coeffs();
    [
        [Complex::new(w.clone(), x.clone()), Complex::new(-y.clone(), -z.clone())],
        [Complex::new(y, -z), Complex::new(w, -x)],
    ]
}

fn mul2(a: &[[Complex<R>; 2]; 2], b: &[[Complex<R>; 2]; 2]) -> [[Complex<R>; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0].clone() * &b[0][j] + a[i][1].clone() * &b[1][j]))
}

fn diag(d: [i64; 4]) -> RealMatrix<R> {
    let mut m = RealMatrix::zeros(4, 4);
    for (i, v) in d.into_iter().enumerate() {
        m[(i, i)] = R::from_integer(BigInt::from(v));
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn quaternion_product_matches_hamilton_and_pauli(a in quaternion(), b in quaternion()) {
        prop_assert_eq!(a.mul(&b), hamilton(&a, &b));
        prop_assert_eq!(pauli(&a.mul(&b)), mul2(&pauli(&a), &pauli(&b)));
    }

    #[test]
    fn quaternion_is_associative(a in quaternion(), b in quaternion(), c in quaternion()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn quaternion_involutions(a in quaternion(), b in quaternion()) {
        let ab = a.mul(&b);
        prop_assert_eq!(ab.conj(), b.conj().mul(&a.conj()));
        prop_assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()));
        prop_assert_eq!(ab.star(), a.star().mul(&b.star()));
        let e2 = Q::unit(2);
        prop_assert_eq!(a.transpose(), -e2.mul(&a.conj()).mul(&e2));
        let sum = (1..4).fold(a.clone(), |acc, k| acc + Q::unit(k).mul(&a).mul(&Q::unit(k)));
        prop_assert_eq!(a.conj(), sum.scale(&R::new((-1).into(), 2.into())));
    }

    #[test]
    fn quaternion_norm(a in quaternion()) {
        let n = Q::real(a.norm2());
        prop_assert_eq!(a.conj().mul(&a), n.clone());
        prop_assert_eq!(a.mul(&a.conj()), n);
        if !a.is_zero() {
            prop_assert!(a.norm2() > R::zero());
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Q::one());
        }
    }

    #[test]
    fn octonion_product_matches_cayley_dickson(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y), cayley_dickson(&x, &y));
    }

    #[test]
    fn octonions_are_alternative_and_normed(x in octonion(), y in octonion(), z in octonion()) {
        prop_assert!((associator(&x, &y, &z) + associator(&z, &y, &x)).is_zero());
        prop_assert!(associator(&x, &x, &y).is_zero());
        prop_assert_eq!(x.mul(&y).norm2(), x.norm2() * y.norm2());
        prop_assert_eq!(x.mul(&x.conj()), O::real(x.norm2()));
        prop_assert_eq!(x.conj().mul(&x), O::real(x.norm2()));
    }

    #[test]
    fn barred_composition_is_application(a in barred(), b in barred(), psi in quaternion()) {
        prop_assert_eq!(a.compose(&b).apply(&psi), a.apply(&b.apply(&psi)));
        prop_assert_eq!(qr_to_r4(&a.compose(&b)), qr_to_r4(&a).mul(&qr_to_r4(&b)));
        prop_assert_eq!(qr_to_r4(&a).mul_vec(&psi.coeffs()), a.apply(&psi).coeffs().to_vec());
        prop_assert_eq!(r4_to_qr(&qr_to_r4(&a)).unwrap(), a);
    }

    #[test]
    fn dagger_and_transpose_are_adjoints(a in barred(), b in barred()) {
        let m = qr_to_r4(&a);
        prop_assert_eq!(qr_to_r4(&a.dagger()), m.transpose());
        let d = diag([1, -1, 1, -1]);
        prop_assert_eq!(qr_to_r4(&a.transpose()), d.mul(&m.transpose()).mul(&d));
        prop_assert_eq!(a.compose(&b).dagger(), b.dagger().compose(&a.dagger()));
        prop_assert_eq!(a.compose(&b).transpose(), b.transpose().compose(&a.transpose()));
    }

    #[test]
    fn traces_are_cyclic(a in complex_linear(), b in complex_linear(), c in barred(), d in barred()) {
        prop_assert_eq!(a.compose(&b).complex_trace().unwrap(), b.compose(&a).complex_trace().unwrap());
        prop_assert_eq!(c.compose(&d).real_trace(), d.compose(&c).real_trace());
        let m = qr_to_r4(&c);
        prop_assert_eq!(c.real_trace() * R::from_integer(4.into()), m.trace());
    }

    #[test]
    fn projections_and_g(psi in quaternion(), phi in quaternion()) {
        let p = complex_projection(&psi);
        prop_assert_eq!(complex_projection(&complex_to_quaternion(&p)), p);
        let e1 = Q::unit(1);
        let lhs = complex_projection(&psi.mul(&e1).conj().mul(&phi));
        let rhs = complex_projection(&psi.conj().mul(&phi.mul(&e1)));
        prop_assert_eq!(lhs, -rhs);
        prop_assert_eq!(B::g_operator().apply(&psi), psi.conj());
    }

    #[test]
    fn complex_translation_is_multiplicative(a in quaternion(), b in quaternion()) {
        prop_assert_eq!(q_to_c2(&a.mul(&b)), q_to_c2(&a).mul(&q_to_c2(&b)));
    }

    #[test]
    fn right_barred_terms_reduce_exactly(o in octonion(), m in 1usize..8, psi in octonion()) {
        let t = RightBarredTerm::new(o, m).unwrap();
        let r = L::reduce_right(&t);
        prop_assert_eq!(r.apply(&psi), t.apply(&psi));
        prop_assert_eq!(or_to_r8(&r), right_term_to_r8(&t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn left_barred_translation(a in left_barred(), b in left_barred(), psi in octonion()) {
        prop_assert_eq!(a.compose(&b).apply(&psi), a.apply(&b.apply(&psi)));
        prop_assert_eq!(or_to_r8(&a.compose(&b)), or_to_r8(&a).mul(&or_to_r8(&b)));
        prop_assert_eq!(r8_to_or(&or_to_r8(&a)).unwrap(), a.clone());
        prop_assert_eq!(a.to_string().parse::<L>().unwrap(), a);
    }

    #[test]
    fn operator_matrix_laws(m in operator_matrix(2), n in operator_matrix(2)) {
        let mn = m.mul(&n);
        prop_assert_eq!(mn.transpose(), n.transpose().mul(&m.transpose()));
        prop_assert_eq!(mn.dagger(), n.dagger().mul(&m.dagger()));
        prop_assert_eq!(mn.to_real(), m.to_real().mul(&n.to_real()));
    }

    #[test]
    fn quaternionic_transpose_via_dagger(e in prop::collection::vec(quaternion(), 9)) {
        let m = OperatorMatrix::from_quaternions(3, e).unwrap();
        prop_assert_eq!(m.transpose_via_dagger(), m.transpose());
    }

    #[test]
    fn text_round_trips(a in quaternion(), b in barred(), o in octonion()) {
        prop_assert_eq!(a.to_string().parse::<Q>().unwrap(), a);
        prop_assert_eq!(b.to_string().parse::<B>().unwrap(), b.clone());
        prop_assert_eq!(B::from_json(&b.to_json()).unwrap(), b);
        prop_assert_eq!(o.to_string().parse::<O>().unwrap(), o);
    }
}

proptest! {
    #[test]
    fn single_transforms_keep_the_interval(
        k in 0usize..6,
        theta in -2.0f64..2.0,
        c in prop::array::uniform4(-3.0f64..3.0),
    ) {
        let ev = Event::from_coeffs(c);
        let s = lorentz::interval(&ev);
        let out = lorentz::transform(LorentzKind::ALL[k], theta, &ev);
        prop_assert!((lorentz::interval(&out) - s).abs() <= 1e-9 * (1.0 + s.abs()));
    }

    #[test]
    fn rotations_match_the_sandwich(
        axis in 0usize..3,
        alpha in -2.0f64..2.0,
        r in prop::array::uniform3(-3.0f64..3.0),
    ) {
        let mut u = [0.0; 3];
        u[axis] = 1.0;
        let ev = Event::new(0.0, r[0], r[1], r[2]);
        let kind = [LorentzKind::RotX, LorentzKind::RotY, LorentzKind::RotZ][axis];
        let a = lorentz::transform(kind, alpha, &ev);
        let b = lorentz::rotation_sandwich(u, alpha, &ev);
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }
}

#[test]
fn star_is_a_homomorphism_not_an_anti_homomorphism() {
    let (a, b) = (q("e1"), q("e2"));
    assert_eq!(a.mul(&b).star(), a.star().mul(&b.star()));
    assert_ne!(a.mul(&b).star(), b.star().mul(&a.star()));
}

#[test]
fn unit_is_one() {
    assert!(Q::one().coeffs()[0].is_one());
}
