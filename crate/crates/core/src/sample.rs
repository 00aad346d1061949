//! Seeded random exact values for property checks.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::barred_quaternion::BarredQuaternion;
use crate::group_lab::OperatorMatrix;
use crate::octonion::Octonion;
use crate::quaternion::Quaternion;
use crate::Rational;

/// Seed used when neither a flag nor `HYPALG_SEED` provides one.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A rational with numerator in `-9..=9` and denominator in `1..=4`.
pub fn rational(rng: &mut impl Rng) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=4)))
}

pub fn quaternion(rng: &mut impl Rng) -> Quaternion<Rational> {
    Quaternion::new(rational(rng), rational(rng), rational(rng), rational(rng))
}

pub fn octonion(rng: &mut impl Rng) -> Octonion<Rational> {
    Octonion::new(std::array::from_fn(|_| rational(rng)))
}

pub fn barred_quaternion(rng: &mut impl Rng) -> BarredQuaternion<Rational> {
    BarredQuaternion::new(quaternion(rng), quaternion(rng), quaternion(rng), quaternion(rng))
}

/// An `n × n` matrix of quaternions.
pub fn quaternion_matrix(rng: &mut impl Rng, n: usize) -> OperatorMatrix<Rational> {
    let entries = (0..n * n).map(|_| quaternion(rng)).collect();
    OperatorMatrix::from_quaternions(n, entries).expect("n*n entries")
}

/// A unit axis drawn uniformly from the sphere.
pub fn unit_axis(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 && n <= 1.0 {
            return v.map(|x| x / n);
        }
    }
}
