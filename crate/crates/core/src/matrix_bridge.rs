//! Translations between barred operators and real or complex matrices.
//!
//! Every matrix acts on the coefficient column of its argument: a
//! quaternion `w + x e1 + y e2 + z e3` is the column `(w, x, y, z)` and an
//! octonion is `(r0, ..., r7)`. Only the unit rules `L_m` (left
//! multiplication by `e_m`) and `R_m` (right multiplication, `1|e_m`) are
//! taken as data; everything else is built from them.

use std::fmt;
use std::ops::Index;
use std::sync::Arc;

use num_complex::Complex;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::barred_octonion::{LeftBarredOctonion, OctonionicState, RightBarredTerm};
use crate::barred_quaternion::{BarredQuaternion, ComplexValue};
use crate::cache::{per_scalar, Slot};
use crate::error::{Error, Result};
use crate::json;
use crate::linalg::{rank_of, RealMatrix, Span};
use crate::octonion::Octonion;
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;
use crate::text;

/// The 2×2 real blocks used by the octonionic rules. `ISigma2` is
/// `iσ2 = [[0, 1], [-1, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    One,
    Sigma1,
    Sigma3,
    ISigma2,
}

impl Block {
    pub const fn entries(self) -> [[i64; 2]; 2] {
        match self {
            Block::One => [[1, 0], [0, 1]],
            Block::Sigma1 => [[0, 1], [1, 0]],
            Block::Sigma3 => [[1, 0], [0, -1]],
            Block::ISigma2 => [[0, 1], [-1, 0]],
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Block::One => "1",
            Block::Sigma1 => "σ1",
            Block::Sigma3 => "σ3",
            Block::ISigma2 => "iσ2",
        }
    }
}

/// `{a, b, c, d}_(p)`: four signed 2×2 blocks placed on the 4×4 block grid
/// according to pattern `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub pattern: u8,
    pub blocks: [(i8, Block); 4],
}

impl BlockSpec {
    pub const fn new(pattern: u8, blocks: [(i8, Block); 4]) -> Self {
        BlockSpec { pattern, blocks }
    }

    /// Block grid positions of `a, b, c, d`.
    pub const fn placement(pattern: u8) -> [(usize, usize); 4] {
        match pattern {
            1 => [(0, 0), (1, 1), (2, 2), (3, 3)],
            2 => [(0, 1), (1, 0), (2, 3), (3, 2)],
            3 => [(0, 2), (1, 3), (2, 0), (3, 1)],
            _ => [(0, 3), (1, 2), (2, 1), (3, 0)],
        }
    }

    pub fn expand<T: Scalar>(&self) -> RealMatrix<T> {
        let mut m = RealMatrix::zeros(8, 8);
        for ((sign, block), (br, bc)) in self.blocks.iter().zip(Self::placement(self.pattern)) {
            for (i, row) in block.entries().iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    m[(2 * br + i, 2 * bc + j)] = T::from_int(i64::from(*sign) * v);
                }
            }
        }
        m
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|(s, b)| format!("{}{}", if *s < 0 { "-" } else { "" }, b.name()))
            .collect();
        write!(f, "{{{}}}_({})", parts.join(", "), self.pattern)
    }
}

const fn spec(pattern: u8, a: (i8, Block), b: (i8, Block), c: (i8, Block), d: (i8, Block)) -> BlockSpec {
    BlockSpec::new(pattern, [a, b, c, d])
}

use Block::{ISigma2 as J, One as I, Sigma1 as S1, Sigma3 as S3};

/// `e_1 ... e_7` as 8×8 block rules.
pub const OCTONION_LEFT_RULES: [BlockSpec; 7] = [
    spec(1, (-1, J), (-1, J), (-1, J), (1, J)),
    spec(2, (-1, S3), (1, S3), (-1, I), (1, I)),
    spec(2, (-1, S1), (1, S1), (-1, J), (-1, J)),
    spec(3, (-1, S3), (1, I), (1, S3), (-1, I)),
    spec(3, (-1, S1), (1, J), (1, S1), (1, J)),
    spec(4, (-1, I), (-1, S3), (1, S3), (1, I)),
    spec(4, (-1, J), (-1, S1), (1, S1), (-1, J)),
];

/// `1|e_1 ... 1|e_7` as 8×8 block rules.
pub const OCTONION_RIGHT_RULES: [BlockSpec; 7] = [
    spec(1, (-1, J), (1, J), (1, J), (-1, J)),
    spec(2, (-1, I), (1, I), (1, I), (-1, I)),
    spec(2, (-1, J), (-1, J), (1, J), (1, J)),
    spec(3, (-1, I), (-1, I), (1, I), (1, I)),
    spec(3, (-1, J), (-1, J), (-1, J), (-1, J)),
    spec(4, (-1, S3), (1, S3), (-1, S3), (1, S3)),
    spec(4, (-1, S1), (1, S1), (-1, S1), (1, S1)),
];

/// `e_1, e_2, e_3` as 4×4 real matrices.
pub const QUATERNION_LEFT_RULES: [[[i64; 4]; 4]; 3] = [
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
    [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
];

/// `1|e_1, 1|e_2, 1|e_3` as 4×4 real matrices.
pub const QUATERNION_RIGHT_RULES: [[[i64; 4]; 4]; 3] = [
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
    [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
];

/// Matrix whose `j`-th column is `image(j)`, the coefficients of the image
/// of the `j`-th basis element.
pub fn action_matrix<T: Scalar>(dim: usize, image: impl Fn(usize) -> Vec<T>) -> RealMatrix<T> {
    let mut m = RealMatrix::zeros(dim, dim);
    for j in 0..dim {
        for (i, v) in image(j).into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    m
}

struct UnitMatrices<T> {
    left: Vec<RealMatrix<T>>,
    right: Vec<RealMatrix<T>>,
}

fn quaternion_units<T: Scalar>() -> Arc<UnitMatrices<T>> {
    static SLOT: Slot = Slot::new();
    per_scalar::<T, _>(&SLOT, || {
        let mut left = vec![RealMatrix::identity(4)];
        let mut right = vec![RealMatrix::identity(4)];
        left.extend(QUATERNION_LEFT_RULES.iter().map(|r| RealMatrix::from_int_rows(r)));
        right.extend(QUATERNION_RIGHT_RULES.iter().map(|r| RealMatrix::from_int_rows(r)));
        UnitMatrices { left, right }
    })
}

fn octonion_units<T: Scalar>() -> Arc<UnitMatrices<T>> {
    static SLOT: Slot = Slot::new();
    per_scalar::<T, _>(&SLOT, || {
        let mut left = vec![RealMatrix::identity(8)];
        let mut right = vec![RealMatrix::identity(8)];
        left.extend(OCTONION_LEFT_RULES.iter().map(BlockSpec::expand));
        right.extend(OCTONION_RIGHT_RULES.iter().map(BlockSpec::expand));
        UnitMatrices { left, right }
    })
}

/// `L_m` for quaternions, `L_0 = 1`.
pub fn quaternion_left_unit<T: Scalar>(m: usize) -> RealMatrix<T> {
    quaternion_units::<T>().left[m].clone()
}

/// `R_m` for quaternions, `R_0 = 1`.
pub fn quaternion_right_unit<T: Scalar>(m: usize) -> RealMatrix<T> {
    quaternion_units::<T>().right[m].clone()
}

/// `L_m` for octonions, `L_0 = 1`.
pub fn octonion_left_unit<T: Scalar>(m: usize) -> RealMatrix<T> {
    octonion_units::<T>().left[m].clone()
}

/// `R_m` for octonions, `R_0 = 1`.
pub fn octonion_right_unit<T: Scalar>(m: usize) -> RealMatrix<T> {
    octonion_units::<T>().right[m].clone()
}

fn combine<T: Scalar>(units: &[RealMatrix<T>], coeffs: &[T]) -> RealMatrix<T> {
    let n = units[0].rows();
    let mut out = RealMatrix::zeros(n, n);
    for (u, c) in units.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&u.scale(c));
        }
    }
    out
}

/// Left multiplication by `q`.
pub fn quaternion_left_matrix<T: Scalar>(q: &Quaternion<T>) -> RealMatrix<T> {
    combine(&quaternion_units::<T>().left, &q.coeffs())
}

/// Left multiplication by `o`.
pub fn octonion_left_matrix<T: Scalar>(o: &Octonion<T>) -> RealMatrix<T> {
    combine(&octonion_units::<T>().left, &o.c)
}

/// `Σ R_k L(q_k)`; `e_m|e_n` maps to `R_n L_m`.
pub fn qr_to_r4<T: Scalar>(a: &BarredQuaternion<T>) -> RealMatrix<T> {
    let units = quaternion_units::<T>();
    let mut out = RealMatrix::zeros(4, 4);
    for (k, q) in a.q.iter().enumerate() {
        if !q.is_zero() {
            out = out.add(&units.right[k].mul(&quaternion_left_matrix(q)));
        }
    }
    out
}

/// Inverse of [`qr_to_r4`].
pub fn r4_to_qr<T: Scalar>(m: &RealMatrix<T>) -> Result<BarredQuaternion<T>> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(Error::DimensionMismatch(format!("expected 4x4, got {}x{}", m.rows(), m.cols())));
    }
    let x = quaternion_basis_solver::<T>().coordinates(m)?;
    let mut out = BarredQuaternion::zero();
    for (k, slot) in out.q.iter_mut().enumerate() {
        *slot = Quaternion::from_coeffs(std::array::from_fn(|l| x[4 * k + l].clone()));
    }
    Ok(out)
}

/// `Σ R_m L(o_m)`; `e_l)e_m` maps to `R_m L_l`.
pub fn or_to_r8<T: Scalar>(a: &LeftBarredOctonion<T>) -> RealMatrix<T> {
    let units = octonion_units::<T>();
    let mut out = octonion_left_matrix(&a.o0);
    for (k, o) in a.om.iter().enumerate() {
        if !o.is_zero() {
            out = out.add(&units.right[k + 1].mul(&octonion_left_matrix(o)));
        }
    }
    out
}

/// `o(e_m` maps to `L(o) R_m`.
pub fn right_term_to_r8<T: Scalar>(t: &RightBarredTerm<T>) -> RealMatrix<T> {
    octonion_left_matrix(&t.o).mul(&octonion_units::<T>().right[t.m])
}

/// Inverse of [`or_to_r8`]: expands an 8×8 matrix in the left-barred basis.
pub fn r8_to_or<T: Scalar>(m: &RealMatrix<T>) -> Result<LeftBarredOctonion<T>> {
    if m.rows() != 8 || m.cols() != 8 {
        return Err(Error::DimensionMismatch(format!("expected 8x8, got {}x{}", m.rows(), m.cols())));
    }
    let x = octonion_basis_solver::<T>().coordinates(m)?;
    let slot = |k: usize| Octonion::new(std::array::from_fn(|l| x[8 * k + l].clone()));
    Ok(LeftBarredOctonion { o0: slot(0), om: std::array::from_fn(|k| slot(k + 1)) })
}

/// The 16 matrices `R_k L_l`, indexed `4k + l`.
pub fn quaternion_barred_basis<T: Scalar>() -> Vec<RealMatrix<T>> {
    let u = quaternion_units::<T>();
    (0..16).map(|i| u.right[i / 4].mul(&u.left[i % 4])).collect()
}

/// The 64 matrices `R_m L_l` of `e_l)e_m`, indexed `8m + l`.
pub fn left_barred_basis<T: Scalar>() -> Vec<RealMatrix<T>> {
    let u = octonion_units::<T>();
    (0..64).map(|i| u.right[i / 8].mul(&u.left[i % 8])).collect()
}

/// Exact rank of a family of equally sized matrices viewed as vectors.
pub fn matrix_rank<T: Scalar>(matrices: &[RealMatrix<T>]) -> usize {
    let vectors: Vec<Vec<T>> = matrices.iter().map(|m| m.data().to_vec()).collect();
    rank_of(&vectors)
}

/// Rank of the 64 left-barred basis images.
pub fn left_barred_rank<T: Scalar>() -> usize {
    matrix_rank(&left_barred_basis::<T>())
}

/// Coordinates in a fixed matrix basis, via the cached inverse of the
/// matrix whose columns are the flattened basis elements.
struct BasisSolver<T> {
    inverse: RealMatrix<T>,
}

impl<T: Scalar> BasisSolver<T> {
    fn new(basis: &[RealMatrix<T>]) -> Self {
        let n = basis.len();
        let columns = action_matrix(n, |j| basis[j].data().to_vec());
        let inverse = columns.inverse().expect("barred basis is complete");
        BasisSolver { inverse }
    }

    fn coordinates(&self, m: &RealMatrix<T>) -> Result<Vec<T>> {
        if m.data().len() != self.inverse.rows() {
            return Err(Error::DimensionMismatch("matrix size does not match basis".into()));
        }
        Ok(self.inverse.mul_vec(m.data()))
    }
}

fn quaternion_basis_solver<T: Scalar>() -> Arc<BasisSolver<T>> {
    static SLOT: Slot = Slot::new();
    per_scalar::<T, _>(&SLOT, || BasisSolver::new(&quaternion_barred_basis::<T>()))
}

fn octonion_basis_solver<T: Scalar>() -> Arc<BasisSolver<T>> {
    static SLOT: Slot = Slot::new();
    per_scalar::<T, _>(&SLOT, || BasisSolver::new(&left_barred_basis::<T>()))
}

/// Basis of the 8×8 real matrices commuting with `R_1`, i.e. the complex
/// linear octonionic operators.
pub fn complex_linear_subalgebra<T: Scalar>() -> Vec<RealMatrix<T>> {
    let basis = left_barred_basis::<T>();
    let r1 = octonion_right_unit::<T>(1);
    let images: Vec<Vec<T>> = basis.iter().map(|b| b.commutator(&r1).into_data()).collect();
    let constraint = action_matrix(64, |j| images[j].clone());
    constraint
        .kernel()
        .into_iter()
        .map(|x| combine(&basis, &x))
        .collect()
}

/// True when every pairwise product of `family` lies in its span.
pub fn is_product_closed<T: Scalar>(family: &[RealMatrix<T>]) -> bool {
    let Some(first) = family.first() else { return true };
    let len = first.data().len();
    let vectors: Vec<Vec<T>> = family.iter().map(|m| m.data().to_vec()).collect();
    let span = Span::new(&vectors, len);
    family
        .iter()
        .all(|a| family.iter().all(|b| span.contains(a.mul(b).data())))
}

/// Regular-representation determinant of a barred quaternion.
pub fn det<T: Scalar>(a: &BarredQuaternion<T>) -> T {
    qr_to_r4(a).det().expect("square")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<ComplexValue<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix { rows, cols, data: vec![Complex::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> ComplexValue<T>) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        ComplexMatrix { rows, cols, data }
    }

    /// Builds from `(re, im)` integer pairs.
    pub fn from_int_pairs<const C: usize>(rows: &[[(i64, i64); C]]) -> Self {
        Self::from_fn(rows.len(), C, |r, c| {
            let (a, b) = rows[r][c];
            Complex::new(T::from_int(a), T::from_int(b))
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[ComplexValue<T>] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &ComplexValue<T>) -> Self {
        ComplexMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * s.clone()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(Complex::zero(), |acc: ComplexValue<T>, k| {
                acc + self.data[r * self.cols + k].clone() * rhs.data[k * rhs.cols + c].clone()
            })
        })
    }

    /// Real image of doubled size with `a + ib ↦ [[a, -b], [b, a]]`.
    pub fn to_real(&self) -> RealMatrix<T> {
        let mut m = RealMatrix::zeros(2 * self.rows, 2 * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let z = &self[(r, c)];
                m[(2 * r, 2 * c)] = z.re.clone();
                m[(2 * r, 2 * c + 1)] = -z.im.clone();
                m[(2 * r + 1, 2 * c)] = z.im.clone();
                m[(2 * r + 1, 2 * c + 1)] = z.re.clone();
            }
        }
        m
    }

    /// Real parameters `(re, im)` of every entry in row-major order.
    pub fn real_parameters(&self) -> Vec<T> {
        self.data.iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect()
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<String> = self.data.iter().map(render_complex).collect();
        json::matrix(self.rows, self.cols, &cells)
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = ComplexValue<T>;
    fn index(&self, (r, c): (usize, usize)) -> &ComplexValue<T> {
        &self.data[r * self.cols + c]
    }
}

/// `a + b e1` in the crate's text form.
pub fn render_complex<T: Scalar>(z: &ComplexValue<T>) -> String {
    text::render(&[z.re.clone(), z.im.clone()])
}

impl<T: Scalar> fmt::Display for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|c| render_complex(&self[(r, c)])).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `q = c1 + e2 c2 ↦ [[c1, -c2*], [c2, c1*]]`, so that `e1 ↦ iσ3`,
/// `e2 ↦ -iσ2` and `e3 ↦ -iσ1`.
pub fn q_to_c2<T: Scalar>(q: &Quaternion<T>) -> ComplexMatrix<T> {
    let c1 = Complex::new(q.w.clone(), q.x.clone());
    let c2 = Complex::new(q.y.clone(), -q.z.clone());
    ComplexMatrix { rows: 2, cols: 2, data: vec![c1.clone(), -c2.conj(), c2, c1.conj()] }
}

/// Complex linear `q0 + q1|e1 ↦ C(q0) + i C(q1)`.
pub fn qc_to_c2<T: Scalar>(a: &BarredQuaternion<T>) -> Result<ComplexMatrix<T>> {
    if !a.is_complex_linear() {
        return Err(Error::NotComplexLinear("q2 and q3 must vanish".into()));
    }
    let i = Complex::new(T::zero(), T::one());
    Ok(q_to_c2(&a.q[0]).add(&q_to_c2(&a.q[1]).scale(&i)))
}

/// Complex 4×4 matrix of a complex linear octonionic operator, read off its
/// action on `1, e2, e4, e6`.
pub fn r8_to_c4<T: Scalar>(m: &RealMatrix<T>) -> Result<ComplexMatrix<T>> {
    if m.rows() != 8 || m.cols() != 8 {
        return Err(Error::DimensionMismatch("expected an 8x8 matrix".into()));
    }
    if !m.commutator(&octonion_right_unit(1)).is_zero() {
        return Err(Error::NotComplexLinear("operator does not commute with 1|e1".into()));
    }
    let columns: Vec<[ComplexValue<T>; 4]> = [0, 2, 4, 6]
        .iter()
        .map(|&k| {
            let image = Octonion::new(std::array::from_fn(|i| m[(i, k)].clone()));
            OctonionicState::decompose(&image).c
        })
        .collect();
    Ok(ComplexMatrix::from_fn(4, 4, |r, c| columns[c][r].clone()))
}

pub fn oc_to_c4<T: Scalar>(a: &LeftBarredOctonion<T>) -> Result<ComplexMatrix<T>> {
    r8_to_c4(&or_to_r8(a))
}

pub fn real_matrix_json<T: Scalar>(m: &RealMatrix<T>) -> Value {
    json::matrix(m.rows(), m.cols(), m.data())
}

pub fn real_matrix_from_json<T: Scalar>(v: &Value) -> Result<RealMatrix<T>> {
    let dim = |key: &str| {
        json::field(v, key)?
            .as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| Error::Parse(format!("{key} must be an integer")))
    };
    let (rows, cols) = (dim("rows")?, dim("cols")?);
    let body = json::field(v, "data")?.as_array().ok_or_else(|| Error::Parse("data must be an array".into()))?;
    if body.len() != rows {
        return Err(Error::Parse("row count mismatch".into()));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for row in body {
        data.extend(json::parse_scalars::<T>(row, cols)?);
    }
    RealMatrix::new(rows, cols, data)
}

pub fn real_matrix_csv<T: Scalar>(m: &RealMatrix<T>) -> String {
    json::csv(m.cols(), m.data())
}
