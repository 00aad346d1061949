//! Generator bases of the quaternionic unitary, orthogonal and symplectic
//! groups, derived as exact kernels of their defining linear constraints.
//!
//! Real parameters are ordered by matrix entry (row-major), then barred
//! slot, then quaternion component. Carrier `q` uses slot 0 only, `Q_c`
//! slots 0..2 and `Q_r` all four.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::barred_quaternion::{BarredQuaternion, ComplexValue};
use crate::error::{Error, Result};
use crate::linalg::{rank_of, RealMatrix, Span};
use crate::matrix_bridge::qr_to_r4;
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;

/// `n × n` matrix of barred quaternions acting on columns of quaternions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorMatrix<T> {
    n: usize,
    entries: Vec<BarredQuaternion<T>>,
}

impl<T: Scalar> OperatorMatrix<T> {
    pub fn zero(n: usize) -> Self {
        OperatorMatrix { n, entries: vec![BarredQuaternion::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(n, &BarredQuaternion::identity())
    }

    /// `d` on every diagonal entry.
    pub fn diagonal(n: usize, d: &BarredQuaternion<T>) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    pub fn from_entries(n: usize, entries: Vec<BarredQuaternion<T>>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} entries for a {n}x{n} matrix", entries.len())));
        }
        Ok(OperatorMatrix { n, entries })
    }

    /// Quaternionic matrix acting by left multiplication.
    pub fn from_quaternions(n: usize, entries: Vec<Quaternion<T>>) -> Result<Self> {
        Self::from_entries(n, entries.into_iter().map(BarredQuaternion::left).collect())
    }

    /// The 1×1 matrix holding `a`.
    pub fn single(a: BarredQuaternion<T>) -> Self {
        OperatorMatrix { n: 1, entries: vec![a] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, r: usize, s: usize) -> &BarredQuaternion<T> {
        &self.entries[r * self.n + s]
    }

    pub fn entry_mut(&mut self, r: usize, s: usize) -> &mut BarredQuaternion<T> {
        &mut self.entries[r * self.n + s]
    }

    pub fn entries(&self) -> &[BarredQuaternion<T>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BarredQuaternion::is_zero)
    }

    fn map(&self, f: impl Fn(&BarredQuaternion<T>) -> BarredQuaternion<T>) -> Self {
        OperatorMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    fn swapped(&self, f: impl Fn(&BarredQuaternion<T>) -> BarredQuaternion<T>) -> Self {
        let n = self.n;
        OperatorMatrix { n, entries: (0..n * n).map(|k| f(self.entry(k % n, k / n))).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|a| a.scale(s))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        OperatorMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-T::one()))
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.n, rhs.n, "operator matrix dimension mismatch");
    }

    /// `(MN)_rs = Σ_k M_rk ∘ N_ks`.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let n = self.n;
        let mut out = Self::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for s in 0..n {
                    let b = rhs.entry(k, s);
                    if !b.is_zero() {
                        let e = out.entry_mut(r, s);
                        *e = e.clone() + a.compose(b);
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// `(M†)_rs = (M_sr)†`.
    pub fn dagger(&self) -> Self {
        self.swapped(BarredQuaternion::dagger)
    }

    /// `(Mᵗ)_rs = (M_sr)ᵗ`.
    pub fn transpose(&self) -> Self {
        self.swapped(BarredQuaternion::transpose)
    }

    /// Swaps entries without transposing them; not an anti-automorphism.
    pub fn naive_transpose(&self) -> Self {
        self.swapped(Clone::clone)
    }

    /// `-e2 M† e2`, which equals `Mᵗ` for quaternionic matrices.
    pub fn transpose_via_dagger(&self) -> Self {
        let e2 = Self::diagonal(self.n, &BarredQuaternion::units(2, 0));
        e2.mul(&self.dagger()).mul(&e2).scale(&-T::one())
    }

    /// `Σ_r Tr M_rr`; requires complex linear diagonal entries.
    pub fn complex_trace(&self) -> Result<ComplexValue<T>> {
        let mut acc = ComplexValue::new(T::zero(), T::zero());
        for i in 0..self.n {
            acc = acc + self.entry(i, i).complex_trace()?;
        }
        Ok(acc)
    }

    pub fn real_trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.entry(i, i).real_trace())
    }

    /// `(Mψ)_r = Σ_s M_rs(ψ_s)`.
    pub fn apply(&self, psi: &[Quaternion<T>]) -> Vec<Quaternion<T>> {
        assert_eq!(psi.len(), self.n, "state length mismatch");
        (0..self.n)
            .map(|r| (0..self.n).fold(Quaternion::zero(), |acc, s| acc + self.entry(r, s).apply(&psi[s])))
            .collect()
    }

    /// Real image of size `4n`, block `(r, s)` being `qr_to_r4(M_rs)`.
    pub fn to_real(&self) -> RealMatrix<T> {
        let n = self.n;
        let mut m = RealMatrix::zeros(4 * n, 4 * n);
        for r in 0..n {
            for s in 0..n {
                m.set_block(4 * r, 4 * s, &qr_to_r4(self.entry(r, s)));
            }
        }
        m
    }

    /// Regular-representation determinant.
    pub fn det(&self) -> T {
        self.to_real().det().expect("square")
    }

    /// All `16 n²` real parameters.
    pub fn full_params(&self) -> Vec<T> {
        self.entries.iter().flat_map(|a| a.q.iter().flat_map(|q| q.coeffs())).collect()
    }

    /// Parameters restricted to the carrier's slots, or an error when other
    /// slots are set.
    pub fn params(&self, carrier: Carrier) -> Result<Vec<T>> {
        let slots = carrier.slots();
        let mut out = Vec::with_capacity(self.n * self.n * 4 * slots);
        for a in &self.entries {
            if a.q[slots..].iter().any(|q| !q.is_zero()) {
                return Err(Error::Unsupported(format!("operator outside carrier {carrier}")));
            }
            out.extend(a.q[..slots].iter().flat_map(|q| q.coeffs()));
        }
        Ok(out)
    }

    pub fn from_params(n: usize, carrier: Carrier, params: &[T]) -> Result<Self> {
        let slots = carrier.slots();
        if params.len() != carrier.params_per_entry() * n * n {
            return Err(Error::DimensionMismatch(format!("{} parameters for {carrier} with n={n}", params.len())));
        }
        let entries = params
            .chunks(4 * slots)
            .map(|chunk| {
                let mut a = BarredQuaternion::zero();
                for (k, c) in chunk.chunks(4).enumerate() {
                    a.q[k] = Quaternion::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone());
                }
                a
            })
            .collect();
        Ok(OperatorMatrix { n, entries })
    }
}

impl<T: Scalar> fmt::Display for OperatorMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return write!(f, "{}", self.entries[0]);
        }
        let rows: Vec<String> = (0..self.n)
            .map(|r| (0..self.n).map(|s| self.entry(r, s).to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    U,
    SU,
    O,
    OTilde,
    Sp,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::U => "U",
            Family::SU => "SU",
            Family::O => "O",
            Family::OTilde => "Õ",
            Family::Sp => "Sp",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "u" => Family::U,
            "su" => Family::SU,
            "o" => Family::O,
            "otilde" | "o~" | "õ" | "ot" => Family::OTilde,
            "sp" => Family::Sp,
            _ => return Err(Error::InvalidSelector(format!("group family {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Carrier {
    Q,
    Qc,
    Qr,
}

impl Carrier {
    pub fn slots(self) -> usize {
        match self {
            Carrier::Q => 1,
            Carrier::Qc => 2,
            Carrier::Qr => 4,
        }
    }

    pub fn params_per_entry(self) -> usize {
        4 * self.slots()
    }

    /// Projection under which the carrier's metrics are invariant.
    pub fn projection(self) -> Projection {
        match self {
            Carrier::Q => Projection::None,
            Carrier::Qc => Projection::Complex,
            Carrier::Qr => Projection::Real,
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Carrier::Q => "q",
            Carrier::Qc => "Qc",
            Carrier::Qr => "Qr",
        })
    }
}

impl FromStr for Carrier {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('_', "").as_str() {
            "q" => Carrier::Q,
            "qc" => Carrier::Qc,
            "qr" => Carrier::Qr,
            _ => return Err(Error::InvalidSelector(format!("carrier {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    pub carrier: Carrier,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(family: Family, carrier: Carrier, n: usize) -> Self {
        GroupSpec { family, carrier, n }
    }

    /// The spec actually solved. `SU` over `q` or `Q_r` has no complex trace
    /// and coincides with `U`.
    pub fn resolved(self) -> (GroupSpec, Option<String>) {
        if self.family == Family::SU && self.carrier != Carrier::Qc {
            let u = GroupSpec { family: Family::U, ..self };
            return (u, Some(format!("{self} coincides with {u}")));
        }
        (self, None)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.family, self.n, self.carrier)
    }
}

/// Which trace must vanish for `SU(n, Q_c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceCondition {
    /// `Tr A = Re q0 + e1 Re q1 = 0`, two real conditions.
    Complex,
    /// `Re q0 = 0` only.
    RealPart,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MetricKind {
    Dagger,
    Transpose,
    GTwisted,
    Symplectic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Projection {
    None,
    Complex,
    Real,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MetricSpec {
    pub kind: MetricKind,
    pub projection: Projection,
}

impl MetricSpec {
    pub fn new(kind: MetricKind, projection: Projection) -> Self {
        MetricSpec { kind, projection }
    }

    /// The metric whose invariance defines `family`.
    pub fn of(family: Family, projection: Projection) -> Self {
        let kind = match family {
            Family::U | Family::SU => MetricKind::Dagger,
            Family::O => MetricKind::Transpose,
            Family::OTilde => MetricKind::GTwisted,
            Family::Sp => MetricKind::Symplectic,
        };
        MetricSpec { kind, projection }
    }
}

/// `J` for quaternionic symplectic groups. Even `n = 2k` gives
/// `[[0, 1], [-1, 0]]` in `k × k` blocks; odd `n = 2k + 1` adds a middle row
/// and column that are zero except for `e2` in the centre.
pub fn symplectic_j<T: Scalar>(n: usize) -> OperatorMatrix<T> {
    let k = n / 2;
    let mut j = OperatorMatrix::zero(n);
    let off = n - k;
    for i in 0..k {
        *j.entry_mut(i, off + i) = BarredQuaternion::identity();
        *j.entry_mut(off + i, i) = -BarredQuaternion::identity();
    }
    if n % 2 == 1 {
        *j.entry_mut(k, k) = BarredQuaternion::units(2, 0);
    }
    j
}

/// The same `J` with the middle row filled by ones to the right of the
/// centre, exactly as printed for odd `n`.
pub fn symplectic_j_as_printed<T: Scalar>(n: usize) -> OperatorMatrix<T> {
    let mut j = symplectic_j(n);
    if n % 2 == 1 {
        let k = n / 2;
        for s in k + 1..n {
            *j.entry_mut(k, s) = BarredQuaternion::identity();
        }
    }
    j
}

/// `g = -(1 + Σ e_i|e_i)/2` on every diagonal entry.
pub fn g_metric<T: Scalar>(n: usize) -> OperatorMatrix<T> {
    OperatorMatrix::diagonal(n, &BarredQuaternion::g_operator())
}

/// Residual of the defining constraint; zero exactly on the Lie algebra.
pub fn defining_constraint<T: Scalar>(spec: GroupSpec, a: &OperatorMatrix<T>) -> Vec<T> {
    constraint_with(spec, a, TraceCondition::Complex, &symplectic_j(spec.n))
}

fn constraint_with<T: Scalar>(spec: GroupSpec, a: &OperatorMatrix<T>, trace: TraceCondition, j: &OperatorMatrix<T>) -> Vec<T> {
    let (spec, _) = spec.resolved();
    let residual = match spec.family {
        Family::U | Family::SU => a.add(&a.dagger()),
        Family::O => a.add(&a.transpose()),
        Family::OTilde => {
            let g = g_metric(spec.n);
            g.mul(a).add(&a.dagger().mul(&g))
        }
        Family::Sp => j.mul(a).add(&a.transpose().mul(j)),
    };
    let mut out = residual.full_params();
    if spec.family == Family::SU {
        let tr = (0..spec.n).fold(ComplexValue::new(T::zero(), T::zero()), |acc, i| {
            let e = a.entry(i, i);
            acc + ComplexValue::new(e.q[0].re(), e.q[1].re())
        });
        out.push(tr.re);
        if trace == TraceCondition::Complex {
            out.push(tr.im);
        }
    }
    out
}

fn supported(spec: GroupSpec) -> Result<()> {
    if spec.n == 0 {
        return Err(Error::Unsupported("n must be at least 1".into()));
    }
    if spec.family == Family::OTilde && spec.carrier != Carrier::Qr {
        return Err(Error::Unsupported(format!("{spec} is only defined over Qr")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorBasis<T> {
    pub spec: GroupSpec,
    pub basis: Vec<OperatorMatrix<T>>,
    pub notice: Option<String>,
}

impl<T: Scalar> GeneratorBasis<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn vectors(&self) -> Vec<Vec<T>> {
        self.basis.iter().map(OperatorMatrix::full_params).collect()
    }

    /// Exact span equality with `others` in the full parameter space.
    pub fn spans_same_as(&self, others: &[OperatorMatrix<T>]) -> bool {
        let mine = self.vectors();
        let theirs: Vec<Vec<T>> = others.iter().map(OperatorMatrix::full_params).collect();
        let joint: Vec<Vec<T>> = mine.iter().chain(&theirs).cloned().collect();
        let r = rank_of(&mine);
        r == rank_of(&theirs) && r == rank_of(&joint)
    }

    pub fn to_json(&self, closure: &Result<(), ClosureFailure>, signature: Option<Signature>) -> Value {
        json!({
            "spec": self.spec.to_string(),
            "dim": self.dim(),
            "generators": self.basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "closure": match closure { Ok(()) => "ok".to_string(), Err(e) => e.to_string() },
            "metric_signature": signature.map(|s| json!([s.positive, s.negative])),
            "notice": self.notice,
        })
    }
}

fn kernel_basis<T: Scalar>(
    spec: GroupSpec,
    f: impl Fn(&OperatorMatrix<T>) -> Vec<T>,
) -> Result<Vec<OperatorMatrix<T>>> {
    let n = spec.n;
    let p = spec.carrier.params_per_entry() * n * n;
    let mut unit = vec![T::zero(); p];
    let mut columns = Vec::with_capacity(p);
    for k in 0..p {
        unit[k] = T::one();
        columns.push(f(&OperatorMatrix::from_params(n, spec.carrier, &unit)?));
        unit[k] = T::zero();
    }
    let rows = columns.first().map_or(0, Vec::len);
    let mut c = RealMatrix::zeros(rows, p);
    for (j, col) in columns.into_iter().enumerate() {
        for (i, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                c[(i, j)] = v;
            }
        }
    }
    c.kernel()
        .into_iter()
        .map(|x| OperatorMatrix::from_params(n, spec.carrier, &x))
        .collect()
}

/// Exact kernel basis of the defining constraint, in reduced echelon order.
pub fn solve_generators<T: Scalar>(spec: GroupSpec) -> Result<GeneratorBasis<T>> {
    solve_with(spec, TraceCondition::Complex)
}

pub fn solve_with<T: Scalar>(spec: GroupSpec, trace: TraceCondition) -> Result<GeneratorBasis<T>> {
    supported(spec)?;
    let (resolved, notice) = spec.resolved();
    let j = symplectic_j(spec.n);
    let basis = kernel_basis(resolved, |a| constraint_with(resolved, a, trace, &j))?;
    Ok(GeneratorBasis { spec, basis, notice })
}

/// Dimension of the symplectic algebra built from the odd-`n` `J` exactly
/// as printed.
pub fn printed_symplectic_dim<T: Scalar>(carrier: Carrier, n: usize) -> Result<usize> {
    let spec = GroupSpec::new(Family::Sp, carrier, n);
    let j = symplectic_j_as_printed::<T>(n);
    Ok(kernel_basis(spec, |a| constraint_with(spec, a, TraceCondition::Complex, &j))?.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub n: usize,
    pub complex_trace_dim: usize,
    pub real_part_dim: usize,
    pub expected: usize,
}

impl TraceReport {
    pub fn matching(&self) -> Option<TraceCondition> {
        if self.complex_trace_dim == self.expected {
            Some(TraceCondition::Complex)
        } else if self.real_part_dim == self.expected {
            Some(TraceCondition::RealPart)
        } else {
            None
        }
    }
}

/// Kernel dimensions of `SU(n, Q_c)` under both readings of `Tr A = 0`.
pub fn su_trace_report<T: Scalar>(n: usize) -> Result<TraceReport> {
    let spec = GroupSpec::new(Family::SU, Carrier::Qc, n);
    Ok(TraceReport {
        n,
        complex_trace_dim: solve_with::<T>(spec, TraceCondition::Complex)?.dim(),
        real_part_dim: solve_with::<T>(spec, TraceCondition::RealPart)?.dim(),
        expected: dimension_formula(spec),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureFailure {
    Constraint { a: usize, b: usize },
    OutsideSpan { a: usize, b: usize },
}

impl fmt::Display for ClosureFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureFailure::Constraint { a, b } => write!(f, "[A{a}, A{b}] violates the defining constraint"),
            ClosureFailure::OutsideSpan { a, b } => write!(f, "[A{a}, A{b}] lies outside the span"),
        }
    }
}

/// Checks that every commutator of basis elements satisfies the constraint
/// and lies in the span.
pub fn verify_closure<T: Scalar>(basis: &GeneratorBasis<T>) -> Result<(), ClosureFailure> {
    let span = Span::new(&basis.vectors(), 16 * basis.spec.n * basis.spec.n);
    for (i, a) in basis.basis.iter().enumerate() {
        for (j, b) in basis.basis.iter().enumerate().skip(i + 1) {
            let c = a.commutator(b);
            if defining_constraint(basis.spec, &c).iter().any(|v| !v.is_zero()) {
                return Err(ClosureFailure::Constraint { a: i, b: j });
            }
            if !span.contains(&c.full_params()) {
                return Err(ClosureFailure::OutsideSpan { a: i, b: j });
            }
        }
    }
    Ok(())
}

fn project<T: Scalar>(q: Quaternion<T>, p: Projection) -> Quaternion<T> {
    match p {
        Projection::None => q,
        Projection::Complex => Quaternion::new(q.w, q.x, T::zero(), T::zero()),
        Projection::Real => Quaternion::real(q.w),
    }
}

/// Unprojected form `⟨ψ, φ⟩` of the metric on columns of quaternions.
pub fn metric_form<T: Scalar>(kind: MetricKind, psi: &[Quaternion<T>], phi: &[Quaternion<T>]) -> Quaternion<T> {
    let n = psi.len();
    let (left, right): (Vec<Quaternion<T>>, Vec<Quaternion<T>>) = match kind {
        MetricKind::Dagger => (psi.iter().map(Quaternion::conj).collect(), phi.to_vec()),
        MetricKind::Transpose => (psi.iter().map(Quaternion::transpose).collect(), phi.to_vec()),
        MetricKind::GTwisted => (psi.iter().map(Quaternion::conj).collect(), g_metric(n).apply(phi)),
        MetricKind::Symplectic => (psi.iter().map(Quaternion::transpose).collect(), symplectic_j(n).apply(phi)),
    };
    left.iter().zip(&right).fold(Quaternion::zero(), |acc, (a, b)| acc + a.mul(b))
}

/// The `4n` real basis columns: unit `e_c` in row `r`.
pub fn basis_states<T: Scalar>(n: usize) -> Vec<Vec<Quaternion<T>>> {
    (0..4 * n)
        .map(|k| {
            let mut v = vec![Quaternion::zero(); n];
            v[k / 4] = Quaternion::unit(k % 4);
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceFailure<T> {
    pub generator: usize,
    pub psi: Vec<Quaternion<T>>,
    pub phi: Vec<Quaternion<T>>,
}

/// Checks that the first-order variation `[⟨Aψ, φ⟩ + ⟨ψ, Aφ⟩]_p` vanishes
/// for every generator and every pair of basis states.
pub fn invariance_check<T: Scalar>(
    generators: &[OperatorMatrix<T>],
    metric: MetricSpec,
) -> Result<(), InvarianceFailure<T>> {
    let Some(first) = generators.first() else { return Ok(()) };
    let states = basis_states::<T>(first.n());
    for (g, a) in generators.iter().enumerate() {
        let images: Vec<Vec<Quaternion<T>>> = states.iter().map(|s| a.apply(s)).collect();
        for (i, psi) in states.iter().enumerate() {
            for (j, phi) in states.iter().enumerate() {
                let v = metric_form(metric.kind, &images[i], phi) + metric_form(metric.kind, psi, &images[j]);
                if !project(v, metric.projection).is_zero() {
                    return Err(InvarianceFailure { generator: g, psi: psi.clone(), phi: phi.clone() });
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    /// Dimension of the radical.
    pub zero: usize,
}

/// Signature of the real quadratic form `ψ ↦ [⟨ψ, ψ⟩]_r` on `H^n`.
pub fn metric_signature<T: Scalar>(metric: MetricSpec, n: usize) -> Result<Signature> {
    if metric.projection != Projection::Real {
        return Err(Error::Unsupported("signatures are computed for real projections only".into()));
    }
    let states = basis_states::<T>(n);
    let d = states.len();
    let mut gram = RealMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let a = metric_form(metric.kind, &states[i], &states[j]).re();
            let b = metric_form(metric.kind, &states[j], &states[i]).re();
            gram[(i, j)] = (a + b) * T::half();
        }
    }
    let (positive, negative, zero) = gram.inertia()?;
    Ok(Signature { positive, negative, zero })
}

/// Closed-form generator count.
pub fn dimension_formula(spec: GroupSpec) -> usize {
    let n = spec.n;
    let (spec, _) = spec.resolved();
    match (spec.family, spec.carrier) {
        (Family::U, Carrier::Q) | (Family::Sp, Carrier::Q) => n * (2 * n + 1),
        (Family::U, Carrier::Qc) => 4 * n * n,
        (Family::U, Carrier::Qr) | (Family::O, Carrier::Qr) | (Family::OTilde, _) => 2 * n * (4 * n - 1),
        (Family::SU, _) => 4 * n * n - 1,
        (Family::O, Carrier::Q) => n * (2 * n - 1),
        (Family::O, Carrier::Qc) => 2 * n * (2 * n - 1),
        (Family::Sp, Carrier::Qc) => 2 * n * (2 * n + 1),
        (Family::Sp, Carrier::Qr) => 2 * n * (4 * n + 1),
    }
}

/// One row of the dimensionality table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub spec: GroupSpec,
    /// Counterpart among the real or complex classical groups.
    pub counterpart: &'static str,
    pub formula: &'static str,
    /// Set for rows that coincide with another group.
    pub same_as: Option<GroupSpec>,
}

/// Rows in table order for a given `n`.
pub fn table_rows(n: usize) -> Vec<TableRow> {
    use Carrier::*;
    use Family::*;
    let s = |f, c| GroupSpec::new(f, c, n);
    let row = |f, c, counterpart, formula| TableRow { spec: s(f, c), counterpart, formula, same_as: None };
    let alias = |f, c, target: GroupSpec| TableRow { spec: s(f, c), counterpart: "", formula: "", same_as: Some(target) };
    vec![
        row(U, Q, "USp(2n,c)", "n(2n+1)"),
        row(U, Qc, "U(2n,c)", "4n^2"),
        row(U, Qr, "O(4n,r)", "2n(4n-1)"),
        alias(SU, Q, s(U, Q)),
        row(SU, Qc, "SU(2n,c)", "4n^2-1"),
        alias(SU, Qr, s(U, Qr)),
        row(O, Q, "SO*(2n,c)", "n(2n-1)"),
        row(O, Qc, "O(2n,c)", "2n(2n-1)"),
        row(O, Qr, "O(2n+,2n-,r)", "2n(4n-1)"),
        row(OTilde, Qr, "O(3n+,n-,r)", "2n(4n-1)"),
        row(Sp, Q, "USp(2n,c)", "n(2n+1)"),
        row(Sp, Qc, "Sp(2n,c)", "2n(2n+1)"),
        row(Sp, Qr, "Sp(4n,r)", "2n(4n+1)"),
    ]
}

/// The eleven families with their own count formula, in table order.
pub fn counted_families() -> Vec<(Family, Carrier)> {
    table_rows(1).into_iter().filter(|r| r.same_as.is_none()).map(|r| (r.spec.family, r.spec.carrier)).collect()
}

/// One-dimensional generator sets as listed in the group tables.
pub fn listed_generators(family: Family, carrier: Carrier) -> Option<Vec<&'static str>> {
    use Carrier::*;
    use Family::*;
    Some(match (family, carrier) {
        (U, Q) => vec!["e1", "e2", "e3"],
        (O, Q) => vec!["e2"],
        (U, Qc) => vec!["e1", "e2", "e3", "1|e1"],
        (SU, Qc) => vec!["e1", "e2", "e3"],
        (O, Qc) => vec!["e2", "e2|e1"],
        (Sp, Qc) => vec!["e1", "e2", "e3", "e1|e1", "e2|e1", "e3|e1"],
        (U, Qr) => vec!["e1", "e2", "e3", "1|e1", "1|e2", "1|e3"],
        (O, Qr) => vec!["e2", "e1|e2", "e3|e2", "1|e2", "e2|e1", "e2|e3"],
        (OTilde, Qr) => vec!["e1 - 1|e1", "e2 - 1|e2", "e3 - 1|e3", "e1|e2 - e2|e1", "e1|e3 - e3|e1", "e2|e3 - e3|e2"],
        (Sp, Qr) => vec!["e1", "e2", "e3", "1|e2", "e1|e1", "e2|e1", "e3|e1", "e1|e3", "e2|e3", "e3|e3"],
        _ => return None,
    })
}

pub fn parse_listed<T: Scalar>(items: &[&str]) -> Result<Vec<OperatorMatrix<T>>> {
    items.iter().map(|s| Ok(OperatorMatrix::single(s.parse()?))).collect()
}
