//! Dense linear algebra on the truncated two-mode number basis.
//!
//! Joint basis states `|n_a, n_b>` are stored at index `n_a * d_b + n_b`
//! (row-major over the pair). Every module in the crate shares this
//! convention.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Numerical tolerances shared by the crate.
pub mod tol {
    pub const HERM: f64 = 1e-10;
    pub const TRACE: f64 = 1e-10;
    pub const NORM: f64 = 1e-10;
    pub const EIG: f64 = 1e-10;
    pub const PSD: f64 = 1e-10;
    /// Default bound on the discarded squared norm when truncating a state.
    pub const TRUNC: f64 = 1e-8;

    /// Slack applied before declaring `lhs < rhs` a violation, so that states
    /// saturating a bound (vacuum, coherent states) are not flagged.
    pub fn margin(lhs: f64, rhs: f64) -> f64 {
        PSD * lhs.abs().max(rhs.abs()).max(1.0)
    }
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Number of levels kept per mode. Mode `a` keeps `0..d_a`, mode `b` keeps `0..d_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cutoff {
    d_a: usize,
    d_b: usize,
}

impl Cutoff {
    pub fn new(d_a: usize, d_b: usize) -> Result<Self> {
        if d_a < 2 || d_b < 2 {
            return Err(Error::InvalidDimension(format!(
                "cutoff {d_a}x{d_b}: each mode needs at least two levels"
            )));
        }
        Ok(Cutoff { d_a, d_b })
    }

    pub fn d_a(&self) -> usize {
        self.d_a
    }

    pub fn d_b(&self) -> usize {
        self.d_b
    }

    /// Dimension of the joint space.
    pub fn dim(&self) -> usize {
        self.d_a * self.d_b
    }

    pub fn index(&self, n_a: usize, n_b: usize) -> usize {
        debug_assert!(n_a < self.d_a && n_b < self.d_b);
        n_a * self.d_b + n_b
    }

    /// Inverse of [`Cutoff::index`].
    pub fn levels(&self, k: usize) -> (usize, usize) {
        (k / self.d_b, k % self.d_b)
    }
}

impl std::fmt::Display for Cutoff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}", self.d_a, self.d_b)
    }
}

/// Anything that is a square matrix on a joint truncated space.
pub trait OperatorMatrix {
    fn cutoff(&self) -> Cutoff;
    fn matrix(&self) -> &CMatrix;
}

/// A general operator on the joint space. Partial transposes of density
/// operators live here because they need not be positive.
#[derive(Debug, Clone, PartialEq)]
pub struct JointOperator {
    cutoff: Cutoff,
    matrix: CMatrix,
}

impl JointOperator {
    pub fn new(cutoff: Cutoff, matrix: CMatrix) -> Result<Self> {
        check_square(&cutoff, &matrix)?;
        Ok(JointOperator { cutoff, matrix })
    }

    pub fn identity(cutoff: Cutoff) -> Self {
        let n = cutoff.dim();
        JointOperator {
            cutoff,
            matrix: CMatrix::identity(n, n),
        }
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    /// Largest entrywise deviation from Hermiticity.
    pub fn hermitian_deviation(&self) -> f64 {
        hermitian_deviation(&self.matrix)
    }
}

impl OperatorMatrix for JointOperator {
    fn cutoff(&self) -> Cutoff {
        self.cutoff
    }
    fn matrix(&self) -> &CMatrix {
        &self.matrix
    }
}

/// Hermitian, unit-trace, positive semidefinite matrix on the joint space.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    cutoff: Cutoff,
    matrix: CMatrix,
}

impl DensityOperator {
    /// Validates Hermiticity, unit trace and positivity (to `tol::PSD`).
    pub fn new(cutoff: Cutoff, matrix: CMatrix) -> Result<Self> {
        check_square(&cutoff, &matrix)?;
        let deviation = hermitian_deviation(&matrix);
        if deviation > tol::HERM {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace();
        if (trace - ONE).norm() > tol::TRACE {
            return Err(Error::NotDensity(format!(
                "trace is {} + {}i, expected 1",
                trace.re, trace.im
            )));
        }
        let min_eig = symmetric_spectrum(&matrix)[0];
        if min_eig.is_nan() || min_eig < -tol::PSD {
            return Err(Error::NotDensity(format!(
                "negative eigenvalue {min_eig:.3e}"
            )));
        }
        Ok(DensityOperator { cutoff, matrix })
    }

    /// Mixture `sum_k w_k |psi_k><psi_k|`; weights must be nonnegative and sum to one.
    pub fn mixture(components: &[(f64, &PureState)]) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::Shape("empty mixture".into()))?;
        let cutoff = first.1.cutoff();
        let n = cutoff.dim();
        let mut matrix = CMatrix::zeros(n, n);
        for (w, psi) in components {
            if psi.cutoff() != cutoff {
                return Err(Error::Shape("mixture components use different cutoffs".into()));
            }
            if *w < 0.0 {
                return Err(Error::Domain(format!("negative mixture weight {w}")));
            }
            let amps = psi.amplitudes();
            matrix += amps * amps.adjoint() * Complex64::from(*w);
        }
        DensityOperator::new(cutoff, matrix)
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }
}

impl OperatorMatrix for DensityOperator {
    fn cutoff(&self) -> Cutoff {
        self.cutoff
    }
    fn matrix(&self) -> &CMatrix {
        &self.matrix
    }
}

/// Normalized amplitude vector over the joint basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    cutoff: Cutoff,
    amplitudes: CVector,
}

impl PureState {
    pub fn new(cutoff: Cutoff, amplitudes: CVector) -> Result<Self> {
        if amplitudes.len() != cutoff.dim() {
            return Err(Error::Shape(format!(
                "{} amplitudes for cutoff {cutoff}",
                amplitudes.len()
            )));
        }
        let norm_sq = amplitudes.norm_squared();
        if (norm_sq - 1.0).abs() > tol::NORM {
            return Err(Error::Normalization { norm_sq });
        }
        Ok(PureState { cutoff, amplitudes })
    }

    /// The product basis state `|n_a, n_b>`.
    pub fn basis(cutoff: Cutoff, n_a: usize, n_b: usize) -> Result<Self> {
        if n_a >= cutoff.d_a() || n_b >= cutoff.d_b() {
            return Err(Error::Shape(format!(
                "basis state |{n_a},{n_b}> outside cutoff {cutoff}"
            )));
        }
        let mut amplitudes = CVector::zeros(cutoff.dim());
        amplitudes[cutoff.index(n_a, n_b)] = ONE;
        Ok(PureState { cutoff, amplitudes })
    }

    pub fn cutoff(&self) -> Cutoff {
        self.cutoff
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn amplitude(&self, n_a: usize, n_b: usize) -> Complex64 {
        self.amplitudes[self.cutoff.index(n_a, n_b)]
    }
}

fn check_square(cutoff: &Cutoff, matrix: &CMatrix) -> Result<()> {
    let n = cutoff.dim();
    if matrix.nrows() != n || matrix.ncols() != n {
        return Err(Error::Shape(format!(
            "matrix is {}x{}, cutoff {cutoff} needs {n}x{n}",
            matrix.nrows(),
            matrix.ncols()
        )));
    }
    Ok(())
}

fn hermitian_deviation(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Eigenvalues of the Hermitian part of `m`, ascending.
///
/// Works on the real symmetric matrix directly when `m` is real, otherwise on
/// the embedding `[[A, -B], [B, A]]` of `A + iB`, whose spectrum is that of
/// `A + iB` with every eigenvalue doubled.
fn symmetric_spectrum(m: &CMatrix) -> Vec<f64> {
    let n = m.nrows();
    let herm = (m + m.adjoint()) * Complex64::from(0.5);
    let re = herm.map(|z| z.re);
    if herm.iter().all(|z| z.im == 0.0) {
        return real_symmetric_spectrum(&re);
    }
    let im = herm.map(|z| z.im);
    let mut big = DMatrix::<f64>::zeros(2 * n, 2 * n);
    big.view_mut((0, 0), (n, n)).copy_from(&re);
    big.view_mut((n, n), (n, n)).copy_from(&re);
    big.view_mut((0, n), (n, n)).copy_from(&(-&im));
    big.view_mut((n, 0), (n, n)).copy_from(&im);
    real_symmetric_spectrum(&big).into_iter().step_by(2).collect()
}

/// Index sets of the connected blocks of a symmetric sparsity pattern.
fn blocks(m: &DMatrix<f64>) -> Vec<Vec<usize>> {
    let n = m.nrows();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for j in 0..n {
        for i in (j + 1)..n {
            if m[(i, j)] != 0.0 {
                let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = root(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Ascending spectrum of a real symmetric matrix, block by block.
///
/// nalgebra's solver can return NaN when exact zeros decouple part of the
/// matrix; blocks where it does are redone with cyclic Jacobi rotations.
fn real_symmetric_spectrum(m: &DMatrix<f64>) -> Vec<f64> {
    let mut eigs = Vec::with_capacity(m.nrows());
    for idx in blocks(m) {
        if idx.len() == 1 {
            eigs.push(m[(idx[0], idx[0])]);
            continue;
        }
        let sub = m.select_rows(&idx).select_columns(&idx);
        let fast = sub.clone().symmetric_eigenvalues();
        if fast.iter().all(|x| x.is_finite()) {
            eigs.extend(fast.iter().copied());
        } else {
            eigs.extend(jacobi_eigenvalues(sub));
        }
    }
    eigs.sort_by(f64::total_cmp);
    eigs
}

fn jacobi_eigenvalues(mut a: DMatrix<f64>) -> Vec<f64> {
    let n = a.nrows();
    let scale = a.norm().max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum();
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[(i, i)]).collect()
}

/// Single-mode annihilation operator, `a|n> = sqrt(n)|n-1>`.
pub fn lowering_matrix(d: usize) -> Result<CMatrix> {
    if d == 0 {
        return Err(Error::InvalidDimension("lowering matrix of dimension 0".into()));
    }
    let mut m = CMatrix::zeros(d, d);
    for n in 1..d {
        m[(n - 1, n)] = Complex64::from((n as f64).sqrt());
    }
    Ok(m)
}

/// Position quadrature `(a + a^dag)/sqrt(2)` built from truncated ladder matrices.
pub fn position_matrix(d: usize) -> Result<CMatrix> {
    let a = lowering_matrix(d)?;
    Ok((&a + a.adjoint()) * Complex64::from(std::f64::consts::FRAC_1_SQRT_2))
}

/// Momentum quadrature `(a - a^dag)/(i sqrt(2))` built from truncated ladder matrices.
pub fn momentum_matrix(d: usize) -> Result<CMatrix> {
    let a = lowering_matrix(d)?;
    Ok((&a - a.adjoint()) * Complex64::new(0.0, -std::f64::consts::FRAC_1_SQRT_2))
}

/// Kronecker product `op_a ⊗ op_b` in the joint index convention.
pub fn embed(op_a: &CMatrix, op_b: &CMatrix) -> Result<JointOperator> {
    if !op_a.is_square() || !op_b.is_square() {
        return Err(Error::Shape(format!(
            "embed needs square factors, got {}x{} and {}x{}",
            op_a.nrows(),
            op_a.ncols(),
            op_b.nrows(),
            op_b.ncols()
        )));
    }
    let cutoff = Cutoff::new(op_a.nrows(), op_b.nrows())?;
    Ok(JointOperator {
        cutoff,
        matrix: op_a.kronecker(op_b),
    })
}

/// Transpose on mode `b` only:
/// `<n_a, n_b| X^PT |n_a', n_b'> = <n_a, n_b'| X |n_a', n_b>`.
pub fn partial_transpose_b<O: OperatorMatrix>(op: &O) -> JointOperator {
    let cutoff = op.cutoff();
    let m = op.matrix();
    let (d_a, d_b) = (cutoff.d_a(), cutoff.d_b());
    let mut out = CMatrix::zeros(cutoff.dim(), cutoff.dim());
    for na in 0..d_a {
        for nb in 0..d_b {
            for ma in 0..d_a {
                for mb in 0..d_b {
                    out[(na * d_b + nb, ma * d_b + mb)] = m[(na * d_b + mb, ma * d_b + nb)];
                }
            }
        }
    }
    JointOperator {
        cutoff,
        matrix: out,
    }
}

/// Full real spectrum of a Hermitian operator in ascending order.
pub fn hermitian_eigenvalues<O: OperatorMatrix>(h: &O) -> Result<Vec<f64>> {
    let m = h.matrix();
    let deviation = hermitian_deviation(m);
    let scale = m.norm().max(1.0);
    if deviation > tol::HERM * scale {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(symmetric_spectrum(m))
}

/// `trace(rho O)`.
pub fn expectation<R: OperatorMatrix, O: OperatorMatrix>(rho: &R, op: &O) -> Result<Complex64> {
    if rho.cutoff() != op.cutoff() {
        return Err(Error::Shape(format!(
            "state cutoff {} vs operator cutoff {}",
            rho.cutoff(),
            op.cutoff()
        )));
    }
    let (r, o) = (rho.matrix(), op.matrix());
    let n = r.nrows();
    let mut acc = ZERO;
    for i in 0..n {
        for j in 0..n {
            acc += r[(i, j)] * o[(j, i)];
        }
    }
    Ok(acc)
}
