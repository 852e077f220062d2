//! Dense complex matrices and the numerical kernels everything else builds
//! on: Kronecker products, a cyclic Jacobi eigensolver for complex Hermitian
//! matrices, PSD square roots, partial trace/transpose over the first qubit,
//! trace norm and the Hilbert-Schmidt inner product.
//!
//! The basis convention is fixed globally as |00>, |01>, |10>, |11> with the
//! first label belonging to subsystem R; the `partial_*_r` kernels hardcode
//! that layout.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix { rows, cols, data: vec![Complex::new(T::zero(), T::zero()); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Self {
        let r = rows.len();
        assert!(r > 0, "matrix needs at least one row");
        let c = rows[0].len();
        assert!(c > 0 && rows.iter().all(|row| row.len() == c), "ragged rows");
        ComplexMatrix { rows: r, cols: c, data: rows.concat() }
    }

    /// 2x2 matrix from row-major (re, im) pairs; handy for operator tables.
    pub fn two_by_two(entries: [(f64, f64); 4]) -> Self {
        let data = entries.iter().map(|&(re, im)| T::complex(re, im)).collect();
        ComplexMatrix { rows: 2, cols: 2, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn conjugate(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, factor: T) -> Self {
        self.map(|z| z * factor)
    }

    pub fn scale_complex(&self, factor: Complex<T>) -> Self {
        self.map(|z| z * factor)
    }

    pub fn trace(&self) -> Complex<T> {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + self[(i, i)])
    }

    /// Max elementwise |a_ij - conj(a_ji)|; zero for an exactly Hermitian matrix.
    pub fn hermiticity_deviation(&self) -> T {
        assert!(self.is_square(), "hermiticity of a non-square matrix");
        let mut dev = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// Largest elementwise |a_ij - b_ij|; dimensions must match.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).norm()))
    }

    fn off_diagonal_norm(&self) -> T {
        let mut sum = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    sum = sum + self[(i, j)].norm_sqr();
                }
            }
        }
        sum.sqrt()
    }
}

impl<T: Scalar> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl<T: Scalar> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a - *b).collect(),
        }
    }
}

impl<T: Scalar> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Complex::new(T::zero(), T::zero());
                for k in 0..self.cols {
                    acc = acc + self[(i, k)] * rhs[(k, j)];
                }
                out[(i, j)] = acc;
            }
        }
        out
    }
}

/// Pauli X in the single-qubit basis {|0>, |1>}.
pub fn pauli_x<T: Scalar>() -> ComplexMatrix<T> {
    ComplexMatrix::two_by_two([(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)])
}

/// Pauli Y.
pub fn pauli_y<T: Scalar>() -> ComplexMatrix<T> {
    ComplexMatrix::two_by_two([(0.0, 0.0), (0.0, -1.0), (0.0, 1.0), (0.0, 0.0)])
}

/// Pauli Z.
pub fn pauli_z<T: Scalar>() -> ComplexMatrix<T> {
    ComplexMatrix::two_by_two([(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)])
}

/// Kronecker product; block (i, j) of the result is `a[i][j] * b`.
pub fn kron<T: Scalar>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let mut out = ComplexMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let factor = a[(i, j)];
            for k in 0..b.rows {
                for l in 0..b.cols {
                    out[(i * b.rows + k, j * b.cols + l)] = factor * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Eigendecomposition of a Hermitian matrix: eigenvalues sorted descending,
/// eigenvector k in column k of a unitary matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigenResult<T> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: ComplexMatrix<T>,
}

/// Cyclic Jacobi iteration specialized to small complex Hermitian matrices.
/// Deterministic: identical input always yields identical output.
pub fn hermitian_eig<T: Scalar>(a: &ComplexMatrix<T>) -> Result<HermitianEigenResult<T>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: "square matrix".into(),
            got: format!("{}x{}", a.rows, a.cols),
        });
    }
    let dev = a.hermiticity_deviation();
    if dev > T::VALIDATION_TOL {
        return Err(Error::NotHermitian { deviation: dev.to_f64().unwrap_or(f64::NAN) });
    }

    let n = a.rows;
    // iterate on the hermitized copy so the tolerated input asymmetry
    // cannot leak into the rotations
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * T::of(0.5);
            m[(i, j)] = if i == j { Complex::new(avg.re, T::zero()) } else { avg };
        }
    }
    let mut v = ComplexMatrix::<T>::identity(n);

    let mut converged = m.off_diagonal_norm() < T::JACOBI_TOL;
    for _ in 0..T::MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        converged = m.off_diagonal_norm() < T::JACOBI_TOL;
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: T::MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].re.partial_cmp(&m[(i, i)].re).expect("finite eigenvalues"));

    let eigenvalues = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (k, &src) in order.iter().enumerate() {
        for i in 0..n {
            eigenvectors[(i, k)] = v[(i, src)];
        }
    }
    Ok(HermitianEigenResult { eigenvalues, eigenvectors })
}

/// One Jacobi rotation annihilating the (p, q) entry. The 2x2 pivot block
/// [[a_pp, r w], [r conj(w), a_qq]] (r = |a_pq|, |w| = 1) is diagonalized by
/// Q = [[c, s], [-conj(w) s, conj(w) c]] and the update A <- Q† A Q, V <- V Q
/// is applied to the affected rows and columns only.
fn rotate<T: Scalar>(m: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == T::zero() {
        return;
    }
    let w = apq / r;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let tau = (aqq - app) / (T::of(2.0) * r);
    let t = if tau >= T::zero() {
        T::one() / (tau + (tau * tau + T::one()).sqrt())
    } else {
        T::one() / (tau - (tau * tau + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    let ws = w * s;
    let wc = w * c;
    let n = m.rows();

    // A <- A Q
    for i in 0..n {
        let aip = m[(i, p)];
        let aiq = m[(i, q)];
        m[(i, p)] = aip * c - aiq * ws.conj();
        m[(i, q)] = aip * s + aiq * wc.conj();
    }
    // A <- Q† A
    for j in 0..n {
        let apj = m[(p, j)];
        let aqj = m[(q, j)];
        m[(p, j)] = apj * c - aqj * ws;
        m[(q, j)] = apj * s + aqj * wc;
    }
    // pin what the rotation made exact
    m[(p, q)] = Complex::new(T::zero(), T::zero());
    m[(q, p)] = Complex::new(T::zero(), T::zero());
    m[(p, p)] = Complex::new(m[(p, p)].re, T::zero());
    m[(q, q)] = Complex::new(m[(q, q)].re, T::zero());

    // V <- V Q
    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * c - viq * ws.conj();
        v[(i, q)] = vip * s + viq * wc.conj();
    }
}

/// Hermitian PSD square root. Eigenvalues in `[-PSD_TOL, 0)` clamp to zero;
/// anything lower is a hard error, not a silent fix.
pub fn matrix_sqrt_psd<T: Scalar>(a: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let eig = hermitian_eig(a)?;
    let n = a.rows();
    let mut roots = Vec::with_capacity(n);
    for &lambda in &eig.eigenvalues {
        if lambda < -T::PSD_TOL {
            return Err(Error::NotPsd { eigenvalue: lambda.to_f64().unwrap_or(f64::NAN) });
        }
        roots.push(lambda.max(T::zero()).sqrt());
    }
    // V diag(sqrt(lambda)) V†
    let mut scaled = eig.eigenvectors.clone();
    for k in 0..n {
        for i in 0..n {
            scaled[(i, k)] = scaled[(i, k)] * roots[k];
        }
    }
    let s = &scaled * &eig.eigenvectors.adjoint();
    // symmetrize away the last rounding asymmetry
    Ok((&s + &s.adjoint()).scale(T::of(0.5)))
}

/// Trace over subsystem R of a two-qubit operator: sigma[j][l] =
/// rho[0j, 0l] + rho[1j, 1l].
pub fn partial_trace_r<T: Scalar>(rho: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    require_4x4(rho)?;
    let mut out = ComplexMatrix::zeros(2, 2);
    for j in 0..2 {
        for l in 0..2 {
            out[(j, l)] = rho[(j, l)] + rho[(2 + j, 2 + l)];
        }
    }
    Ok(out)
}

/// Partial transpose over subsystem R: <ij|rho^T_R|kl> = <kj|rho|il>.
/// A pure entry permutation, so applying it twice restores the input bitwise.
pub fn partial_transpose_r<T: Scalar>(rho: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    require_4x4(rho)?;
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..2 {
        for k in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    out[(2 * i + j, 2 * k + l)] = rho[(2 * k + j, 2 * i + l)];
                }
            }
        }
    }
    Ok(out)
}

/// Sum of the absolute values of the eigenvalues of a Hermitian matrix.
pub fn trace_norm_hermitian<T: Scalar>(a: &ComplexMatrix<T>) -> Result<T> {
    let eig = hermitian_eig(a)?;
    Ok(eig.eigenvalues.iter().fold(T::zero(), |acc, &l| acc + l.abs()))
}

/// Hilbert-Schmidt inner product Tr(a† b).
pub fn hs_inner<T: Scalar>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<Complex<T>> {
    if (a.rows, a.cols) != (b.rows, b.cols) {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{}", a.rows, a.cols),
            got: format!("{}x{}", b.rows, b.cols),
        });
    }
    let mut acc = Complex::new(T::zero(), T::zero());
    for (x, y) in a.data.iter().zip(&b.data) {
        acc = acc + x.conj() * *y;
    }
    Ok(acc)
}

fn require_4x4<T: Scalar>(m: &ComplexMatrix<T>) -> Result<()> {
    if (m.rows, m.cols) != (4, 4) {
        return Err(Error::DimensionMismatch {
            expected: "4x4".into(),
            got: format!("{}x{}", m.rows, m.cols),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = ComplexMatrix<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn diag(values: &[f64]) -> M {
        let n = values.len();
        let mut m = M::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = c(v, 0.0);
        }
        m
    }

    /// |Phi+><Phi+| built entry by entry: 1/2 in the four corners.
    fn bell_projector() -> M {
        let mut m = M::zeros(4, 4);
        for &(i, j) in &[(0, 0), (0, 3), (3, 0), (3, 3)] {
            m[(i, j)] = c(0.5, 0.0);
        }
        m
    }

    #[test]
    fn kron_identity_case() {
        let i2 = M::identity(2);
        assert_eq!(kron(&i2, &i2), M::identity(4));
    }

    #[test]
    fn kron_pauli_y_squared() {
        // hand-expanded blocks: rows (0,0,0,-1), (0,0,1,0), (0,1,0,0), (-1,0,0,0)
        let yy = kron(&pauli_y::<f64>(), &pauli_y::<f64>());
        let mut expected = M::zeros(4, 4);
        expected[(0, 3)] = c(-1.0, 0.0);
        expected[(1, 2)] = c(1.0, 0.0);
        expected[(2, 1)] = c(1.0, 0.0);
        expected[(3, 0)] = c(-1.0, 0.0);
        assert!(yy.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn kron_diagonal_case() {
        let a = diag(&[1.0, 2.0]);
        let b = diag(&[3.0, 4.0]);
        assert!(kron(&a, &b).max_abs_diff(&diag(&[3.0, 4.0, 6.0, 8.0])) < 1e-15);
    }

    #[test]
    fn eig_diagonal_input_sorted_descending() {
        let eig = hermitian_eig(&diag(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(eig.eigenvalues, vec![3.0, 2.0, 1.0]);
    }

    #[test]
    fn eig_pauli_y_spectrum() {
        let eig = hermitian_eig(&pauli_y::<f64>()).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn eig_rank_one_projector() {
        let eig = hermitian_eig(&bell_projector()).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-12);
        for &l in &eig.eigenvalues[1..] {
            assert!(l.abs() < 1e-12);
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let mut m = M::zeros(2, 2);
        m[(0, 1)] = c(1.0, 0.0);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn eig_satisfies_eigen_equation_and_unitarity() {
        let mut m = M::zeros(4, 4);
        let vals = [
            [0.7, 0.1, -0.3, 0.2],
            [0.1, -0.4, 0.5, 0.0],
            [-0.3, 0.5, 0.9, -0.6],
            [0.2, 0.0, -0.6, 0.25],
        ];
        let imag = [
            [0.0, 0.2, -0.1, 0.4],
            [-0.2, 0.0, 0.3, -0.5],
            [0.1, -0.3, 0.0, 0.2],
            [-0.4, 0.5, -0.2, 0.0],
        ];
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = c(vals[i][j], imag[i][j]);
            }
        }
        let eig = hermitian_eig(&m).unwrap();
        // A v_k = lambda_k v_k
        let av = &m * &eig.eigenvectors;
        for k in 0..4 {
            for i in 0..4 {
                let d = (av[(i, k)] - eig.eigenvectors[(i, k)] * eig.eigenvalues[k]).norm();
                assert!(d < 1e-10, "eigen equation violated by {d}");
            }
        }
        // V† V = I
        let vtv = &eig.eigenvectors.adjoint() * &eig.eigenvectors;
        assert!(vtv.max_abs_diff(&M::identity(4)) < 1e-10);
    }

    #[test]
    fn eig_is_deterministic() {
        let m = bell_projector();
        let a = hermitian_eig(&m).unwrap();
        let b = hermitian_eig(&m).unwrap();
        assert_eq!(a.eigenvalues, b.eigenvalues);
        assert_eq!(a.eigenvectors, b.eigenvectors);
    }

    #[test]
    fn sqrt_identity() {
        let s = matrix_sqrt_psd(&M::identity(4)).unwrap();
        assert!(s.max_abs_diff(&M::identity(4)) < 1e-12);
    }

    #[test]
    fn sqrt_diagonal() {
        let s = matrix_sqrt_psd(&diag(&[4.0, 1.0, 0.0, 0.0])).unwrap();
        assert!(s.max_abs_diff(&diag(&[2.0, 1.0, 0.0, 0.0])) < 1e-12);
    }

    #[test]
    fn sqrt_projector_is_itself() {
        let p = bell_projector();
        let s = matrix_sqrt_psd(&p).unwrap();
        assert!(s.max_abs_diff(&p) < 1e-10);
    }

    #[test]
    fn sqrt_rejects_negative_eigenvalue() {
        assert!(matches!(
            matrix_sqrt_psd(&diag(&[1.0, -0.2])),
            Err(Error::NotPsd { .. })
        ));
    }

    #[test]
    fn sqrt_clamps_rounding_noise() {
        let s = matrix_sqrt_psd(&diag(&[1.0, -5e-11])).unwrap();
        assert!((s[(1, 1)].re).abs() < 1e-12);
    }

    #[test]
    fn partial_trace_bell_is_maximally_mixed() {
        let t = partial_trace_r(&bell_projector()).unwrap();
        assert!(t.max_abs_diff(&diag(&[0.5, 0.5])) < 1e-15);
    }

    #[test]
    fn partial_trace_product_basis_state() {
        // |01><01| -> |1><1|
        let mut rho = M::zeros(4, 4);
        rho[(1, 1)] = c(1.0, 0.0);
        let t = partial_trace_r(&rho).unwrap();
        assert!(t.max_abs_diff(&diag(&[0.0, 1.0])) < 1e-15);
    }

    #[test]
    fn partial_trace_factors_products() {
        let a = M::from_rows(&[vec![c(0.3, 0.0), c(0.1, 0.2)], vec![c(0.1, -0.2), c(0.7, 0.0)]]);
        let b = M::from_rows(&[vec![c(0.6, 0.0), c(-0.2, 0.1)], vec![c(-0.2, -0.1), c(0.4, 0.0)]]);
        let t = partial_trace_r(&kron(&a, &b)).unwrap();
        let expected = b.scale_complex(a.trace());
        assert!(t.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn partial_transpose_product_case() {
        let a = M::from_rows(&[vec![c(0.3, 0.0), c(0.1, 0.2)], vec![c(0.1, -0.2), c(0.7, 0.0)]]);
        let b = M::from_rows(&[vec![c(0.6, 0.0), c(-0.2, 0.1)], vec![c(-0.2, -0.1), c(0.4, 0.0)]]);
        let pt = partial_transpose_r(&kron(&a, &b)).unwrap();
        assert!(pt.max_abs_diff(&kron(&a.transpose(), &b)) < 1e-15);
    }

    #[test]
    fn partial_transpose_is_an_involution() {
        let mut rho = M::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                rho[(i, j)] = c((i * 4 + j) as f64 * 0.11, (i as f64 - j as f64) * 0.07);
            }
        }
        let twice = partial_transpose_r(&partial_transpose_r(&rho).unwrap()).unwrap();
        assert_eq!(twice, rho); // pure permutation, exact
    }

    #[test]
    fn partial_transpose_bell_spectrum() {
        // hand-built: corners move to the inner block, spectrum (1/2, 1/2, 1/2, -1/2)
        let pt = partial_transpose_r(&bell_projector()).unwrap();
        let eig = hermitian_eig(&pt).unwrap();
        let expected = [0.5, 0.5, 0.5, -0.5];
        for (got, want) in eig.eigenvalues.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn trace_norm_of_density_matrix_is_one() {
        let rho = diag(&[0.4, 0.3, 0.2, 0.1]);
        assert!((trace_norm_hermitian(&rho).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn trace_norm_sums_absolute_values() {
        assert!((trace_norm_hermitian(&diag(&[1.0, -2.0])).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn trace_norm_of_transposed_bell() {
        let pt = partial_transpose_r(&bell_projector()).unwrap();
        assert!((trace_norm_hermitian(&pt).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn hs_inner_purity() {
        let p = bell_projector();
        assert!((hs_inner(&p, &p).unwrap().re - 1.0).abs() < 1e-12);
        let mixed = diag(&[0.25; 4]);
        assert!((hs_inner(&mixed, &mixed).unwrap().re - 0.25).abs() < 1e-12);
    }

    #[test]
    fn hs_inner_orthogonal_projectors() {
        let phi = bell_projector();
        // |Psi+><Psi+|: 1/2 on the inner block
        let mut psi = M::zeros(4, 4);
        for &(i, j) in &[(1, 1), (1, 2), (2, 1), (2, 2)] {
            psi[(i, j)] = c(0.5, 0.0);
        }
        assert!(hs_inner(&phi, &psi).unwrap().norm() < 1e-15);
    }

    #[test]
    fn hs_inner_rejects_mismatched_dimensions() {
        let a = M::identity(2);
        let b = M::identity(4);
        assert!(matches!(hs_inner(&a, &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn partial_ops_reject_wrong_dimensions() {
        let m = M::identity(2);
        assert!(partial_trace_r(&m).is_err());
        assert!(partial_transpose_r(&m).is_err());
    }
}
