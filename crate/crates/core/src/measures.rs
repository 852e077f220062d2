//! Entanglement measures for two-qubit states: concurrence through the
//! spin-flip procedure, the closed-form entanglement of formation it induces,
//! negativity from the partial transpose, and the von Neumann entropy used as
//! the pure-state cross-check.
//!
//! Every eigensolve stays Hermitian: the spectrum behind the concurrence is
//! taken from sqrt(rho) * rho_tilde * sqrt(rho) rather than the non-Hermitian
//! product rho * rho_tilde. Tiny negative intermediates (>= -PSD_TOL) clamp
//! to zero before square roots and logarithms; larger violations are hard
//! errors.

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eig, kron, matrix_sqrt_psd, partial_transpose_r, pauli_y, ComplexMatrix,
};
use crate::scalar::Scalar;
use crate::state::{DensityMatrix, PureState};

/// The four spin-flip eigenvalues, sorted non-increasing, all clamped >= 0.
#[derive(Debug, Clone, Copy)]
pub struct WoottersSpectrum<T> {
    lambdas: [T; 4],
}

impl<T: Scalar> WoottersSpectrum<T> {
    pub fn lambdas(&self) -> &[T; 4] {
        &self.lambdas
    }
}

fn require_two_qubit<T: Scalar>(rho: &DensityMatrix<T>) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: "4x4".into(),
            got: format!("{0}x{0}", rho.dim()),
        });
    }
    Ok(())
}

fn unit_clamp<T: Scalar>(x: T) -> T {
    x.max(T::zero()).min(T::one())
}

/// rho_tilde = (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y), the
/// complex conjugate taken entrywise in the standard basis.
pub fn spin_flip<T: Scalar>(rho: &DensityMatrix<T>) -> Result<ComplexMatrix<T>> {
    require_two_qubit(rho)?;
    let yy = kron(&pauli_y::<T>(), &pauli_y::<T>());
    Ok(&(&yy * &rho.matrix().conjugate()) * &yy)
}

/// Eigenvalues of sqrt(sqrt(rho) rho_tilde sqrt(rho)), non-increasing.
///
/// Those are the singular values of M = sqrt(rho) (sigma_y (x) sigma_y)
/// conj(sqrt(rho)), since M M† is exactly the product above. The spectrum is
/// read off the Hermitian embedding [[0, M], [M†, 0]], whose eigenvalues are
/// +/- the singular values. Squaring M first and square-rooting the
/// eigenvalues afterwards would turn rounding noise near zero into sqrt(eps)
/// errors, an order of magnitude too coarse for the downstream tolerances;
/// the embedding keeps every eigensolve Hermitian and every lambda accurate
/// at working precision.
pub fn wootters_spectrum<T: Scalar>(rho: &DensityMatrix<T>) -> Result<WoottersSpectrum<T>> {
    require_two_qubit(rho)?;
    let root = matrix_sqrt_psd(rho.matrix())?;
    let yy = kron(&pauli_y::<T>(), &pauli_y::<T>());
    let m = &(&root * &yy) * &root.conjugate();

    let mut embedding = ComplexMatrix::zeros(8, 8);
    for i in 0..4 {
        for j in 0..4 {
            embedding[(i, 4 + j)] = m[(i, j)];
            embedding[(4 + i, j)] = m[(j, i)].conj();
        }
    }
    let eig = hermitian_eig(&embedding)?;
    // descending order: the four leading eigenvalues are the singular values
    let mut lambdas = [T::zero(); 4];
    for (slot, &value) in lambdas.iter_mut().zip(&eig.eigenvalues) {
        *slot = value.max(T::zero());
    }
    Ok(WoottersSpectrum { lambdas })
}

/// max{0, lambda_1 - lambda_2 - lambda_3 - lambda_4}, clamped into [0, 1].
pub fn concurrence<T: Scalar>(rho: &DensityMatrix<T>) -> Result<T> {
    let [l1, l2, l3, l4] = *wootters_spectrum(rho)?.lambdas();
    Ok(unit_clamp(l1 - l2 - l3 - l4))
}

/// Pure-state closed form 2|alpha*delta - beta*gamma|.
pub fn concurrence_pure<T: Scalar>(psi: &PureState<T>) -> T {
    let [a, b, g, d] = *psi.amplitudes();
    unit_clamp(T::of(2.0) * (a * d - b * g).norm())
}

/// Binary entropy of xi = (1 + sqrt(1 - c^2))/2, the two-qubit closed form.
/// Continuous limits pin 0 at c=0 and 1 at c=1.
pub fn eof_from_concurrence<T: Scalar>(c: T) -> Result<T> {
    if c < T::zero() || c > T::one() {
        return Err(Error::OutOfRange {
            name: "concurrence",
            value: c.to_f64().unwrap_or(f64::NAN),
        });
    }
    let xi = (T::one() + (T::one() - c * c).max(T::zero()).sqrt()) * T::of(0.5);
    Ok(unit_clamp(binary_entropy(xi)))
}

fn binary_entropy<T: Scalar>(xi: T) -> T {
    let mut h = T::zero();
    for q in [xi, T::one() - xi] {
        if q > T::zero() {
            h = h - q * q.log2();
        }
    }
    h
}

/// Entanglement of formation of a two-qubit state.
pub fn entanglement_of_formation<T: Scalar>(rho: &DensityMatrix<T>) -> Result<T> {
    eof_from_concurrence(concurrence(rho)?)
}

/// -sum lambda log2 lambda with 0 log 0 = 0; base 2 throughout (ebits).
pub fn von_neumann_entropy<T: Scalar>(rho: &DensityMatrix<T>) -> Result<T> {
    let eig = hermitian_eig(rho.matrix())?;
    let mut h = T::zero();
    for &lambda in &eig.eigenvalues {
        if lambda > T::zero() {
            h = h - lambda * lambda.log2();
        }
    }
    Ok(h.max(T::zero()))
}

/// Trace norm of the partial transpose minus one, cross-checked against
/// twice the negative part of the spectrum (the two routes must agree; a gap
/// means a broken eigensolver). Result clamped into [0, 1].
pub fn negativity<T: Scalar>(rho: &DensityMatrix<T>) -> Result<T> {
    require_two_qubit(rho)?;
    let pt = partial_transpose_r(rho.matrix())?;
    let eig = hermitian_eig(&pt)?;
    let trace_norm = eig.eigenvalues.iter().fold(T::zero(), |acc, &l| acc + l.abs());
    let via_trace_norm = trace_norm - T::one();
    let via_negative_part = eig
        .eigenvalues
        .iter()
        .filter(|&&l| l < T::zero())
        .fold(T::zero(), |acc, &l| acc - l)
        * T::of(2.0);
    let delta = (via_trace_norm - via_negative_part).abs();
    if delta > T::VALIDATION_TOL {
        return Err(Error::Inconsistent {
            what: "negativity",
            delta: delta.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(unit_clamp(via_trace_norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::ChannelFamily;
    use crate::linalg::partial_trace_r;
    use crate::state::{BellState, StateSampler};
    use num_complex::Complex;

    fn bell() -> DensityMatrix<f64> {
        PureState::<f64>::bell(BellState::PhiPlus).density()
    }

    fn maximally_mixed() -> DensityMatrix<f64> {
        DensityMatrix::new(ComplexMatrix::<f64>::identity(4).scale(0.25)).unwrap()
    }

    fn ground() -> DensityMatrix<f64> {
        PureState::new([
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
        ])
        .unwrap()
        .density()
    }

    #[test]
    fn spin_flip_fixes_bell_state() {
        // sigma_y (x) sigma_y maps |Phi+> to -|Phi+> and the entries are real
        let flipped = spin_flip(&bell()).unwrap();
        assert!(flipped.max_abs_diff(bell().matrix()) < 1e-14);
    }

    #[test]
    fn spin_flip_swaps_ground_and_excited() {
        let flipped = spin_flip(&ground()).unwrap();
        assert!((flipped[(3, 3)].re - 1.0).abs() < 1e-14);
        assert!(flipped[(0, 0)].norm() < 1e-14);
    }

    #[test]
    fn spin_flip_fixes_maximally_mixed() {
        let flipped = spin_flip(&maximally_mixed()).unwrap();
        assert!(flipped.max_abs_diff(maximally_mixed().matrix()) < 1e-14);
    }

    #[test]
    fn wootters_spectrum_of_pure_state_is_concurrence_then_zeros() {
        let sampler = StateSampler::new(17);
        for index in 0..50u64 {
            let psi = sampler.sample::<f64>(index);
            let spectrum = wootters_spectrum(&psi.density()).unwrap();
            let c = concurrence_pure(&psi);
            assert!((spectrum.lambdas()[0] - c).abs() < 1e-9, "lambda_1 vs closed form");
            for &l in &spectrum.lambdas()[1..] {
                assert!(l < 1e-7, "trailing lambda {l}");
            }
        }
    }

    #[test]
    fn spectrum_matches_literal_square_root_route() {
        // independent oracle: eigenvalues of sqrt(rho) rho_tilde sqrt(rho),
        // square-rooted, exactly as written; accurate to ~1e-8 near zero
        let sampler = StateSampler::new(19);
        for index in 0..30u64 {
            let psi = sampler.sample::<f64>(index);
            let p = (index as f64 + 0.5) / 30.0;
            let ch = ChannelFamily::AmplitudeDamping.channel(p).unwrap();
            let rho = ch.apply_local(&psi.density()).unwrap();

            let root = crate::linalg::matrix_sqrt_psd(rho.matrix()).unwrap();
            let inner = &(&root * &spin_flip(&rho).unwrap()) * &root;
            let eig = crate::linalg::hermitian_eig(&inner).unwrap();
            let oracle: Vec<f64> = eig.eigenvalues.iter().map(|l| l.max(0.0).sqrt()).collect();

            let spectrum = wootters_spectrum(&rho).unwrap();
            for (a, b) in spectrum.lambdas().iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-8, "state {index}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn wootters_spectrum_of_maximally_mixed_is_quarter() {
        let spectrum = wootters_spectrum(&maximally_mixed()).unwrap();
        for &l in spectrum.lambdas() {
            assert!((l - 0.25).abs() < 1e-10);
        }
    }

    #[test]
    fn wootters_spectrum_of_ground_state_vanishes() {
        let spectrum = wootters_spectrum(&ground()).unwrap();
        for &l in spectrum.lambdas() {
            assert!(l < 1e-7);
        }
    }

    #[test]
    fn concurrence_of_bell_state_is_one() {
        assert!((concurrence(&bell()).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn concurrence_of_product_state_is_zero() {
        assert!(concurrence(&ground()).unwrap() < 1e-10);
    }

    #[test]
    fn concurrence_through_amplitude_damping_matches_closed_form() {
        // cross-checked against the X-state closed form
        // 2 max(0, |rho_03| - sqrt(rho_11 rho_22))
        let psi = PureState::<f64>::bell(BellState::PhiPlus);
        for &p in &[0.0, 0.2, 0.5, 0.8, 1.0] {
            let ch = ChannelFamily::AmplitudeDamping.channel(p).unwrap();
            let rho = ch.apply_local(&psi.density()).unwrap();
            let m = rho.matrix();
            let x_state = 2.0
                * (m[(0, 3)].norm() - (m[(1, 1)].re * m[(2, 2)].re).max(0.0).sqrt()).max(0.0);
            let c = concurrence(&rho).unwrap();
            assert!((c - (1.0 - p).sqrt()).abs() < 1e-10, "p={p}: {c}");
            assert!((c - x_state).abs() < 1e-10, "X-state oracle disagrees at p={p}");
        }
    }

    #[test]
    fn concurrence_pure_examples() {
        let z = Complex::new(0.0, 0.0);
        assert!(concurrence_pure(&PureState::new([Complex::new(1.0, 0.0), z, z, z]).unwrap()) < 1e-15);
        assert!((concurrence_pure(&PureState::<f64>::bell(BellState::PhiPlus)) - 1.0).abs() < 1e-15);
        let skew = PureState::new([
            Complex::new(0.8f64.sqrt(), 0.0),
            z,
            z,
            Complex::new(0.2f64.sqrt(), 0.0),
        ])
        .unwrap();
        assert!((concurrence_pure(&skew) - 0.8).abs() < 1e-15);
    }

    #[test]
    fn eof_endpoints_and_frozen_midpoint() {
        assert_eq!(eof_from_concurrence(0.0f64).unwrap(), 0.0);
        assert!((eof_from_concurrence(1.0f64).unwrap() - 1.0).abs() < 1e-12);
        // xi = 0.9: -0.9 log2 0.9 - 0.1 log2 0.1, evaluated independently
        assert!((eof_from_concurrence(0.6f64).unwrap() - 0.4689955935892812).abs() < 1e-12);
        assert!(matches!(eof_from_concurrence(1.2f64), Err(Error::OutOfRange { .. })));
        assert!(matches!(eof_from_concurrence(-0.1f64), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn eof_of_named_states() {
        assert!((entanglement_of_formation(&bell()).unwrap() - 1.0).abs() < 1e-10);
        assert!(entanglement_of_formation(&maximally_mixed()).unwrap() < 1e-10);
    }

    #[test]
    fn eof_matches_reduced_entropy_on_pure_states() {
        let sampler = StateSampler::new(23);
        for index in 0..50u64 {
            let psi = sampler.sample::<f64>(index);
            let rho = psi.density();
            let e = entanglement_of_formation(&rho).unwrap();
            let reduced = DensityMatrix::new(partial_trace_r(rho.matrix()).unwrap()).unwrap();
            let s = von_neumann_entropy(&reduced).unwrap();
            assert!((e - s).abs() < 1e-8, "state {index}: E={e} S={s}");
        }
    }

    #[test]
    fn entropy_examples() {
        let mixed = DensityMatrix::new(ComplexMatrix::<f64>::identity(2).scale(0.5)).unwrap();
        assert!((von_neumann_entropy(&mixed).unwrap() - 1.0).abs() < 1e-12);

        let mut pure = ComplexMatrix::<f64>::zeros(2, 2);
        pure[(0, 0)] = Complex::new(1.0, 0.0);
        assert!(von_neumann_entropy(&DensityMatrix::new(pure).unwrap()).unwrap() < 1e-12);

        let mut skew = ComplexMatrix::<f64>::zeros(2, 2);
        skew[(0, 0)] = Complex::new(0.9, 0.0);
        skew[(1, 1)] = Complex::new(0.1, 0.0);
        let s = von_neumann_entropy(&DensityMatrix::new(skew).unwrap()).unwrap();
        assert!((s - 0.4689955935892812).abs() < 1e-12);
    }

    #[test]
    fn negativity_of_bell_state_is_one() {
        assert!((negativity(&bell()).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn negativity_of_product_states_vanishes() {
        assert!(negativity(&ground()).unwrap() < 1e-12);
        assert!(negativity(&maximally_mixed()).unwrap() < 1e-12);
    }

    #[test]
    fn negativity_through_amplitude_damping_matches_closed_form() {
        // eigenvalues of the partially transposed X-state, reduced by hand to
        // sqrt(p^2/4 + (1-p)) - p/2
        let psi = PureState::<f64>::bell(BellState::PhiPlus);
        for &p in &[0.0, 0.1, 0.4, 0.7, 1.0] {
            let ch = ChannelFamily::AmplitudeDamping.channel(p).unwrap();
            let rho = ch.apply_local(&psi.density()).unwrap();
            let n = negativity(&rho).unwrap();
            let expected = (p * p / 4.0 + (1.0 - p)).sqrt() - p / 2.0;
            assert!((n - expected).abs() < 1e-10, "p={p}: {n} vs {expected}");
        }
    }

    #[test]
    fn measures_reject_reduced_states() {
        let half = DensityMatrix::new(ComplexMatrix::<f64>::identity(2).scale(0.5)).unwrap();
        assert!(concurrence(&half).is_err());
        assert!(negativity(&half).is_err());
    }
}
