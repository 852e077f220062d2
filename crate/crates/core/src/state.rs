//! Two-qubit pure and mixed states, the Bell fixtures, and the deterministic
//! random-state sampler.
//!
//! Random states draw 8 independent standard normals as the real and
//! imaginary parts of the four amplitudes, then normalize. That construction
//! is unitarily invariant, so the ensemble is uniform on the pure-state
//! manifold. Sampling is addressed by `(master_seed, index)` and is therefore
//! reproducible regardless of evaluation order or thread count.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::rng::Stream;
use crate::scalar::Scalar;

/// The four maximally entangled two-qubit states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellState {
    /// (|00> + |11>)/sqrt(2)
    PhiPlus,
    /// (|00> - |11>)/sqrt(2)
    PhiMinus,
    /// (|01> + |10>)/sqrt(2)
    PsiPlus,
    /// (|01> - |10>)/sqrt(2)
    PsiMinus,
}

impl BellState {
    /// Accepts the unicode spellings and their ascii fallbacks.
    pub fn from_name(name: &str) -> Result<Self> {
        match name.to_lowercase().as_str() {
            "phi+" | "φ+" => Ok(BellState::PhiPlus),
            "phi-" | "φ-" => Ok(BellState::PhiMinus),
            "psi+" | "ψ+" => Ok(BellState::PsiPlus),
            "psi-" | "ψ-" => Ok(BellState::PsiMinus),
            _ => Err(Error::UnknownBellState { name: name.to_string() }),
        }
    }
}

/// Normalized two-qubit amplitude vector (alpha, beta, gamma, delta) in the
/// |00>, |01>, |10>, |11> basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<T> {
    amps: [Complex<T>; 4],
}

impl<T: Scalar> PureState<T> {
    /// Wraps amplitudes that are already normalized within `NORM_TOL`.
    pub fn new(amps: [Complex<T>; 4]) -> Result<Self> {
        let norm_sqr = amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr());
        if (norm_sqr - T::one()).abs() > T::NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr: norm_sqr.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(PureState { amps })
    }

    /// Normalizes an arbitrary nonzero amplitude vector.
    pub fn from_unnormalized(amps: [Complex<T>; 4]) -> Result<Self> {
        let norm_sqr = amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr());
        if norm_sqr == T::zero() {
            return Err(Error::ZeroVector);
        }
        let inv = T::one() / norm_sqr.sqrt();
        Ok(PureState { amps: amps.map(|a| a * inv) })
    }

    pub fn bell(kind: BellState) -> Self {
        let h = T::of(std::f64::consts::FRAC_1_SQRT_2);
        let z = Complex::new(T::zero(), T::zero());
        let p = Complex::new(h, T::zero());
        let m = Complex::new(-h, T::zero());
        let amps = match kind {
            BellState::PhiPlus => [p, z, z, p],
            BellState::PhiMinus => [p, z, z, m],
            BellState::PsiPlus => [z, p, p, z],
            BellState::PsiMinus => [z, p, m, z],
        };
        PureState { amps }
    }

    pub fn amplitudes(&self) -> &[Complex<T>; 4] {
        &self.amps
    }

    /// Outer product |psi><psi|. Rank one and idempotent by construction,
    /// so no eigenvalue validation is repeated here.
    pub fn density(&self) -> DensityMatrix<T> {
        let mut m = ComplexMatrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = self.amps[i] * self.amps[j].conj();
            }
        }
        DensityMatrix { m }
    }
}

/// Trace-one positive-semidefinite Hermitian matrix. Construction is the
/// validation gate every I/O boundary goes through; 2x2 reduced states and
/// 4x4 joint states both live here.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    pub(crate) m: ComplexMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Checks hermiticity, unit trace and positive semidefiniteness, naming
    /// the violated invariant and the measured deviation on failure.
    pub fn new(m: ComplexMatrix<T>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: "square matrix".into(),
                got: format!("{}x{}", m.rows(), m.cols()),
            });
        }
        let dev = m.hermiticity_deviation();
        if dev > T::VALIDATION_TOL {
            return Err(Error::NotHermitian { deviation: dev.to_f64().unwrap_or(f64::NAN) });
        }
        let trace = m.trace().re;
        if (trace - T::one()).abs() > T::VALIDATION_TOL {
            return Err(Error::TraceNotOne { trace: trace.to_f64().unwrap_or(f64::NAN) });
        }
        let eig = hermitian_eig(&m)?;
        if let Some(&min) = eig.eigenvalues.last() {
            if min < -T::PSD_TOL {
                return Err(Error::NotPsd { eigenvalue: min.to_f64().unwrap_or(f64::NAN) });
            }
        }
        Ok(DensityMatrix { m })
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }
}

/// Deterministic source of random pure states. The same `(master_seed,
/// index)` pair always yields the identical state, so ensembles can be
/// evaluated in parallel without losing reproducibility.
#[derive(Debug, Clone, Copy)]
pub struct StateSampler {
    master_seed: u64,
}

impl StateSampler {
    pub fn new(master_seed: u64) -> Self {
        StateSampler { master_seed }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    /// State `index` of this ensemble. A zero draw (probability ~0) falls
    /// through to the next 8 normals of the same substream.
    pub fn sample<T: Scalar>(&self, index: u64) -> PureState<T> {
        let mut stream = Stream::substream(self.master_seed, index);
        loop {
            let mut amps = [Complex::new(T::zero(), T::zero()); 4];
            for amp in &mut amps {
                let (re, im) = stream.next_normal_pair();
                *amp = T::complex(re, im);
            }
            match PureState::from_unnormalized(amps) {
                Ok(state) => return state,
                Err(_) => continue,
            }
        }
    }
}
