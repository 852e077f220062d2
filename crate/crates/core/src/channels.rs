//! Kraus-operator channels acting locally on qubit Q.
//!
//! A channel is a finite list of 2x2 operation elements K_k with
//! sum_k K_k† K_k = I. Applying it to a joint two-qubit state conjugates by
//! I (x) K_k, leaving subsystem R untouched. The three parameterized noise
//! families plus the sigma_y unitary and the identity are registered under
//! canonical names shared by the library, the CLI flags and the run
//! manifests.

use crate::error::{Error, Result};
use crate::linalg::{kron, partial_trace_r, pauli_x, pauli_y, pauli_z, ComplexMatrix};
use crate::scalar::Scalar;
use crate::state::{DensityMatrix, PureState};

/// The channel families of the noise study.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelFamily {
    AmplitudeDamping,
    BitFlip,
    PhaseFlip,
    BitPhaseFlip,
    Identity,
}

impl ChannelFamily {
    pub const ALL: [ChannelFamily; 5] = [
        ChannelFamily::AmplitudeDamping,
        ChannelFamily::BitFlip,
        ChannelFamily::PhaseFlip,
        ChannelFamily::BitPhaseFlip,
        ChannelFamily::Identity,
    ];

    /// Canonical registry spelling, used verbatim in CLI flags and manifests.
    pub fn name(&self) -> &'static str {
        match self {
            ChannelFamily::AmplitudeDamping => "amplitude-damping",
            ChannelFamily::BitFlip => "bit-flip",
            ChannelFamily::PhaseFlip => "phase-flip",
            ChannelFamily::BitPhaseFlip => "bit-phase-flip",
            ChannelFamily::Identity => "identity",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownChannelFamily { name: name.to_string() })
    }

    /// Builds the channel at noise strength `p`. Elements are rebuilt per
    /// call; at 2x2 scale caching would buy nothing. The identity and
    /// bit-phase-flip families do not depend on `p` but still reject values
    /// outside [0, 1].
    pub fn channel<T: Scalar>(&self, p: T) -> Result<KrausChannel<T>> {
        if p < T::zero() || p > T::one() {
            return Err(Error::POutOfRange { p: p.to_f64().unwrap_or(f64::NAN) });
        }
        let sqrt_p = p.sqrt();
        let sqrt_1mp = (T::one() - p).sqrt();
        let elements = match self {
            ChannelFamily::AmplitudeDamping => {
                let mut damp = ComplexMatrix::identity(2);
                damp[(1, 1)] = num_complex::Complex::new(sqrt_1mp, T::zero());
                let mut jump = ComplexMatrix::zeros(2, 2);
                jump[(0, 1)] = num_complex::Complex::new(sqrt_p, T::zero());
                vec![damp, jump]
            }
            ChannelFamily::BitFlip => {
                vec![ComplexMatrix::identity(2).scale(sqrt_1mp), pauli_x().scale(sqrt_p)]
            }
            ChannelFamily::PhaseFlip => {
                vec![ComplexMatrix::identity(2).scale(sqrt_1mp), pauli_z().scale(sqrt_p)]
            }
            ChannelFamily::BitPhaseFlip => vec![pauli_y()],
            ChannelFamily::Identity => vec![ComplexMatrix::identity(2)],
        };
        KrausChannel::new(elements)
    }
}

/// A completely positive trace-preserving map in operator-sum form.
#[derive(Debug, Clone)]
pub struct KrausChannel<T> {
    elements: Vec<ComplexMatrix<T>>,
}

impl<T: Scalar> KrausChannel<T> {
    /// Accepts a nonempty list of 2x2 elements satisfying completeness
    /// within `VALIDATION_TOL`.
    pub fn new(elements: Vec<ComplexMatrix<T>>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::IncompleteChannel { deviation: f64::INFINITY });
        }
        for k in &elements {
            if (k.rows(), k.cols()) != (2, 2) {
                return Err(Error::DimensionMismatch {
                    expected: "2x2".into(),
                    got: format!("{}x{}", k.rows(), k.cols()),
                });
            }
        }
        let mut sum = ComplexMatrix::zeros(2, 2);
        for k in &elements {
            sum = &sum + &(&k.adjoint() * k);
        }
        let deviation = sum.max_abs_diff(&ComplexMatrix::identity(2));
        if deviation > T::VALIDATION_TOL {
            return Err(Error::IncompleteChannel {
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(KrausChannel { elements })
    }

    pub fn elements(&self) -> &[ComplexMatrix<T>] {
        &self.elements
    }

    /// rho_f = sum_k (I (x) K_k) rho (I (x) K_k)†; only subsystem Q is
    /// touched. The output goes back through density-matrix validation; a
    /// failure there means a broken channel, not bad user input.
    pub fn apply_local(&self, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
        if rho.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: "4x4".into(),
                got: format!("{0}x{0}", rho.dim()),
            });
        }
        let id = ComplexMatrix::identity(2);
        let mut out = ComplexMatrix::zeros(4, 4);
        for k in &self.elements {
            let lifted = kron(&id, k);
            let term = &(&lifted * rho.matrix()) * &lifted.adjoint();
            out = &out + &term;
        }
        DensityMatrix::new(out)
    }

    /// Reduced input and output states of subsystem Q:
    /// (Tr_R |psi><psi|, Tr_R of the channel output).
    pub fn reduced_pair(&self, psi: &PureState<T>) -> Result<(DensityMatrix<T>, DensityMatrix<T>)> {
        let rho_i = psi.density();
        let rho_f = self.apply_local(&rho_i)?;
        let q_i = DensityMatrix::new(partial_trace_r(rho_i.matrix())?)?;
        let q_f = DensityMatrix::new(partial_trace_r(rho_f.matrix())?)?;
        Ok((q_i, q_f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{BellState, StateSampler};
    use num_complex::Complex;

    #[test]
    fn family_names_round_trip() {
        for family in ChannelFamily::ALL {
            assert_eq!(ChannelFamily::from_name(family.name()).unwrap(), family);
        }
        assert!(matches!(
            ChannelFamily::from_name("depolarizing"),
            Err(Error::UnknownChannelFamily { .. })
        ));
    }

    #[test]
    fn p_out_of_range_is_rejected() {
        assert!(matches!(
            ChannelFamily::BitFlip.channel::<f64>(1.5),
            Err(Error::POutOfRange { .. })
        ));
        assert!(matches!(
            ChannelFamily::Identity.channel::<f64>(-0.1),
            Err(Error::POutOfRange { .. })
        ));
    }

    #[test]
    fn bit_flip_at_zero_acts_as_identity() {
        let ch = ChannelFamily::BitFlip.channel::<f64>(0.0).unwrap();
        let rho = StateSampler::new(5).sample::<f64>(0).density();
        let out = ch.apply_local(&rho).unwrap();
        assert!(out.matrix().max_abs_diff(rho.matrix()) < 1e-14);
    }

    #[test]
    fn amplitude_damping_at_one_matches_printed_elements() {
        let ch = ChannelFamily::AmplitudeDamping.channel::<f64>(1.0).unwrap();
        let k0 = &ch.elements()[0];
        let k1 = &ch.elements()[1];
        assert!((k0[(0, 0)].re - 1.0).abs() < 1e-15);
        assert!(k0[(1, 1)].norm() < 1e-15);
        assert!((k1[(0, 1)].re - 1.0).abs() < 1e-15);
        assert!(k1[(0, 0)].norm() < 1e-15 && k1[(1, 0)].norm() < 1e-15 && k1[(1, 1)].norm() < 1e-15);
    }

    #[test]
    fn phase_flip_at_half_matches_printed_elements() {
        let ch = ChannelFamily::PhaseFlip.channel::<f64>(0.5).unwrap();
        let s = 0.5f64.sqrt();
        let k0 = &ch.elements()[0];
        let k1 = &ch.elements()[1];
        assert!((k0[(0, 0)].re - s).abs() < 1e-15 && (k0[(1, 1)].re - s).abs() < 1e-15);
        assert!((k1[(0, 0)].re - s).abs() < 1e-15 && (k1[(1, 1)].re + s).abs() < 1e-15);
    }

    #[test]
    fn identity_channel_is_exact() {
        let ch = ChannelFamily::Identity.channel::<f64>(0.77).unwrap();
        let rho = StateSampler::new(9).sample::<f64>(3).density();
        let out = ch.apply_local(&rho).unwrap();
        assert_eq!(out.matrix(), rho.matrix()); // multiplication by I is exact
    }

    #[test]
    fn bit_phase_flip_permutes_amplitudes() {
        // on (alpha, beta, gamma, delta) the output density equals that of
        // (-beta, alpha, -delta, gamma)
        let psi = StateSampler::new(21).sample::<f64>(4);
        let [a, b, g, d] = *psi.amplitudes();
        let expected = PureState::from_unnormalized([-b, a, -d, g]).unwrap().density();
        let ch = ChannelFamily::BitPhaseFlip.channel::<f64>(0.0).unwrap();
        let out = ch.apply_local(&psi.density()).unwrap();
        assert!(out.matrix().max_abs_diff(expected.matrix()) < 1e-12);
    }

    #[test]
    fn amplitude_damping_on_bell_state_builds_x_shape() {
        // both Kraus branches applied by hand: corner sqrt(1-p)/2, level p/2
        let p = 0.37;
        let ch = ChannelFamily::AmplitudeDamping.channel::<f64>(p).unwrap();
        let rho = PureState::<f64>::bell(BellState::PhiPlus).density();
        let out = ch.apply_local(&rho).unwrap();
        let m = out.matrix();
        assert!((m[(0, 0)].re - 0.5).abs() < 1e-12);
        assert!((m[(0, 3)].re - (1.0 - p).sqrt() / 2.0).abs() < 1e-12);
        assert!((m[(3, 0)].re - (1.0 - p).sqrt() / 2.0).abs() < 1e-12);
        assert!((m[(3, 3)].re - (1.0 - p) / 2.0).abs() < 1e-12);
        assert!((m[(2, 2)].re - p / 2.0).abs() < 1e-12);
        assert!(m[(1, 1)].norm() < 1e-12);
    }

    #[test]
    fn reduced_pair_identity_channel() {
        let ch = ChannelFamily::Identity.channel::<f64>(0.0).unwrap();
        let psi = StateSampler::new(2).sample::<f64>(0);
        let (q_i, q_f) = ch.reduced_pair(&psi).unwrap();
        assert!(q_i.matrix().max_abs_diff(q_f.matrix()) < 1e-14);
    }

    #[test]
    fn reduced_pair_bell_marginal_is_maximally_mixed() {
        let ch = ChannelFamily::AmplitudeDamping.channel::<f64>(0.6).unwrap();
        let psi = PureState::<f64>::bell(BellState::PhiPlus);
        let (q_i, _) = ch.reduced_pair(&psi).unwrap();
        let mixed = ComplexMatrix::<f64>::identity(2).scale(0.5);
        assert!(q_i.matrix().max_abs_diff(&mixed) < 1e-14);
    }

    #[test]
    fn reduced_pair_bit_flip_on_ground_state() {
        let p = 0.23;
        let ch = ChannelFamily::BitFlip.channel::<f64>(p).unwrap();
        let psi = PureState::new([
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
        ])
        .unwrap();
        let (_, q_f) = ch.reduced_pair(&psi).unwrap();
        assert!((q_f.matrix()[(0, 0)].re - (1.0 - p)).abs() < 1e-12);
        assert!((q_f.matrix()[(1, 1)].re - p).abs() < 1e-12);
    }

    #[test]
    fn incomplete_elements_are_rejected() {
        let half = ComplexMatrix::<f64>::identity(2).scale(0.5);
        assert!(matches!(
            KrausChannel::new(vec![half]),
            Err(Error::IncompleteChannel { .. })
        ));
    }
}
