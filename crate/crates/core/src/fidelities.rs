//! The four fidelity quantities the correlation study compares.
//!
//! `f_e` is the overlap <psi| rho_f |psi> between the joint input and the
//! channel output. `f_ef`, `f_c` and `f_n` are one minus the absolute change
//! of entanglement of formation, concurrence and negativity through the
//! channel. All four live in [0, 1]; absolute differences are clamped back
//! into the interval to absorb 1+1e-15 style rounding artifacts.

use num_complex::Complex;

use crate::channels::KrausChannel;
use crate::error::Result;
use crate::linalg::{hs_inner, matrix_sqrt_psd};
use crate::measures::{concurrence, eof_from_concurrence, negativity};
use crate::scalar::Scalar;
use crate::state::{DensityMatrix, PureState};

/// One evaluation of all four fidelities for a (state, channel) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelityQuadruple<T> {
    pub f_e: T,
    pub f_ef: T,
    pub f_c: T,
    pub f_n: T,
}

/// Channel-independent data of an initial state: its density matrix and the
/// three entanglement measures. Sweeps prepare this once and reuse it for
/// every p instead of recomputing identical eigensolves.
#[derive(Debug, Clone)]
pub struct Prepared<T> {
    psi: PureState<T>,
    rho: DensityMatrix<T>,
    concurrence: T,
    eof: T,
    negativity: T,
}

impl<T: Scalar> Prepared<T> {
    pub fn new(psi: &PureState<T>) -> Result<Self> {
        let rho = psi.density();
        let c = concurrence(&rho)?;
        Ok(Prepared {
            psi: psi.clone(),
            rho: rho.clone(),
            concurrence: c,
            eof: eof_from_concurrence(c)?,
            negativity: negativity(&rho)?,
        })
    }

    pub fn initial_concurrence(&self) -> T {
        self.concurrence
    }

    /// All four fidelities from a single channel application.
    pub fn quadruple(&self, channel: &KrausChannel<T>) -> Result<FidelityQuadruple<T>> {
        let rho_f = channel.apply_local(&self.rho)?;
        let c_f = concurrence(&rho_f)?;
        let e_f = eof_from_concurrence(c_f)?;
        let n_f = negativity(&rho_f)?;
        Ok(FidelityQuadruple {
            f_e: expectation(&self.psi, &rho_f),
            f_ef: unit_clamp(T::one() - (self.eof - e_f).abs()),
            f_c: unit_clamp(T::one() - (self.concurrence - c_f).abs()),
            f_n: unit_clamp(T::one() - (self.negativity - n_f).abs()),
        })
    }
}

fn unit_clamp<T: Scalar>(x: T) -> T {
    x.max(T::zero()).min(T::one())
}

/// <psi| rho |psi>, the quadratic form; equal to Tr(rho_i rho_f) for a pure
/// rho_i but one matrix product cheaper.
fn expectation<T: Scalar>(psi: &PureState<T>, rho: &DensityMatrix<T>) -> T {
    let amps = psi.amplitudes();
    let mut acc = Complex::new(T::zero(), T::zero());
    for i in 0..4 {
        for j in 0..4 {
            acc = acc + amps[i].conj() * rho.matrix()[(i, j)] * amps[j];
        }
    }
    unit_clamp(acc.re)
}

/// Overlap between the joint input state and the channel output.
pub fn entanglement_fidelity<T: Scalar>(
    psi: &PureState<T>,
    channel: &KrausChannel<T>,
) -> Result<T> {
    let rho_f = channel.apply_local(&psi.density())?;
    Ok(expectation(psi, &rho_f))
}

/// Tr(rho_i^Q rho_f^Q) over the reduced states of subsystem Q.
///
/// This is the Hilbert-Schmidt overlap, which agrees with the squared
/// state fidelity only when the marginal is pure; see
/// [`uhlmann_fidelity_sq`] for the quantity that upper-bounds `f_e` for
/// every channel.
pub fn reduced_state_fidelity<T: Scalar>(
    psi: &PureState<T>,
    channel: &KrausChannel<T>,
) -> Result<T> {
    let (q_i, q_f) = channel.reduced_pair(psi)?;
    Ok(unit_clamp(hs_inner(q_i.matrix(), q_f.matrix())?.re))
}

/// Squared Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2. The entanglement
/// fidelity of any channel is bounded by this quantity evaluated on the
/// reduced input/output pair.
pub fn uhlmann_fidelity_sq<T: Scalar>(a: &DensityMatrix<T>, b: &DensityMatrix<T>) -> Result<T> {
    let root_a = matrix_sqrt_psd(a.matrix())?;
    let inner = &(&root_a * b.matrix()) * &root_a;
    let root_inner = matrix_sqrt_psd(&inner)?;
    let tr = root_inner.trace().re;
    Ok(unit_clamp(tr * tr))
}

/// 1 - |C(rho_i) - C(rho_f)|.
pub fn fidelity_of_concurrence<T: Scalar>(
    psi: &PureState<T>,
    channel: &KrausChannel<T>,
) -> Result<T> {
    Ok(Prepared::new(psi)?.quadruple(channel)?.f_c)
}

/// 1 - |E(rho_i) - E(rho_f)|.
pub fn fidelity_of_eof<T: Scalar>(psi: &PureState<T>, channel: &KrausChannel<T>) -> Result<T> {
    Ok(Prepared::new(psi)?.quadruple(channel)?.f_ef)
}

/// 1 - |N(rho_i) - N(rho_f)|.
pub fn fidelity_of_negativity<T: Scalar>(
    psi: &PureState<T>,
    channel: &KrausChannel<T>,
) -> Result<T> {
    Ok(Prepared::new(psi)?.quadruple(channel)?.f_n)
}

/// All four fidelities, sharing one channel application.
pub fn fidelity_quadruple<T: Scalar>(
    psi: &PureState<T>,
    channel: &KrausChannel<T>,
) -> Result<FidelityQuadruple<T>> {
    Prepared::new(psi)?.quadruple(channel)
}
