//! Two-qubit entanglement toolkit: measures (concurrence, entanglement of
//! formation, negativity), Kraus noise channels, the four entanglement
//! fidelities they induce, and a reproducible harness that rank-correlates
//! those fidelities over random-state ensembles.
//!
//! Everything numeric is generic over the [`Scalar`] precision; the `*64`
//! aliases below pin the `f64` instantiation the CLI and the file formats
//! use.

pub mod channels;
pub mod error;
pub mod fidelities;
pub mod harness;
pub mod linalg;
pub mod measures;
pub mod rng;
pub mod scalar;
pub mod state;
pub mod statefile;
pub mod stats;
pub mod wire;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use num_complex::Complex;

/// Concrete `f64` instantiations.
pub type Complex64 = Complex<f64>;
pub type Matrix64 = linalg::ComplexMatrix<f64>;
pub type PureState64 = state::PureState<f64>;
pub type DensityMatrix64 = state::DensityMatrix<f64>;
pub type KrausChannel64 = channels::KrausChannel<f64>;
pub type FidelityQuadruple64 = fidelities::FidelityQuadruple<f64>;
pub type SweepRecord64 = harness::SweepRecord<f64>;
pub type TauRecord64 = harness::TauRecord<f64>;
pub type Histogram64 = harness::Histogram<f64>;
