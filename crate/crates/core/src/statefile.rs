//! JSON state files.
//!
//! Pure states: `{"re": [4 reals], "im": [4 reals]}`.
//! Density matrices: `{"rho_re": [[4x4 reals]], "rho_im": [[4x4 reals]]}`.
//! Readers funnel everything through the normalization and density-matrix
//! validators, so a file that loads is a file that is physical.

use std::path::Path;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::state::{DensityMatrix, PureState};

#[derive(Debug, Clone)]
pub enum StateFile {
    Pure(PureState<f64>),
    Density(DensityMatrix<f64>),
}

#[derive(Serialize, Deserialize)]
struct PureJson {
    re: [f64; 4],
    im: [f64; 4],
}

#[derive(Serialize, Deserialize)]
struct DensityJson {
    rho_re: [[f64; 4]; 4],
    rho_im: [[f64; 4]; 4],
}

pub fn parse_state(text: &str) -> Result<StateFile> {
    if let Ok(raw) = serde_json::from_str::<PureJson>(text) {
        let mut amps = [Complex::new(0.0, 0.0); 4];
        for (i, amp) in amps.iter_mut().enumerate() {
            *amp = Complex::new(raw.re[i], raw.im[i]);
        }
        return Ok(StateFile::Pure(PureState::new(amps)?));
    }
    if let Ok(raw) = serde_json::from_str::<DensityJson>(text) {
        let mut m = ComplexMatrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = Complex::new(raw.rho_re[i][j], raw.rho_im[i][j]);
            }
        }
        return Ok(StateFile::Density(DensityMatrix::new(m)?));
    }
    // neither schema matched; report what serde saw for the pure attempt
    let detail = match serde_json::from_str::<serde_json::Value>(text) {
        Ok(_) => "expected fields re/im or rho_re/rho_im".to_string(),
        Err(e) => e.to_string(),
    };
    Err(Error::MalformedStateFile { detail })
}

pub fn load_state(path: &Path) -> Result<StateFile> {
    parse_state(&std::fs::read_to_string(path)?)
}

pub fn pure_to_json(psi: &PureState<f64>) -> String {
    let amps = psi.amplitudes();
    let raw = PureJson {
        re: [amps[0].re, amps[1].re, amps[2].re, amps[3].re],
        im: [amps[0].im, amps[1].im, amps[2].im, amps[3].im],
    };
    serde_json::to_string_pretty(&raw).expect("plain arrays always serialize")
}

pub fn density_to_json(rho: &DensityMatrix<f64>) -> String {
    let mut re = [[0.0; 4]; 4];
    let mut im = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            re[i][j] = rho.matrix()[(i, j)].re;
            im[i][j] = rho.matrix()[(i, j)].im;
        }
    }
    serde_json::to_string_pretty(&DensityJson { rho_re: re, rho_im: im })
        .expect("plain arrays always serialize")
}
