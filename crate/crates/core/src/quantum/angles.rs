//! Closed-form rotation angles and measurement probabilities on the invariant
//! 2-plane of each amplification operator.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `M = (I - 2|v_f><v_f|)(2|v_g><v_g| - I)` with overlap `a = <v_g|v_f>`:
    /// `cos t = 1 - 2a^2`, `sin t = 2a sqrt(1 - a^2)`.
    Linearity,
    /// `G = (I - 2|v_f><v_f|)(I - 2P_S)` with `mu = ||P_S v_f||`:
    /// `cos t = 2mu^2 - 1`, `sin t = 2mu sqrt(1 - mu^2)`.
    Symmetry,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleReport {
    pub overlap: f64,
    /// Rotation angle in `[0, pi]`.
    pub theta: f64,
    /// `pi - theta`, linearity convention only.
    pub delta_theta: Option<f64>,
    /// Eigenvalues `e^{+i theta}`, `e^{-i theta}` of the 2x2 restriction.
    pub eigenvalues: [Complex64; 2],
}

fn check_overlap(overlap: f64) -> Result<()> {
    if (0.0..=1.0).contains(&overlap) {
        Ok(())
    } else {
        Err(Error::OverlapOutOfRange(overlap))
    }
}

pub fn grover_eigenphase(overlap: f64, convention: Convention) -> Result<AngleReport> {
    check_overlap(overlap)?;
    let c = overlap;
    let s = (1.0 - c * c).max(0.0).sqrt();
    let sin_t = 2.0 * c * s;
    let cos_t = match convention {
        Convention::Linearity => 1.0 - 2.0 * c * c,
        Convention::Symmetry => 2.0 * c * c - 1.0,
    };
    let theta = sin_t.atan2(cos_t);
    debug_assert!(sin_t >= 0.0 && (0.0..=PI).contains(&theta));
    let delta_theta = match convention {
        Convention::Linearity => Some(PI - theta),
        Convention::Symmetry => None,
    };
    Ok(AngleReport {
        overlap,
        theta,
        delta_theta,
        eigenvalues: [Complex64::new(cos_t, sin_t), Complex64::new(cos_t, -sin_t)],
    })
}

/// The 2x2 matrix of the operator on its invariant plane.
///
/// Linearity: basis `{v_g, v_g_perp}` with `v_f = a v_g + sqrt(1-a^2) v_g_perp`,
/// giving `[[cos t, sin t], [-sin t, cos t]]`.
///
/// Symmetry: basis `{u1, -u2}` where `u1 = P_S v_f / mu` and `u2` is the
/// normalized orthogonal remainder, giving `[[cos t, sin t], [-sin t, cos t]]`.
/// In the `{u1, u2}` orientation the same operator is the transpose.
pub fn plane_matrix(overlap: f64, convention: Convention) -> Result<[[f64; 2]; 2]> {
    let r = grover_eigenphase(overlap, convention)?;
    let (c, s) = (r.eigenvalues[0].re, r.eigenvalues[0].im);
    Ok([[c, s], [-s, c]])
}

/// Probability that the final projective measurement reports a violation
/// after `steps` iterations starting from `|v_f>`.
///
/// Linearity: outcome 0 of `P_g`, `(1 + cos((2n+1) t)) / 2`.
/// Symmetry: outcome 0 of `P_S`, `1 - cos^2((n + 1/2) t)`.
pub fn predicted_rejection(overlap: f64, steps: u64, convention: Convention) -> Result<f64> {
    let r = grover_eigenphase(overlap, convention)?;
    let k = steps as f64;
    let p = match convention {
        Convention::Linearity => 0.5 * (1.0 + ((2.0 * k + 1.0) * r.theta).cos()),
        Convention::Symmetry => {
            let c = ((k + 0.5) * r.theta).cos();
            1.0 - c * c
        }
    };
    Ok(p.clamp(0.0, 1.0))
}
