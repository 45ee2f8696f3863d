//! Sampling on the constrained 7-sphere of radius ρ.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::KappaError;
use crate::kappa::basis::{Orientation, DIM};
use crate::kappa::element::KElement;

/// Postcondition tolerance on both `|f_K|` and `|‖X‖ - ρ|`, relative to ρ².
pub const SAMPLE_TOL: f64 = 1e-14;

const MAX_ATTEMPTS: usize = 64;

/// Draws a point with `f_K(X) = 0` and `‖X‖ = ρ`, deterministically from `seed`.
///
/// Method: eight standard normals; `q_r = (X₀..X₃)` is kept, and the dual
/// coefficients `(X₇, X₆, X₅, X₄)` are projected onto the hyperplane
/// orthogonal to `w = (-X₀, λX₁, λX₂, λX₃)`, which is exactly the zero set
/// of `f_K` for fixed `q_r`. The whole vector is then rescaled to ρ.
pub fn sample_s7(seed: u64, rho: f64, lambda: Orientation) -> Result<KElement<f64>, KappaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_s7_with(&mut rng, rho, lambda)
}

/// As [`sample_s7`], drawing from a caller-owned generator.
pub fn sample_s7_with<R: rand::Rng>(rng: &mut R, rho: f64, lambda: Orientation) -> Result<KElement<f64>, KappaError> {
    if !(rho.is_finite() && rho > 0.0) {
        return Err(KappaError::InvalidRadius(rho));
    }
    let l = lambda.value() as f64;
    for _ in 0..MAX_ATTEMPTS {
        let mut c: [f64; DIM] = std::array::from_fn(|_| rng.sample(StandardNormal));
        let w = [-c[0], l * c[1], l * c[2], l * c[3]];
        let ww: f64 = w.iter().map(|v| v * v).sum();
        if ww < 1e-12 {
            continue;
        }
        // Two passes bring the residual down to rounding level.
        for _ in 0..2 {
            let d = [c[7], c[6], c[5], c[4]];
            let t = w.iter().zip(&d).map(|(a, b)| a * b).sum::<f64>() / ww;
            c[7] -= t * w[0];
            c[6] -= t * w[1];
            c[5] -= t * w[2];
            c[4] -= t * w[3];
        }
        let dd: f64 = c[4..].iter().map(|v| v * v).sum();
        if dd < 1e-12 {
            continue;
        }
        let norm = c.iter().map(|v| v * v).sum::<f64>().sqrt();
        let x = KElement::new(lambda, c.map(|v| v * rho / norm));
        let scale = rho * rho;
        if x.constraint_f().abs() <= SAMPLE_TOL * scale && (x.norm_a() - rho).abs() <= SAMPLE_TOL * rho.max(1.0) {
            return Ok(x);
        }
    }
    Err(KappaError::DegenerateSample(MAX_ATTEMPTS))
}
