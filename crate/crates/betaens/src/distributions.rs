//! Exact samplers for the three distribution families feeding the matrix
//! models: Theta_nu on the closed unit disk, Beta on [0,1] and the symmetric
//! Beta on [-1,1].
//!
//! Conventions:
//! - `Beta01(s, 0)` is the degenerate boundary case and returns exactly 1.
//!   It shows up as the `X_0` factor of the circular product law and is the
//!   radial analogue of Theta_1 being supported on the circle.
//! - Theta_nu is sampled by its polar factorization: a uniform phase times
//!   the square root of a Beta(1, (nu-1)/2) radius. This is exact and O(1).

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Beta, Distribution, Uniform};

use crate::error::{Error, Result};

/// Parameters of the rotation-invariant Theta_nu law on the disk,
/// density (nu-1)/2 * (1-|z|^2)^((nu-3)/2) d^2z/pi for nu > 1;
/// nu = 1 is uniform on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaParams {
    nu: f64,
}

impl ThetaParams {
    pub fn new(nu: f64) -> Result<Self> {
        if !(nu >= 1.0) || !nu.is_finite() {
            return Err(Error::ParameterDomain(format!("Theta requires nu >= 1, got {nu}")));
        }
        Ok(Self { nu })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// Shape parameters of the Beta law on [-1,1] with density
/// 2^(1-s-t) Gamma(s+t)/(Gamma(s)Gamma(t)) (1-x)^(s-1) (1+x)^(t-1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaSymParams {
    s: f64,
    t: f64,
}

impl BetaSymParams {
    pub fn new(s: f64, t: f64) -> Result<Self> {
        if !(s > 0.0 && t > 0.0) || !s.is_finite() || !t.is_finite() {
            return Err(Error::ParameterDomain(format!(
                "symmetric Beta requires s, t > 0, got s={s}, t={t}"
            )));
        }
        Ok(Self { s, t })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// Mean (t-s)/(t+s).
    pub fn mean(&self) -> f64 {
        (self.t - self.s) / (self.t + self.s)
    }

    /// Second moment ((t-s)^2 + (t+s)) / ((t+s)(t+s+1)).
    pub fn second_moment(&self) -> f64 {
        let u = self.s + self.t;
        let d = self.t - self.s;
        (d * d + u) / (u * (u + 1.0))
    }
}

/// Closed-form variance 4st/((s+t)^2 (s+t+1)) of the symmetric Beta law.
pub fn beta_sym_variance(params: BetaSymParams) -> f64 {
    let (s, t) = (params.s, params.t);
    let u = s + t;
    4.0 * s * t / (u * u * (u + 1.0))
}

/// Draw from Beta(s, t) on [0,1]; `t = 0` is the degenerate point mass at 1.
pub fn sample_beta01<R: Rng + ?Sized>(s: f64, t: f64, rng: &mut R) -> Result<f64> {
    if !(s > 0.0) || !(t >= 0.0) || !s.is_finite() || !t.is_finite() {
        return Err(Error::ParameterDomain(format!(
            "Beta on [0,1] requires s > 0 and t >= 0, got s={s}, t={t}"
        )));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    let beta = Beta::new(s, t)
        .map_err(|e| Error::ParameterDomain(format!("Beta({s}, {t}): {e}")))?;
    Ok(beta.sample(rng))
}

/// Draw from the symmetric Beta law on [-1,1].
///
/// Uses the push-forward x = 1 - 2y of y ~ Beta01(s, t), which has exactly
/// the stated density.
pub fn sample_beta_sym<R: Rng + ?Sized>(params: BetaSymParams, rng: &mut R) -> f64 {
    let beta = Beta::new(params.s, params.t).expect("validated shapes");
    1.0 - 2.0 * beta.sample(rng)
}

/// Draw from Theta_nu: z = e^{i phi} sqrt(X) with phi uniform on [0, 2pi)
/// and X ~ Beta01(1, (nu-1)/2); X is identically 1 when nu = 1.
pub fn sample_theta<R: Rng + ?Sized>(nu: f64, rng: &mut R) -> Result<Complex64> {
    let params = ThetaParams::new(nu)?;
    let phi = Uniform::new(0.0, std::f64::consts::TAU)
        .expect("valid range")
        .sample(rng);
    let radius_sq = sample_beta01(1.0, (params.nu - 1.0) / 2.0, rng)?;
    Ok(Complex64::from_polar(radius_sq.sqrt(), phi))
}

/// Radial moment E|z|^(2p) of Theta_nu, computed by quadrature of the radial
/// density rather than the closed form; used as an oracle in tests and in the
/// moment-adjudication report.
pub fn theta_radial_moment_quadrature(nu: f64, p: u32) -> f64 {
    if nu == 1.0 {
        return 1.0; // point mass at |z| = 1
    }
    // E|z|^(2p) = int_0^1 u^p (nu-1)/2 (1-u)^((nu-3)/2) du; substituting
    // v = (1-u)^((nu-1)/2) turns the weight into the constant 1.
    let g = |u: f64| u.powi(p as i32);
    crate::quad::integrate_with_beta_weight(g, (nu - 1.0) / 2.0)
}
