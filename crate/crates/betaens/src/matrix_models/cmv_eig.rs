//! Eigenvalue angles of a unitary CMV matrix.
//!
//! On the unit circle `Phi_n* = prod_k (1 - alpha_k B_k)`, so with all
//! interior coefficients strictly inside the disk and the terminal one
//! unimodular, `e^{i theta}` is an eigenvalue exactly when the terminal
//! Blaschke phase satisfies `eta_{n-1}(theta) = -arg(alpha_{n-1}) (mod 2pi)`.
//! The phase `eta_{n-1}` is strictly increasing in `theta` and gains `2 pi n`
//! per revolution, so the n roots are isolated crossings that safeguarded
//! Newton locates to machine precision. No dense eigensolve is needed and the
//! cost is O(n) per Newton step.

use num_complex::Complex64;

use crate::error::{Error, Result};

const TAU: f64 = std::f64::consts::TAU;

/// Terminal Blaschke phase `eta_{n-1}(theta)` and its theta-derivative,
/// consuming the interior coefficients `alpha_0 .. alpha_{n-2}`.
fn terminal_phase(alphas: &[Complex64], theta: f64) -> (f64, f64) {
    let mut eta = theta;
    let mut deta = 1.0;
    for a in &alphas[..alphas.len() - 1] {
        let w = a * Complex64::from_polar(1.0, eta);
        let f = Complex64::new(1.0, 0.0) - w;
        // d(eta_{k+1})/d(theta) = Re[(1+w)/(1-w)] * d(eta_k)/d(theta) + 1
        deta = ((Complex64::new(1.0, 0.0) + w) / f).re * deta + 1.0;
        eta += theta - 2.0 * f.arg();
    }
    (eta, deta)
}

/// Sorted eigenvalue angles in [0, 2pi) of the CMV matrix built from
/// `alphas` (interior coefficients strictly inside the disk, terminal
/// coefficient unimodular).
pub fn unitary_cmv_angles(alphas: &[Complex64]) -> Result<Vec<f64>> {
    let n = alphas.len();
    let terminal = alphas[n - 1];
    if (terminal.norm() - 1.0).abs() > 1e-8 {
        return Err(Error::Domain(format!(
            "terminal coefficient has modulus {}, expected 1",
            terminal.norm()
        )));
    }
    for (k, a) in alphas[..n - 1].iter().enumerate() {
        if a.norm_sqr() >= 1.0 {
            return Err(Error::SingularPhase { index: k, modulus: a.norm() });
        }
    }
    if n == 1 {
        return Ok(vec![(-terminal.arg()).rem_euclid(TAU)]);
    }

    let base_target = -terminal.arg();
    let y0 = terminal_phase(alphas, 0.0).0;
    let first = y0 + (base_target - y0).rem_euclid(TAU);

    let mut angles = Vec::with_capacity(n);
    for j in 0..n {
        let target = first + TAU * j as f64;
        angles.push(solve_crossing(alphas, target, y0)?);
    }
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(angles)
}

/// Solve `eta_{n-1}(theta) = target` for theta in [0, 2pi] by Newton steps
/// safeguarded with a bisection bracket.
///
/// Near-unimodular interior coefficients make `eta` cliff-like, and the
/// phase evaluation there carries noise of order eps / (1 - |alpha|), so the
/// phase tolerance alone cannot be the stopping rule: a collapsed theta
/// bracket is also accepted (the crossing is then located to 1e-14 in theta
/// even when the phase residual stays noisy).
fn solve_crossing(alphas: &[Complex64], target: f64, y0: f64) -> Result<f64> {
    let n = alphas.len() as f64;
    // eta(0) = y0 and eta(2pi) = y0 + 2pi n bracket every target.
    let mut lo = 0.0f64;
    let mut hi = TAU;
    // Linear interpolation start (exact for the free case eta = n theta).
    let mut theta = ((target - y0) / n).clamp(lo, hi);
    for _ in 0..300 {
        let (eta, deta) = terminal_phase(alphas, theta);
        let err = eta - target;
        if err.abs() < 1e-11 {
            return Ok(theta.rem_euclid(TAU));
        }
        if err > 0.0 {
            hi = theta;
        } else {
            lo = theta;
        }
        if hi - lo < 1e-14 {
            return Ok((0.5 * (lo + hi)).rem_euclid(TAU));
        }
        let newton = theta - err / deta;
        theta = if newton > lo && newton < hi && newton != theta {
            newton
        } else {
            // Stalled or out-of-bracket Newton step: bisect, which makes
            // progress unconditionally.
            0.5 * (lo + hi)
        };
    }
    Err(Error::NumericalFailure(format!(
        "CMV phase crossing did not converge (target {target:.6})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opuc::szego_evaluate_slice;
    use crate::rng::{substream, Lane};
    use approx::assert_relative_eq;
    use rand::Rng;

    #[test]
    fn single_coefficient_gives_its_conjugate_argument() {
        let gamma = 2.35;
        let angles = unitary_cmv_angles(&[Complex64::from_polar(1.0, gamma)]).unwrap();
        assert_relative_eq!(angles[0], (TAU - gamma).rem_euclid(TAU), epsilon = 1e-12);
    }

    #[test]
    fn free_interior_with_unimodular_terminal_gives_roots_of_unity() {
        // alpha = (0, .., 0, e^{i gamma}): Phi_n(z) = z^n - e^{-i gamma}.
        let n = 6;
        let gamma = 1.1;
        let mut alphas = vec![Complex64::new(0.0, 0.0); n - 1];
        alphas.push(Complex64::from_polar(1.0, gamma));
        let angles = unitary_cmv_angles(&alphas).unwrap();
        let mut expected: Vec<f64> =
            (0..n).map(|j| ((-gamma + TAU * j as f64) / n as f64).rem_euclid(TAU)).collect();
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in angles.iter().zip(&expected) {
            assert_relative_eq!(got, want, epsilon = 1e-11);
        }
    }

    #[test]
    fn angles_are_characteristic_polynomial_roots() {
        let mut rng = substream(4, Lane(0), 0);
        for _ in 0..20 {
            let n = 2 + (rng.random::<u32>() % 15) as usize;
            let mut alphas: Vec<Complex64> = (0..n - 1)
                .map(|_| {
                    Complex64::from_polar(
                        0.9 * rng.random::<f64>(),
                        TAU * rng.random::<f64>(),
                    )
                })
                .collect();
            alphas.push(Complex64::from_polar(1.0, TAU * rng.random::<f64>()));
            let angles = unitary_cmv_angles(&alphas).unwrap();
            assert_eq!(angles.len(), n);
            let scale: f64 = alphas.iter().map(|a| 1.0 + a.norm()).product();
            for &eta in &angles {
                let (phi, _) = szego_evaluate_slice(&alphas, Complex64::from_polar(1.0, eta));
                assert!(phi.norm() < 1e-7 * scale, "|Phi_n(root)| = {}", phi.norm());
            }
        }
    }
}
