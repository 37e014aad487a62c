//! Independent ground truth: direct density evaluation, tiny-n rejection
//! sampling from the joint ensemble densities, partition-function checks, and
//! quadrature adjudication of the one-coefficient moment formulas.
//!
//! Everything here deliberately avoids the recursion/matrix machinery it is
//! used to check: densities come straight from the Vandermonde form, samples
//! from rejection against product proposals, and moments from deterministic
//! quadrature.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Uniform};

use crate::distributions::{sample_beta_sym, BetaSymParams, ThetaParams};
use crate::ensembles::{cbe_points, jbe_points, EnsembleKind, EnsembleSpec, PointSample};
use crate::error::{Error, Result};
use crate::quad::{composite_gl, graded_gl_toward_zero, integrate_with_beta_weight};

const TAU: f64 = std::f64::consts::TAU;

/// Attempt budget per accepted sample; exhausting it signals acceptance-rate
/// collapse.
const MAX_REJECTION_ATTEMPTS: usize = 5_000_000;

/// An ensemble specification wrapped for oracle use. Evaluation works at any
/// n; the sampling operations reject n > 3.
#[derive(Debug, Clone, Copy)]
pub struct DensitySpec {
    spec: EnsembleSpec,
}

impl DensitySpec {
    pub fn new(spec: EnsembleSpec) -> Self {
        Self { spec }
    }

    pub fn spec(&self) -> &EnsembleSpec {
        &self.spec
    }
}

/// Unnormalized joint density at a point configuration, evaluated in log
/// space and exponentiated.
pub fn density_eval(points: &[f64], spec: &DensitySpec) -> Result<f64> {
    let s = spec.spec;
    if points.len() != s.n {
        return Err(Error::ParameterDomain(format!(
            "expected {} points, got {}",
            s.n,
            points.len()
        )));
    }
    let mut log_density = 0.0f64;
    match s.kind {
        EnsembleKind::Circular => {
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    let chord = 2.0 * ((points[i] - points[j]) / 2.0).sin().abs();
                    log_density += s.beta * chord.ln();
                }
            }
        }
        EnsembleKind::Jacobi { a, b } => {
            for (i, &x) in points.iter().enumerate() {
                if !(-2.0..=2.0).contains(&x) {
                    return Err(Error::ParameterDomain(format!("point {x} outside [-2, 2]")));
                }
                if (x == 2.0 && a < 0.0) || (x == -2.0 && b < 0.0) {
                    return Err(Error::InfiniteDensity(format!(
                        "edge singularity at x = {x} with a = {a}, b = {b}"
                    )));
                }
                log_density += a * (2.0 - x).ln() + b * (2.0 + x).ln();
                for &y in &points[i + 1..] {
                    log_density += s.beta * (x - y).abs().ln();
                }
            }
        }
    }
    Ok(log_density.exp())
}

/// Closed-form circular partition function
/// `Z_n^beta = Gamma(n beta/2 + 1) / Gamma(beta/2 + 1)^n`.
pub fn partition_circular(n: usize, beta: f64) -> f64 {
    let lg = |x: f64| libm::lgamma(x);
    (lg(n as f64 * beta / 2.0 + 1.0) - n as f64 * lg(beta / 2.0 + 1.0)).exp()
}

/// Trapezoidal estimate of the normalized integral
/// `int |Delta|^beta d eta / (2 pi)^n` for n <= 2; converges to
/// [`partition_circular`] as the grid is refined.
pub fn quadrature_partition_circular(n: usize, beta: f64, gridsize: usize) -> Result<f64> {
    if n == 0 || n > 2 {
        return Err(Error::ParameterDomain(format!("quadrature partition needs n in {{1, 2}}, got {n}")));
    }
    if gridsize < 2 {
        return Err(Error::ParameterDomain("gridsize must be at least 2".into()));
    }
    if n == 1 {
        // Empty Vandermonde product: the normalized integrand is 1.
        return Ok(1.0);
    }
    // Periodic trapezoid = rectangle rule on [0, 2pi)^2.
    let h = TAU / gridsize as f64;
    let mut acc = 0.0;
    for i in 0..gridsize {
        for j in 0..gridsize {
            let chord = 2.0 * ((i as f64 - j as f64) * h / 2.0).sin().abs();
            if chord > 0.0 {
                acc += (beta * chord.ln()).exp();
            }
        }
    }
    Ok(acc / (gridsize * gridsize) as f64)
}

/// Exact sample from the normalized joint density, by rejection from a
/// product proposal: uniform angles for the circular ensemble, the
/// per-coordinate pushforward `x = 2 alpha`, `alpha ~ B(a+1, b+1)` for the
/// Jacobi ensemble (whose density cancels the edge weights exactly, so only
/// `|Delta|^beta` remains in the acceptance ratio).
pub fn rejection_sample<R: Rng + ?Sized>(spec: &DensitySpec, rng: &mut R) -> Result<PointSample> {
    let s = spec.spec;
    if s.n > 3 {
        return Err(Error::ParameterDomain(format!(
            "rejection sampling is limited to n <= 3, got n = {}",
            s.n
        )));
    }
    // Analytic suprema of |Delta| over the support (n <= 3), plus a small
    // safety margin on the log bound.
    let log_sup_delta = match (s.kind, s.n) {
        (_, 1) => 0.0,
        (EnsembleKind::Circular, n) => (n as f64 / 2.0) * (n as f64).ln(),
        (EnsembleKind::Jacobi { .. }, 2) => 4.0f64.ln(),
        (EnsembleKind::Jacobi { .. }, 3) => 16.0f64.ln(),
        _ => unreachable!(),
    };
    let log_bound = s.beta * log_sup_delta + 1e-2;

    let uniform_angle = Uniform::new(0.0, TAU).expect("valid range");
    let mut attempts = 0usize;
    loop {
        attempts += 1;
        if attempts > MAX_REJECTION_ATTEMPTS {
            return Err(Error::Configuration(format!(
                "rejection acceptance rate below {:.1e} for {:?} (n = {}, beta = {})",
                1.0 / MAX_REJECTION_ATTEMPTS as f64,
                s.kind,
                s.n,
                s.beta
            )));
        }
        let mut points: Vec<f64> = match s.kind {
            EnsembleKind::Circular => (0..s.n).map(|_| uniform_angle.sample(rng)).collect(),
            EnsembleKind::Jacobi { a, b } => {
                let params = BetaSymParams::new(a + 1.0, b + 1.0)?;
                (0..s.n).map(|_| 2.0 * sample_beta_sym(params, rng)).collect()
            }
        };
        let mut log_ratio = 0.0;
        for i in 0..s.n {
            for j in i + 1..s.n {
                let sep = match s.kind {
                    EnsembleKind::Circular => {
                        2.0 * ((points[i] - points[j]) / 2.0).sin().abs()
                    }
                    EnsembleKind::Jacobi { .. } => (points[i] - points[j]).abs(),
                };
                log_ratio += s.beta * sep.max(f64::MIN_POSITIVE).ln();
            }
        }
        let u: f64 = rng.random();
        if u.ln() < log_ratio - log_bound {
            points.sort_by(|a, b| a.partial_cmp(b).unwrap());
            return Ok(PointSample { spec: s, points });
        }
    }
}

/// Expectation of `g` under the symmetric Beta law on [-1, 1], by graded
/// Gauss-Legendre quadrature with the endpoint weights absorbed exactly by
/// the substitutions `w = (1-x)^s` and `v = (1+x)^t`.
pub fn beta_sym_expectation<F: Fn(f64) -> f64>(g: F, params: BetaSymParams) -> f64 {
    let (s, t) = (params.s(), params.t());
    let lg = |x: f64| libm::lgamma(x);
    let log_norm = (1.0 - s - t) * 2.0f64.ln() + lg(s + t) - lg(s) - lg(t);
    let norm = log_norm.exp();

    // x in [0, 1]: w = (1-x)^s absorbs (1-x)^{s-1}.
    let right = graded_gl_toward_zero(
        |w| {
            let x = 1.0 - w.powf(1.0 / s);
            g(x) * (1.0 + x).powf(t - 1.0) / s
        },
        16,
        60,
    );
    // x in [-1, 0]: v = (1+x)^t absorbs (1+x)^{t-1}.
    let left = graded_gl_toward_zero(
        |v| {
            let x = v.powf(1.0 / t) - 1.0;
            g(x) * (1.0 - x).powf(s - 1.0) / t
        },
        16,
        60,
    );
    norm * (right + left)
}

/// Expectation of `g(alpha)` under Theta_nu, by tensor quadrature in polar
/// coordinates with the radial Beta weight absorbed exactly.
pub fn theta_expectation<F: Fn(Complex64) -> f64>(g: F, params: ThetaParams) -> f64 {
    let nu = params.nu();
    let angular = |u: f64| {
        composite_gl(|t| g(Complex64::from_polar(u.sqrt(), t)), 0.0, TAU, 16, 16) / TAU
    };
    if nu == 1.0 {
        // Point mass on the circle.
        return angular(1.0);
    }
    integrate_with_beta_weight(angular, (nu - 1.0) / 2.0)
}

/// Distribution argument of the moment oracle.
#[derive(Debug, Clone, Copy)]
pub enum UpsilonDist {
    /// Circular coefficient law; `Upsilon~(psi, alpha) = -alpha e^{i psi}`.
    Theta(ThetaParams),
    /// Jacobi coefficient law; `Upsilon~(psi, alpha) = -(alpha - E alpha) e^{i psi}`.
    BetaSym(BetaSymParams),
}

/// Which component product to integrate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentPair {
    ReRe,
    ReIm,
    ImIm,
}

/// `E[c_1(psi, alpha) c_2(phi, alpha)]` where `c_1, c_2` are the requested
/// real/imaginary components of the centered one-step increment, computed by
/// deterministic quadrature (2-D polar over the disk, 1-D over [-1, 1]).
pub fn upsilon_moment_oracle(dist: UpsilonDist, psi: f64, phi: f64, pair: MomentPair) -> f64 {
    match dist {
        UpsilonDist::Theta(params) => {
            let component = move |alpha: Complex64, angle: f64, want_im: bool| -> f64 {
                let u = -alpha * Complex64::from_polar(1.0, angle);
                if want_im {
                    u.im
                } else {
                    u.re
                }
            };
            let (im1, im2) = pair_flags(pair);
            theta_expectation(
                |alpha| component(alpha, psi, im1) * component(alpha, phi, im2),
                params,
            )
        }
        UpsilonDist::BetaSym(params) => {
            let mean = beta_sym_expectation(|x| x, params);
            let component = move |x: f64, angle: f64, want_im: bool| -> f64 {
                let u = -(x - mean) * Complex64::from_polar(1.0, angle);
                if want_im {
                    u.im
                } else {
                    u.re
                }
            };
            let (im1, im2) = pair_flags(pair);
            beta_sym_expectation(|x| component(x, psi, im1) * component(x, phi, im2), params)
        }
    }
}

fn pair_flags(pair: MomentPair) -> (bool, bool) {
    match pair {
        MomentPair::ReRe => (false, false),
        MomentPair::ReIm => (false, true),
        MomentPair::ImIm => (true, true),
    }
}

/// Monte Carlo estimate of a point-sample functional.
#[derive(Debug, Clone, Copy)]
pub struct McEstimate {
    pub estimate: f64,
    pub standard_error: f64,
    pub nonfinite: usize,
}

/// Sample mean and standard error of `f` over independent ensemble draws
/// (via the matrix models). Non-finite values of `f` are excluded and
/// counted.
pub fn mc_expectation<R, F>(
    f: F,
    spec: &EnsembleSpec,
    trials: usize,
    rng: &mut R,
) -> Result<McEstimate>
where
    R: Rng + ?Sized,
    F: Fn(&PointSample) -> f64,
{
    if trials < 2 {
        return Err(Error::ParameterDomain("need at least 2 trials".into()));
    }
    let mut values = Vec::with_capacity(trials);
    let mut nonfinite = 0usize;
    for _ in 0..trials {
        let sample = match spec.kind {
            EnsembleKind::Circular => cbe_points(spec, rng)?,
            EnsembleKind::Jacobi { .. } => jbe_points(spec, rng)?,
        };
        let v = f(&sample);
        if v.is_finite() {
            values.push(v);
        } else {
            nonfinite += 1;
        }
    }
    if values.len() < 2 {
        return Err(Error::NumericalFailure("fewer than 2 finite functional values".into()));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok(McEstimate { estimate: mean, standard_error: (var / n).sqrt(), nonfinite })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{substream, Lane};
    use crate::stats::{kolmogorov_sf, ks_two_sample, SamplePool};
    use approx::assert_relative_eq;

    #[test]
    fn density_two_opposite_circular_points() {
        let spec = DensitySpec::new(EnsembleSpec::circular(2, 2.0).unwrap());
        let d = density_eval(&[0.0, std::f64::consts::PI], &spec).unwrap();
        assert_relative_eq!(d, 4.0, epsilon = 1e-12);
    }

    #[test]
    fn density_vanishes_at_coincident_points() {
        let spec = DensitySpec::new(EnsembleSpec::circular(3, 1.0).unwrap());
        let d = density_eval(&[1.0, 1.0, 2.0], &spec).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn density_jacobi_center_point() {
        let spec = DensitySpec::new(EnsembleSpec::jacobi(1, 2.0, 1.0, 1.0).unwrap());
        assert_relative_eq!(density_eval(&[0.0], &spec).unwrap(), 4.0);
    }

    #[test]
    fn density_jacobi_edge_singularity_flagged() {
        let spec = DensitySpec::new(EnsembleSpec::jacobi(1, 2.0, -0.5, 0.5).unwrap());
        assert!(matches!(density_eval(&[2.0], &spec), Err(Error::InfiniteDensity(_))));
        // Integrable edge with nonnegative exponent is fine.
        assert_eq!(density_eval(&[-2.0], &spec).unwrap(), 0.0);
    }

    #[test]
    fn partition_closed_forms() {
        assert_relative_eq!(partition_circular(1, 3.3), 1.0, epsilon = 1e-12);
        assert_relative_eq!(partition_circular(2, 2.0), 2.0, epsilon = 1e-12);
        assert_relative_eq!(partition_circular(3, 2.0), 6.0, epsilon = 1e-12);
        assert_relative_eq!(partition_circular(2, 4.0), 6.0, epsilon = 1e-12);
    }

    #[test]
    fn quadrature_partition_matches_gamma_formula() {
        assert_relative_eq!(quadrature_partition_circular(1, 2.0, 64).unwrap(), 1.0);
        let q2 = quadrature_partition_circular(2, 2.0, 2048).unwrap();
        assert!((q2 - 2.0).abs() < 1e-6, "beta=2: {q2}");
        for beta in [1.0, 4.0] {
            let q = quadrature_partition_circular(2, beta, 2048).unwrap();
            let z = partition_circular(2, beta);
            assert!((q - z).abs() < 1e-4, "beta={beta}: {q} vs {z}");
        }
        assert!(quadrature_partition_circular(3, 2.0, 64).is_err());
    }

    #[test]
    fn rejection_single_circular_point_is_uniform() {
        let spec = DensitySpec::new(EnsembleSpec::circular(1, 2.0).unwrap());
        let mut rng = substream(13, Lane(0), 0);
        let n = 20_000;
        let mut angles: Vec<f64> = (0..n)
            .map(|_| rejection_sample(&spec, &mut rng).unwrap().points[0])
            .collect();
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut d: f64 = 0.0;
        for (i, x) in angles.iter().enumerate() {
            let f = x / TAU;
            d = d.max((f - i as f64 / n as f64).abs()).max((i + 1) as f64 / n as f64 - f);
        }
        assert!(kolmogorov_sf((n as f64).sqrt() * d) >= 1e-3);
    }

    #[test]
    fn rejection_two_point_gap_has_sine_squared_density() {
        // For n=2, beta=2 the angle difference mod 2 pi has density
        // proportional to sin^2(d/2); the sorted linear difference d = p1 - p0
        // therefore carries the triangular square factor and its CDF is
        // F(d) = (2 pi d - d^2/2 - 2 pi sin d + d sin d + cos d - 1)/(2 pi^2).
        let spec = DensitySpec::new(EnsembleSpec::circular(2, 2.0).unwrap());
        let mut rng = substream(13, Lane(0), 1);
        let n = 8000;
        let mut gaps: Vec<f64> = (0..n)
            .map(|_| {
                let p = rejection_sample(&spec, &mut rng).unwrap().points;
                p[1] - p[0]
            })
            .collect();
        gaps.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let cdf = |x: f64| {
            (TAU * x - 0.5 * x * x - TAU * x.sin() + x * x.sin() + x.cos() - 1.0)
                / (2.0 * std::f64::consts::PI.powi(2))
        };
        let mut d: f64 = 0.0;
        for (i, x) in gaps.iter().enumerate() {
            let f = cdf(*x);
            d = d.max((f - i as f64 / n as f64).abs()).max((i + 1) as f64 / n as f64 - f);
        }
        let p = kolmogorov_sf((n as f64).sqrt() * d);
        assert!(p >= 1e-3, "gap KS p = {p}");
    }

    #[test]
    fn rejection_jacobi_matches_matrix_model_marginals() {
        // Light version of the oracle-equivalence acceptance check.
        let spec = EnsembleSpec::jacobi(2, 2.0, -0.5, -0.5).unwrap();
        let dspec = DensitySpec::new(spec);
        let mut rng = substream(13, Lane(0), 2);
        let trials = 1500;
        let mut rej = [Vec::new(), Vec::new()];
        let mut mat = [Vec::new(), Vec::new()];
        for _ in 0..trials {
            let r = rejection_sample(&dspec, &mut rng).unwrap();
            rej[0].push(r.points[0]);
            rej[1].push(r.points[1]);
            let m = jbe_points(&spec, &mut rng).unwrap();
            mat[0].push(m.points[0]);
            mat[1].push(m.points[1]);
        }
        for i in 0..2 {
            let (_, p) = ks_two_sample(
                &SamplePool::new(rej[i].clone(), "rejection").unwrap(),
                &SamplePool::new(mat[i].clone(), "matrix").unwrap(),
            )
            .unwrap();
            assert!(p >= 1e-3, "marginal {i}: KS p = {p}");
        }
    }

    #[test]
    fn rejection_reports_acceptance_collapse() {
        // The density concentrates on a Laplace window of width ~ 1/sqrt(beta)
        // around the antipodal configuration, so the acceptance rate only
        // collapses below 1/MAX_REJECTION_ATTEMPTS for very large beta.
        let spec = DensitySpec::new(EnsembleSpec::circular(2, 1e18).unwrap());
        let mut rng = substream(13, Lane(0), 3);
        assert!(matches!(rejection_sample(&spec, &mut rng), Err(Error::Configuration(_))));
    }

    #[test]
    fn beta_sym_quadrature_reproduces_moments() {
        for &(s, t) in &[(0.5, 0.5), (2.0, 3.0), (1.0, 7.5), (0.3, 4.0)] {
            let params = BetaSymParams::new(s, t).unwrap();
            assert_relative_eq!(beta_sym_expectation(|_| 1.0, params), 1.0, epsilon = 1e-9);
            assert_relative_eq!(beta_sym_expectation(|x| x, params), params.mean(), epsilon = 1e-9);
            assert_relative_eq!(
                beta_sym_expectation(|x| x * x, params),
                params.second_moment(),
                epsilon = 1e-9
            );
        }
    }

    #[test]
    fn circular_moments_differ_from_printed_constants_by_factor_two() {
        // Quadrature gives cos(psi-phi)/(nu+1) for ReRe/ImIm and
        // sin(phi-psi)/(nu+1) for ReIm; the printed lemma constants are off
        // by a factor of 2 in opposite directions.
        let params = ThetaParams::new(3.0).unwrap();
        let v = upsilon_moment_oracle(UpsilonDist::Theta(params), 0.7, 0.7, MomentPair::ReRe);
        assert_relative_eq!(v, 0.25, epsilon = 1e-8);

        let (psi, phi) = (0.9, 2.0);
        for &(nu, pair) in &[
            (1.5, MomentPair::ReRe),
            (3.0, MomentPair::ImIm),
            (7.0, MomentPair::ReRe),
            (25.0, MomentPair::ImIm),
        ] {
            let params = ThetaParams::new(nu).unwrap();
            let got = upsilon_moment_oracle(UpsilonDist::Theta(params), psi, phi, pair);
            let want = (psi - phi).cos() / (nu + 1.0);
            assert!((got - want).abs() < 1e-6, "nu={nu} {pair:?}: {got} vs {want}");
        }
        for &nu in &[1.5, 3.0, 12.0] {
            let params = ThetaParams::new(nu).unwrap();
            let got = upsilon_moment_oracle(UpsilonDist::Theta(params), psi, phi, MomentPair::ReIm);
            let want = (phi - psi).sin() / (nu + 1.0);
            assert!((got - want).abs() < 1e-6, "nu={nu} ReIm: {got} vs {want}");
        }
        // Orthogonal phases: ReRe moment vanishes when psi - phi = pi/2.
        let params = ThetaParams::new(4.0).unwrap();
        let v = upsilon_moment_oracle(
            UpsilonDist::Theta(params),
            1.2 + std::f64::consts::FRAC_PI_2,
            1.2,
            MomentPair::ReRe,
        );
        assert!(v.abs() < 1e-8);
    }

    #[test]
    fn theta_one_expectation_is_circle_average() {
        let params = ThetaParams::new(1.0).unwrap();
        let v = theta_expectation(|z| z.norm_sqr(), params);
        assert_relative_eq!(v, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn jacobi_moments_match_closed_forms() {
        // ReRe: Var/2 (cos(psi-phi) + cos(psi+phi)); ImIm: Var/2 (cos(psi-phi)
        // - cos(psi+phi)); ReIm: Var/2 (sin(psi+phi) - sin(psi-phi)).
        let mut rng = substream(13, Lane(0), 4);
        for _ in 0..20 {
            let s = 0.4 + 5.0 * rng.random::<f64>();
            let t = 0.4 + 5.0 * rng.random::<f64>();
            let psi = TAU * rng.random::<f64>();
            let phi = TAU * rng.random::<f64>();
            let params = BetaSymParams::new(s, t).unwrap();
            let half_var = crate::distributions::beta_sym_variance(params) / 2.0;
            let cases = [
                (MomentPair::ReRe, half_var * ((psi - phi).cos() + (psi + phi).cos())),
                (MomentPair::ImIm, half_var * ((psi - phi).cos() - (psi + phi).cos())),
                (MomentPair::ReIm, half_var * ((psi + phi).sin() - (psi - phi).sin())),
            ];
            for (pair, want) in cases {
                let got = upsilon_moment_oracle(UpsilonDist::BetaSym(params), psi, phi, pair);
                assert!(
                    (got - want).abs() < 1e-6,
                    "s={s:.3} t={t:.3} {pair:?}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn mc_expectation_trivial_functionals() {
        let spec = EnsembleSpec::circular(3, 2.0).unwrap();
        let mut rng = substream(13, Lane(0), 5);
        let one = mc_expectation(|_| 1.0, &spec, 50, &mut rng).unwrap();
        assert_eq!(one.estimate, 1.0);
        assert_eq!(one.standard_error, 0.0);

        let count = mc_expectation(|s| s.points.len() as f64, &spec, 50, &mut rng).unwrap();
        assert_eq!(count.estimate, 3.0);
        assert_eq!(count.standard_error, 0.0);
        assert_eq!(count.nonfinite, 0);
    }

    #[test]
    fn mc_expectation_matches_quadrature_second_moment() {
        // E |prod (1 - e^{-i(theta - eta_k)})|^2 = 3 for n=2, beta=2.
        let spec = EnsembleSpec::circular(2, 2.0).unwrap();
        let mut rng = substream(13, Lane(0), 6);
        let theta = 0.4;
        let est = mc_expectation(
            |s| (2.0 * s.circular_log_statistic(theta).unwrap().re).exp(),
            &spec,
            20_000,
            &mut rng,
        )
        .unwrap();
        assert!(
            (est.estimate - 3.0).abs() < 4.0 * est.standard_error,
            "{} +- {}",
            est.estimate,
            est.standard_error
        );
    }
}
