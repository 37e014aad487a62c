//! Circular and Jacobi beta-ensemble sampling, the log
//! characteristic-polynomial linear statistic by two routes, centering for
//! the Jacobi CLT, and samplers for the equal-in-law product forms.
//!
//! Coefficient ordering: the sampling order puts the boundary-like
//! coefficient first (`alpha_0` uniform on the circle; the eigenvalue law is
//! invariant under relabelling). The CMV construction instead needs the
//! unimodular coefficient last, so the matrix route reverses the sequence
//! before building the matrix. Per-draw route-identity tests must therefore
//! feed the same ordering to both routes; equality of the two orderings in
//! law is covered by the statistical acceptance tests.

use num_complex::Complex64;
use rand::Rng;

use crate::distributions::{sample_beta01, sample_beta_sym, sample_theta, BetaSymParams};
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::matrix_models::{build_cmv, build_jacobi, eig_tridiag, eig_unitary_cmv};
use crate::opuc::{log_char_product, SequenceKind, VerblunskySequence, SINGULAR_FACTOR_TOL};

const PI: f64 = std::f64::consts::PI;
const TAU: f64 = std::f64::consts::TAU;

/// Which ensemble a specification describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnsembleKind {
    Circular,
    Jacobi { a: f64, b: f64 },
}

/// An ensemble instance: kind, number of points, inverse temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub n: usize,
    pub beta: f64,
}

impl EnsembleSpec {
    pub fn circular(n: usize, beta: f64) -> Result<Self> {
        if n == 0 || !(beta > 0.0) {
            return Err(Error::ParameterDomain(format!(
                "circular ensemble needs n >= 1 and beta > 0, got n={n}, beta={beta}"
            )));
        }
        Ok(Self { kind: EnsembleKind::Circular, n, beta })
    }

    pub fn jacobi(n: usize, beta: f64, a: f64, b: f64) -> Result<Self> {
        if n == 0 || !(beta > 0.0) || !(a > -1.0) || !(b > -1.0) {
            return Err(Error::ParameterDomain(format!(
                "Jacobi ensemble needs n >= 1, beta > 0 and a, b > -1, got n={n}, beta={beta}, a={a}, b={b}"
            )));
        }
        Ok(Self { kind: EnsembleKind::Jacobi { a, b }, n, beta })
    }
}

/// One draw of ensemble points: angles in [0, 2pi) for circular, reals in
/// [-2, 2] for Jacobi.
#[derive(Debug, Clone)]
pub struct PointSample {
    pub spec: EnsembleSpec,
    pub points: Vec<f64>,
}

impl PointSample {
    /// `sum_k log(1 - e^{-i(theta - eta_k)})` over circular points, per-term
    /// principal branch.
    pub fn circular_log_statistic(&self, theta: f64) -> Result<Complex64> {
        let mut re = KahanSum::new(0.0);
        let mut im = KahanSum::new(0.0);
        for (k, &eta) in self.points.iter().enumerate() {
            let factor = Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, eta - theta);
            if factor.norm_sqr() < SINGULAR_FACTOR_TOL * SINGULAR_FACTOR_TOL {
                return Err(Error::SingularStatistic { index: k, modulus: factor.norm() });
            }
            re.add(0.5 * factor.norm_sqr().ln());
            im.add(factor.arg());
        }
        Ok(Complex64::new(re.value(), im.value()))
    }

    /// `sum_k log(e - x_k)` over Jacobi points, per-term principal branch
    /// (each term is real or real + i pi).
    pub fn jacobi_log_statistic(&self, e: f64) -> Result<Complex64> {
        let mut re = KahanSum::new(0.0);
        let mut negatives = 0usize;
        for (k, &x) in self.points.iter().enumerate() {
            let d = e - x;
            if d.abs() < SINGULAR_FACTOR_TOL {
                return Err(Error::SingularStatistic { index: k, modulus: d.abs() });
            }
            re.add(d.abs().ln());
            if d < 0.0 {
                negatives += 1;
            }
        }
        Ok(Complex64::new(re.value(), negatives as f64 * PI))
    }
}

/// Reduce an angle to the principal interval (-pi, pi].
pub fn principal_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Which route produced a statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Eigenvalue,
    Recursion,
}

/// The linear statistic `Z_n` at one spectral angle, raw and centered.
#[derive(Debug, Clone, Copy)]
pub struct LinearStatisticResult {
    pub theta: f64,
    pub n: usize,
    pub raw: Complex64,
    pub centered: Complex64,
    pub route: Route,
}

/// Shape parameters of the k-th Jacobi coefficient law:
/// even k: `B(k beta/4 + a + 1, k beta/4 + b + 1)`,
/// odd k: `B((k-1) beta/4 + a + b + 2, (k+1) beta/4)`.
pub fn jbe_coefficient_params(k: usize, beta: f64, a: f64, b: f64) -> BetaSymParams {
    let k = k as f64;
    let (s, t) = if (k as usize) % 2 == 0 {
        (k / 4.0 * beta + a + 1.0, k / 4.0 * beta + b + 1.0)
    } else {
        ((k - 1.0) / 4.0 * beta + a + b + 2.0, (k + 1.0) / 4.0 * beta)
    };
    BetaSymParams::new(s, t).expect("positive shapes for beta > 0, a,b > -1")
}

/// Draw the n circular-model coefficients, `alpha_k ~ Theta_{beta k + 1}`
/// (so `alpha_0` is uniform on the circle and the rest are interior).
pub fn sample_cbe_alphas<R: Rng + ?Sized>(
    n: usize,
    beta: f64,
    rng: &mut R,
) -> Result<VerblunskySequence> {
    if n == 0 || !(beta > 0.0) {
        return Err(Error::ParameterDomain(format!("need n >= 1 and beta > 0, got {n}, {beta}")));
    }
    let values: Result<Vec<Complex64>> =
        (0..n).map(|k| sample_theta(beta * k as f64 + 1.0, rng)).collect();
    VerblunskySequence::circular(values?)
}

/// Draw the 2n-1 interior Jacobi-model coefficients with the even/odd laws
/// above; the boundary convention `alpha_{-1} = alpha_{2n-1} = -1` is
/// implicit in the returned sequence.
pub fn sample_jbe_alphas<R: Rng + ?Sized>(
    n: usize,
    beta: f64,
    a: f64,
    b: f64,
    rng: &mut R,
) -> Result<VerblunskySequence> {
    EnsembleSpec::jacobi(n, beta, a, b)?;
    let mut values = Vec::with_capacity(2 * n - 1);
    for k in 0..2 * n - 1 {
        let params = jbe_coefficient_params(k, beta, a, b);
        // The law is absolutely continuous, so an exact-boundary draw is a
        // floating-point null event; redraw it to keep coefficients interior.
        let mut x = sample_beta_sym(params, rng);
        let mut tries = 0;
        while x.abs() >= 1.0 && tries < 64 {
            x = sample_beta_sym(params, rng);
            tries += 1;
        }
        values.push(x.clamp(-1.0 + f64::EPSILON, 1.0 - f64::EPSILON));
    }
    VerblunskySequence::real_jacobi(values)
}

/// Eigenvalue angles of one circular-ensemble draw, via the CMV matrix built
/// from the reversed coefficients (unimodular coefficient last).
pub fn cbe_points<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Result<PointSample> {
    if spec.kind != EnsembleKind::Circular {
        return Err(Error::ParameterDomain("cbe_points needs a circular spec".into()));
    }
    let alphas = sample_cbe_alphas(spec.n, spec.beta, rng)?;
    let c = build_cmv(&alphas.reversed())?;
    let points = eig_unitary_cmv(&c)?;
    Ok(PointSample { spec: *spec, points })
}

/// Points of one Jacobi-ensemble draw, via the tridiagonal matrix model.
pub fn jbe_points<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Result<PointSample> {
    let EnsembleKind::Jacobi { a, b } = spec.kind else {
        return Err(Error::ParameterDomain("jbe_points needs a Jacobi spec".into()));
    };
    let alphas = sample_jbe_alphas(spec.n, spec.beta, a, b, rng)?;
    let j = build_jacobi(&alphas)?;
    let points = eig_tridiag(&j)?;
    Ok(PointSample { spec: *spec, points })
}

/// Circular statistic from an explicit point sample (eigenvalue route).
pub fn linear_statistic_circular_points(
    sample: &PointSample,
    theta: f64,
) -> Result<LinearStatisticResult> {
    let raw = sample.circular_log_statistic(theta)?;
    Ok(LinearStatisticResult {
        theta,
        n: sample.points.len(),
        raw,
        centered: raw,
        route: Route::Eigenvalue,
    })
}

/// Circular statistic from coefficients (recursion route, O(n)).
///
/// The product recursion tracks `Phi_n*`, whose boundary value is the
/// complex conjugate of `prod_k (1 - e^{-i(theta - eta_k)})`; the result is
/// conjugated so that both routes agree per draw, not merely in law.
pub fn linear_statistic_circular_recursion(
    alphas: &VerblunskySequence,
    theta: f64,
) -> Result<LinearStatisticResult> {
    if alphas.kind() != SequenceKind::Circular {
        return Err(Error::ParameterDomain("recursion route needs a circular sequence".into()));
    }
    let raw = log_char_product(alphas, theta)?.conj();
    Ok(LinearStatisticResult {
        theta,
        n: alphas.len(),
        raw,
        centered: raw,
        route: Route::Recursion,
    })
}

/// Jacobi statistic `Z_n(2 cos theta)` from coefficients:
/// `raw = -i n theta + sum_{k=0}^{2n-1} log(1 - alpha_k e^{i eta_k})`
/// including the boundary factor `1 + e^{i eta_{2n-1}}`.
///
/// At the endpoints theta = 0, pi every phase is an exact multiple of pi and
/// the sum is evaluated in closed parity form.
pub fn linear_statistic_jacobi(
    alphas: &VerblunskySequence,
    theta: f64,
) -> Result<LinearStatisticResult> {
    if alphas.kind() != SequenceKind::RealJacobi {
        return Err(Error::ParameterDomain("Jacobi statistic needs a real-Jacobi sequence".into()));
    }
    let n = alphas.point_count();
    let shift = Complex64::new(0.0, -(n as f64) * theta);

    let raw = if theta == 0.0 || theta == PI {
        // e^{i eta_k(theta)} = (-1)^{k+1} at pi and +1 at 0; the boundary
        // factor is 2 in both cases.
        let mut sum = KahanSum::new(std::f64::consts::LN_2);
        for (k, alpha) in alphas.values().iter().enumerate() {
            let sigma = if theta == 0.0 || k % 2 == 1 { 1.0 } else { -1.0 };
            sum.add((1.0 - alpha.re * sigma).ln());
        }
        shift + Complex64::new(sum.value(), 0.0)
    } else {
        shift + log_char_product(alphas, theta)?
    };

    Ok(LinearStatisticResult {
        theta,
        n,
        raw,
        centered: raw, // caller subtracts centering_term when needed
        route: Route::Recursion,
    })
}

/// Deterministic centering `E_n(theta) = (C_0 delta_0 + C_pi delta_pi) log n
/// - i n theta` with `C_0 = (2a+1)/beta - 1/2`, `C_pi = (2b+1)/beta - 1/2`.
pub fn centering_term(theta: f64, n: usize, spec: &EnsembleSpec) -> Result<Complex64> {
    let EnsembleKind::Jacobi { a, b } = spec.kind else {
        return Err(Error::ParameterDomain(
            "centering is defined for the Jacobi ensemble (circular statistics are already centered)".into(),
        ));
    };
    let log_n = (n as f64).ln();
    let mut re = 0.0;
    if theta == 0.0 {
        re += ((2.0 * a + 1.0) / spec.beta - 0.5) * log_n;
    }
    if theta == PI {
        re += ((2.0 * b + 1.0) / spec.beta - 0.5) * log_n;
    }
    Ok(Complex64::new(re, -(n as f64) * theta))
}

/// Apply the centering to a raw Jacobi statistic.
pub fn center_jacobi_statistic(
    result: &LinearStatisticResult,
    spec: &EnsembleSpec,
) -> Result<LinearStatisticResult> {
    let centering = centering_term(result.theta, result.n, spec)?;
    Ok(LinearStatisticResult { centered: result.raw - centering, ..*result })
}

/// One sample of the circular product law
/// `prod_{k=1}^n (1 + e^{i theta_k} sqrt(X_{k-1}))` with independent uniform
/// phases and `X_j ~ Beta01(1, j beta / 2)` (`X_0` is the point mass at 1).
pub fn theorem1_rhs_circular<R: Rng + ?Sized>(
    n: usize,
    beta: f64,
    rng: &mut R,
) -> Result<Complex64> {
    if n == 0 || !(beta > 0.0) {
        return Err(Error::ParameterDomain(format!("need n >= 1 and beta > 0, got {n}, {beta}")));
    }
    let mut product = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        let x = sample_beta01(1.0, (k - 1) as f64 * beta / 2.0, rng)?;
        let phase: f64 = rng.random::<f64>() * TAU;
        product *= Complex64::new(1.0, 0.0) + Complex64::from_polar(x.sqrt(), phase);
    }
    Ok(product)
}

/// Sign choice in the Jacobi product law (the spectral edge +2 or -2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// One sample of the Jacobi product law
/// `2 prod_{k=0}^{2n-2} (1 - (\pm 1)^{k+1} X_k)` with `X_k` distributed like
/// the k-th Verblunsky coefficient.
pub fn theorem1_rhs_jacobi<R: Rng + ?Sized>(
    n: usize,
    beta: f64,
    a: f64,
    b: f64,
    sign: Sign,
    rng: &mut R,
) -> Result<f64> {
    EnsembleSpec::jacobi(n, beta, a, b)?;
    let mut log_product = KahanSum::new(std::f64::consts::LN_2);
    for k in 0..2 * n - 1 {
        let x = sample_beta_sym(jbe_coefficient_params(k, beta, a, b), rng);
        // (+1)^{k+1} = 1; (-1)^{k+1} alternates starting at -1 for k = 0.
        let s = match sign {
            Sign::Plus => 1.0,
            Sign::Minus => {
                if k % 2 == 0 {
                    -1.0
                } else {
                    1.0
                }
            }
        };
        log_product.add((1.0 - s * x).ln());
    }
    Ok(log_product.value().exp())
}
