//! Szegő recursion machinery: orthogonal polynomial evaluation, Prüfer
//! phases, and the log-product form of the characteristic polynomial on the
//! unit circle.
//!
//! Phase conventions. Two related trajectories appear:
//!
//! - [`prufer_phases`] iterates `psi_{k+1} = psi_k + theta - 2 Im log(1 -
//!   alpha_k e^{i psi_k})` from `psi_0 = 0`. At `theta = pi` this yields
//!   `psi_k = k pi`.
//! - The factors of `Phi_m*(e^{i theta}) = prod_k (1 - alpha_k B_k)` consume
//!   the phase of the Blaschke quotient `B_k = z Phi_k / Phi_k*`, which obeys
//!   the *same* update rule but starts at `B_0 = z`, i.e. the trajectory is
//!   seeded at `theta` instead of 0. [`log_char_product`] uses this seed; that
//!   is what makes `exp(T + iS) = Phi_m*(e^{i theta})` hold exactly.
//!
//! Every logarithm is the principal branch. For an interior coefficient the
//! factor `1 - alpha e^{i psi}` has strictly positive real part, so each
//! imaginary part lies in (-pi/2, pi/2) and the branch is unambiguous; a
//! unimodular coefficient keeps `Re >= 0` and only the exact zero is
//! rejected.

use std::borrow::Cow;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// Smallest factor modulus accepted before the statistic is declared
/// singular (the evaluation point collided with an eigenvalue).
pub const SINGULAR_FACTOR_TOL: f64 = 1e-12;

/// Which model a coefficient sequence parametrizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    /// Complex coefficients in the closed unit disk; a circular-model
    /// sequence carries one unimodular coefficient (first in the sampling
    /// order, last in the matrix order).
    Circular,
    /// Real coefficients in (-1, 1) with the implicit boundary convention
    /// `alpha_{-1} = alpha_{2n-1} = -1`.
    RealJacobi,
}

/// Ordered Verblunsky coefficients `alpha_0 .. alpha_{m-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerblunskySequence {
    values: Vec<Complex64>,
    kind: SequenceKind,
}

impl VerblunskySequence {
    /// A circular-model sequence. Coefficients must lie in the closed disk.
    pub fn circular(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::ParameterDomain("empty coefficient sequence".into()));
        }
        for (k, a) in values.iter().enumerate() {
            if !(a.norm_sqr() <= 1.0 + 1e-12) || !a.is_finite() {
                return Err(Error::ParameterDomain(format!(
                    "|alpha_{k}| = {} > 1 in circular sequence",
                    a.norm()
                )));
            }
        }
        Ok(Self { values, kind: SequenceKind::Circular })
    }

    /// A real-Jacobi sequence of the `2n-1` interior coefficients. The
    /// boundary values `alpha_{-1} = alpha_{2n-1} = -1` are implicit.
    pub fn real_jacobi(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() || values.len() % 2 == 0 {
            return Err(Error::ParameterDomain(format!(
                "real-Jacobi sequence needs an odd number (2n-1) of interior coefficients, got {}",
                values.len()
            )));
        }
        for (k, a) in values.iter().enumerate() {
            if !(a.abs() < 1.0) {
                return Err(Error::ParameterDomain(format!(
                    "|alpha_{k}| = {} >= 1 in real-Jacobi sequence",
                    a.abs()
                )));
            }
        }
        Ok(Self {
            values: values.into_iter().map(|a| Complex64::new(a, 0.0)).collect(),
            kind: SequenceKind::RealJacobi,
        })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    /// The stored coefficients (without the implicit Jacobi boundary).
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of ensemble points: `m` for circular, `n = (m+1)/2` for
    /// real-Jacobi.
    pub fn point_count(&self) -> usize {
        match self.kind {
            SequenceKind::Circular => self.values.len(),
            SequenceKind::RealJacobi => (self.values.len() + 1) / 2,
        }
    }

    /// Coefficients consumed by the Szegő recursion: for a Jacobi sequence
    /// this appends the boundary `alpha_{2n-1} = -1`, giving the 2n
    /// coefficients of `Phi_{2n}`.
    pub fn szego_coefficients(&self) -> Cow<'_, [Complex64]> {
        match self.kind {
            SequenceKind::Circular => Cow::Borrowed(&self.values),
            SequenceKind::RealJacobi => {
                let mut full = self.values.clone();
                full.push(Complex64::new(-1.0, 0.0));
                Cow::Owned(full)
            }
        }
    }

    /// Same coefficients in reverse order (used by the CMV matrix route,
    /// which wants the unimodular coefficient last).
    pub fn reversed(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self { values, kind: self.kind }
    }

    /// rho_k = sqrt(1 - |alpha_k|^2).
    pub fn rho(&self, k: usize) -> f64 {
        (1.0 - self.values[k].norm_sqr()).max(0.0).sqrt()
    }
}

/// Continuous Prüfer phases `psi_0 .. psi_m` at a fixed angle.
#[derive(Debug, Clone, PartialEq)]
pub struct PruferTrajectory {
    pub theta: f64,
    pub psis: Vec<f64>,
}

/// Evaluate `(Phi_m(z), Phi_m*(z))` by the coupled Szegő recursion
/// `Phi_{k+1} = z Phi_k - conj(alpha_k) Phi_k*`,
/// `Phi*_{k+1} = Phi_k* - z alpha_k Phi_k` from `Phi_0 = Phi_0* = 1`.
///
/// For a real-Jacobi sequence the implicit boundary coefficient is included,
/// so the result is `Phi_{2n}`.
pub fn szego_evaluate(alphas: &VerblunskySequence, z: Complex64) -> (Complex64, Complex64) {
    szego_evaluate_slice(&alphas.szego_coefficients(), z)
}

/// Szegő recursion over raw coefficients.
pub fn szego_evaluate_slice(alphas: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut phi = Complex64::new(1.0, 0.0);
    let mut phi_star = Complex64::new(1.0, 0.0);
    for a in alphas {
        let next = z * phi - a.conj() * phi_star;
        phi_star -= z * a * phi;
        phi = next;
    }
    (phi, phi_star)
}

/// The literal Prüfer recursion `psi_0 = 0`,
/// `psi_{k+1} = psi_k + theta - 2 Im log(1 - alpha_k e^{i psi_k})`.
///
/// Consumes the stored coefficients only (not the Jacobi boundary); every
/// consumed coefficient must be strictly interior.
pub fn prufer_phases(alphas: &VerblunskySequence, theta: f64) -> Result<PruferTrajectory> {
    let mut psis = Vec::with_capacity(alphas.len() + 1);
    let mut psi = KahanSum::new(0.0);
    psis.push(0.0);
    for (k, a) in alphas.values().iter().enumerate() {
        if a.norm_sqr() >= 1.0 {
            return Err(Error::SingularPhase { index: k, modulus: a.norm() });
        }
        let factor = Complex64::new(1.0, 0.0) - a * Complex64::from_polar(1.0, psi.value());
        psi.add(theta - 2.0 * factor.arg());
        psis.push(psi.value());
    }
    Ok(PruferTrajectory { theta, psis })
}

/// Streaming accumulator for `sum_k log(1 - alpha_k B_k(e^{i theta}))`.
///
/// Tracks the Blaschke phase (seeded at `theta`) and compensated partial sums
/// of the real and imaginary parts, so callers can push coefficients one at a
/// time and snapshot the partial statistic at any prefix length.
#[derive(Debug, Clone)]
pub struct LogProductAccumulator {
    theta: f64,
    eta: KahanSum,
    re: KahanSum,
    im: KahanSum,
    count: usize,
}

impl LogProductAccumulator {
    pub fn new(theta: f64) -> Self {
        Self {
            theta,
            eta: KahanSum::new(theta),
            re: KahanSum::new(0.0),
            im: KahanSum::new(0.0),
            count: 0,
        }
    }

    /// Absorb one coefficient: add `log(1 - alpha e^{i eta})` and advance the
    /// phase. Fails if the factor vanishes (statistic at an eigenvalue).
    #[inline]
    pub fn push(&mut self, alpha: Complex64) -> Result<()> {
        let factor = Complex64::new(1.0, 0.0) - alpha * Complex64::from_polar(1.0, self.eta.value());
        let norm_sqr = factor.norm_sqr();
        if norm_sqr < SINGULAR_FACTOR_TOL * SINGULAR_FACTOR_TOL {
            return Err(Error::SingularStatistic { index: self.count, modulus: norm_sqr.sqrt() });
        }
        let arg = factor.arg();
        self.re.add(0.5 * norm_sqr.ln());
        self.im.add(arg);
        self.eta.add(self.theta - 2.0 * arg);
        self.count += 1;
        Ok(())
    }

    /// Partial sum `T + iS` over the coefficients pushed so far.
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    /// Value the sum would take if `alpha` were appended, without advancing.
    pub fn peek_with(&self, alpha: Complex64) -> Result<Complex64> {
        let factor = Complex64::new(1.0, 0.0) - alpha * Complex64::from_polar(1.0, self.eta.value());
        let norm_sqr = factor.norm_sqr();
        if norm_sqr < SINGULAR_FACTOR_TOL * SINGULAR_FACTOR_TOL {
            return Err(Error::SingularStatistic { index: self.count, modulus: norm_sqr.sqrt() });
        }
        Ok(self.value() + Complex64::new(0.5 * norm_sqr.ln(), factor.arg()))
    }

    /// Current Blaschke phase (the phase the next factor will consume).
    pub fn phase(&self) -> f64 {
        self.eta.value()
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

/// `T + iS = sum_k log(1 - alpha_k B_k(e^{i theta}))` over the sequence, with
/// the per-term principal branch; `exp(T + iS) = Phi_m*(e^{i theta})`.
///
/// For a real-Jacobi sequence the sum includes the boundary term
/// `log(1 + e^{i eta_{2n-1}})`.
pub fn log_char_product(alphas: &VerblunskySequence, theta: f64) -> Result<Complex64> {
    let mut acc = LogProductAccumulator::new(theta);
    for a in alphas.szego_coefficients().iter() {
        acc.push(*a)?;
    }
    Ok(acc.value())
}
