//! CMV and Jacobi matrix models built from Verblunsky coefficients, their
//! spectra, and the determinant / characteristic-polynomial identities.

mod cmv_eig;
mod dense;
mod tridiag;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::opuc::{szego_evaluate, SequenceKind, VerblunskySequence};

pub use tridiag::sturm_eigenvalues;

/// Largest unitarity defect accepted before a CMV matrix is rejected as
/// input to the spectral routines.
pub const UNITARITY_TOL: f64 = 1e-8;

/// A CMV matrix in both factored (C = L M) and dense form.
#[derive(Debug, Clone)]
pub struct CmvMatrix {
    n: usize,
    dense: Vec<Complex64>,
    factor_l: Vec<Complex64>,
    factor_m: Vec<Complex64>,
    alphas: VerblunskySequence,
}

impl CmvMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major dense entries.
    pub fn dense(&self) -> &[Complex64] {
        &self.dense
    }

    pub fn factor_l(&self) -> &[Complex64] {
        &self.factor_l
    }

    pub fn factor_m(&self) -> &[Complex64] {
        &self.factor_m
    }

    pub fn alphas(&self) -> &VerblunskySequence {
        &self.alphas
    }

    /// max |(C* C - I)_ij|.
    pub fn unitarity_defect(&self) -> f64 {
        dense::unitarity_defect(&self.dense, self.n)
    }

    pub fn trace(&self) -> Complex64 {
        dense::trace(&self.dense, self.n)
    }

    /// det(z I - C) by LU elimination on the dense form.
    pub fn char_poly_at(&self, z: Complex64) -> Complex64 {
        dense::char_poly_at(&self.dense, self.n, z)
    }

    pub fn determinant(&self) -> Complex64 {
        dense::det_lu(self.dense.clone(), self.n)
    }
}

/// Symmetric tridiagonal Jacobi matrix: diagonal `b_1..b_n`, positive
/// off-diagonal `a_1..a_{n-1}`.
#[derive(Debug, Clone)]
pub struct JacobiTridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl JacobiTridiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::ParameterDomain(format!(
                "need n >= 1 diagonal and n-1 off-diagonal entries, got {} and {}",
                diag.len(),
                offdiag.len()
            )));
        }
        if offdiag.iter().any(|a| !(*a > 0.0)) {
            return Err(Error::ParameterDomain("off-diagonal entries must be positive".into()));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// det(x I - J) by LU elimination on the dense embedding.
    pub fn char_poly_at(&self, x: Complex64) -> Complex64 {
        let n = self.n();
        let mut m = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            m[i * n + i] = Complex64::new(self.diag[i], 0.0);
            if i + 1 < n {
                m[i * n + i + 1] = Complex64::new(self.offdiag[i], 0.0);
                m[(i + 1) * n + i] = Complex64::new(self.offdiag[i], 0.0);
            }
        }
        dense::char_poly_at(&m, n, x)
    }
}

/// Build the CMV matrix C = L M from a circular coefficient sequence.
///
/// Block layout: `Xi_{-1} = [1]`, interior `Xi_k = [[conj(a_k), rho_k],
/// [rho_k, -a_k]]` at offset k, terminal `Xi_{n-1} = [conj(a_{n-1})]`;
/// even-index blocks form L, odd-index (and `Xi_{-1}`) form M.
pub fn build_cmv(alphas: &VerblunskySequence) -> Result<CmvMatrix> {
    if alphas.kind() != SequenceKind::Circular {
        return Err(Error::ParameterDomain("CMV matrices need a circular sequence".into()));
    }
    let n = alphas.len();
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut l = vec![zero; n * n];
    let mut m = vec![zero; n * n];

    // Xi_{-1} sits at the top-left of M.
    m[0] = one;
    for k in 0..n {
        let target = if k % 2 == 0 { &mut l } else { &mut m };
        let a = alphas.values()[k];
        if k == n - 1 {
            target[k * n + k] = a.conj();
        } else {
            let rho = Complex64::new(alphas.rho(k), 0.0);
            target[k * n + k] = a.conj();
            target[k * n + k + 1] = rho;
            target[(k + 1) * n + k] = rho;
            target[(k + 1) * n + k + 1] = -a;
        }
    }

    let dense = dense::mat_mul(&l, &m, n);
    Ok(CmvMatrix { n, dense, factor_l: l, factor_m: m, alphas: alphas.clone() })
}

/// Build the Jacobi matrix from a real coefficient sequence via the
/// Geronimus relations
/// `a_{k+1}^2 = (1 - alpha_{2k-1})(1 - alpha_{2k}^2)(1 + alpha_{2k+1})`,
/// `b_{k+1} = (1 - alpha_{2k-1}) alpha_{2k} - (1 + alpha_{2k-1}) alpha_{2k-2}`,
/// with boundary `alpha_{-1} = alpha_{2n-1} = -1` (out-of-range reads are
/// zero; they are always multiplied by the vanishing boundary factor). The
/// formal `a_n` is identically zero and is discarded.
pub fn build_jacobi(alphas: &VerblunskySequence) -> Result<JacobiTridiagonal> {
    if alphas.kind() != SequenceKind::RealJacobi {
        return Err(Error::ParameterDomain("Jacobi matrices need a real-Jacobi sequence".into()));
    }
    let m = alphas.len();
    let n = (m + 1) / 2;
    let get = |i: isize| -> f64 {
        if i == -1 || i == (2 * n - 1) as isize {
            -1.0
        } else if i < -1 {
            0.0
        } else {
            alphas.values()[i as usize].re
        }
    };

    let mut diag = Vec::with_capacity(n);
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n as isize {
        diag.push((1.0 - get(2 * k - 1)) * get(2 * k) - (1.0 + get(2 * k - 1)) * get(2 * k - 2));
        if k < n as isize - 1 {
            let sq =
                (1.0 - get(2 * k - 1)) * (1.0 - get(2 * k).powi(2)) * (1.0 + get(2 * k + 1));
            offdiag.push(sq.sqrt());
        }
    }
    JacobiTridiagonal::new(diag, offdiag)
}

/// Eigenvalues of a Jacobi matrix, ascending.
pub fn eig_tridiag(j: &JacobiTridiagonal) -> Result<Vec<f64>> {
    tridiag::ql_eigenvalues(&j.diag, &j.offdiag)
}

/// Eigenvalue angles in [0, 2pi) of a unitary CMV matrix, ascending.
///
/// The input must be unitary to within [`UNITARITY_TOL`], which pins the
/// terminal coefficient to the unit circle.
pub fn eig_unitary_cmv(c: &CmvMatrix) -> Result<Vec<f64>> {
    let defect = c.unitarity_defect();
    if defect > UNITARITY_TOL {
        return Err(Error::Domain(format!(
            "CMV matrix is not unitary: defect {defect:.3e} > {UNITARITY_TOL:.0e}"
        )));
    }
    cmv_eig::unitary_cmv_angles(c.alphas.values())
}

/// Monic orthogonal polynomial `P_n(x)` of the real-line measure, evaluated
/// through the circle polynomials: `P_n(z + 1/z) = (z^{-n} Phi_{2n}(z) +
/// z^n Phi_{2n}(1/z)) / (1 - alpha_{2n-1})` with the boundary making the
/// prefactor 1/2.
pub fn jacobi_poly_via_circle(alphas: &VerblunskySequence, x: Complex64) -> Complex64 {
    let n = alphas.point_count() as u32;
    let z = 0.5 * (x + (x * x - Complex64::new(4.0, 0.0)).sqrt());
    let z_inv = z.inv();
    let phi_z = szego_evaluate(alphas, z).0;
    let phi_zinv = szego_evaluate(alphas, z_inv).0;
    0.5 * (z_inv.powu(n) * phi_z + z.powu(n) * phi_zinv)
}

/// Maximum relative residual between the determinant route and the
/// polynomial-recursion route over a grid of evaluation points.
///
/// Circular: compares `det(z - C)` with `Phi_n(z)`. Jacobi: compares
/// `det(x - J)` with `P_n(x)` obtained through the line-circle map.
pub fn verify_charpoly(alphas: &VerblunskySequence, grid: &[Complex64]) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::ParameterDomain("empty evaluation grid".into()));
    }
    let mut worst: f64 = 0.0;
    match alphas.kind() {
        SequenceKind::Circular => {
            let c = build_cmv(alphas)?;
            for &z in grid {
                let det = c.char_poly_at(z);
                let poly = szego_evaluate(alphas, z).0;
                worst = worst.max((det - poly).norm() / (1.0 + poly.norm()));
            }
        }
        SequenceKind::RealJacobi => {
            let j = build_jacobi(alphas)?;
            for &x in grid {
                let det = j.char_poly_at(x);
                let poly = jacobi_poly_via_circle(alphas, x);
                worst = worst.max((det - poly).norm() / (1.0 + poly.norm()));
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{substream, Lane};
    use approx::assert_relative_eq;
    use rand::Rng;

    const TAU: f64 = std::f64::consts::TAU;

    fn random_circular(rng: &mut impl Rng, n: usize, unimodular_last: bool) -> VerblunskySequence {
        let mut values: Vec<Complex64> = (0..n)
            .map(|_| Complex64::from_polar(0.9 * rng.random::<f64>(), TAU * rng.random::<f64>()))
            .collect();
        if unimodular_last {
            values[n - 1] = Complex64::from_polar(1.0, TAU * rng.random::<f64>());
        }
        VerblunskySequence::circular(values).unwrap()
    }

    fn random_jacobi(rng: &mut impl Rng, n: usize) -> VerblunskySequence {
        let values: Vec<f64> = (0..2 * n - 1).map(|_| 1.8 * rng.random::<f64>() - 0.9).collect();
        VerblunskySequence::real_jacobi(values).unwrap()
    }

    #[test]
    fn cmv_one_by_one() {
        let a = Complex64::from_polar(0.6, 1.0);
        let seq = VerblunskySequence::circular(vec![a]).unwrap();
        let c = build_cmv(&seq).unwrap();
        assert_eq!(c.dense(), &[a.conj()]);
    }

    #[test]
    fn cmv_two_by_two_hand_product() {
        let a0 = Complex64::new(0.3, 0.4);
        let a1 = Complex64::from_polar(0.8, 2.0);
        let seq = VerblunskySequence::circular(vec![a0, a1]).unwrap();
        let rho0 = (1.0 - a0.norm_sqr()).sqrt();
        let c = build_cmv(&seq).unwrap();
        let expected =
            [a0.conj(), rho0 * a1.conj(), Complex64::new(rho0, 0.0), -a0 * a1.conj()];
        for (got, want) in c.dense().iter().zip(&expected) {
            assert_relative_eq!((got - want).norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn cmv_unitary_when_terminal_unimodular() {
        let seq = VerblunskySequence::circular(vec![
            Complex64::new(0.3, 0.4),
            Complex64::from_polar(1.0, 0.7),
        ])
        .unwrap();
        let c = build_cmv(&seq).unwrap();
        assert!(c.unitarity_defect() < 1e-12);
    }

    #[test]
    fn determinant_equals_szego_polynomial() {
        let mut rng = substream(6, Lane(0), 0);
        let seq = random_circular(&mut rng, 8, false);
        for _ in 0..20 {
            let z = Complex64::from_polar(1.5 * rng.random::<f64>(), TAU * rng.random::<f64>());
            let c = build_cmv(&seq).unwrap();
            let det = c.char_poly_at(z);
            let poly = szego_evaluate(&seq, z).0;
            assert!((det - poly).norm() < 1e-9 * (1.0 + poly.norm()));
        }
    }

    #[test]
    fn geronimus_first_row() {
        // With alpha_{-1} = -1: b_1 = 2 alpha_0 and a_1^2 = 2(1-alpha_0^2)(1+alpha_1).
        let (a0, a1, a2) = (0.25, -0.4, 0.1);
        let seq = VerblunskySequence::real_jacobi(vec![a0, a1, a2]).unwrap();
        let j = build_jacobi(&seq).unwrap();
        assert_relative_eq!(j.diag()[0], 2.0 * a0);
        assert_relative_eq!(j.offdiag()[0], (2.0 * (1.0 - a0 * a0) * (1.0 + a1)).sqrt());
    }

    #[test]
    fn free_jacobi_case() {
        let seq = VerblunskySequence::real_jacobi(vec![0.0; 7]).unwrap();
        let j = build_jacobi(&seq).unwrap();
        assert_eq!(j.diag(), &[0.0, 0.0, 0.0, 0.0]);
        assert_relative_eq!(j.offdiag()[0], 2.0_f64.sqrt());
        assert_relative_eq!(j.offdiag()[1], 1.0);
        assert_relative_eq!(j.offdiag()[2], 1.0);

        // Eigenvalues are the roots of x^4 - 4x^2 + 2.
        let eig = eig_tridiag(&j).unwrap();
        let mut expected = vec![
            -(2.0 + 2.0_f64.sqrt()).sqrt(),
            -(2.0 - 2.0_f64.sqrt()).sqrt(),
            (2.0 - 2.0_f64.sqrt()).sqrt(),
            (2.0 + 2.0_f64.sqrt()).sqrt(),
        ];
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in eig.iter().zip(&expected) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn jacobi_spectrum_in_band_and_poly_vanishes() {
        let mut rng = substream(6, Lane(0), 1);
        for _ in 0..10 {
            let n = 2 + (rng.random::<u32>() % 7) as usize;
            let seq = random_jacobi(&mut rng, n);
            let j = build_jacobi(&seq).unwrap();
            let eig = eig_tridiag(&j).unwrap();
            assert_eq!(eig.len(), n);
            for &x in &eig {
                assert!((-2.0 - 1e-8..=2.0 + 1e-8).contains(&x), "eigenvalue {x} outside band");
                let p = jacobi_poly_via_circle(&seq, Complex64::new(x, 0.0));
                assert!(p.norm() < 1e-9, "P_n at eigenvalue = {}", p.norm());
            }
        }
    }

    #[test]
    fn edge_determinants_match_phi_with_parity_sign() {
        // det(2 - J) = Phi_{2n}(1); det(-2 - J) = (-1)^n Phi_{2n}(-1).
        // (The parity factor is what the line-circle map produces at z = -1;
        // it is visible already at n = 1 where P_1(x) = x - 2 alpha_0.)
        let mut rng = substream(6, Lane(0), 2);
        for n in 1..=6usize {
            let seq = random_jacobi(&mut rng, n);
            let j = build_jacobi(&seq).unwrap();
            let two = Complex64::new(2.0, 0.0);
            let phi_plus = szego_evaluate(&seq, Complex64::new(1.0, 0.0)).0;
            let phi_minus = szego_evaluate(&seq, Complex64::new(-1.0, 0.0)).0;
            let det_plus = j.char_poly_at(two);
            let det_minus = j.char_poly_at(-two);
            assert!((det_plus - phi_plus).norm() < 1e-10 * (1.0 + phi_plus.norm()));
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((det_minus - sign * phi_minus).norm() < 1e-10 * (1.0 + phi_minus.norm()));
        }
    }

    #[test]
    fn eig_unitary_requires_unitary_input() {
        let mut rng = substream(6, Lane(0), 3);
        let seq = random_circular(&mut rng, 5, false);
        let c = build_cmv(&seq).unwrap();
        assert!(matches!(eig_unitary_cmv(&c), Err(Error::Domain(_))));
    }

    #[test]
    fn trace_and_determinant_match_spectrum() {
        let mut rng = substream(6, Lane(0), 4);
        for _ in 0..10 {
            let n = 2 + (rng.random::<u32>() % 10) as usize;
            let seq = random_circular(&mut rng, n, true);
            let c = build_cmv(&seq).unwrap();
            let angles = eig_unitary_cmv(&c).unwrap();
            let sum: Complex64 = angles.iter().map(|&t| Complex64::from_polar(1.0, t)).sum();
            let prod: Complex64 =
                angles.iter().map(|&t| Complex64::from_polar(1.0, t)).product();
            assert!((sum - c.trace()).norm() < 1e-8, "trace defect {}", (sum - c.trace()).norm());
            assert!((prod - c.determinant()).norm() < 1e-8);
            assert!((prod.norm() - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn charpoly_residual_free_circular() {
        let seq = VerblunskySequence::circular(vec![Complex64::new(0.0, 0.0); 5]).unwrap();
        let grid =
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)];
        let r = verify_charpoly(&seq, &grid).unwrap();
        assert!(r < 1e-12, "residual {r}");
    }

    #[test]
    fn charpoly_residual_random_draws() {
        let mut rng = substream(6, Lane(0), 5);
        for _ in 0..20 {
            let n = 2 + (rng.random::<u32>() % 20) as usize;
            let unimodular_last = rng.random::<bool>();
            let circ = random_circular(&mut rng, n, unimodular_last);
            let grid: Vec<Complex64> = (0..6)
                .map(|_| Complex64::from_polar(1.4 * rng.random::<f64>(), TAU * rng.random::<f64>()))
                .collect();
            assert!(verify_charpoly(&circ, &grid).unwrap() < 1e-8);

            let jac = random_jacobi(&mut rng, n);
            let grid: Vec<Complex64> =
                (0..6).map(|_| Complex64::new(6.0 * rng.random::<f64>() - 3.0, 0.0)).collect();
            assert!(verify_charpoly(&jac, &grid).unwrap() < 1e-8);
        }
    }
}
