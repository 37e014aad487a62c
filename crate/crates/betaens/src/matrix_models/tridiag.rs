//! Symmetric tridiagonal eigenvalues by the implicit-shift QL iteration,
//! with a Sturm-sequence bisection oracle used to cross-check it in tests.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `diag` and
/// off-diagonal `offdiag` (len n-1), sorted ascending.
///
/// Implicit-shift QL without eigenvector accumulation; accuracy is on the
/// order of machine epsilon times the matrix norm.
pub fn ql_eigenvalues(diag: &[f64], offdiag: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    assert_eq!(offdiag.len(), n.saturating_sub(1));
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut d = diag.to_vec();
    let mut e = offdiag.to_vec();
    e.push(0.0);

    for l in 0..n {
        let mut iter = 0;
        loop {
            // Look for a negligible subdiagonal element to split at.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::NumericalFailure(format!(
                    "tridiagonal QL failed to converge at index {l} after {MAX_SWEEPS} sweeps (n = {n})"
                )));
            }
            // Implicit shift from the 2x2 block at l.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(d)
}

/// Number of eigenvalues strictly below `x`, by the Sturm/LDL^T count.
fn sturm_count(diag: &[f64], offdiag: &[f64], x: f64) -> usize {
    let n = diag.len();
    let mut count = 0;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        if q == 0.0 {
            q = f64::EPSILON * (offdiag[i - 1].abs() + 1.0);
        }
        q = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / q;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Eigenvalues by Sturm bisection; independent of the QL route and used as
/// its oracle.
pub fn sturm_eigenvalues(diag: &[f64], offdiag: &[f64], tol: f64) -> Vec<f64> {
    let n = diag.len();
    let radius = diag
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let left = if i > 0 { offdiag[i - 1].abs() } else { 0.0 };
            let right = if i < n - 1 { offdiag[i].abs() } else { 0.0 };
            d.abs() + left + right
        })
        .fold(0.0f64, f64::max)
        + 1.0;

    (0..n)
        .map(|j| {
            let mut lo = -radius;
            let mut hi = radius;
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                if sturm_count(diag, offdiag, mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}
