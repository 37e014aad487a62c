//! Minimal dense complex matrix helpers for the small-n identity checks:
//! multiplication, LU determinant, unitarity defect, trace.

use num_complex::Complex64;

/// Row-major product of two n x n matrices.
pub fn mat_mul(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// Determinant by LU elimination with partial pivoting.
pub fn det_lu(mut m: Vec<Complex64>, n: usize) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let mut pivot = col;
        let mut best = m[col * n + col].norm_sqr();
        for row in col + 1..n {
            let v = m[row * n + col].norm_sqr();
            if v > best {
                best = v;
                pivot = row;
            }
        }
        if best == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            for j in 0..n {
                m.swap(col * n + j, pivot * n + j);
            }
            det = -det;
        }
        let diag = m[col * n + col];
        det *= diag;
        for row in col + 1..n {
            let factor = m[row * n + col] / diag;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in col..n {
                let sub = factor * m[col * n + j];
                m[row * n + j] -= sub;
            }
        }
    }
    det
}

/// det(z I - M).
pub fn char_poly_at(m: &[Complex64], n: usize, z: Complex64) -> Complex64 {
    let mut shifted = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            shifted[i * n + j] = if i == j { z - m[i * n + j] } else { -m[i * n + j] };
        }
    }
    det_lu(shifted, n)
}

/// max_ij |(M* M - I)_ij|.
pub fn unitarity_defect(m: &[Complex64], n: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                acc += m[k * n + i].conj() * m[k * n + j];
            }
            if i == j {
                acc -= Complex64::new(1.0, 0.0);
            }
            worst = worst.max(acc.norm());
        }
    }
    worst
}

pub fn trace(m: &[Complex64], n: usize) -> Complex64 {
    (0..n).map(|i| m[i * n + i]).sum()
}
