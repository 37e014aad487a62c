//! Deterministic quadrature helpers for the oracle module.
//!
//! Everything here is plain Gauss-Legendre plus substitutions that absorb
//! Beta-type endpoint weights exactly, so endpoint singularities never reach
//! the quadrature nodes. Panels are graded geometrically toward the
//! (transformed) singular endpoint.

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Chebyshev-style initial guess for the i-th positive root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Integrate `f` over [a, b] with a single Gauss-Legendre rule.
pub fn gl_panel<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    nodes: &[f64],
    weights: &[f64],
) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Integrate `f` over [a, b] with `panels` equal panels of an `order`-point
/// Gauss-Legendre rule.
pub fn composite_gl<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    for i in 0..panels {
        acc += gl_panel(&mut f, a + i as f64 * h, a + (i + 1) as f64 * h, &nodes, &weights);
    }
    acc
}

/// Integrate `f` over [0, 1] with panels graded geometrically toward 0,
/// where `f` may have an algebraic singularity in its derivatives.
pub fn graded_gl_toward_zero<F: FnMut(f64) -> f64>(mut f: F, order: usize, levels: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let mut acc = gl_panel(&mut f, 0.5, 1.0, &nodes, &weights);
    let mut hi = 0.5;
    for _ in 0..levels {
        let lo = hi * 0.5;
        acc += gl_panel(&mut f, lo, hi, &nodes, &weights);
        hi = lo;
    }
    // Bottom sliver [0, hi]: one final panel; the integrand is bounded so the
    // contribution is O(hi).
    acc + gl_panel(&mut f, 0.0, hi, &nodes, &weights)
}

/// Compute `int_0^1 g(u) * c (1-u)^(c-1) du` where `c > 0`, i.e. the
/// expectation of `g` against the normalized weight `c (1-u)^(c-1)`.
///
/// The substitution `v = (1-u)^c` maps the weighted integral to
/// `int_0^1 g(1 - v^(1/c)) dv` with constant weight, so the endpoint
/// singularity is handled exactly for every `c`.
pub fn integrate_with_beta_weight<F: Fn(f64) -> f64>(g: F, c: f64) -> f64 {
    assert!(c > 0.0, "weight exponent must be positive");
    let q = 1.0 / c;
    graded_gl_toward_zero(|v| g(1.0 - v.powf(q)), 16, 60)
}
