//! Statistical testing and summarization: two-sample Kolmogorov-Smirnov,
//! empirical moments with standard errors, empirical covariance matrices.
//!
//! All statistics are deterministic functions of their input pools. The
//! variance divisor is n-1 throughout; standard errors for second and higher
//! moments use the jackknife, which avoids distributional assumptions on the
//! heavy-tailed log statistics fed through here.

use crate::error::{Error, Result};

/// A labelled pool of real samples.
#[derive(Debug, Clone)]
pub struct SamplePool {
    values: Vec<f64>,
    label: String,
}

impl SamplePool {
    pub fn new(values: Vec<f64>, label: impl Into<String>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::Domain(format!(
                "sample pool needs at least 2 values, got {}",
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("sample pool contains non-finite values".into()));
        }
        Ok(Self { values: values, label: label.into() })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Survival function of the Kolmogorov distribution,
/// `Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2)`,
/// truncated at 100 terms.
pub fn kolmogorov_sf(lambda: f64) -> f64 {
    if lambda <= 0.04 {
        return 1.0;
    }
    let mut acc = 0.0;
    let mut sign = 1.0;
    for j in 1..=100u32 {
        let j = j as f64;
        let term = (-2.0 * j * j * lambda * lambda).exp();
        acc += sign * term;
        sign = -sign;
        if term < 1e-18 {
            break;
        }
    }
    (2.0 * acc).clamp(0.0, 1.0)
}

/// Two-sample Kolmogorov-Smirnov test.
///
/// Returns the sup-distance `D` of the empirical CDFs and the asymptotic
/// p-value with effective size `n_x n_y / (n_x + n_y)`. The p-value is an
/// asymptotic approximation; treat it as reliable only for pools of a couple
/// dozen values or more.
pub fn ks_two_sample(xs: &SamplePool, ys: &SamplePool) -> Result<(f64, f64)> {
    let mut x = xs.values.clone();
    let mut y = ys.values.clone();
    x.sort_by(|a, b| a.partial_cmp(b).unwrap());
    y.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let (nx, ny) = (x.len() as f64, y.len() as f64);

    let mut d: f64 = 0.0;
    let (mut i, mut j) = (0usize, 0usize);
    while i < x.len() && j < y.len() {
        let t = x[i].min(y[j]);
        while i < x.len() && x[i] <= t {
            i += 1;
        }
        while j < y.len() && y[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / nx - j as f64 / ny).abs());
    }

    let n_eff = nx * ny / (nx + ny);
    Ok((d, kolmogorov_sf(n_eff.sqrt() * d)))
}

/// Central moments 1..=upto of a pool, each with a standard error.
///
/// Entry 0 is the mean (SE = s/sqrt(n)); entry 1 the variance with divisor
/// n-1; entries 2 and 3 the third and fourth central moments (plain averages)
/// with jackknife SEs.
pub fn empirical_moments(pool: &SamplePool, upto: usize) -> Result<Vec<(f64, f64)>> {
    if upto == 0 || upto > 4 {
        return Err(Error::ParameterDomain(format!("moment order must be 1..=4, got {upto}")));
    }
    let xs = &pool.values;
    let n = xs.len() as f64;

    // Power sums drive both the estimates and the O(n) jackknife.
    let mut s = [0.0f64; 5];
    s[0] = n;
    for &x in xs {
        let mut p = 1.0;
        for sk in s.iter_mut().skip(1) {
            p *= x;
            *sk += p;
        }
    }
    let mean = s[1] / n;
    let central = |order: usize, sums: &[f64; 5], count: f64, mu: f64| -> f64 {
        // sum_j (x_j - mu)^order from raw power sums.
        let mut acc = 0.0;
        let mut binom = 1.0;
        for q in (0..=order).rev() {
            // binom = C(order, q) built up incrementally.
            acc += binom * (-mu).powi((order - q) as i32) * sums[q];
            binom *= q as f64 / (order - q + 1) as f64;
        }
        let _ = count;
        acc
    };

    let mut out = Vec::with_capacity(upto);
    let var = central(2, &s, n, mean) / (n - 1.0);
    out.push((mean, (var.max(0.0) / n).sqrt()));
    if upto == 1 {
        return Ok(out);
    }

    for order in 2..=upto {
        let estimate = match order {
            2 => var,
            _ => central(order, &s, n, mean) / n,
        };
        // Jackknife SE: recompute the estimator with each value left out,
        // using power-sum downdates.
        let m = n - 1.0;
        let mut loo = Vec::with_capacity(xs.len());
        for &x in xs {
            let mut sd = [m, 0.0, 0.0, 0.0, 0.0];
            let mut p = 1.0;
            for q in 1..=4 {
                p *= x;
                sd[q] = s[q] - p;
            }
            let mu = sd[1] / m;
            let est = match order {
                2 => central(2, &sd, m, mu) / (m - 1.0),
                _ => central(order, &sd, m, mu) / m,
            };
            loo.push(est);
        }
        let loo_mean = loo.iter().sum::<f64>() / n;
        let se_sq = (n - 1.0) / n * loo.iter().map(|v| (v - loo_mean).powi(2)).sum::<f64>();
        out.push((estimate, se_sq.max(0.0).sqrt()));
    }
    Ok(out)
}

/// Empirical mean vector and covariance matrix of i.i.d. rows.
#[derive(Debug, Clone)]
pub struct CovarianceReport {
    pub dim: usize,
    pub mean: Vec<f64>,
    pub cov: Vec<Vec<f64>>,
    pub se: Vec<Vec<f64>>,
    pub trials: usize,
}

/// Covariance (divisor n-1) of equal-length rows, with per-entry jackknife
/// standard errors.
pub fn empirical_covariance(rows: &[Vec<f64>]) -> Result<CovarianceReport> {
    if rows.len() < 2 {
        return Err(Error::Domain("need at least 2 rows".into()));
    }
    let dim = rows[0].len();
    if dim == 0 || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Domain("ragged or empty rows".into()));
    }
    let n = rows.len() as f64;

    let mut sum = vec![0.0; dim];
    let mut cross = vec![vec![0.0; dim]; dim];
    for row in rows {
        for a in 0..dim {
            sum[a] += row[a];
            for b in a..dim {
                cross[a][b] += row[a] * row[b];
            }
        }
    }
    let mean: Vec<f64> = sum.iter().map(|s| s / n).collect();

    let cov_from = |sum: &[f64], cross: &[Vec<f64>], count: f64, a: usize, b: usize| -> f64 {
        (cross[a][b] - sum[a] * sum[b] / count) / (count - 1.0)
    };

    let mut cov = vec![vec![0.0; dim]; dim];
    let mut se = vec![vec![0.0; dim]; dim];
    for a in 0..dim {
        for b in a..dim {
            let c = cov_from(&sum, &cross, n, a, b);
            cov[a][b] = c;
            cov[b][a] = c;
            // Jackknife over rows.
            let m = n - 1.0;
            let mut loo_sum = 0.0;
            let mut loo_sq = 0.0;
            for row in rows {
                let sa = sum[a] - row[a];
                let sb = sum[b] - row[b];
                let cab = cross[a][b] - row[a] * row[b];
                let est = (cab - sa * sb / m) / (m - 1.0);
                loo_sum += est;
                loo_sq += est * est;
            }
            let loo_mean = loo_sum / n;
            let se_sq = (n - 1.0) / n * (loo_sq - n * loo_mean * loo_mean);
            se[a][b] = se_sq.max(0.0).sqrt();
            se[b][a] = se[a][b];
        }
    }
    Ok(CovarianceReport { dim, mean, cov, se, trials: rows.len() })
}

/// Pearson correlation of two equal-length slices.
pub fn correlation(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    sxy / (sxx * syy).sqrt()
}
