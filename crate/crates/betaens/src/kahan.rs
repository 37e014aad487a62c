//! Compensated (Kahan) summation.

/// Running compensated sum. Keeps the accumulated rounding error of long
/// sums (n ~ 10^4 recursion steps) well below the statistical noise they
/// feed into.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new(initial: f64) -> Self {
        Self { sum: initial, comp: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}
