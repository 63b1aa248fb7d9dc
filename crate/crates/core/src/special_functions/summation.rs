//! Neumaier-compensated accumulators.
//!
//! Every series and quadrature in the crate accumulates through these, in a
//! fixed order, so results are reproducible bit-for-bit.

use num_complex::Complex64;

#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

/// Compensated summation of a real sequence, in iteration order.
pub fn compensated_sum(it: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = CompensatedSum::new();
    acc.extend(it);
    acc.value()
}

#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct ComplexSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

impl Extend<Complex64> for ComplexSum {
    fn extend<I: IntoIterator<Item = Complex64>>(&mut self, iter: I) {
        for z in iter {
            self.add(z);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_small_terms() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(compensated_sum(xs), 2.0);
        assert_eq!(xs.iter().sum::<f64>(), 0.0);
    }

    #[test]
    fn harmonic_partial_sum_matches_reverse_order() {
        let n = 1_000_000;
        let forward = compensated_sum((1..=n).map(|k| 1.0 / k as f64));
        let mut backward = 0.0;
        for k in (1..=n).rev() {
            backward += 1.0 / k as f64;
        }
        assert!((forward - backward).abs() < 1e-13);
    }

    #[test]
    fn complex_sum_is_componentwise() {
        let mut acc = ComplexSum::new();
        acc.extend([Complex64::new(1.0, -1e100), Complex64::new(1e-20, 1e100)]);
        assert_eq!(acc.value(), Complex64::new(1.0 + 1e-20, 0.0));
    }
}
