//! Compensated floating point summation.
//!
//! Series in this crate run over 10⁶+ terms, so plain accumulation loses
//! digits. [`CompensatedSum`] is Kahan's error-tracking accumulator;
//! [`compensated_sum_chunked`] reduces a slice in fixed 4096-element chunks
//! (in parallel when enabled) and combines the chunk sums in order, so the
//! result is identical for every thread count.

use crate::exec;

const CHUNK: usize = 4096;

/// Kahan summation accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Sequential compensated sum of an iterator.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut acc = CompensatedSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

/// Compensated sum of a slice via fixed-size chunk reduction.
pub fn compensated_sum_chunked(values: &[f64]) -> f64 {
    let partials = exec::map_chunks(values, CHUNK, |chunk| {
        compensated_sum(chunk.iter().copied())
    });
    compensated_sum(partials)
}
