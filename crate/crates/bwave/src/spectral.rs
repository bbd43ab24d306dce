//! FFT plumbing: zero-padded transforms of gridded fields, angular
//! frequencies, and the 2/3-rule dealiasing filter.
//!
//! Fields live on a truncated line and decay at the boundary, so transforms
//! are taken on a zero-padded copy (next power of two at least twice the
//! field length) to suppress periodic wrap-around.

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Forward/inverse FFT pair at a fixed padded length.
pub struct SpectralPlan {
    field_len: usize,
    padded_len: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for SpectralPlan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectralPlan")
            .field("field_len", &self.field_len)
            .field("padded_len", &self.padded_len)
            .finish()
    }
}

impl SpectralPlan {
    /// Plan transforms for fields of length `n`, padded to the next power of
    /// two not below `2n`.
    pub fn new(n: usize) -> Self {
        let padded_len = (2 * n.max(2)).next_power_of_two();
        let mut planner = FftPlanner::new();
        SpectralPlan {
            field_len: n,
            padded_len,
            forward: planner.plan_fft_forward(padded_len),
            inverse: planner.plan_fft_inverse(padded_len),
        }
    }

    pub fn field_len(&self) -> usize {
        self.field_len
    }

    pub fn padded_len(&self) -> usize {
        self.padded_len
    }

    /// FFT of the zero-padded field (unnormalized sums).
    pub fn forward(&self, values: &[f64]) -> Vec<Complex<f64>> {
        assert_eq!(values.len(), self.field_len, "field length mismatch");
        let mut buf = vec![Complex::new(0.0, 0.0); self.padded_len];
        for (b, &v) in buf.iter_mut().zip(values.iter()) {
            b.re = v;
        }
        self.forward.process(&mut buf);
        buf
    }

    /// Inverse FFT, normalized, truncated back to the field length.
    pub fn inverse_real(&self, mut spectrum: Vec<Complex<f64>>) -> Vec<f64> {
        assert_eq!(spectrum.len(), self.padded_len);
        self.inverse.process(&mut spectrum);
        let scale = 1.0 / self.padded_len as f64;
        spectrum
            .iter()
            .take(self.field_len)
            .map(|c| c.re * scale)
            .collect()
    }

    /// Signed angular frequency ξ_k = 2πk̃/(M·h) of padded bin `k`, where k̃
    /// is the signed index in (−M/2, M/2].
    pub fn frequency(&self, k: usize, spacing: f64) -> f64 {
        let m = self.padded_len;
        let signed = if k <= m / 2 {
            k as f64
        } else {
            k as f64 - m as f64
        };
        2.0 * std::f64::consts::PI * signed / (m as f64 * spacing)
    }
}

/// Zero every mode above two thirds of the grid Nyquist frequency. The
/// quadratic terms of the evolution alias on a uniform grid; projecting the
/// top third out removes the aliased band.
pub fn dealias_two_thirds(plan: &SpectralPlan, values: &[f64], spacing: f64) -> Vec<f64> {
    let mut spec = plan.forward(values);
    let cutoff = 2.0 / 3.0 * std::f64::consts::PI / spacing;
    for (k, c) in spec.iter_mut().enumerate() {
        if plan.frequency(k, spacing).abs() > cutoff {
            *c = Complex::new(0.0, 0.0);
        }
    }
    plan.inverse_real(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_recovers_field() {
        let n = 100;
        let plan = SpectralPlan::new(n);
        let values: Vec<f64> = (0..n)
            .map(|i| (-((i as f64 - 50.0) / 10.0).powi(2)).exp())
            .collect();
        let spec = plan.forward(&values);
        let back = plan.inverse_real(spec);
        for (a, b) in values.iter().zip(back.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn frequencies_are_signed_and_symmetric() {
        let plan = SpectralPlan::new(64);
        let m = plan.padded_len();
        let h = 0.1;
        assert_eq!(plan.frequency(0, h), 0.0);
        assert!((plan.frequency(1, h) + plan.frequency(m - 1, h)).abs() < 1e-15);
        assert!(plan.frequency(m / 2, h) > 0.0);
    }

    #[test]
    fn dealias_kills_high_mode_keeps_low() {
        let n = 256;
        let h = 0.05;
        let plan = SpectralPlan::new(n);
        let nyquist = std::f64::consts::PI / h;
        let k_low = 0.1 * nyquist;
        let k_high = 0.9 * nyquist;
        // windowed so the padded transform sees a decaying field
        let window = |x: f64| (-(x / 4.0).powi(2)).exp();
        let xs: Vec<f64> = (0..n).map(|i| (i as f64 - n as f64 / 2.0) * h).collect();
        let low: Vec<f64> = xs.iter().map(|&x| (k_low * x).sin() * window(x)).collect();
        let high: Vec<f64> = xs.iter().map(|&x| (k_high * x).sin() * window(x)).collect();

        let low_f = dealias_two_thirds(&plan, &low, h);
        let high_f = dealias_two_thirds(&plan, &high, h);
        let amp = |v: &[f64]| v.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
        assert!(amp(&low_f) > 0.9 * amp(&low));
        assert!(amp(&high_f) < 0.05 * amp(&high));
    }
}
