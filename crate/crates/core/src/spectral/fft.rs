//! Axis-by-axis multidimensional FFTs on row-major arrays.

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `Σ f_k e^{−2πi jk/m}`, unnormalised.
    Forward,
    /// `(1/m) Σ f̂_j e^{+2πi jk/m}`.
    Inverse,
}

fn plan(m: usize, dir: Direction) -> Arc<dyn Fft<f64>> {
    let mut planner = FftPlanner::new();
    match dir {
        Direction::Forward => planner.plan_fft_forward(m),
        Direction::Inverse => planner.plan_fft_inverse(m),
    }
}

/// Lines per parallel task; keeps task overhead small for short axes.
const BATCH: usize = 64;

fn transform_lines(lines: &mut [Complex64], m: usize, fft: &Arc<dyn Fft<f64>>) {
    lines.par_chunks_mut(m * BATCH).for_each(|chunk| {
        let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
        fft.process_with_scratch(chunk, &mut scratch);
    });
}

/// Transforms `data` (row-major, `shape`) along each axis in `axes`.
/// The inverse includes the `1/m` factor of every transformed axis.
pub fn fft_axes(data: &mut [Complex64], shape: &[usize], axes: &[usize], dir: Direction) {
    debug_assert_eq!(data.len(), shape.iter().product::<usize>());
    for &axis in axes {
        let m = shape[axis];
        let stride: usize = shape[axis + 1..].iter().product();
        let fft = plan(m, dir);
        if stride == 1 {
            transform_lines(data, m, &fft);
        } else {
            let block = m * stride;
            let mut buf = vec![Complex64::default(); block];
            for chunk in data.chunks_mut(block) {
                // gather: buf[i*m + k] = chunk[k*stride + i]
                buf.par_chunks_mut(m).enumerate().for_each(|(i, line)| {
                    for (k, v) in line.iter_mut().enumerate() {
                        *v = chunk[k * stride + i];
                    }
                });
                transform_lines(&mut buf, m, &fft);
                chunk.par_chunks_mut(stride).enumerate().for_each(|(k, row)| {
                    for (i, v) in row.iter_mut().enumerate() {
                        *v = buf[i * m + k];
                    }
                });
            }
        }
        if dir == Direction::Inverse {
            let s = 1.0 / m as f64;
            data.par_iter_mut().for_each(|v| *v *= s);
        }
    }
}

/// Full transform of every axis.
pub fn fft_all(data: &mut [Complex64], shape: &[usize], dir: Direction) {
    let axes: Vec<usize> = (0..shape.len()).collect();
    fft_axes(data, shape, &axes, dir);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
        let m = x.len();
        (0..m)
            .map(|j| {
                x.iter()
                    .enumerate()
                    .map(|(k, v)| v * Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * (j * k) as f64 / m as f64))
                    .sum()
            })
            .collect()
    }

    #[test]
    fn strided_axis_matches_naive() {
        let shape = [8, 4];
        let data: Vec<Complex64> = (0..32).map(|i| Complex64::new(i as f64 * 0.3, (i * i % 7) as f64)).collect();
        let mut out = data.clone();
        fft_axes(&mut out, &shape, &[0], Direction::Forward);
        for col in 0..4 {
            let line: Vec<_> = (0..8).map(|k| data[k * 4 + col]).collect();
            let want = naive_dft(&line);
            for k in 0..8 {
                assert!((out[k * 4 + col] - want[k]).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn round_trip() {
        let shape = [4, 8, 16];
        let data: Vec<Complex64> = (0..512).map(|i| Complex64::new((i as f64).sin(), (i as f64 * 0.7).cos())).collect();
        let mut x = data.clone();
        fft_all(&mut x, &shape, Direction::Forward);
        fft_all(&mut x, &shape, Direction::Inverse);
        let err: f64 = x.iter().zip(&data).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt();
        assert!(err < 1e-12);
    }
}
