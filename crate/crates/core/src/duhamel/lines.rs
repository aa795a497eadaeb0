//! `(ξ, t)` representation: one contiguous time line per spatial frequency.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::spectral::fft::{fft_all, Direction};
use crate::spectral::{Field, GridSpec, Side};

/// Spatial FFT of every slice, then transpose to `[ξ][t]`.
pub(crate) fn to_xi_lines(f: &Field) -> Vec<Complex64> {
    debug_assert_eq!(f.side(), Side::Physical);
    let g = f.grid();
    let (ns, nt) = (g.spatial_len(), g.t_count);
    let mut hat = f.samples().to_vec();
    hat.par_chunks_mut(ns).for_each(|slice| fft_all(slice, &g.counts, Direction::Forward));
    let mut lines = vec![Complex64::default(); ns * nt];
    lines.par_chunks_mut(nt).enumerate().for_each(|(s, line)| {
        for (j, v) in line.iter_mut().enumerate() {
            *v = hat[j * ns + s];
        }
    });
    lines
}

/// Inverse of [`to_xi_lines`].
pub(crate) fn from_xi_lines(grid: &GridSpec, lines: &[Complex64]) -> Field {
    let (ns, nt) = (grid.spatial_len(), grid.t_count);
    let mut data = vec![Complex64::default(); ns * nt];
    data.par_chunks_mut(ns).enumerate().for_each(|(j, slice)| {
        for (s, v) in slice.iter_mut().enumerate() {
            *v = lines[s * nt + j];
        }
        fft_all(slice, &grid.counts, Direction::Inverse);
    });
    Field::from_samples(grid, data, Side::Physical).expect("sizes match")
}
