use std::sync::Arc;

use ndarray::Array3;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::grid::Grid;

/// Three-dimensional complex-to-complex transform plan for one grid shape.
///
/// Normalization: the forward transform divides by `n1*n2*n3`, so spectral
/// coefficients are mode amplitudes and the inverse transform carries no
/// scaling. Plans own scratch buffers; use one plan per worker thread.
pub struct Fft3 {
    shape: (usize, usize, usize),
    forward: [Arc<dyn Fft<f64>>; 3],
    inverse: [Arc<dyn Fft<f64>>; 3],
    scratch: Vec<Complex64>,
    tbuf: Vec<Complex64>,
}

impl Fft3 {
    pub fn new(grid: &Grid) -> Fft3 {
        let (n1, n2, n3) = grid.shape();
        Fft3::with_shape(n1, n2, n3)
    }

    pub fn with_shape(n1: usize, n2: usize, n3: usize) -> Fft3 {
        let mut planner = FftPlanner::<f64>::new();
        let forward = [
            planner.plan_fft_forward(n1),
            planner.plan_fft_forward(n2),
            planner.plan_fft_forward(n3),
        ];
        let inverse = [
            planner.plan_fft_inverse(n1),
            planner.plan_fft_inverse(n2),
            planner.plan_fft_inverse(n3),
        ];
        let scratch_len = forward
            .iter()
            .chain(inverse.iter())
            .map(|f| f.get_inplace_scratch_len())
            .max()
            .unwrap_or(0);
        Fft3 {
            shape: (n1, n2, n3),
            forward,
            inverse,
            scratch: vec![Complex64::default(); scratch_len],
            tbuf: vec![Complex64::default(); n1 * n2 * n3],
        }
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        self.shape
    }

    /// Physical -> spectral, scaled so coefficients are mode amplitudes.
    pub fn forward(&mut self, data: &mut Array3<Complex64>) {
        assert_eq!(data.dim(), self.shape, "array shape does not match plan");
        self.transform(data, true);
        let scale = 1.0 / (self.shape.0 * self.shape.1 * self.shape.2) as f64;
        for v in data.as_slice_mut().expect("contiguous array") {
            *v *= scale;
        }
    }

    /// Spectral -> physical. Unscaled inverse of `forward`.
    pub fn inverse(&mut self, data: &mut Array3<Complex64>) {
        assert_eq!(data.dim(), self.shape, "array shape does not match plan");
        self.transform(data, false);
    }

    fn transform(&mut self, data: &mut Array3<Complex64>, fwd: bool) {
        let (n1, n2, n3) = self.shape;
        let buf = data.as_slice_mut().expect("contiguous array");
        let plans = if fwd { &self.forward } else { &self.inverse };

        // Axis 2: lanes are contiguous rows; one batched call.
        plans[2].process_with_scratch(buf, &mut self.scratch);

        // Axis 1: per i1-plane, transpose (n2 x n3) so lanes become rows.
        for plane in buf.chunks_exact_mut(n2 * n3) {
            let t = &mut self.tbuf[..n2 * n3];
            transpose(plane, t, n2, n3);
            plans[1].process_with_scratch(t, &mut self.scratch);
            transpose_into(t, plane, n3, n2);
        }

        // Axis 0: view as (n1 x m), transpose the whole array once.
        let m = n2 * n3;
        transpose(buf, &mut self.tbuf, n1, m);
        plans[0].process_with_scratch(&mut self.tbuf, &mut self.scratch);
        transpose_into(&self.tbuf, buf, m, n1);
    }
}

/// Blocked out-of-place transpose of a row-major (rows x cols) matrix.
fn transpose(src: &[Complex64], dst: &mut [Complex64], rows: usize, cols: usize) {
    transpose_into(src, dst, rows, cols);
}

fn transpose_into(src: &[Complex64], dst: &mut [Complex64], rows: usize, cols: usize) {
    const B: usize = 8;
    debug_assert_eq!(src.len(), rows * cols);
    debug_assert_eq!(dst.len(), rows * cols);
    let mut rb = 0;
    while rb < rows {
        let rend = (rb + B).min(rows);
        let mut cb = 0;
        while cb < cols {
            let cend = (cb + B).min(cols);
            for r in rb..rend {
                for c in cb..cend {
                    dst[c * rows + r] = src[r * cols + c];
                }
            }
            cb = cend;
        }
        rb = rend;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array3;

    #[test]
    fn transpose_round_trip() {
        let rows = 12;
        let cols = 20;
        let src: Vec<Complex64> = (0..rows * cols)
            .map(|i| Complex64::new(i as f64, -(i as f64)))
            .collect();
        let mut t = vec![Complex64::default(); rows * cols];
        let mut back = vec![Complex64::default(); rows * cols];
        transpose(&src, &mut t, rows, cols);
        transpose_into(&t, &mut back, cols, rows);
        assert_eq!(src, back);
    }

    #[test]
    fn single_mode_forward() {
        // f(x) = exp(i x1) on 8^3 has exactly one unit coefficient at (1,0,0).
        let n = 8;
        let mut data = Array3::from_shape_fn((n, n, n), |(i, _, _)| {
            let x = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            Complex64::new(x.cos(), x.sin())
        });
        let mut fft = Fft3::with_shape(n, n, n);
        fft.forward(&mut data);
        for ((i, j, k), v) in data.indexed_iter() {
            let expect = if (i, j, k) == (1, 0, 0) { 1.0 } else { 0.0 };
            assert!(
                (v - Complex64::new(expect, 0.0)).norm() < 1e-13,
                "coefficient ({i},{j},{k}) = {v}"
            );
        }
    }

    #[test]
    fn round_trip_identity() {
        let n = 16;
        let src = Array3::from_shape_fn((n, n, n), |(i, j, k)| {
            Complex64::new(((i * 31 + j * 17 + k * 7) % 13) as f64 - 6.0, 0.0)
        });
        let mut data = src.clone();
        let mut fft = Fft3::with_shape(n, n, n);
        fft.forward(&mut data);
        fft.inverse(&mut data);
        let max = src
            .iter()
            .zip(data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(max < 1e-12, "round trip error {max}");
    }

    #[test]
    #[ignore = "timing probe, run manually"]
    fn bench_32_cubed() {
        let n = 32;
        let mut data = Array3::from_shape_fn((n, n, n), |(i, j, k)| {
            Complex64::new((i + j + k) as f64, 0.0)
        });
        let mut fft = Fft3::with_shape(n, n, n);
        // warmup
        for _ in 0..10 {
            fft.forward(&mut data);
            fft.inverse(&mut data);
        }
        let t0 = std::time::Instant::now();
        let iters = 200;
        for _ in 0..iters {
            fft.forward(&mut data);
            fft.inverse(&mut data);
        }
        let per = t0.elapsed().as_secs_f64() / (2 * iters) as f64;
        println!("32^3 c2c 3d transform: {:.1} us", per * 1e6);
    }
}
