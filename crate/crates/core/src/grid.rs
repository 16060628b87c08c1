use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Uniform periodic box `[0, L)^3` with the FFT wavenumber layout
/// `[0, 1, ..., n/2-1, -n/2, ..., -1] * (2*pi/L)` on every axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    n: [usize; 3],
    length: f64,
    /// Signed integer mode indices per axis, FFT order.
    modes: [Vec<i64>; 3],
    /// Scaled wavenumbers `2*pi/L * mode` per axis.
    k: [Vec<f64>; 3],
}

impl Grid {
    /// Points per axis must be even and at least 8.
    pub fn new(n1: usize, n2: usize, n3: usize, length: f64) -> Result<Arc<Grid>> {
        for &n in &[n1, n2, n3] {
            if n < 8 || n % 2 != 0 {
                return Err(Error::invalid(format!(
                    "grid size {n} must be even and >= 8"
                )));
            }
        }
        if !(length > 0.0) {
            return Err(Error::invalid("box side must be positive"));
        }
        let modes = [mode_indices(n1), mode_indices(n2), mode_indices(n3)];
        let scale = 2.0 * PI / length;
        let k = [
            modes[0].iter().map(|&m| m as f64 * scale).collect(),
            modes[1].iter().map(|&m| m as f64 * scale).collect(),
            modes[2].iter().map(|&m| m as f64 * scale).collect(),
        ];
        Ok(Arc::new(Grid {
            n: [n1, n2, n3],
            length,
            modes,
            k,
        }))
    }

    /// Cubic grid on the default box `[0, 2*pi)^3`.
    pub fn cubic(n: usize) -> Result<Arc<Grid>> {
        Grid::new(n, n, n, 2.0 * PI)
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.n[0], self.n[1], self.n[2])
    }

    pub fn size(&self, axis: usize) -> usize {
        self.n[axis]
    }

    pub fn num_points(&self) -> usize {
        self.n[0] * self.n[1] * self.n[2]
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Box volume `L^3`.
    pub fn volume(&self) -> f64 {
        self.length.powi(3)
    }

    /// Collocation spacing along `axis`.
    pub fn dx(&self, axis: usize) -> f64 {
        self.length / self.n[axis] as f64
    }

    /// Scaled wavenumber array for `axis` (0-based).
    pub fn wavenumbers(&self, axis: usize) -> &[f64] {
        &self.k[axis]
    }

    /// Integer mode indices for `axis` (0-based), FFT order.
    pub fn mode_indices(&self, axis: usize) -> &[i64] {
        &self.modes[axis]
    }

    /// Largest retained integer mode under the 2/3 rule: `floor(n/3)`.
    pub fn dealias_cut(&self, axis: usize) -> i64 {
        (self.n[axis] / 3) as i64
    }

    /// Collocation coordinate `x_axis(i)`.
    pub fn coord(&self, axis: usize, i: usize) -> f64 {
        i as f64 * self.dx(axis)
    }

    pub fn same_as(&self, other: &Grid) -> bool {
        self.n == other.n && self.length == other.length
    }
}

fn mode_indices(n: usize) -> Vec<i64> {
    let half = (n / 2) as i64;
    (0..n as i64)
        .map(|i| if i < half { i } else { i - n as i64 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wavenumber_layout() {
        let g = Grid::cubic(8).unwrap();
        assert_eq!(g.mode_indices(0), &[0, 1, 2, 3, -4, -3, -2, -1]);
        // L = 2*pi means scaled wavenumbers equal the integer modes.
        assert!((g.wavenumbers(0)[1] - 1.0).abs() < 1e-15);
        assert!((g.wavenumbers(0)[4] + 4.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_odd_and_small() {
        assert!(Grid::new(9, 8, 8, 1.0).is_err());
        assert!(Grid::new(4, 8, 8, 1.0).is_err());
        assert!(Grid::new(8, 8, 8, 0.0).is_err());
    }

    #[test]
    fn each_axis_has_n_entries() {
        let g = Grid::new(8, 12, 16, 1.0).unwrap();
        for ax in 0..3 {
            assert_eq!(g.wavenumbers(ax).len(), g.size(ax));
        }
        assert_eq!(g.dealias_cut(2), 5);
    }
}
