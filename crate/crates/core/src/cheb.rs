//! Chebyshev-Gauss-Lobatto grids and the node/coefficient transforms.
//!
//! A polynomial of degree at most `N` is held either as its values at the
//! `N + 1` points `x_j = cos(j pi / N)` ([`NodeVector`]) or as its coefficients
//! in the basis `T_0, ..., T_N` ([`CoeffVector`]). Both representations are
//! exact and the conversion is one DCT-I plus a diagonal scaling by
//! `c = [2, 1, ..., 1, 2]`.

use std::f64::consts::PI;

use crate::dct::cosine_sum;
use crate::error::{Error, Result};

/// Descending Chebyshev-Gauss-Lobatto points `cos(j pi / N)`, `j = 0..=N`.
///
/// The points are evaluated as `sin(pi (N - 2j) / (2N))`, which is the same
/// quantity with better relative accuracy near the centre, and then mirrored so
/// that `points[N - j] == -points[j]` holds bit for bit.
pub fn cgl_points(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::DegreeTooSmall {
            what: "Chebyshev-Gauss-Lobatto grid",
            degree: 0,
            min: 1,
        });
    }
    let mut points = vec![0.0; n + 1];
    let denom = 2.0 * n as f64;
    for j in 0..=n / 2 {
        let x = (PI * (n as f64 - 2.0 * j as f64) / denom).sin();
        points[j] = x;
        points[n - j] = -x;
    }
    if n.is_multiple_of(2) {
        points[n / 2] = 0.0;
    }
    points[0] = 1.0;
    points[n] = -1.0;
    Ok(points)
}

/// Closed-form barycentric weights of the degree-`n` grid:
/// `(-1)^j 2^(n-1) / n`, halved at both endpoints.
///
/// The magnitude `2^(n-1)/n` overflows to infinity beyond `n = 1025`; code in
/// this crate only ever needs weight ratios and uses [`relative_weights`].
pub fn barycentric_weights_cgl(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::DegreeTooSmall {
            what: "barycentric weights",
            degree: 0,
            min: 1,
        });
    }
    let magnitude = 2f64.powi(n as i32 - 1) / n as f64;
    Ok(relative_weights(n)
        .into_iter()
        .map(|w| w * magnitude)
        .collect())
}

/// Barycentric weights up to a common factor: `(-1)^j`, halved at the ends.
pub(crate) fn relative_weights(n: usize) -> Vec<f64> {
    (0..=n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            if j == 0 || j == n {
                0.5 * sign
            } else {
                sign
            }
        })
        .collect()
}

/// `cos(pi a / p) - cos(pi b / q)` without cancellation, via
/// `cos u - cos v = 2 sin((u + v)/2) sin((v - u)/2)` with exact integer angles.
pub(crate) fn cos_pi_diff(a: usize, p: usize, b: usize, q: usize) -> f64 {
    let (a, p, b, q) = (a as i64, p as i64, b as i64, q as i64);
    let denom = (2 * p * q) as f64;
    let sum = (a * q + b * p) as f64;
    let diff = (b * p - a * q) as f64;
    2.0 * (PI * sum / denom).sin() * (PI * diff / denom).sin()
}

/// `x_k - x_j` on the degree-`n` grid.
pub(crate) fn grid_diff(n: usize, k: usize, j: usize) -> f64 {
    cos_pi_diff(k, n, j, n)
}

/// A Chebyshev-Gauss-Lobatto grid of degree `N` (so `N + 1` points).
#[derive(Debug, Clone, PartialEq)]
pub struct ChebGrid {
    degree: usize,
    points: Vec<f64>,
    bary_weights: Vec<f64>,
}

impl ChebGrid {
    pub fn new(degree: usize) -> Result<Self> {
        Ok(Self {
            degree,
            points: cgl_points(degree)?,
            bary_weights: barycentric_weights_cgl(degree)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.degree + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// See [`barycentric_weights_cgl`] for the overflow caveat.
    pub fn bary_weights(&self) -> &[f64] {
        &self.bary_weights
    }
}

/// Values of a function at every point of a degree-`N` grid, in grid order.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeVector {
    grid_degree: usize,
    values: Vec<f64>,
}

impl NodeVector {
    /// Fails unless `values.len() == grid_degree + 1`.
    pub fn new(grid_degree: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid_degree + 1 {
            return Err(Error::LengthMismatch {
                expected: grid_degree + 1,
                got: values.len(),
            });
        }
        Ok(Self {
            grid_degree,
            values,
        })
    }

    /// Infers the degree from the length; needs at least two values.
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooShort {
                what: "node vector",
                min: 2,
                got: values.len(),
            });
        }
        Self::new(values.len() - 1, values)
    }

    /// Samples `f` at the grid points.
    pub fn from_fn(grid: &ChebGrid, f: impl Fn(f64) -> f64) -> Self {
        Self {
            grid_degree: grid.degree(),
            values: grid.points().iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn grid_degree(&self) -> usize {
        self.grid_degree
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// Chebyshev coefficients: `values[j]` multiplies `T_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector {
    values: Vec<f64>,
}

impl CoeffVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::TooShort {
                what: "coefficient vector",
                min: 1,
                got: 0,
            });
        }
        Ok(Self { values })
    }

    /// Coefficient vector of `T_k` with `len` entries.
    pub fn unit(k: usize, len: usize) -> Result<Self> {
        if k >= len {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: len.saturating_sub(1),
            });
        }
        let mut values = vec![0.0; len];
        values[k] = 1.0;
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Degree of the highest basis function the vector can carry.
    pub fn max_degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Evaluates the series at `x` with the Clenshaw recurrence.
    pub fn eval(&self, x: f64) -> f64 {
        let (mut b1, mut b2) = (0.0, 0.0);
        for &c in self.values.iter().skip(1).rev() {
            let b0 = c + 2.0 * x * b1 - b2;
            b2 = b1;
            b1 = b0;
        }
        self.values[0] + x * b1 - b2
    }
}

/// Node values to Chebyshev coefficients: `c^-1 * dct1(sqrt(2/N) u)`, computed
/// as an unnormalised cosine sum divided by `N`.
pub fn node_to_coeffs(u: &NodeVector) -> Result<CoeffVector> {
    let n = u.grid_degree();
    if n < 1 {
        return Err(Error::DegreeTooSmall {
            what: "node-to-coefficient transform",
            degree: n,
            min: 1,
        });
    }
    let nf = n as f64;
    let mut coeffs: Vec<f64> = cosine_sum(u.values())?
        .into_iter()
        .map(|v| v / nf)
        .collect();
    coeffs[0] *= 0.5;
    coeffs[n] *= 0.5;
    CoeffVector::new(coeffs)
}

/// Chebyshev coefficients to node values on the grid of degree `len - 1`:
/// `dct1(sqrt(M/2) c * u_hat)`.
pub fn coeffs_to_nodes(coeffs: &CoeffVector) -> Result<NodeVector> {
    let len = coeffs.len();
    if len < 2 {
        return Err(Error::TooShort {
            what: "coefficient-to-node transform",
            min: 2,
            got: len,
        });
    }
    let m = len - 1;
    let mut halved: Vec<f64> = coeffs.values().iter().map(|v| 0.5 * v).collect();
    halved[0] = coeffs.values()[0];
    halved[m] = coeffs.values()[m];
    NodeVector::new(m, cosine_sum(&halved)?)
}

/// Values of `T_k` on the degree-`m` grid, obtained by transforming the unit
/// coefficient vector.
pub fn eval_chebyshev_at_cgl(k: usize, m: usize) -> Result<Vec<f64>> {
    if m < 1 {
        return Err(Error::DegreeTooSmall {
            what: "Chebyshev evaluation grid",
            degree: m,
            min: 1,
        });
    }
    if k > m {
        return Err(Error::IndexOutOfRange { index: k, max: m });
    }
    Ok(coeffs_to_nodes(&CoeffVector::unit(k, m + 1)?)?.into_values())
}
