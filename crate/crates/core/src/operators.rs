//! Dense collocation operators and the inverse relations between the second
//! derivative matrix and the Green matrix.
//!
//! All node differences `x_k - x_j` are evaluated from exact integer angles
//! (see [`crate::cheb`]) rather than by subtracting rounded points, which
//! keeps the entries near the endpoints accurate to a few ulps.

use std::fmt;

use nalgebra::{DMatrix, DVector};

use crate::cheb::{cgl_points, cos_pi_diff, grid_diff, relative_weights, NodeVector};
use crate::error::{Error, Result};
use crate::green::green_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorRole {
    /// First derivative.
    Diff,
    /// Second derivative, `D * D`.
    Diff2,
    /// `D^2` without its first/last rows and columns.
    Diff2Stripped,
    /// Reinterpolation between two grids.
    Reinterp,
    /// Interior values of a degree-`N-2` polynomial to all `N+1` nodes.
    Extension,
    /// Crop to the interior nodes.
    Projection,
    /// `D^2` with boundary evaluation rows.
    Diff2Bc,
    /// Green matrix with boundary lifting columns.
    GreenBc,
}

impl fmt::Display for OperatorRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            OperatorRole::Diff => "D",
            OperatorRole::Diff2 => "D2",
            OperatorRole::Diff2Stripped => "D2-stripped",
            OperatorRole::Reinterp => "R",
            OperatorRole::Extension => "E",
            OperatorRole::Projection => "P",
            OperatorRole::Diff2Bc => "D2-BC",
            OperatorRole::GreenBc => "G-BC",
        };
        f.write_str(tag)
    }
}

/// A dense matrix tagged with the operator it represents.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    role: OperatorRole,
    entries: DMatrix<f64>,
}

impl OperatorMatrix {
    pub fn new(role: OperatorRole, entries: DMatrix<f64>) -> Self {
        Self { role, entries }
    }

    pub fn role(&self) -> OperatorRole {
        self.role
    }

    pub fn rows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn cols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<f64> {
        self.entries
    }

    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.cols() {
            return Err(Error::LengthMismatch {
                expected: self.cols(),
                got: v.len(),
            });
        }
        Ok((&self.entries * DVector::from_column_slice(v))
            .as_slice()
            .to_vec())
    }
}

fn require_degree(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::DegreeTooSmall {
            what,
            degree: n,
            min,
        });
    }
    Ok(())
}

/// First-derivative collocation matrix: `D_kj = (w_j / w_k) / (x_k - x_j)`
/// off the diagonal and the negative row sum on it.
pub fn diff_matrix(n: usize) -> Result<OperatorMatrix> {
    require_degree("differentiation matrix", n, 1)?;
    let w = relative_weights(n);
    let mut d = DMatrix::zeros(n + 1, n + 1);
    for k in 0..=n {
        let mut diag = 0.0;
        for j in 0..=n {
            if j != k {
                let v = (w[j] / w[k]) / grid_diff(n, k, j);
                d[(k, j)] = v;
                diag -= v;
            }
        }
        d[(k, k)] = diag;
    }
    Ok(OperatorMatrix::new(OperatorRole::Diff, d))
}

/// `D * D`.
pub fn diff2_matrix(n: usize) -> Result<OperatorMatrix> {
    require_degree("second differentiation matrix", n, 2)?;
    let d = diff_matrix(n)?.into_entries();
    Ok(OperatorMatrix::new(OperatorRole::Diff2, &d * &d))
}

/// Drops the first and last rows and columns of a square matrix.
pub fn strip(op: &OperatorMatrix) -> Result<OperatorMatrix> {
    let (rows, cols) = (op.rows(), op.cols());
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    if rows < 3 {
        return Err(Error::TooShort {
            what: "stripped operator",
            min: 3,
            got: rows,
        });
    }
    let inner = op.entries.view((1, 1), (rows - 2, cols - 2)).into_owned();
    Ok(OperatorMatrix::new(OperatorRole::Diff2Stripped, inner))
}

/// Solves the stripped system `D~^2 y~ = f~` by LU and pads `y` with zero
/// boundary values.
pub fn solve_stripped(f: &NodeVector) -> Result<NodeVector> {
    let n = f.grid_degree();
    require_degree("stripped linear system", n, 2)?;
    let a = strip(&diff2_matrix(n)?)?.into_entries();
    let rhs = DVector::from_column_slice(&f.values()[1..n]);
    let interior = a.lu().solve(&rhs).ok_or(Error::Singular)?;
    let mut y = vec![0.0; n + 1];
    y[1..n].copy_from_slice(interior.as_slice());
    NodeVector::new(n, y)
}

/// Barycentric evaluation of the degree-`from` interpolant on the degree-`to`
/// grid, as a `(to+1) x (from+1)` matrix. Target nodes that coincide with a
/// source node (`k/to == j/from`) get an exact unit row.
pub fn reinterp_matrix(from: usize, to: usize) -> Result<OperatorMatrix> {
    require_degree("reinterpolation source grid", from, 1)?;
    require_degree("reinterpolation target grid", to, 1)?;
    let w = relative_weights(from);
    let mut r = DMatrix::zeros(to + 1, from + 1);
    for k in 0..=to {
        if (k * from).is_multiple_of(to) {
            r[(k, k * from / to)] = 1.0;
            continue;
        }
        let terms: Vec<f64> = (0..=from)
            .map(|j| w[j] / cos_pi_diff(k, to, j, from))
            .collect();
        let total: f64 = terms.iter().sum();
        for (j, t) in terms.iter().enumerate() {
            r[(k, j)] = t / total;
        }
    }
    Ok(OperatorMatrix::new(OperatorRole::Reinterp, r))
}

/// `[0 | I | 0]`, `(n-1) x (n+1)`.
pub fn projection_matrix(n: usize) -> Result<OperatorMatrix> {
    require_degree("projection matrix", n, 2)?;
    let mut p = DMatrix::zeros(n - 1, n + 1);
    for k in 0..n - 1 {
        p[(k, k + 1)] = 1.0;
    }
    Ok(OperatorMatrix::new(OperatorRole::Projection, p))
}

/// Barycentric weights of the interior nodes `x_1, ..., x_{n-1}`, up to a
/// common factor. Products are accumulated as logarithms so large `n` does
/// not overflow.
fn interior_weights(n: usize) -> Vec<f64> {
    let logs: Vec<(f64, f64)> = (1..n)
        .map(|j| {
            let mut log_mag = 0.0;
            let mut sign = 1.0;
            for k in (1..n).filter(|&k| k != j) {
                let d = grid_diff(n, j, k);
                log_mag -= d.abs().ln();
                if d < 0.0 {
                    sign = -sign;
                }
            }
            (sign, log_mag)
        })
        .collect();
    let peak = logs.iter().map(|l| l.1).fold(f64::NEG_INFINITY, f64::max);
    logs.into_iter()
        .map(|(sign, log_mag)| sign * (log_mag - peak).exp())
        .collect()
}

/// Maps the `n-1` interior values of a degree-`(n-2)` polynomial to all
/// `n+1` nodes: identity in the middle, barycentric extrapolation to `x_0 = 1`
/// and `x_n = -1` in the first and last rows.
pub fn extension_matrix(n: usize) -> Result<OperatorMatrix> {
    require_degree("extension matrix", n, 2)?;
    let w = interior_weights(n);
    let mut e = DMatrix::zeros(n + 1, n - 1);
    for k in 0..n - 1 {
        e[(k + 1, k)] = 1.0;
    }
    for target in [0, n] {
        let terms: Vec<f64> = (1..n)
            .zip(&w)
            .map(|(j, wj)| wj / grid_diff(n, target, j))
            .collect();
        let total: f64 = terms.iter().sum();
        for (col, t) in terms.iter().enumerate() {
            e[(target, col)] = t / total;
        }
    }
    Ok(OperatorMatrix::new(OperatorRole::Extension, e))
}

/// `[e_0; P D^2; e_n]`.
pub fn diff2_bc_matrix(n: usize) -> Result<OperatorMatrix> {
    require_degree("boundary-embedded second derivative", n, 2)?;
    let mut m = diff2_matrix(n)?.into_entries();
    m.row_mut(0).fill(0.0);
    m.row_mut(n).fill(0.0);
    m[(0, 0)] = 1.0;
    m[(n, n)] = 1.0;
    Ok(OperatorMatrix::new(OperatorRole::Diff2Bc, m))
}

/// `[(x_0 + x)/2 | G E | -(x_n + x)/2]`: the Green matrix acting on interior
/// data plus the two linear boundary lifts.
pub fn green_bc_matrix(n: usize) -> Result<OperatorMatrix> {
    require_degree("boundary-embedded Green matrix", n, 2)?;
    let x = cgl_points(n)?;
    let g = green_matrix(n)?.into_entries();
    let e = extension_matrix(n)?.into_entries();
    let ge = &g * &e;
    let mut m = DMatrix::zeros(n + 1, n + 1);
    m.view_mut((0, 1), (n + 1, n - 1)).copy_from(&ge);
    for (k, &xk) in x.iter().enumerate() {
        m[(k, 0)] = 0.5 * (x[0] + xk);
        m[(k, n)] = -0.5 * (x[n] + xk);
    }
    Ok(OperatorMatrix::new(OperatorRole::GreenBc, m))
}

fn max_deviation_from_identity(m: &DMatrix<f64>) -> f64 {
    let mut dev: f64 = 0.0;
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            let target = if r == c { 1.0 } else { 0.0 };
            dev = dev.max((m[(r, c)] - target).abs());
        }
    }
    dev
}

/// `max |strip(G D^2) - I|`.
pub fn verify_left_inverse(n: usize) -> Result<f64> {
    require_degree("left-inverse check", n, 3)?;
    let g = green_matrix(n)?.into_entries();
    let d2 = diff2_matrix(n)?.into_entries();
    let product = OperatorMatrix::new(OperatorRole::Diff2, &g * &d2);
    Ok(max_deviation_from_identity(strip(&product)?.entries()))
}

/// `max |R_{N->N-2} D^2 G R_{N-2->N} - I|`, an `(N-1) x (N-1)` identity check.
pub fn verify_right_inverse(n: usize) -> Result<f64> {
    require_degree("right-inverse check", n, 4)?;
    let down = reinterp_matrix(n, n - 2)?.into_entries();
    let up = reinterp_matrix(n - 2, n)?.into_entries();
    let d2 = diff2_matrix(n)?.into_entries();
    let g = green_matrix(n)?.into_entries();
    let product = down * (d2 * (g * up));
    Ok(max_deviation_from_identity(&product))
}

/// Deviations of `D2_BC G_BC` and `G_BC D2_BC` from the identity.
pub fn verify_bc_inverse(n: usize) -> Result<(f64, f64)> {
    let d = diff2_bc_matrix(n)?.into_entries();
    let g = green_bc_matrix(n)?.into_entries();
    Ok((
        max_deviation_from_identity(&(&d * &g)),
        max_deviation_from_identity(&(&g * &d)),
    ))
}
