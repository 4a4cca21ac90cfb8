//! The Green function of `y'' = f` on `[-1, 1]` with `y(-1) = y(1) = 0`, its
//! discrete counterpart and the solvers built on it.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::calculus::{
    antiderivative, extend, fine_coeffs_to_coarse_nodes, lagrange_integrals,
    node_poly_primitive_shape, node_poly_scale, PrimitivePair,
};
use crate::cheb::{cgl_points, node_to_coeffs, NodeVector};
use crate::error::{Error, Result};
use crate::operators::solve_stripped;
use crate::oracle;

/// `G(x, xi)`: `(x+1)(xi-1)/2` for `x <= xi`, `(x-1)(xi+1)/2` otherwise.
pub fn green_function_eval(x: f64, xi: f64) -> Result<f64> {
    for v in [x, xi] {
        if !(-1.0..=1.0).contains(&v) {
            return Err(Error::OutOfDomain(v));
        }
    }
    Ok(if x <= xi {
        0.5 * (x + 1.0) * (xi - 1.0)
    } else {
        0.5 * (x - 1.0) * (xi + 1.0)
    })
}

/// Dense discrete solution operator: `entries[(k, i)] = int G(x_k, xi) l_i(xi) dxi`.
///
/// Rows `0` and `N` are zero and `entries[(k, i)] == entries[(N-k, N-i)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GreenMatrix {
    degree: usize,
    entries: DMatrix<f64>,
}

impl GreenMatrix {
    pub(crate) fn from_entries(degree: usize, entries: DMatrix<f64>) -> Self {
        debug_assert_eq!(entries.shape(), (degree + 1, degree + 1));
        Self { degree, entries }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<f64> {
        self.entries
    }

    pub fn get(&self, k: usize, i: usize) -> f64 {
        self.entries[(k, i)]
    }

    /// `G f`.
    pub fn apply(&self, f: &NodeVector) -> Result<NodeVector> {
        if f.grid_degree() != self.degree {
            return Err(Error::LengthMismatch {
                expected: self.degree + 1,
                got: f.values().len(),
            });
        }
        let y = &self.entries * DVector::from_column_slice(f.values());
        NodeVector::new(self.degree, y.as_slice().to_vec())
    }
}

/// Assembles the Green matrix of degree `n`.
///
/// For `n >= 3` column `i` is
/// `(x+1)/2 * [P_down + (x_i - 1) L_down] + (x-1)/2 * [P_up + (x_i + 1) L_up]`
/// with `L` the anchored integrals of `l_i` and `P` those of `lambda_i l(x)`.
/// Only the left half of the columns is computed (in parallel); the rest
/// follow from centrosymmetry. Degrees 1 and 2 use the exact dense oracle.
pub fn green_matrix(n: usize) -> Result<GreenMatrix> {
    if n < 1 {
        return Err(Error::DegreeTooSmall {
            what: "Green matrix",
            degree: n,
            min: 1,
        });
    }
    let mut entries = if n < 3 {
        oracle::green_matrix_dense_oracle(n)?.into_entries()
    } else {
        assemble_from_primitives(n)?
    };
    make_centrosymmetric(&mut entries);
    for i in 0..=n {
        entries[(0, i)] = 0.0;
        entries[(n, i)] = 0.0;
    }
    Ok(GreenMatrix::from_entries(n, entries))
}

fn assemble_from_primitives(n: usize) -> Result<DMatrix<f64>> {
    let x = cgl_points(n)?;
    let shape = node_poly_primitive_shape(n)?;
    let half = n / 2;

    let columns: Vec<Vec<f64>> = (0..=half)
        .into_par_iter()
        .map(|i| green_column(i, n, &x, &shape))
        .collect::<Result<_>>()?;

    let mut entries = DMatrix::zeros(n + 1, n + 1);
    for (i, column) in columns.iter().enumerate() {
        for (k, &g) in column.iter().enumerate() {
            entries[(k, i)] = g;
            entries[(n - k, n - i)] = g;
        }
    }
    Ok(entries)
}

fn green_column(i: usize, n: usize, x: &[f64], shape: &PrimitivePair) -> Result<Vec<f64>> {
    let lagrange = lagrange_integrals(i, n)?;
    let scale = node_poly_scale(i, n);
    let (l_up, l_down) = (lagrange.up.values(), lagrange.down.values());
    let (p_up, p_down) = (shape.up.values(), shape.down.values());
    let xi = x[i];
    Ok((0..=n)
        .map(|k| {
            let upper = scale * p_down[k] + (xi - 1.0) * l_down[k];
            let lower = scale * p_up[k] + (xi + 1.0) * l_up[k];
            0.5 * (x[k] + 1.0) * upper + 0.5 * (x[k] - 1.0) * lower
        })
        .collect())
}

/// Replaces each mirror pair `(k, i)`, `(N-k, N-i)` by its mean.
fn make_centrosymmetric(entries: &mut DMatrix<f64>) {
    let n = entries.nrows() - 1;
    for i in 0..=n {
        for k in 0..=n {
            let (mk, mi) = (n - k, n - i);
            if (i, k) < (mi, mk) {
                let mean = 0.5 * (entries[(k, i)] + entries[(mk, mi)]);
                entries[(k, i)] = mean;
                entries[(mk, mi)] = mean;
            }
        }
    }
}

/// Applies the discrete solution operator without forming the matrix.
///
/// `f` goes to coefficients, is padded to length `2N+1`, integrated twice,
/// brought back to nodes on the degree-`2N` grid and thinned to the original
/// nodes. Subtracting the linear function through the two endpoint values then
/// enforces the boundary conditions. The double primitive has degree `N+2`,
/// which the fine grid still carries exactly, so the result equals `G f`.
pub fn apply_green_matrix_free(f: &NodeVector) -> Result<NodeVector> {
    let n = f.grid_degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            what: "matrix-free Green operator",
            degree: n,
            min: 2,
        });
    }
    let coeffs = extend(&node_to_coeffs(f)?, n).into_values();
    let twice = antiderivative(&antiderivative(&coeffs));
    let mut y = fine_coeffs_to_coarse_nodes(twice)?;

    let x = cgl_points(n)?;
    let (top, bottom) = (y[0], y[n]);
    for (yk, xk) in y.iter_mut().zip(&x) {
        *yk -= 0.5 * (1.0 + xk) * top + 0.5 * (1.0 - xk) * bottom;
    }
    y[0] = 0.0;
    y[n] = 0.0;
    NodeVector::new(n, y)
}

/// How [`solve_bvp`] computes the solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveMethod {
    /// Multiply by the assembled Green matrix.
    DenseGreen,
    /// [`apply_green_matrix_free`].
    MatrixFree,
    /// LU solve of the interior block of `D^2`.
    LinearSystem,
}

impl SolveMethod {
    pub const ALL: [SolveMethod; 3] = [
        SolveMethod::DenseGreen,
        SolveMethod::MatrixFree,
        SolveMethod::LinearSystem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolveMethod::DenseGreen => "dense-green",
            SolveMethod::MatrixFree => "matrix-free",
            SolveMethod::LinearSystem => "linear-system",
        }
    }
}

impl fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolveMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SolveMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

/// Node values of the solution of `y'' = f`, `y(+-1) = 0`.
pub fn solve_bvp(f: &NodeVector, method: SolveMethod) -> Result<NodeVector> {
    match method {
        SolveMethod::DenseGreen => green_matrix(f.grid_degree())?.apply(f),
        SolveMethod::MatrixFree => apply_green_matrix_free(f),
        SolveMethod::LinearSystem => solve_stripped(f),
    }
}
