//! Discrete Green matrix for `y'' = f` with zero Dirichlet boundary conditions
//! on `[-1, 1]`, built on Chebyshev-Gauss-Lobatto collocation.
//!
//! The solution operator is assembled column by column from exact integrals of
//! the Lagrange basis. Those integrals are evaluated in Chebyshev coefficient
//! space and moved between node values and coefficients with an orthonormal
//! DCT-I, so a full `(N+1) x (N+1)` Green matrix costs `O(N^2 log N)` and a
//! single application without the matrix costs `O(N log N)`.
//!
//! Module map:
//!
//! - [`cheb`]: grids, barycentric weights, node/coefficient transforms.
//! - [`dct`]: the self-inverse DCT-I kernel.
//! - [`calculus`]: `extend`, `integrate`, `reduce` and the Lagrange-basis primitives.
//! - [`green`]: the Green function, Green matrix assembly, matrix-free apply, BVP dispatch.
//! - [`operators`]: differentiation, reinterpolation, projection/extension and the
//!   boundary-embedded inverse pair.
//! - [`quadrature`]: Clenshaw-Curtis weights and the consistent scalar product.
//! - [`oracle`]: slow exact references (monomial arithmetic, naive DCT, dense Green matrix).
//!
//! Grid ordering is descending throughout: `points[0] = 1`, `points[N] = -1`.
//!
//! # Example
//!
//! ```
//! use chebgreen::{green_matrix, apply_green_matrix_free, ChebGrid, NodeVector};
//!
//! let grid = ChebGrid::new(16).unwrap();
//! let f = NodeVector::from_fn(&grid, |x| x.exp());
//! let dense = green_matrix(16).unwrap().apply(&f).unwrap();
//! let free = apply_green_matrix_free(&f).unwrap();
//! for (a, b) in dense.values().iter().zip(free.values()) {
//!     assert!((a - b).abs() < 1e-13);
//! }
//! ```

pub mod calculus;
pub mod cheb;
pub mod dct;
mod error;
pub mod green;
pub mod operators;
pub mod oracle;
pub mod quadrature;

pub use calculus::{
    extend, integrate_coeffs, lagrange_integrals, node_poly_primitive, reduce_fine_to_coarse,
    PrimitivePair,
};
pub use cheb::{
    barycentric_weights_cgl, cgl_points, coeffs_to_nodes, eval_chebyshev_at_cgl, node_to_coeffs,
    ChebGrid, CoeffVector, NodeVector,
};
pub use dct::dct1;
pub use error::{Error, Result};
pub use green::{
    apply_green_matrix_free, green_function_eval, green_matrix, solve_bvp, GreenMatrix, SolveMethod,
};
pub use operators::{
    diff2_bc_matrix, diff2_matrix, diff_matrix, extension_matrix, green_bc_matrix,
    projection_matrix, reinterp_matrix, solve_stripped, strip, verify_bc_inverse,
    verify_left_inverse, verify_right_inverse, OperatorMatrix, OperatorRole,
};
pub use quadrature::{
    cc_weights, consistent_gram_matrix, consistent_inner_product, verify_d2_symmetry, GramMatrix,
    QuadratureWeights,
};
