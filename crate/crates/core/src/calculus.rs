//! Calculus in Chebyshev coefficient space.
//!
//! Integrating a degree-`N` polynomial raises its degree by one, so the
//! coefficient vector is first padded to length `2N + 1` ([`extend`]),
//! integrated with the three-term rule ([`integrate_coeffs`]), taken to node
//! values on the degree-`2N` grid and then thinned to every other node
//! ([`reduce_fine_to_coarse`]). The fine grid contains the coarse one
//! (`y_{2m} = x_m`), so the thinned values are exact values of the primitive
//! at the original nodes.

use crate::cheb::{coeffs_to_nodes, node_to_coeffs, CoeffVector, NodeVector};
use crate::error::{Error, Result};

/// Appends `m` zero coefficients.
pub fn extend(coeffs: &CoeffVector, m: usize) -> CoeffVector {
    let mut values = Vec::with_capacity(coeffs.len() + m);
    values.extend_from_slice(coeffs.values());
    values.resize(coeffs.len() + m, 0.0);
    CoeffVector::new(values).expect("non-empty input stays non-empty")
}

/// Antiderivative in coefficient space, same length as the input.
///
/// `out[0] = u1/4`, `out[1] = u0 - u2/2`, `out[j] = (u_{j-1} - u_{j+1})/(2j)`.
/// The result is a primitive up to an additive constant. The input must end in
/// at least two zero coefficients; otherwise the raised degree would not fit
/// and the result would be silently truncated.
pub fn integrate_coeffs(coeffs: &CoeffVector) -> Result<CoeffVector> {
    let u = coeffs.values();
    if u.len() < 3 {
        return Err(Error::TooShort {
            what: "coefficient integration",
            min: 3,
            got: u.len(),
        });
    }
    if u[u.len() - 1] != 0.0 || u[u.len() - 2] != 0.0 {
        return Err(Error::MissingTrailingZeros);
    }
    CoeffVector::new(antiderivative(u))
}

/// The integration recurrence without the trailing-zero check. Exact as long as
/// the last input coefficient is zero.
pub(crate) fn antiderivative(u: &[f64]) -> Vec<f64> {
    let len = u.len();
    debug_assert!(len >= 2 && u[len - 1] == 0.0);
    let at = |j: usize| u.get(j).copied().unwrap_or(0.0);
    let mut out = vec![0.0; len];
    out[0] = 0.25 * at(1);
    out[1] = at(0) - 0.5 * at(2);
    for (j, o) in out.iter_mut().enumerate().skip(2) {
        *o = (at(j - 1) - at(j + 1)) / (2 * j) as f64;
    }
    out
}

/// Keeps the even-indexed entries of an odd-length vector.
pub fn reduce_fine_to_coarse(v: &[f64]) -> Result<Vec<f64>> {
    if v.len().is_multiple_of(2) {
        return Err(Error::EvenLength(v.len()));
    }
    Ok(v.iter().step_by(2).copied().collect())
}

/// Node values of a length-`2N+1` coefficient vector on the degree-`N` grid.
pub(crate) fn fine_coeffs_to_coarse_nodes(fine: Vec<f64>) -> Result<Vec<f64>> {
    let nodes = coeffs_to_nodes(&CoeffVector::new(fine)?)?;
    reduce_fine_to_coarse(nodes.values())
}

/// Node values of the two anchored primitives of one integrand:
/// `up[k] = int_{-1}^{x_k}` and `down[k] = int_{x_k}^{1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimitivePair {
    pub up: NodeVector,
    pub down: NodeVector,
}

impl PrimitivePair {
    /// Fixes the integration constant of arbitrary primitive values `F(x_k)`.
    /// The anchors `up[N]` and `down[0]` come out as exact zeros.
    pub(crate) fn from_primitive(values: &[f64]) -> Result<Self> {
        let n = values.len() - 1;
        let (top, bottom) = (values[0], values[n]);
        let up = values.iter().map(|v| v - bottom).collect();
        let down = values.iter().map(|v| top - v).collect();
        Ok(Self {
            up: NodeVector::new(n, up)?,
            down: NodeVector::new(n, down)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.up.grid_degree()
    }

    pub(crate) fn scaled(&self, factor: f64) -> Self {
        let scale = |v: &NodeVector| {
            NodeVector::new(
                v.grid_degree(),
                v.values().iter().map(|x| x * factor).collect(),
            )
            .expect("length preserved")
        };
        Self {
            up: scale(&self.up),
            down: scale(&self.down),
        }
    }
}

/// Integrals of the Lagrange basis polynomial `l_i` from `-1` to every node
/// and from every node to `1`.
pub fn lagrange_integrals(i: usize, n: usize) -> Result<PrimitivePair> {
    if n < 1 {
        return Err(Error::DegreeTooSmall {
            what: "Lagrange-basis integrals",
            degree: n,
            min: 1,
        });
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let mut unit = vec![0.0; n + 1];
    unit[i] = 1.0;
    let coeffs = node_to_coeffs(&NodeVector::new(n, unit)?)?;
    let primitive = antiderivative(extend(&coeffs, n).values());
    let values = fine_coeffs_to_coarse_nodes(primitive)?;
    PrimitivePair::from_primitive(&values)
}

/// Anchored primitives of `lambda_i * l(x)`, where `l` is the node polynomial
/// `(T_{N+1} - T_{N-1}) / 2^N` and `lambda_i` the barycentric weight.
///
/// The primitive is `lambda_i / 2^(N+1) * (T_{N+2}/(N+2) - 2 T_N/N + T_{N-2}/(N-2))`.
/// With `lambda_i = (-1)^i 2^(N-1) / N` the powers of two cancel to
/// `(-1)^i / (4N)` (halved at `i = 0, N`), so nothing overflows for large `N`.
pub fn node_poly_primitive(i: usize, n: usize) -> Result<PrimitivePair> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(node_poly_primitive_shape(n)?.scaled(node_poly_scale(i, n)))
}

/// `lambda_i / 2^(N+1)` with the powers of two cancelled.
pub(crate) fn node_poly_scale(i: usize, n: usize) -> f64 {
    let sign = if i.is_multiple_of(2) { 1.0 } else { -1.0 };
    let half = if i == 0 || i == n { 0.5 } else { 1.0 };
    sign * half / (4.0 * n as f64)
}

/// Anchored primitives of `T_{N+2}/(N+2) - 2 T_N/N + T_{N-2}/(N-2)`; the
/// per-column factor of [`node_poly_primitive`] is applied by the caller.
pub(crate) fn node_poly_primitive_shape(n: usize) -> Result<PrimitivePair> {
    if n < 3 {
        return Err(Error::DegreeTooSmall {
            what: "node-polynomial primitive",
            degree: n,
            min: 3,
        });
    }
    let nf = n as f64;
    let mut fine = vec![0.0; 2 * n + 1];
    fine[n - 2] = 1.0 / (nf - 2.0);
    fine[n] = -2.0 / nf;
    fine[n + 2] = 1.0 / (nf + 2.0);
    let values = fine_coeffs_to_coarse_nodes(fine)?;
    PrimitivePair::from_primitive(&values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::ChebGrid;
    use crate::oracle;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (k, (a, b)) in got.iter().zip(want).enumerate() {
            assert!((a - b).abs() <= tol, "entry {k}: {a} vs {b}");
        }
    }

    /// Coefficients of the derivative; `T_j' ` via the backward recurrence.
    fn differentiate_coeffs(c: &[f64]) -> Vec<f64> {
        let len = c.len();
        let mut d = vec![0.0; len + 1];
        for k in (1..len).rev() {
            d[k - 1] = d[k + 1] + 2.0 * k as f64 * c[k];
        }
        d[0] *= 0.5;
        d.truncate(len);
        d
    }

    #[test]
    fn extend_pads_with_zeros() {
        let c = CoeffVector::new(vec![1.0, 2.0]).unwrap();
        assert_eq!(extend(&c, 3).values(), &[1.0, 2.0, 0.0, 0.0, 0.0]);
        assert_eq!(extend(&c, 0), c);
    }

    #[test]
    fn extended_coefficients_interlace_on_fine_grid() {
        let c = CoeffVector::new(vec![0.3, -0.7, 0.2, 1.1, -0.4]).unwrap();
        let coarse = coeffs_to_nodes(&c).unwrap();
        let fine = coeffs_to_nodes(&extend(&c, 4)).unwrap();
        for (m, v) in coarse.values().iter().enumerate() {
            assert_abs_diff_eq!(fine.values()[2 * m], *v, epsilon = 1e-14);
        }
    }

    #[test]
    fn integrate_chebyshev_basis() {
        let t0 = integrate_coeffs(&CoeffVector::new(vec![1.0, 0.0, 0.0]).unwrap()).unwrap();
        assert_eq!(t0.values(), &[0.0, 1.0, 0.0]);
        let t1 = integrate_coeffs(&CoeffVector::new(vec![0.0, 1.0, 0.0, 0.0]).unwrap()).unwrap();
        assert_eq!(t1.values(), &[0.25, 0.0, 0.25, 0.0]);
        let t2 =
            integrate_coeffs(&CoeffVector::new(vec![0.0, 0.0, 1.0, 0.0, 0.0]).unwrap()).unwrap();
        assert_close(t2.values(), &[0.0, -0.5, 0.0, 1.0 / 6.0, 0.0], 1e-16);
    }

    #[test]
    fn integrate_requires_trailing_zeros() {
        let c = CoeffVector::new(vec![1.0, 0.0, 1.0]).unwrap();
        assert_eq!(integrate_coeffs(&c), Err(Error::MissingTrailingZeros));
        let c = CoeffVector::new(vec![1.0, 1.0, 0.0]).unwrap();
        assert_eq!(integrate_coeffs(&c), Err(Error::MissingTrailingZeros));
        assert!(matches!(
            integrate_coeffs(&CoeffVector::new(vec![1.0, 0.0]).unwrap()),
            Err(Error::TooShort { .. })
        ));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            reduce_fine_to_coarse(&[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap(),
            vec![1.0, 3.0, 5.0]
        );
        assert_eq!(reduce_fine_to_coarse(&[1.0, 2.0, 3.0]).unwrap().len(), 2);
        assert_eq!(
            reduce_fine_to_coarse(&[1.0, 2.0]),
            Err(Error::EvenLength(2))
        );
    }

    #[test]
    fn reduce_of_extended_matches_coarse_transform() {
        let n = 9;
        let c = CoeffVector::new((0..=n).map(|j| (j as f64 * 0.37).sin()).collect()).unwrap();
        let fine = coeffs_to_nodes(&extend(&c, n)).unwrap();
        let reduced = reduce_fine_to_coarse(fine.values()).unwrap();
        assert_close(&reduced, coeffs_to_nodes(&c).unwrap().values(), 1e-13);
    }

    #[test]
    fn lagrange_integrals_quadratic() {
        let l1 = lagrange_integrals(1, 2).unwrap();
        assert_close(l1.up.values(), &[4.0 / 3.0, 2.0 / 3.0, 0.0], 1e-15);
        assert_close(l1.down.values(), &[0.0, 2.0 / 3.0, 4.0 / 3.0], 1e-15);
        let l0 = lagrange_integrals(0, 2).unwrap();
        assert_close(l0.up.values(), &[1.0 / 3.0, -1.0 / 12.0, 0.0], 1e-15);
        assert!(matches!(
            lagrange_integrals(3, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(lagrange_integrals(0, 0).is_err());
    }

    #[test]
    fn lagrange_integrals_match_monomial_oracle() {
        for n in 1..=10 {
            let grid = ChebGrid::new(n).unwrap();
            let x = grid.points();
            for i in 0..=n {
                let pair = lagrange_integrals(i, n).unwrap();
                let l = oracle::lagrange_monomial_coeffs(i, &grid).unwrap();
                let up: Vec<f64> = x
                    .iter()
                    .map(|&xk| oracle::poly_definite_integral(&l, -1.0, xk))
                    .collect();
                let down: Vec<f64> = x
                    .iter()
                    .map(|&xk| oracle::poly_definite_integral(&l, xk, 1.0))
                    .collect();
                assert_close(pair.up.values(), &up, 1e-12);
                assert_close(pair.down.values(), &down, 1e-12);
            }
        }
    }

    #[test]
    fn anchors_are_exact_and_sums_constant() {
        for n in [1, 2, 3, 7, 32, 101] {
            for i in 0..=n {
                let pair = lagrange_integrals(i, n).unwrap();
                assert_eq!(pair.up.values()[n], 0.0);
                assert_eq!(pair.down.values()[0], 0.0);
                let total = pair.up.values()[0];
                for (u, d) in pair.up.values().iter().zip(pair.down.values()) {
                    assert_abs_diff_eq!(u + d, total, epsilon = 1e-14);
                }
            }
        }
    }

    #[test]
    fn lagrange_integrals_partition_of_unity() {
        for n in [1, 4, 17, 64] {
            let x = ChebGrid::new(n).unwrap().points().to_vec();
            let mut sum = vec![0.0; n + 1];
            for i in 0..=n {
                for (s, v) in sum
                    .iter_mut()
                    .zip(lagrange_integrals(i, n).unwrap().up.values())
                {
                    *s += v;
                }
            }
            for (s, xk) in sum.iter().zip(&x) {
                assert_abs_diff_eq!(*s, xk + 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn node_poly_primitive_examples() {
        let p = node_poly_primitive(0, 3).unwrap();
        assert_abs_diff_eq!(p.up.values()[0], 2.0 / 45.0, epsilon = 1e-15);
        for n in [3, 4, 9, 50] {
            for i in 0..=n {
                let p = node_poly_primitive(i, n).unwrap();
                assert_eq!(p.down.values()[0], 0.0);
                assert_eq!(p.up.values()[n], 0.0);
                let total = p.up.values()[0];
                for (u, d) in p.up.values().iter().zip(p.down.values()) {
                    assert_abs_diff_eq!(u + d, total, epsilon = 1e-15);
                }
            }
        }
        assert!(matches!(
            node_poly_primitive(0, 2),
            Err(Error::DegreeTooSmall { .. })
        ));
        assert!(node_poly_primitive(5, 4).is_err());
    }

    #[test]
    fn weighted_moment_identity_matches_oracle() {
        // int_{-1}^{x_k} xi l_i(xi) = P_up + x_i L_up
        for n in 3..=10 {
            let grid = ChebGrid::new(n).unwrap();
            let x = grid.points();
            for i in 0..=n {
                let l = oracle::lagrange_monomial_coeffs(i, &grid).unwrap();
                let xl = oracle::poly_mul_linear(&l, 0.0);
                let lag = lagrange_integrals(i, n).unwrap();
                let poly = node_poly_primitive(i, n).unwrap();
                for k in 0..=n {
                    let got = poly.up.values()[k] + x[i] * lag.up.values()[k];
                    let want = oracle::poly_definite_integral(&xl, -1.0, x[k]);
                    assert_abs_diff_eq!(got, want, epsilon = 1e-12);
                    let got = poly.down.values()[k] + x[i] * lag.down.values()[k];
                    let want = oracle::poly_definite_integral(&xl, x[k], 1.0);
                    assert_abs_diff_eq!(got, want, epsilon = 1e-12);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn integrate_then_differentiate_is_identity(
            mut values in prop::collection::vec(-10.0f64..10.0, 1..40),
        ) {
            values.extend([0.0, 0.0]);
            let c = CoeffVector::new(values.clone()).unwrap();
            let back = differentiate_coeffs(integrate_coeffs(&c).unwrap().values());
            for (a, b) in back.iter().zip(&values) {
                prop_assert!((a - b).abs() < 1e-12 * (1.0 + b.abs()));
            }
        }
    }
}
