//! Clenshaw–Curtis weights and the exact discrete scalar product built on a
//! doubled grid.

use nalgebra::{DMatrix, DVector};

use crate::cheb::{CoeffVector, NodeVector};
use crate::dct::dct1;
use crate::error::{Error, Result};
use crate::operators::{diff2_matrix, reinterp_matrix};

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureWeights {
    degree: usize,
    weights: Vec<f64>,
}

impl QuadratureWeights {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate(&self, f: &NodeVector) -> Result<f64> {
        if f.grid_degree() != self.degree {
            return Err(Error::LengthMismatch {
                expected: self.degree + 1,
                got: f.values().len(),
            });
        }
        Ok(self
            .weights
            .iter()
            .zip(f.values())
            .map(|(w, v)| w * v)
            .sum())
    }
}

/// Symmetric positive-definite matrix `S` with `q^T S p = ∫ p q` for node
/// vectors of polynomials of degree at most `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    degree: usize,
    entries: DMatrix<f64>,
}

impl GramMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<f64> {
        self.entries
    }
}

/// Clenshaw–Curtis weights `w_i = ∫ l_i` on the degree-`m` grid.
///
/// Every Lagrange basis integral is the same linear functional (integrate the
/// Chebyshev coefficients) applied to a unit vector, so all of them come out of
/// one transposed transform of the moments `∫ T_k`.
pub fn cc_weights(m: usize) -> Result<QuadratureWeights> {
    if m < 1 {
        return Err(Error::DegreeTooSmall {
            what: "quadrature rule",
            degree: m,
            min: 1,
        });
    }
    let moments: Vec<f64> = (0..=m)
        .map(|k| {
            if k % 2 == 0 {
                2.0 / (1.0 - (k * k) as f64)
            } else {
                0.0
            }
        })
        .collect();
    let scale = (2.0 / m as f64).sqrt();
    let mut weights: Vec<f64> = dct1(&moments)?.into_iter().map(|v| v * scale).collect();
    weights[0] *= 0.5;
    weights[m] *= 0.5;
    for j in 0..m.div_ceil(2) {
        let mean = 0.5 * (weights[j] + weights[m - j]);
        weights[j] = mean;
        weights[m - j] = mean;
    }
    Ok(QuadratureWeights { degree: m, weights })
}

/// `S = R^T W R`, with `R` the reinterpolation onto the degree-`2n` grid and
/// `W` its Clenshaw–Curtis weights.
pub fn consistent_gram_matrix(n: usize) -> Result<GramMatrix> {
    let r = reinterp_matrix(n, 2 * n)?.into_entries();
    let w = cc_weights(2 * n)?;
    let weighted = DMatrix::from_diagonal(&DVector::from_column_slice(w.weights())) * &r;
    let s = r.transpose() * weighted;
    let entries = DMatrix::from_fn(n + 1, n + 1, |i, j| 0.5 * (s[(i, j)] + s[(j, i)]));
    Ok(GramMatrix { degree: n, entries })
}

/// `q^T S p`, evaluated in a form that is symmetric in `p` and `q` bit for bit.
pub fn consistent_inner_product(p: &NodeVector, q: &NodeVector, s: &GramMatrix) -> Result<f64> {
    let n = s.degree;
    for v in [p, q] {
        if v.grid_degree() != n {
            return Err(Error::LengthMismatch {
                expected: n + 1,
                got: v.values().len(),
            });
        }
    }
    let (a, b) = (p.values(), q.values());
    let mut total = 0.0;
    for i in 0..=n {
        let mut row = 0.0;
        for j in 0..=n {
            row += s.entries[(i, j)] * 0.5 * (a[i] * b[j] + a[j] * b[i]);
        }
        total += row;
    }
    Ok(total)
}

/// Largest `|<D^2 p, q>_S - <p, D^2 q>_S| / (|p|_inf |q|_inf)` over pairs from
/// the zero-boundary basis `(1 - x^2) T_m`, `m = 0..=n-2`.
pub fn verify_d2_symmetry(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::DegreeTooSmall {
            what: "second-derivative symmetry check",
            degree: n,
            min: 3,
        });
    }
    let s = consistent_gram_matrix(n)?;
    let d2 = diff2_matrix(n)?;
    let basis: Vec<(NodeVector, NodeVector, f64)> = (0..=n - 2)
        .map(|m| {
            let mut coeffs = vec![0.0; n + 1];
            // x^2 T_m = (2 T_m + T_{m+2} + T_{|m-2|}) / 4
            coeffs[m] += 0.5;
            coeffs[m + 2] -= 0.25;
            coeffs[m.abs_diff(2)] -= 0.25;
            let p = crate::cheb::coeffs_to_nodes(&CoeffVector::new(coeffs)?)?;
            let mut values = p.into_values();
            values[0] = 0.0;
            values[n] = 0.0;
            let p = NodeVector::new(n, values)?;
            let dp = NodeVector::new(n, d2.apply(p.values())?)?;
            let norm = p.values().iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
            Ok((p, dp, norm))
        })
        .collect::<Result<_>>()?;
    let mut worst: f64 = 0.0;
    for (p, dp, np) in &basis {
        for (q, dq, nq) in &basis {
            let lhs = consistent_inner_product(dp, q, &s)?;
            let rhs = consistent_inner_product(p, dq, &s)?;
            worst = worst.max((lhs - rhs).abs() / (np * nq));
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::lagrange_integrals;
    use crate::cheb::{cgl_points, ChebGrid};
    use crate::oracle;

    fn node_vec(n: usize, f: impl Fn(f64) -> f64) -> NodeVector {
        NodeVector::from_fn(&ChebGrid::new(n).unwrap(), f)
    }

    fn cheb_t(k: usize) -> impl Fn(f64) -> f64 {
        move |x: f64| (k as f64 * x.clamp(-1.0, 1.0).acos()).cos()
    }

    #[test]
    fn cc_weight_examples() {
        let w = cc_weights(2).unwrap();
        for (a, b) in w.weights().iter().zip([1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0]) {
            assert!((a - b).abs() < 1e-15);
        }
        let w = cc_weights(4).unwrap();
        let want = [1.0 / 15.0, 8.0 / 15.0, 0.8, 8.0 / 15.0, 1.0 / 15.0];
        for (a, b) in w.weights().iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
        for w in cc_weights(1).unwrap().weights() {
            assert!((w - 1.0).abs() < 1e-15);
        }
        assert!(cc_weights(0).is_err());
    }

    #[test]
    fn cc_weights_positive_symmetric_and_sum_to_two() {
        for m in (1..=64).chain([127, 128, 1000, 4096]) {
            let w = cc_weights(m).unwrap();
            let total: f64 = w.weights().iter().sum();
            assert!((total - 2.0).abs() < 1e-13, "m = {m}: {total}");
            assert!(w.weights().iter().all(|v| *v > 0.0), "m = {m}");
            for j in 0..=m {
                assert_eq!(w.weights()[j], w.weights()[m - j]);
            }
        }
    }

    #[test]
    fn cc_weights_match_full_interval_lagrange_integrals() {
        for m in [1, 2, 5, 8, 13, 32] {
            let w = cc_weights(m).unwrap();
            for i in 0..=m {
                let l = lagrange_integrals(i, m).unwrap();
                assert!(
                    (w.weights()[i] - l.up.values()[0]).abs() < 1e-13,
                    "m = {m}, i = {i}"
                );
            }
        }
    }

    #[test]
    fn cc_weights_match_monomial_oracle() {
        for m in 1..=10 {
            let grid = ChebGrid::new(m).unwrap();
            let w = cc_weights(m).unwrap();
            for i in 0..=m {
                let l = oracle::lagrange_monomial_coeffs(i, &grid).unwrap();
                let exact = oracle::poly_definite_integral(&l, -1.0, 1.0);
                assert!((w.weights()[i] - exact).abs() < 1e-12, "m = {m}, i = {i}");
            }
        }
    }

    #[test]
    fn gram_matrix_examples() {
        for n in [1, 2, 5, 16] {
            let s = consistent_gram_matrix(n).unwrap();
            let one = node_vec(n, |_| 1.0);
            let x = node_vec(n, |x| x);
            let ip = |p: &NodeVector, q: &NodeVector| consistent_inner_product(p, q, &s).unwrap();
            assert!((ip(&one, &one) - 2.0).abs() < 1e-13);
            assert!((ip(&x, &x) - 2.0 / 3.0).abs() < 1e-13);
            if n >= 2 {
                assert!(ip(&x, &node_vec(n, cheb_t(2))).abs() < 1e-14);
            }
            assert_eq!(s.entries(), &s.entries().transpose());
            assert!(s.entries().clone().cholesky().is_some(), "n = {n}");
        }
    }

    #[test]
    fn inner_product_examples() {
        let s4 = consistent_gram_matrix(4).unwrap();
        let sq = node_vec(4, |x| x * x);
        let v = consistent_inner_product(&sq, &sq, &s4).unwrap();
        assert!((v - 0.4).abs() < 1e-14);

        let s8 = consistent_gram_matrix(8).unwrap();
        let v = consistent_inner_product(&node_vec(8, cheb_t(3)), &node_vec(8, cheb_t(4)), &s8)
            .unwrap();
        assert!(v.abs() < 1e-14);

        let s6 = consistent_gram_matrix(6).unwrap();
        let t6 = oracle::chebyshev_monomial(6);
        let sq: Vec<f64> = (0..13)
            .map(|k| {
                (0..=k)
                    .filter(|&a| a < 7 && k - a < 7)
                    .map(|a| t6[a] * t6[k - a])
                    .sum()
            })
            .collect();
        let exact = oracle::poly_definite_integral(&sq, -1.0, 1.0);
        let t = node_vec(6, cheb_t(6));
        let v = consistent_inner_product(&t, &t, &s6).unwrap();
        assert!((v - exact).abs() < 1e-13, "{v} vs {exact}");

        let wrong = node_vec(5, |x| x);
        assert!(consistent_inner_product(&wrong, &t, &s6).is_err());
    }

    #[test]
    fn inner_product_is_exact_on_monomial_pairs() {
        for n in [1, 3, 8, 16] {
            let s = consistent_gram_matrix(n).unwrap();
            let xs = cgl_points(n).unwrap();
            for a in 0..=n {
                for b in 0..=n {
                    let p =
                        NodeVector::new(n, xs.iter().map(|x| x.powi(a as i32)).collect()).unwrap();
                    let q =
                        NodeVector::new(n, xs.iter().map(|x| x.powi(b as i32)).collect()).unwrap();
                    let k = a + b;
                    let exact = if k % 2 == 0 {
                        2.0 / (k + 1) as f64
                    } else {
                        0.0
                    };
                    let got = consistent_inner_product(&p, &q, &s).unwrap();
                    assert!((got - exact).abs() < 1e-12, "n = {n}, a = {a}, b = {b}");
                }
            }
        }
    }

    #[test]
    fn inner_product_argument_order() {
        let s = consistent_gram_matrix(9).unwrap();
        let p = node_vec(9, |x| x.exp());
        let q = node_vec(9, |x| (3.0 * x).sin());
        assert_eq!(
            consistent_inner_product(&p, &q, &s).unwrap(),
            consistent_inner_product(&q, &p, &s).unwrap()
        );
    }

    #[test]
    fn d2_symmetry_on_zero_boundary_space() {
        assert!(verify_d2_symmetry(3).unwrap() < 1e-12);
        assert!(verify_d2_symmetry(8).unwrap() < 1e-10);
        assert!(verify_d2_symmetry(16).unwrap() < 1e-9);
        assert!(verify_d2_symmetry(2).is_err());
    }
}
