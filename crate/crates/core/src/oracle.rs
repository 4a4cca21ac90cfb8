//! Slow exact references.
//!
//! Everything here works in the monomial basis or by direct summation and
//! shares no code path with the transform-based routines it is used to check.
//! Monomial arithmetic loses accuracy quickly with degree, so the entry points
//! refuse degrees above [`MONOMIAL_DEGREE_LIMIT`] (and [`GREEN_ORACLE_DEGREE_LIMIT`]
//! for the dense Green matrix).
//!
//! Polynomials are `Vec<f64>` of ascending monomial coefficients.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::cheb::ChebGrid;
use crate::error::{Error, Result};
use crate::green::GreenMatrix;

pub const MONOMIAL_DEGREE_LIMIT: usize = 12;
pub const GREEN_ORACLE_DEGREE_LIMIT: usize = 10;
pub const GENERAL_WEIGHTS_MAX_POINTS: usize = 40;

/// Direct `O(n^2)` evaluation of the orthonormal DCT-I.
pub fn dct1_naive(v: &[f64]) -> Result<Vec<f64>> {
    let n = v.len();
    if n < 2 {
        return Err(Error::TooShort {
            what: "DCT-I",
            min: 2,
            got: n,
        });
    }
    let period = 2 * (n - 1);
    let cosines: Vec<f64> = (0..period)
        .map(|k| (PI * k as f64 / (n - 1) as f64).cos())
        .collect();
    let scale = (2.0 / (n - 1) as f64).sqrt();
    Ok((0..n)
        .map(|s| {
            let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
            let mut acc = 0.5 * v[0] + 0.5 * sign * v[n - 1];
            for (r, &vr) in v.iter().enumerate().take(n - 1).skip(1) {
                acc += vr * cosines[(r * s) % period];
            }
            scale * acc
        })
        .collect())
}

/// `lambda_j = 1 / prod_{k != j} (x_j - x_k)` by direct products.
pub fn barycentric_weights_general(points: &[f64]) -> Result<Vec<f64>> {
    if points.len() > GENERAL_WEIGHTS_MAX_POINTS {
        return Err(Error::DegreeTooLarge {
            what: "product-formula barycentric weights",
            degree: points.len(),
            max: GENERAL_WEIGHTS_MAX_POINTS,
        });
    }
    let mut weights = Vec::with_capacity(points.len());
    for (j, &xj) in points.iter().enumerate() {
        let mut prod = 1.0;
        for (k, &xk) in points.iter().enumerate() {
            if k != j {
                if xj == xk {
                    return Err(Error::DuplicatePoints);
                }
                prod *= xj - xk;
            }
        }
        weights.push(1.0 / prod);
    }
    Ok(weights)
}

pub fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// `p(x) * (x - root)`.
pub fn poly_mul_linear(p: &[f64], root: f64) -> Vec<f64> {
    let mut out = vec![0.0; p.len() + 1];
    for (m, &c) in p.iter().enumerate() {
        out[m + 1] += c;
        out[m] -= root * c;
    }
    out
}

/// Antiderivative vanishing at zero.
pub fn poly_integrate(p: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; p.len() + 1];
    for (m, &c) in p.iter().enumerate() {
        out[m + 1] = c / (m + 1) as f64;
    }
    out
}

pub fn poly_derivative(p: &[f64]) -> Vec<f64> {
    if p.len() <= 1 {
        return vec![0.0];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(m, &c)| m as f64 * c)
        .collect()
}

/// `int_a^b p`.
pub fn poly_definite_integral(p: &[f64], a: f64, b: f64) -> f64 {
    let prim = poly_integrate(p);
    poly_eval(&prim, b) - poly_eval(&prim, a)
}

/// Monomial coefficients of the Lagrange basis polynomial `l_i` of `grid`.
pub fn lagrange_monomial_coeffs(i: usize, grid: &ChebGrid) -> Result<Vec<f64>> {
    let n = grid.degree();
    if n > MONOMIAL_DEGREE_LIMIT {
        return Err(Error::DegreeTooLarge {
            what: "monomial Lagrange basis",
            degree: n,
            max: MONOMIAL_DEGREE_LIMIT,
        });
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let x = grid.points();
    let mut numerator = vec![1.0];
    let mut denominator = 1.0;
    for (k, &xk) in x.iter().enumerate() {
        if k != i {
            numerator = poly_mul_linear(&numerator, xk);
            denominator *= x[i] - xk;
        }
    }
    Ok(numerator.into_iter().map(|c| c / denominator).collect())
}

/// Chebyshev coefficients of a polynomial given in the monomial basis, using
/// `x T_m = (T_{m+1} + T_{|m-1|}) / 2` (exact in rational arithmetic).
pub fn monomial_to_chebyshev(monomial: &[f64]) -> Vec<f64> {
    let len = monomial.len();
    let mut result = vec![0.0; len];
    // power[j] = Chebyshev coefficients of x^m, built up one degree at a time
    let mut power = vec![0.0; len];
    power[0] = 1.0;
    for (m, &a) in monomial.iter().enumerate() {
        if m > 0 {
            let mut next = vec![0.0; len];
            for (j, &c) in power.iter().enumerate() {
                if c == 0.0 {
                    continue;
                }
                if j == 0 {
                    next[1] += c;
                } else {
                    next[j - 1] += 0.5 * c;
                    if j + 1 < len {
                        next[j + 1] += 0.5 * c;
                    }
                }
            }
            power = next;
        }
        for (r, p) in result.iter_mut().zip(&power) {
            *r += a * p;
        }
    }
    result
}

/// Monomial coefficients of `T_k`.
pub fn chebyshev_monomial(k: usize) -> Vec<f64> {
    let mut prev = vec![1.0];
    if k == 0 {
        return prev;
    }
    let mut cur = vec![0.0, 1.0];
    for _ in 1..k {
        let mut next = vec![0.0; cur.len() + 1];
        for (m, &c) in cur.iter().enumerate() {
            next[m + 1] += 2.0 * c;
        }
        for (m, &c) in prev.iter().enumerate() {
            next[m] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact solution of `y'' = f`, `y(-1) = y(1) = 0` for polynomial `f`:
/// double antiderivative minus its linear interpolant through the endpoints.
pub fn solve_bvp_monomial(f: &[f64]) -> Vec<f64> {
    let mut y = poly_integrate(&poly_integrate(f));
    let right = poly_eval(&y, 1.0);
    let left = poly_eval(&y, -1.0);
    y[0] -= 0.5 * (right + left);
    y[1] -= 0.5 * (right - left);
    y
}

/// Green matrix by splitting each integral at `x_k` and integrating the
/// monomial form of `(xi -+ 1) l_i(xi)` exactly on both pieces.
pub fn green_matrix_dense_oracle(n: usize) -> Result<GreenMatrix> {
    if n > GREEN_ORACLE_DEGREE_LIMIT {
        return Err(Error::DegreeTooLarge {
            what: "dense Green oracle",
            degree: n,
            max: GREEN_ORACLE_DEGREE_LIMIT,
        });
    }
    let grid = ChebGrid::new(n)?;
    let x = grid.points();
    let mut entries = DMatrix::zeros(n + 1, n + 1);
    for i in 0..=n {
        let l = lagrange_monomial_coeffs(i, &grid)?;
        let right_branch = poly_integrate(&poly_mul_linear(&l, 1.0));
        let left_branch = poly_integrate(&poly_mul_linear(&l, -1.0));
        for k in 1..n {
            let upper = poly_eval(&right_branch, 1.0) - poly_eval(&right_branch, x[k]);
            let lower = poly_eval(&left_branch, x[k]) - poly_eval(&left_branch, -1.0);
            entries[(k, i)] = 0.5 * (x[k] + 1.0) * upper + 0.5 * (x[k] - 1.0) * lower;
        }
    }
    Ok(GreenMatrix::from_entries(n, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn naive_dct_examples() {
        let out = dct1_naive(&[1.0, 1.0, 1.0]).unwrap();
        assert_abs_diff_eq!(out[0], 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(out[1], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(out[2], 0.0, epsilon = 1e-15);
        let v: Vec<f64> = (0..17).map(|k| ((k * 37) % 13) as f64 - 6.0).collect();
        let back = dct1_naive(&dct1_naive(&v).unwrap()).unwrap();
        for (a, b) in back.iter().zip(&v) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-13);
        }
    }

    #[test]
    fn general_weights() {
        assert_eq!(
            barycentric_weights_general(&[1.0, -1.0]).unwrap(),
            vec![0.5, -0.5]
        );
        assert_eq!(
            barycentric_weights_general(&[1.0, 0.0, -1.0]).unwrap(),
            vec![0.5, -1.0, 0.5]
        );
        assert_eq!(
            barycentric_weights_general(&[1.0, 0.0, 1.0]),
            Err(Error::DuplicatePoints)
        );
        assert!(barycentric_weights_general(&vec![0.0; 41]).is_err());
    }

    #[test]
    fn cgl_weights_from_products_match_closed_form_at_n4() {
        let grid = ChebGrid::new(4).unwrap();
        let general = barycentric_weights_general(grid.points()).unwrap();
        for (g, c) in general.iter().zip(grid.bary_weights()) {
            assert_abs_diff_eq!(g, c, epsilon = 1e-14);
        }
    }

    #[test]
    fn lagrange_coefficients() {
        let grid = ChebGrid::new(2).unwrap();
        let l1 = lagrange_monomial_coeffs(1, &grid).unwrap();
        for (a, b) in l1.iter().zip([1.0, 0.0, -1.0]) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-15);
        }
        let l0 = lagrange_monomial_coeffs(0, &grid).unwrap();
        for (a, b) in l0.iter().zip([0.0, 0.5, 0.5]) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-15);
        }
        for n in 1..=12 {
            let grid = ChebGrid::new(n).unwrap();
            for i in 0..=n {
                let l = lagrange_monomial_coeffs(i, &grid).unwrap();
                for (k, &x) in grid.points().iter().enumerate() {
                    let delta = if k == i { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(poly_eval(&l, x), delta, epsilon = 1e-11);
                }
            }
        }
        assert!(lagrange_monomial_coeffs(0, &ChebGrid::new(13).unwrap()).is_err());
    }

    #[test]
    fn basis_change_of_chebyshev_polynomials() {
        for k in 0..=10 {
            let mono = chebyshev_monomial(k);
            let cheb = monomial_to_chebyshev(&mono);
            for (j, c) in cheb.iter().enumerate() {
                assert_abs_diff_eq!(*c, if j == k { 1.0 } else { 0.0 }, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn dense_oracle_small_cases() {
        let g = green_matrix_dense_oracle(3).unwrap();
        assert_abs_diff_eq!(g.get(1, 1), -0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(g.get(2, 2), -0.25, epsilon = 1e-14);
        for n in 1..=10 {
            let g = green_matrix_dense_oracle(n).unwrap();
            for i in 0..=n {
                assert_eq!(g.get(0, i), 0.0);
                assert_eq!(g.get(n, i), 0.0);
                for k in 0..=n {
                    assert_abs_diff_eq!(g.get(k, i), g.get(n - k, n - i), epsilon = 1e-13);
                }
            }
        }
        assert!(green_matrix_dense_oracle(11).is_err());
    }

    #[test]
    fn monomial_bvp_solution() {
        // y'' = 1 -> (x^2 - 1)/2
        let y = solve_bvp_monomial(&[1.0]);
        for (a, b) in y.iter().zip([-0.5, 0.0, 0.5]) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-15);
        }
        let y = solve_bvp_monomial(&[0.0, 0.0, 0.0, 1.0]);
        assert_abs_diff_eq!(poly_eval(&y, 1.0), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(poly_eval(&y, -1.0), 0.0, epsilon = 1e-15);
        let second = poly_derivative(&poly_derivative(&y));
        assert_abs_diff_eq!(second[3], 1.0, epsilon = 1e-15);
    }
}
