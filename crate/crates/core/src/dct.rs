//! Orthonormal DCT-I.
//!
//! For `v` of length `n`,
//!
//! ```text
//! dct1(v)[s] = sqrt(2/(n-1)) * ( v[0]/2 + sum_{r=1}^{n-2} v[r] cos(pi r s/(n-1)) + (-1)^s v[n-1]/2 )
//! ```
//!
//! With this scaling the transform is its own inverse. Other common DCT-I
//! normalisations differ from this one by diagonal scalings: an implementation
//! that weights the endpoints by `1/sqrt(2)` on input and output (the
//! orthogonal-matrix form) equals `diag(sqrt(c)) * dct1 * diag(1/sqrt(c))`
//! with `c = [2, 1, ..., 1, 2]`, so every identity in this crate can be
//! rewritten for it by conjugating with `sqrt(c)`.
//!
//! Lengths from 4 upward go through a real FFT of the even extension
//! (length `2(n-1)`); lengths 2 and 3 are written out.

use std::cell::RefCell;
use std::sync::Arc;

use realfft::{RealFftPlanner, RealToComplex};

use crate::error::{Error, Result};

thread_local! {
    // Plans are cached per thread, so concurrent transforms never share a planner.
    static PLANNER: RefCell<RealFftPlanner<f64>> = RefCell::new(RealFftPlanner::new());
}

fn forward_plan(len: usize) -> Arc<dyn RealToComplex<f64>> {
    PLANNER.with(|planner| planner.borrow_mut().plan_fft_forward(len))
}

/// Orthonormal, self-inverse DCT-I of `v` (length at least 2).
pub fn dct1(v: &[f64]) -> Result<Vec<f64>> {
    let n = v.len();
    let scale = 0.5 * (2.0 / (n.max(2) - 1) as f64).sqrt();
    Ok(cosine_sum(v)?.into_iter().map(|x| x * scale).collect())
}

/// Unnormalised DCT-I:
/// `out[s] = v[0] + (-1)^s v[n-1] + 2 sum_{r=1}^{n-2} v[r] cos(pi r s/(n-1))`.
///
/// The node/coefficient transforms use this directly so that their only
/// scaling is a single division by the degree.
pub(crate) fn cosine_sum(v: &[f64]) -> Result<Vec<f64>> {
    let n = v.len();
    if n < 2 {
        return Err(Error::TooShort {
            what: "DCT-I",
            min: 2,
            got: n,
        });
    }
    Ok(match n {
        2 => vec![v[0] + v[1], v[0] - v[1]],
        3 => vec![
            v[0] + 2.0 * v[1] + v[2],
            v[0] - v[2],
            v[0] - 2.0 * v[1] + v[2],
        ],
        _ => cosine_sum_fft(v),
    })
}

fn cosine_sum_fft(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    let m = 2 * (n - 1);
    let fft = forward_plan(m);

    let mut extended = fft.make_input_vec();
    extended[..n].copy_from_slice(v);
    for r in 1..n - 1 {
        extended[m - r] = v[r];
    }
    let mut spectrum = fft.make_output_vec();
    fft.process(&mut extended, &mut spectrum)
        .expect("buffers are sized by the plan");
    spectrum.iter().map(|c| c.re).collect()
}
