use std::hint::black_box;
use std::time::Instant;

use anyhow::Result;
use chebgreen::{
    apply_green_matrix_free, green_matrix, solve_bvp, ChebGrid, NodeVector, SolveMethod,
};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Timings {
    pub green_build: f64,
    pub dense_apply: f64,
    pub matrix_free_apply: f64,
    pub stripped_solve: f64,
}

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub repeat: usize,
    pub times_ms: Timings,
}

fn median_ms(repeat: usize, mut task: impl FnMut() -> Result<()>) -> Result<f64> {
    let mut samples = Vec::with_capacity(repeat);
    for _ in 0..repeat {
        let start = Instant::now();
        task()?;
        samples.push(start.elapsed().as_secs_f64() * 1e3);
    }
    samples.sort_by(f64::total_cmp);
    Ok(samples[samples.len() / 2])
}

pub fn run(n: usize, repeat: usize) -> Result<BenchRow> {
    let grid = ChebGrid::new(n)?;
    let f = NodeVector::from_fn(&grid, |x| (3.0 * x).sin() + x.exp());
    let g = green_matrix(n)?;

    let green_build = median_ms(repeat, || {
        black_box(green_matrix(n)?);
        Ok(())
    })?;
    let dense_apply = median_ms(repeat, || {
        black_box(g.apply(&f)?);
        Ok(())
    })?;
    let matrix_free_apply = median_ms(repeat, || {
        black_box(apply_green_matrix_free(&f)?);
        Ok(())
    })?;
    let stripped_solve = median_ms(repeat, || {
        black_box(solve_bvp(&f, SolveMethod::LinearSystem)?);
        Ok(())
    })?;
    Ok(BenchRow {
        n,
        repeat,
        times_ms: Timings {
            green_build,
            dense_apply,
            matrix_free_apply,
            stripped_solve,
        },
    })
}
