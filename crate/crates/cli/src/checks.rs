use anyhow::{bail, Result};
use chebgreen::oracle::{green_matrix_dense_oracle, GREEN_ORACLE_DEGREE_LIMIT};
use chebgreen::{
    cc_weights, green_matrix, lagrange_integrals, verify_bc_inverse, verify_d2_symmetry,
    verify_left_inverse, verify_right_inverse,
};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Oracle,
    LeftInverse,
    RightInverse,
    BcInverse,
    Centrosymmetry,
    Symmetry,
    CcWeights,
    All,
}

const SINGLE: [CheckKind; 7] = [
    CheckKind::Oracle,
    CheckKind::LeftInverse,
    CheckKind::RightInverse,
    CheckKind::BcInverse,
    CheckKind::Centrosymmetry,
    CheckKind::Symmetry,
    CheckKind::CcWeights,
];

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub check: &'static str,
    pub n: usize,
    pub deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Oracle => "oracle",
            CheckKind::LeftInverse => "left-inverse",
            CheckKind::RightInverse => "right-inverse",
            CheckKind::BcInverse => "bc-inverse",
            CheckKind::Centrosymmetry => "centrosymmetry",
            CheckKind::Symmetry => "symmetry",
            CheckKind::CcWeights => "cc-weights",
            CheckKind::All => "all",
        }
    }

    fn degree_range(self) -> (usize, usize) {
        match self {
            CheckKind::Oracle => (1, GREEN_ORACLE_DEGREE_LIMIT),
            CheckKind::LeftInverse | CheckKind::BcInverse | CheckKind::Symmetry => (3, usize::MAX),
            CheckKind::RightInverse => (4, usize::MAX),
            CheckKind::Centrosymmetry | CheckKind::CcWeights | CheckKind::All => (1, usize::MAX),
        }
    }

    fn applies_to(self, n: usize) -> bool {
        let (lo, hi) = self.degree_range();
        (lo..=hi).contains(&n)
    }

    /// Identity checks lose accuracy like the condition number of `D^2`,
    /// about `N^4`.
    fn tolerance(self, n: usize) -> f64 {
        match self {
            CheckKind::Oracle => 1e-12,
            CheckKind::Centrosymmetry => 0.0,
            CheckKind::CcWeights => 1e-13,
            _ => (2.0 * (n as f64).powi(4) * f64::EPSILON).max(1e-13),
        }
    }

    fn deviation(self, n: usize) -> Result<f64> {
        Ok(match self {
            CheckKind::Oracle => {
                let fast = green_matrix(n)?;
                let slow = green_matrix_dense_oracle(n)?;
                (fast.entries() - slow.entries()).amax()
            }
            CheckKind::LeftInverse => verify_left_inverse(n)?,
            CheckKind::RightInverse => verify_right_inverse(n)?,
            CheckKind::BcInverse => {
                let (dg, gd) = verify_bc_inverse(n)?;
                dg.max(gd)
            }
            CheckKind::Centrosymmetry => {
                let g = green_matrix(n)?;
                let mut dev: f64 = 0.0;
                for i in 0..=n {
                    dev = dev.max(g.get(0, i).abs()).max(g.get(n, i).abs());
                    for k in 0..=n {
                        dev = dev.max((g.get(k, i) - g.get(n - k, n - i)).abs());
                    }
                }
                dev
            }
            CheckKind::Symmetry => verify_d2_symmetry(n)?,
            CheckKind::CcWeights => {
                let w = cc_weights(n)?;
                let mut dev = (w.weights().iter().sum::<f64>() - 2.0).abs();
                for (i, wi) in w.weights().iter().enumerate() {
                    if *wi <= 0.0 {
                        return Ok(f64::INFINITY);
                    }
                    let exact = lagrange_integrals(i, n)?.up.values()[0];
                    dev = dev.max((wi - exact).abs());
                }
                dev
            }
            CheckKind::All => unreachable!("expanded before evaluation"),
        })
    }
}

/// Runs one check, or for `all` every check defined at degree `n`.
pub fn run(kind: CheckKind, n: usize) -> Result<Vec<CheckReport>> {
    let kinds: Vec<CheckKind> = if kind == CheckKind::All {
        SINGLE.into_iter().filter(|k| k.applies_to(n)).collect()
    } else {
        if !kind.applies_to(n) {
            let (lo, hi) = kind.degree_range();
            if hi == usize::MAX {
                bail!("check {} needs n >= {lo}, got {n}", kind.name());
            }
            bail!("check {} needs {lo} <= n <= {hi}, got {n}", kind.name());
        }
        vec![kind]
    };
    kinds
        .into_iter()
        .map(|k| {
            let deviation = k.deviation(n)?;
            let tolerance = k.tolerance(n);
            Ok(CheckReport {
                check: k.name(),
                n,
                deviation,
                tolerance,
                passed: deviation <= tolerance,
            })
        })
        .collect()
}
