//! Random edge-polytope experiments: the exact expected-f1 formula for
//! G(n,p) and a deterministic Monte-Carlo estimator.

use num::{BigRational, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph;
use crate::lp::{rat_int, Rat};
use crate::rng::derive_seed;
use crate::skeleton;

/// Statistics record for one Monte-Carlo run.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    /// Exact sample mean of f1 (sum of integers over trials).
    pub mean_f1: BigRational,
    pub stderr: f64,
    pub expected_f1: f64,
    pub z_score: f64,
}

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// E f1 for G(n,p), exactly:
/// n C(n-1,2) p^2 + 1/2 C(n,2) C(n-2,2) p^2 (1-p^2)^2.
pub fn expected_f1_exact(n: usize, p: &BigRational) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::validation("expected_f1: need n >= 2"));
    }
    if p < &Rat::zero() || p > &rat_int(1) {
        return Err(Error::validation("expected_f1: p must lie in [0,1]"));
    }
    let n = n as u64;
    let p2 = p * p;
    let q = rat_int(1) - &p2;
    let term1 = rat_int((n * binom2(n - 1)) as i64) * &p2;
    let term2 =
        Rat::new((binom2(n) * binom2(n - 2)).into(), 2.into()) * &p2 * &q * &q;
    Ok(term1 + term2)
}

/// Floating-point convenience wrapper for irrational p.
pub fn expected_f1(n: usize, p: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::validation("expected_f1: need n >= 2"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::validation("expected_f1: p must lie in [0,1]"));
    }
    let n = n as f64;
    let p2 = p * p;
    let q = 1.0 - p2;
    Ok(n * ((n - 1.0) * (n - 2.0) / 2.0) * p2
        + 0.5 * (n * (n - 1.0) / 2.0) * ((n - 2.0) * (n - 3.0) / 2.0) * p2 * q * q)
}

/// The closed form of E f1 at the optimum p = 1/sqrt(3):
/// n^4/54 + n^3/18 - 8n^2/27 + 2n/9.
pub fn expected_f1_at_opt(n: usize) -> f64 {
    let n = n as f64;
    n.powi(4) / 54.0 + n.powi(3) / 18.0 - 8.0 * n.powi(2) / 27.0 + 2.0 * n / 9.0
}

/// Sample `trials` graphs G(n,p) (trial i seeded from (seed, i)),
/// compute f1 of each, and report the statistics. Isolated vertices of
/// a sample contribute no polytope vertices, so f1 is taken on the
/// induced subgraph of non-isolated vertices.
pub fn estimate_f1_mc(
    n: usize,
    p: f64,
    trials: usize,
    seed: u64,
) -> Result<ExperimentReport> {
    if trials < 1 {
        return Err(Error::validation("estimate_f1_mc: need trials >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::validation("estimate_f1_mc: p must lie in [0,1]"));
    }
    let mut sum: u128 = 0;
    let mut sum_sq: u128 = 0;
    for i in 0..trials {
        let g = graph::gnp(n, p, derive_seed(seed, i as u64))?;
        let f1 = match g.without_isolated() {
            Some(h) => skeleton::f_counts(&h)?.1,
            None => 0,
        };
        sum += f1 as u128;
        sum_sq += (f1 as u128) * (f1 as u128);
    }
    let t = trials as f64;
    let mean_f1 = Rat::new(sum.into(), (trials as u64).into());
    let mean = mean_f1.to_f64().unwrap_or(f64::NAN);
    let variance = if trials > 1 {
        ((sum_sq as f64) - t * mean * mean) / (t - 1.0)
    } else {
        0.0
    };
    let stderr = (variance.max(0.0) / t).sqrt();
    let expected = expected_f1(n, p)?;
    let z_score = if stderr > 0.0 {
        (mean - expected) / stderr
    } else if (mean - expected).abs() < 1e-9 {
        0.0
    } else {
        f64::INFINITY
    };
    Ok(ExperimentReport {
        n,
        p,
        trials,
        seed,
        mean_f1,
        stderr,
        expected_f1: expected,
        z_score,
    })
}
