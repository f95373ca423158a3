//! Mean first exit time of the simple random walk from a set: exact via the
//! external Laplacian, empirical via seeded simulation, plus survival curves
//! and integer walk counts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cube::VertexSet;
use crate::error::{Error, Result};
use crate::spectral::build_system;

/// Hard cap on the auto-chosen survival truncation length.
pub const SURVIVAL_CAP: usize = 1_000_000;

/// Mean first exit time plus the subcube bound.
#[derive(Clone, Debug, Serialize)]
pub struct ExitStats {
    pub n: u32,
    pub size: usize,
    pub exact: f64,
    pub bound: f64,
    pub equality: bool,
}

/// Full report: exact value, bound, survival curve, optional MC estimate.
#[derive(Clone, Debug, Serialize)]
pub struct ExitTimeReport {
    pub n: u32,
    pub size: usize,
    pub exact: f64,
    pub bound: f64,
    pub equality: bool,
    pub survival: Vec<f64>,
    pub mc: Option<McEstimate>,
}

#[derive(Clone, Debug, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub trials: u64,
    pub seed: u64,
}

/// Number of length-k walks staying inside the set, <E^k 1, 1>.
#[derive(Clone, Debug, Serialize)]
pub struct WalkCount {
    pub k: u32,
    pub count: u128,
}

fn log_ratio(a: &VertexSet) -> f64 {
    a.dim().n() as f64 - (a.len() as f64).log2()
}

/// Exact mean exit time and the bound n / log2(2^n/|A|), without the
/// survival curve. Cheap enough for search loops.
pub fn exit_stats(a: &VertexSet) -> Result<ExitStats> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if a.is_full() {
        return Err(Error::FullCube);
    }
    let n = a.dim().n();
    let sys = build_system(a)?;
    let q = sys.solve_unit()?.q;
    let exact = n as f64 / a.len() as f64 * q;
    let bound = n as f64 / log_ratio(a);
    Ok(ExitStats {
        n,
        size: a.len(),
        exact,
        bound,
        equality: (exact - bound).abs() <= 1e-9,
    })
}

/// Truncation length K with (lambda_1/n)^K * |A| <= 1e-9, capped.
pub fn auto_truncation(a: &VertexSet) -> Result<usize> {
    let sys = build_system(a)?;
    let lambda = sys.top_eigenvalue_estimate().max(0.0);
    let n = a.dim().n() as f64;
    if lambda <= 0.0 {
        return Ok(1);
    }
    let ratio = (lambda / n).min(1.0 - 1e-15);
    let k = ((1e-9 / a.len() as f64).ln() / ratio.ln()).ceil() as usize;
    Ok(k.clamp(1, SURVIVAL_CAP))
}

/// Full exit-time report with the survival curve truncated by the spectral
/// tail rule.
pub fn mean_exit_exact(a: &VertexSet) -> Result<ExitTimeReport> {
    let stats = exit_stats(a)?;
    let k = auto_truncation(a)?;
    let survival = survival_curve(a, k)?;
    Ok(ExitTimeReport {
        n: stats.n,
        size: stats.size,
        exact: stats.exact,
        bound: stats.bound,
        equality: stats.equality,
        survival,
        mc: None,
    })
}

/// Pr{Y > k} for k = 0..K, via iterated adjacency products normalized by n.
pub fn survival_curve(a: &VertexSet, k_max: usize) -> Result<Vec<f64>> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let sys = build_system(a)?;
    let m = sys.size();
    let n = a.dim().n() as f64;
    let mut v = vec![1.0; m];
    let mut w = vec![0.0; m];
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(1.0);
    for _ in 1..=k_max {
        sys.apply_adjacency(&v, &mut w);
        for x in w.iter_mut() {
            *x /= n;
        }
        std::mem::swap(&mut v, &mut w);
        out.push(v.iter().sum::<f64>() / m as f64);
    }
    Ok(out)
}

/// Exact integer count of length-k walks inside the set.
pub fn walk_count(a: &VertexSet, k: u32) -> Result<WalkCount> {
    if a.is_empty() {
        return Ok(WalkCount { k, count: 0 });
    }
    let sys = build_system(a)?;
    let m = sys.size();
    let mut v: Vec<u128> = vec![1; m];
    let mut w: Vec<u128> = vec![0; m];
    for _ in 0..k {
        for i in 0..m {
            let mut s: u128 = 0;
            for &j in sys.adjacency_row(i) {
                s = s
                    .checked_add(v[j as usize])
                    .ok_or_else(|| Error::Overflow("walk_count".into()))?;
            }
            w[i] = s;
        }
        std::mem::swap(&mut v, &mut w);
    }
    let mut count: u128 = 0;
    for &x in &v {
        count = count
            .checked_add(x)
            .ok_or_else(|| Error::Overflow("walk_count".into()))?;
    }
    Ok(WalkCount { k, count })
}

/// Monte Carlo estimate of the mean exit time. Each trial runs on its own
/// RNG stream, so the result is identical for any parallel schedule.
pub fn mean_exit_mc(a: &VertexSet, trials: u64, seed: u64) -> Result<McEstimate> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if a.is_full() {
        return Err(Error::FullCube);
    }
    if trials < 1 {
        return Err(Error::Parameter("trials must be >= 1".into()));
    }
    let n = a.dim().n();
    let size = a.len();
    let (sum, sum_sq) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t + 1);
            let mut v = a.nth(rng.random_range(0..size)).expect("rank in range");
            let mut y: u64 = 0;
            loop {
                v ^= 1usize << rng.random_range(0..n);
                y += 1;
                if !a.contains(v) {
                    break;
                }
            }
            (y as u128, (y as u128) * (y as u128))
        })
        .reduce(|| (0u128, 0u128), |x, y| (x.0 + y.0, x.1 + y.1));
    let t = trials as f64;
    let mean = sum as f64 / t;
    let stderr = if trials > 1 {
        let var = (sum_sq as f64 / t - mean * mean) * t / (t - 1.0);
        (var.max(0.0) / t).sqrt()
    } else {
        0.0
    };
    Ok(McEstimate {
        estimate: mean,
        stderr,
        trials,
        seed,
    })
}
