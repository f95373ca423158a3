//! The external Laplacian L = nI - E of the subgraph induced by a set A,
//! linear solves against the all-ones vector, the spectrum of E with the
//! spectral weights of 1, and outdegree concentration diagnostics.

use std::sync::OnceLock;

use serde::Serialize;

use crate::cube::{neighbors, VertexSet};
use crate::error::{Error, Result};

/// Above this size, solves go matrix-free (conjugate gradients).
pub const DENSE_SOLVE_CAP: usize = 1024;
/// Dense eigendecomposition is only attempted up to this size.
pub const DENSE_EIGEN_CAP: usize = 4096;
/// Residual threshold for solve_unit (infinity norm).
pub const RESIDUAL_TOL: f64 = 1e-10;

/// Adjacency structure of the subgraph induced by a vertex set, with the
/// ambient dimension kept for the external Laplacian.
pub struct InducedSystem {
    base: VertexSet,
    vertices: Vec<usize>,
    adj: Vec<Vec<u32>>,
    n: u32,
    spectrum_cache: OnceLock<SpectralData>,
}

/// Eigenvalues of E (descending) and the squared coefficients of the all-ones
/// vector in an orthonormal eigenbasis.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralData {
    pub eigenvalues: Vec<f64>,
    pub weights: Vec<f64>,
    pub n: u32,
    pub size: usize,
}

/// Solution of L x = 1 together with q = <L^{-1} 1, 1>.
#[derive(Clone, Debug)]
pub struct UnitSolve {
    pub x: Vec<f64>,
    pub q: f64,
    pub residual: f64,
}

pub fn build_system(a: &VertexSet) -> Result<InducedSystem> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let dim = a.dim();
    let vertices: Vec<usize> = a.iter().collect();
    let rank = |v: usize| vertices.binary_search(&v).expect("member") as u32;
    let mut adj = Vec::with_capacity(vertices.len());
    for &v in &vertices {
        let mut row: Vec<u32> = neighbors(v, dim)
            .filter(|&u| a.contains(u))
            .map(rank)
            .collect();
        row.sort_unstable();
        adj.push(row);
    }
    Ok(InducedSystem {
        base: a.clone(),
        vertices,
        adj,
        n: dim.n(),
        spectrum_cache: OnceLock::new(),
    })
}

impl InducedSystem {
    #[inline]
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn base(&self) -> &VertexSet {
        &self.base
    }

    /// Members of A in the matrix index order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn internal_degree(&self, i: usize) -> u32 {
        self.adj[i].len() as u32
    }

    pub fn out_degree(&self, i: usize) -> u32 {
        self.n - self.internal_degree(i)
    }

    /// Internal neighbor indices of the i-th vertex.
    pub fn adjacency_row(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    /// Exact edge boundary, <L 1, 1> as an integer.
    pub fn boundary(&self) -> u64 {
        (0..self.size()).map(|i| self.out_degree(i) as u64).sum()
    }

    /// Dense m x m adjacency matrix of the induced subgraph, row-major.
    pub fn dense_adjacency(&self) -> Vec<f64> {
        let m = self.size();
        let mut e = vec![0.0; m * m];
        for (i, row) in self.adj.iter().enumerate() {
            for &j in row {
                e[i * m + j as usize] = 1.0;
            }
        }
        e
    }

    /// out = E x.
    pub fn apply_adjacency(&self, x: &[f64], out: &mut [f64]) {
        for (i, row) in self.adj.iter().enumerate() {
            out[i] = row.iter().map(|&j| x[j as usize]).sum();
        }
    }

    /// out = (nI - E) x.
    pub fn apply_laplacian(&self, x: &[f64], out: &mut [f64]) {
        let n = self.n as f64;
        for (i, row) in self.adj.iter().enumerate() {
            let s: f64 = row.iter().map(|&j| x[j as usize]).sum();
            out[i] = n * x[i] - s;
        }
    }

    /// Solve L x = 1 and return q = sum(x). Errors on the full cube, where L
    /// is singular.
    pub fn solve_unit(&self) -> Result<UnitSolve> {
        if self.base.is_full() {
            return Err(Error::FullCube);
        }
        let m = self.size();
        let ones = vec![1.0; m];
        let mut x = if m <= DENSE_SOLVE_CAP {
            self.solve_dense(&ones)?
        } else {
            self.solve_cg(&ones)?
        };
        // one step of iterative refinement against the matrix-free residual
        let mut lx = vec![0.0; m];
        self.apply_laplacian(&x, &mut lx);
        let r: Vec<f64> = (0..m).map(|i| 1.0 - lx[i]).collect();
        let d = if m <= DENSE_SOLVE_CAP {
            self.solve_dense(&r)?
        } else {
            self.solve_cg(&r)?
        };
        for i in 0..m {
            x[i] += d[i];
        }
        self.apply_laplacian(&x, &mut lx);
        let residual = (0..m).map(|i| (1.0 - lx[i]).abs()).fold(0.0, f64::max);
        if residual > RESIDUAL_TOL {
            return Err(Error::SolveResidual {
                residual,
                threshold: RESIDUAL_TOL,
            });
        }
        let q = x.iter().sum();
        Ok(UnitSolve { x, q, residual })
    }

    fn solve_dense(&self, b: &[f64]) -> Result<Vec<f64>> {
        let m = self.size();
        let n = self.n as f64;
        let mut l = self.dense_adjacency();
        for v in l.iter_mut() {
            *v = -*v;
        }
        for i in 0..m {
            l[i * m + i] += n;
        }
        cholesky_solve(&mut l, m, b)
    }

    fn solve_cg(&self, b: &[f64]) -> Result<Vec<f64>> {
        let m = self.size();
        let mut x = vec![0.0; m];
        let mut r = b.to_vec();
        let mut p = r.clone();
        let mut ap = vec![0.0; m];
        let mut rr: f64 = r.iter().map(|v| v * v).sum();
        let b_norm = b.iter().map(|v| v.abs()).fold(0.0, f64::max).max(1.0);
        let target = 1e-13 * b_norm * (m as f64).sqrt();
        let max_iter = 50 * m + 1000;
        for _ in 0..max_iter {
            if rr.sqrt() <= target {
                break;
            }
            self.apply_laplacian(&p, &mut ap);
            let pap: f64 = p.iter().zip(&ap).map(|(a, b)| a * b).sum();
            let alpha = rr / pap;
            for i in 0..m {
                x[i] += alpha * p[i];
                r[i] -= alpha * ap[i];
            }
            let rr_new: f64 = r.iter().map(|v| v * v).sum();
            let beta = rr_new / rr;
            rr = rr_new;
            for i in 0..m {
                p[i] = r[i] + beta * p[i];
            }
        }
        Ok(x)
    }

    /// Eigenvalues of E and the spectral weights of 1, cached after the first
    /// call.
    pub fn spectrum(&self) -> Result<&SpectralData> {
        if let Some(sd) = self.spectrum_cache.get() {
            return Ok(sd);
        }
        let sd = self.compute_spectrum()?;
        Ok(self.spectrum_cache.get_or_init(|| sd))
    }

    fn compute_spectrum(&self) -> Result<SpectralData> {
        let m = self.size();
        if m > DENSE_EIGEN_CAP {
            return Err(Error::Parameter(format!(
                "dense eigendecomposition limited to size {} (got {})",
                DENSE_EIGEN_CAP, m
            )));
        }
        let mut e = self.dense_adjacency();
        let (eigenvalues, vectors) = jacobi_eigen(&mut e, m)?;
        // weight of eigenvector v_i is <1, v_i>^2
        let mut pairs: Vec<(f64, f64)> = (0..m)
            .map(|i| {
                let alpha: f64 = (0..m).map(|j| vectors[j * m + i]).sum();
                (eigenvalues[i], alpha * alpha)
            })
            .collect();
        pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        Ok(SpectralData {
            eigenvalues: pairs.iter().map(|p| p.0).collect(),
            weights: pairs.iter().map(|p| p.1).collect(),
            n: self.n,
            size: m,
        })
    }

    /// Largest eigenvalue of E estimated matrix-free by power iteration.
    /// Cheap and sufficient for truncation bounds; for exact values use
    /// `spectrum`.
    pub fn top_eigenvalue_estimate(&self) -> f64 {
        let m = self.size();
        let mut v = vec![1.0 / (m as f64).sqrt(); m];
        let mut w = vec![0.0; m];
        let mut lambda = 0.0;
        for _ in 0..200 {
            self.apply_adjacency(&v, &mut w);
            let norm: f64 = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 {
                return 0.0;
            }
            let next: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
            for i in 0..m {
                v[i] = w[i] / norm;
            }
            if (next - lambda).abs() <= 1e-12 * norm.max(1.0) {
                lambda = next;
                break;
            }
            lambda = next;
        }
        lambda
    }
}

impl SpectralData {
    /// Sum of weights; equals |A| up to roundoff.
    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// sum_i alpha_i^2 (n - lambda_i) = <L 1, 1> = |boundary|.
    pub fn boundary_sum(&self) -> f64 {
        let n = self.n as f64;
        self.eigenvalues
            .iter()
            .zip(&self.weights)
            .map(|(l, w)| w * (n - l))
            .sum()
    }

    /// sum_i alpha_i^2 / (n - lambda_i) = <L^{-1} 1, 1>. Errors when some
    /// eigenvalue equals n (the full cube).
    pub fn harmonic_sum(&self) -> Result<f64> {
        let n = self.n as f64;
        let mut total = 0.0;
        for (&l, &w) in self.eigenvalues.iter().zip(&self.weights) {
            let gap = n - l;
            if gap <= 1e-12 {
                return Err(Error::FullCube);
            }
            total += w / gap;
        }
        Ok(total)
    }

    /// Weights summed per eigenvalue, eigenvalues grouped to the given
    /// tolerance (degenerate eigenvalues are only meaningful jointly).
    pub fn grouped(&self, tol: f64) -> Vec<(f64, f64)> {
        let mut out: Vec<(f64, f64)> = Vec::new();
        for (&l, &w) in self.eigenvalues.iter().zip(&self.weights) {
            match out.last_mut() {
                Some(last) if (last.0 - l).abs() <= tol => last.1 += w,
                _ => out.push((l, w)),
            }
        }
        out
    }
}

/// Outcome of the eigenvalue-form isoperimetric bound
/// sum alpha_i^2/(n - lambda_i) <= |A| / log2(2^n/|A|).
#[derive(Clone, Debug, Serialize)]
pub struct EigenInequality {
    pub lhs: f64,
    pub bound: f64,
    pub margin: f64,
    pub passed: bool,
}

pub fn verify_eigen_inequality(sd: &SpectralData, a: &VertexSet) -> Result<EigenInequality> {
    if a.is_full() {
        return Err(Error::FullCube);
    }
    let lhs = sd.harmonic_sum()?;
    let log_ratio = a.dim().n() as f64 - (a.len() as f64).log2();
    let bound = a.len() as f64 / log_ratio;
    let margin = bound - lhs;
    Ok(EigenInequality {
        lhs,
        bound,
        margin,
        passed: lhs <= bound + 1e-9,
    })
}

/// Outdegree statistics and the concentration window check.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub outdegrees: Vec<u32>,
    pub mean: f64,
    pub second_moment: f64,
    pub log_ratio: f64,
    pub eps: f64,
    pub eps_prime: f64,
    pub delta: f64,
    /// The hypothesis is near-isoperimetry with the derived eps; when it
    /// fails the claim does not apply and `passed` is None.
    pub applicable: bool,
    pub window: (f64, f64),
    pub window_probability: f64,
    pub probability_bound: f64,
    pub passed: Option<bool>,
}

pub fn degree_concentration(
    sys: &InducedSystem,
    eps_prime: f64,
    delta: f64,
) -> Result<DegreeReport> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::Parameter(format!("delta must be in (0,1], got {}", delta)));
    }
    let m = sys.size();
    let n = sys.n() as f64;
    let log_ratio = n - (m as f64).log2();
    let outdegrees: Vec<u32> = (0..m).map(|i| sys.out_degree(i)).collect();
    let boundary = sys.boundary() as f64;
    let mean = boundary / m as f64;
    let second_moment =
        outdegrees.iter().map(|&d| (d as f64) * (d as f64)).sum::<f64>() / m as f64;
    let eps = eps_prime / (2.0 * n) * log_ratio;
    let applicable = boundary <= (1.0 + eps) * m as f64 * log_ratio + 1e-9;
    let window = (
        (1.0 - delta) * log_ratio,
        (1.0 + eps) * (1.0 + delta) * log_ratio,
    );
    let inside = outdegrees
        .iter()
        .filter(|&&d| (d as f64) >= window.0 - 1e-12 && (d as f64) <= window.1 + 1e-12)
        .count();
    let window_probability = inside as f64 / m as f64;
    let probability_bound = (1.0 - eps_prime / (delta * delta)).max(0.0);
    let passed = if applicable {
        Some(window_probability >= probability_bound - 1e-12)
    } else {
        None
    };
    Ok(DegreeReport {
        outdegrees,
        mean,
        second_moment,
        log_ratio,
        eps,
        eps_prime,
        delta,
        applicable,
        window,
        window_probability,
        probability_bound,
        passed,
    })
}

/// Solve A x = b for symmetric positive definite A (row-major, destroyed).
fn cholesky_solve(a: &mut [f64], m: usize, b: &[f64]) -> Result<Vec<f64>> {
    // in-place lower Cholesky
    for j in 0..m {
        let mut d = a[j * m + j];
        for k in 0..j {
            let l = a[j * m + k];
            d -= l * l;
        }
        if d <= 0.0 {
            return Err(Error::FullCube);
        }
        let d = d.sqrt();
        a[j * m + j] = d;
        for i in (j + 1)..m {
            let mut s = a[i * m + j];
            for k in 0..j {
                s -= a[i * m + k] * a[j * m + k];
            }
            a[i * m + j] = s / d;
        }
    }
    // forward substitution L y = b
    let mut y = b.to_vec();
    for i in 0..m {
        let mut s = y[i];
        for k in 0..i {
            s -= a[i * m + k] * y[k];
        }
        y[i] = s / a[i * m + i];
    }
    // back substitution L^T x = y
    for i in (0..m).rev() {
        let mut s = y[i];
        for k in (i + 1)..m {
            s -= a[k * m + i] * y[k];
        }
        y[i] = s / a[i * m + i];
    }
    Ok(y)
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix (row-major,
/// destroyed). Returns (eigenvalues, column eigenvectors flattened row-major).
pub fn jacobi_eigen(a: &mut [f64], m: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut v = vec![0.0; m * m];
    for i in 0..m {
        v[i * m + i] = 1.0;
    }
    if m == 1 {
        return Ok((vec![a[0]], v));
    }
    let fro: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = 1e-12 * fro;
    let max_sweeps = 60;
    for sweep in 0..=max_sweeps {
        let mut off2 = 0.0;
        for p in 0..m {
            for q in (p + 1)..m {
                let apq = a[p * m + q];
                off2 += 2.0 * apq * apq;
            }
        }
        if off2.sqrt() <= target {
            let eig: Vec<f64> = (0..m).map(|i| a[i * m + i]).collect();
            return Ok((eig, v));
        }
        if sweep == max_sweeps {
            break;
        }
        for p in 0..m {
            for q in (p + 1)..m {
                let apq = a[p * m + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * m + p];
                let aqq = a[q * m + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // rotate rows/columns p and q
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
                for k in 0..m {
                    let vkp = v[k * m + p];
                    let vkq = v[k * m + q];
                    v[k * m + p] = c * vkp - s * vkq;
                    v[k * m + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Err(Error::EigenNonConvergence { sweeps: max_sweeps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{edge_boundary, low_subcube, make_subcube, CubeDim, VertexSet};

    fn dim(n: u32) -> CubeDim {
        CubeDim::new(n).unwrap()
    }

    #[test]
    fn build_singleton() {
        let a = VertexSet::from_indices(dim(3), &[5]).unwrap();
        let sys = build_system(&a).unwrap();
        assert_eq!(sys.size(), 1);
        assert_eq!(sys.internal_degree(0), 0);
        assert_eq!(sys.dense_adjacency(), vec![0.0]);
    }

    #[test]
    fn build_rejects_empty() {
        assert!(build_system(&VertexSet::empty(dim(3))).is_err());
    }

    #[test]
    fn subcube_system_regular() {
        let a = make_subcube(dim(5), &[0, 2, 4], &[(1, true), (3, false)]).unwrap();
        let sys = build_system(&a).unwrap();
        for i in 0..sys.size() {
            assert_eq!(sys.internal_degree(i), 3);
        }
    }

    #[test]
    fn l_shape_adjacency() {
        // n=2, A={00,01,11}: edges 00-01 and 01-11 only
        let a = VertexSet::from_indices(dim(2), &[0, 1, 3]).unwrap();
        let sys = build_system(&a).unwrap();
        assert_eq!(sys.vertices(), &[0, 1, 3]);
        let e = sys.dense_adjacency();
        let expect = [0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0];
        assert_eq!(e, expect);
    }

    #[test]
    fn solve_singleton() {
        let a = VertexSet::from_indices(dim(3), &[0]).unwrap();
        let sol = build_system(&a).unwrap().solve_unit().unwrap();
        assert!((sol.x[0] - 1.0 / 3.0).abs() < 1e-12);
        assert!((sol.q - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn solve_l_shape() {
        let a = VertexSet::from_indices(dim(2), &[0, 1, 3]).unwrap();
        let sol = build_system(&a).unwrap().solve_unit().unwrap();
        assert!((sol.x[0] - 1.5).abs() < 1e-10);
        assert!((sol.x[1] - 2.0).abs() < 1e-10);
        assert!((sol.x[2] - 1.5).abs() < 1e-10);
        assert!((sol.q - 5.0).abs() < 1e-10);
    }

    #[test]
    fn solve_subcube_closed_form() {
        // L1 = (n-d)1 by regularity, so q = |A|/(n-d)
        for (n, d) in [(4u32, 2u32), (6, 3), (5, 0)] {
            let a = low_subcube(dim(n), d).unwrap();
            let sol = build_system(&a).unwrap().solve_unit().unwrap();
            let expect = a.len() as f64 / (n - d) as f64;
            assert!((sol.q - expect).abs() < 1e-9, "n={} d={}", n, d);
        }
    }

    #[test]
    fn solve_full_cube_fails() {
        let a = VertexSet::full(dim(3));
        assert!(matches!(
            build_system(&a).unwrap().solve_unit(),
            Err(Error::FullCube)
        ));
    }

    #[test]
    fn cg_matches_dense() {
        let a = VertexSet::random(dim(7), 60, 9).unwrap();
        let sys = build_system(&a).unwrap();
        let ones = vec![1.0; sys.size()];
        let xd = sys.solve_dense(&ones).unwrap();
        let xc = sys.solve_cg(&ones).unwrap();
        for (a, b) in xd.iter().zip(&xc) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn spectrum_singleton() {
        let a = VertexSet::from_indices(dim(4), &[3]).unwrap();
        let sys = build_system(&a).unwrap();
        let sd = sys.spectrum().unwrap();
        assert_eq!(sd.eigenvalues, vec![0.0]);
        assert!((sd.weights[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spectrum_subcube_concentrated() {
        let a = low_subcube(dim(5), 3).unwrap();
        let sys = build_system(&a).unwrap();
        let sd = sys.spectrum().unwrap();
        assert!((sd.eigenvalues[0] - 3.0).abs() < 1e-9);
        // all weight on the top eigenvalue
        assert!((sd.weights[0] - a.len() as f64).abs() < 1e-8);
        for (&l, &w) in sd.eigenvalues.iter().zip(&sd.weights).skip(1) {
            assert!(l < 3.0 - 1e-9 || w.abs() < 1e-8);
        }
    }

    #[test]
    fn spectrum_identities_random() {
        for seed in 0..10 {
            let a = VertexSet::random(dim(6), 20, seed).unwrap();
            let sys = build_system(&a).unwrap();
            let sd = sys.spectrum().unwrap();
            let m = a.len() as f64;
            assert!((sd.weight_sum() - m).abs() <= 1e-9 * m);
            let boundary = edge_boundary(&a) as f64;
            assert!((sd.boundary_sum() - boundary).abs() < 1e-7);
            let q = sys.solve_unit().unwrap().q;
            let h = sd.harmonic_sum().unwrap();
            assert!((q - h).abs() <= 1e-8 * q.abs().max(1.0));
            // L positive definite: n - lambda_1 > 0
            assert!(sd.eigenvalues[0] < sys.n() as f64);
        }
    }

    #[test]
    fn eigen_inequality_examples() {
        // subcube: equality
        let a = low_subcube(dim(5), 2).unwrap();
        let sys = build_system(&a).unwrap();
        let r = verify_eigen_inequality(sys.spectrum().unwrap(), &a).unwrap();
        assert!(r.passed);
        assert!(r.margin.abs() < 1e-9);
        // singleton: 1/n vs 1/n
        let s = VertexSet::from_indices(dim(5), &[7]).unwrap();
        let sys = build_system(&s).unwrap();
        let r = verify_eigen_inequality(sys.spectrum().unwrap(), &s).unwrap();
        assert!((r.lhs - 0.2).abs() < 1e-12);
        assert!(r.margin.abs() < 1e-12);
    }

    #[test]
    fn degree_report_subcube() {
        let a = low_subcube(dim(8), 4).unwrap();
        let sys = build_system(&a).unwrap();
        let r = degree_concentration(&sys, 0.5, 0.5).unwrap();
        assert!(r.applicable);
        assert_eq!(r.passed, Some(true));
        assert!((r.window_probability - 1.0).abs() < 1e-12);
        assert!((r.mean - 4.0).abs() < 1e-12);
        assert!(r.outdegrees.iter().all(|&d| d == 4));
    }

    #[test]
    fn degree_report_bad_delta() {
        let a = low_subcube(dim(4), 2).unwrap();
        let sys = build_system(&a).unwrap();
        assert!(degree_concentration(&sys, 0.5, 0.0).is_err());
        assert!(degree_concentration(&sys, 0.5, 1.5).is_err());
    }

    #[test]
    fn degree_report_not_applicable() {
        // a Hamming ball is far from isoperimetric for tiny eps
        let a = crate::cube::make_ball(dim(6), 0, 2).unwrap();
        let sys = build_system(&a).unwrap();
        let r = degree_concentration(&sys, 1e-6, 0.5).unwrap();
        assert!(!r.applicable);
        assert_eq!(r.passed, None);
    }

    #[test]
    fn jacobi_known_matrix() {
        // eigenvalues of [[2,1],[1,2]] are 1 and 3
        let mut a = vec![2.0, 1.0, 1.0, 2.0];
        let (mut eig, _) = jacobi_eigen(&mut a, 2).unwrap();
        eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert!((eig[0] - 1.0).abs() < 1e-12);
        assert!((eig[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn power_iteration_top_eigenvalue() {
        let a = low_subcube(dim(6), 4).unwrap();
        let sys = build_system(&a).unwrap();
        assert!((sys.top_eigenvalue_estimate() - 4.0).abs() < 1e-6);
    }
}
