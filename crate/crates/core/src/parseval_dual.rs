//! Existence and construction of Parseval duals.
//!
//! A frame with analysis matrix `U` and frame operator `S = U*U` has a
//! Parseval dual iff (a) its optimal lower bound is at least 1 and (b)
//! `dim Im(S - I) <= e(f)`. The construction splits `S = I (+) T` along
//! `Ker(S - I)`, sets `G = g(T)` with `g(t) = sqrt(1 - 1/t)`, and adds
//! `R (0 (+) G) P` to the canonical dual's analysis matrix, where `R` is a
//! partial isometry from `Im(S - I)` into `Ker U*`.

use serde::Serialize;

use crate::duality::frame_operator_inverse;
use crate::error::{FrameError, Result};
use crate::frame::Frame;
use crate::generate::{gaussian_matrix, rng_from_seed};
use crate::linalg::{self, CMat};
use crate::tolerance::ToleranceConfig;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParsevalDualReport {
    pub exists: bool,
    pub a_opt: f64,
    pub deviation_dim: usize,
    pub excess_val: usize,
    /// Why no dual exists, when it does not.
    pub reason: Option<String>,
    #[serde(skip)]
    pub dual: Option<Frame>,
    /// `||V*V - I||` of the constructed dual.
    pub parseval_residual: Option<f64>,
    /// `||V*U - I||` of the constructed dual.
    pub duality_residual: Option<f64>,
}

/// Intermediate objects of the construction.
#[derive(Debug, Clone)]
pub struct ConstructionParts {
    /// Eigenvalues of `S` on `Im(S - I)`, descending.
    pub deviating_eigenvalues: Vec<f64>,
    /// Matching orthonormal eigenvectors (columns, `d x d'`).
    pub deviating_eigenvectors: CMat,
    /// The first `d'` vectors of the kernel basis of `U*` (columns, `n x d'`).
    pub kernel_targets: CMat,
    /// `R`, an `n x d` partial isometry.
    pub partial_isometry: CMat,
    /// `P`, the orthogonal projection onto `Im(S - I)`.
    pub deviation_projection: CMat,
    /// `(0 (+) G)` in the standard basis.
    pub g_of_t: CMat,
    /// Analysis matrix `V = U S^{-1} + R (0 (+) G) P` of the dual.
    pub analysis: CMat,
}

/// `g(t) = sqrt(1 - 1/t)` on `[1, inf)`.
pub fn g(t: f64) -> f64 {
    (1.0 - 1.0 / t).max(0.0).sqrt()
}

fn eigen_split(f: &Frame) -> (Vec<f64>, CMat) {
    linalg::hermitian_eigen(&f.frame_operator())
}

/// Number of eigenvalues of `S` outside `[1 - eig_one_atol, 1 + eig_one_atol]`.
pub fn deviation_dimension(f: &Frame, tol: &ToleranceConfig) -> Result<usize> {
    f.require_frame(tol)?;
    let (vals, _) = eigen_split(f);
    Ok(vals
        .iter()
        .filter(|&&l| (l - 1.0).abs() > tol.eig_one_atol)
        .count())
}

/// Evaluates both existence conditions without building the dual.
pub fn parseval_dual_exists(f: &Frame, tol: &ToleranceConfig) -> Result<ParsevalDualReport> {
    f.require_frame(tol)?;
    let a_opt = f.bounds().a_opt;
    let deviation_dim = deviation_dimension(f, tol)?;
    let excess_val = f.excess(tol)?.excess;
    let bound_ok = a_opt >= 1.0 - tol.eig_one_atol;
    let dim_ok = deviation_dim <= excess_val;
    let reason = if !bound_ok {
        Some(format!("lower frame bound {a_opt} < 1"))
    } else if !dim_ok {
        Some(format!(
            "deviation_dim {deviation_dim} > excess {excess_val}"
        ))
    } else {
        None
    };
    Ok(ParsevalDualReport {
        exists: bound_ok && dim_ok,
        a_opt,
        deviation_dim,
        excess_val,
        reason,
        dual: None,
        parseval_residual: None,
        duality_residual: None,
    })
}

/// Builds every intermediate operator of the construction.
pub fn construction_parts(f: &Frame, tol: &ToleranceConfig) -> Result<ConstructionParts> {
    let report = parseval_dual_exists(f, tol)?;
    if !report.exists {
        return Err(FrameError::NoParsevalDual(
            report.reason.unwrap_or_default(),
        ));
    }
    let d = f.dim();
    let (vals, vecs) = eigen_split(f);
    // E+ in descending eigenvalue order; the band around 1 belongs to E1.
    let mut plus: Vec<usize> = (0..d)
        .filter(|&i| vals[i] - 1.0 > tol.eig_one_atol)
        .collect();
    plus.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]));
    let dev = plus.len();
    let deviating_eigenvalues: Vec<f64> = plus.iter().map(|&i| vals[i]).collect();
    let mut deviating_eigenvectors = CMat::zeros(d, dev);
    for (c, &i) in plus.iter().enumerate() {
        deviating_eigenvectors.set_column(c, &vecs.column(i));
    }

    let kernel = f.kernel_of_synthesis(tol);
    debug_assert!(kernel.ncols() >= dev);
    let kernel_targets = kernel.columns(0, dev).into_owned();

    let partial_isometry = &kernel_targets * deviating_eigenvectors.adjoint();
    let deviation_projection = &deviating_eigenvectors * deviating_eigenvectors.adjoint();
    let g_diag = CMat::from_diagonal(&crate::CVec::from_iterator(
        dev,
        deviating_eigenvalues.iter().map(|&l| linalg::real(g(l))),
    ));
    let g_of_t = &deviating_eigenvectors * g_diag * deviating_eigenvectors.adjoint();

    let s_inv = frame_operator_inverse(f, tol)?;
    let analysis =
        f.analysis_matrix() * s_inv + &partial_isometry * &g_of_t * &deviation_projection;
    Ok(ConstructionParts {
        deviating_eigenvalues,
        deviating_eigenvectors,
        kernel_targets,
        partial_isometry,
        deviation_projection,
        g_of_t,
        analysis,
    })
}

/// Constructs a Parseval dual, returning the existence report with the dual
/// and its residuals filled in.
pub fn construct_parseval_dual(f: &Frame, tol: &ToleranceConfig) -> Result<ParsevalDualReport> {
    let mut report = parseval_dual_exists(f, tol)?;
    if !report.exists {
        return Err(FrameError::NoParsevalDual(
            report.reason.unwrap_or_default(),
        ));
    }
    let parts = construction_parts(f, tol)?;
    let v = &parts.analysis;
    let id = linalg::identity(f.dim());
    let parseval_residual = linalg::op_norm(&(v.adjoint() * v - &id));
    let duality_residual = linalg::op_norm(&(v.adjoint() * f.analysis_matrix() - &id));
    report.dual = Some(Frame::from_computed(f.field(), v.adjoint()));
    report.parseval_residual = Some(parseval_residual);
    report.duality_residual = Some(duality_residual);
    Ok(report)
}

/// `(c f, c)` with `c = 1/sqrt(a_opt)`, so the rescaled lower bound is 1.
pub fn rescale_to_admissible(f: &Frame, tol: &ToleranceConfig) -> Result<(Frame, f64)> {
    f.require_frame(tol)?;
    let a = f.bounds().a_opt;
    let c = 1.0 / a.sqrt();
    // Leave frames that already have A = 1 untouched.
    if (c - 1.0).abs() <= tol.eig_one_atol {
        return Ok((f.clone(), 1.0));
    }
    Ok((f.scaled(c), c))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualSearchOutcome {
    /// Smallest `||V*V - I||` over all starts, with `V` ranging over the
    /// duals `U S^{-1} + Q W`.
    pub best_residual: f64,
    pub starts: usize,
    pub iterations: usize,
}

/// Numerically minimizes `||V*V - I||` over the free-operator
/// parametrization of all duals of `f`, from `starts` seeded random `W`.
///
/// Gradient descent on `||V*V - I||_F^2` with a backtracking step; the
/// returned residual is in operator norm.
pub fn search_parseval_dual(
    f: &Frame,
    starts: usize,
    iterations: usize,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<DualSearchOutcome> {
    let s_inv = frame_operator_inverse(f, tol)?;
    let base = f.analysis_matrix() * s_inv;
    let q = crate::duality::kernel_projection(f, tol);
    let id = linalg::identity(f.dim());
    let objective = |w: &CMat| -> (f64, CMat) {
        let v = &base + &q * w;
        let e = v.adjoint() * &v - &id;
        (e.norm_squared(), e)
    };
    let mut rng = rng_from_seed(seed);
    let mut best = f64::INFINITY;
    for _ in 0..starts.max(1) {
        let mut w = gaussian_matrix(&mut rng, f.len(), f.dim(), f.field());
        let (mut val, mut e) = objective(&w);
        let mut step = 0.1;
        for _ in 0..iterations {
            let v = &base + &q * &w;
            let grad = (&q * v * &e).scale(4.0);
            let gnorm = grad.norm_squared();
            if gnorm == 0.0 {
                break;
            }
            loop {
                let trial = &w - grad.scale(step);
                let (tval, te) = objective(&trial);
                if tval <= val - 1e-4 * step * gnorm {
                    w = trial;
                    val = tval;
                    e = te;
                    step *= 1.5;
                    break;
                }
                step *= 0.5;
                if step < 1e-16 {
                    break;
                }
            }
            if step < 1e-16 || val < 1e-24 {
                break;
            }
        }
        best = best.min(linalg::op_norm(&e));
    }
    Ok(DualSearchOutcome {
        best_residual: best,
        starts: starts.max(1),
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::check_duality;
    use crate::frame::fixtures::*;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    #[test]
    fn deviation_dimension_examples() {
        assert_eq!(deviation_dimension(&mb3(), &tol()).unwrap(), 0);
        assert_eq!(deviation_dimension(&e1e2e1(), &tol()).unwrap(), 1);
        assert_eq!(deviation_dimension(&two_e1_e2(), &tol()).unwrap(), 1);
    }

    #[test]
    fn existence_examples() {
        let r = parseval_dual_exists(&e1e2e1(), &tol()).unwrap();
        assert!(r.exists && r.deviation_dim == 1 && r.excess_val == 1);
        let r = parseval_dual_exists(&two_e1_e2(), &tol()).unwrap();
        assert!(!r.exists);
        assert_eq!(r.reason.as_deref(), Some("deviation_dim 1 > excess 0"));
        let r = parseval_dual_exists(&mb3().scaled(0.5), &tol()).unwrap();
        assert!(!r.exists);
        assert!((r.a_opt - 0.25).abs() < 1e-14);
    }

    #[test]
    fn construction_basis() {
        let r = construct_parseval_dual(&basis2(), &tol()).unwrap();
        let d = r.dual.unwrap();
        assert!((d.synthesis_matrix() - basis2().synthesis_matrix()).norm() < 1e-15);
    }

    #[test]
    fn construction_hand_computed() {
        let r = construct_parseval_dual(&e1e2e1(), &tol()).unwrap();
        let d = r.dual.unwrap();
        let diff = (d.synthesis_matrix() - e1e2zero().synthesis_matrix()).norm();
        assert!(diff < 1e-10, "got {:?}", d.synthesis_matrix());
        let parts = construction_parts(&e1e2e1(), &tol()).unwrap();
        assert!((parts.deviating_eigenvalues[0] - 2.0).abs() < 1e-14);
        assert!((parts.g_of_t[(0, 0)].re - 0.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn construction_doubled_basis() {
        let f = Frame::real(
            2,
            &[
                vec![1.0, 0.0],
                vec![0.0, 1.0],
                vec![1.0, 0.0],
                vec![0.0, 1.0],
            ],
        )
        .unwrap();
        let r = construct_parseval_dual(&f, &tol()).unwrap();
        assert_eq!(r.deviation_dim, 2);
        assert!(r.parseval_residual.unwrap() <= 1e-8);
        assert!(r.duality_residual.unwrap() <= 1e-8);
        let d = r.dual.unwrap();
        assert!(d.is_parseval(&tol()));
        assert!(check_duality(&f, &d, &tol()).unwrap().is_exact_dual);
    }

    #[test]
    fn construction_refused() {
        assert!(matches!(
            construct_parseval_dual(&two_e1_e2(), &tol()),
            Err(FrameError::NoParsevalDual(_))
        ));
    }

    #[test]
    fn g_range() {
        assert_eq!(g(1.0), 0.0);
        for t in [1.0, 1.5, 2.0, 10.0, 1e6] {
            let v = g(t);
            assert!((0.0..1.0).contains(&v));
        }
    }

    #[test]
    fn rescale_examples() {
        let (h, c) = rescale_to_admissible(&mb3().scaled(0.5), &tol()).unwrap();
        assert!((c - 2.0).abs() < 1e-14);
        assert!((h.synthesis_matrix() - mb3().synthesis_matrix()).norm() < 1e-14);
        let (_, c) = rescale_to_admissible(&mb3(), &tol()).unwrap();
        assert_eq!(c, 1.0);
        let (h, c) = rescale_to_admissible(&e1e2e1(), &tol()).unwrap();
        assert_eq!(c, 1.0);
        assert_eq!(h, e1e2e1());
    }

    #[test]
    fn search_finds_existing_dual() {
        let out = search_parseval_dual(&e1e2e1(), 4, 3000, 5, &tol()).unwrap();
        assert!(out.best_residual <= 1e-6, "{out:?}");
    }

    #[test]
    fn search_fails_without_dual() {
        let out = search_parseval_dual(&two_e1_e2(), 4, 500, 5, &tol()).unwrap();
        assert!((out.best_residual - 0.75).abs() < 1e-12);
        let out = search_parseval_dual(&mb3().scaled(0.5), 4, 500, 5, &tol()).unwrap();
        assert!(out.best_residual >= 3.0 - 1e-9);
    }
}
