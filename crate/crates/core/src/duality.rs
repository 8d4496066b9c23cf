//! Dual frames, their two parametrizations, and the duality checks.
//!
//! Throughout, `U` is the analysis matrix of `f` and `V` that of `g`. The
//! pair is dual when `V*U = I`, pseudo-dual when `V*U` is invertible and
//! approximately dual when `||V*U - I|| < 1`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{FrameError, Result};
use crate::frame::{Field, Frame};
use crate::generate::gaussian_matrix;
use crate::linalg::{self, CMat};
use crate::tolerance::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualityReport {
    pub is_exact_dual: bool,
    pub is_pseudo_dual: bool,
    pub is_approx_dual: bool,
    /// `||V*U - I||`
    pub deviation_norm: f64,
    /// Smallest singular value of `V*U`.
    pub min_singular_vu: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaReport {
    pub st_is_identity_residual: f64,
    pub kernel_match_residual: f64,
    pub direct_sum_residual: f64,
    pub idempotent_residual: f64,
}

impl LemmaReport {
    pub fn max_residual(&self) -> f64 {
        self.st_is_identity_residual
            .max(self.kernel_match_residual)
            .max(self.direct_sum_residual)
            .max(self.idempotent_residual)
    }
}

/// The oblique projection `UV*` induced by a dual pair, with the direct sum
/// `Im U + Ker V*` it splits along.
#[derive(Debug, Clone, PartialEq)]
pub struct DualPairProjection {
    pub projection: CMat,
    pub range_rank: usize,
    pub kernel_dim: usize,
    pub idempotent_residual: f64,
    /// Sine of the largest principal angle between `Im UV*` and `Im U`.
    pub range_residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExcessEquality {
    pub excess_f: usize,
    pub excess_g: usize,
    /// Distance between `Ker V*` and `(I - UV*)(Ker U*)`; only computed for
    /// exactly dual pairs.
    pub kernel_relation_residual: Option<f64>,
    pub holds: bool,
}

/// `(S^{-1} f_k)_k`.
pub fn canonical_dual(f: &Frame, tol: &ToleranceConfig) -> Result<Frame> {
    let s_inv = frame_operator_inverse(f, tol)?;
    Ok(Frame::from_computed(
        f.field(),
        s_inv * f.synthesis_matrix(),
    ))
}

pub(crate) fn frame_operator_inverse(f: &Frame, tol: &ToleranceConfig) -> Result<CMat> {
    f.require_frame(tol)?;
    linalg::hpd_inverse(&f.frame_operator()).ok_or(FrameError::NotAFrame)
}

fn require_same_shape(f: &Frame, g: &Frame) -> Result<()> {
    if f.dim() != g.dim() || f.len() != g.len() {
        return Err(FrameError::DimensionMismatch(format!(
            "frames have shapes {}x{} and {}x{}",
            f.len(),
            f.dim(),
            g.len(),
            g.dim()
        )));
    }
    Ok(())
}

/// Classifies `(f, g)` by `V*U`.
pub fn check_duality(f: &Frame, g: &Frame, tol: &ToleranceConfig) -> Result<DualityReport> {
    require_same_shape(f, g)?;
    f.require_frame(tol)?;
    g.require_frame(tol)?;
    let vu = g.synthesis_matrix() * f.analysis_matrix();
    let deviation_norm = linalg::op_norm(&(&vu - linalg::identity(f.dim())));
    let min_singular_vu = linalg::min_singular_value(&vu);
    let is_exact_dual = deviation_norm <= tol.atol;
    let is_approx_dual = deviation_norm < 1.0;
    Ok(DualityReport {
        is_exact_dual,
        is_approx_dual,
        // ||V*U - I|| < 1 forces sigma_min(V*U) > 0 exactly; keep the
        // implication chain intact under the atol threshold too.
        is_pseudo_dual: min_singular_vu > tol.atol || is_approx_dual,
        deviation_norm,
        min_singular_vu,
    })
}

/// For a pseudo-dual pair, `((U*V)^{-1} f_k)_k` is an exact dual of `g`.
pub fn pseudo_dual_to_exact(f: &Frame, g: &Frame, tol: &ToleranceConfig) -> Result<Frame> {
    let report = check_duality(f, g, tol)?;
    if !report.is_pseudo_dual {
        return Err(FrameError::NotPseudoDual {
            min_singular: report.min_singular_vu,
        });
    }
    let uv = f.synthesis_matrix() * g.analysis_matrix();
    let inv = linalg::general_inverse(&uv).ok_or(FrameError::NotPseudoDual {
        min_singular: report.min_singular_vu,
    })?;
    Ok(Frame::from_computed(
        f.field().join(g.field()),
        inv * f.synthesis_matrix(),
    ))
}

/// Orthogonal projection of `C^n` onto `(Im U)^perp = Ker U*`.
pub fn kernel_projection(f: &Frame, tol: &ToleranceConfig) -> CMat {
    let k = f.kernel_of_synthesis(tol);
    &k * k.adjoint()
}

/// Orthogonal projection of `C^n` onto `Im U`.
pub fn range_projection(f: &Frame, tol: &ToleranceConfig) -> CMat {
    let r = linalg::range_basis(&f.analysis_matrix(), tol.rank_rtol);
    &r * r.adjoint()
}

/// The dual with synthesis matrix `S^{-1}U* + W*Q`, where `Q` projects
/// orthogonally onto `(Im U)^perp` and `w` is an arbitrary `n x d` matrix.
pub fn dual_from_free_operator(f: &Frame, w: &CMat, tol: &ToleranceConfig) -> Result<Frame> {
    if w.nrows() != f.len() || w.ncols() != f.dim() {
        return Err(FrameError::DimensionMismatch(format!(
            "w is {}x{}, expected {}x{}",
            w.nrows(),
            w.ncols(),
            f.len(),
            f.dim()
        )));
    }
    let s_inv = frame_operator_inverse(f, tol)?;
    let q = kernel_projection(f, tol);
    let synthesis = s_inv * f.synthesis_matrix() + w.adjoint() * q;
    let field = if linalg::max_imag(w) == 0.0 {
        f.field()
    } else {
        Field::Complex
    };
    Ok(Frame::from_computed(field, synthesis))
}

fn orthonormal_span(
    vectors: &[crate::CVec],
    ambient: usize,
    tol: &ToleranceConfig,
) -> Result<CMat> {
    let mut m = CMat::zeros(ambient, vectors.len());
    for (c, v) in vectors.iter().enumerate() {
        if v.len() != ambient {
            return Err(FrameError::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {ambient}",
                v.len()
            )));
        }
        m.set_column(c, v);
    }
    Ok(linalg::range_basis(&m, tol.rank_rtol))
}

/// The projection onto `span(range_basis)` parallel to
/// `span(complement_basis)`.
pub fn oblique_projection(
    range_basis: &[crate::CVec],
    complement_basis: &[crate::CVec],
    tol: &ToleranceConfig,
) -> Result<CMat> {
    let ambient = range_basis
        .first()
        .or_else(|| complement_basis.first())
        .map(|v| v.len())
        .ok_or_else(|| FrameError::NotComplementary("no vectors given".into()))?;
    let r = orthonormal_span(range_basis, ambient, tol)?;
    let c = orthonormal_span(complement_basis, ambient, tol)?;
    oblique_projection_from_bases(&r, &c, tol)
}

/// As [`oblique_projection`], for orthonormal column bases.
pub fn oblique_projection_from_bases(r: &CMat, c: &CMat, tol: &ToleranceConfig) -> Result<CMat> {
    let ambient = r.nrows();
    if c.nrows() != ambient {
        return Err(FrameError::DimensionMismatch(
            "range and complement live in different spaces".into(),
        ));
    }
    if r.ncols() + c.ncols() != ambient {
        return Err(FrameError::NotComplementary(format!(
            "dimensions {} + {} != {ambient}",
            r.ncols(),
            c.ncols()
        )));
    }
    let joined = CMat::from_fn(ambient, ambient, |i, j| {
        if j < r.ncols() {
            r[(i, j)]
        } else {
            c[(i, j - r.ncols())]
        }
    });
    if linalg::numerical_rank(&joined, tol.rank_rtol) < ambient {
        return Err(FrameError::NotComplementary(
            "subspaces intersect nontrivially".into(),
        ));
    }
    let inv = linalg::general_inverse(&joined)
        .ok_or_else(|| FrameError::NotComplementary("singular basis".into()))?;
    // F = [R C] diag(I, 0) [R C]^{-1}
    Ok(r * inv.rows(0, r.ncols()))
}

/// The dual with synthesis matrix `S^{-1}U*F` for an oblique projection `F`
/// onto `Im U`.
pub fn dual_from_projection(f: &Frame, proj: &CMat, tol: &ToleranceConfig) -> Result<Frame> {
    let n = f.len();
    if proj.nrows() != n || proj.ncols() != n {
        return Err(FrameError::DimensionMismatch(format!(
            "projection is {}x{}, expected {n}x{n}",
            proj.nrows(),
            proj.ncols()
        )));
    }
    let s_inv = frame_operator_inverse(f, tol)?;
    let residual = linalg::op_norm(&(proj * proj - proj));
    if residual > tol.atol * linalg::op_norm(proj).max(1.0) {
        return Err(FrameError::NotAProjection { residual });
    }
    let im_proj = linalg::range_basis(proj, tol.rank_rtol);
    let im_u = linalg::range_basis(&f.analysis_matrix(), tol.rank_rtol);
    let distance = linalg::subspace_distance(&im_proj, &im_u);
    if distance > tol.atol {
        return Err(FrameError::WrongRange { distance });
    }
    let field = if linalg::max_imag(proj) <= tol.atol {
        f.field()
    } else {
        Field::Complex
    };
    Ok(Frame::from_computed(
        field,
        s_inv * f.synthesis_matrix() * proj,
    ))
}

/// `UV*` for an exactly dual pair, together with the checks that it is the
/// projection onto `Im U` parallel to `Ker V*` and that the two subspaces
/// form a direct sum.
pub fn projection_from_dual_pair(
    f: &Frame,
    g: &Frame,
    tol: &ToleranceConfig,
) -> Result<DualPairProjection> {
    let report = check_duality(f, g, tol)?;
    if !report.is_exact_dual {
        return Err(FrameError::NotDual {
            deviation: report.deviation_norm,
        });
    }
    let n = f.len();
    let u = f.analysis_matrix();
    let projection = &u * g.synthesis_matrix();
    let im_u = linalg::range_basis(&u, tol.rank_rtol);
    let ker_v = g.kernel_of_synthesis(tol);
    let joined = CMat::from_fn(n, im_u.ncols() + ker_v.ncols(), |i, j| {
        if j < im_u.ncols() {
            im_u[(i, j)]
        } else {
            ker_v[(i, j - im_u.ncols())]
        }
    });
    let range_rank = im_u.ncols();
    let kernel_dim = ker_v.ncols();
    if range_rank + kernel_dim != n || linalg::numerical_rank(&joined, tol.rank_rtol) != n {
        return Err(FrameError::NotComplementary(format!(
            "Im U (dim {range_rank}) and Ker V* (dim {kernel_dim}) do not split C^{n}"
        )));
    }
    let idempotent_residual = linalg::op_norm(&(&projection * &projection - &projection));
    let range_residual =
        linalg::subspace_distance(&linalg::range_basis(&projection, tol.rank_rtol), &im_u);
    Ok(DualPairProjection {
        projection,
        range_rank,
        kernel_dim,
        idempotent_residual,
        range_residual,
    })
}

/// Numerically checks the decomposition lemma for `T: H -> K` and
/// `S: K -> H` with `ST = I`:
/// `Ker S = (I - TS)(Ker T*)`, `K = Im T + Ker S` (direct), and `TS` is the
/// projection onto `Im T` parallel to `Ker S`.
pub fn verify_lemma_decomposition(
    t: &CMat,
    s: &CMat,
    probes: usize,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<LemmaReport> {
    let (k_dim, h_dim) = t.shape();
    if s.shape() != (h_dim, k_dim) {
        return Err(FrameError::DimensionMismatch(format!(
            "T is {k_dim}x{h_dim} but S is {}x{}",
            s.nrows(),
            s.ncols()
        )));
    }
    let st_is_identity_residual = linalg::op_norm(&(s * t - linalg::identity(h_dim)));
    if st_is_identity_residual > tol.atol {
        return Err(FrameError::NotLeftInverse {
            residual: st_is_identity_residual,
        });
    }
    let ts = t * s;
    let complement_ts = linalg::identity(k_dim) - &ts;

    let ker_s = linalg::null_space(s, tol.rank_rtol);
    let ker_t_adj = linalg::null_space(&t.adjoint(), tol.rank_rtol);
    let image = linalg::range_basis(&(&complement_ts * &ker_t_adj), tol.rank_rtol);
    let kernel_match_residual = linalg::subspace_distance(&ker_s, &image);

    let im_t = linalg::range_basis(t, tol.rank_rtol);
    let perp_t = linalg::identity(k_dim) - &im_t * im_t.adjoint();
    let complex_probes = linalg::max_imag(t) > 0.0 || linalg::max_imag(s) > 0.0;
    let field = if complex_probes {
        Field::Complex
    } else {
        Field::Real
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut direct_sum_residual: f64 = 0.0;
    for _ in 0..probes {
        let y = gaussian_matrix(&mut rng, k_dim, 1, field);
        let y_norm = y.norm();
        if y_norm == 0.0 {
            continue;
        }
        // y = Tx + z with z in Ker T*; then (I - TS)y = (I - TS)z.
        let z = &perp_t * &y;
        let u = &ts * &y;
        let v = &complement_ts * &z;
        let split = (&y - (&u + &v)).norm();
        let u_off_range = (&perp_t * &u).norm();
        let v_off_kernel = (s * &v).norm();
        let worst = split.max(u_off_range).max(v_off_kernel) / y_norm;
        direct_sum_residual = direct_sum_residual.max(worst);
    }
    let idempotent_residual = linalg::op_norm(&(&ts * &ts - &ts));
    Ok(LemmaReport {
        st_is_identity_residual,
        kernel_match_residual,
        direct_sum_residual,
        idempotent_residual,
    })
}

/// `(T f_k)_k` for a surjective `T: C^d -> C^{d'}` given as a `d' x d`
/// matrix.
pub fn transform_frame(f: &Frame, t: &CMat, tol: &ToleranceConfig) -> Result<Frame> {
    if t.ncols() != f.dim() || t.nrows() == 0 {
        return Err(FrameError::DimensionMismatch(format!(
            "transform is {}x{}, frame dimension is {}",
            t.nrows(),
            t.ncols(),
            f.dim()
        )));
    }
    f.require_frame(tol)?;
    let rank = linalg::numerical_rank(t, tol.rank_rtol);
    if rank < t.nrows() {
        return Err(FrameError::NotSurjective {
            rank,
            target_dim: t.nrows(),
        });
    }
    let field = if linalg::max_imag(t) == 0.0 {
        f.field()
    } else {
        Field::Complex
    };
    Ok(Frame::from_computed(field, t * f.synthesis_matrix()))
}

/// Checks that a pseudo-dual pair has equal excess, and for an exactly dual
/// pair also the kernel relation `Ker V* = (I - UV*)(Ker U*)`.
pub fn verify_excess_equality(
    f: &Frame,
    g: &Frame,
    tol: &ToleranceConfig,
) -> Result<ExcessEquality> {
    let report = check_duality(f, g, tol)?;
    if !report.is_pseudo_dual {
        return Err(FrameError::NotPseudoDual {
            min_singular: report.min_singular_vu,
        });
    }
    let excess_f = f.excess(tol)?.excess;
    let excess_g = g.excess(tol)?.excess;
    let kernel_relation_residual = if report.is_exact_dual {
        let u = f.analysis_matrix();
        let uv = &u * g.synthesis_matrix();
        let ker_u = f.kernel_of_synthesis(tol);
        let ker_v = g.kernel_of_synthesis(tol);
        let image = (linalg::identity(f.len()) - uv) * ker_u;
        let image = linalg::range_basis(&image, tol.rank_rtol);
        Some(linalg::subspace_distance(&ker_v, &image))
    } else {
        None
    };
    let holds = excess_f == excess_g && kernel_relation_residual.is_none_or(|r| r <= tol.atol);
    Ok(ExcessEquality {
        excess_f,
        excess_g,
        kernel_relation_residual,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::fixtures::*;
    use crate::linalg::real;
    use crate::CVec;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn rmat(rows: usize, cols: usize, data: &[f64]) -> CMat {
        CMat::from_row_iterator(rows, cols, data.iter().map(|&x| real(x)))
    }

    fn rvec(data: &[f64]) -> CVec {
        CVec::from_iterator(data.len(), data.iter().map(|&x| real(x)))
    }

    fn assert_frames_close(a: &Frame, b: &Frame, eps: f64) {
        assert_eq!(a.dim(), b.dim());
        assert_eq!(a.len(), b.len());
        let diff = (a.synthesis_matrix() - b.synthesis_matrix()).norm();
        assert!(diff <= eps, "frames differ by {diff}");
    }

    #[test]
    fn canonical_dual_examples() {
        assert_frames_close(
            &canonical_dual(&basis2(), &tol()).unwrap(),
            &basis2(),
            1e-15,
        );
        let expected = Frame::real(2, &[vec![0.5, 0.0], vec![0.0, 1.0], vec![0.5, 0.0]]).unwrap();
        assert_frames_close(
            &canonical_dual(&e1e2e1(), &tol()).unwrap(),
            &expected,
            1e-15,
        );
        assert_frames_close(&canonical_dual(&mb3(), &tol()).unwrap(), &mb3(), 1e-14);
        let single = Frame::real(2, &[vec![1.0, 0.0]]).unwrap();
        assert_eq!(canonical_dual(&single, &tol()), Err(FrameError::NotAFrame));
    }

    #[test]
    fn check_duality_examples() {
        assert!(check_duality(&mb3(), &mb3(), &tol()).unwrap().is_exact_dual);
        let g = Frame::real(2, &[vec![0.5, 0.0], vec![0.0, 1.0], vec![0.5, 0.0]]).unwrap();
        assert!(check_duality(&e1e2e1(), &g, &tol()).unwrap().is_exact_dual);

        let r = check_duality(&mb3(), &mb3().scaled(1.5), &tol()).unwrap();
        assert!(!r.is_exact_dual && r.is_approx_dual && r.is_pseudo_dual);
        assert!((r.deviation_norm - 0.5).abs() < 1e-14);

        assert!(matches!(
            check_duality(&mb3(), &basis2(), &tol()),
            Err(FrameError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn pseudo_dual_to_exact_examples() {
        let g = mb3().scaled(1.5);
        let h = pseudo_dual_to_exact(&mb3(), &g, &tol()).unwrap();
        assert_frames_close(&h, &mb3().scaled(1.0 / 1.5), 1e-14);
        assert!(check_duality(&h, &g, &tol()).unwrap().is_exact_dual);
        let b = pseudo_dual_to_exact(&basis2(), &basis2(), &tol()).unwrap();
        assert_frames_close(&b, &basis2(), 1e-15);

        // V*U = diag(1, 0): not pseudo-dual.
        let g = Frame::real(2, &[vec![1.0, 0.0], vec![1.0, 0.0]]).unwrap();
        let f = Frame::real(2, &[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            pseudo_dual_to_exact(&f, &g, &tol()),
            Err(FrameError::NotAFrame) | Err(FrameError::NotPseudoDual { .. })
        ));
    }

    #[test]
    fn free_operator_examples() {
        let zero = CMat::zeros(3, 2);
        assert_frames_close(
            &dual_from_free_operator(&e1e2e1(), &zero, &tol()).unwrap(),
            &canonical_dual(&e1e2e1(), &tol()).unwrap(),
            1e-15,
        );

        let c = 0.7;
        let s = 0.5f64.sqrt();
        // w = c k e1^T with k = (1, 0, -1)/sqrt 2
        let w = rmat(3, 2, &[c * s, 0.0, 0.0, 0.0, -c * s, 0.0]);
        let g = dual_from_free_operator(&e1e2e1(), &w, &tol()).unwrap();
        let expected = Frame::real(
            2,
            &[
                vec![0.5 + c * s, 0.0],
                vec![0.0, 1.0],
                vec![0.5 - c * s, 0.0],
            ],
        )
        .unwrap();
        assert_frames_close(&g, &expected, 1e-14);
        assert!(check_duality(&e1e2e1(), &g, &tol()).unwrap().is_exact_dual);

        assert!(matches!(
            dual_from_free_operator(&e1e2e1(), &CMat::zeros(2, 2), &tol()),
            Err(FrameError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn oblique_projection_examples() {
        let p = oblique_projection(&[rvec(&[1.0, 0.0])], &[rvec(&[0.0, 1.0])], &tol()).unwrap();
        assert!((p - rmat(2, 2, &[1.0, 0.0, 0.0, 0.0])).norm() < 1e-14);

        let p = oblique_projection(&[rvec(&[1.0, 0.0])], &[rvec(&[1.0, 1.0])], &tol()).unwrap();
        assert!((p - rmat(2, 2, &[1.0, -1.0, 0.0, 0.0])).norm() < 1e-14);

        let u = mb3().analysis_matrix();
        let cols: Vec<CVec> = u.column_iter().map(|c| c.into_owned()).collect();
        let t = 1.0 / 3f64.sqrt();
        let p = oblique_projection(&cols, &[rvec(&[t, t, t])], &tol()).unwrap();
        let expected = linalg::identity(3) - CMat::from_element(3, 3, real(1.0 / 3.0));
        assert!((p - expected).norm() < 1e-14);

        assert!(matches!(
            oblique_projection(&[rvec(&[1.0, 0.0])], &[rvec(&[2.0, 0.0])], &tol()),
            Err(FrameError::NotComplementary(_))
        ));
    }

    #[test]
    fn dual_from_projection_examples() {
        let f = e1e2e1();
        let p_orth = range_projection(&f, &tol());
        assert_frames_close(
            &dual_from_projection(&f, &p_orth, &tol()).unwrap(),
            &canonical_dual(&f, &tol()).unwrap(),
            1e-14,
        );

        // complement spanned by e3 instead of (1, 0, -1)
        let u = f.analysis_matrix();
        let cols: Vec<CVec> = u.column_iter().map(|c| c.into_owned()).collect();
        let p = oblique_projection(&cols, &[rvec(&[0.0, 0.0, 1.0])], &tol()).unwrap();
        let g = dual_from_projection(&f, &p, &tol()).unwrap();
        assert!(check_duality(&f, &g, &tol()).unwrap().is_exact_dual);
        assert_frames_close(&g, &e1e2zero(), 1e-14);
        let back = projection_from_dual_pair(&f, &g, &tol()).unwrap();
        assert!((back.projection - &p).norm() < 1e-14);

        let b = dual_from_projection(&basis2(), &linalg::identity(2), &tol()).unwrap();
        assert_frames_close(&b, &basis2(), 1e-15);

        let not_proj = rmat(3, 3, &[2.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            dual_from_projection(&f, &not_proj, &tol()),
            Err(FrameError::NotAProjection { .. })
        ));
        let wrong = rmat(3, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            dual_from_projection(&f, &wrong, &tol()),
            Err(FrameError::WrongRange { .. })
        ));
    }

    #[test]
    fn projection_from_dual_pair_examples() {
        let p = projection_from_dual_pair(&basis2(), &basis2(), &tol()).unwrap();
        assert!((p.projection - linalg::identity(2)).norm() < 1e-15);

        let p = projection_from_dual_pair(&mb3(), &mb3(), &tol()).unwrap();
        assert!((p.projection - mb3().gram_matrix()).norm() < 1e-15);

        let p = projection_from_dual_pair(&e1e2e1(), &e1e2zero(), &tol()).unwrap();
        let expected = rmat(3, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0]);
        assert!((&p.projection - expected).norm() < 1e-15);
        assert_eq!((p.range_rank, p.kernel_dim), (2, 1));
        assert!(p.idempotent_residual < 1e-15);

        assert!(matches!(
            projection_from_dual_pair(&mb3(), &mb3().scaled(1.5), &tol()),
            Err(FrameError::NotDual { .. })
        ));
    }

    #[test]
    fn lemma_examples() {
        let u = mb3().analysis_matrix();
        let r = verify_lemma_decomposition(&u, &u.adjoint(), 8, 1, &tol()).unwrap();
        assert!(r.max_residual() <= 1e-8, "{r:?}");

        let t = e1e2e1().analysis_matrix();
        let s = e1e2zero().synthesis_matrix().clone();
        let r = verify_lemma_decomposition(&t, &s, 8, 2, &tol()).unwrap();
        assert!(r.max_residual() <= 1e-8, "{r:?}");
        let ker_s = linalg::null_space(&s, 1e-10);
        assert!((ker_s - rmat(3, 1, &[0.0, 0.0, 1.0])).norm() < 1e-14);

        let i = linalg::identity(3);
        let r = verify_lemma_decomposition(&i, &i, 4, 3, &tol()).unwrap();
        assert_eq!(r.max_residual(), 0.0);

        let bad = rmat(3, 3, &[2.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]);
        assert!(matches!(
            verify_lemma_decomposition(&i, &bad, 4, 3, &tol()),
            Err(FrameError::NotLeftInverse { .. })
        ));
    }

    #[test]
    fn transform_examples() {
        let same = transform_frame(&mb3(), &linalg::identity(2), &tol()).unwrap();
        assert_frames_close(&same, &mb3(), 0.0);

        let t = rmat(2, 2, &[2.0, 0.0, 0.0, 1.0]);
        let g = transform_frame(&mb3(), &t, &tol()).unwrap();
        assert_eq!(g.excess(&tol()).unwrap().excess, 1);

        let t = rmat(1, 2, &[1.0, 0.0]);
        let g = transform_frame(&mb3(), &t, &tol()).unwrap();
        assert_eq!(g.dim(), 1);
        assert_eq!(g.excess(&tol()).unwrap().excess, 2);

        let t = rmat(2, 2, &[1.0, 0.0, 1.0, 0.0]);
        assert!(matches!(
            transform_frame(&mb3(), &t, &tol()),
            Err(FrameError::NotSurjective {
                rank: 1,
                target_dim: 2
            })
        ));
    }

    #[test]
    fn excess_equality_examples() {
        let r = verify_excess_equality(&mb3(), &mb3(), &tol()).unwrap();
        assert!(r.holds && r.excess_f == 1 && r.excess_g == 1);
        let r = verify_excess_equality(&e1e2e1(), &e1e2zero(), &tol()).unwrap();
        assert!(r.holds && r.excess_f == 1 && r.excess_g == 1);
        assert!(r.kernel_relation_residual.unwrap() < 1e-12);
        let r = verify_excess_equality(&mb3(), &mb3().scaled(3.0), &tol()).unwrap();
        assert!(r.holds && r.kernel_relation_residual.is_none());
    }
}
