//! Seeded frame generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{FrameError, Result};
use crate::frame::{Field, Frame};
use crate::fundamental::build_projected_basis_example;
use crate::linalg::{self, CMat};
use crate::tolerance::ToleranceConfig;
use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FrameKind {
    /// Columns of the first `dim` columns of a random unitary, i.e. an
    /// orthonormal basis of `C^n` projected onto a `dim`-dimensional
    /// subspace. Exactly Parseval with excess `n - dim`.
    ParsevalProjection,
    /// The projected-basis frame `(P e_k)` with `P` the projection onto the
    /// orthogonal complement of `alpha`. A random `alpha` with
    /// `|alpha_1|^2 > 7/8` is drawn when none is given.
    ProjectedBasis { alpha: Option<Vec<f64>> },
    /// i.i.d. standard Gaussian entries.
    Random,
    /// A well-conditioned basis followed by `k` random vectors.
    NearRiesz { k: Option<usize> },
}

impl FrameKind {
    pub fn name(&self) -> &'static str {
        match self {
            FrameKind::ParsevalProjection => "parseval-projection",
            FrameKind::ProjectedBasis { .. } => "projected-basis",
            FrameKind::Random => "random",
            FrameKind::NearRiesz { .. } => "near-riesz",
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian_entry<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    match field {
        Field::Real => Complex64::new(re, 0.0),
        Field::Complex => {
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
        }
    }
}

/// `rows x cols` matrix of independent standard (real or circular complex)
/// Gaussians.
pub fn gaussian_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    field: Field,
) -> CMat {
    let mut m = CMat::zeros(rows, cols);
    // column-major fill keeps the stream order independent of nalgebra
    for c in 0..cols {
        for r in 0..rows {
            m[(r, c)] = gaussian_entry(rng, field);
        }
    }
    m
}

/// Haar-ish random `n x n` unitary (orthogonal in real mode) from the QR
/// factorization of a Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize, field: Field) -> CMat {
    let g = gaussian_matrix(rng, n, n, field);
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    // fix column phases so the distribution does not depend on QR sign
    // conventions
    for j in 0..n {
        let d = r[(j, j)];
        if d.norm() > 0.0 {
            let phase = d / d.norm();
            for i in 0..n {
                q[(i, j)] *= phase;
            }
        }
    }
    if field == Field::Real {
        linalg::drop_imag(&mut q);
    }
    q
}

/// Random invertible `n x n` matrix with condition number at most `max_cond`.
pub fn random_well_conditioned<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    field: Field,
    max_cond: f64,
) -> CMat {
    loop {
        let m =
            linalg::identity(n) + gaussian_matrix(rng, n, n, field).scale(0.5 / (n as f64).sqrt());
        let sv = linalg::singular_values_desc(&m);
        let smin = sv.last().copied().unwrap_or(0.0);
        if smin > 0.0 && sv[0] / smin <= max_cond {
            return m;
        }
    }
}

/// Unit vector with nonzero entries and `|alpha_1|^2` drawn uniformly from
/// `(7/8, 1)`.
pub fn random_example_alpha<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<f64> {
    assert!(m >= 2);
    let lead: f64 = 7.0 / 8.0 + (1.0 / 8.0) * rng.random_range(0.05..0.95);
    let weights: Vec<f64> = (1..m).map(|_| rng.random_range(0.1..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let mut alpha = Vec::with_capacity(m);
    alpha.push(lead.sqrt());
    for w in weights {
        let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        alpha.push(sign * ((1.0 - lead) * w / total).sqrt());
    }
    alpha
}

/// Generates a frame of the requested kind in `C^dim` (or `R^dim`) with
/// `n` vectors.
pub fn generate(
    kind: &FrameKind,
    dim: usize,
    n: usize,
    field: Field,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<Frame> {
    let mut rng = rng_from_seed(seed);
    let spanning = |what: &str| -> Result<()> {
        if dim == 0 || n < dim {
            Err(FrameError::BadParameters(format!(
                "{what} needs dim >= 1 and n >= dim (got dim {dim}, n {n})"
            )))
        } else {
            Ok(())
        }
    };
    match kind {
        FrameKind::ParsevalProjection => {
            spanning("parseval-projection")?;
            let q = random_unitary(&mut rng, n, field);
            let u = q.columns(0, dim).into_owned();
            Ok(Frame::from_computed(field, u.adjoint()))
        }
        FrameKind::Random => {
            if dim == 0 || n == 0 {
                return Err(FrameError::BadParameters(
                    "dim and n must be positive".into(),
                ));
            }
            Frame::from_synthesis(field, gaussian_matrix(&mut rng, dim, n, field))
        }
        FrameKind::NearRiesz { k } => {
            spanning("near-riesz")?;
            let extra = n - dim;
            if let Some(k) = k {
                if *k != extra {
                    return Err(FrameError::BadParameters(format!(
                        "near-riesz with dim {dim} and n {n} adjoins {extra} vectors, not {k}"
                    )));
                }
            }
            let basis = random_well_conditioned(&mut rng, dim, field, 10.0);
            let adjoined = gaussian_matrix(&mut rng, dim, extra, field);
            let synthesis = CMat::from_fn(dim, n, |i, j| {
                if j < dim {
                    basis[(i, j)]
                } else {
                    adjoined[(i, j - dim)]
                }
            });
            Frame::from_synthesis(field, synthesis)
        }
        FrameKind::ProjectedBasis { alpha } => {
            let alpha = match alpha {
                Some(a) => {
                    if a.len() != n {
                        return Err(FrameError::BadParameters(format!(
                            "alpha has {} entries but n = {n}",
                            a.len()
                        )));
                    }
                    a.clone()
                }
                None => {
                    if n < 2 {
                        return Err(FrameError::BadParameters(
                            "projected-basis needs n >= 2".into(),
                        ));
                    }
                    random_example_alpha(&mut rng, n)
                }
            };
            let alpha: Vec<Complex64> = alpha.iter().map(|&a| linalg::real(a)).collect();
            let frame = build_projected_basis_example(&alpha, tol)?;
            if field == Field::Complex {
                Frame::from_synthesis(Field::Complex, frame.synthesis_matrix().clone())
            } else {
                Ok(frame)
            }
        }
    }
}
