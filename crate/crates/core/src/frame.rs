//! Frames, their operators, optimal bounds and excess.

use serde::{Deserialize, Serialize};

use crate::error::{FrameError, Result};
use crate::linalg::{self, CMat, CVec};
use crate::tolerance::ToleranceConfig;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }

    /// The smallest field containing both.
    pub fn join(self, other: Field) -> Field {
        if self == Field::Complex || other == Field::Complex {
            Field::Complex
        } else {
            Field::Real
        }
    }
}

/// A finite frame `(f_1, ..., f_n)` in `R^d` or `C^d`.
///
/// Vectors are stored as the columns of the `d x n` synthesis matrix. Zero
/// vectors are allowed. In real mode every stored imaginary part is exactly
/// zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    field: Field,
    synthesis: CMat,
}

/// Optimal frame bounds: the extreme eigenvalues of `S = U*U`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrameBounds {
    pub a_opt: f64,
    pub b_opt: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExcessReport {
    pub excess: usize,
    pub rank: usize,
    /// All `n` singular values of the analysis matrix, descending, padded
    /// with zeros when `n > d`.
    pub singular_values: Vec<f64>,
    pub tolerance_used: f64,
}

impl Frame {
    /// Builds a real frame from its vectors.
    pub fn real(dim: usize, vectors: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = vectors
            .iter()
            .map(|v| v.iter().map(|&x| linalg::real(x)).collect())
            .collect();
        Self::new(Field::Real, dim, &rows)
    }

    pub fn complex(dim: usize, vectors: &[Vec<Complex64>]) -> Result<Self> {
        Self::new(Field::Complex, dim, vectors)
    }

    pub fn new(field: Field, dim: usize, vectors: &[Vec<Complex64>]) -> Result<Self> {
        if dim == 0 {
            return Err(FrameError::Malformed("dimension must be positive".into()));
        }
        if vectors.is_empty() {
            return Err(FrameError::Malformed(
                "a frame needs at least one vector".into(),
            ));
        }
        let mut synthesis = CMat::zeros(dim, vectors.len());
        for (k, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(FrameError::Malformed(format!(
                    "vector {} has {} entries, expected {dim}",
                    k + 1,
                    v.len()
                )));
            }
            for (i, z) in v.iter().enumerate() {
                synthesis[(i, k)] = *z;
            }
        }
        Self::from_synthesis(field, synthesis)
    }

    /// Wraps a `d x n` synthesis matrix whose columns are the frame vectors.
    pub fn from_synthesis(field: Field, synthesis: CMat) -> Result<Self> {
        if synthesis.nrows() == 0 || synthesis.ncols() == 0 {
            return Err(FrameError::Malformed("empty frame".into()));
        }
        if synthesis
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(FrameError::Malformed("non-finite entry".into()));
        }
        if field == Field::Real && linalg::max_imag(&synthesis) != 0.0 {
            return Err(FrameError::Malformed(
                "real frame with nonzero imaginary part".into(),
            ));
        }
        Ok(Self { field, synthesis })
    }

    /// Like [`Frame::from_synthesis`] for computed results: in real mode
    /// the round-off imaginary parts produced by complex arithmetic are
    /// discarded.
    pub(crate) fn from_computed(field: Field, mut synthesis: CMat) -> Self {
        if field == Field::Real {
            debug_assert!(
                linalg::max_imag(&synthesis) <= 1e-6 * synthesis.norm().max(1.0),
                "real computation produced a large imaginary part"
            );
            linalg::drop_imag(&mut synthesis);
        }
        Self { field, synthesis }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.synthesis.nrows()
    }

    pub fn len(&self) -> usize {
        self.synthesis.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.synthesis.ncols() == 0
    }

    /// The `k`-th vector, 0-based.
    pub fn vector(&self, k: usize) -> CVec {
        self.synthesis.column(k).into_owned()
    }

    pub fn vectors(&self) -> impl Iterator<Item = CVec> + '_ {
        self.synthesis.column_iter().map(|c| c.into_owned())
    }

    /// `d x n` matrix `U*`, mapping coefficients `c` to `sum c_k f_k`.
    pub fn synthesis_matrix(&self) -> &CMat {
        &self.synthesis
    }

    /// `n x d` matrix `U` with `(U x)_k = <x, f_k>`; row `k` is `f_k^*`.
    pub fn analysis_matrix(&self) -> CMat {
        self.synthesis.adjoint()
    }

    /// `S = U*U = sum_k f_k f_k^*`.
    pub fn frame_operator(&self) -> CMat {
        &self.synthesis * self.synthesis.adjoint()
    }

    /// `UU*`, entry `(j, k) = <f_k, f_j>`.
    pub fn gram_matrix(&self) -> CMat {
        self.synthesis.adjoint() * &self.synthesis
    }

    pub fn squared_norms(&self) -> Vec<f64> {
        self.synthesis
            .column_iter()
            .map(|c| c.norm_squared())
            .collect()
    }

    pub fn scaled(&self, c: f64) -> Frame {
        Frame {
            field: self.field,
            synthesis: self.synthesis.scale(c),
        }
    }

    pub fn bounds(&self) -> FrameBounds {
        let eig = linalg::hermitian_eigenvalues(&self.frame_operator());
        // S is PSD; clamp round-off below zero.
        let a_opt = eig.first().copied().unwrap_or(0.0).max(0.0);
        let b_opt = eig.last().copied().unwrap_or(0.0).max(a_opt);
        FrameBounds { a_opt, b_opt }
    }

    /// True iff the vectors span the space, i.e. `a_opt > rank_rtol * b_opt`.
    pub fn is_frame(&self, tol: &ToleranceConfig) -> bool {
        let b = self.bounds();
        b.b_opt > 0.0 && b.a_opt > tol.rank_rtol * b.b_opt
    }

    pub fn parseval_residual(&self) -> f64 {
        let s = self.frame_operator() - linalg::identity(self.dim());
        linalg::op_norm(&s)
    }

    pub fn is_parseval(&self, tol: &ToleranceConfig) -> bool {
        self.parseval_residual() <= tol.atol
    }

    pub(crate) fn require_frame(&self, tol: &ToleranceConfig) -> Result<()> {
        if self.is_frame(tol) {
            Ok(())
        } else {
            Err(FrameError::NotAFrame)
        }
    }

    pub(crate) fn require_parseval(&self, tol: &ToleranceConfig) -> Result<()> {
        let residual = self.parseval_residual();
        if residual <= tol.atol {
            Ok(())
        } else {
            Err(FrameError::NotParseval { residual })
        }
    }

    /// `e(f) = dim Ker U* = n - rank U`.
    pub fn excess(&self, tol: &ToleranceConfig) -> Result<ExcessReport> {
        self.require_frame(tol)?;
        let mut singular_values = linalg::singular_values_desc(&self.synthesis);
        let rank = linalg::rank_from_singular_values(&singular_values, tol.rank_rtol);
        let cutoff = linalg::rank_cutoff(&singular_values, tol.rank_rtol);
        singular_values.resize(self.len(), 0.0);
        Ok(ExcessReport {
            excess: self.len() - rank,
            rank,
            singular_values,
            tolerance_used: cutoff,
        })
    }

    /// Orthonormal basis of `Ker U* = (Im U)^perp` as the columns of an
    /// `n x e` matrix.
    pub fn kernel_of_synthesis(&self, tol: &ToleranceConfig) -> CMat {
        let mut k = linalg::null_space(&self.synthesis, tol.rank_rtol);
        if self.field == Field::Real {
            linalg::drop_imag(&mut k);
        }
        k
    }

    /// `sum_k (1 - ||f_k||^2)`, which equals the excess of a Parseval frame.
    pub fn excess_from_norms(&self, tol: &ToleranceConfig) -> Result<f64> {
        self.require_parseval(tol)?;
        Ok(self.squared_norms().iter().map(|s| 1.0 - s).sum())
    }
}
