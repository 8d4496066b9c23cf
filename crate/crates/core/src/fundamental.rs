//! The fundamental identity for Parseval frames and the `nu` bounds.
//!
//! For an index set `J` write `S_J = sum_{k in J} f_k f_k^*`. The quantity
//!
//! ```text
//! q_J(x) = sum_{k in J} |<x, f_k>|^2 + || sum_{k not in J} <x, f_k> f_k ||^2
//! ```
//!
//! is the quadratic form of `M_J = S_J + S_{J^c}^2`, so `nu_-(J)` and
//! `nu_+(J)` are the extreme eigenvalues of `M_J`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{FrameError, Result};
use crate::frame::{Field, Frame};
use crate::linalg::{self, CMat, CVec};
use crate::tolerance::ToleranceConfig;
use num_complex::Complex64;

/// Largest frame for which exhaustive sweeps over all `2^n` subsets run.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// A subset `J` of `{1, ..., n}` (1-based, matching frame indices in
/// reports).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IndexSet {
    members: BTreeSet<usize>,
    n: usize,
}

impl IndexSet {
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&k| k == 0 || k > n) {
            return Err(FrameError::BadParameters(format!(
                "index {bad} outside 1..={n}"
            )));
        }
        Ok(Self { members, n })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            members: BTreeSet::new(),
            n,
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            members: (1..=n).collect(),
            n,
        }
    }

    /// `{1, ..., n0}`.
    pub fn prefix(n0: usize, n: usize) -> Self {
        Self {
            members: (1..=n0.min(n)).collect(),
            n,
        }
    }

    /// Subset encoded by the low `n` bits of `mask` (bit `k-1` <-> index `k`).
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Self {
            members: (1..=n).filter(|k| mask >> (k - 1) & 1 == 1).collect(),
            n,
        }
    }

    /// Parses a comma-separated 1-based list such as `1,3,4`. The empty
    /// string is the empty set.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Self::empty(n));
        }
        let members = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| FrameError::BadParameters(format!("bad index {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(members, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.contains(&k)
    }

    pub fn complement(&self) -> Self {
        Self {
            members: (1..=self.n).filter(|k| !self.members.contains(k)).collect(),
            n: self.n,
        }
    }

    pub fn is_superset_of(&self, other: &IndexSet) -> bool {
        self.members.is_superset(&other.members)
    }

    /// Every subset of `{1..n}`, in mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = IndexSet> {
        (0..1u64 << n).map(move |m| IndexSet::from_mask(m, n))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NuBounds {
    pub nu_minus: f64,
    pub nu_plus: f64,
    #[serde(skip)]
    pub argmin_vector: CVec,
    #[serde(skip)]
    pub argmax_vector: CVec,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailBoundReport {
    pub n0: usize,
    /// `nu_-(J)`
    pub nu_minus: f64,
    /// Infimum of the mirrored quantity, i.e. `nu_-(J^c)`.
    pub nu_minus_mirrored: f64,
    pub holds: bool,
}

fn check_index_set(f: &Frame, j: &IndexSet) -> Result<()> {
    if j.n() != f.len() {
        return Err(FrameError::DimensionMismatch(format!(
            "index set over {} elements for a frame of {}",
            j.n(),
            f.len()
        )));
    }
    Ok(())
}

/// `S_J = sum_{k in J} f_k f_k^*`.
pub fn partial_frame_operator(f: &Frame, j: &IndexSet) -> CMat {
    let mut s = CMat::zeros(f.dim(), f.dim());
    for &k in j.members() {
        let v = f.vector(k - 1);
        s += &v * v.adjoint();
    }
    s
}

/// Both sides of the fundamental identity at `x`.
pub fn identity_sides(
    f: &Frame,
    j: &IndexSet,
    x: &CVec,
    tol: &ToleranceConfig,
) -> Result<(f64, f64)> {
    f.require_parseval(tol)?;
    check_index_set(f, j)?;
    if x.len() != f.dim() {
        return Err(FrameError::DimensionMismatch(format!(
            "x has length {}, frame dimension is {}",
            x.len(),
            f.dim()
        )));
    }
    if x.norm() == 0.0 {
        return Err(FrameError::ZeroVector);
    }
    let coeffs = f.analysis_matrix() * x;
    let mut in_energy = 0.0;
    let mut out_energy = 0.0;
    let mut in_synth = CVec::zeros(f.dim());
    let mut out_synth = CVec::zeros(f.dim());
    for k in 0..f.len() {
        let c = coeffs[k];
        let v = f.vector(k);
        if j.contains(k + 1) {
            in_energy += c.norm_sqr();
            in_synth += v * c;
        } else {
            out_energy += c.norm_sqr();
            out_synth += v * c;
        }
    }
    let lhs = in_energy + out_synth.norm_squared();
    let rhs = out_energy + in_synth.norm_squared();
    Ok((lhs, rhs))
}

/// `M_J = S_J + S_{J^c}^2`.
pub fn quantity_matrix(f: &Frame, j: &IndexSet) -> Result<CMat> {
    check_index_set(f, j)?;
    let s_in = partial_frame_operator(f, j);
    let s_out = partial_frame_operator(f, &j.complement());
    Ok(&s_in + &s_out * &s_out)
}

fn nu_from_matrix(m: &CMat) -> NuBounds {
    let (vals, vecs) = linalg::hermitian_eigen(m);
    let last = vals.len() - 1;
    NuBounds {
        nu_minus: vals[0],
        nu_plus: vals[last],
        argmin_vector: vecs.column(0).into_owned(),
        argmax_vector: vecs.column(last).into_owned(),
    }
}

pub fn nu_bounds(f: &Frame, j: &IndexSet, tol: &ToleranceConfig) -> Result<NuBounds> {
    f.require_parseval(tol)?;
    Ok(nu_from_matrix(&quantity_matrix(f, j)?))
}

/// `inf_J nu_-(J)` over all `2^n` subsets, with a minimizing `J`.
pub fn nu_minus_global(f: &Frame, tol: &ToleranceConfig) -> Result<(f64, IndexSet)> {
    f.require_parseval(tol)?;
    let n = f.len();
    if n > EXHAUSTIVE_LIMIT {
        return Err(FrameError::TooLarge {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    // Precompute the rank-one pieces once; the sweep is 2^n small eigenproblems.
    let pieces: Vec<CMat> = f.vectors().map(|v| &v * v.adjoint()).collect();
    let s = f.frame_operator();
    let mut best = (f64::INFINITY, IndexSet::empty(n));
    for mask in 0..1u64 << n {
        let mut s_in = CMat::zeros(f.dim(), f.dim());
        for (k, p) in pieces.iter().enumerate() {
            if mask >> k & 1 == 1 {
                s_in += p;
            }
        }
        let s_out = &s - &s_in;
        let m = &s_in + &s_out * &s_out;
        let nu = linalg::hermitian_eigenvalues(&m)[0];
        if nu < best.0 {
            best = (nu, IndexSet::from_mask(mask, n));
        }
    }
    Ok(best)
}

/// Smallest `n0` in `0..=n` with `sum_{k > n0} (1 - ||f_k||^2) < eps`.
pub fn tail_threshold(f: &Frame, eps: f64, tol: &ToleranceConfig) -> Result<usize> {
    f.require_parseval(tol)?;
    if eps.is_nan() || eps <= 0.0 {
        return Err(FrameError::BadParameters(format!(
            "eps = {eps} must be positive"
        )));
    }
    let defects: Vec<f64> = f.squared_norms().iter().map(|s| 1.0 - s).collect();
    let n = defects.len();
    // tails[n0] = sum_{k > n0} defect_k, 1-based k
    let mut tail = 0.0;
    let mut tails = vec![0.0; n + 1];
    for n0 in (0..n).rev() {
        tail += defects[n0];
        tails[n0] = tail;
    }
    Ok((0..=n).find(|&n0| tails[n0] < eps).unwrap_or(n))
}

/// Checks both tail inequalities for `J` containing `{1..n0}`.
pub fn verify_tail_bound(
    f: &Frame,
    eps: f64,
    j: &IndexSet,
    tol: &ToleranceConfig,
) -> Result<TailBoundReport> {
    let n0 = tail_threshold(f, eps, tol)?;
    check_index_set(f, j)?;
    if !j.is_superset_of(&IndexSet::prefix(n0, f.len())) {
        return Err(FrameError::PrefixNotContained { n0 });
    }
    let nu_minus = nu_bounds(f, j, tol)?.nu_minus;
    let nu_minus_mirrored = nu_bounds(f, &j.complement(), tol)?.nu_minus;
    let floor = 1.0 - eps;
    Ok(TailBoundReport {
        n0,
        nu_minus,
        nu_minus_mirrored,
        holds: nu_minus > floor && nu_minus_mirrored > floor,
    })
}

/// The frame `(P e_k)_{k=1..m}` where `P` projects `C^m` onto `{a}^perp`,
/// written in an orthonormal basis of `{a}^perp` (so it lives in dimension
/// `m - 1`). It is Parseval with excess 1 and `||x_k||^2 = 1 - |alpha_k|^2`.
pub fn build_projected_basis_example(alpha: &[Complex64], tol: &ToleranceConfig) -> Result<Frame> {
    let m = alpha.len();
    if m < 2 {
        return Err(FrameError::BadParameters(
            "need at least two coefficients".into(),
        ));
    }
    if let Some(index) = alpha.iter().position(|a| a.norm() == 0.0) {
        return Err(FrameError::ZeroEntry { index: index + 1 });
    }
    let norm_sq: f64 = alpha.iter().map(|a| a.norm_sqr()).sum();
    if (norm_sq - 1.0).abs() > tol.atol {
        return Err(FrameError::NotUnit { norm_sq });
    }
    let field = if alpha.iter().all(|a| a.im == 0.0) {
        Field::Real
    } else {
        Field::Complex
    };
    // a^* as a 1 x m matrix; its kernel is {a}^perp
    let a_row = CMat::from_row_iterator(1, m, alpha.iter().map(|a| a.conj()));
    let mut basis = linalg::null_space(&a_row, tol.rank_rtol);
    if field == Field::Real {
        linalg::drop_imag(&mut basis);
    }
    // coordinates of P e_k in the basis B are B^* e_k
    Ok(Frame::from_computed(field, basis.adjoint()))
}
