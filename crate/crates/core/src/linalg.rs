//! Dense complex linear algebra helpers built on nalgebra.
//!
//! Every rank decision in the crate goes through [`numerical_rank`] so that
//! the relative cutoff is applied consistently.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Singular values in descending order.
pub fn singular_values_desc(m: &CMat) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut sv: Vec<f64> = if max_imag(m) == 0.0 {
        m.map(|z| z.re).singular_values().iter().copied().collect()
    } else {
        m.clone().singular_values().iter().copied().collect()
    };
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Spectral (operator 2-) norm.
pub fn op_norm(m: &CMat) -> f64 {
    singular_values_desc(m).first().copied().unwrap_or(0.0)
}

pub fn min_singular_value(m: &CMat) -> f64 {
    singular_values_desc(m).last().copied().unwrap_or(0.0)
}

/// Absolute singular-value threshold below which a value counts as zero.
pub fn rank_cutoff(sv_desc: &[f64], rank_rtol: f64) -> f64 {
    rank_rtol * sv_desc.first().copied().unwrap_or(0.0)
}

pub fn rank_from_singular_values(sv_desc: &[f64], rank_rtol: f64) -> usize {
    let cut = rank_cutoff(sv_desc, rank_rtol);
    sv_desc.iter().filter(|&&s| s > cut && s > 0.0).count()
}

pub fn numerical_rank(m: &CMat, rank_rtol: f64) -> usize {
    rank_from_singular_values(&singular_values_desc(m), rank_rtol)
}

/// Orthonormal basis of `count` vectors from the span of the columns of
/// `cands`, picking the largest residual at each step.
fn pivoted_gram_schmidt(cands: &CMat, count: usize) -> CMat {
    let mut basis = CMat::zeros(cands.nrows(), count);
    let mut rest: Vec<CVec> = cands.column_iter().map(|c| c.into_owned()).collect();
    for k in 0..count {
        for v in rest.iter_mut() {
            for _ in 0..2 {
                for b in basis.columns(0, k).column_iter() {
                    let c = b.dotc(v);
                    *v -= b * c;
                }
            }
        }
        let best = (0..rest.len())
            .max_by(|&a, &b| rest[a].norm().total_cmp(&rest[b].norm()))
            .expect("enough candidates");
        let v = rest.swap_remove(best);
        let n = v.norm();
        basis.set_column(k, &(v / real(n)));
    }
    basis
}

/// Orthonormal basis (as columns) of the column space of `m`.
pub fn range_basis(m: &CMat, rank_rtol: f64) -> CMat {
    let rows = m.nrows();
    if rows == 0 || m.ncols() == 0 {
        return CMat::zeros(rows, 0);
    }
    // The rank comes from the singular values; the basis from column-pivoted
    // Gram-Schmidt, since nalgebra's singular vectors are unreliable when
    // singular values repeat.
    let rank = numerical_rank(m, rank_rtol);
    pivoted_gram_schmidt(m, rank)
}

/// Orthonormal basis (as columns) of the orthogonal complement of the span
/// of the orthonormal columns of `basis`, inside `C^ambient`.
pub fn orthogonal_complement(basis: &CMat, ambient: usize) -> CMat {
    let target = ambient - basis.ncols().min(ambient);
    if target == 0 {
        return CMat::zeros(ambient, 0);
    }
    // Complete the basis from the standard basis vectors.
    let mut cands = identity(ambient);
    for b in basis.column_iter() {
        for _ in 0..2 {
            let coeffs = b.adjoint() * &cands;
            cands -= b * coeffs;
        }
    }
    let mut out = pivoted_gram_schmidt(&cands, target);
    for mut c in out.column_iter_mut() {
        let mut v = c.clone_owned();
        normalize_phase(&mut v);
        c.copy_from(&v);
    }
    out
}

/// Orthonormal basis (as columns) of `Ker m`.
///
/// Each basis vector is phase-normalised so that its first entry of
/// non-negligible modulus is real and positive.
pub fn null_space(m: &CMat, rank_rtol: f64) -> CMat {
    let row_space = range_basis(&m.adjoint(), rank_rtol);
    orthogonal_complement(&row_space, m.ncols())
}

/// Rotates `v` by a unit scalar so that its first significant entry is real
/// and positive.
pub fn normalize_phase(v: &mut CVec) {
    let scale = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return;
    }
    if let Some(pivot) = v.iter().find(|z| z.norm() > 1e-6 * scale).copied() {
        let phase = pivot.conj() / pivot.norm();
        for z in v.iter_mut() {
            *z *= phase;
        }
    }
}

/// Sine of the largest principal angle between the spans of two matrices
/// with orthonormal columns. Subspaces of different dimension are at
/// distance 1.
pub fn subspace_distance(a: &CMat, b: &CMat) -> f64 {
    if a.ncols() != b.ncols() {
        return 1.0;
    }
    if a.ncols() == 0 {
        return 0.0;
    }
    let residual = a - b * (b.adjoint() * a);
    op_norm(&residual).min(1.0)
}

/// Principal angles (radians, ascending) between two subspaces given by
/// orthonormal columns.
pub fn principal_angles(a: &CMat, b: &CMat) -> Vec<f64> {
    let k = a.ncols().min(b.ncols());
    if k == 0 {
        return Vec::new();
    }
    let cross = a.adjoint() * b;
    singular_values_desc(&cross)
        .into_iter()
        .take(k)
        .map(|c| c.clamp(0.0, 1.0).acos())
        .collect()
}

/// Eigen-decomposition of the Hermitian part of `m`, eigenvalues ascending.
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), CMat::zeros(0, 0));
    }
    let h = (m + m.adjoint()).scale(0.5);
    let (raw_values, raw_vectors) = if max_imag(&h) == 0.0 {
        let eig = SymmetricEigen::new(h.map(|z| z.re));
        (eig.eigenvalues, eig.eigenvectors.map(real))
    } else {
        let eig = SymmetricEigen::new(h);
        (eig.eigenvalues, eig.eigenvectors)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| raw_values[a].total_cmp(&raw_values[b]));
    let values = order.iter().map(|&i| raw_values[i]).collect();
    let mut vectors = CMat::zeros(n, n);
    for (c, &i) in order.iter().enumerate() {
        vectors.set_column(c, &raw_vectors.column(i));
    }
    (values, vectors)
}

pub fn hermitian_eigenvalues(m: &CMat) -> Vec<f64> {
    hermitian_eigen(m).0
}

/// Inverse of a Hermitian positive definite matrix.
pub fn hpd_inverse(m: &CMat) -> Option<CMat> {
    let h = (m + m.adjoint()).scale(0.5);
    h.cholesky().map(|c| c.inverse())
}

pub fn general_inverse(m: &CMat) -> Option<CMat> {
    m.clone().try_inverse()
}

/// Largest absolute imaginary part of any entry.
pub fn max_imag(m: &CMat) -> f64 {
    m.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
}

pub fn drop_imag(m: &mut CMat) {
    for z in m.iter_mut() {
        z.im = 0.0;
    }
}

pub fn hermitian_residual(m: &CMat) -> f64 {
    op_norm(&(m - m.adjoint()))
}
