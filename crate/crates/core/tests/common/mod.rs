//! Independent oracles and seeded ensembles shared by the integration tests.
//!
//! Nothing here calls the SVD- or eigen-based routines it is used to check:
//! ranks come from Gaussian elimination (exact over the rationals where the
//! input allows), and quadratic forms are summed term by term.

#![allow(dead_code, clippy::needless_range_loop)]

use framekit::duality;
use framekit::frame::{Field, Frame};
use framekit::fundamental::IndexSet;
use framekit::generate::{gaussian_matrix, rng_from_seed, FrameKind};
use framekit::linalg::CMat;
use framekit::{CVec, Complex64, ToleranceConfig};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

pub fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

/// Rank of an integer matrix by fraction-exact row reduction.
pub fn exact_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(p) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in 0..n_rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &pivot;
                for c in col..n_cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the span of the given complex vectors by Gaussian elimination
/// with partial pivoting.
pub fn elimination_rank(vectors: &[CVec], dim: usize) -> usize {
    let mut m: Vec<Vec<Complex64>> = vectors
        .iter()
        .map(|v| v.iter().copied().collect())
        .collect();
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    if scale == 0.0 {
        return 0;
    }
    let cut = 1e-9 * scale;
    let mut rank = 0;
    for col in 0..dim {
        let best = (rank..m.len()).max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()));
        let Some(p) = best else { break };
        if m[p][col].norm() <= cut {
            continue;
        }
        m.swap(rank, p);
        let pivot = m[rank][col];
        for r in rank + 1..m.len() {
            let factor = m[r][col] / pivot;
            for c in col..dim {
                let delta = factor * m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The largest `k` such that some `k` vectors can be deleted leaving a
/// spanning set, by exhaustive search over all deletions.
pub fn excess_by_deletion(f: &Frame) -> usize {
    let n = f.len();
    let vectors: Vec<CVec> = f.vectors().collect();
    for k in (0..=n).rev() {
        for deleted in combinations(n, k) {
            let kept: Vec<CVec> = (0..n)
                .filter(|i| !deleted.contains(i))
                .map(|i| vectors[i].clone())
                .collect();
            if elimination_rank(&kept, f.dim()) == f.dim() {
                return k;
            }
        }
    }
    0
}

/// `sum_{k in J} |<x, f_k>|^2 + || sum_{k not in J} <x, f_k> f_k ||^2`,
/// summed term by term.
pub fn quadratic_quantity(f: &Frame, j: &IndexSet, x: &CVec) -> f64 {
    let mut energy = 0.0;
    let mut synth = vec![Complex64::new(0.0, 0.0); f.dim()];
    for k in 0..f.len() {
        let v = f.vector(k);
        let mut c = Complex64::new(0.0, 0.0);
        for i in 0..f.dim() {
            c += x[i] * v[i].conj();
        }
        if j.contains(k + 1) {
            energy += c.norm_sqr();
        } else {
            for i in 0..f.dim() {
                synth[i] += c * v[i];
            }
        }
    }
    energy + synth.iter().map(|z| z.norm_sqr()).sum::<f64>()
}

pub fn random_unit_vector<R: Rng>(rng: &mut R, dim: usize, field: Field) -> CVec {
    let x = gaussian_matrix(rng, dim, 1, field).column(0).into_owned();
    let n = x.norm();
    x / Complex64::new(n, 0.0)
}

pub fn field_for(i: usize) -> Field {
    if i.is_multiple_of(2) {
        Field::Real
    } else {
        Field::Complex
    }
}

pub fn parseval_frame(dim: usize, n: usize, field: Field, seed: u64) -> Frame {
    framekit::generate::generate(&FrameKind::ParsevalProjection, dim, n, field, seed, &tol())
        .unwrap()
}

/// Largest `B/A` accepted by [`random_frame`].
pub const MAX_CONDITION: f64 = 1e6;

/// A seeded Gaussian frame, redrawn from derived seeds until `B/A` is at most
/// [`MAX_CONDITION`]. Exact-duality checks at an absolute 1e-8 are out of
/// reach for worse-conditioned frames in double precision.
pub fn random_frame(dim: usize, n: usize, field: Field, seed: u64) -> Frame {
    let mut s = seed;
    loop {
        let f = framekit::generate::generate(&FrameKind::Random, dim, n, field, s, &tol()).unwrap();
        let b = f.bounds();
        if b.b_opt <= MAX_CONDITION * b.a_opt {
            return f;
        }
        s = s.wrapping_add(0x9e37_79b9_7f4a_7c15);
    }
}

/// A random frame and a random dual of it through the free-operator
/// parametrization.
pub fn random_dual_pair(dim: usize, n: usize, field: Field, seed: u64) -> (Frame, Frame) {
    let f = random_frame(dim, n, field, seed);
    let mut rng = rng_from_seed(seed ^ 0x9e37_79b9_7f4a_7c15);
    let w = gaussian_matrix(&mut rng, n, dim, field);
    let g = duality::dual_from_free_operator(&f, &w, &tol()).unwrap();
    (f, g)
}

/// Oblique projection onto `Im U` parallel to a random complement.
pub fn random_projection_onto_range(f: &Frame, seed: u64) -> CMat {
    let t = tol();
    let n = f.len();
    let e = f.excess(&t).unwrap().excess;
    let mut rng = rng_from_seed(seed);
    let comp = gaussian_matrix(&mut rng, n, e, f.field());
    let r = framekit::linalg::range_basis(&f.analysis_matrix(), t.rank_rtol);
    let c = framekit::linalg::range_basis(&comp, t.rank_rtol);
    duality::oblique_projection_from_bases(&r, &c, &t).unwrap()
}

pub fn mb3() -> Frame {
    let c = (2.0f64 / 3.0).sqrt();
    let v: Vec<Vec<f64>> = (0..3)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / 3.0;
            vec![c * t.cos(), c * t.sin()]
        })
        .collect();
    Frame::real(2, &v).unwrap()
}

pub fn real_frame(dim: usize, vectors: &[&[f64]]) -> Frame {
    let v: Vec<Vec<f64>> = vectors.iter().map(|r| r.to_vec()).collect();
    Frame::real(dim, &v).unwrap()
}

pub fn op_norm(m: &CMat) -> f64 {
    framekit::linalg::op_norm(m)
}
