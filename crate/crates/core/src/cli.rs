//! Command-line surface. Every subcommand prints one JSON [`Report`] on
//! stdout; diagnostics go to stderr.
//!
//! Exit codes: 0 when the verdict is `pass` or `n/a`, 1 when a checked
//! property failed, 2 for usage and input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde_json::{json, Value};

use crate::duality::{self, DualityReport};
use crate::error::{FrameError, Result};
use crate::frame::{Field, Frame};
use crate::fundamental::{self, IndexSet, EXHAUSTIVE_LIMIT};
use crate::generate::{self, gaussian_matrix, rng_from_seed, FrameKind};
use crate::io::{self, FrameFile, Report, Verdict};
use crate::linalg::{self, CMat};
use crate::parseval_dual;
use crate::tolerance::ToleranceConfig;

#[derive(Debug, Parser)]
#[command(name = "framekit", version, about = "Finite frame theory toolkit")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Relative singular-value cutoff for rank decisions.
    #[arg(long, global = true, default_value_t = 1e-10)]
    rank_rtol: f64,
    /// Absolute tolerance for residual comparisons.
    #[arg(long, global = true, default_value_t = 1e-8)]
    atol: f64,
    /// Band around 1 for classifying eigenvalues of S as equal to 1.
    #[arg(long, global = true, default_value_t = 1e-8)]
    eig_one_atol: f64,
    /// Seed for every random choice.
    #[arg(long, global = true, env = "FRAMEKIT_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DualMethod {
    Canonical,
    FromProjection,
    FromW,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    ParsevalProjection,
    ProjectedBasis,
    Random,
    NearRiesz,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bounds, Parseval flag, excess and norms of a frame.
    Analyze { file: PathBuf },
    /// Compute a dual frame.
    Dual {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DualMethod::Canonical)]
        method: DualMethod,
        /// Frame file (in dimension n) whose vectors span the complement of
        /// Im U; used by from-projection. Random when absent.
        #[arg(long)]
        complement: Option<PathBuf>,
        /// Frame file with n vectors of length d holding the rows of W;
        /// used by from-w. Random when absent.
        #[arg(long)]
        w: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Duality classification and excess equality of a pair, or an ensemble
    /// of random dual pairs with --trials.
    Check {
        f: Option<PathBuf>,
        g: Option<PathBuf>,
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Decide existence of a Parseval dual and construct one.
    ParsevalDual {
        file: PathBuf,
        /// Rescale to lower bound 1 first; the result is then a tight dual.
        #[arg(long)]
        rescale: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// nu bounds for one index set, or the global infimum with --global.
    Nu {
        file: PathBuf,
        /// Comma-separated 1-based indices.
        #[arg(long)]
        j: Option<String>,
        #[arg(long)]
        global: bool,
    },
    /// Residual of the fundamental identity over seeded random x.
    Identity {
        file: PathBuf,
        /// Index set; every subset is swept when absent.
        #[arg(long)]
        j: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Tail threshold n0 and verification of the tail bound.
    Tail {
        file: PathBuf,
        #[arg(long)]
        eps: f64,
        /// Index set to verify; every J containing {1..n0} when absent.
        #[arg(long)]
        j: Option<String>,
    },
    /// Check the decomposition lemma on a dual pair (T = U_f, S = V_g*).
    Lemma {
        f: PathBuf,
        g: PathBuf,
        #[arg(long, default_value_t = 16)]
        probes: usize,
    },
    /// Generate a frame file.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Number of adjoined vectors (near-riesz).
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated coefficients (projected-basis).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Option<Vec<f64>>,
        #[arg(long)]
        complex: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let tol = match ToleranceConfig::new(
        cli.global.rank_rtol,
        cli.global.atol,
        cli.global.eig_one_atol,
    ) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match dispatch(&cli.command, cli.global.seed, &tol) {
        Ok(report) => {
            let _ = writeln!(out, "{}", report.to_json());
            report.verdict.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn frame_value(f: &Frame) -> Value {
    serde_json::to_value(FrameFile::from_frame(f)).expect("frame file serializes")
}

fn report(
    command: &str,
    inputs: Value,
    verdict: Verdict,
    payload: Value,
    tol: &ToleranceConfig,
) -> Report {
    Report {
        command: command.to_string(),
        inputs,
        verdict,
        payload,
        tolerances: *tol,
    }
}

fn parse_j(text: &str, n: usize) -> Result<IndexSet> {
    IndexSet::parse(text, n)
}

fn dispatch(command: &Command, seed: u64, tol: &ToleranceConfig) -> Result<Report> {
    match command {
        Command::Analyze { file } => analyze(file, seed, tol),
        Command::Dual {
            file,
            method,
            complement,
            w,
            out,
        } => dual(
            file,
            *method,
            complement.as_deref(),
            w.as_deref(),
            out.as_deref(),
            seed,
            tol,
        ),
        Command::Check { f, g, trials } => check(f.as_deref(), g.as_deref(), *trials, seed, tol),
        Command::ParsevalDual { file, rescale, out } => {
            parseval_dual_cmd(file, *rescale, out.as_deref(), seed, tol)
        }
        Command::Nu { file, j, global } => nu(file, j.as_deref(), *global, seed, tol),
        Command::Identity { file, j, samples } => identity(file, j.as_deref(), *samples, seed, tol),
        Command::Tail { file, eps, j } => tail(file, *eps, j.as_deref(), seed, tol),
        Command::Lemma { f, g, probes } => lemma(f, g, *probes, seed, tol),
        Command::Gen {
            kind,
            dim,
            n,
            k,
            alpha,
            complex,
            out,
        } => gen(
            *kind,
            *dim,
            *n,
            *k,
            alpha.clone(),
            *complex,
            out.as_deref(),
            seed,
            tol,
        ),
    }
}

fn analyze(file: &Path, seed: u64, tol: &ToleranceConfig) -> Result<Report> {
    let f = io::read_frame(file)?;
    let inputs = json!({ "file": path_str(file), "seed": seed });
    let bounds = f.bounds();
    let is_frame = f.is_frame(tol);
    let is_parseval = f.is_parseval(tol);
    let mut payload = json!({
        "n": f.len(),
        "dim": f.dim(),
        "field": f.field().as_str(),
        "is_frame": is_frame,
        "a_opt": bounds.a_opt,
        "b_opt": bounds.b_opt,
        "is_parseval": is_parseval,
        "parseval_residual": f.parseval_residual(),
        "squared_norms": f.squared_norms(),
    });
    if !is_frame {
        payload["excess"] = json!("n/a");
        payload["rank"] = json!("n/a");
        payload["excess_from_norms"] = json!("n/a");
        return Ok(report(
            "analyze",
            inputs,
            Verdict::NotApplicable,
            payload,
            tol,
        ));
    }
    let ex = f.excess(tol)?;
    let mut ok = ex.excess + ex.rank == f.len();
    payload["excess"] = json!(ex.excess);
    payload["rank"] = json!(ex.rank);
    payload["singular_values"] = json!(ex.singular_values);
    payload["rank_cutoff"] = json!(ex.tolerance_used);
    if is_parseval {
        let from_norms = f.excess_from_norms(tol)?;
        ok &= (from_norms - ex.excess as f64).abs() <= f.len() as f64 * tol.atol;
        payload["excess_from_norms"] = json!(from_norms);
    } else {
        payload["excess_from_norms"] = json!("n/a");
    }
    Ok(report(
        "analyze",
        inputs,
        Verdict::from_bool(ok),
        payload,
        tol,
    ))
}

fn duality_value(r: &DualityReport) -> Value {
    serde_json::to_value(r).expect("duality report serializes")
}

fn read_w(path: &Path, f: &Frame) -> Result<CMat> {
    let w = io::read_frame(path)?;
    if w.dim() != f.dim() || w.len() != f.len() {
        return Err(FrameError::DimensionMismatch(format!(
            "w file must hold {} rows of length {}",
            f.len(),
            f.dim()
        )));
    }
    Ok(w.synthesis_matrix().transpose())
}

fn dual(
    file: &Path,
    method: DualMethod,
    complement: Option<&Path>,
    w_file: Option<&Path>,
    out: Option<&Path>,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<Report> {
    let f = io::read_frame(file)?;
    let method_name = DualMethod::to_possible_value(&method)
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let inputs = json!({
        "file": path_str(file),
        "method": method_name,
        "complement": complement.map(path_str),
        "w": w_file.map(path_str),
        "seed": seed,
    });
    let mut rng = rng_from_seed(seed);
    let mut payload = json!({});
    let g = match method {
        DualMethod::Canonical => duality::canonical_dual(&f, tol)?,
        DualMethod::FromW | DualMethod::Random => {
            let w = match (method, w_file) {
                (DualMethod::FromW, Some(p)) => read_w(p, &f)?,
                _ => gaussian_matrix(&mut rng, f.len(), f.dim(), f.field()),
            };
            duality::dual_from_free_operator(&f, &w, tol)?
        }
        DualMethod::FromProjection => {
            let n = f.len();
            let comp = match complement {
                Some(p) => {
                    let c = io::read_frame(p)?;
                    if c.dim() != n {
                        return Err(FrameError::DimensionMismatch(format!(
                            "complement vectors must have length {n}"
                        )));
                    }
                    c.synthesis_matrix().clone()
                }
                None => {
                    let e = f.excess(tol)?.excess;
                    gaussian_matrix(&mut rng, n, e, f.field())
                }
            };
            let r = linalg::range_basis(&f.analysis_matrix(), tol.rank_rtol);
            let c = linalg::range_basis(&comp, tol.rank_rtol);
            let proj = duality::oblique_projection_from_bases(&r, &c, tol)?;
            payload["projection"] = io::matrix_to_value(&proj, f.field());
            duality::dual_from_projection(&f, &proj, tol)?
        }
    };
    let check = duality::check_duality(&f, &g, tol)?;
    let eq = duality::verify_excess_equality(&f, &g, tol)?;
    let mut ok = check.is_exact_dual && eq.holds;
    // cross-check the two parametrizations: recover UV* and rebuild the dual
    if check.is_exact_dual {
        let pair = duality::projection_from_dual_pair(&f, &g, tol)?;
        let rebuilt = duality::dual_from_projection(&f, &pair.projection, tol)?;
        let mismatch = linalg::op_norm(&(rebuilt.synthesis_matrix() - g.synthesis_matrix()));
        ok &= mismatch <= tol.atol;
        payload["parametrization_mismatch"] = json!(mismatch);
        payload["idempotent_residual"] = json!(pair.idempotent_residual);
    }
    payload["duality"] = duality_value(&check);
    payload["excess_f"] = json!(eq.excess_f);
    payload["excess_g"] = json!(eq.excess_g);
    payload["dual"] = frame_value(&g);
    if let Some(p) = out {
        io::write_frame(p, &g)?;
    }
    Ok(report("dual", inputs, Verdict::from_bool(ok), payload, tol))
}

fn check(
    f: Option<&Path>,
    g: Option<&Path>,
    trials: Option<usize>,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<Report> {
    if let Some(trials) = trials {
        return check_ensemble(trials, seed, tol);
    }
    let (Some(fp), Some(gp)) = (f, g) else {
        return Err(FrameError::BadParameters(
            "check needs two frame files or --trials".into(),
        ));
    };
    let f = io::read_frame(fp)?;
    let g = io::read_frame(gp)?;
    let inputs = json!({ "f": path_str(fp), "g": path_str(gp), "seed": seed });
    let r = duality::check_duality(&f, &g, tol)?;
    let mut payload = json!({ "duality": duality_value(&r) });
    if !r.is_pseudo_dual {
        payload["excess_f"] = json!(f.excess(tol)?.excess);
        payload["excess_g"] = json!(g.excess(tol)?.excess);
        return Ok(report(
            "check",
            inputs,
            Verdict::NotApplicable,
            payload,
            tol,
        ));
    }
    let eq = duality::verify_excess_equality(&f, &g, tol)?;
    payload["excess_f"] = json!(eq.excess_f);
    payload["excess_g"] = json!(eq.excess_g);
    payload["kernel_relation_residual"] = json!(eq.kernel_relation_residual);
    Ok(report(
        "check",
        inputs,
        Verdict::from_bool(eq.holds),
        payload,
        tol,
    ))
}

fn check_ensemble(trials: usize, seed: u64, tol: &ToleranceConfig) -> Result<Report> {
    let inputs = json!({ "trials": trials, "seed": seed });
    let mut failures = Vec::new();
    for t in 0..trials {
        let trial_seed = seed.wrapping_add(t as u64);
        let mut rng = rng_from_seed(trial_seed);
        let d = rng.random_range(2..=5usize);
        let n = rng.random_range(d..=d + 4);
        let field = if rng.random_bool(0.5) {
            Field::Complex
        } else {
            Field::Real
        };
        let f = Frame::from_synthesis(field, gaussian_matrix(&mut rng, d, n, field))?;
        let w = gaussian_matrix(&mut rng, n, d, field);
        let g = duality::dual_from_free_operator(&f, &w, tol)?;
        let eq = duality::verify_excess_equality(&f, &g, tol)?;
        if !eq.holds {
            failures.push(json!({ "trial": t, "seed": trial_seed, "excess_f": eq.excess_f, "excess_g": eq.excess_g }));
        }
    }
    let payload =
        json!({ "trials": trials, "failures": failures.len(), "failed_trials": failures });
    Ok(report(
        "check",
        inputs,
        Verdict::from_bool(failures.is_empty()),
        payload,
        tol,
    ))
}

fn parseval_dual_cmd(
    file: &Path,
    rescale: bool,
    out: Option<&Path>,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<Report> {
    let original = io::read_frame(file)?;
    let inputs = json!({ "file": path_str(file), "rescale": rescale, "seed": seed });
    let (f, scale) = if rescale {
        parseval_dual::rescale_to_admissible(&original, tol)?
    } else {
        (original.clone(), 1.0)
    };
    let exists = parseval_dual::parseval_dual_exists(&f, tol)?;
    let mut payload = json!({
        "exists": exists.exists,
        "a_opt": exists.a_opt,
        "deviation_dim": exists.deviation_dim,
        "excess": exists.excess_val,
        "reason": exists.reason,
        "scale": scale,
    });
    if !exists.exists {
        return Ok(report("parseval-dual", inputs, Verdict::Pass, payload, tol));
    }
    let built = parseval_dual::construct_parseval_dual(&f, &tol.clone())?;
    let dual = built.dual.expect("constructed dual present");
    // U' = cU and V'*U' = I give (cV')*U = I: c g' is a tight dual of the
    // original frame with bound c^2.
    let dual_of_original = dual.scaled(scale);
    let pr = built.parseval_residual.unwrap_or(f64::INFINITY);
    let dr = built.duality_residual.unwrap_or(f64::INFINITY);
    let excess_dual = dual_of_original.excess(tol)?.excess;
    let ok = pr <= tol.atol && dr <= tol.atol && excess_dual == exists.excess_val;
    payload["parseval_residual"] = json!(pr);
    payload["duality_residual"] = json!(dr);
    payload["tight_bound"] = json!(scale * scale);
    payload["excess_dual"] = json!(excess_dual);
    payload["dual"] = frame_value(&dual_of_original);
    if let Some(p) = out {
        io::write_frame(p, &dual_of_original)?;
    }
    Ok(report(
        "parseval-dual",
        inputs,
        Verdict::from_bool(ok),
        payload,
        tol,
    ))
}

fn vector_value(v: &crate::CVec, field: Field) -> Value {
    let m = CMat::from_column_slice(1, v.len(), v.as_slice());
    io::matrix_to_value(&m, field)[0].clone()
}

fn nu(
    file: &Path,
    j: Option<&str>,
    global: bool,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<Report> {
    let f = io::read_frame(file)?;
    let inputs = json!({ "file": path_str(file), "j": j, "global": global, "seed": seed });
    let floor = 0.75 - tol.atol;
    let ceil = 1.0 + tol.atol;
    if global {
        let (nu_minus, argmin) = fundamental::nu_minus_global(&f, tol)?;
        let payload = json!({ "nu_minus_global": nu_minus, "argmin_j": argmin.to_string() });
        let ok = nu_minus >= floor && nu_minus <= ceil;
        return Ok(report("nu", inputs, Verdict::from_bool(ok), payload, tol));
    }
    let set = parse_j(j.unwrap_or(""), f.len())?;
    let b = fundamental::nu_bounds(&f, &set, tol)?;
    let payload = json!({
        "j": set.to_string(),
        "nu_minus": b.nu_minus,
        "nu_plus": b.nu_plus,
        "argmin_vector": vector_value(&b.argmin_vector, f.field()),
        "argmax_vector": vector_value(&b.argmax_vector, f.field()),
    });
    let ok = b.nu_minus >= floor && b.nu_minus <= b.nu_plus + tol.atol && b.nu_plus <= ceil;
    Ok(report("nu", inputs, Verdict::from_bool(ok), payload, tol))
}

fn identity(
    file: &Path,
    j: Option<&str>,
    samples: usize,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<Report> {
    let f = io::read_frame(file)?;
    let inputs = json!({ "file": path_str(file), "j": j, "samples": samples, "seed": seed });
    let n = f.len();
    let sets: Vec<IndexSet> = match j {
        Some(text) => vec![parse_j(text, n)?],
        None => {
            if n > EXHAUSTIVE_LIMIT {
                return Err(FrameError::TooLarge {
                    n,
                    limit: EXHAUSTIVE_LIMIT,
                });
            }
            IndexSet::all_subsets(n).collect()
        }
    };
    let mut rng = rng_from_seed(seed);
    let xs: Vec<crate::CVec> = (0..samples)
        .map(|_| {
            gaussian_matrix(&mut rng, f.dim(), 1, f.field())
                .column(0)
                .into_owned()
        })
        .filter(|x| x.norm() > 0.0)
        .collect();
    let mut worst: f64 = 0.0;
    for set in &sets {
        for x in &xs {
            let (l, r) = fundamental::identity_sides(&f, set, x, tol)?;
            worst = worst.max((l - r).abs() / x.norm_squared());
        }
    }
    let payload = json!({
        "subsets_checked": sets.len(),
        "samples": xs.len(),
        "max_relative_residual": worst,
    });
    Ok(report(
        "identity",
        inputs,
        Verdict::from_bool(worst <= tol.atol),
        payload,
        tol,
    ))
}

fn tail(
    file: &Path,
    eps: f64,
    j: Option<&str>,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<Report> {
    let f = io::read_frame(file)?;
    let inputs = json!({ "file": path_str(file), "eps": eps, "j": j, "seed": seed });
    let n = f.len();
    let n0 = fundamental::tail_threshold(&f, eps, tol)?;
    let tail_sum: f64 = f.squared_norms().iter().skip(n0).map(|s| 1.0 - s).sum();
    let sets: Vec<IndexSet> = match j {
        Some(text) => vec![parse_j(text, n)?],
        None => {
            if n - n0 > EXHAUSTIVE_LIMIT {
                return Err(FrameError::TooLarge {
                    n,
                    limit: EXHAUSTIVE_LIMIT,
                });
            }
            // every superset of {1..n0}
            (0..1u64 << (n - n0))
                .map(|m| {
                    let rest = (n0 + 1..=n).filter(|k| m >> (k - n0 - 1) & 1 == 1);
                    IndexSet::new((1..=n0).chain(rest), n)
                })
                .collect::<Result<_>>()?
        }
    };
    let mut all_hold = true;
    let mut min_nu = f64::INFINITY;
    for set in &sets {
        let r = fundamental::verify_tail_bound(&f, eps, set, tol)?;
        all_hold &= r.holds;
        min_nu = min_nu.min(r.nu_minus.min(r.nu_minus_mirrored));
    }
    let payload = json!({
        "n0": n0,
        "tail_sum": tail_sum,
        "subsets_checked": sets.len(),
        "min_nu_minus": min_nu,
        "floor": 1.0 - eps,
    });
    Ok(report(
        "tail",
        inputs,
        Verdict::from_bool(all_hold),
        payload,
        tol,
    ))
}

fn lemma(fp: &Path, gp: &Path, probes: usize, seed: u64, tol: &ToleranceConfig) -> Result<Report> {
    let f = io::read_frame(fp)?;
    let g = io::read_frame(gp)?;
    let inputs = json!({ "f": path_str(fp), "g": path_str(gp), "probes": probes, "seed": seed });
    let t = f.analysis_matrix();
    let s = g.synthesis_matrix().clone();
    let r = duality::verify_lemma_decomposition(&t, &s, probes, seed, tol)?;
    let payload = serde_json::to_value(r).expect("lemma report serializes");
    Ok(report(
        "lemma",
        inputs,
        Verdict::from_bool(r.max_residual() <= tol.atol),
        payload,
        tol,
    ))
}

#[allow(clippy::too_many_arguments)]
fn gen(
    kind: GenKind,
    dim: Option<usize>,
    n: usize,
    k: Option<usize>,
    alpha: Option<Vec<f64>>,
    complex: bool,
    out: Option<&Path>,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<Report> {
    let field = if complex { Field::Complex } else { Field::Real };
    let (frame_kind, dim) = match kind {
        GenKind::ParsevalProjection => (FrameKind::ParsevalProjection, dim),
        GenKind::Random => (FrameKind::Random, dim),
        GenKind::NearRiesz => (FrameKind::NearRiesz { k }, dim),
        GenKind::ProjectedBasis => {
            let implied = n.saturating_sub(1);
            if let Some(d) = dim {
                if d != implied {
                    return Err(FrameError::BadParameters(format!(
                        "projected-basis with n = {n} lives in dimension {implied}"
                    )));
                }
            }
            (
                FrameKind::ProjectedBasis {
                    alpha: alpha.clone(),
                },
                Some(implied),
            )
        }
    };
    let dim = dim.ok_or_else(|| FrameError::BadParameters("--dim is required".into()))?;
    let inputs = json!({
        "kind": frame_kind.name(),
        "dim": dim,
        "n": n,
        "k": k,
        "alpha": alpha,
        "complex": complex,
        "seed": seed,
    });
    let frame = generate::generate(&frame_kind, dim, n, field, seed, tol)?;
    let excess = frame.excess(tol).map(|e| e.excess).ok();
    let ok = match frame_kind {
        FrameKind::ParsevalProjection => frame.is_parseval(tol) && excess == Some(n - dim),
        FrameKind::NearRiesz { .. } => excess == Some(n - dim),
        FrameKind::ProjectedBasis { .. } => frame.is_parseval(tol) && excess == Some(1),
        FrameKind::Random => excess.is_some(),
    };
    let payload = json!({ "frame": frame_value(&frame), "excess": excess });
    if let Some(p) = out {
        io::write_frame(p, &frame)?;
    }
    Ok(report("gen", inputs, Verdict::from_bool(ok), payload, tol))
}
