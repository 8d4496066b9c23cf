//! Finite-dimensional frame theory.
//!
//! A [`Frame`] is a finite, ordered sequence of vectors spanning `R^d` or
//! `C^d`. This crate computes the objects attached to a frame (analysis,
//! synthesis and frame operators, optimal bounds, excess, duals) and checks
//! the structural results that tie them together:
//!
//! * dual, pseudo-dual and approximately dual frames share the same excess
//!   ([`duality`]);
//! * dual frames are in one-to-one correspondence with oblique projections
//!   onto the range of the analysis operator ([`duality`]);
//! * a frame has a Parseval dual exactly when its lower bound is at least one
//!   and its excess dominates `dim Im(S - I)` ([`parseval_dual`]);
//! * the fundamental identity for Parseval frames and the `nu` bounds that
//!   follow from it ([`fundamental`]).
//!
//! All operations are pure functions of their inputs. Randomness is always
//! driven by an explicit seed.

pub mod cli;
pub mod duality;
pub mod error;
pub mod frame;
pub mod fundamental;
pub mod generate;
pub mod io;
pub mod linalg;
pub mod parseval_dual;
pub mod tolerance;

pub use error::{FrameError, Result};
pub use frame::{ExcessReport, Field, Frame, FrameBounds};
pub use linalg::{CMat, CVec};
pub use num_complex::Complex64;
pub use tolerance::ToleranceConfig;
