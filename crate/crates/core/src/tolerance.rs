use serde::{Deserialize, Serialize};

use crate::error::{FrameError, Result};

/// Numerical tolerances shared by every operation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Relative singular-value cutoff used for every rank decision.
    pub rank_rtol: f64,
    /// Absolute tolerance for residual and norm comparisons.
    pub atol: f64,
    /// Band around 1 inside which an eigenvalue of `S` counts as equal to 1.
    pub eig_one_atol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            rank_rtol: 1e-10,
            atol: 1e-8,
            eig_one_atol: 1e-8,
        }
    }
}

impl ToleranceConfig {
    pub fn new(rank_rtol: f64, atol: f64, eig_one_atol: f64) -> Result<Self> {
        let tol = Self {
            rank_rtol,
            atol,
            eig_one_atol,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("rank_rtol", self.rank_rtol),
            ("atol", self.atol),
            ("eig_one_atol", self.eig_one_atol),
        ] {
            if !(v > 0.0 && v < 1.0) {
                return Err(FrameError::InvalidTolerance(format!(
                    "{name} = {v} must lie in (0, 1)"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        assert!(ToleranceConfig::default().validate().is_ok());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(ToleranceConfig::new(0.0, 1e-8, 1e-8).is_err());
        assert!(ToleranceConfig::new(1e-10, 1.0, 1e-8).is_err());
        assert!(ToleranceConfig::new(1e-10, 1e-8, f64::NAN).is_err());
    }
}
