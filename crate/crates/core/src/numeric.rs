//! Numeric tolerances threaded through the whole pipeline.
//!
//! The underlying mathematics is exact; floating point needs one documented
//! knob per kind of check. All gates live here so that a single context
//! object controls every comparison.

use crate::C64;

/// Tolerance context for all numeric checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericContext {
    /// SL(2,C) membership: |det g - 1| <= sl2_tol.
    pub sl2_tol: f64,
    /// Eigenline residuals: ||v g - m^-1 v|| <= eigen_tol * ||v||.
    pub eigen_tol: f64,
    /// Parabolic gate: |tr g -+ 2| <= parabolic_tol selects the single-line branch.
    pub parabolic_tol: f64,
    /// Relation / coloring residuals (Wirtinger, shadow, octahedral, holonomy).
    pub residual_tol: f64,
    /// Zero-magnitude gate for admissibility denominators (scale-free).
    pub zero_tol: f64,
    /// Projective line equality: |sin of angle between representatives|.
    pub line_tol: f64,
    /// Unit-circle avoidance gate: accept when ||z| - 1| > unit_circle_gap.
    pub unit_circle_gap: f64,
    /// Non-analytic gate for dilogarithm arguments: |zeta - nearest integer|.
    pub analytic_gap: f64,
    /// Accepted critical points: max |exp(dPhi/dbeta_i) - 1|.
    pub critical_tol: f64,
}

impl Default for NumericContext {
    fn default() -> Self {
        NumericContext {
            sl2_tol: 1e-9,
            eigen_tol: 1e-10,
            parabolic_tol: 1e-8,
            residual_tol: 1e-9,
            zero_tol: 1e-10,
            line_tol: 1e-9,
            unit_circle_gap: 1e-6,
            analytic_gap: 1e-8,
            critical_tol: 1e-10,
        }
    }
}

impl NumericContext {
    /// Context with the master residual tolerance replaced and the related
    /// gates rescaled by the same factor. Used by the CLI `--tol` flag.
    pub fn with_residual_tol(tol: f64) -> Self {
        let base = NumericContext::default();
        let k = tol / base.residual_tol;
        NumericContext {
            sl2_tol: base.sl2_tol * k,
            eigen_tol: base.eigen_tol * k,
            parabolic_tol: base.parabolic_tol * k,
            residual_tol: tol,
            zero_tol: base.zero_tol * k,
            line_tol: base.line_tol * k,
            critical_tol: base.critical_tol * k,
            ..base
        }
    }
}

/// Relative deviation |a - b| / max(1, |b|).
pub fn rel_err(a: C64, b: C64) -> f64 {
    (a - b).norm() / f64::max(1.0, b.norm())
}

/// |sin of the angle| between two nonzero row or column vectors given as
/// component pairs; 0 iff the vectors are parallel.
pub fn sin_angle(a: (C64, C64), b: (C64, C64)) -> f64 {
    let cross = a.0 * b.1 - a.1 * b.0;
    let na = (a.0.norm_sqr() + a.1.norm_sqr()).sqrt();
    let nb = (b.0.norm_sqr() + b.1.norm_sqr()).sqrt();
    cross.norm() / (na * nb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_angle_parallel_is_zero() {
        let a = (C64::new(1.0, 2.0), C64::new(-3.0, 0.5));
        let b = (a.0 * C64::new(0.0, 4.0), a.1 * C64::new(0.0, 4.0));
        assert!(sin_angle(a, b) < 1e-15);
    }

    #[test]
    fn sin_angle_orthogonal_is_one() {
        let a = (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
        let b = (C64::new(0.0, 0.0), C64::new(5.0, 0.0));
        assert!((sin_angle(a, b) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn tol_rescale_keeps_ratios() {
        let ctx = NumericContext::with_residual_tol(1e-6);
        assert!((ctx.sl2_tol - 1e-6).abs() < 1e-18);
        assert!((ctx.eigen_tol - 1e-7).abs() < 1e-19);
    }
}
