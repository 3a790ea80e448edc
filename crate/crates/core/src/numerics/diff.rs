//! Central finite differences, used for the −∂/∂β̃ and −∂/∂β energy checks.

use crate::error::{Error, Result};

/// Step size balancing truncation against roundoff at double precision.
pub fn default_step(x: f64) -> f64 {
    1e-5 * x.abs().max(1.0)
}

/// Symmetric difference quotient `(f(x+h) − f(x−h)) / 2h`.
pub fn central_difference(mut f: impl FnMut(f64) -> f64, x: f64, h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::NonPositiveStep { h });
    }
    Ok((f(x + h) - f(x - h)) / (2.0 * h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_is_exact() {
        let d = central_difference(|x| x * x, 1.0, 1e-4).unwrap();
        assert!((d - 2.0).abs() < 1e-7);
    }

    #[test]
    fn constant_has_zero_slope() {
        let d = central_difference(|_| 4.25, 3.0, 1e-3).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn exponential_at_origin() {
        let d = central_difference(f64::exp, 0.0, 1e-4).unwrap();
        assert!((d - 1.0).abs() < 1e-8);
    }

    #[test]
    fn zero_step_is_an_error() {
        assert!(central_difference(|x| x, 1.0, 0.0).is_err());
        assert!(central_difference(|x| x, 1.0, -1e-3).is_err());
    }

    #[test]
    fn default_step_scales_with_magnitude() {
        assert_eq!(default_step(0.0), 1e-5);
        assert_eq!(default_step(-200.0), 2e-3);
    }
}
