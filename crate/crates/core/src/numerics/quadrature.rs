//! Deterministic quadrature rules.
//!
//! Two rules cover every definite integral in the crate:
//!
//! - Gauss-Legendre on a finite interval, exact for polynomials of degree
//!   up to `2·node_count − 1`;
//! - the periodic trapezoid (left-endpoint) rule, spectrally accurate for
//!   smooth integrands that are `(b − a)`-periodic, which is the natural
//!   rule for the characteristic-function integrals over `[−π, π]`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    GaussLegendre,
    /// Uniform-grid rule for integrands that are (b − a)-periodic; the
    /// right endpoint is identified with the left and not evaluated.
    TrapezoidPeriodic,
}

/// A rule, a node count, and an interval `[a, b]`.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub rule: QuadratureRule,
    pub node_count: usize,
    pub interval: (f64, f64),
}

impl QuadratureSpec {
    pub fn new(rule: QuadratureRule, node_count: usize, a: f64, b: f64) -> Result<Self> {
        if node_count < 2 {
            return Err(Error::TooFewNodes { node_count });
        }
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::BadInterval { a, b });
        }
        Ok(Self {
            rule,
            node_count,
            interval: (a, b),
        })
    }

    pub fn gauss_legendre(node_count: usize, a: f64, b: f64) -> Result<Self> {
        Self::new(QuadratureRule::GaussLegendre, node_count, a, b)
    }

    pub fn trapezoid_periodic(node_count: usize, a: f64, b: f64) -> Result<Self> {
        Self::new(QuadratureRule::TrapezoidPeriodic, node_count, a, b)
    }
}

/// Approximate `∫_a^b f(x) dx` with the given rule.
///
/// Fails with the offending node if `f` evaluates to anything non-finite.
pub fn integrate(mut f: impl FnMut(f64) -> f64, spec: &QuadratureSpec) -> Result<f64> {
    let (a, b) = spec.interval;
    match spec.rule {
        QuadratureRule::GaussLegendre => {
            let (nodes, weights) = legendre_rule(spec.node_count);
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            let mut sum = 0.0;
            for (&u, &w) in nodes.iter().zip(&weights) {
                let x = mid + half * u;
                let v = f(x);
                if !v.is_finite() {
                    return Err(Error::NonFiniteIntegrand { node: x, value: v });
                }
                sum += w * v;
            }
            Ok(half * sum)
        }
        QuadratureRule::TrapezoidPeriodic => {
            let n = spec.node_count;
            let h = (b - a) / n as f64;
            let mut sum = 0.0;
            for i in 0..n {
                let x = a + i as f64 * h;
                let v = f(x);
                if !v.is_finite() {
                    return Err(Error::NonFiniteIntegrand { node: x, value: v });
                }
                sum += v;
            }
            Ok(sum * h)
        }
    }
}

/// Gauss-Legendre nodes and weights on [−1, 1], by Newton iteration on
/// P_n with the Chebyshev initial guess. Nodes come out ascending.
fn legendre_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let half = n.div_ceil(2);
    for i in 0..half {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-15 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = d;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x from the cosine guess is the i-th node from the top
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if n % 2 == 1 {
        // enforce the exact central node for odd n
        let (_, d) = legendre_with_derivative(n, 0.0);
        nodes[n / 2] = 0.0;
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}
