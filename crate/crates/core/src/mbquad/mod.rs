//! Numerical inverse Mellin transform: trapezoidal quadrature of
//!
//!     f(tau) = (1/2 pi i) * integral over Re(s) = gamma of F(s) tau^{-s} ds
//!
//! on a truncated vertical contour.  The uniform trapezoid rule is spectrally
//! accurate for these analytic integrands; the step is halved until two
//! refinements agree, and the truncation tail is bounded by the measured
//! exponential decay of the integrand envelope.  All gamma products are
//! formed in log space and exponentiated once per node.

mod log_gamma;

pub use log_gamma::log_gamma;

use crate::eval::{Error, EvalResult, Method, Result};
use crate::mellin::GammaQuotientSymbol;
use num_complex::Complex64;

/// Truncated vertical contour Re(s) = gamma, |Im(s)| <= half_height,
/// sampled with the given step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourConfig {
    pub gamma: f64,
    pub half_height: f64,
    pub step: f64,
}

impl ContourConfig {
    pub fn new(gamma: f64, half_height: f64, step: f64) -> Result<Self> {
        if !(half_height > 0.0) || !(step > 0.0) || step >= half_height {
            return Err(Error::domain("contour requires 0 < step < half_height"));
        }
        Ok(ContourConfig { gamma, half_height, step })
    }
}

/// Node cap across all refinement passes.
const MAX_NODES: usize = 200_000;
/// Minimum acceptable envelope decay rate (per unit height).
const MIN_DECAY: f64 = 1e-3;
const DEFAULT_TOL: f64 = 1e-10;

/// Evaluate the symbol at a complex point, in log space.
/// Returns ln of the absolute value and the phase factor separately folded
/// into a single complex log; `None` marks a gamma pole on the contour.
fn symbol_log(sym: &GammaQuotientSymbol, s: Complex64) -> Result<Complex64> {
    let mut ln = Complex64::new(sym.prefactor().abs().ln(), 0.0) - s * sym.scale_base().ln();
    for t in sym.numerator() {
        ln += log_gamma(Complex64::new(t.offset, 0.0) + t.slope * s)?;
    }
    for t in sym.denominator() {
        ln -= log_gamma(Complex64::new(t.offset, 0.0) + t.slope * s)?;
    }
    Ok(ln)
}

/// The symbol's value at a complex point (sign of the prefactor restored).
pub fn symbol_value(sym: &GammaQuotientSymbol, s: Complex64) -> Result<Complex64> {
    Ok(sym.prefactor().signum() * symbol_log(sym, s)?.exp())
}

/// Contour abscissa and initial truncation/step for the target tolerance.
pub fn auto_contour(sym: &GammaQuotientSymbol) -> Result<ContourConfig> {
    auto_contour_tol(sym, DEFAULT_TOL)
}

pub fn auto_contour_tol(sym: &GammaQuotientSymbol, tol: f64) -> Result<ContourConfig> {
    let strip = sym.strip()?;
    let gamma = strip.default_abscissa();
    // grow T until the envelope is below tol relative to its peak
    let peak_ln = contour_ln_abs(sym, gamma, 0.0).unwrap_or(0.0);
    let target = peak_ln + tol.ln() - 4.0;
    let mut t = 8.0;
    while t < 4096.0 {
        match contour_ln_abs(sym, gamma, t) {
            Some(v) if v > target => t *= 2.0,
            _ => break,
        }
    }
    // step from the distance to the nearest pole (trapezoid error ~ e^{-2 pi d / h})
    let d = (gamma - strip.lo).min(strip.hi - gamma).min(1.0);
    let step = (2.0 * std::f64::consts::PI * d / (tol.ln().abs() + 8.0)).min(t / 16.0);
    ContourConfig::new(gamma, t, step)
}

fn contour_ln_abs(sym: &GammaQuotientSymbol, gamma: f64, u: f64) -> Option<f64> {
    symbol_log(sym, Complex64::new(gamma, u)).ok().map(|l| l.re)
}

/// Trapezoidal inverse Mellin transform of the symbol at tau > 0.
pub fn inverse_mellin(
    sym: &GammaQuotientSymbol,
    tau: f64,
    cfg: &ContourConfig,
) -> Result<EvalResult> {
    if !(tau > 0.0) {
        return Err(Error::domain("inverse Mellin transform requires tau > 0"));
    }
    let strip = sym.strip()?;
    if !strip.contains(cfg.gamma) {
        return Err(Error::domain(format!(
            "contour abscissa {} outside the strip ({}, {})",
            cfg.gamma, strip.lo, strip.hi
        )));
    }
    // integrand g(u) = Re[ F(gamma + iu) (tau * scale... ) ], conjugate
    // symmetry halves the contour; ln(tau) folds into the node exponent
    let ln_tau = tau.ln();
    let sign = sym.prefactor().signum();
    let eval_node = |u: f64| -> Result<f64> {
        let s = Complex64::new(cfg.gamma, u);
        let ln = symbol_log(sym, s)? - s * ln_tau;
        Ok((ln.exp()).re)
    };

    let t = cfg.half_height;
    let mut h = cfg.step;
    let mut prev: Option<f64> = None;
    let mut value = 0.0;
    let mut disc = f64::INFINITY;
    let mut nodes_used = 0usize;
    let mut max_node: f64 = 0.0;
    loop {
        let n = (t / h).ceil() as usize;
        if nodes_used + n > MAX_NODES {
            break;
        }
        nodes_used += n;
        let mut acc = 0.5 * eval_node(0.0)?;
        for j in 1..n {
            let v = eval_node(j as f64 * h)?;
            max_node = max_node.max(v.abs());
            acc += v;
        }
        acc += 0.5 * eval_node(t)?;
        let cur = acc * h / std::f64::consts::PI;
        if let Some(p) = prev {
            let d = (cur - p).abs();
            value = cur;
            let noise_floor = (max_node * h * (n as f64).sqrt()) * f64::EPSILON;
            let stalled = d >= 0.25 * disc && disc.is_finite();
            disc = d;
            prev = Some(cur);
            if d <= 1e-15 * value.abs().max(noise_floor) || d <= noise_floor || stalled {
                break;
            }
        } else {
            value = cur;
            prev = Some(cur);
        }
        h *= 0.5;
    }

    // tail bound from the measured decay of the envelope
    let env = |u: f64| -> f64 {
        contour_ln_abs(sym, cfg.gamma, u).map_or(f64::NEG_INFINITY, |l| l - cfg.gamma * ln_tau)
    };
    let l1 = env(0.8 * t);
    let l2 = env(t);
    let rate = (l1 - l2) / (0.2 * t);
    if !(rate > MIN_DECAY) {
        return Err(Error::SlowDecay { rate: rate.max(0.0) });
    }
    let tail = (l2.exp() / rate) / std::f64::consts::PI;
    let abs_err = disc + tail + 1e-15 * value.abs();
    let r = EvalResult::new(sign * value, abs_err, nodes_used, Method::Quadrature);
    if disc.is_finite() {
        Ok(r)
    } else {
        Err(Error::NonConvergence { best: r, context: "inverse Mellin refinement".into() })
    }
}

/// Convenience wrapper: choose a contour for `tol`, evaluate, and retry with
/// a taller/denser contour if the error estimate misses the target.
pub fn inverse_mellin_auto(sym: &GammaQuotientSymbol, tau: f64, tol: f64) -> Result<EvalResult> {
    let mut cfg = auto_contour_tol(sym, tol)?;
    let mut best: Option<EvalResult> = None;
    for _ in 0..4 {
        match inverse_mellin(sym, tau, &cfg) {
            Ok(r) => {
                if r.abs_err <= tol * r.value.abs().max(1.0) {
                    return Ok(r);
                }
                best = Some(match best {
                    Some(b) if b.abs_err <= r.abs_err => b,
                    _ => r,
                });
            }
            Err(Error::SlowDecay { rate }) => return Err(Error::SlowDecay { rate }),
            Err(e) => return Err(e),
        }
        cfg = ContourConfig::new(cfg.gamma, cfg.half_height * 2.0, cfg.step)?;
    }
    let best = best.expect("at least one evaluation");
    Err(Error::NonConvergence { best, context: format!("inverse Mellin at tau = {tau}") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mellin;

    #[test]
    fn exp_pair_round_trip() {
        // Gamma(s) <-> e^{-tau}
        let sym = mellin::exp_symbol(1.0).unwrap();
        let r = inverse_mellin_auto(&sym, 1.0, 1e-11).unwrap();
        assert!((r.value - (-1.0f64).exp()).abs() < 1e-11, "{}", r.value);
        for &tau in &[0.25, 2.0, 5.0] {
            let r = inverse_mellin_auto(&sym, tau, 1e-11).unwrap();
            assert!((r.value - (-tau).exp()).abs() < 1e-10, "tau={tau}");
        }
    }

    #[test]
    fn mittag_leffler_pair_matches_series() {
        let sym = mellin::ml_symbol(0.6).unwrap();
        let r = inverse_mellin_auto(&sym, 2.0, 1e-11).unwrap();
        let order = crate::specfun::MittagLefflerOrder::one_param(0.6).unwrap();
        let e = crate::specfun::ml_eval(&order, -2.0).unwrap();
        assert!((r.value - e.value).abs() <= r.abs_err + e.abs_err + 1e-12, "{} vs {}", r.value, e.value);
    }

    #[test]
    fn theorem_kernel_closed_form_case() {
        // alpha = 1, beta = 1/2: Phi(tau) = 1/(pi sqrt(tau) (1+tau))
        let sym = mellin::phi_theorem_symbol(1.0, 0.5).unwrap();
        let r = inverse_mellin_auto(&sym, 4.0, 1e-11).unwrap();
        let expect = 1.0 / (std::f64::consts::PI * 2.0 * 5.0);
        assert!((r.value - expect).abs() < 1e-10, "{} vs {expect}", r.value);
    }

    #[test]
    fn contour_shift_invariance() {
        let sym = mellin::k_symbol(1.5, 0.75, 2).unwrap();
        let strip = sym.strip().unwrap();
        let mid = strip.default_abscissa();
        let mut values = Vec::new();
        for &g in &[mid, mid - 0.2, mid + 0.2] {
            let cfg = ContourConfig::new(g, 64.0, 0.05).unwrap();
            values.push(inverse_mellin(&sym, 0.8, &cfg).unwrap().value);
        }
        assert!((values[0] - values[1]).abs() < 1e-9);
        assert!((values[0] - values[2]).abs() < 1e-9);
    }

    #[test]
    fn slow_decay_detected_at_wave_boundary() {
        // beta = 2 removes the exponential decay of the K integrand
        let sym = mellin::k_symbol(2.0, 2.0, 1).unwrap();
        let cfg = ContourConfig::new(0.5, 64.0, 0.05).unwrap();
        match inverse_mellin(&sym, 0.7, &cfg) {
            Err(Error::SlowDecay { .. }) => {}
            other => panic!("expected SlowDecay, got {other:?}"),
        }
    }

    #[test]
    fn rejects_contour_outside_strip() {
        let sym = mellin::ml_symbol(0.5).unwrap();
        let cfg = ContourConfig::new(1.5, 32.0, 0.1).unwrap();
        assert!(inverse_mellin(&sym, 1.0, &cfg).is_err());
    }
}
