//! The Gaussian-base subordination kernel Phi_{alpha,beta}.
//!
//! Its Mellin symbol has one left and one right pole family, so the kernel
//! carries an ascending series in tau^(alpha/2) and a descending one in
//! tau^(-alpha/2).  Exactly one of them is convergent (entire of finite
//! order) depending on the sign of beta - alpha/2; the other is the matching
//! asymptotic expansion, summed to its smallest term.  On the boundary
//! beta = alpha/2 both sine series collapse into a closed rational
//! trigonometric form valid for every tau.  Contour quadrature of the symbol
//! backs all of it up.

use crate::eval::{Error, EvalResult, Method, Result};
use crate::mbquad::{self, ContourConfig};
use crate::mellin::{self, GammaQuotientSymbol, SeriesRep, Side};
use crate::specfun::{four_param_wright_eval, FourParamOrder};
use crate::subord::scale_result;
use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Case {
    /// beta < alpha/2: the ascending series is entire
    Ascending,
    /// beta > alpha/2: the descending series is entire
    Descending,
    /// beta = alpha/2: closed trigonometric form
    Closed,
}

pub struct PhiKernel {
    alpha: f64,
    beta: f64,
    case: Case,
    symbol: GammaQuotientSymbol,
    /// left residue series; absent when beta = 1 cancels the left family
    ascending: Option<SeriesRep>,
    /// right residue series; absent when alpha = 2 cancels the right family
    descending: Option<SeriesRep>,
    convergent: Option<FourParamOrder>,
    contour: OnceLock<Option<ContourConfig>>,
}

/// Absolute/relative accuracy each evaluation route must reach before the
/// next one is consulted.
const ROUTE_TOL: f64 = 1e-10;

impl PhiKernel {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        crate::subord::KernelSpec::TheoremPhi { alpha, beta }.validate()?;
        let symbol = mellin::phi_theorem_symbol(alpha, beta)?;
        let ascending = mellin::residue_series(&symbol, Side::Left).ok();
        let descending = mellin::residue_series(&symbol, Side::Right).ok();
        let case = if (2.0 * beta - alpha).abs() <= 4.0 * f64::EPSILON * alpha {
            Case::Closed
        } else if beta < 0.5 * alpha {
            Case::Ascending
        } else {
            Case::Descending
        };
        let convergent = match case {
            Case::Ascending => Some(FourParamOrder::new(1.0 - beta, -beta, 0.5 * alpha, 0.5 * alpha)?),
            Case::Descending => Some(FourParamOrder::new(1.0, beta, 0.0, -0.5 * alpha)?),
            Case::Closed => None,
        };
        Ok(PhiKernel { alpha, beta, case, symbol, ascending, descending, convergent, contour: OnceLock::new() })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Phi_{alpha,beta}(tau), tau > 0.
    pub fn eval(&self, tau: f64) -> Result<EvalResult> {
        if !(tau > 0.0) {
            return Err(Error::domain("Phi kernel requires tau > 0"));
        }
        if self.case == Case::Closed {
            return Ok(self.closed_form(tau));
        }
        let accept = |r: &EvalResult| r.abs_err <= ROUTE_TOL * r.value.abs().max(1.0);

        // asymptotic side first when tau lies deep in its regime
        let half = 0.5 * self.alpha;
        let deep_asym = match self.case {
            Case::Ascending => tau.powf(half) > 3.0,
            Case::Descending => tau.powf(-half) > 3.0,
            Case::Closed => unreachable!(),
        };
        if deep_asym {
            if let Some(r) = self.asymptotic_side(tau) {
                if accept(&r) {
                    return Ok(r);
                }
            }
        }
        // the compiled f64 series with its honest noise bound covers most of
        // the range without touching double-double summation
        let fast = match self.case {
            Case::Ascending => &self.ascending,
            _ => &self.descending,
        };
        if let Some(rep) = fast {
            if let Ok(r) = rep.eval(tau) {
                if accept(&r) {
                    return Ok(r);
                }
            }
        }
        if let Some(r) = self.convergent_side(tau) {
            if accept(&r) {
                return Ok(r);
            }
        }
        if !deep_asym {
            if let Some(r) = self.asymptotic_side(tau) {
                if accept(&r) {
                    return Ok(r);
                }
            }
        }
        self.quadrature(tau)
    }

    /// The entire four-parameter Wright form.
    fn convergent_side(&self, tau: f64) -> Option<EvalResult> {
        let order = self.convergent.as_ref()?;
        let half = 0.5 * self.alpha;
        let (pre, z) = match self.case {
            Case::Ascending => (tau.powf(half - 1.0), -tau.powf(half)),
            Case::Descending => (tau.recip(), -tau.powf(-half)),
            Case::Closed => return None,
        };
        match scale_result(four_param_wright_eval(order, z), pre) {
            Ok(r) => Some(r),
            Err(Error::NonConvergence { best, .. }) => Some(best),
            Err(_) => None,
        }
    }

    /// Min-term truncation of the divergent side, when that family exists.
    fn asymptotic_side(&self, tau: f64) -> Option<EvalResult> {
        match self.case {
            Case::Ascending => Some(self.descending.as_ref()?.eval_min_term(tau)),
            _ => Some(self.ascending.as_ref()?.eval_min_term(tau)),
        }
    }

    fn quadrature(&self, tau: f64) -> Result<EvalResult> {
        let cfg = self.contour.get_or_init(|| mbquad::auto_contour_tol(&self.symbol, ROUTE_TOL).ok());
        if let Some(cfg) = cfg {
            if let Ok(r) = mbquad::inverse_mellin(&self.symbol, tau, cfg) {
                if r.abs_err <= 1e-9 * r.value.abs().max(1.0) {
                    return Ok(r);
                }
            }
        }
        mbquad::inverse_mellin_auto(&self.symbol, tau, 1e-10)
    }

    /// Boundary form sin(pi a/2) tau^(a/2-1) / (pi (1 + 2 cos(pi a/2) tau^(a/2) + tau^a)),
    /// the analytic continuation of both sine series of the beta = alpha/2 case.
    fn closed_form(&self, tau: f64) -> EvalResult {
        let half = 0.5 * self.alpha;
        let s = crate::gammafn::sin_pi(half);
        let c = (std::f64::consts::PI * half).cos();
        let th = tau.powf(half);
        let v = s * th / tau / (std::f64::consts::PI * (1.0 + 2.0 * c * th + th * th));
        EvalResult::new(v, 1e-14 * v.abs(), 0, Method::ClosedForm)
    }

    /// The truncated sine series of the boundary case, for cross-checks:
    /// ascending for tau < 1, descending for tau > 1.
    pub fn boundary_sine_series(&self, tau: f64) -> Result<EvalResult> {
        if self.case != Case::Closed {
            return Err(Error::domain("sine series applies to beta = alpha/2 only"));
        }
        let half = 0.5 * self.alpha;
        let mut sum = 0.0;
        let mut comp = 0.0;
        let last;
        if tau < 1.0 {
            // (tau^(a/2-1)/pi) sum sin(pi a/2 (k+1)) (-tau^(a/2))^k
            let w = -tau.powf(half);
            let mut p = 1.0;
            for k in 0..400 {
                let term = crate::gammafn::sin_pi(half * (k as f64 + 1.0)) * p;
                crate::specfun::sum::kahan(&mut sum, &mut comp, term);
                p *= w;
            }
            last = p.abs();
            let v = tau.powf(half - 1.0) / std::f64::consts::PI * sum;
            let env = tau.powf(half - 1.0) / std::f64::consts::PI * last / (1.0 - w.abs());
            Ok(EvalResult::new(v, env + 1e-15 * v.abs(), 400, Method::Series))
        } else if tau > 1.0 {
            // -(tau^(-1)/pi) sum sin(pi a/2 k) (-tau^(-a/2))^k
            let w = -tau.powf(-half);
            let mut p = 1.0;
            for k in 0..400 {
                let term = crate::gammafn::sin_pi(half * k as f64) * p;
                crate::specfun::sum::kahan(&mut sum, &mut comp, term);
                p *= w;
            }
            last = p.abs();
            let v = -sum / (tau * std::f64::consts::PI);
            let env = last / (1.0 - w.abs()) / (tau * std::f64::consts::PI);
            Ok(EvalResult::new(v, env + 1e-15 * v.abs(), 400, Method::Series))
        } else {
            Err(Error::domain("the sine series do not converge at tau = 1"))
        }
    }

    /// integral_tau0^inf Phi(tau) dtau via the integrated descending series,
    /// summed to its smallest term; `None` when the family is absent
    /// (alpha = 2, exponential tail).  Requires tau0 > 1.
    pub fn tail_mass(&self, tau0: f64) -> Option<(f64, f64)> {
        debug_assert!(tau0 > 1.0);
        let descending = self.descending.as_ref()?;
        let ln_tau = tau0.ln();
        let mut sum = 0.0;
        let mut comp = 0.0;
        let mut lastmag = f64::INFINITY;
        let mut ratio = 1.0;
        let mut omitted = 0.0;
        for t in &descending.terms {
            if t.coeff == 0.0 {
                continue;
            }
            if t.exponent >= -1.0 {
                continue; // non-integrable residue cannot appear; guard anyway
            }
            let term = t.coeff * ((t.exponent + 1.0) * ln_tau).exp() / (-(t.exponent + 1.0));
            let mag = term.abs();
            if mag >= lastmag {
                omitted = mag;
                break;
            }
            ratio = mag / lastmag;
            crate::specfun::sum::kahan(&mut sum, &mut comp, term);
            lastmag = mag;
        }
        if omitted == 0.0 {
            omitted = if ratio < 1.0 { lastmag * ratio / (1.0 - ratio).max(1e-6) } else { lastmag };
        }
        // the first omitted term tracks the true remainder only to leading order
        Some((sum, 2.0 * omitted + 1e-15 * sum.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_case_values() {
        // alpha = 1, beta = 1/2: Phi(tau) = 1/(pi sqrt(tau)(1+tau))
        let k = PhiKernel::new(1.0, 0.5).unwrap();
        for &tau in &[0.1, 0.5, 1.0, 2.0, 10.0] {
            let r = k.eval(tau).unwrap();
            let expect = 1.0 / (std::f64::consts::PI * tau.sqrt() * (1.0 + tau));
            assert!(
                (r.value - expect).abs() <= 1e-12 * expect,
                "tau={tau}: {} vs {expect}",
                r.value
            );
        }
        let r = k.eval(1.0).unwrap();
        assert!((r.value - 1.0 / (2.0 * std::f64::consts::PI)).abs() < 1e-12);
    }

    #[test]
    fn boundary_sine_series_matches_closed_form() {
        for &alpha in &[0.8, 1.0, 1.4] {
            let k = PhiKernel::new(alpha, alpha / 2.0).unwrap();
            for &tau in &[0.2, 0.5, 0.9, 1.1, 2.0, 10.0] {
                let series = k.boundary_sine_series(tau).unwrap();
                let closed = k.eval(tau).unwrap();
                assert!(
                    (series.value - closed.value).abs() <= series.abs_err + 1e-12,
                    "alpha={alpha} tau={tau}: {} vs {} (err {})",
                    series.value,
                    closed.value,
                    series.abs_err
                );
            }
        }
    }

    #[test]
    fn ascending_case_matches_quadrature() {
        let k = PhiKernel::new(2.0, 0.6, ).unwrap();
        for &tau in &[0.2, 1.0, 3.0, 8.0] {
            let r = k.eval(tau).unwrap();
            let q = mbquad::inverse_mellin_auto(&k.symbol, tau, 1e-11).unwrap();
            assert!(
                (r.value - q.value).abs() <= 2.0 * (r.abs_err + q.abs_err) + 1e-11 * q.value.abs(),
                "tau={tau}: {} ({:?}) vs {}",
                r.value,
                r.method,
                q.value
            );
        }
    }

    #[test]
    fn descending_case_matches_quadrature() {
        let k = PhiKernel::new(1.5, 0.9).unwrap();
        for &tau in &[0.15, 0.5, 1.0, 4.0, 20.0] {
            let r = k.eval(tau).unwrap();
            let q = mbquad::inverse_mellin_auto(&k.symbol, tau, 1e-11).unwrap();
            assert!(
                (r.value - q.value).abs() <= 2.0 * (r.abs_err + q.abs_err) + 1e-10 * q.value.abs(),
                "tau={tau}: {} ({:?}) vs {}",
                r.value,
                r.method,
                q.value
            );
        }
    }

    #[test]
    fn remark_five_reduction_to_wright() {
        // alpha = 2: Phi_{2,beta}(tau) = W_{1-beta,-beta}(-tau)
        let k = PhiKernel::new(2.0, 0.6).unwrap();
        let w = crate::specfun::WrightOrder::new(0.4, -0.6).unwrap();
        for &tau in &[0.3, 1.0, 2.5] {
            let a = k.eval(tau).unwrap();
            let b = crate::specfun::wright_eval(&w, -tau).unwrap();
            assert!((a.value - b.value).abs() <= a.abs_err + b.abs_err + 1e-12);
        }
    }

    #[test]
    fn tail_mass_matches_direct_quadrature() {
        let k = PhiKernel::new(1.2, 0.5).unwrap();
        let (t6, e6) = k.tail_mass(6.0).unwrap();
        let (t60, e60) = k.tail_mass(60.0).unwrap();
        let mut f = |tau: f64| {
            let r = k.eval(tau).unwrap();
            (r.value, r.abs_err)
        };
        let (direct, derr) = crate::quad::adaptive(&mut f, 6.0, 60.0, 1e-11);
        assert!(
            ((t6 - t60) - direct).abs() <= e6 + e60 + derr + 1e-9,
            "{} vs {direct}",
            t6 - t60
        );
        // alpha = 2 has no algebraic tail
        assert!(PhiKernel::new(2.0, 0.6).unwrap().tail_mass(4.0).is_none());
    }
}
