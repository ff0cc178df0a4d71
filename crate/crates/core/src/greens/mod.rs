//! Evaluators for the fundamental solution G_{alpha,beta,n}(x,t) of the
//! space-time-fractional diffusion-wave equation, along independent routes:
//!
//! - [`g_eval`]: dispatch to closed forms where they exist, otherwise the
//!   residue series compiled from the Mellin-Barnes kernel symbol, with
//!   contour quadrature as the fallback;
//! - [`g_gaussian`], [`g_space_frac`], [`g_2d_alpha`]: the closed and
//!   special-function forms;
//! - [`g_origin`]: the exact origin value for n < alpha;
//! - [`g_hankel_oracle`]: the oscillatory radial-Fourier integral, an
//!   independent oracle for everything else;
//! - [`fourier_symbol`]: the Fourier-domain solution E_beta(-|k|^alpha t^beta).
//!
//! Everything is a pure function of its arguments; grid evaluations can run
//! concurrently without restriction.

mod hankel;

pub use hankel::g_hankel_oracle;

use crate::eval::{Error, EvalResult, Method, Result};
use crate::gammafn::{ln_gamma, signed_ln_gamma};
use crate::mellin::{self, Side};
use crate::mbquad;
use crate::specfun::{
    gen_wright_eval, ml_eval, GenWrightParams, MittagLefflerOrder,
};

/// Orders (alpha, beta) and dimension n of a fundamental solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FDWParams {
    pub alpha: f64,
    pub beta: f64,
    pub n: u32,
}

impl FDWParams {
    pub fn new(alpha: f64, beta: f64, n: u32) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(Error::domain("alpha must lie in (0, 2]"));
        }
        if !(beta > 0.0 && beta <= 2.0) {
            return Err(Error::domain("beta must lie in (0, 2]"));
        }
        if n < 1 {
            return Err(Error::domain("dimension n must be >= 1"));
        }
        Ok(FDWParams { alpha, beta, n })
    }
}

/// A radial space-time point (|x|, t), t > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPoint {
    pub r: f64,
    pub t: f64,
}

impl RadialPoint {
    pub fn new(r: f64, t: f64) -> Result<Self> {
        if !(t > 0.0) {
            return Err(Error::domain("t must be positive"));
        }
        if !(r >= 0.0) {
            return Err(Error::domain("r must be non-negative"));
        }
        Ok(RadialPoint { r, t })
    }

    /// Similarity variable z = r / (2 t^(beta/alpha)).
    pub fn similarity(&self, p: &FDWParams) -> f64 {
        self.r / (2.0 * self.t.powf(p.beta / p.alpha))
    }
}

/// G_{2,1,n}: the Gaussian heat kernel (4 pi t)^(-n/2) exp(-r^2/(4t)).
pub fn g_gaussian(n: u32, pt: &RadialPoint) -> EvalResult {
    let nf = n as f64;
    let ln = -0.5 * nf * (4.0 * std::f64::consts::PI * pt.t).ln() - pt.r * pt.r / (4.0 * pt.t);
    let v = ln.exp();
    EvalResult::new(v, 8.0 * f64::EPSILON * v, 0, Method::ClosedForm)
}

/// Similarity prefactor of the Mellin-Barnes representation:
/// (1/alpha) t^(-beta n / alpha) (4 pi)^(-n/2).
fn mb_prefactor(p: &FDWParams, t: f64) -> f64 {
    (1.0 / p.alpha)
        * t.powf(-p.beta * p.n as f64 / p.alpha)
        * (4.0 * std::f64::consts::PI).powf(-0.5 * p.n as f64)
}

/// G_{alpha,1,n}: the space-fractional diffusion solution, primarily through
/// the generalized Wright series; outside its reach (alpha <= 1, or heavy
/// cancellation at large similarity variable) the descending residue series
/// and contour quadrature take over.
pub fn g_space_frac(alpha: f64, n: u32, pt: &RadialPoint) -> Result<EvalResult> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(Error::domain("g_space_frac requires 0 < alpha <= 2"));
    }
    let nf = n as f64;
    let p = FDWParams { alpha, beta: 1.0, n };
    let pre = mb_prefactor(&p, pt.t);
    let z = pt.similarity(&p);
    let scale = pre.max(f64::MIN_POSITIVE);
    let target = |v: f64| 1e-9 * v.abs().max(scale);

    // ascending route: (2/a) t^(-n/a) (4pi)^(-n/2) 1Psi1[(n/a,2/a);(n/2,1)](-z^2)
    if let Ok(params) = GenWrightParams::new(vec![(nf / alpha, 2.0 / alpha)], vec![(nf / 2.0, 1.0)]) {
        match gen_wright_eval(&params, -z * z) {
            Ok(r) if 2.0 * pre * r.abs_err <= target(2.0 * pre * r.value) => {
                return Ok(EvalResult::new(
                    2.0 * pre * r.value,
                    2.0 * pre * r.abs_err,
                    r.terms_used,
                    r.method,
                ));
            }
            _ => {}
        }
    }
    // descending route: right residue series of K_{alpha,1,n} in z
    let sym = mellin::k_space_symbol(alpha, n)?;
    if z > 0.0 {
        if let Ok(rep) = mellin::residue_series(&sym, Side::Right) {
            if let Ok(r) = rep.eval(z) {
                if pre * r.abs_err <= target(pre * r.value) {
                    return Ok(EvalResult::new(pre * r.value, pre * r.abs_err, r.terms_used, r.method));
                }
            }
            let r = rep.eval_min_term(z);
            if pre * r.abs_err <= target(pre * r.value) {
                return Ok(EvalResult::new(pre * r.value, pre * r.abs_err, r.terms_used, r.method));
            }
        }
        let q = mbquad::inverse_mellin_auto(&sym, z, 1e-10)?;
        return Ok(EvalResult::new(pre * q.value, pre * q.abs_err, q.terms_used, q.method));
    }
    // z = 0: origin of the beta = 1 solution
    g_origin(&p, pt.t)
}

/// G_{alpha,alpha/2,2}: the two-dimensional alpha-fractional closed form
/// (1/(4 pi t)) z^(alpha-2) E_{alpha/2,alpha/2}(-z^alpha), z = r/(2 sqrt t).
pub fn g_2d_alpha(alpha: f64, pt: &RadialPoint) -> Result<EvalResult> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::domain("g_2d_alpha requires 0 < alpha < 2"));
    }
    if pt.r == 0.0 {
        return Err(Error::domain("g_2d_alpha is singular at r = 0"));
    }
    let z = pt.r / (2.0 * pt.t.sqrt());
    let order = MittagLefflerOrder::new(alpha / 2.0, alpha / 2.0)?;
    let ml = ml_eval(&order, -z.powf(alpha))?;
    let c = z.powf(alpha - 2.0) / (4.0 * std::f64::consts::PI * pt.t);
    Ok(EvalResult::new(c * ml.value, c * ml.abs_err, ml.terms_used, ml.method))
}

/// Exact origin value for n < alpha:
/// G(0,t) = t^(-bn/a) (2 pi^(n/2) / Gamma(n/2)) (2 pi)^(-n) (1/a)
///          Gamma(n/a) Gamma(1-n/a) / Gamma(1-bn/a).
pub fn g_origin(p: &FDWParams, t: f64) -> Result<EvalResult> {
    let nf = p.n as f64;
    if nf >= p.alpha {
        return Err(Error::SingularAtOrigin { n: p.n, alpha: p.alpha });
    }
    if p.beta == 2.0 && nf / p.alpha >= 0.5 {
        // the Mellin strip of E_2 closes at 1/2: the radial integral diverges
        return Err(Error::domain("origin value for beta = 2 requires n < alpha/2"));
    }
    let ratio = nf / p.alpha;
    let (s1, l1) = signed_ln_gamma(ratio).ok_or(Error::Pole { at: ratio })?;
    let (s2, l2) = signed_ln_gamma(1.0 - ratio).ok_or(Error::Pole { at: 1.0 - ratio })?;
    let (s3, l3) =
        signed_ln_gamma(1.0 - p.beta * ratio).ok_or(Error::Pole { at: 1.0 - p.beta * ratio })?;
    let ln = -p.beta * nf / p.alpha * t.ln()
        + (2.0f64).ln()
        + 0.5 * nf * std::f64::consts::PI.ln()
        - ln_gamma(nf / 2.0)
        - nf * (2.0 * std::f64::consts::PI).ln()
        - p.alpha.ln()
        + l1
        + l2
        - l3;
    let v = s1 * s2 * s3 * ln.exp();
    Ok(EvalResult::new(v, 1e-13 * v.abs(), 0, Method::ClosedForm))
}

/// Fourier-domain solution E_beta(-k^alpha t^beta) at radial wavenumber k.
pub fn fourier_symbol(p: &FDWParams, k: f64, t: f64) -> Result<EvalResult> {
    if !(k >= 0.0 && t > 0.0) {
        return Err(Error::domain("fourier_symbol requires k >= 0, t > 0"));
    }
    let order = MittagLefflerOrder::one_param(p.beta)?;
    ml_eval(&order, -k.powf(p.alpha) * t.powf(p.beta))
}

/// G_{alpha,beta,n}(r, t): closed forms where available, else the compiled
/// residue series of the kernel symbol, else contour quadrature.
pub fn g_eval(p: &FDWParams, pt: &RadialPoint, tol: f64) -> Result<EvalResult> {
    FDWParams::new(p.alpha, p.beta, p.n)?;
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::domain("tol must lie in (0, 1)"));
    }
    if pt.r == 0.0 {
        return g_origin(p, pt.t);
    }
    if p.alpha == 2.0 && p.beta == 1.0 {
        return Ok(g_gaussian(p.n, pt));
    }
    if p.beta == 1.0 {
        match g_space_frac(p.alpha, p.n, pt) {
            Ok(r) => return Ok(r),
            Err(_) => {} // fall through to the generic routes
        }
    }
    if p.n == 2 && p.beta == p.alpha / 2.0 {
        match g_2d_alpha(p.alpha, pt) {
            Ok(r) => return Ok(r),
            Err(Error::Domain(d)) => return Err(Error::Domain(d)),
            Err(_) => {}
        }
    }
    generic_eval(p, pt, tol)
}

fn generic_eval(p: &FDWParams, pt: &RadialPoint, tol: f64) -> Result<EvalResult> {
    let sym = mellin::k_symbol(p.alpha, p.beta, p.n)?;
    let z = pt.similarity(p);
    let pre = mb_prefactor(p, pt.t);
    let gate = tol * pre.max(f64::MIN_POSITIVE);
    match mellin::residue_series(&sym, Side::Left) {
        Ok(rep) => match rep.eval(z) {
            Ok(r) if pre * r.abs_err <= gate.max(tol * (pre * r.value).abs()) => {
                return Ok(EvalResult::new(pre * r.value, pre * r.abs_err, r.terms_used, r.method));
            }
            _ => {}
        },
        Err(Error::DoublePole { .. }) | Err(Error::EmptyFamily) => {}
        Err(e) => return Err(e),
    }
    let q = mbquad::inverse_mellin_auto(&sym, z, tol)?;
    Ok(EvalResult::new(pre * q.value, pre * q.abs_err, q.terms_used, q.method))
}

/// Radial mass (2 pi^(n/2)/Gamma(n/2)) * integral of G r^(n-1) dr, which is
/// 1 for every pdf case.  The far tail decays like r^(-1-alpha) for
/// alpha < 2 and is integrated by a two-term algebraic fit.
pub fn radial_mass(p: &FDWParams, t: f64, tol: f64) -> Result<(f64, f64)> {
    let nf = p.n as f64;
    let surf = 2.0 * std::f64::consts::PI.powf(0.5 * nf) / ln_gamma(0.5 * nf).exp();
    let scale = 2.0 * t.powf(p.beta / p.alpha);
    let mut f = |r: f64| -> (f64, f64) {
        if r == 0.0 {
            return (0.0, 0.0);
        }
        match g_eval(p, &RadialPoint { r, t }, 1e-9) {
            Ok(g) => (g.value * r.powf(nf - 1.0), g.abs_err * r.powf(nf - 1.0)),
            Err(e) => match e.best_estimate() {
                Some(b) => (b.value * r.powf(nf - 1.0), b.abs_err * r.powf(nf - 1.0)),
                None => (f64::NAN, f64::NAN),
            },
        }
    };
    // bulk on [0, 8 * scale], then doubling panels
    let mut lo = 0.0;
    let mut hi = 8.0 * scale;
    let (mut acc, mut err) = crate::quad::adaptive(&mut f, lo, hi, tol * 0.1);
    for _ in 0..40 {
        lo = hi;
        hi *= 2.0;
        let (v, e) = crate::quad::adaptive(&mut f, lo, hi, tol * 0.05);
        acc += v;
        err += e;
        let (f1, e1) = f(hi / 2.0);
        let (f2, e2) = f(hi);
        if p.alpha < 2.0 && f1 > 0.0 && f2 > 0.0 {
            // fit f ~ c1 r^(-1-a) + c2 r^(-1-2a) at r = hi/2, hi
            let a = p.alpha;
            let x1 = (hi / 2.0).powf(-1.0 - a);
            let y1 = (hi / 2.0).powf(-1.0 - 2.0 * a);
            let x2 = hi.powf(-1.0 - a);
            let y2 = hi.powf(-1.0 - 2.0 * a);
            let det = x1 * y2 - x2 * y1;
            if det.abs() > 0.0 {
                let c1 = (f1 * y2 - f2 * y1) / det;
                let c2 = (x1 * f2 - x2 * f1) / det;
                let tail = c1 * hi.powf(-a) / a + c2 * hi.powf(-2.0 * a) / (2.0 * a);
                let tail_err = (e1 + e2) * hi / a + tail.abs() * hi.powf(-a);
                if tail_err < tol && tail.abs() < 0.2 {
                    return Ok((surf * (acc + tail), surf * (err + tail_err)));
                }
            }
        }
        if v.abs() < tol * 0.2 && f2.abs() * hi < tol * 0.2 {
            return Ok((surf * acc, surf * (err + v.abs())));
        }
    }
    Ok((surf * acc, surf * err + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(r: f64, t: f64) -> RadialPoint {
        RadialPoint::new(r, t).unwrap()
    }

    #[test]
    fn gaussian_values() {
        let g = g_gaussian(1, &pt(0.0, 1.0));
        assert!((g.value - 1.0 / (4.0 * std::f64::consts::PI).sqrt()).abs() < 1e-15);
        let g = g_gaussian(2, &pt(2.0, 1.0));
        let expect = (-1.0f64).exp() / (4.0 * std::f64::consts::PI);
        assert!((g.value - expect).abs() < 1e-15);
    }

    #[test]
    fn g_eval_gaussian_case() {
        let p = FDWParams::new(2.0, 1.0, 3).unwrap();
        let g = g_eval(&p, &pt(2.0, 1.0), 1e-10).unwrap();
        let expect = (-1.0f64).exp() / (4.0 * std::f64::consts::PI).powf(1.5);
        assert!((g.value - expect).abs() < 1e-14);
    }

    #[test]
    fn origin_closed_forms() {
        // alpha=2, beta=1, n=1: 1/(2 sqrt(pi)) = Gaussian at r=0
        let p = FDWParams::new(2.0, 1.0, 1).unwrap();
        let o = g_origin(&p, 1.0).unwrap();
        assert!((o.value - 0.28209479177387814).abs() < 1e-12);
        let g = g_gaussian(1, &pt(0.0, 1.0));
        assert!((o.value - g.value).abs() < 1e-13);
        // alpha=1.5, beta=0.75, n=1: (1/(1.5 pi)) G(2/3) G(1/3) / G(1/2)
        let p = FDWParams::new(1.5, 0.75, 1).unwrap();
        let o = g_origin(&p, 1.0).unwrap();
        let expect = 1.0 / (1.5 * std::f64::consts::PI) * crate::gammafn::gamma(2.0 / 3.0)
            * crate::gammafn::gamma(1.0 / 3.0)
            / crate::gammafn::gamma(0.5);
        assert!((o.value - expect).abs() < 1e-13 * expect);
        // n >= alpha is singular
        let p = FDWParams::new(1.5, 0.75, 2).unwrap();
        assert!(matches!(g_origin(&p, 1.0), Err(Error::SingularAtOrigin { .. })));
    }

    #[test]
    fn space_frac_reduces_to_gaussian_at_alpha_two() {
        for &r in &[0.1, 1.0, 3.0] {
            for &t in &[0.3, 1.0, 2.5] {
                let g = g_space_frac(2.0, 2, &pt(r, t)).unwrap();
                let expect = g_gaussian(2, &pt(r, t)).value;
                assert!(
                    (g.value - expect).abs() <= 1e-10 * expect.max(1e-12),
                    "r={r} t={t}: {} vs {expect}",
                    g.value
                );
            }
        }
    }

    /// alpha = 1, n = 1: the Cauchy/Poisson kernel t/(pi (t^2 + r^2)).
    #[test]
    fn space_frac_cauchy_case() {
        for &(r, t) in &[(0.5, 1.0), (2.0, 1.0), (10.0, 0.5), (0.1, 2.0)] {
            let g = g_space_frac(1.0, 1, &pt(r, t)).unwrap();
            let expect = t / (std::f64::consts::PI * (t * t + r * r));
            assert!(
                (g.value - expect).abs() <= 1e-8 * expect,
                "r={r} t={t}: {} vs {expect} ({:?})",
                g.value,
                g.method
            );
        }
    }

    #[test]
    fn series_and_quadrature_agree_generic() {
        // (1.5, 0.75, 2) at r=1, t=1: series route vs forced quadrature
        let p = FDWParams::new(1.5, 0.75, 2).unwrap();
        let point = pt(1.0, 1.0);
        let a = g_eval(&p, &point, 1e-9).unwrap();
        let sym = mellin::k_symbol(1.5, 0.75, 2).unwrap();
        let q = mbquad::inverse_mellin_auto(&sym, point.similarity(&p), 1e-10).unwrap();
        let pre = mb_prefactor(&p, 1.0);
        assert!(
            (a.value - pre * q.value).abs() <= 1e-8 * a.value.abs().max(1e-8),
            "{} vs {}",
            a.value,
            pre * q.value
        );
    }

    #[test]
    fn self_similarity_scaling() {
        let p = FDWParams::new(1.4, 0.65, 2).unwrap();
        let (r, t) = (1.3, 2.7);
        let a = g_eval(&p, &pt(r, t), 1e-9).unwrap();
        let s = t.powf(-p.beta * p.n as f64 / p.alpha);
        let b = g_eval(&p, &pt(r * t.powf(-p.beta / p.alpha), 1.0), 1e-9).unwrap();
        assert!(
            (a.value - s * b.value).abs() <= 2.0 * (a.abs_err + s * b.abs_err) + 1e-12,
            "{} vs {}",
            a.value,
            s * b.value
        );
    }

    #[test]
    fn two_dim_alpha_matches_generic_route() {
        // g_2d_alpha(1, r=2, t=1) vs the (1, 1/2, 2) series/quadrature route
        let point = pt(2.0, 1.0);
        let a = g_2d_alpha(1.0, &point).unwrap();
        let p = FDWParams::new(1.0, 0.5, 2).unwrap();
        let b = generic_eval(&p, &point, 1e-9).unwrap();
        assert!(
            (a.value - b.value).abs() <= 1e-7 * a.value.abs(),
            "{} vs {} ({:?})",
            a.value,
            b.value,
            b.method
        );
    }

    #[test]
    fn fourier_symbol_special_cases() {
        let p = FDWParams::new(2.0, 1.0, 1).unwrap();
        assert!((fourier_symbol(&p, 0.0, 1.0).unwrap().value - 1.0).abs() < 1e-15);
        let f = fourier_symbol(&p, 2.0, 0.7).unwrap();
        assert!((f.value - (-4.0f64 * 0.7).exp()).abs() < 1e-12);
        let p = FDWParams::new(2.0, 2.0, 1).unwrap();
        let f = fourier_symbol(&p, 3.0, 1.0).unwrap();
        assert!((f.value - 3.0f64.cos()).abs() < 1e-10);
    }

    #[test]
    fn radial_mass_is_one() {
        let p = FDWParams::new(1.5, 0.75, 1).unwrap();
        let (m, e) = radial_mass(&p, 1.0, 1e-7).unwrap();
        assert!((m - 1.0).abs() <= 1e-7 + e, "mass {m} err {e}");
    }
}
