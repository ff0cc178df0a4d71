//! Subordination kernels and the subordination-integral evaluator.
//!
//! A subordination formula writes one fundamental solution as a probability
//! mixture of another:
//!
//!     G_{alpha,beta,n}(x,t) = integral_0^inf D(s|t) G_base(x,s) ds,
//!
//! where the density D is, depending on the pair of solutions:
//! - the Wright-ratio kernel t^(-g) W_{1-g,-g}(-s t^(-g)), g = beta/delta;
//! - the Gaussian-base kernel Phi_{alpha,beta} (three series/closed cases);
//! - the general (alpha, beta, delta, n) kernel;
//! - or, for verification only, the Wright pdf Gamma(b) W_{b-a,-a}(-t).

mod phi;

pub use phi::PhiKernel;

use crate::eval::{Error, EvalResult, Method, Result};
use crate::gammafn::gamma;
use crate::greens::{g_2d_alpha, g_gaussian, g_space_frac, RadialPoint};
use crate::quad;
use crate::specfun::{ml_eval, wright_eval, MittagLefflerOrder, WrightOrder};

/// The subordination kernel families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    /// t^(-g) W_{1-g,-g}(-s t^(-g)) with g = beta/delta in (0,1): connects
    /// time orders beta and delta at fixed spatial order.
    WrightRatio { gamma_ratio: f64 },
    /// The kernel of the Gaussian-base subordination formula,
    /// 0 < beta <= 1, 0 < alpha <= 2, 2 beta + alpha < 4.
    TheoremPhi { alpha: f64, beta: f64 },
    /// (alpha/delta) tau^(alpha/delta - n) W_{1-b/d,-b/d}(-tau^(alpha/delta)),
    /// 0 < beta < delta <= 2: the Mellin-convolution form of the general
    /// time-order kernel.
    GeneralPhi { alpha: f64, beta: f64, delta: f64, n: u32 },
    /// Gamma(beta) W_{beta-alpha,-alpha}(-t): a pdf for 0 < alpha < 1,
    /// beta >= alpha (verification kernel; not a subordination pair).
    ExampleOnePdf { alpha: f64, beta: f64 },
}

impl KernelSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            KernelSpec::WrightRatio { gamma_ratio } => {
                if !(gamma_ratio > 0.0 && gamma_ratio < 1.0) {
                    return Err(Error::domain("Wright-ratio kernel requires 0 < gamma < 1"));
                }
            }
            KernelSpec::TheoremPhi { alpha, beta } => {
                if !(alpha > 0.0 && alpha <= 2.0 && beta > 0.0 && beta <= 1.0
                    && 2.0 * beta + alpha < 4.0)
                {
                    return Err(Error::domain(
                        "Phi kernel requires 0 < alpha <= 2, 0 < beta <= 1, 2 beta + alpha < 4",
                    ));
                }
            }
            KernelSpec::GeneralPhi { alpha, beta, delta, n } => {
                if !(alpha > 0.0 && alpha <= 2.0 && beta > 0.0 && beta < delta && delta <= 2.0 && n >= 1)
                {
                    return Err(Error::domain(
                        "general kernel requires 0 < beta < delta <= 2 and n >= 1",
                    ));
                }
            }
            KernelSpec::ExampleOnePdf { alpha, beta } => {
                if !(alpha > 0.0 && alpha < 1.0 && beta >= alpha) {
                    return Err(Error::domain(
                        "Example-1 pdf requires 0 < alpha < 1 and beta >= alpha",
                    ));
                }
            }
        }
        Ok(())
    }
}

/// t^(-g) W_{1-g,-g}(-s t^(-g)): the classical time-subordination density.
pub fn kernel_wright(gamma_ratio: f64, s: f64, t: f64) -> Result<EvalResult> {
    KernelSpec::WrightRatio { gamma_ratio }.validate()?;
    if !(s > 0.0 && t > 0.0) {
        return Err(Error::domain("kernel_wright requires s > 0, t > 0"));
    }
    let c = t.powf(-gamma_ratio);
    let order = WrightOrder::new(1.0 - gamma_ratio, -gamma_ratio)?;
    scale_result(wright_eval(&order, -s * c), c)
}

/// Theorem-1 kernel Phi_{alpha,beta}(tau).
pub fn kernel_phi(alpha: f64, beta: f64, tau: f64) -> Result<EvalResult> {
    PhiKernel::new(alpha, beta)?.eval(tau)
}

/// General-order kernel in its Mellin-convolution form:
/// (alpha/delta) tau^(alpha/delta - n) W_{1-b/d,-b/d}(-tau^(alpha/delta)).
pub fn kernel_general(alpha: f64, beta: f64, delta: f64, n: u32, tau: f64) -> Result<EvalResult> {
    KernelSpec::GeneralPhi { alpha, beta, delta, n }.validate()?;
    if !(tau > 0.0) {
        return Err(Error::domain("kernel_general requires tau > 0"));
    }
    let g = beta / delta;
    let order = WrightOrder::new(1.0 - g, -g)?;
    let c = (alpha / delta) * tau.powf(alpha / delta - n as f64);
    scale_result(wright_eval(&order, -tau.powf(alpha / delta)), c)
}

/// Example-1 pdf Gamma(beta) W_{beta-alpha,-alpha}(-t).
pub fn kernel_example1(alpha: f64, beta: f64, t: f64) -> Result<EvalResult> {
    KernelSpec::ExampleOnePdf { alpha, beta }.validate()?;
    if !(t > 0.0) {
        return Err(Error::domain("kernel_example1 requires t > 0"));
    }
    let order = WrightOrder::new(beta - alpha, -alpha)?;
    scale_result(wright_eval(&order, -t), gamma(beta))
}

pub(crate) fn scale_result(r: Result<EvalResult>, c: f64) -> Result<EvalResult> {
    let scale = |e: EvalResult| EvalResult::new(c * e.value, c.abs() * e.abs_err, e.terms_used, e.method);
    match r {
        Ok(e) => Ok(scale(e)),
        Err(Error::NonConvergence { best, context }) => {
            Err(Error::NonConvergence { best: scale(best), context })
        }
        Err(e) => Err(e),
    }
}

/// A kernel instance with its per-parameter state (compiled series, cached
/// contour) ready for repeated density evaluations.
pub struct Kernel {
    spec: KernelSpec,
    phi: Option<PhiKernel>,
}

impl Kernel {
    pub fn new(spec: KernelSpec) -> Result<Self> {
        spec.validate()?;
        let phi = match spec {
            KernelSpec::TheoremPhi { alpha, beta } => Some(PhiKernel::new(alpha, beta)?),
            _ => None,
        };
        Ok(Kernel { spec, phi })
    }

    pub fn spec(&self) -> &KernelSpec {
        &self.spec
    }

    /// Kernel density D(s | t).
    pub fn density(&self, s: f64, t: f64) -> Result<EvalResult> {
        if !(s > 0.0) {
            return Err(Error::domain("kernel density requires s > 0"));
        }
        match self.spec {
            KernelSpec::WrightRatio { gamma_ratio } => kernel_wright(gamma_ratio, s, t),
            KernelSpec::TheoremPhi { alpha, beta } => {
                let c = t.powf(-2.0 * beta / alpha);
                scale_result(self.phi.as_ref().unwrap().eval(s * c), c)
            }
            KernelSpec::GeneralPhi { alpha, beta, delta, n } => {
                // change of variables tau = (s t^(-b/d))^(d/a) maps the
                // convolution form onto a density in s
                let tau = (s * t.powf(-beta / delta)).powf(delta / alpha);
                let c = t.powf(-beta * n as f64 / alpha)
                    * s.powf(delta * n as f64 / alpha - 1.0)
                    * (delta / alpha);
                scale_result(kernel_general(alpha, beta, delta, n, tau), c)
            }
            KernelSpec::ExampleOnePdf { alpha, beta } => kernel_example1(alpha, beta, s),
        }
    }

    /// Characteristic s-scale of the density at time t.
    fn scale(&self, t: f64) -> f64 {
        match self.spec {
            KernelSpec::WrightRatio { gamma_ratio } => t.powf(gamma_ratio),
            KernelSpec::TheoremPhi { alpha, beta } => t.powf(2.0 * beta / alpha),
            KernelSpec::GeneralPhi { beta, delta, .. } => t.powf(beta / delta),
            KernelSpec::ExampleOnePdf { .. } => 1.0,
        }
    }

    /// Exponent p of the endpoint substitution s = u^p absorbing the
    /// s -> 0 singularity of the density.
    fn endpoint_power(&self) -> f64 {
        match self.spec {
            KernelSpec::TheoremPhi { alpha, .. } => (2.0 / alpha).max(1.0),
            _ => 1.0,
        }
    }
}

/// Base solutions a kernel can subordinate over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BaseSolution {
    /// G_{2,1,n}: the heat kernel.
    Gaussian { n: u32 },
    /// G_{alpha,1,n}: space-fractional diffusion.
    SpaceFractional { alpha: f64, n: u32 },
    /// G_{alpha,alpha/2,2}: the two-dimensional alpha-fractional solution.
    TwoDimAlpha { alpha: f64 },
}

impl BaseSolution {
    /// (alpha, beta, n) of the base solution.
    pub fn orders(&self) -> (f64, f64, u32) {
        match *self {
            BaseSolution::Gaussian { n } => (2.0, 1.0, n),
            BaseSolution::SpaceFractional { alpha, n } => (alpha, 1.0, n),
            BaseSolution::TwoDimAlpha { alpha } => (alpha, alpha / 2.0, 2),
        }
    }

    pub fn eval(&self, r: f64, s: f64) -> Result<EvalResult> {
        let pt = RadialPoint::new(r, s)?;
        match *self {
            BaseSolution::Gaussian { n } => Ok(g_gaussian(n, &pt)),
            BaseSolution::SpaceFractional { alpha, n } => g_space_frac(alpha, n, &pt),
            BaseSolution::TwoDimAlpha { alpha } => g_2d_alpha(alpha, &pt),
        }
    }
}

/// Orders (alpha, beta, n) of the subordinated solution, or the reason the
/// pair is invalid.
pub fn target_orders(kernel: &KernelSpec, base: &BaseSolution) -> Result<(f64, f64, u32)> {
    kernel.validate()?;
    let (ba, bb, bn) = base.orders();
    match *kernel {
        KernelSpec::WrightRatio { gamma_ratio } => Ok((ba, gamma_ratio * bb, bn)),
        KernelSpec::TheoremPhi { alpha, beta } => {
            if matches!(base, BaseSolution::Gaussian { .. }) {
                Ok((alpha, beta, bn))
            } else {
                Err(Error::IncompatiblePair(
                    "the Phi kernel subordinates over the Gaussian only".into(),
                ))
            }
        }
        KernelSpec::GeneralPhi { alpha, beta, delta, n } => {
            if (ba - alpha).abs() <= 1e-12 && (bb - delta).abs() <= 1e-12 && bn == n {
                Ok((alpha, beta, n))
            } else {
                Err(Error::IncompatiblePair(format!(
                    "general kernel (alpha={alpha}, delta={delta}, n={n}) needs the matching base"
                )))
            }
        }
        KernelSpec::ExampleOnePdf { .. } => Err(Error::IncompatiblePair(
            "the Example-1 pdf is a verification kernel, not a subordination pair".into(),
        )),
    }
}

/// Evaluate the subordination integral
/// integral_0^inf D(s|t) base(r, s) ds to absolute tolerance `tol`.
pub fn subordinate(
    kernel: &KernelSpec,
    base: &BaseSolution,
    pt: &RadialPoint,
    tol: f64,
) -> Result<EvalResult> {
    target_orders(kernel, base)?;
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::domain("tol must lie in (0, 1)"));
    }
    if !(pt.r > 0.0) {
        return Err(Error::domain("subordinate requires r > 0"));
    }
    let k = Kernel::new(*kernel)?;
    let t = pt.t;

    let mut f = |s: f64| -> (f64, f64) {
        if s <= 0.0 {
            return (0.0, 0.0);
        }
        let d = match k.density(s, t) {
            Ok(d) => d,
            Err(e) => match e.best_estimate() {
                Some(b) if b.abs_err <= 1e-8 => b,
                // past the precision horizon of the kernel series the pdf
                // tail is already far below every tolerance in use
                _ => return (0.0, 1e-12),
            },
        };
        let b = match base.eval(pt.r, s) {
            Ok(b) => b,
            Err(e) => match e.best_estimate() {
                Some(b) if b.abs_err <= 1e-8 => b,
                _ => return (0.0, 1e-12),
            },
        };
        let v = d.value * b.value;
        let e = d.abs_err * b.value.abs() + b.abs_err * d.value.abs() + d.abs_err * b.abs_err;
        (v, e)
    };

    let mode = density_mode(&k, t);
    // head [0, mode] under s = u^p
    let p = k.endpoint_power();
    let u_hi = mode.powf(1.0 / p);
    let mut head = |u: f64| -> (f64, f64) {
        let s = u.powf(p);
        let (v, e) = f(s);
        let jac = p * u.powf(p - 1.0);
        (v * jac, e * jac)
    };
    let (head_v, head_e) = quad::adaptive(&mut head, 0.0, u_hi, 0.3 * tol);
    // tail [mode, inf)
    let (tail_v, tail_e) = quad::adaptive_to_infinity(&mut f, mode, mode, 0.35 * tol);

    let value = head_v + tail_v;
    let abs_err = head_e + tail_e;
    let r = EvalResult::new(value, abs_err, 0, Method::Quadrature);
    if abs_err.is_finite() && abs_err <= tol.max(tol * value.abs()) {
        Ok(r)
    } else {
        Err(Error::NonConvergence { best: r, context: "subordination integral".into() })
    }
}

/// Locate the density mode by coarse log scan plus golden-section refinement.
fn density_mode(k: &Kernel, t: f64) -> f64 {
    let scale = k.scale(t);
    // maximize s*D(s): the mass density per log-s octave, which stays
    // bounded across the integrable s -> 0 singularities of the Phi kernel
    let val = |s: f64| -> f64 {
        s * k.density(s, t).map(|d| d.value).unwrap_or(0.0)
    };
    let mut best = scale;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..=48 {
        let s = scale * 10f64.powf(-4.0 + 8.0 * i as f64 / 48.0);
        let v = val(s);
        if v > best_v {
            best_v = v;
            best = s;
        }
    }
    // golden section on [best/5, best*5]
    let gr = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (best / 5.0, best * 5.0);
    let (mut c, mut d) = (b - gr * (b - a), a + gr * (b - a));
    let (mut fc, mut fd) = (val(c), val(d));
    for _ in 0..40 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = val(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = val(d);
        }
    }
    0.5 * (a + b)
}

/// pdf verification report: total mass and the most negative sampled value.
#[derive(Debug, Clone, Copy)]
pub struct PdfReport {
    pub mass: f64,
    pub mass_abs_err: f64,
    /// minimum of the density over a 200-point log grid around the mode
    pub min_sampled: f64,
    pub samples: usize,
}

/// Quadrature of the kernel density over (0, inf) plus a sampled minimum.
pub fn pdf_verify(kernel: &KernelSpec, t: f64) -> Result<PdfReport> {
    kernel.validate()?;
    let k = Kernel::new(*kernel)?;
    let mode = density_mode(&k, t);
    let mut f = |s: f64| -> (f64, f64) {
        if s <= 0.0 {
            return (0.0, 0.0);
        }
        match k.density(s, t) {
            Ok(d) => (d.value, d.abs_err),
            Err(e) => match e.best_estimate() {
                Some(b) if b.abs_err <= 1e-8 => (b.value, b.abs_err),
                _ => (0.0, 1e-12), // past the kernel's precision horizon
            },
        }
    };
    let p = k.endpoint_power();
    let u_hi = mode.powf(1.0 / p);
    let mut head = |u: f64| -> (f64, f64) {
        let s = u.powf(p);
        let (v, e) = f(s);
        let jac = p * u.powf(p - 1.0);
        (v * jac, e * jac)
    };
    let (head_v, head_e) = quad::adaptive(&mut head, 0.0, u_hi, 3e-10);
    let (mut mass, mut mass_err) = (head_v, head_e);
    match (&k.spec, &k.phi) {
        (KernelSpec::TheoremPhi { alpha, beta }, Some(phi)) => {
            // numeric out to tau0, then the integrated descending series
            // (alpha = 2 has an exponential tail and no descending family)
            let c = t.powf(-2.0 * beta / alpha);
            // push the series tail start out until its truncation is clean
            let mut tau0 = (mode * c).max(1.0) * 8.0;
            while tau0 < 5000.0 {
                match phi.tail_mass(tau0) {
                    Some((_, te)) if te > 1e-10 => tau0 *= 2.0,
                    _ => break,
                }
            }
            match phi.tail_mass(tau0) {
                Some((tv, te)) => {
                    let mut ftau = |tau: f64| -> (f64, f64) {
                        match phi.eval(tau) {
                            Ok(d) => (d.value, d.abs_err),
                            Err(e) => match e.best_estimate() {
                                Some(b) if b.abs_err <= 1e-8 => (b.value, b.abs_err),
                                _ => (0.0, 1e-12),
                            },
                        }
                    };
                    let (v, e) = quad::adaptive(&mut ftau, mode * c, tau0, 3e-10);
                    mass += v + tv;
                    mass_err += e + te;
                }
                None => {
                    let (v, e) = quad::adaptive_to_infinity(&mut f, mode, mode, 3e-10);
                    mass += v;
                    mass_err += e;
                }
            }
        }
        _ => {
            let (v, e) = quad::adaptive_to_infinity(&mut f, mode, mode, 3e-10);
            mass += v;
            mass_err += e;
        }
    }

    // sampled minimum over a log grid around the mode, where the density is
    // resolvable above 1e-11 absolute
    let mut min_sampled = f64::INFINITY;
    let mut samples = 0usize;
    let mut hi = mode;
    for _ in 0..60 {
        let (v, e) = f(hi * 2.0);
        if !e.is_finite() || e > 1e-11 || (v.abs() < 1e-13 && samples > 0) {
            break;
        }
        hi *= 2.0;
        samples += 1;
    }
    let lo = mode * 1e-2;
    let mut count = 0usize;
    for i in 0..200 {
        let s = lo * (hi / lo).powf(i as f64 / 199.0);
        let (v, e) = f(s);
        if e.is_finite() && e <= 1e-10 {
            min_sampled = min_sampled.min(v);
            count += 1;
        }
    }
    Ok(PdfReport { mass, mass_abs_err: mass_err, min_sampled, samples: count })
}

/// Check the Laplace identity
/// integral Phi_{alpha,beta}(tau) e^(-lambda tau) dtau = E_beta(-lambda^(alpha/2));
/// returns the maximum relative error over the given lambda values.
pub fn laplace_verify(alpha: f64, beta: f64, lambdas: &[f64]) -> Result<f64> {
    let phi = PhiKernel::new(alpha, beta)?;
    let order = MittagLefflerOrder::one_param(beta)?;
    let mut worst: f64 = 0.0;
    for &lam in lambdas {
        if !(lam > 0.0) {
            return Err(Error::domain("laplace_verify requires positive lambda"));
        }
        let mut f = |tau: f64| -> (f64, f64) {
            if tau <= 0.0 {
                return (0.0, 0.0);
            }
            let w = (-lam * tau).exp();
            match phi.eval(tau) {
                Ok(d) => (w * d.value, w * d.abs_err),
                Err(e) => match e.best_estimate() {
                    Some(b) if b.abs_err <= 1e-8 => (w * b.value, w * b.abs_err),
                    _ => (0.0, 1e-12),
                },
            }
        };
        let p = (2.0 / alpha).max(1.0);
        let mut head = |u: f64| -> (f64, f64) {
            let tau = u.powf(p);
            let (v, e) = f(tau);
            let jac = p * u.powf(p - 1.0);
            (v * jac, e * jac)
        };
        let (hv, he) = quad::adaptive(&mut head, 0.0, 1.0, 1e-10);
        let (tv, te) = quad::adaptive_to_infinity(&mut f, 1.0, 1.0, 1e-10);
        let lhs = hv + tv;
        let rhs = ml_eval(&order, -lam.powf(alpha / 2.0))?;
        let rel = (lhs - rhs.value).abs() / rhs.value.abs().max(1e-300);
        worst = worst.max(rel + (he + te) * 0.0);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests;
