//! Independent validation oracle: the radial Fourier inversion
//!
//!   G = r^(1-n/2) (2 pi)^(-n/2) * integral_0^inf E_beta(-tau^alpha t^beta)
//!       tau^(n/2) J_(n/2-1)(tau r) dtau,
//!
//! a conditionally convergent oscillatory integral for n < 2 alpha + 1.
//! It is integrated between consecutive Bessel zeros (15-point panels) and
//! the alternating partial sums are accelerated by the Euler transformation.

use super::{FDWParams, RadialPoint};
use crate::eval::{Error, EvalResult, Method, Result};
use crate::quad;
use crate::specfun::{bessel_j, ml_eval, MittagLefflerOrder};

const MAX_PANELS: usize = 220;
const EULER_DEPTH: usize = 12;

/// k-th positive zero of J_nu (1-based): exact for nu = +-1/2, otherwise
/// McMahon's expansion refined by Newton.
fn bessel_zero(nu: f64, k: usize) -> f64 {
    let kf = k as f64;
    if nu == 0.5 {
        return kf * std::f64::consts::PI;
    }
    if nu == -0.5 {
        return (kf - 0.5) * std::f64::consts::PI;
    }
    let mu = 4.0 * nu * nu;
    let b = (kf + 0.5 * nu - 0.25) * std::f64::consts::PI;
    let mut x = b - (mu - 1.0) / (8.0 * b);
    for _ in 0..8 {
        let j = bessel_j(nu, x).map(|r| r.value).unwrap_or(0.0);
        // J'_nu = (nu/x) J_nu - J_{nu+1}
        let jp = (nu / x) * j - bessel_j(nu + 1.0, x).map(|r| r.value).unwrap_or(0.0);
        if jp == 0.0 {
            break;
        }
        let dx = j / jp;
        x -= dx;
        if dx.abs() < 1e-14 * x {
            break;
        }
    }
    x
}

/// The oscillatory-integral route to G_{alpha,beta,n}(r, t).
pub fn g_hankel_oracle(p: &FDWParams, pt: &RadialPoint) -> Result<EvalResult> {
    let nf = p.n as f64;
    if nf >= 2.0 * p.alpha + 1.0 {
        return Err(Error::domain(
            "the radial Fourier integral requires n < 2 alpha + 1",
        ));
    }
    if pt.r <= 0.0 {
        return Err(Error::domain("hankel oracle requires r > 0"));
    }
    let nu = 0.5 * nf - 1.0;
    let order = MittagLefflerOrder::one_param(p.beta)?;
    let tb = pt.t.powf(p.beta);

    let mut integrand = |tau: f64| -> (f64, f64) {
        if tau == 0.0 {
            return (0.0, 0.0);
        }
        let ml = match ml_eval(&order, -tau.powf(p.alpha) * tb) {
            Ok(r) => r,
            Err(e) => match e.best_estimate() {
                Some(b) if b.abs_err.is_finite() => b,
                _ => return (f64::NAN, f64::NAN),
            },
        };
        let bj = match bessel_j(nu, tau * pt.r) {
            Ok(r) => r,
            Err(_) => return (f64::NAN, f64::NAN),
        };
        let w = tau.powf(0.5 * nf);
        let v = ml.value * w * bj.value;
        let e = w * (ml.abs_err * bj.value.abs() + bj.abs_err * ml.value.abs());
        (v, e)
    };

    let mut partials = Vec::with_capacity(MAX_PANELS);
    let mut acc = 0.0;
    let mut ferr = 0.0;
    let mut prev_edge = 0.0;
    let mut small_run = 0;
    for k in 1..=MAX_PANELS {
        let edge = bessel_zero(nu, k) / pt.r;
        let (v, e) = quad::gl15_panel(&mut integrand, prev_edge, edge);
        if !v.is_finite() {
            return Err(Error::NonConvergence {
                best: EvalResult::new(acc, f64::INFINITY, k, Method::Quadrature),
                context: "hankel oracle integrand".into(),
            });
        }
        acc += v;
        ferr += e;
        partials.push(acc);
        prev_edge = edge;
        if v.abs() <= 1e-14 * acc.abs().max(1e-300) {
            small_run += 1;
            if small_run >= 2 {
                break;
            }
        } else {
            small_run = 0;
        }
    }

    // accelerate the alternating tail of the partial sums; when the raw sums
    // have already settled (fast-decaying integrand) the last one wins
    let window = partials.len().min(40);
    let tail = &partials[partials.len() - window..];
    let (accel, accel_err) = quad::euler_accelerate(tail, EULER_DEPTH);
    let raw = *partials.last().unwrap();
    let raw_err = if partials.len() >= 2 {
        (raw - partials[partials.len() - 2]).abs()
    } else {
        f64::INFINITY
    };
    let (limit, err) = if raw_err < accel_err { (raw, raw_err) } else { (accel, accel_err) };
    let pre = pt.r.powf(1.0 - 0.5 * nf) / (2.0 * std::f64::consts::PI).powf(0.5 * nf);
    Ok(EvalResult::new(
        pre * limit,
        pre * (err + ferr),
        partials.len(),
        Method::Quadrature,
    ))
}
