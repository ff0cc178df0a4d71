//! Bessel function of the first kind J_nu(x) for nu >= -1/2, by ascending
//! series below the switch point and the large-argument (Hankel) expansion
//! above it.  The half-integer orders nu = +/-1/2 that the radial Fourier
//! formula needs in dimensions 1 and 3 take their trigonometric closed forms.

use crate::eval::{Error, EvalResult, Method, Result};
use crate::gammafn::ln_gamma;
use crate::specfun::require;
use crate::specfun::sum::{self, NOISE_F64};

const X_SWITCH: f64 = 14.0;

/// J_nu(x) for nu >= -1/2, x >= 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<EvalResult> {
    require(nu >= -0.5, "bessel_j requires nu >= -1/2")?;
    require(x >= 0.0, "bessel_j requires x >= 0")?;
    if nu == -0.5 {
        if x == 0.0 {
            return Err(Error::domain("J_{-1/2} diverges at x = 0"));
        }
        let v = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.cos();
        return Ok(EvalResult::closed_form(v));
    }
    if nu == 0.5 {
        if x == 0.0 {
            return Ok(EvalResult::closed_form(0.0));
        }
        let v = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin();
        return Ok(EvalResult::closed_form(v));
    }
    if x == 0.0 {
        let v = if nu == 0.0 { 1.0 } else { 0.0 };
        return Ok(EvalResult::closed_form(v));
    }
    if x < X_SWITCH {
        series(nu, x)
    } else {
        asymptotic(nu, x)
    }
}

/// Ascending series sum_m (-1)^m (x/2)^(nu+2m) / (m! Gamma(nu+m+1)).
fn series(nu: f64, x: f64) -> Result<EvalResult> {
    let half = x / 2.0;
    let ln_half = half.ln();
    let out = sum::sum_terms_f64(
        |m| {
            let mf = m as f64;
            let ln = (nu + 2.0 * mf) * ln_half - ln_gamma(mf + 1.0) - ln_gamma(nu + mf + 1.0);
            let sign = if m % 2 == 1 { -1.0 } else { 1.0 };
            Some(sign * ln.exp())
        },
        600,
    );
    let abs_err = out.trunc + out.max_term * NOISE_F64;
    let r = EvalResult::new(out.value, abs_err, out.terms, Method::Series);
    if out.converged {
        Ok(r)
    } else {
        Err(Error::NonConvergence { best: r, context: "Bessel J series".into() })
    }
}

/// Hankel expansion J_nu(x) ~ sqrt(2/(pi x)) [P cos w - Q sin w],
/// w = x - nu pi/2 - pi/4, truncated at the smallest term.
fn asymptotic(nu: f64, x: f64) -> Result<EvalResult> {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0; // a_k = prod (mu - (2j-1)^2) / (k! 8^k)
    let mut min_term: f64 = 1.0;
    let mut k = 1usize;
    while k < 40 {
        let j = (2 * k - 1) as f64;
        a *= (mu - j * j) / (k as f64 * 8.0 * x);
        let t = a.abs();
        if t > min_term {
            break; // divergent tail reached
        }
        min_term = t;
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
        k += 1;
    }
    let w = x - nu * std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_4;
    let amp = (2.0 / (std::f64::consts::PI * x)).sqrt();
    let v = amp * (p * w.cos() - q * w.sin());
    let abs_err = amp * (min_term + NOISE_F64);
    Ok(EvalResult::new(v, abs_err, k, Method::Asymptotic))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_order_closed_forms() {
        let r = bessel_j(0.5, std::f64::consts::PI).unwrap();
        assert!(r.value.abs() < 1e-15);
        let r = bessel_j(-0.5, std::f64::consts::FRAC_PI_2).unwrap();
        assert!(r.value.abs() < 1e-15);
    }

    #[test]
    fn j0_at_zero() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap().value, 1.0);
        assert_eq!(bessel_j(1.0, 0.0).unwrap().value, 0.0);
    }

    /// First zero of J_1 located by bisection on an independent mini-series.
    #[test]
    fn j1_first_zero() {
        let j1_direct = |x: f64| {
            // sum (-1)^m (x/2)^(1+2m)/(m!(m+1)!)
            let mut s = 0.0;
            let mut t = x / 2.0;
            for m in 0..60 {
                s += t;
                t *= -(x / 2.0) * (x / 2.0) / ((m as f64 + 1.0) * (m as f64 + 2.0));
            }
            s
        };
        let (mut lo, mut hi) = (3.0, 4.5);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if j1_direct(lo) * j1_direct(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let root = 0.5 * (lo + hi);
        assert!((root - 3.8317059702).abs() < 1e-9);
        let r = bessel_j(1.0, root).unwrap();
        assert!(r.value.abs() < 1e-9, "J_1 at its zero: {}", r.value);
    }

    #[test]
    fn series_asymptotic_overlap() {
        for &nu in &[0.0, 1.0, 0.3] {
            let a = series(nu, X_SWITCH).unwrap();
            let b = asymptotic(nu, X_SWITCH).unwrap();
            assert!(
                (a.value - b.value).abs() <= 4.0 * (a.abs_err + b.abs_err),
                "nu={nu}: {} vs {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn domain_checks() {
        assert!(bessel_j(-0.6, 1.0).is_err());
        assert!(bessel_j(0.0, -1.0).is_err());
    }
}
