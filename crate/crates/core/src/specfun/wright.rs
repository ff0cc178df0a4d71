//! The Wright function W_{a,mu}(z), the generalized Wright function
//! _pPsi_q(z), and the four-parameter Wright function W_{(a,mu),(b,nu)}(z).
//!
//! All three are evaluated by their defining series.  Negative arguments make
//! the series alternate; cancellation is detected and the summation escalated
//! to double-double precision.  There is no large-argument expansion for
//! W_{a,mu}(-t) here: callers that need the far tail fall back to contour
//! quadrature or closed forms.

use crate::dd::Dd;
use crate::eval::{Error, EvalResult, Method, Result};
use crate::gammafn::{signed_ln_gamma_snapped, signed_ln_gamma_dd_snapped};
use crate::specfun::require;
use crate::specfun::sum::{self, NOISE_F64};

const K_MAX: usize = 4000;

/// Indices of W_{a,mu}; the series requires mu > -1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightOrder {
    pub a: f64,
    pub mu: f64,
}

impl WrightOrder {
    pub fn new(a: f64, mu: f64) -> Result<Self> {
        require(mu > -1.0 && mu.is_finite() && a.is_finite(), "Wright function requires mu > -1")?;
        Ok(WrightOrder { a, mu })
    }
}

/// Upper/lower parameter lists of _pPsi_q; all slopes must be positive and
/// sum(B_j) - sum(A_i) > -1 so the series is entire.
#[derive(Debug, Clone, PartialEq)]
pub struct GenWrightParams {
    upper: Vec<(f64, f64)>,
    lower: Vec<(f64, f64)>,
}

impl GenWrightParams {
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Result<Self> {
        for &(_, a) in &upper {
            require(a > 0.0, "generalized Wright upper slope A_i must be > 0")?;
        }
        for &(_, b) in &lower {
            require(b > 0.0, "generalized Wright lower slope B_j must be > 0")?;
        }
        let delta: f64 =
            lower.iter().map(|&(_, b)| b).sum::<f64>() - upper.iter().map(|&(_, a)| a).sum::<f64>();
        require(delta > -1.0, "generalized Wright series requires sum B - sum A > -1")?;
        Ok(GenWrightParams { upper, lower })
    }

    pub fn upper(&self) -> &[(f64, f64)] {
        &self.upper
    }

    pub fn lower(&self) -> &[(f64, f64)] {
        &self.lower
    }
}

/// Four-parameter order; the series is entire for mu + nu > 0 and has radius
/// of convergence exactly 1 when mu + nu = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourParamOrder {
    pub a: f64,
    pub mu: f64,
    pub b: f64,
    pub nu: f64,
}

impl FourParamOrder {
    pub fn new(a: f64, mu: f64, b: f64, nu: f64) -> Result<Self> {
        require(
            mu + nu >= 0.0 && [a, mu, b, nu].iter().all(|v| v.is_finite()),
            "four-parameter Wright requires mu + nu >= 0",
        )?;
        Ok(FourParamOrder { a, mu, b, nu })
    }
}

fn finish(value: f64, noise: f64, trunc: f64, terms: usize, what: &str) -> Result<EvalResult> {
    let abs_err = noise + trunc;
    let r = EvalResult::new(value, abs_err, terms, Method::Series);
    if abs_err.is_finite() && abs_err <= 1e-8 * value.abs().max(1.0) {
        Ok(r)
    } else {
        Err(Error::NonConvergence { best: r, context: what.into() })
    }
}

/// W_{a,mu}(z) = sum_k z^k / (k! Gamma(a + mu k)).
pub fn wright_eval(order: &WrightOrder, z: f64) -> Result<EvalResult> {
    if z == 0.0 {
        return Ok(EvalResult::closed_form(crate::gammafn::recip_gamma(order.a)));
    }
    let mut p = 1.0; // z^k / k!
    let mut overflow = false;
    let out = sum::sum_terms_f64(
        |k| {
            if k > 0 {
                p *= z / k as f64;
                if p.abs() > 1e290 {
                    overflow = true;
                    return Some(f64::INFINITY);
                }
            }
            match signed_ln_gamma_snapped(order.a + order.mu * k as f64) {
                None => None,
                Some((sign, ln_abs)) => Some(p * sign * (-ln_abs).exp()),
            }
        },
        K_MAX,
    );
    if !overflow && sum::f64_pass_ok(&out) {
        return finish(out.value, out.max_term * NOISE_F64, out.trunc, out.terms, "Wright series");
    }
    let ln_az = Dd::from_f64(z.abs()).ln();
    let z_sign = z.signum();
    let out = sum::sum_terms_dd(
        |k| {
            let kf = Dd::from_f64(k as f64);
            let (g_sign, g_ln) = signed_ln_gamma_dd_snapped(Dd::from_f64(order.a) + Dd::from_f64(order.mu) * kf)?;
            let (_, fact_ln) = signed_ln_gamma_dd_snapped(kf + Dd::ONE).unwrap();
            let sign = if k % 2 == 1 && z_sign < 0.0 { -g_sign } else { g_sign };
            Some((sign, kf * ln_az - fact_ln - g_ln))
        },
        K_MAX,
    );
    finish(
        out.value,
        sum::ln_form_dd_noise(out.max_term, out.terms, z.abs().ln()),
        out.trunc,
        out.terms,
        "Wright series (dd)",
    )
}

/// _pPsi_q(z) = sum_k prod Gamma(a_i + A_i k) / prod Gamma(b_j + B_j k) * z^k / k!.
pub fn gen_wright_eval(params: &GenWrightParams, z: f64) -> Result<EvalResult> {
    if z == 0.0 {
        let mut sign = 1.0;
        let mut ln = 0.0;
        for &(a, _) in params.upper() {
            let (s, l) = signed_ln_gamma_snapped(a)
                .ok_or_else(|| Error::domain("generalized Wright upper gamma pole"))?;
            sign *= s;
            ln += l;
        }
        for &(b, _) in params.lower() {
            match signed_ln_gamma_snapped(b) {
                None => return Ok(EvalResult::closed_form(0.0)),
                Some((s, l)) => {
                    sign *= s;
                    ln -= l;
                }
            }
        }
        return Ok(EvalResult::closed_form(sign * ln.exp()));
    }
    let ln_az = z.abs().ln();
    let z_sign = z.signum();
    // signed-log f64 pass
    let term_f64 = |k: usize| -> Option<Result<(f64, f64)>> {
        let kf = k as f64;
        let mut ln = kf * ln_az;
        let mut sign = if k % 2 == 1 && z_sign < 0.0 { -1.0 } else { 1.0 };
        for &(a, big_a) in params.upper() {
            match signed_ln_gamma_snapped(a + big_a * kf) {
                None => return Some(Err(Error::domain("generalized Wright upper gamma pole"))),
                Some((s, l)) => {
                    sign *= s;
                    ln += l;
                }
            }
        }
        for &(b, big_b) in params.lower() {
            match signed_ln_gamma_snapped(b + big_b * kf) {
                None => return None, // reciprocal-gamma zero
                Some((s, l)) => {
                    sign *= s;
                    ln -= l;
                }
            }
        }
        ln -= crate::gammafn::ln_gamma(kf + 1.0);
        Some(Ok((sign, ln)))
    };

    let mut failed: Option<Error> = None;
    let out = sum::sum_terms_f64(
        |k| match term_f64(k) {
            None => None,
            Some(Err(e)) => {
                failed = Some(e);
                Some(f64::NAN)
            }
            Some(Ok((sign, ln))) => {
                if ln > sum::LN_OVERFLOW {
                    Some(f64::INFINITY)
                } else {
                    Some(sign * ln.exp())
                }
            }
        },
        K_MAX,
    );
    if let Some(e) = failed {
        return Err(e);
    }
    if sum::f64_pass_ok(&out) {
        return finish(out.value, out.max_term * 1e-14, out.trunc, out.terms, "generalized Wright");
    }
    // dd pass
    let ln_az_dd = Dd::from_f64(z.abs()).ln();
    let out = sum::sum_terms_dd(
        |k| {
            let kf = Dd::from_f64(k as f64);
            let mut ln = kf * ln_az_dd;
            let mut sign = if k % 2 == 1 && z_sign < 0.0 { -1.0 } else { 1.0 };
            for &(a, big_a) in params.upper() {
                let (s, l) = signed_ln_gamma_dd_snapped(Dd::from_f64(a) + Dd::from_f64(big_a) * kf)?;
                sign *= s;
                ln = ln + l;
            }
            for &(b, big_b) in params.lower() {
                match signed_ln_gamma_dd_snapped(Dd::from_f64(b) + Dd::from_f64(big_b) * kf) {
                    None => return None,
                    Some((s, l)) => {
                        sign *= s;
                        ln = ln - l;
                    }
                }
            }
            let (_, fact) = signed_ln_gamma_dd_snapped(kf + Dd::ONE).unwrap();
            Some((sign, ln - fact))
        },
        K_MAX,
    );
    finish(
        out.value,
        sum::ln_form_dd_noise(out.max_term, out.terms, z.abs().ln()),
        out.trunc,
        out.terms,
        "generalized Wright (dd)",
    )
}

/// W_{(a,mu),(b,nu)}(z) = sum_k z^k / (Gamma(a + mu k) Gamma(b + nu k)).
/// Terms whose gamma argument hits a pole contribute exactly zero.
pub fn four_param_wright_eval(order: &FourParamOrder, z: f64) -> Result<EvalResult> {
    if order.mu + order.nu == 0.0 && z.abs() >= 1.0 {
        return Err(Error::domain(
            "four-parameter Wright with mu + nu = 0 converges only for |z| < 1",
        ));
    }
    if z == 0.0 {
        let v = crate::gammafn::recip_gamma(order.a) * crate::gammafn::recip_gamma(order.b);
        return Ok(EvalResult::closed_form(v));
    }
    let ln_az = z.abs().ln();
    let z_sign = z.signum();
    let out = sum::sum_terms_f64(
        |k| {
            let kf = k as f64;
            let (s1, l1) = signed_ln_gamma_snapped(order.a + order.mu * kf)?;
            let (s2, l2) = signed_ln_gamma_snapped(order.b + order.nu * kf)?;
            let ln = kf * ln_az - l1 - l2;
            if ln > sum::LN_OVERFLOW {
                return Some(f64::INFINITY);
            }
            let sign = if k % 2 == 1 && z_sign < 0.0 { -s1 * s2 } else { s1 * s2 };
            Some(sign * ln.exp())
        },
        K_MAX,
    );
    if sum::f64_pass_ok(&out) {
        return finish(out.value, out.max_term * 1e-14, out.trunc, out.terms, "four-parameter Wright");
    }
    let ln_az_dd = Dd::from_f64(z.abs()).ln();
    let out = sum::sum_terms_dd(
        |k| {
            let kf = Dd::from_f64(k as f64);
            let (s1, l1) = signed_ln_gamma_dd_snapped(Dd::from_f64(order.a) + Dd::from_f64(order.mu) * kf)?;
            let (s2, l2) = signed_ln_gamma_dd_snapped(Dd::from_f64(order.b) + Dd::from_f64(order.nu) * kf)?;
            let ln = kf * ln_az_dd - l1 - l2;
            let sign = if k % 2 == 1 && z_sign < 0.0 { -s1 * s2 } else { s1 * s2 };
            Some((sign, ln))
        },
        K_MAX,
    );
    finish(
        out.value,
        sum::ln_form_dd_noise(out.max_term, out.terms, z.abs().ln()),
        out.trunc,
        out.terms,
        "four-parameter Wright (dd)",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wright_at_zero_is_recip_gamma_a() {
        let r = wright_eval(&WrightOrder::new(1.0, 1.0).unwrap(), 0.0).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15);
    }

    /// W_{1,1}(z) = I_0(2 sqrt z); oracle is the modified-Bessel series.
    #[test]
    fn wright_bessel_identity() {
        let i0_2: f64 = {
            // I_0(2) = sum (1/k!)^2
            let mut s = 0.0;
            let mut f = 1.0;
            for k in 0..30 {
                if k > 0 {
                    f /= k as f64;
                }
                s += f * f;
            }
            s
        };
        let r = wright_eval(&WrightOrder::new(1.0, 1.0).unwrap(), 1.0).unwrap();
        assert!((r.value - i0_2).abs() < 1e-12, "{} vs {i0_2}", r.value);
    }

    /// W_{1/2,-1/2}(-x) = exp(-x^2/4)/sqrt(pi), including the escalated regime.
    #[test]
    fn gaussian_kernel_identity() {
        for &x in &[0.3, 1.0, 3.0, 8.0, 12.0] {
            let r = wright_eval(&WrightOrder::new(0.5, -0.5).unwrap(), -x).unwrap();
            let expect = (-x * x / 4.0).exp() / std::f64::consts::PI.sqrt();
            assert!(
                (r.value - expect).abs() <= r.abs_err.max(1e-13),
                "x={x}: {} vs {expect} (err {})",
                r.value,
                expect
            );
        }
    }

    /// Example-1 pdf mass: integral of W_{1-b,-b}(-t) dt over (0,inf) = 1 at b = 1/2.
    #[test]
    fn m_wright_mass_is_one() {
        let order = WrightOrder::new(0.5, -0.5).unwrap();
        let mut f = |t: f64| {
            let r = wright_eval(&order, -t).unwrap();
            (r.value, r.abs_err)
        };
        let (v, e) = crate::quad::adaptive(&mut f, 0.0, 14.0, 1e-12);
        assert!((v - 1.0).abs() < 1e-9 + e, "mass {v}");
    }

    #[test]
    fn gen_wright_exp_reduction() {
        // 1Psi1 with (1,1)/(1,1): all gammas cancel -> e^x
        let p = GenWrightParams::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)]).unwrap();
        for &x in &[-2.0, -0.3, 0.0, 1.7] {
            let r = gen_wright_eval(&p, x).unwrap();
            assert!((r.value - x.exp()).abs() < 1e-12 + r.abs_err);
        }
    }

    #[test]
    fn gen_wright_entirety_guard() {
        // sum B - sum A = 1 - 2 = -1 is rejected
        assert!(GenWrightParams::new(vec![(1.0, 2.0)], vec![(1.0, 1.0)]).is_err());
        assert!(GenWrightParams::new(vec![(1.0, -1.0)], vec![(1.0, 1.0)]).is_err());
    }

    #[test]
    fn four_param_reduces_to_wright() {
        let fp = FourParamOrder::new(1.0, 1.0, 0.7, 0.4).unwrap();
        let w = WrightOrder::new(0.7, 0.4).unwrap();
        for &z in &[-3.0, -0.5, 0.9] {
            let a = four_param_wright_eval(&fp, z).unwrap();
            let b = wright_eval(&w, z).unwrap();
            assert!((a.value - b.value).abs() <= a.abs_err + b.abs_err + 1e-13);
        }
    }

    #[test]
    fn four_param_zero_term_convention() {
        // (a=1, mu=beta, b=0, nu=-alpha/2) at z=0: the k=0 term carries 1/Gamma(0) = 0
        let fp = FourParamOrder::new(1.0, 0.9, 0.0, -0.75).unwrap();
        let r = four_param_wright_eval(&fp, 0.0).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn four_param_radius_one_guard() {
        let fp = FourParamOrder::new(1.0, 0.5, 1.0, -0.5).unwrap();
        assert!(four_param_wright_eval(&fp, -1.0).is_err());
        assert!(four_param_wright_eval(&fp, -0.5).is_ok());
        assert!(FourParamOrder::new(1.0, 0.5, 1.0, -0.6).is_err());
    }
}
