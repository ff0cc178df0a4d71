//! Principal-branch complex log-gamma via the Lanczos approximation, with
//! reflection for Re(z) < 1/2 written against overflow on tall contours.

use crate::eval::{Error, Result};
use crate::gammafn::{LANCZOS, LANCZOS_G};
use num_complex::Complex64;

const HALF_LN_TWO_PI: f64 = 0.918938533204672741780329736;

/// log Gamma(z), relative error <= ~1e-14 on the contours used here
/// (|Im z| up to several hundred).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(Error::Pole { at: z.re });
    }
    if z.re >= 0.5 {
        Ok(lanczos_ln(z))
    } else {
        // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        let ln_pi = Complex64::new(std::f64::consts::PI.ln(), 0.0);
        Ok(ln_pi - log_sin_pi(z) - lanczos_ln(Complex64::new(1.0, 0.0) - z))
    }
}

fn lanczos_ln(z: Complex64) -> Complex64 {
    let mut s = Complex64::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (z - 1.0 + k as f64);
    }
    let t = z + (LANCZOS_G - 0.5);
    (z - 0.5) * t.ln() - t + HALF_LN_TWO_PI + s.ln()
}

/// log sin(pi z) with the dominant exponential factored out, so large |Im z|
/// neither overflows nor loses the linear part.  The branch may differ from
/// principal by 2 pi i k, which is irrelevant once the caller exponentiates.
fn log_sin_pi(z: Complex64) -> Complex64 {
    let ipiz = Complex64::new(0.0, std::f64::consts::PI) * z;
    // ln(2i)
    let ln_2i = Complex64::new(std::f64::consts::LN_2, std::f64::consts::FRAC_PI_2);
    if z.im >= 0.0 {
        // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i), |e^{2 i pi z}| <= 1
        let w = (2.0 * ipiz).exp();
        -ipiz + (w - 1.0).ln() - ln_2i
    } else {
        // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2i), |e^{-2 i pi z}| <= 1
        let v = (-2.0 * ipiz).exp();
        ipiz + (Complex64::new(1.0, 0.0) - v).ln() - ln_2i
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lg(re: f64, im: f64) -> Complex64 {
        log_gamma(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn real_values() {
        assert!(lg(1.0, 0.0).norm() < 1e-14);
        assert!(lg(2.0, 0.0).norm() < 1e-14);
        let expect = 0.5 * std::f64::consts::PI.ln();
        assert!((lg(0.5, 0.0).re - expect).abs() < 1e-14);
        // matches the real path
        for &x in &[0.1, 0.7, 3.2, 25.0] {
            assert!((lg(x, 0.0).re - crate::gammafn::ln_gamma(x)).abs() < 1e-12);
        }
    }

    /// |Gamma(1/2 + i t)|^2 = pi / cosh(pi t)
    #[test]
    fn modulus_on_the_half_line() {
        for &t in &[0.5, 3.0, 10.0, 50.0, 150.0] {
            let got = 2.0 * lg(0.5, t).re;
            // ln(pi / cosh(pi t)) computed in log space to avoid overflow
            let pt = std::f64::consts::PI * t;
            let ln_cosh = pt + (0.5 * (1.0 + (-2.0 * pt).exp())).ln();
            let expect = std::f64::consts::PI.ln() - ln_cosh;
            assert!((got - expect).abs() < 1e-12 * expect.abs().max(1.0), "t={t}");
        }
    }

    /// recurrence Gamma(z+1) = z Gamma(z) across the reflection boundary
    #[test]
    fn recurrence_consistency() {
        for &(re, im) in &[(0.3, 2.0), (-1.3, 5.0), (-0.2, -40.0), (0.5, 200.0)] {
            let z = Complex64::new(re, im);
            let lhs = log_gamma(z + 1.0).unwrap();
            let rhs = log_gamma(z).unwrap() + z.ln();
            // allow 2 pi k branch offsets in the imaginary part
            let diff = lhs - rhs;
            let wrapped = (diff.im / (2.0 * std::f64::consts::PI)).round();
            let im_err = (diff.im - 2.0 * std::f64::consts::PI * wrapped).abs();
            assert!(diff.re.abs() < 1e-11 && im_err < 1e-11, "z=({re},{im}) diff={diff}");
        }
    }

    #[test]
    fn pole_detection() {
        assert!(log_gamma(Complex64::new(0.0, 0.0)).is_err());
        assert!(log_gamma(Complex64::new(-3.0, 0.0)).is_err());
        assert!(log_gamma(Complex64::new(-3.5, 0.0)).is_ok());
    }
}
