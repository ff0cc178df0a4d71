//! Catalog of the Mellin symbols the fundamental-solution machinery is built
//! from: the diffusion-wave kernel K_{alpha,beta,n} and its special cases,
//! the subordination kernel symbols, and the classical transform pairs of
//! the Mittag-Leffler, Wright, exponential and Bessel functions.

use super::symbol::{GammaQuotientSymbol, GammaTerm};
use crate::eval::{Error, Result};

fn term(offset: f64, slope: f64) -> GammaTerm {
    GammaTerm::new(offset, slope).expect("builtin slopes are nonzero")
}

fn check(cond: bool, msg: &str) -> Result<()> {
    if cond { Ok(()) } else { Err(Error::domain(msg)) }
}

/// K_{alpha,beta,n}(s) =
///   Gamma(s/2) Gamma(n/a - s/a) Gamma(1 - n/a + s/a)
///   / [ Gamma(1 - bn/a + bs/a) Gamma(n/2 - s/2) ],
/// the kernel of the similarity-variable Mellin-Barnes representation of
/// G_{alpha,beta,n}.
pub fn k_symbol(alpha: f64, beta: f64, n: u32) -> Result<GammaQuotientSymbol> {
    check(alpha > 0.0, "k_symbol requires alpha > 0")?;
    check(beta > 0.0 && beta <= 2.0, "k_symbol requires 0 < beta <= 2")?;
    check(n >= 1, "k_symbol requires n >= 1")?;
    let nf = n as f64;
    GammaQuotientSymbol::new(
        1.0,
        1.0,
        vec![
            term(0.0, 0.5),
            term(nf / alpha, -1.0 / alpha),
            term(1.0 - nf / alpha, 1.0 / alpha),
        ],
        vec![
            term(1.0 - beta * nf / alpha, beta / alpha),
            term(nf / 2.0, -0.5),
        ],
    )
}

/// K_{alpha,1,n}(s): the space-fractional diffusion kernel (beta = 1).
pub fn k_space_symbol(alpha: f64, n: u32) -> Result<GammaQuotientSymbol> {
    k_symbol(alpha, 1.0, n)
}

/// K_{2,1,n}(s) = Gamma(s/2): the Gaussian kernel after cancellation.
pub fn k_gauss_symbol(n: u32) -> Result<GammaQuotientSymbol> {
    k_symbol(2.0, 1.0, n)
}

/// The Theorem-1 kernel symbol
///   Phi*_{alpha,beta}(s) = (2/a) Gamma(2/a - 2s/a) Gamma(1 - 2/a + 2s/a)
///                          / [ Gamma(1 - 2b/a + 2bs/a) Gamma(1 - s) ],
/// a probability density for 0 < beta <= 1, 0 < alpha <= 2, 2 beta + alpha < 4.
pub fn phi_theorem_symbol(alpha: f64, beta: f64) -> Result<GammaQuotientSymbol> {
    check(alpha > 0.0, "phi_theorem_symbol requires alpha > 0")?;
    check(beta > 0.0, "phi_theorem_symbol requires beta > 0")?;
    check(2.0 * beta + alpha < 4.0, "phi_theorem_symbol requires 2 beta + alpha < 4")?;
    GammaQuotientSymbol::new(
        2.0 / alpha,
        1.0,
        vec![term(2.0 / alpha, -2.0 / alpha), term(1.0 - 2.0 / alpha, 2.0 / alpha)],
        vec![term(1.0 - 2.0 * beta / alpha, 2.0 * beta / alpha), term(1.0, -1.0)],
    )
}

/// Time-subordination kernel symbol (base beta = 1):
///   Gamma(1 - n/a + s/a) / Gamma(1 - bn/a + bs/a).
pub fn phi_time_symbol(alpha: f64, beta: f64, n: u32) -> Result<GammaQuotientSymbol> {
    check(alpha > 0.0 && beta > 0.0 && n >= 1, "phi_time_symbol parameter out of range")?;
    let nf = n as f64;
    GammaQuotientSymbol::new(
        1.0,
        1.0,
        vec![term(1.0 - nf / alpha, 1.0 / alpha)],
        vec![term(1.0 - beta * nf / alpha, beta / alpha)],
    )
}

/// Two-dimensional alpha-fractional kernel symbol (base beta = alpha/2, n = 2):
///   Gamma(s/2) / Gamma(1 - 2b/a + bs/a).
pub fn phi_2d_symbol(alpha: f64, beta: f64) -> Result<GammaQuotientSymbol> {
    check(alpha > 0.0 && beta > 0.0, "phi_2d_symbol parameter out of range")?;
    GammaQuotientSymbol::new(
        1.0,
        1.0,
        vec![term(0.0, 0.5)],
        vec![term(1.0 - 2.0 * beta / alpha, beta / alpha)],
    )
}

/// General (alpha, beta, delta, n) kernel symbol, 0 < beta < delta <= 2:
///   Gamma(1 - dn/a + ds/a) / Gamma(1 - bn/a + bs/a).
pub fn phi_general_symbol(alpha: f64, beta: f64, delta: f64, n: u32) -> Result<GammaQuotientSymbol> {
    check(alpha > 0.0 && n >= 1, "phi_general_symbol parameter out of range")?;
    check(
        beta > 0.0 && beta < delta && delta <= 2.0,
        "phi_general_symbol requires 0 < beta < delta <= 2",
    )?;
    let nf = n as f64;
    GammaQuotientSymbol::new(
        1.0,
        1.0,
        vec![term(1.0 - delta * nf / alpha, delta / alpha)],
        vec![term(1.0 - beta * nf / alpha, beta / alpha)],
    )
}

/// Mellin transform of E_beta(-t): Gamma(s) Gamma(1-s) / Gamma(1 - beta s),
/// on 0 < Re s < 1 (0 < Re s < 1/2 for beta = 2).
pub fn ml_symbol(beta: f64) -> Result<GammaQuotientSymbol> {
    check(beta > 0.0 && beta <= 2.0, "ml_symbol requires 0 < beta <= 2")?;
    GammaQuotientSymbol::new(
        1.0,
        1.0,
        vec![term(0.0, 1.0), term(1.0, -1.0)],
        vec![term(1.0, -beta)],
    )
}

/// Mellin transform of E_{alpha,beta}(-t): Gamma(s) Gamma(1-s) / Gamma(beta - alpha s).
pub fn ml2_symbol(alpha: f64, beta: f64) -> Result<GammaQuotientSymbol> {
    check(alpha > 0.0 && alpha <= 2.0, "ml2_symbol requires 0 < alpha <= 2")?;
    GammaQuotientSymbol::new(
        1.0,
        1.0,
        vec![term(0.0, 1.0), term(1.0, -1.0)],
        vec![term(beta, -alpha)],
    )
}

/// Mellin transform of W_{a,mu}(-t): Gamma(s) / Gamma(a - mu s), mu < 1.
pub fn wright_symbol(a: f64, mu: f64) -> Result<GammaQuotientSymbol> {
    check(mu < 1.0, "wright_symbol requires mu < 1")?;
    GammaQuotientSymbol::new(1.0, 1.0, vec![term(0.0, 1.0)], vec![term(a, -mu)])
}

/// Mellin transform of exp(-t^alpha): |alpha|^{-1} Gamma(s/alpha).
pub fn exp_symbol(alpha: f64) -> Result<GammaQuotientSymbol> {
    check(alpha != 0.0, "exp_symbol requires alpha != 0")?;
    GammaQuotientSymbol::new(1.0 / alpha.abs(), 1.0, vec![term(0.0, 1.0 / alpha)], vec![])
}

/// Mellin transform of J_nu(2 sqrt t): Gamma(nu/2 + s) / Gamma(nu/2 + 1 - s).
pub fn bessel_symbol(nu: f64) -> Result<GammaQuotientSymbol> {
    GammaQuotientSymbol::new(
        1.0,
        1.0,
        vec![term(nu / 2.0, 1.0)],
        vec![term(nu / 2.0 + 1.0, -1.0)],
    )
}

/// Name-based dispatch used by front ends.  Parameter order per name:
/// `k` (alpha, beta, n); `k-space` (alpha, n); `k-gauss` (n);
/// `phi-theorem` (alpha, beta); `phi-time` (alpha, beta, n);
/// `phi-2d` (alpha, beta); `phi-general` (alpha, beta, delta, n);
/// `ml` (beta); `ml2` (alpha, beta); `wright` (a, mu); `exp` (alpha);
/// `bessel-j` (nu).
pub fn builtin(name: &str, params: &[f64]) -> Result<GammaQuotientSymbol> {
    let need = |n: usize| -> Result<()> {
        check(params.len() == n, &format!("builtin `{name}` takes {n} parameter(s)"))
    };
    let as_n = |x: f64| -> Result<u32> {
        check(x >= 1.0 && x.fract() == 0.0 && x <= u32::MAX as f64, "dimension n must be a positive integer")?;
        Ok(x as u32)
    };
    match name {
        "k" => {
            need(3)?;
            k_symbol(params[0], params[1], as_n(params[2])?)
        }
        "k-space" => {
            need(2)?;
            k_space_symbol(params[0], as_n(params[1])?)
        }
        "k-gauss" => {
            need(1)?;
            k_gauss_symbol(as_n(params[0])?)
        }
        "phi-theorem" => {
            need(2)?;
            phi_theorem_symbol(params[0], params[1])
        }
        "phi-time" => {
            need(3)?;
            phi_time_symbol(params[0], params[1], as_n(params[2])?)
        }
        "phi-2d" => {
            need(2)?;
            phi_2d_symbol(params[0], params[1])
        }
        "phi-general" => {
            need(4)?;
            phi_general_symbol(params[0], params[1], params[2], as_n(params[3])?)
        }
        "ml" => {
            need(1)?;
            ml_symbol(params[0])
        }
        "ml2" => {
            need(2)?;
            ml2_symbol(params[0], params[1])
        }
        "wright" => {
            need(2)?;
            wright_symbol(params[0], params[1])
        }
        "exp" => {
            need(1)?;
            exp_symbol(params[0])
        }
        "bessel-j" => {
            need(1)?;
            bessel_symbol(params[0])
        }
        other => Err(Error::domain(format!("unknown builtin symbol `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mellin::series::{residue_series, Side};

    #[test]
    fn gaussian_kernel_collapses_to_gamma_half_s() {
        let k = k_gauss_symbol(2).unwrap();
        assert_eq!(k.numerator().len(), 1);
        assert!(k.denominator().is_empty());
        assert_eq!(k.numerator()[0].offset, 0.0);
        assert_eq!(k.numerator()[0].slope, 0.5);
    }

    #[test]
    fn strips_match_the_parameter_conditions() {
        // K: max(n - alpha, 0) < gamma < n
        let k = k_symbol(1.5, 0.75, 1).unwrap();
        let s = k.strip().unwrap();
        assert_eq!(s.lo, 0.0);
        assert_eq!(s.hi, 1.0);
        let k = k_symbol(1.5, 0.75, 3).unwrap();
        let s = k.strip().unwrap();
        assert!((s.lo - 1.5).abs() < 1e-12 && (s.hi - 3.0).abs() < 1e-12);
        // ML: 0 < gamma < 1
        let s = ml_symbol(0.7).unwrap().strip().unwrap();
        assert_eq!((s.lo, s.hi), (0.0, 1.0));
    }

    #[test]
    fn time_kernel_factorization() {
        // K_{a,b,n} = K_{a,1,n} x Phi*_{a,b,n}
        let (alpha, beta, n) = (1.7, 0.6, 2);
        let target = k_symbol(alpha, beta, n).unwrap();
        let base = k_space_symbol(alpha, n).unwrap();
        let quotient = target.factor_divide(&base);
        assert!(quotient.approx_eq(&phi_time_symbol(alpha, beta, n).unwrap(), 1e-12));
        let rebuilt = base.convolve(&quotient).unwrap();
        assert!(rebuilt.approx_eq(&target, 1e-12));
    }

    #[test]
    fn gauss_base_factorization() {
        // K_{a,b,n} = K_{2,1,n} x Psi*_{a,b,n}
        let (alpha, beta, n) = (1.3, 0.45, 3);
        let target = k_symbol(alpha, beta, n).unwrap();
        let base = k_gauss_symbol(n).unwrap();
        let quotient = target.factor_divide(&base);
        let rebuilt = base.convolve(&quotient).unwrap();
        assert!(rebuilt.approx_eq(&target, 1e-12));
    }

    #[test]
    fn two_dim_factorization() {
        // K_{a,b,2} = K_{a,a/2,2} x Phi*_{a,b} with Phi_2 shape
        let (alpha, beta) = (1.6, 0.5);
        let target = k_symbol(alpha, beta, 2).unwrap();
        let base = k_symbol(alpha, alpha / 2.0, 2).unwrap();
        let quotient = target.factor_divide(&base);
        assert!(quotient.approx_eq(&phi_2d_symbol(alpha, beta).unwrap(), 1e-12), "{quotient}");
        assert!(base.convolve(&quotient).unwrap().approx_eq(&target, 1e-12));
    }

    #[test]
    fn general_delta_factorization() {
        let (alpha, beta, delta, n) = (1.8, 0.4, 1.1, 2);
        let target = k_symbol(alpha, beta, n).unwrap();
        let base = k_symbol(alpha, delta, n).unwrap();
        let quotient = target.factor_divide(&base);
        assert!(quotient.approx_eq(&phi_general_symbol(alpha, beta, delta, n).unwrap(), 1e-12));
        assert!(base.convolve(&quotient).unwrap().approx_eq(&target, 1e-12));
    }

    #[test]
    fn phi_time_series_matches_the_closed_coefficients() {
        // left residues of Phi_1: alpha (-1)^k / (k! Gamma(1-b-bk)), exponents a(k+1)-n
        let (alpha, beta, n) = (1.5, 0.4, 1);
        let sym = phi_time_symbol(alpha, beta, n).unwrap();
        let rep = residue_series(&sym, Side::Left).unwrap();
        for (k, t) in rep.terms.iter().take(8).enumerate() {
            let kf = k as f64;
            let fact: f64 = (1..=k).map(|i| i as f64).product();
            let expect = alpha * if k % 2 == 1 { -1.0 } else { 1.0 } / fact
                * crate::gammafn::recip_gamma(1.0 - beta - beta * kf);
            let e_expect = alpha * (kf + 1.0) - n as f64;
            assert!((t.coeff - expect).abs() <= 1e-12 * expect.abs().max(1e-10), "k={k}");
            assert!((t.exponent - e_expect).abs() < 1e-12);
        }
    }

    #[test]
    fn cm_dual_of_wright_is_mittag_leffler_type() {
        // Example 1: W_{b-a,-a}(-t) pairs with E_{a,b}(-lambda)
        let (alpha, beta) = (0.6, 1.2);
        let w = wright_symbol(beta - alpha, -alpha).unwrap();
        let dual = w.cm_dual();
        assert!(dual.approx_eq(&ml2_symbol(alpha, beta).unwrap(), 1e-12), "{dual}");
        // and back
        assert!(dual.cm_dual_inverse().approx_eq(&w, 1e-12));
    }

    #[test]
    fn cm_dual_of_theorem_kernel_matches_example_two() {
        // cm_dual of Mel-Phi = (2/a) Gamma(2s/a) Gamma(1 - 2s/a) / Gamma(1 - 2bs/a)
        let (alpha, beta) = (1.4, 0.6);
        let dual = phi_theorem_symbol(alpha, beta).unwrap().cm_dual();
        let expect = GammaQuotientSymbol::new(
            2.0 / alpha,
            1.0,
            vec![
                GammaTerm::new(0.0, 2.0 / alpha).unwrap(),
                GammaTerm::new(1.0, -2.0 / alpha).unwrap(),
            ],
            vec![GammaTerm::new(1.0, -2.0 * beta / alpha).unwrap()],
        )
        .unwrap();
        assert!(dual.approx_eq(&expect, 1e-12), "{dual} vs {expect}");
    }

    #[test]
    fn builtin_dispatch() {
        assert!(builtin("k", &[1.5, 0.5, 2.0]).is_ok());
        assert!(builtin("ml", &[0.6]).is_ok());
        assert!(builtin("nope", &[]).is_err());
        assert!(builtin("ml", &[0.6, 1.0]).is_err());
        assert!(builtin("k", &[1.5, 0.5, 2.5]).is_err());
    }
}
