//! Residue-series compiler: closes the Mellin-Barnes contour to the left or
//! right and collects the residues of the numerator gamma factors into a
//! power series in tau.
//!
//! At a simple pole s_k = -(a+k)/A of Gamma(a + A s) the residue contributes
//! the coefficient (-1)^k / (k! |A|) times the remaining symbol at s_k, with
//! the exponent -s_k on tau.  Colliding pole families raise
//! [`Error::DoublePole`]; the caller falls back to contour quadrature.

use super::symbol::GammaQuotientSymbol;
use crate::eval::{Error, EvalResult, Method, Result};
use crate::gammafn::{ln_gamma, signed_ln_gamma_snapped};

/// Poles closer than this are treated as colliding.
const POLE_TOL: f64 = 1e-9;

pub const DEFAULT_BUDGET: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTerm {
    pub coeff: f64,
    pub exponent: f64,
    /// sum of |ln| of the factors the coefficient was assembled from; its
    /// relative rounding error is this many ulps
    pub ln_budget: f64,
}

/// A compiled residue series sum_k coeff_k * tau^(exponent_k).
#[derive(Debug, Clone)]
pub struct SeriesRep {
    pub terms: Vec<SeriesTerm>,
    pub side: Side,
    /// Exponent step of a single-family series (1/|A|); 1 when several
    /// families interleave.
    pub arg_power: f64,
    /// Term budget the series was materialized to.
    pub budget: usize,
    /// Number of contributing pole families.
    pub families: usize,
}

/// Compile with the default 256-term budget.
pub fn residue_series(sym: &GammaQuotientSymbol, side: Side) -> Result<SeriesRep> {
    residue_series_with_budget(sym, side, DEFAULT_BUDGET)
}

pub fn residue_series_with_budget(
    sym: &GammaQuotientSymbol,
    side: Side,
    budget: usize,
) -> Result<SeriesRep> {
    // (index in numerator, offset, slope) of each family opening this side
    let families: Vec<(usize, f64, f64)> = sym
        .numerator()
        .iter()
        .enumerate()
        .filter(|(_, t)| match side {
            Side::Left => t.slope > 0.0,
            Side::Right => t.slope < 0.0,
        })
        .map(|(i, t)| (i, t.offset, t.slope))
        .collect();
    if families.is_empty() {
        return Err(Error::EmptyFamily);
    }

    // enumerate candidate poles, most significant exponent first
    let mut poles: Vec<(f64, usize, usize)> = Vec::new(); // (s_k, family, k)
    for (fi, &(_, a, big_a)) in families.iter().enumerate() {
        for k in 0..budget {
            poles.push((-(a + k as f64) / big_a, fi, k));
        }
    }
    match side {
        // left: s descending (exponent -s ascending)
        Side::Left => poles.sort_by(|x, y| y.0.total_cmp(&x.0)),
        // right: s ascending (exponent -s descending)
        Side::Right => poles.sort_by(|x, y| x.0.total_cmp(&y.0)),
    }
    poles.truncate(budget);
    for w in poles.windows(2) {
        if (w[0].0 - w[1].0).abs() <= POLE_TOL {
            return Err(Error::DoublePole { location: w[0].0 });
        }
    }

    let ln_scale = sym.scale_base().ln();
    let ln_pre = sym.prefactor().abs().ln();
    let pre_sign = sym.prefactor().signum();
    let mut terms = Vec::with_capacity(poles.len());
    for &(s_k, fi, k) in &poles {
        let (own_idx, _, big_a) = families[fi];
        let mut sign = pre_sign * if k % 2 == 1 { -1.0 } else { 1.0 };
        let fact = ln_gamma(k as f64 + 1.0);
        let mut ln = ln_pre - s_k * ln_scale - fact - big_a.abs().ln();
        let mut budget = ln_pre.abs() + (s_k * ln_scale).abs() + fact;
        let mut zero = false;
        for (ti, t) in sym.numerator().iter().enumerate() {
            if ti == own_idx {
                continue;
            }
            match signed_ln_gamma_snapped(t.offset + t.slope * s_k) {
                // another numerator factor poles here: an undetected collision
                // (its family index exceeded the budget)
                None => return Err(Error::DoublePole { location: s_k }),
                Some((sg, l)) => {
                    sign *= sg;
                    ln += l;
                    budget += l.abs();
                }
            }
        }
        for t in sym.denominator() {
            match signed_ln_gamma_snapped(t.offset + t.slope * s_k) {
                None => {
                    zero = true;
                    break;
                }
                Some((sg, l)) => {
                    sign *= sg;
                    ln -= l;
                    budget += l.abs();
                }
            }
        }
        let coeff = if zero { 0.0 } else { sign * ln.exp() };
        terms.push(SeriesTerm { coeff, exponent: -s_k, ln_budget: budget });
    }

    let arg_power = if families.len() == 1 { 1.0 / families[0].2.abs() } else { 1.0 };
    Ok(SeriesRep { terms, side, arg_power, budget, families: families.len() })
}

impl SeriesRep {
    /// Sum the series at tau > 0 with a convergence monitor: the term
    /// magnitudes must decay over the last 16 contributing terms, otherwise
    /// the series is declared non-convergent at this tau and the best
    /// estimate is returned in the error payload.
    pub fn eval(&self, tau: f64) -> Result<EvalResult> {
        if !(tau > 0.0) {
            return Err(Error::domain("series evaluation requires tau > 0"));
        }
        let ln_tau = tau.ln();
        let mut sum = 0.0;
        let mut comp = 0.0;
        let mut max_term: f64 = 0.0;
        let mut noise = 0.0;
        let mut last = f64::INFINITY;
        let mut decays = 0usize;
        let mut used = 0usize;
        let mut converged = false;
        let mut trunc = f64::INFINITY;
        let mut ratio = 1.0;
        for t in &self.terms {
            if t.coeff == 0.0 {
                continue;
            }
            let term = t.coeff * (t.exponent * ln_tau).exp();
            crate::specfun::sum::kahan(&mut sum, &mut comp, term);
            used += 1;
            let mag = term.abs();
            max_term = max_term.max(mag);
            // first-order rounding: the coefficient carries its compile-time
            // log-magnitude budget in ulps, the power one more exp/ln pair
            let comp_ln = t.ln_budget + (t.exponent * ln_tau).abs() + 8.0;
            noise += mag * comp_ln * f64::EPSILON;
            if mag < last {
                ratio = mag / last;
                decays += 1;
            } else {
                decays = 0;
            }
            let tiny = mag <= 1e-16 * (sum.abs() + max_term * 1e-4);
            let was_tiny = last <= 1e-16 * (sum.abs() + max_term * 1e-4);
            last = mag;
            if decays >= 16 && tiny && was_tiny {
                converged = true;
                trunc = mag;
                break;
            }
        }
        if !converged && decays >= 16 && ratio < 0.7 {
            // budget exhausted but cleanly decaying: geometric tail bound
            converged = true;
            trunc = last * ratio / (1.0 - ratio);
        }
        let abs_err = if converged { trunc + noise } else { f64::INFINITY };
        let r = EvalResult::new(sum, abs_err, used, Method::Series);
        if converged {
            Ok(r)
        } else {
            Err(Error::NonConvergence {
                best: EvalResult::new(sum, noise + last, used, Method::Series),
                context: format!("residue series at tau = {tau}"),
            })
        }
    }

    /// Asymptotic-style summation: add terms while their magnitude decreases
    /// and stop at the first increase; the error is the first omitted term.
    /// A budget exhausted mid-decay gets a geometric tail bound instead.
    /// This is how the divergent descending expansions are used.
    pub fn eval_min_term(&self, tau: f64) -> EvalResult {
        let ln_tau = tau.ln();
        let mut sum = 0.0;
        let mut comp = 0.0;
        let mut last = f64::INFINITY;
        let mut ratio = 1.0;
        let mut noise = 0.0;
        let mut used = 0usize;
        let mut omitted = 0.0;
        for t in &self.terms {
            if t.coeff == 0.0 {
                continue;
            }
            let term = t.coeff * (t.exponent * ln_tau).exp();
            let mag = term.abs();
            if mag >= last {
                omitted = mag;
                break;
            }
            ratio = mag / last;
            crate::specfun::sum::kahan(&mut sum, &mut comp, term);
            let comp_ln = t.ln_budget + (t.exponent * ln_tau).abs() + 8.0;
            noise += mag * comp_ln * f64::EPSILON;
            last = mag;
            used += 1;
        }
        if omitted == 0.0 {
            // still decaying when the materialized terms ran out
            omitted = if ratio < 1.0 { last * ratio / (1.0 - ratio).max(1e-6) } else { last };
        }
        // the first omitted term tracks the true remainder only to leading order
        EvalResult::new(sum, 2.0 * omitted + noise, used, Method::Asymptotic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mellin::symbol::GammaTerm;

    fn gamma_s() -> GammaQuotientSymbol {
        GammaQuotientSymbol::new(1.0, 1.0, vec![GammaTerm::new(0.0, 1.0).unwrap()], vec![]).unwrap()
    }

    #[test]
    fn gamma_s_left_series_is_exp_minus_tau() {
        let rep = residue_series(&gamma_s(), Side::Left).unwrap();
        assert_eq!(rep.families, 1);
        assert_eq!(rep.arg_power, 1.0);
        // coefficients (-1)^k / k!, exponents k
        for (k, t) in rep.terms.iter().take(6).enumerate() {
            let expect = if k % 2 == 1 { -1.0 } else { 1.0 }
                / (1..=k).map(|i| i as f64).product::<f64>();
            assert!((t.coeff - expect).abs() < 1e-12 * expect.abs().max(1.0));
            assert!((t.exponent - k as f64).abs() < 1e-12);
        }
        for i in 0..=10 {
            let tau = 0.5 * i as f64 + 0.05;
            let r = rep.eval(tau).unwrap();
            assert!((r.value - (-tau).exp()).abs() <= 1e-12, "tau={tau}");
        }
    }

    #[test]
    fn gamma_s_has_no_right_family() {
        assert!(matches!(residue_series(&gamma_s(), Side::Right), Err(Error::EmptyFamily)));
    }

    #[test]
    fn colliding_families_error() {
        // Gamma(s) Gamma(1+s): poles at -k and -1-k collide from k = 1
        let sym = GammaQuotientSymbol::new(
            1.0,
            1.0,
            vec![GammaTerm::new(0.0, 1.0).unwrap(), GammaTerm::new(1.0, 1.0).unwrap()],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            residue_series(&sym, Side::Left),
            Err(Error::DoublePole { .. })
        ));
    }

    #[test]
    fn scale_base_enters_the_coefficients() {
        // Mellin pair of exp(-a t): a^{-s} Gamma(s) -> series exp(-a tau)
        let sym = gamma_s().rule_scale(2.5).unwrap();
        let rep = residue_series(&sym, Side::Left).unwrap();
        let r = rep.eval(1.3).unwrap();
        assert!((r.value - (-2.5f64 * 1.3).exp()).abs() < 1e-12);
    }
}
