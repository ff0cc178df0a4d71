//! Series summation engines shared by the special-function evaluators:
//! a compensated f64 pass, and a double-double pass in signed-log form for
//! alternating series with heavy cancellation.
//!
//! Term generators return `None` for terms that vanish exactly under the
//! reciprocal-gamma convention; a long run of such terms ends the series
//! (the pole spacing of every symbol in this crate is far below the cutoff).

use crate::dd::Dd;

/// Escalate from f64 to double-double when |largest term| / |partial sum|
/// exceeds this ratio.
pub(crate) const CANCEL_RATIO: f64 = 1e8;

/// Noise floors of the two summation paths, as multiples of the largest
/// term; the f64 figure covers per-term accumulation over the significant
/// stretch of the series.
pub(crate) const NOISE_F64: f64 = 32.0 * f64::EPSILON;
pub(crate) const NOISE_DD: f64 = 1e-31;

/// Signed-log term construction quantizes each ln component (k ln z, the
/// log-gammas), so its noise scales with the largest intermediate magnitude,
/// which can far exceed |ln of the term| after cancellation.
pub(crate) fn ln_form_dd_noise(max_term: f64, terms: usize, ln_az: f64) -> f64 {
    let k = terms as f64 + 2.0;
    let comp = 2.0 * k * k.ln().max(1.0) + k * ln_az.abs();
    max_term * 1.2e-32 * comp.max(8.0)
}

/// Accept the f64 pass only when its predicted noise leaves twelve good
/// digits relative to max(1, |value|) and the cancellation ratio is sane.
pub(crate) fn f64_pass_ok(out: &SumOutcome) -> bool {
    out.converged
        && out.max_term / out.value.abs().max(1e-300) <= CANCEL_RATIO
        && out.max_term * NOISE_F64 <= 5e-13 * out.value.abs().max(1.0)
}

/// ln of a term magnitude above which exp() would overflow; series whose
/// largest term passes this are not summable in either precision.
pub(crate) const LN_OVERFLOW: f64 = 690.0;

const NONE_RUN_STOP: usize = 64;

pub(crate) struct SumOutcome {
    pub value: f64,
    /// largest |term| encountered
    pub max_term: f64,
    /// estimate of the truncation error (first omitted term, geometric bound)
    pub trunc: f64,
    pub terms: usize,
    pub converged: bool,
}

#[inline]
pub(crate) fn kahan(sum: &mut f64, comp: &mut f64, term: f64) {
    let y = term - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

/// Sum terms given directly as f64 values.
pub(crate) fn sum_terms_f64(
    mut term: impl FnMut(usize) -> Option<f64>,
    k_max: usize,
) -> SumOutcome {
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut max_term: f64 = 0.0;
    let mut last: f64 = 0.0;
    let mut prev: f64 = 0.0;
    let mut quiet = 0;
    let mut none_run = 0;
    let mut k = 0;
    while k <= k_max {
        match term(k) {
            None => {
                none_run += 1;
                if none_run >= NONE_RUN_STOP {
                    return SumOutcome {
                        value: sum,
                        max_term,
                        trunc: if max_term > 0.0 { last.abs() } else { 0.0 },
                        terms: k + 1,
                        converged: true,
                    };
                }
            }
            Some(t) => {
                none_run = 0;
                if !t.is_finite() {
                    return SumOutcome { value: sum, max_term, trunc: f64::INFINITY, terms: k, converged: false };
                }
                kahan(&mut sum, &mut comp, t);
                max_term = max_term.max(t.abs());
                prev = last;
                last = t;
                if max_term > 0.0
                    && t.abs() <= 1e-17 * (sum.abs() + 1e-300)
                    && t.abs() <= 1e-17 * max_term
                {
                    quiet += 1;
                    if quiet >= 3 && k >= 4 {
                        return SumOutcome { value: sum, max_term, trunc: t.abs(), terms: k + 1, converged: true };
                    }
                } else {
                    quiet = 0;
                }
            }
        }
        k += 1;
    }
    if max_term == 0.0 {
        return SumOutcome { value: 0.0, max_term, trunc: 0.0, terms: k_max + 1, converged: true };
    }
    let ratio = if prev != 0.0 { (last / prev).abs() } else { 1.0 };
    let trunc = if ratio < 0.9 { last.abs() * ratio / (1.0 - ratio) } else { f64::INFINITY };
    SumOutcome { value: sum, max_term, trunc, terms: k_max + 1, converged: trunc.is_finite() }
}

/// Sum terms given in signed-log double-double form.
pub(crate) fn sum_terms_dd(
    mut term: impl FnMut(usize) -> Option<(f64, Dd)>,
    k_max: usize,
) -> SumOutcome {
    let mut sum = Dd::ZERO;
    let mut max_ln = f64::NEG_INFINITY;
    let mut last: f64 = 0.0;
    let mut prev: f64 = 0.0;
    let mut quiet = 0;
    let mut none_run = 0;
    let mut k = 0;
    while k <= k_max {
        match term(k) {
            None => {
                none_run += 1;
                if none_run >= NONE_RUN_STOP {
                    return SumOutcome {
                        value: sum.to_f64(),
                        max_term: if max_ln.is_finite() { max_ln.exp() } else { 0.0 },
                        trunc: if max_ln.is_finite() { last.abs() } else { 0.0 },
                        terms: k + 1,
                        converged: true,
                    };
                }
            }
            Some((sign, ln)) => {
                none_run = 0;
                if ln.hi > LN_OVERFLOW {
                    return SumOutcome {
                        value: sum.to_f64(),
                        max_term: f64::INFINITY,
                        trunc: f64::INFINITY,
                        terms: k,
                        converged: false,
                    };
                }
                let t = ln.exp();
                let t = if sign < 0.0 { -t } else { t };
                sum = sum + t;
                max_ln = max_ln.max(ln.hi);
                prev = last;
                last = t.to_f64();
                if ln.hi < max_ln - 80.0 && last.abs() <= 1e-33 * (sum.to_f64().abs() + 1e-300) {
                    quiet += 1;
                    if quiet >= 3 && k >= 4 {
                        return SumOutcome {
                            value: sum.to_f64(),
                            max_term: max_ln.exp(),
                            trunc: last.abs(),
                            terms: k + 1,
                            converged: true,
                        };
                    }
                } else {
                    quiet = 0;
                }
            }
        }
        k += 1;
    }
    if !max_ln.is_finite() {
        return SumOutcome { value: 0.0, max_term: 0.0, trunc: 0.0, terms: k_max + 1, converged: true };
    }
    let ratio = if prev != 0.0 { (last / prev).abs() } else { 1.0 };
    let trunc = if ratio < 0.9 { last.abs() * ratio / (1.0 - ratio) } else { f64::INFINITY };
    SumOutcome {
        value: sum.to_f64(),
        max_term: max_ln.exp(),
        trunc,
        terms: k_max + 1,
        converged: trunc.is_finite(),
    }
}
