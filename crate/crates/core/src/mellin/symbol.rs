//! Gamma-quotient Mellin symbols
//!
//!     F(s) = c * r^{-s} * prod_i Gamma(a_i + A_i s) / prod_j Gamma(b_j + B_j s)
//!
//! with the operational rules of the Mellin transform, convolution and
//! factoring, strip of analyticity, and the duality map between completely
//! monotone functions and non-negative densities.
//!
//! Symbols are immutable values in canonical form: terms sorted by
//! (slope, offset), identical numerator/denominator terms cancelled.

use crate::eval::{Error, Result};
use crate::gammafn::signed_ln_gamma;
use std::fmt;

/// Tolerance for exact-match cancellation and canonical equality.
pub const CANCEL_TOL: f64 = 1e-12;

/// One factor Gamma(offset + slope * s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaTerm {
    pub offset: f64,
    pub slope: f64,
}

impl GammaTerm {
    pub fn new(offset: f64, slope: f64) -> Result<Self> {
        if slope == 0.0 || !slope.is_finite() || !offset.is_finite() {
            return Err(Error::domain("gamma term requires a finite nonzero slope"));
        }
        Ok(GammaTerm { offset, slope })
    }

    fn matches(&self, other: &GammaTerm) -> bool {
        (self.offset - other.offset).abs() <= CANCEL_TOL && (self.slope - other.slope).abs() <= CANCEL_TOL
    }
}

/// Vertical strip of analyticity (gamma_1, gamma_2); may be half-infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticStrip {
    pub lo: f64,
    pub hi: f64,
}

impl AnalyticStrip {
    pub fn contains(&self, s: f64) -> bool {
        self.lo < s && s < self.hi
    }

    pub fn intersect(&self, other: &AnalyticStrip) -> Option<AnalyticStrip> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo < hi { Some(AnalyticStrip { lo, hi }) } else { None }
    }

    /// Contour abscissa: midpoint of a finite strip, one unit inside a
    /// half-infinite one.
    pub fn default_abscissa(&self) -> f64 {
        match (self.lo.is_finite(), self.hi.is_finite()) {
            (true, true) => 0.5 * (self.lo + self.hi),
            (true, false) => self.lo + 1.0,
            (false, true) => self.hi - 1.0,
            (false, false) => 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaQuotientSymbol {
    prefactor: f64,
    scale_base: f64,
    numerator: Vec<GammaTerm>,
    denominator: Vec<GammaTerm>,
}

impl GammaQuotientSymbol {
    /// Canonical construction: sorts and cancels identical terms.
    pub fn new(
        prefactor: f64,
        scale_base: f64,
        numerator: Vec<GammaTerm>,
        denominator: Vec<GammaTerm>,
    ) -> Result<Self> {
        let raw = Self::new_raw(prefactor, scale_base, numerator, denominator)?;
        Ok(raw.cancelled())
    }

    /// Sorted but uncancelled; used to exhibit pole collisions that
    /// cancellation removes.
    pub fn new_raw(
        prefactor: f64,
        scale_base: f64,
        mut numerator: Vec<GammaTerm>,
        mut denominator: Vec<GammaTerm>,
    ) -> Result<Self> {
        if !(scale_base > 0.0) || !scale_base.is_finite() {
            return Err(Error::domain("scale base must be positive"));
        }
        if !prefactor.is_finite() {
            return Err(Error::domain("prefactor must be finite"));
        }
        sort_terms(&mut numerator);
        sort_terms(&mut denominator);
        Ok(GammaQuotientSymbol { prefactor, scale_base, numerator, denominator })
    }

    /// The empty product: F(s) = 1.
    pub fn unit() -> Self {
        GammaQuotientSymbol { prefactor: 1.0, scale_base: 1.0, numerator: vec![], denominator: vec![] }
    }

    pub fn prefactor(&self) -> f64 {
        self.prefactor
    }

    pub fn scale_base(&self) -> f64 {
        self.scale_base
    }

    pub fn numerator(&self) -> &[GammaTerm] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[GammaTerm] {
        &self.denominator
    }

    /// Cancel terms appearing (within CANCEL_TOL) in both numerator and
    /// denominator, one-for-one.
    pub fn cancelled(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        let mut i = 0;
        while i < num.len() {
            if let Some(j) = den.iter().position(|d| d.matches(&num[i])) {
                den.remove(j);
                num.remove(i);
            } else {
                i += 1;
            }
        }
        GammaQuotientSymbol {
            prefactor: self.prefactor,
            scale_base: self.scale_base,
            numerator: num,
            denominator: den,
        }
    }

    /// Rule (scale): f(at) <-> a^{-s} f*(s), a > 0.
    pub fn rule_scale(&self, a: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::domain("rule_scale requires a > 0"));
        }
        let mut out = self.clone();
        out.scale_base *= a;
        Ok(out)
    }

    /// Rule (power multiply): t^alpha f(t) <-> f*(s + alpha).
    pub fn rule_power_mul(&self, alpha: f64) -> Self {
        let mut out = self.clone();
        for t in out.numerator.iter_mut().chain(out.denominator.iter_mut()) {
            t.offset += t.slope * alpha;
        }
        out.prefactor *= out.scale_base.powf(-alpha);
        sort_terms(&mut out.numerator);
        sort_terms(&mut out.denominator);
        out
    }

    /// Rule (power argument): f(t^alpha) <-> |alpha|^{-1} f*(s/alpha), alpha != 0.
    pub fn rule_power_arg(&self, alpha: f64) -> Result<Self> {
        if alpha == 0.0 {
            return Err(Error::domain("rule_power_arg requires alpha != 0"));
        }
        let mut out = self.clone();
        for t in out.numerator.iter_mut().chain(out.denominator.iter_mut()) {
            t.slope /= alpha;
        }
        out.prefactor /= alpha.abs();
        out.scale_base = out.scale_base.powf(1.0 / alpha);
        sort_terms(&mut out.numerator);
        sort_terms(&mut out.denominator);
        Ok(out)
    }

    /// Mellin convolution: the product symbol.  Requires intersecting strips.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        let s1 = self.strip()?;
        let s2 = other.strip()?;
        if s1.intersect(&s2).is_none() {
            return Err(Error::EmptyStrip);
        }
        let mut num = self.numerator.clone();
        num.extend_from_slice(&other.numerator);
        let mut den = self.denominator.clone();
        den.extend_from_slice(&other.denominator);
        GammaQuotientSymbol::new(
            self.prefactor * other.prefactor,
            self.scale_base * other.scale_base,
            num,
            den,
        )
    }

    /// Quotient symbol: convolve(base, result) reproduces `self` after
    /// cancellation.
    pub fn factor_divide(&self, base: &Self) -> Self {
        let mut num = self.numerator.clone();
        num.extend_from_slice(&base.denominator);
        let mut den = self.denominator.clone();
        den.extend_from_slice(&base.numerator);
        GammaQuotientSymbol::new_raw(
            self.prefactor / base.prefactor,
            self.scale_base / base.scale_base,
            num,
            den,
        )
        .expect("division of valid symbols")
        .cancelled()
    }

    /// Same as `factor_divide` but without cancellation, exposing pole
    /// collisions the cancelled form removes.
    pub fn factor_divide_raw(&self, base: &Self) -> Self {
        let mut num = self.numerator.clone();
        num.extend_from_slice(&base.denominator);
        let mut den = self.denominator.clone();
        den.extend_from_slice(&base.numerator);
        GammaQuotientSymbol::new_raw(
            self.prefactor / base.prefactor,
            self.scale_base / base.scale_base,
            num,
            den,
        )
        .expect("division of valid symbols")
    }

    /// Strip of analyticity from the numerator pole families:
    /// lo = max over slope > 0 of -offset/slope, hi = min over slope < 0 of
    /// offset/(-slope); infinite when the family is empty.
    pub fn strip(&self) -> Result<AnalyticStrip> {
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for t in &self.numerator {
            if t.slope > 0.0 {
                lo = lo.max(-t.offset / t.slope);
            } else {
                hi = hi.min(t.offset / (-t.slope));
            }
        }
        if lo >= hi {
            return Err(Error::EmptyStrip);
        }
        Ok(AnalyticStrip { lo, hi })
    }

    fn substitute_one_minus_s(&self) -> Self {
        // s -> 1-s flips (offset, slope) to (offset+slope, -slope) and
        // inverts the scale base: r^{-(1-s)} = (1/r) * (1/r)^{-s}
        let flip = |terms: &[GammaTerm]| -> Vec<GammaTerm> {
            let mut v: Vec<GammaTerm> = terms
                .iter()
                .map(|t| GammaTerm { offset: t.offset + t.slope, slope: -t.slope })
                .collect();
            sort_terms(&mut v);
            v
        };
        GammaQuotientSymbol {
            prefactor: self.prefactor / self.scale_base,
            scale_base: 1.0 / self.scale_base,
            numerator: flip(&self.numerator),
            denominator: flip(&self.denominator),
        }
    }

    /// Bernstein duality: s -> Gamma(s) * self(1-s).  Maps the symbol of a
    /// non-negative density to the symbol of a completely monotone function.
    pub fn cm_dual(&self) -> Self {
        let mut out = self.substitute_one_minus_s();
        out.numerator.push(GammaTerm { offset: 0.0, slope: 1.0 });
        sort_terms(&mut out.numerator);
        out.cancelled()
    }

    /// Inverse duality: s -> self(1-s) / Gamma(1-s).
    pub fn cm_dual_inverse(&self) -> Self {
        let mut out = self.substitute_one_minus_s();
        out.denominator.push(GammaTerm { offset: 1.0, slope: -1.0 });
        sort_terms(&mut out.denominator);
        out.cancelled()
    }

    /// Canonical-form equality within `tol` on prefactor, scale and terms.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if (self.prefactor - other.prefactor).abs() > tol * self.prefactor.abs().max(1.0) {
            return false;
        }
        if (self.scale_base - other.scale_base).abs() > tol * self.scale_base.abs().max(1.0) {
            return false;
        }
        let eq_terms = |a: &[GammaTerm], b: &[GammaTerm]| {
            a.len() == b.len()
                && a.iter()
                    .zip(b)
                    .all(|(x, y)| (x.offset - y.offset).abs() <= tol && (x.slope - y.slope).abs() <= tol)
        };
        eq_terms(&self.numerator, &other.numerator) && eq_terms(&self.denominator, &other.denominator)
    }

    /// Numerical value of the gamma quotient at real s inside the strip
    /// (denominator poles give 0 by the reciprocal-gamma convention).
    pub fn eval_real(&self, s: f64) -> Result<f64> {
        let mut sign = self.prefactor.signum();
        let mut ln = self.prefactor.abs().ln() - s * self.scale_base.ln();
        for t in &self.numerator {
            match signed_ln_gamma(t.offset + t.slope * s) {
                None => return Err(Error::Pole { at: t.offset + t.slope * s }),
                Some((sg, l)) => {
                    sign *= sg;
                    ln += l;
                }
            }
        }
        for t in &self.denominator {
            match signed_ln_gamma(t.offset + t.slope * s) {
                None => return Ok(0.0),
                Some((sg, l)) => {
                    sign *= sg;
                    ln -= l;
                }
            }
        }
        Ok(sign * ln.exp())
    }
}

fn sort_terms(terms: &mut [GammaTerm]) {
    terms.sort_by(|a, b| {
        a.slope
            .total_cmp(&b.slope)
            .then_with(|| a.offset.total_cmp(&b.offset))
    });
}

impl fmt::Display for GammaQuotientSymbol {
    /// Stable text form: `c * r^{-s} * Γ(a+A s)···/ Γ(b+B s)···`.
    /// The scale factor is omitted when r = 1, the denominator when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefactor)?;
        if self.scale_base != 1.0 {
            write!(f, " * {}^{{-s}}", self.scale_base)?;
        }
        let write_term = |f: &mut fmt::Formatter<'_>, t: &GammaTerm| -> fmt::Result {
            if t.slope >= 0.0 {
                write!(f, "Γ({} + {} s)", t.offset, t.slope)
            } else {
                write!(f, "Γ({} - {} s)", t.offset, -t.slope)
            }
        };
        for t in &self.numerator {
            write!(f, " * ")?;
            write_term(f, t)?;
        }
        if !self.denominator.is_empty() {
            write!(f, " /")?;
            for t in &self.denominator {
                write!(f, " ")?;
                write_term(f, t)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(offset: f64, slope: f64) -> GammaTerm {
        GammaTerm::new(offset, slope).unwrap()
    }

    fn gamma_s() -> GammaQuotientSymbol {
        GammaQuotientSymbol::new(1.0, 1.0, vec![gs(0.0, 1.0)], vec![]).unwrap()
    }

    #[test]
    fn scale_rule_and_inverse() {
        let sym = gamma_s();
        let scaled = sym.rule_scale(3.0).unwrap();
        assert_eq!(scaled.scale_base(), 3.0);
        let back = scaled.rule_scale(1.0 / 3.0).unwrap();
        assert!(back.approx_eq(&sym, 1e-14));
        assert!(sym.rule_scale(0.0).is_err());
        assert!(sym.rule_scale(1.0).unwrap().approx_eq(&sym, 0.0));
    }

    #[test]
    fn power_mul_shifts_offsets() {
        let sym = gamma_s();
        let shifted = sym.rule_power_mul(0.7);
        assert_eq!(shifted.numerator()[0].offset, 0.7);
        let back = shifted.rule_power_mul(-0.7);
        assert!(back.approx_eq(&sym, 1e-14));
    }

    #[test]
    fn power_arg_divides_slopes() {
        // exp symbol Gamma(s) under t -> t^alpha: (1/|alpha|) Gamma(s/alpha)
        let sym = gamma_s();
        let a = sym.rule_power_arg(2.0).unwrap();
        assert_eq!(a.prefactor(), 0.5);
        assert_eq!(a.numerator()[0].slope, 0.5);
        let back = a.rule_power_arg(0.5).unwrap();
        assert!(back.approx_eq(&sym, 1e-14));
        assert!(sym.rule_power_arg(0.0).is_err());
    }

    #[test]
    fn convolve_unit_is_identity() {
        let sym = gamma_s();
        let u = GammaQuotientSymbol::unit();
        assert!(sym.convolve(&u).unwrap().approx_eq(&sym, 0.0));
    }

    #[test]
    fn divide_then_convolve_round_trips() {
        let target = GammaQuotientSymbol::new(
            2.0,
            1.5,
            vec![gs(0.0, 0.5), gs(0.25, -0.5)],
            vec![gs(1.0, 0.25)],
        )
        .unwrap();
        let base = GammaQuotientSymbol::new(0.5, 3.0, vec![gs(0.0, 0.5)], vec![]).unwrap();
        let quotient = target.factor_divide(&base);
        let rebuilt = base.convolve(&quotient).unwrap();
        assert!(rebuilt.approx_eq(&target, 1e-12), "{rebuilt} vs {target}");
        let self_div = target.factor_divide(&target);
        assert!(self_div.approx_eq(&GammaQuotientSymbol::unit(), 1e-12));
    }

    #[test]
    fn strip_of_gamma_s() {
        let s = gamma_s().strip().unwrap();
        assert_eq!(s.lo, 0.0);
        assert_eq!(s.hi, f64::INFINITY);
        assert_eq!(s.default_abscissa(), 1.0);
    }

    #[test]
    fn empty_strip_is_an_error() {
        // Gamma(-1+s) Gamma(-1-s): strip would be (1, -1)
        let sym = GammaQuotientSymbol::new(1.0, 1.0, vec![gs(-1.0, 1.0), gs(-1.0, -1.0)], vec![]);
        assert!(matches!(sym.unwrap().strip(), Err(Error::EmptyStrip)));
    }

    #[test]
    fn cm_dual_round_trip() {
        let sym = GammaQuotientSymbol::new(
            0.7,
            2.0,
            vec![gs(0.3, 0.5)],
            vec![gs(1.0, -0.25)],
        )
        .unwrap();
        let back = sym.cm_dual().cm_dual_inverse();
        assert!(back.approx_eq(&sym, 1e-13), "{back} vs {sym}");
    }

    #[test]
    fn eval_real_matches_direct_gammas() {
        let sym = GammaQuotientSymbol::new(2.0, 3.0, vec![gs(0.0, 1.0)], vec![gs(0.5, 1.0)]).unwrap();
        let s = 1.3;
        let expect = 2.0 * 3.0f64.powf(-s) * crate::gammafn::gamma(s) / crate::gammafn::gamma(0.5 + s);
        let got = sym.eval_real(s).unwrap();
        assert!((got - expect).abs() < 1e-13 * expect.abs());
    }

    #[test]
    fn display_format_is_stable() {
        let sym = GammaQuotientSymbol::new(2.0, 3.0, vec![gs(0.5, 1.0)], vec![gs(1.0, -0.5)]).unwrap();
        assert_eq!(format!("{sym}"), "2 * 3^{-s} * Γ(0.5 + 1 s) / Γ(1 - 0.5 s)");
    }
}
