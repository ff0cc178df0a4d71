//! Real log-gamma in f64 and double-double precision, with sign tracking and
//! the reciprocal-gamma convention 1/Gamma(-k) = 0 used throughout the series
//! compilers.

use crate::dd::{self, Dd};
use std::sync::OnceLock;

/// Lanczos coefficients, g = 607/128, N = 15 (Godfrey).  Relative error of
/// the rational part is ~1e-16 for Re(z) > 0.
pub(crate) const LANCZOS_G: f64 = 4.7421875;
pub(crate) const LANCZOS: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

const HALF_LN_TWO_PI_F: f64 = 0.918938533204672741780329736;

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // reflection keeps the rational part well-conditioned near 0
        return std::f64::consts::PI.ln() - sin_pi(x).ln() - ln_gamma(1.0 - x);
    }
    let mut s = LANCZOS[0];
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (x - 1.0 + k as f64);
    }
    let t = x + LANCZOS_G - 0.5;
    (x - 0.5) * t.ln() - t + HALF_LN_TWO_PI_F + s.ln()
}

/// sin(pi x) with exact reduction, so integers map to exactly 0.
pub fn sin_pi(x: f64) -> f64 {
    let n = (x / 2.0).round();
    let xr = x - 2.0 * n;
    let q = (xr * 2.0).round();
    let f = xr - q * 0.5;
    let u = std::f64::consts::PI * f;
    match q as i64 {
        0 => u.sin(),
        1 => u.cos(),
        -1 => -u.cos(),
        _ => -u.sin(),
    }
}

/// (sign, ln|Gamma(x)|) for any real x; `None` at the poles x = 0, -1, -2, ...
pub fn signed_ln_gamma(x: f64) -> Option<(f64, f64)> {
    if x > 0.0 {
        return Some((1.0, ln_gamma(x)));
    }
    if x == x.floor() {
        return None;
    }
    let s = sin_pi(x);
    let ln_abs = std::f64::consts::PI.ln() - s.abs().ln() - ln_gamma(1.0 - x);
    Some((s.signum(), ln_abs))
}

/// 1/Gamma(x); exactly 0 at the poles of Gamma.
pub fn recip_gamma(x: f64) -> f64 {
    match signed_ln_gamma(x) {
        None => 0.0,
        Some((sign, ln_abs)) => sign * (-ln_abs).exp(),
    }
}

/// Relative distance below which a gamma argument assembled from parameter
/// arithmetic is taken to sit exactly on a pole.
pub const POLE_SNAP: f64 = 5e-10;

/// Like [`signed_ln_gamma`], but arguments within a few hundred ulps of a
/// non-positive integer count as poles.  Series compilers assemble their
/// gamma arguments from expressions like 1 - 2*beta/alpha + 2*beta*s_k/alpha;
/// when those sit mathematically on a pole, f64 rounding would otherwise
/// manufacture a huge spurious value in place of an exact zero.
pub fn signed_ln_gamma_snapped(x: f64) -> Option<(f64, f64)> {
    let nearest = x.round();
    if nearest <= 0.0 && (x - nearest).abs() <= POLE_SNAP * x.abs().max(1.0) {
        return None;
    }
    signed_ln_gamma(x)
}

/// 1/Gamma with the same pole snapping.
pub fn recip_gamma_snapped(x: f64) -> f64 {
    match signed_ln_gamma_snapped(x) {
        None => 0.0,
        Some((sign, ln_abs)) => sign * (-ln_abs).exp(),
    }
}

/// Double-double twin of [`signed_ln_gamma_snapped`].
pub fn signed_ln_gamma_dd_snapped(x: Dd) -> Option<(f64, Dd)> {
    let nearest = x.hi.round();
    if nearest <= 0.0 && (x.hi - nearest).abs() <= POLE_SNAP * x.hi.abs().max(1.0) {
        return None;
    }
    signed_ln_gamma_dd(x)
}

/// Gamma(x) for any non-pole real x.
pub fn gamma(x: f64) -> f64 {
    let (sign, ln_abs) = signed_ln_gamma(x).expect("gamma pole");
    sign * ln_abs.exp()
}

// --- double-double path ------------------------------------------------

// B_{2j} / (2j (2j-1)) for the Stirling series, j = 1..15.
fn stirling_coeffs() -> &'static [Dd; 15] {
    static COEFFS: OnceLock<[Dd; 15]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        [
            Dd::from_ratio(1.0, 12.0),
            Dd::from_ratio(-1.0, 360.0),
            Dd::from_ratio(1.0, 1260.0),
            Dd::from_ratio(-1.0, 1680.0),
            Dd::from_ratio(1.0, 1188.0),
            Dd::from_ratio(-691.0, 360360.0),
            Dd::from_ratio(1.0, 156.0),
            Dd::from_ratio(-3617.0, 122400.0),
            Dd::from_ratio(43867.0, 244188.0),
            Dd::from_ratio(-174611.0, 125400.0),
            Dd::from_ratio(854513.0, 63756.0),
            Dd::from_ratio(-236364091.0, 1507320.0),
            Dd::from_ratio(8553103.0, 3900.0),
            Dd::from_ratio(-23749461029.0, 657720.0),
            Dd::from_ratio(8615841276005.0, 12460140.0),
        ]
    })
}

/// ln Gamma(x) in double-double precision for x > 0.
pub fn ln_gamma_dd(x: Dd) -> Dd {
    debug_assert!(x.hi > 0.0);
    // shift into the Stirling region y >= 30
    let mut y = x;
    let mut prod = Dd::ONE;
    while y.hi < 30.0 {
        prod = prod * y;
        y = y + Dd::ONE;
    }
    let ln_y = y.ln();
    let mut acc = (y - Dd::from_ratio(1.0, 2.0)) * ln_y - y + dd::HALF_LN_TWO_PI;
    let y2 = y * y;
    let mut p = Dd::ONE / y;
    for c in stirling_coeffs() {
        acc = acc + *c * p;
        p = p / y2;
    }
    if prod.hi != 1.0 || prod.lo != 0.0 {
        acc = acc - prod.ln();
    }
    acc
}

/// (sign, ln|Gamma(x)|) in double-double precision; `None` at the poles.
pub fn signed_ln_gamma_dd(x: Dd) -> Option<(f64, Dd)> {
    if x.hi > 0.0 {
        return Some((1.0, ln_gamma_dd(x)));
    }
    let s = x.sin_pi();
    if s.hi == 0.0 {
        return None;
    }
    let ln_abs = dd::LN_PI - s.abs().ln() - ln_gamma_dd(Dd::ONE - x);
    Some((s.hi.signum(), ln_abs))
}
