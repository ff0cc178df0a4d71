//! Double-double arithmetic: an unevaluated sum of two f64s giving ~31
//! significant digits.  Used to re-sum alternating series whose largest term
//! exceeds the result by more than the f64 noise floor allows.
//!
//! The primitives (two_sum, two_prod via FMA, renormalization) are the
//! classical Dekker/Knuth error-free transformations.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

pub const PI: Dd = Dd { hi: std::f64::consts::PI, lo: 1.2246467991473532e-16 };
pub const LN2: Dd = Dd { hi: std::f64::consts::LN_2, lo: 2.3190468138462996e-17 };
// 0.5*ln(2*pi)
pub const HALF_LN_TWO_PI: Dd = Dd { hi: 0.9189385332046728, lo: -3.8782941580672414e-17 };
// ln(pi)
pub const LN_PI: Dd = Dd { hi: 1.1447298858494002, lo: 1.0265951162707826e-17 };

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact integer ratio p/q (both must be exactly representable).
    pub fn from_ratio(p: f64, q: f64) -> Dd {
        Dd::from_f64(p) / Dd::from_f64(q)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) { -self } else { self }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = if n < 0 { Dd::ONE / self } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// exp(self); overflows to +inf above ~709.
    pub fn exp(self) -> Dd {
        if self.hi > 709.0 {
            return Dd { hi: f64::INFINITY, lo: 0.0 };
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let m = (self.hi / LN2.hi).round();
        let r = self - LN2 * Dd::from_f64(m);
        // Taylor on |r| <= ln2/2
        let mut term = r;
        let mut sum = Dd::ONE + r;
        for k in 2..40 {
            term = term * r / Dd::from_f64(k as f64);
            sum = sum + term;
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        sum.ldexp(m as i32)
    }

    /// Natural log; requires a positive, finite value.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let mut y = Dd::from_f64(self.hi.ln());
        // Newton on exp(y) = x, twice is enough from an f64 seed
        for _ in 0..2 {
            y = y + self * (-y).exp() - Dd::ONE;
        }
        y
    }

    /// sin(pi * self), with exact reduction at (half-)integers.
    pub fn sin_pi(self) -> Dd {
        let n = (self.hi / 2.0).round();
        let xr = self - Dd::from_f64(2.0 * n);
        let q = (xr.hi * 2.0).round();
        let f = xr - Dd::from_f64(q * 0.5);
        let u = PI * f;
        match q as i64 {
            0 => sin_taylor(u),
            1 => cos_taylor(u),
            -1 => -cos_taylor(u),
            _ => -sin_taylor(u),
        }
    }

    fn ldexp(self, e: i32) -> Dd {
        let s = libm_scalbn(1.0, e);
        Dd { hi: self.hi * s, lo: self.lo * s }
    }
}

// 2^e without pulling in libm; e is small in practice.
fn libm_scalbn(x: f64, e: i32) -> f64 {
    x * f64::powi(2.0, e)
}

fn sin_taylor(u: Dd) -> Dd {
    // |u| <= pi/4
    let u2 = u * u;
    let mut term = u;
    let mut sum = u;
    let mut k = 1.0;
    loop {
        term = term * u2 / Dd::from_f64(-(2.0 * k) * (2.0 * k + 1.0));
        sum = sum + term;
        if term.hi.abs() < 1e-35 * (sum.hi.abs() + 1e-300) || k > 30.0 {
            break;
        }
        k += 1.0;
    }
    sum
}

fn cos_taylor(u: Dd) -> Dd {
    let u2 = u * u;
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut k = 1.0;
    loop {
        term = term * u2 / Dd::from_f64(-(2.0 * k - 1.0) * (2.0 * k));
        sum = sum + term;
        if term.hi.abs() < 1e-35 * sum.hi.abs() || k > 30.0 {
            break;
        }
        k += 1.0;
    }
    sum
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (s, e) = quick_two_sum(p1, p2);
        Dd { hi: s, lo: e }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + Dd::from_f64(q3)
    }
}
