//! Shared quadrature helpers: Gauss-Legendre panels, adaptive bisection with
//! error-carrying integrands, and Euler acceleration of alternating panel
//! sums.

use std::sync::OnceLock;

/// 15-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
/// iteration on the Legendre polynomial.
pub fn gl15() -> &'static ([f64; 15], [f64; 15]) {
    static RULE: OnceLock<([f64; 15], [f64; 15])> = OnceLock::new();
    RULE.get_or_init(|| {
        let mut nodes = [0.0; 15];
        let mut weights = [0.0; 15];
        let n = 15usize;
        for i in 0..n {
            // Chebyshev-like initial guess
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Integrate an error-carrying integrand over [a, b] with one 15-point panel.
/// Returns (value, propagated integrand error).
pub fn gl15_panel<F: FnMut(f64) -> (f64, f64)>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let (nodes, weights) = gl15();
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    let mut err = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        let (v, e) = f(c + h * x);
        acc += w * v;
        err += w * e.abs();
    }
    (acc * h, err * h.abs())
}

/// Adaptive bisection on [a, b]: refine until the two-half estimate agrees
/// with the single panel within `tol_abs`, or the depth cap is hit.
/// Returns (value, error estimate including the integrand's own errors).
pub fn adaptive<F: FnMut(f64) -> (f64, f64)>(f: &mut F, a: f64, b: f64, tol_abs: f64) -> (f64, f64) {
    fn rec<F: FnMut(f64) -> (f64, f64)>(
        f: &mut F,
        a: f64,
        b: f64,
        whole: (f64, f64),
        tol: f64,
        depth: u32,
    ) -> (f64, f64) {
        let m = 0.5 * (a + b);
        let left = gl15_panel(f, a, m);
        let right = gl15_panel(f, m, b);
        let two = left.0 + right.0;
        let disc = (two - whole.0).abs();
        let noise = left.1 + right.1;
        // splitting cannot beat the integrand's own error estimate
        if disc <= tol || disc <= noise || depth >= 24 {
            return (two, disc + noise);
        }
        let l = rec(f, a, m, left, 0.5 * tol, depth + 1);
        let r = rec(f, m, b, right, 0.5 * tol, depth + 1);
        (l.0 + r.0, l.1 + r.1)
    }
    let whole = gl15_panel(f, a, b);
    rec(f, a, b, whole, tol_abs, 0)
}

/// Integrate over [a, inf): geometric panels of ratio 2 starting at width
/// `first`, stopping once two consecutive panels contribute less than
/// `tol_abs` each.  Returns (value, error estimate).
pub fn adaptive_to_infinity<F: FnMut(f64) -> (f64, f64)>(
    f: &mut F,
    a: f64,
    first: f64,
    tol_abs: f64,
) -> (f64, f64) {
    let mut lo = a;
    let mut w = first.max(1e-300);
    let mut acc = 0.0;
    let mut err = 0.0;
    let mut small_run = 0;
    let mut max_panel: f64 = 0.0;
    for k in 0..200 {
        let hi = lo + w;
        let (v, e) = adaptive(f, lo, hi, tol_abs * 0.05);
        acc += v;
        err += e;
        max_panel = max_panel.max(v.abs());
        // don't stop while the panels are still growing toward the mass
        let shrinking = v.abs() <= 0.25 * max_panel || k > 24;
        if v.abs() < tol_abs && shrinking {
            small_run += 1;
            if small_run >= 2 {
                // tail bound: geometric extrapolation of the last panel
                err += v.abs();
                return (acc, err);
            }
        } else {
            small_run = 0;
        }
        lo = hi;
        w *= 2.0;
    }
    (acc, err + tol_abs)
}

/// Euler transformation of a sequence of partial sums of an (eventually)
/// alternating series.  Returns (limit estimate, error estimate).
pub fn euler_accelerate(partial_sums: &[f64], depth: usize) -> (f64, f64) {
    assert!(!partial_sums.is_empty());
    let mut row: Vec<f64> = partial_sums.to_vec();
    let mut prev = *row.last().unwrap();
    let depth = depth.min(row.len().saturating_sub(1));
    for _ in 0..depth {
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
        prev = *row.last().unwrap();
    }
    let est = *row.last().unwrap();
    let err = (est - prev).abs().max(f64::EPSILON * est.abs());
    (est, err)
}
