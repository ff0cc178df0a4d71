//! Finite-difference test of complete monotonicity: a completely monotone
//! function has (-1)^k Delta_h^k f(lambda) >= 0 for every order k and every
//! lambda > 0.  High-order differences amplify rounding, so signs are judged
//! against a tolerance relative to the local function scale.

/// Relative tolerance for sign checks; forward differences of order 8 lose
/// roughly 8 bits to cancellation on top of the evaluator noise.
pub const TOL_CM: f64 = 1e-7;

#[derive(Debug, Clone)]
pub struct CmRow {
    pub lambda: f64,
    /// (-1)^k Delta_h^k f(lambda) for k = 0..=max_order
    pub signed_differences: Vec<f64>,
    /// local function scale used for the sign tolerance
    pub scale: f64,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct CmReport {
    pub rows: Vec<CmRow>,
    pub max_order: usize,
    pub h: f64,
    pub all_nonnegative: bool,
}

/// Evaluate (-1)^k Delta_h^k f on every grid point for k <= max_order.
///
/// Grid points must be positive and stay positive across the stencil; the
/// report carries the per-point outcome rather than failing.
pub fn cm_difference_test(
    f: impl Fn(f64) -> f64,
    max_order: usize,
    grid: &[f64],
    h: f64,
) -> CmReport {
    assert!(h > 0.0, "cm_difference_test requires h > 0");
    let mut rows = Vec::with_capacity(grid.len());
    let mut all_ok = true;
    for &lambda in grid {
        assert!(lambda > 0.0, "cm_difference_test grid must be positive");
        let mut samples: Vec<f64> = (0..=max_order).map(|i| f(lambda + i as f64 * h)).collect();
        let scale = samples.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
        let mut signed = Vec::with_capacity(max_order + 1);
        signed.push(samples[0]);
        // iterated forward differences with alternating sign applied
        for k in 1..=max_order {
            for i in 0..samples.len() - 1 {
                samples[i] = samples[i + 1] - samples[i];
            }
            samples.pop();
            let val = if k % 2 == 0 { samples[0] } else { -samples[0] };
            signed.push(val);
        }
        let ok = signed.iter().all(|&v| v >= -TOL_CM * scale);
        all_ok &= ok;
        rows.push(CmRow { lambda, signed_differences: signed, scale, ok });
    }
    CmReport { rows, max_order, h, all_nonnegative: all_ok }
}
