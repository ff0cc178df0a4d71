use super::*;
use crate::greens::{g_eval, FDWParams};
use crate::specfun::four_param_wright_eval;
use crate::specfun::FourParamOrder;

fn pt(r: f64, t: f64) -> RadialPoint {
    RadialPoint::new(r, t).unwrap()
}

/// W_{1/2,-1/2}(-x) = exp(-x^2/4)/sqrt(pi) turns the gamma = 1/2 kernel into
/// a Gaussian density in s.
#[test]
fn wright_kernel_half_is_gaussian() {
    let r = kernel_wright(0.5, 1.0, 1.0).unwrap();
    let expect = (-0.25f64).exp() / std::f64::consts::PI.sqrt();
    assert!((r.value - expect).abs() < 1e-12, "{} vs {expect}", r.value);
    // s -> 0+ limit: 1/Gamma(1 - gamma) = 1/sqrt(pi)
    let r = kernel_wright(0.5, 1e-12, 1.0).unwrap();
    assert!((r.value - 1.0 / std::f64::consts::PI.sqrt()).abs() < 1e-10);
}

#[test]
fn wright_kernel_rejects_bad_gamma() {
    assert!(kernel_wright(1.0, 1.0, 1.0).is_err());
    assert!(kernel_wright(0.0, 1.0, 1.0).is_err());
}

#[test]
fn general_kernel_reductions() {
    // delta = 1: alpha tau^(alpha-n) W_{1-b,-b}(-tau^alpha)
    let (alpha, beta, n) = (1.5, 0.4, 2u32);
    for &tau in &[0.3, 1.0, 2.0] {
        let a = kernel_general(alpha, beta, 1.0, n, tau).unwrap();
        let w = wright_eval(&WrightOrder::new(1.0 - beta, -beta).unwrap(), -tau.powf(alpha)).unwrap();
        let expect = alpha * tau.powf(alpha - n as f64) * w.value;
        assert!((a.value - expect).abs() <= a.abs_err + 1e-12);
    }
    // delta = alpha/2, n = 2: 2 W_{1-2b/a,-2b/a}(-tau^2)
    let (alpha, beta) = (1.6, 0.5);
    for &tau in &[0.4, 1.1] {
        let a = kernel_general(alpha, beta, alpha / 2.0, 2, tau).unwrap();
        let g = 2.0 * beta / alpha;
        let w = wright_eval(&WrightOrder::new(1.0 - g, -g).unwrap(), -tau * tau).unwrap();
        assert!((a.value - 2.0 * w.value).abs() <= a.abs_err + 1e-12);
    }
}

#[test]
fn example1_is_wright_ratio_at_beta_one() {
    for &t in &[0.4, 1.0, 3.0] {
        let a = kernel_example1(0.6, 1.0, t).unwrap();
        let b = kernel_wright(0.6, t, 1.0).unwrap();
        assert!((a.value - b.value).abs() <= a.abs_err + b.abs_err + 1e-13);
    }
    assert!(kernel_example1(1.0, 1.0, 1.0).is_err());
    assert!(kernel_example1(0.5, 0.4, 1.0).is_err());
}

/// Remark-6 form of the beta = 1 kernel: D(s|t) = s^{-1} W_{0,-a/2}(-s^(-a/2) t).
#[test]
fn theorem_kernel_beta_one_matches_remark_form() {
    let alpha = 1.2;
    let k = Kernel::new(KernelSpec::TheoremPhi { alpha, beta: 1.0 }).unwrap();
    let w = WrightOrder::new(0.0, -0.5 * alpha).unwrap();
    for &(s, t) in &[(0.5, 1.0), (2.0, 1.0), (1.3, 0.7)] {
        let d = k.density(s, t).unwrap();
        let expect = wright_eval(&w, -s.powf(-0.5 * alpha) * t).unwrap();
        assert!(
            (d.value - expect.value / s).abs() <= d.abs_err + expect.abs_err / s + 1e-12,
            "s={s} t={t}: {} vs {}",
            d.value,
            expect.value / s
        );
    }
}

/// Index-shift identity for the descending kernel series.  The shifted form
/// carries (1+beta, beta) in the first parameter pair: the k = 0 term of the
/// unshifted series vanishes at the Gamma(0) pole, and moving k -> k+1 turns
/// Gamma(1 + beta(k+1)) into Gamma((1+beta) + beta k).
#[test]
fn remark_two_index_shift() {
    let (alpha, beta) = (1.5, 0.9);
    let lhs_order = FourParamOrder::new(1.0, beta, 0.0, -0.5 * alpha).unwrap();
    let rhs_order = FourParamOrder::new(1.0 + beta, beta, -0.5 * alpha, -0.5 * alpha).unwrap();
    for i in 0..8 {
        let tau = 1.5 + 48.5 * i as f64 / 7.0;
        let w = -tau.powf(-0.5 * alpha);
        let lhs = four_param_wright_eval(&lhs_order, w).unwrap();
        let rhs = four_param_wright_eval(&rhs_order, w).unwrap();
        let left = lhs.value / tau;
        let right = -tau.powf(-1.0 - 0.5 * alpha) * rhs.value;
        assert!(
            (left - right).abs() <= 1e-10 * left.abs().max(1e-15) + lhs.abs_err + rhs.abs_err,
            "tau={tau}: {left} vs {right}"
        );
    }
}

#[test]
fn theorem_subordination_reproduces_g() {
    // Gaussian base, n = 1; both case (i) and case (ii) parameters
    for &(alpha, beta) in &[(2.0, 0.6), (1.5, 0.9)] {
        let kernel = KernelSpec::TheoremPhi { alpha, beta };
        let base = BaseSolution::Gaussian { n: 1 };
        let point = pt(1.0, 1.0);
        let sub = subordinate(&kernel, &base, &point, 1e-7).unwrap();
        let p = FDWParams::new(alpha, beta, 1).unwrap();
        let direct = g_eval(&p, &point, 1e-9).unwrap();
        assert!(
            (sub.value - direct.value).abs() <= 1e-6_f64.max(sub.abs_err + direct.abs_err),
            "alpha={alpha} beta={beta}: {} vs {}",
            sub.value,
            direct.value
        );
    }
}

#[test]
fn wright_ratio_subordination_reproduces_g() {
    // G_{1.5, 0.5, 1} from the beta = 1 base
    let kernel = KernelSpec::WrightRatio { gamma_ratio: 0.5 };
    let base = BaseSolution::SpaceFractional { alpha: 1.5, n: 1 };
    let point = pt(0.8, 1.3);
    let sub = subordinate(&kernel, &base, &point, 1e-7).unwrap();
    let p = FDWParams::new(1.5, 0.5, 1).unwrap();
    let direct = g_eval(&p, &point, 1e-9).unwrap();
    assert!(
        (sub.value - direct.value).abs() <= 1e-6_f64.max(sub.abs_err + direct.abs_err),
        "{} vs {}",
        sub.value,
        direct.value
    );
}

#[test]
fn two_dim_base_subordination() {
    // G_{1.6, 0.5, 2} over the 2-d alpha-fractional base, gamma = 2 beta/alpha
    let (alpha, beta) = (1.6, 0.5);
    let kernel = KernelSpec::WrightRatio { gamma_ratio: 2.0 * beta / alpha };
    let base = BaseSolution::TwoDimAlpha { alpha };
    let point = pt(1.0, 1.0);
    let sub = subordinate(&kernel, &base, &point, 1e-7).unwrap();
    let p = FDWParams::new(alpha, beta, 2).unwrap();
    let direct = g_eval(&p, &point, 1e-9).unwrap();
    assert!(
        (sub.value - direct.value).abs() <= 1e-6_f64.max(sub.abs_err + direct.abs_err),
        "{} vs {}",
        sub.value,
        direct.value
    );
}

#[test]
fn incompatible_pairs_are_rejected() {
    let kernel = KernelSpec::TheoremPhi { alpha: 1.5, beta: 0.6 };
    let base = BaseSolution::SpaceFractional { alpha: 1.5, n: 1 };
    assert!(matches!(
        subordinate(&kernel, &base, &pt(1.0, 1.0), 1e-6),
        Err(Error::IncompatiblePair(_))
    ));
    let kernel = KernelSpec::ExampleOnePdf { alpha: 0.5, beta: 1.0 };
    assert!(matches!(
        subordinate(&kernel, &BaseSolution::Gaussian { n: 1 }, &pt(1.0, 1.0), 1e-6),
        Err(Error::IncompatiblePair(_))
    ));
    let kernel = KernelSpec::GeneralPhi { alpha: 1.5, beta: 0.5, delta: 1.0, n: 2 };
    assert!(target_orders(&kernel, &BaseSolution::SpaceFractional { alpha: 1.5, n: 2 }).is_ok());
    assert!(target_orders(&kernel, &BaseSolution::SpaceFractional { alpha: 1.4, n: 2 }).is_err());
}

#[test]
fn kernel_masses_are_one() {
    let cases: Vec<(KernelSpec, f64)> = vec![
        (KernelSpec::WrightRatio { gamma_ratio: 0.3 }, 1.0),
        (KernelSpec::WrightRatio { gamma_ratio: 0.7 }, 2.0),
        (KernelSpec::TheoremPhi { alpha: 1.0, beta: 0.5 }, 1.0),
        (KernelSpec::TheoremPhi { alpha: 2.0, beta: 0.6 }, 0.5),
        (KernelSpec::TheoremPhi { alpha: 1.5, beta: 0.9 }, 1.0),
        (KernelSpec::GeneralPhi { alpha: 1.5, beta: 0.5, delta: 1.0, n: 2 }, 1.0),
        (KernelSpec::ExampleOnePdf { alpha: 0.5, beta: 1.0 }, 1.0),
        (KernelSpec::ExampleOnePdf { alpha: 0.7, beta: 1.2 }, 1.0),
    ];
    for (spec, t) in cases {
        let report = pdf_verify(&spec, t).unwrap();
        assert!(
            (report.mass - 1.0).abs() <= 1e-8 + report.mass_abs_err,
            "{spec:?} t={t}: mass = {} +/- {}",
            report.mass,
            report.mass_abs_err
        );
        assert!(
            report.min_sampled >= -1e-10,
            "{spec:?}: min sampled {}",
            report.min_sampled
        );
    }
}

#[test]
fn laplace_identity() {
    let lambdas = [0.1, 0.5, 1.0, 2.0, 5.0];
    for &(alpha, beta) in &[(2.0, 0.5), (1.0, 0.5), (1.5, 0.75)] {
        let worst = laplace_verify(alpha, beta, &lambdas).unwrap();
        assert!(worst <= 1e-7, "alpha={alpha} beta={beta}: rel err {worst}");
    }
}
