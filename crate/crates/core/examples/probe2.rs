fn main() {
    let suite = std::env::args().nth(1).unwrap();
    let t0 = std::time::Instant::now();
    let checks = fracdw::verify::run_suite(&suite, None).unwrap();
    for c in &checks {
        println!(
            "{} / {}: {} (observed {:.3e}, bound {:.1e}) [{:.1}s cum]",
            c.suite, c.name, if c.passed { "pass" } else { "FAIL" }, c.observed, c.bound,
            t0.elapsed().as_secs_f64()
        );
    }
}
