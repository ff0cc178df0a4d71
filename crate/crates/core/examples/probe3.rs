use fracdw::mellin::{self, Side};

fn main() {
    let (alpha, beta) = (1.2f64, 0.5f64);
    let tau: f64 = 0.01 * (4000.0f64 / 0.01).powf(23.0 / 59.0);
    let sym = mellin::phi_theorem_symbol(alpha, beta).unwrap();
    let asc = mellin::residue_series(&sym, Side::Left).unwrap();
    println!("terms.len()={}", asc.terms.len());
    let mut nonzero = 0;
    let mut mags: Vec<(usize, f64)> = Vec::new();
    for (i, t) in asc.terms.iter().enumerate() {
        if t.coeff != 0.0 {
            nonzero += 1;
            let m = (t.coeff * tau.powf(t.exponent)).abs();
            if i > 100 && i % 20 == 0 {
                mags.push((i, m));
            }
        }
    }
    println!("nonzero={nonzero}");
    for (i, m) in mags {
        println!("idx={i} |term|={m:.3e}");
    }
    println!("eval: {:?}", asc.eval(tau));
}
