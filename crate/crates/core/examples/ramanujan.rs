//! Ramanujan's formula for odd zeta values and the Eisenstein series
//! transformation, both read off the double bilateral zeta function.

use std::f64::consts::PI;

use bizeta::bernoulli::bernoulli_number;
use bizeta::bilateral::g_function;
use bizeta::qprod::lambert_sum;
use num_complex::Complex64;

fn main() -> bizeta::Result<()> {
    let tau = Complex64::new(0.2, 1.1);
    for n in 1..=3u32 {
        let shift = bernoulli_number(2 * n as usize)? / (4.0 * n as f64);
        let lhs = lambert_sum(n, -1.0 / tau, 1e-16)? - shift;
        let mut rhs = tau.powi(2 * n as i32) * (lambert_sum(n, tau, 1e-16)? - shift);
        if n == 1 {
            rhs -= tau / Complex64::new(0.0, 4.0 * PI);
        }
        println!("N = {n}: {lhs} vs {rhs}");
    }
    // g(s, τ) at even integers reduces to ζ(2N).
    for k in [2.0, 4.0] {
        println!("g({k}, tau) = {}", g_function(Complex64::new(k, 0.0), tau, 1e-14)?.value);
    }
    Ok(())
}
