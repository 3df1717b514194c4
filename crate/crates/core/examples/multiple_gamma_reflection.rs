//! Reflection for the multiple gamma function: the product of two gammas with
//! opposite parameter directions against a q-shifted factorial.

use std::f64::consts::PI;

use bizeta::barnes::log_multiple_gamma;
use bizeta::bernoulli::multiple_bernoulli;
use bizeta::qprod::{qpoch_multi, QData};
use bizeta::{DirectedComplex, ParameterVector};
use num_complex::Complex64;

fn main() -> bizeta::Result<()> {
    let tau = Complex64::new(0.25, 1.1);
    let a = 0.3;
    let one = DirectedComplex::new(1.0, 0.0)?;
    let up = ParameterVector::from_complex(&[tau])?;
    let l1 = log_multiple_gamma(&DirectedComplex::new(a, 0.0)?, &up.prepend(one), 1e-14)?;
    let l2 = log_multiple_gamma(&DirectedComplex::new(1.0 - a, 0.0)?, &up.rotate(-PI).prepend(one), 1e-14)?;
    let lhs = (-(l1 + l2)).exp();

    let e = |u: Complex64| (Complex64::new(0.0, 2.0 * PI) * u).exp();
    let b = multiple_bernoulli(2, Complex64::new(a, 0.0), &[Complex64::new(1.0, 0.0), tau])?;
    let rhs = (Complex64::new(0.0, PI / 2.0) * b).exp()
        * qpoch_multi(&QData::new(e(Complex64::new(a, 0.0)), vec![e(tau)]), 1e-15)?;
    println!("1/(Gamma_2 Gamma_2) = {lhs}\nexp(..) (x; q)_inf  = {rhs}\n|diff| = {:e}", (lhs - rhs).norm());
    Ok(())
}
