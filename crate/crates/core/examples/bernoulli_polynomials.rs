//! Multiple Bernoulli polynomials and the values they give at nonpositive integers.

use bizeta::barnes::{barnes_special_value, barnes_zeta, BarnesRequest};
use bizeta::bernoulli::{bernoulli_number, multiple_bernoulli_poly};
use bizeta::ParameterVector;
use num_complex::Complex64;

fn main() -> bizeta::Result<()> {
    println!("B_12 = {}", bernoulli_number(12)?);
    let w = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)];
    let poly = multiple_bernoulli_poly(2, &w)?;
    println!("B_2,2(z | 1, i) coefficients: {:?}", poly.coeffs());

    let omegas = ParameterVector::from_complex(&w)?;
    let z = Complex64::new(0.3, 0.4);
    for m in 1..=3u32 {
        let closed = barnes_special_value(m, z, &omegas)?;
        let req = BarnesRequest::principal(Complex64::new(1.0 - m as f64, 0.0), z, &w)?;
        println!("zeta_2(1-{m}) = {closed}   dispatcher: {}", barnes_zeta(&req, 1e-12)?.value);
    }
    Ok(())
}
