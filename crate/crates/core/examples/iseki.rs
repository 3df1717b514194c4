//! The multiple Iseki formula: exp(-f'(0)) as a product of extended
//! q-shifted factorials, computed from both sides.

use std::f64::consts::PI;

use bizeta::barnes::{barnes_zeta, BarnesRequest};
use bizeta::bernoulli::multiple_bernoulli;
use bizeta::params::Sign;
use bizeta::qprod::iseki_product;
use bizeta::{DirectedComplex, ParameterVector};
use num_complex::Complex64;

fn main() -> bizeta::Result<()> {
    let omegas = ParameterVector::from_complex(&[Complex64::new(1.0, 0.3), Complex64::new(-0.2, 1.0)])?;
    let z = omegas.get(1)?.to_complex() * 0.4 + omegas.get(2)?.to_complex() * 0.55;
    let zd = DirectedComplex::from_principal(z)?;
    let far = DirectedComplex::from_principal(omegas.sum() - z)?;
    let f = |s: f64| -> bizeta::Result<Complex64> {
        let s = Complex64::new(s, 0.0);
        let a = barnes_zeta(&BarnesRequest::new(s, zd, omegas.clone()), 1e-15)?.value;
        let b = barnes_zeta(&BarnesRequest::new(s, far, omegas.clone()), 1e-15)?.value;
        Ok(a - b)
    };
    let h = 1e-3;
    let df = (8.0 * (f(h)? - f(-h)?) - (f(2.0 * h)? - f(-2.0 * h)?)) / (12.0 * h);
    let b = multiple_bernoulli(2, z, &omegas.values())?;
    let plus = (Complex64::new(0.0, PI / 2.0) * b).exp() * iseki_product(Sign::Plus, &zd, &omegas, 1e-15)?;
    let minus = (Complex64::new(0.0, -PI / 2.0) * b).exp() * iseki_product(Sign::Minus, &zd, &omegas, 1e-15)?;
    println!("exp(-f'(0))   {}", (-df).exp());
    println!("product (+)   {plus}");
    println!("product (-)   {minus}");
    Ok(())
}
