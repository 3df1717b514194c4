//! Why arguments are carried explicitly: the same point with two arguments
//! gives different powers and different zeta values.

use std::f64::consts::PI;

use bizeta::barnes::{barnes_zeta, BarnesRequest};
use bizeta::{cpow, DirectedComplex, ParameterVector, Turn};
use num_complex::Complex64;

fn main() -> bizeta::Result<()> {
    let s = Complex64::new(0.5, 0.0);
    let up = DirectedComplex::new(1.0, PI)?;
    let down = DirectedComplex::new(1.0, -PI)?;
    println!("(e^(πi))^(1/2) = {}   (e^(-πi))^(1/2) = {}", cpow(&up, s), cpow(&down, s));

    let omegas = ParameterVector::from_complex(&[Complex64::new(0.9, 0.4)])?;
    let z = DirectedComplex::from_principal(Complex64::new(0.3, 0.5))?;
    let s = Complex64::new(2.5, 0.0);
    for turn in [Turn::Up, Turn::Down] {
        let w = omegas.neg_all(turn);
        let zt = z.rotate(turn.angle());
        let v = barnes_zeta(&BarnesRequest::new(s, zt, w), 1e-13)?.value;
        println!("{turn:?}: zeta_1(s, e^(±πi) z | e^(±πi) ω) = {v}");
    }
    Ok(())
}
