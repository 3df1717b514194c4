//! The bilateral zeta function from its defining pair of Barnes sums and from
//! its q-series expansion, plus the trivial zeros at nonpositive integers.

use bizeta::bilateral::{xi, xi_series, BilateralRequest};
use bizeta::{DirectedComplex, ParameterVector};
use num_complex::Complex64;

fn main() -> bizeta::Result<()> {
    let omega0 = DirectedComplex::new(1.0, std::f64::consts::PI)?;
    let omegas = ParameterVector::from_complex(&[Complex64::new(0.4, 1.0)])?;
    let z = DirectedComplex::from_principal(Complex64::new(0.2, 0.7))?;
    let req = BilateralRequest::new(Complex64::new(4.2, 0.3), z, omega0, omegas)?;
    let a = xi_series(&req, 1e-14)?.value;
    let b = xi(&req, 1e-14)?.value;
    println!("series  {a}\nfourier {b}\n|diff|  {:e}", (a - b).norm());
    for m in 1..=3 {
        let v = xi(&req.with_s(Complex64::new(1.0 - m as f64, 0.0)), 1e-14)?.value;
        println!("xi(1-{m}) = {v}");
    }
    Ok(())
}
