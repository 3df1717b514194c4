//! The Dedekind eta function and its inversion under τ -> -1/τ.

use bizeta::qprod::dedekind_eta;
use num_complex::Complex64;

fn main() -> bizeta::Result<()> {
    let i = Complex64::new(0.0, 1.0);
    for tau in [i, Complex64::new(0.3, 1.2), Complex64::new(-0.4, 0.8), Complex64::new(1.7, 0.6)] {
        let lhs = dedekind_eta(-1.0 / tau, 1e-16)?;
        let rhs = (tau / i).sqrt() * dedekind_eta(tau, 1e-16)?;
        println!("tau = {tau:<12}  eta(-1/tau) = {lhs:.15}  residual {:e}", (lhs - rhs).norm());
    }
    Ok(())
}
