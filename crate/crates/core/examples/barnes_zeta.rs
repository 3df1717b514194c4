//! Barnes double zeta on both sides of the abscissa of convergence, by each route.

use bizeta::barnes::{barnes_zeta_with, BarnesOptions, BarnesRequest, Route};
use num_complex::Complex64;

fn main() -> bizeta::Result<()> {
    let omegas = [Complex64::new(1.0, 0.2), Complex64::new(-0.3, 1.1)];
    let z = Complex64::new(0.35, 0.6);
    for s in [Complex64::new(3.3, 0.5), Complex64::new(0.5, 2.0), Complex64::new(-1.5, 0.0)] {
        let req = BarnesRequest::principal(s, z, &omegas)?;
        println!("s = {s}");
        for route in [Route::Auto, Route::Direct, Route::Fourier, Route::Continuation] {
            let opts = BarnesOptions { route, ..Default::default() };
            match barnes_zeta_with(&req, 1e-12, &opts) {
                Ok(r) => println!("  {route:?}: {} ({}, {} terms)", r.value, r.method.as_str(), r.terms_used),
                Err(e) => println!("  {route:?}: {e}"),
            }
        }
    }
    Ok(())
}
