//! Barnes zeta values against brute-force lattice sums and known constants.

use std::f64::consts::PI;

use bizeta::barnes::{
    barnes_zeta_continued, barnes_zeta_direct, barnes_zeta_with, BarnesOptions, BarnesRequest, Route,
};
use bizeta::{DirectedComplex, ParameterVector};
use num_complex::Complex64;

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn basel() {
    let req = BarnesRequest::principal(Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0), &[Complex64::new(1.0, 0.0)])
        .unwrap();
    let v = barnes_zeta_direct(&req, 1e-14).unwrap().value;
    assert!((v.re - PI * PI / 6.0).abs() < 1e-14 && v.im == 0.0);
}

/// Square box sums `S(M)` over `0 ≤ m_1, m_2 < M` have tails `A M^{-2} + B M^{-3} + ...`
/// for `s = 4`; two Richardson steps over `M, 2M, 4M` remove both.
#[test]
fn double_sum_brute_force() {
    let w = [Complex64::from_polar(1.0, PI / 6.0), Complex64::from_polar(1.0, PI / 3.0)];
    let z = w[0] + w[1];
    let box_sum = |m: usize| -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for i in 0..m {
            let mut row = Complex64::new(0.0, 0.0);
            for j in 0..m {
                row += (z + w[0] * i as f64 + w[1] * j as f64).powi(-4);
            }
            total += row;
        }
        total
    };
    let m = 1000;
    let (s1, s2, s4) = (box_sum(m), box_sum(2 * m), box_sum(4 * m));
    let r1 = (s2 * 4.0 - s1) / 3.0;
    let r2 = (s4 * 4.0 - s2) / 3.0;
    let oracle = (r2 * 8.0 - r1) / 7.0;
    let req = BarnesRequest::principal(Complex64::new(4.0, 0.0), z, &w).unwrap();
    let v = barnes_zeta_direct(&req, 1e-14).unwrap().value;
    assert!(rel(v, oracle) < 1e-10, "{v} vs {oracle}");
}

/// `ζ_2(s, z | 1, 1) = ζ(s-1, z) - (z-1) ζ(s, z)` with Hurwitz values from the rank-one path.
#[test]
fn equal_parameters_reduce_to_hurwitz() {
    let z = Complex64::new(0.6, 0.3);
    let one = [Complex64::new(1.0, 0.0)];
    for s in [Complex64::new(3.4, 0.7), Complex64::new(-0.6, 1.2)] {
        let h =
            |s: Complex64| barnes_zeta_continued(&BarnesRequest::principal(s, z, &one).unwrap(), 1e-14).unwrap().value;
        let want = h(s - 1.0) - (z - 1.0) * h(s);
        let two = BarnesRequest::principal(s, z, &[one[0], one[0]]).unwrap();
        let got = barnes_zeta_continued(&two, 1e-14).unwrap().value;
        assert!(rel(got, want) < 1e-11, "s = {s}: {got} vs {want}");
    }
}

/// Rotating every argument by a full turn multiplies the value by `e^{-2πis}`,
/// on every route, up to the reported error estimates.
#[test]
fn full_turn_changes_the_branch() {
    let w = [Complex64::new(0.9, 0.4), Complex64::new(-0.2, 1.1)];
    let z = w[0] * 0.4 + w[1] * 0.3;
    let omegas = ParameterVector::from_complex(&w).unwrap();
    let zd = DirectedComplex::from_principal(z).unwrap();
    for (s, route) in [
        (Complex64::new(3.3, 0.4), Route::Direct),
        (Complex64::new(0.7, -0.5), Route::Fourier),
        (Complex64::new(-1.2, 0.3), Route::Continuation),
    ] {
        let opts = BarnesOptions { route, ..Default::default() };
        let base = barnes_zeta_with(&BarnesRequest::new(s, zd, omegas.clone()), 1e-14, &opts).unwrap();
        let turned = BarnesRequest::new(s, zd.rotate(2.0 * PI), omegas.rotate(2.0 * PI));
        let v = barnes_zeta_with(&turned, 1e-14, &opts).unwrap();
        let factor = (Complex64::new(0.0, -2.0 * PI) * s).exp();
        let bound = v.err_estimate + base.err_estimate * factor.norm() + 1e-13 * v.value.norm();
        let diff = (v.value - base.value * factor).norm();
        assert!(diff <= bound, "{route:?}: {} vs {}, diff {diff:e} > {bound:e}", v.value, base.value * factor);
        assert!(rel(v.value, base.value * factor) < 1e-9);
    }
}
