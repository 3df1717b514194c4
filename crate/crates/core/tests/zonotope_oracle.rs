//! Membership in the open zonotope `D = {Σ a_k ω_k : 0 < a_k < 1}` against an
//! independent oracle: fix `a_r = t`, solve for `(a_1, a_2)` as affine
//! functions of `t`, and intersect the resulting intervals for `t`.

use bizeta::params::in_cone_d;
use bizeta::{Error, ParameterVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Signed margin of the best representation: positive inside, negative outside.
fn oracle_margin(z: Complex64, w: &[Complex64]) -> f64 {
    let det = w[0].re * w[1].im - w[0].im * w[1].re;
    // Coordinates of v in the basis (ω_1, ω_2).
    let solve = |v: Complex64| ((v.re * w[1].im - v.im * w[1].re) / det, (w[0].re * v.im - w[0].im * v.re) / det);
    if w.len() == 2 {
        let (a, b) = solve(z);
        return a.min(1.0 - a).min(b).min(1.0 - b);
    }
    // a(t) = a0 - t a1, b(t) = b0 - t b1 for z - t ω_3.
    let (a0, b0) = solve(z);
    let (a1, b1) = solve(w[2]);
    // Maximize min(t, 1-t, a(t), 1-a(t), b(t), 1-b(t)) over t: piecewise linear,
    // so check every breakpoint where two pieces cross.
    let lines = [(0.0, 1.0), (1.0, -1.0), (a0, -a1), (1.0 - a0, a1), (b0, -b1), (1.0 - b0, b1)];
    let f = |t: f64| lines.iter().map(|&(c, m)| c + m * t).fold(f64::INFINITY, f64::min);
    let mut best = f64::NEG_INFINITY;
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let (c1, m1) = lines[i];
            let (c2, m2) = lines[j];
            if (m1 - m2).abs() > 1e-14 {
                best = best.max(f((c2 - c1) / (m1 - m2)));
            }
        }
    }
    best
}

#[test]
fn agrees_with_interval_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 1000 {
        let r = rng.gen_range(2..=3);
        let w: Vec<Complex64> =
            (0..r).map(|_| Complex64::from_polar(rng.gen_range(0.5..1.5), rng.gen_range(0.2..2.9))).collect();
        let sum: Complex64 = w.iter().sum();
        let z = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.0..1.2)) * sum.norm().max(0.5);
        let scale: f64 = w.iter().map(|x| x.norm()).sum();
        let margin = oracle_margin(z, &w);
        if margin.abs() < 1e-6 {
            continue;
        }
        let omegas = ParameterVector::from_complex(&w).unwrap();
        match in_cone_d(z, &omegas) {
            Ok(inside) => assert_eq!(inside, margin > 0.0, "z = {z}, ω = {w:?}, margin {margin}"),
            // Near-boundary points may be reported as such; the oracle margin
            // is then small in absolute terms.
            Err(Error::Boundary(_)) => assert!(margin.abs() * scale < 1e-3, "{margin}"),
            Err(e) => panic!("{e}"),
        }
        checked += 1;
    }
}
