//! Weighted q-series `Σ_{n≥1} n^p e^{2πinu} ∏_j (1 - e^{2πinw_j})^{-1}`.
//!
//! These are the building blocks of every Fourier expansion in the crate.
//! Factors with `Im w_j < 0` are rewritten as
//! `(1 - e^{2πinw})^{-1} = -e^{-2πinw} (1 - e^{-2πinw})^{-1}`, so the series
//! converges exactly when `Im(u - Σ_{Im w_j<0} w_j) > 0`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_TERMS: usize = 2_000_000;

/// A truncated sum with a bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct SeriesSum {
    pub value: Complex64,
    pub tail: f64,
    pub terms: usize,
}

/// Compensated complex summation.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Accumulator {
    sum: Complex64,
    comp: Complex64,
}

impl Accumulator {
    pub fn add(&mut self, x: Complex64) {
        self.sum.re = two_sum(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = two_sum(self.sum.im, x.im, &mut self.comp.im);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn two_sum(a: f64, b: f64, comp: &mut f64) -> f64 {
    let t = a + b;
    if a.abs() >= b.abs() {
        *comp += (a - t) + b;
    } else {
        *comp += (b - t) + a;
    }
    t
}

fn e2pi(w: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * w).exp()
}

/// Sums `Σ_{n≥1} n^p e^{2πinu} ∏_j (1 - e^{2πinw_j})^{-1}` until the tail
/// bound drops below `tol` relative to the partial sum.
pub(crate) fn weighted_q_series(p: Complex64, u: Complex64, ws: &[Complex64], tol: f64) -> Result<SeriesSum> {
    let mut u_eff = u;
    let mut flips = 0usize;
    let mut steps = Vec::with_capacity(ws.len());
    let mut guard = 1.0;
    for &w in ws {
        if w.im == 0.0 {
            return Err(Error::Domain(format!("|e^(2πi·{w})| = 1 gives no convergent q-series")));
        }
        let flip = w.im < 0.0;
        if flip {
            u_eff -= w;
            flips += 1;
        }
        let q = if flip { e2pi(-w) } else { e2pi(w) };
        guard /= 1.0 - q.norm();
        steps.push(q);
    }
    if !(u_eff.im > 0.0) {
        return Err(Error::Convergence(format!(
            "q-series diverges: effective exponent {u_eff} not in the upper half-plane"
        )));
    }
    let sign = if flips % 2 == 1 { -1.0 } else { 1.0 };
    let x = e2pi(u_eff);
    let rho = x.norm();
    let a = p.re.max(0.0);

    let mut acc = Accumulator::default();
    let mut xn = Complex64::new(sign, 0.0);
    let mut qn: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); steps.len()];
    for n in 1..=MAX_TERMS {
        xn *= x;
        let mut denom = Complex64::new(1.0, 0.0);
        for (qp, q) in qn.iter_mut().zip(&steps) {
            *qp *= q;
            denom *= Complex64::new(1.0, 0.0) - *qp;
        }
        let nf = n as f64;
        let weight = (p * nf.ln()).exp();
        acc.add(weight * xn / denom);

        let next = nf + 1.0;
        let kappa = rho * ((next + 1.0) / next).powf(a);
        if kappa < 1.0 {
            let tail = guard * next.powf(a) * rho.powf(next) / (1.0 - kappa);
            let value = acc.value();
            if tail <= tol * value.norm() || tail < 1e-300 {
                return Ok(SeriesSum { value, tail, terms: n });
            }
        }
    }
    Err(Error::Convergence(format!("q-series needed more than {MAX_TERMS} terms (|x| = {rho})")))
}

/// `Σ_{n≥1} f(n) x^n` for `|x| = 1`, `x ≠ 1`, with `f` smooth and of
/// polynomial growth.
///
/// The tail beyond `M` is replaced by the Abel-summation expansion
/// `Σ_{n≥M} x^n f(n) = Σ_{j≥0} x^{M+j} (∇^j f)(M+j) / (1-x)^{j+1}`, which
/// also continues the sum analytically when it diverges.
pub(crate) fn unimodular_series(x: Complex64, f: impl Fn(f64) -> Complex64, tol: f64) -> Result<SeriesSum> {
    let gap = (Complex64::new(1.0, 0.0) - x).norm();
    if gap < 1e-6 {
        return Err(Error::Domain("unimodular series needs x away from 1".into()));
    }
    let levels = 24usize;
    let m = ((levels as f64 * 2.5 / gap).ceil() as usize).clamp(32, 20_000);
    let mut acc = Accumulator::default();
    let mut xn = Complex64::new(1.0, 0.0);
    for n in 1..m {
        xn *= x;
        acc.add(xn * f(n as f64));
    }
    // Backward differences: ∇^j f(M+j) = Σ_i (-1)^i C(j,i) f(M+j-i).
    let samples: Vec<Complex64> = (0..=levels).map(|i| f((m + i) as f64)).collect();
    let inv = 1.0 / (Complex64::new(1.0, 0.0) - x);
    let mut xm = xn * x;
    let mut scale = inv;
    let mut last = f64::INFINITY;
    let mut best = f64::INFINITY;
    for j in 0..=levels {
        let mut diff = Complex64::new(0.0, 0.0);
        let mut binom = 1.0;
        for i in 0..=j {
            let sgn = if i % 2 == 0 { 1.0 } else { -1.0 };
            diff += samples[j - i] * (sgn * binom);
            binom = binom * (j - i) as f64 / (i + 1) as f64;
        }
        let term = xm * diff * scale;
        let size = term.norm();
        if size > best * 1e3 {
            break;
        }
        acc.add(term);
        best = best.min(size);
        last = size;
        if size <= 1e-3 * tol * acc.value().norm() {
            break;
        }
        xm *= x;
        scale *= inv;
    }
    Ok(SeriesSum { value: acc.value(), tail: last, terms: m + levels })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn geometric_without_denominators() {
        // Σ x^n = x / (1 - x)
        let u = c(0.2, 0.3);
        let x = e2pi(u);
        let s = weighted_q_series(c(0.0, 0.0), u, &[], 1e-15).unwrap();
        assert!((s.value - x / (1.0 - x)).norm() < 1e-14);
    }

    #[test]
    fn flipped_factor_matches_direct_sum() {
        // Im w < 0 with Im(u - w) > 0: compare against the literal terms.
        let (u, w) = (c(0.1, 0.2), c(0.3, -0.25));
        let s = weighted_q_series(c(-1.5, 0.2), u, &[w], 1e-15).unwrap();
        let mut direct = c(0.0, 0.0);
        for n in 1..200 {
            let nf = n as f64;
            direct += (c(-1.5, 0.2) * nf.ln()).exp() * e2pi(u * nf) / (1.0 - e2pi(w * nf));
        }
        assert!((s.value - direct).norm() < 1e-13 * direct.norm());
        assert!(weighted_q_series(c(0.0, 0.0), c(0.0, -0.5), &[c(0.2, -0.3)], 1e-12).is_err());
        assert!(weighted_q_series(c(0.0, 0.0), c(0.0, 0.1), &[c(0.2, 0.0)], 1e-12).is_err());
    }

    #[test]
    fn unimodular_log_series() {
        // Σ x^n / n = -log(1 - x)
        let x = Complex64::from_polar(1.0, 2.0 * PI * 0.3);
        let s = unimodular_series(x, |n| c(1.0 / n, 0.0), 1e-15).unwrap();
        let want = -(1.0 - x).ln();
        assert!((s.value - want).norm() < 1e-13, "{} vs {}", s.value, want);
    }

    #[test]
    fn unimodular_divergent_continuation() {
        // Abel sum Σ n x^n = x / (1 - x)^2
        let x = Complex64::from_polar(1.0, 2.0 * PI * 0.41);
        let s = unimodular_series(x, |n| c(n, 0.0), 1e-15).unwrap();
        let want = x / ((1.0 - x) * (1.0 - x));
        assert!((s.value - want).norm() < 1e-11 * want.norm(), "{} vs {}", s.value, want);
    }
}
