//! Multiple q-shifted factorials
//! `(x; q)_{r,∞} = ∏_{m ∈ N_0^r} (1 - x q_1^{m_1} ⋯ q_r^{m_r})`, their
//! extension to `|q_j| > 1`, the Dedekind eta function and Lambert sums.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dcx::DirectedComplex;
use crate::error::{Error, Result};
use crate::params::{normalize, ParameterVector, Sign};
use crate::qseries::{weighted_q_series, Accumulator};

const MAX_SHELLS: usize = 100_000;

/// The data `(x; q_1, ..., q_r)` of a multiple q-shifted factorial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QData {
    pub x: Complex64,
    pub qs: Vec<Complex64>,
}

impl QData {
    pub fn new(x: Complex64, qs: Vec<Complex64>) -> Self {
        Self { x, qs }
    }

    pub fn rank(&self) -> usize {
        self.qs.len()
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Calls `f` with the exponent vector of every composition of `total` into
/// `parts` nonnegative parts.
fn for_each_composition(parts: usize, total: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(prefix: &mut Vec<usize>, parts: usize, left: usize, f: &mut impl FnMut(&[usize])) {
        if prefix.len() + 1 == parts {
            prefix.push(left);
            f(prefix);
            prefix.pop();
            return;
        }
        for m in 0..=left {
            prefix.push(m);
            rec(prefix, parts, left - m, f);
            prefix.pop();
        }
    }
    rec(&mut Vec::with_capacity(parts), parts, total, f);
}

/// `(x; q)_{r,∞}` for `|q_j| < 1`, summing `log(1 - x q^m)` shell by shell
/// (`|m| = M`) until the remaining shells are bounded by `tol`.
pub fn qpoch_multi(data: &QData, tol: f64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    if data.qs.is_empty() {
        return Ok(one - data.x);
    }
    if let Some(q) = data.qs.iter().find(|q| !(q.norm() < 1.0)) {
        return Err(Error::Domain(format!("(x; q)_∞ needs |q_j| < 1, got |q| = {}", q.norm())));
    }
    if data.x == Complex64::new(0.0, 0.0) {
        return Ok(one);
    }
    let r = data.rank();
    let rho = data.qs.iter().map(|q| q.norm()).fold(0.0, f64::max);
    let ax = data.x.norm();
    let mut powers: Vec<Vec<Complex64>> = data.qs.iter().map(|_| vec![one]).collect();
    let mut acc = Accumulator::default();
    for shell in 0..MAX_SHELLS {
        for (p, q) in powers.iter_mut().zip(&data.qs) {
            let next = p[shell] * q;
            p.push(next);
        }
        let mut zero = None;
        for_each_composition(r, shell, &mut |m: &[usize]| {
            let w = m.iter().enumerate().fold(data.x, |acc, (j, &e)| acc * powers[j][e]);
            let f = one - w;
            if f.norm() <= 1e-15 {
                zero = Some(w);
            }
            acc.add(f.ln());
        });
        if let Some(w) = zero {
            return Err(Error::ZeroFactor(format!("factor 1 - {w} vanishes")));
        }
        // Remaining shells: Σ_{M>shell} C(M+r-1, r-1) |x| ρ^M / (1 - |x| ρ^M).
        let next = shell + 1;
        let lead = ax * rho.powi(next as i32);
        if lead < 0.5 {
            let count = binomial(next + r - 1, r - 1);
            let kappa = rho * binomial(next + r, r - 1) / count;
            if kappa < 1.0 {
                let tail = 2.0 * count * lead / (1.0 - kappa);
                if tail <= tol {
                    return Ok(acc.value().exp());
                }
            }
        }
    }
    Err(Error::Convergence(format!("q-product needed more than {MAX_SHELLS} shells (max |q| = {rho})")))
}

/// The extended factorial `(x; q)~_{r,∞}` for data whose first `l`
/// parameters satisfy `|q_j| > 1` and the rest `|q_j| < 1`:
/// `(x ∏_{j≤l} q_j^{-1}; q_1^{-1}, ..., q_l^{-1}, q_{l+1}, ..., q_r)^{(-1)^l}`.
pub fn qpoch_tilde(data: &QData, l: usize, tol: f64) -> Result<Complex64> {
    if l > data.rank() {
        return Err(Error::Index(format!("split index {l} exceeds rank {}", data.rank())));
    }
    for (j, q) in data.qs.iter().enumerate() {
        let n = q.norm();
        let ok = if j < l { n > 1.0 } else { n < 1.0 };
        if !ok {
            return Err(Error::Domain(format!("|q_{}| = {n} is on the wrong side of 1 for split l = {l}", j + 1)));
        }
    }
    let mut x = data.x;
    let mut qs = data.qs.clone();
    for q in qs.iter_mut().take(l) {
        x /= *q;
        *q = 1.0 / *q;
    }
    let v = qpoch_multi(&QData::new(x, qs), tol)?;
    Ok(if l % 2 == 0 { v } else { 1.0 / v })
}

fn e2pi(w: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * w).exp()
}

/// `η(τ) = e^{πiτ/12} (q; q)_∞` with `q = e^{2πiτ}`.
pub fn dedekind_eta(tau: Complex64, tol: f64) -> Result<Complex64> {
    if !(tau.im > 0.0) {
        return Err(Error::Domain(format!("η needs τ in the upper half-plane, got {tau}")));
    }
    let q = e2pi(tau);
    let pre = (Complex64::new(0.0, PI / 12.0) * tau).exp();
    Ok(pre * qpoch_multi(&QData::new(q, vec![q]), tol)?)
}

/// `Σ_{n≥1} n^{2N-1} q^n / (1 - q^n)` with `q = e^{2πiτ}`, for `N ≥ 1`.
pub fn lambert_sum(n: u32, tau: Complex64, tol: f64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::Domain("Lambert sum needs N ≥ 1".into()));
    }
    if !(tau.im > 0.0) {
        return Err(Error::Domain(format!("Lambert sum needs τ in the upper half-plane, got {tau}")));
    }
    let p = Complex64::new(2.0 * n as f64 - 1.0, 0.0);
    Ok(weighted_q_series(p, tau, &[tau], tol.min(1e-15))?.value)
}

/// `∏_{k=1}^r (x_k^{±1}; q̂_k^{±1})~_{r-1,∞}` for ordered parameters.
///
/// Under the ordered rotation condition `|q_jk| > 1` exactly when `j < k`,
/// so each factor splits with `l = k - 1` (plus) or `l = r - k` (minus).
pub fn iseki_product(sign: Sign, z: &DirectedComplex, omegas: &ParameterVector, tol: f64) -> Result<Complex64> {
    let r = omegas.len();
    let mut total = Complex64::new(1.0, 0.0);
    for k in 1..=r {
        let np = normalize(z, omegas, k)?;
        let (below, above) = np.q_jk.split_at(k - 1);
        let factor = match sign {
            Sign::Plus => qpoch_tilde(&QData::new(np.x_k, np.q_jk.clone()), k - 1, tol)?,
            Sign::Minus => {
                let qs: Vec<Complex64> = above.iter().chain(below).map(|q| 1.0 / q).collect();
                qpoch_tilde(&QData::new(1.0 / np.x_k, qs), r - k, tol)?
            }
        };
        total *= factor;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rank_zero_and_trivial() {
        assert_eq!(qpoch_multi(&QData::new(c(0.3, 0.1), vec![]), 1e-15).unwrap(), c(0.7, -0.1));
        assert_eq!(qpoch_multi(&QData::new(c(0.0, 0.0), vec![c(0.5, 0.0)]), 1e-15).unwrap(), c(1.0, 0.0));
        assert!(matches!(qpoch_multi(&QData::new(c(1.0, 0.0), vec![c(0.5, 0.0)]), 1e-15), Err(Error::ZeroFactor(_))));
        assert!(qpoch_multi(&QData::new(c(0.5, 0.0), vec![c(1.5, 0.0)]), 1e-15).is_err());
    }

    #[test]
    fn eta_at_i() {
        // η(i) = Γ(1/4) / (2 π^{3/4})
        let v = dedekind_eta(c(0.0, 1.0), 1e-16).unwrap();
        assert!((v - c(0.768_225_422_326_056_7, 0.0)).norm() < 1e-15, "{v}");
    }

    #[test]
    fn euler_pentagonal() {
        // (q; q)_∞ = Σ_k (-1)^k q^{k(3k-1)/2}
        let q = c(0.3, 0.4);
        let prod = qpoch_multi(&QData::new(q, vec![q]), 1e-16).unwrap();
        let mut sum = c(0.0, 0.0);
        for k in -30i32..=30 {
            let e = k * (3 * k - 1) / 2;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum += q.powi(e) * sign;
        }
        assert!((prod - sum).norm() < 1e-14);
    }

    #[test]
    fn tilde_inverts_first_factor() {
        // l = 1, r = 1: (x; q)~ = 1 / (x/q; 1/q)_∞
        let (x, q) = (c(0.2, 0.5), c(1.4, 0.9));
        let v = qpoch_tilde(&QData::new(x, vec![q]), 1, 1e-15).unwrap();
        let w = qpoch_multi(&QData::new(x / q, vec![1.0 / q]), 1e-15).unwrap();
        assert!((v * w - 1.0).norm() < 1e-14);
        assert!(matches!(qpoch_tilde(&QData::new(x, vec![q]), 0, 1e-15), Err(Error::Domain(_))));
    }

    #[test]
    fn lambert_direct() {
        let tau = c(0.2, 1.1);
        let q = e2pi(tau);
        let mut direct = c(0.0, 0.0);
        for n in 1..200 {
            let qn = q.powi(n);
            direct += qn * (n as f64).powi(3) / (1.0 - qn);
        }
        assert!((lambert_sum(2, tau, 1e-15).unwrap() - direct).norm() < 1e-14 * direct.norm());
    }

    proptest! {
        #[test]
        fn functional_equation(xr in -0.8f64..0.8, xi in -0.8f64..0.8, q1 in 0.1f64..0.7, q2 in 0.1f64..0.7) {
            // (x; q1, q2) / (q1 x; q1, q2) = (x; q2)
            let x = c(xr, xi);
            let qs = vec![c(q1, 0.1), c(0.05, q2)];
            let a = qpoch_multi(&QData::new(x, qs.clone()), 1e-15).unwrap();
            let b = qpoch_multi(&QData::new(x * qs[0], qs.clone()), 1e-15).unwrap();
            let d = qpoch_multi(&QData::new(x, vec![qs[1]]), 1e-15).unwrap();
            prop_assert!((a / b - d).norm() < 1e-11 * d.norm().max(1.0));
        }
    }
}
