//! Bilateral multiple zeta functions
//! `ξ_{r+1}(s, z | ω_0; ω) = ζ_{r+1}(s, z+ω_0 | ω_0, ω) + ζ_{r+1}(s, z | e^{-πi}ω_0, ω)`,
//! their Fourier expansions, and the combinations `f_±`, `F` and `g`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::barnes::{barnes_zeta, barnes_zeta_direct, fourier_blocks, BarnesRequest, EvalResult, Method, Side};
use crate::dcx::{cpow, exp_i_pi, factorial, rgamma, DirectedComplex};
use crate::error::{Error, Result};
use crate::params::{check_orc, check_soc, in_cone_d, in_sector_dminus, in_sector_dplus, ParameterVector, Sign};
use crate::qseries::{unimodular_series, weighted_q_series};

/// Arguments of `ξ_{r+1}(s, z | ω_0; ω)`; the strong one-side condition is
/// checked on construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BilateralRequest {
    s: Complex64,
    z: DirectedComplex,
    omega0: DirectedComplex,
    omegas: ParameterVector,
}

impl BilateralRequest {
    pub fn new(s: Complex64, z: DirectedComplex, omega0: DirectedComplex, omegas: ParameterVector) -> Result<Self> {
        if !check_soc(&z, &omega0, &omegas)? {
            return Err(Error::Domain("z, ω_0 and ω violate the strong one-side condition".into()));
        }
        Ok(Self { s, z, omega0, omegas })
    }

    pub fn s(&self) -> Complex64 {
        self.s
    }

    pub fn z(&self) -> DirectedComplex {
        self.z
    }

    pub fn omega0(&self) -> DirectedComplex {
        self.omega0
    }

    pub fn omegas(&self) -> &ParameterVector {
        &self.omegas
    }

    /// Same data at a different `s`.
    pub fn with_s(&self, s: Complex64) -> Self {
        Self { s, ..self.clone() }
    }
}

fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0
}

fn zero_result() -> EvalResult {
    EvalResult { value: Complex64::new(0.0, 0.0), err_estimate: 0.0, terms_used: 0, method: Method::Fourier }
}

fn two_pi_pow(s: Complex64) -> Complex64 {
    (s * (2.0 * PI).ln()).exp()
}

/// `ξ` from its definition as two Barnes zeta functions; needs `Re s > r + 3/2`.
pub fn xi_series(req: &BilateralRequest, tol: f64) -> Result<EvalResult> {
    let r = req.omegas.len();
    if !(req.s.re > r as f64 + 1.5) {
        return Err(Error::Convergence(format!("bilateral series needs Re s > {}, got {}", r as f64 + 1.5, req.s.re)));
    }
    let shifted = DirectedComplex::from_principal(req.z.to_complex() + req.omega0.to_complex())?;
    let first = BarnesRequest::new(req.s, shifted, req.omegas.prepend(req.omega0));
    let second = BarnesRequest::new(req.s, req.z, req.omegas.prepend(req.omega0.rotate(-PI)));
    let a = barnes_zeta_direct(&first, tol)?;
    let b = barnes_zeta_direct(&second, tol)?;
    Ok(EvalResult {
        value: a.value + b.value,
        err_estimate: a.err_estimate + b.err_estimate,
        terms_used: a.terms_used + b.terms_used,
        method: Method::Direct,
    })
}

fn require_upper(z: Complex64, omegas: &ParameterVector) -> Result<()> {
    if !(z.im > 0.0) || omegas.values().iter().any(|w| !(w.im > 0.0)) {
        return Err(Error::Domain("z and every ω_j must lie in the upper half-plane".into()));
    }
    Ok(())
}

/// `ξ_{r+1}(s, z | e^{πi}; ω) = e^{-iπs/2} (2π)^s / Γ(s) Σ_n n^{s-1} e^{2πinz} / ∏_j (1 - e^{2πinω_j})`,
/// for `z` and all `ω_j` in the upper half-plane.  Entire in `s`.
pub fn xi_fourier_normal(s: Complex64, z: Complex64, omegas: &ParameterVector, tol: f64) -> Result<EvalResult> {
    require_upper(z, omegas)?;
    if is_nonpositive_integer(s) {
        return Ok(zero_result());
    }
    let one = Complex64::new(1.0, 0.0);
    let pref = exp_i_pi(-s * 0.5) * two_pi_pow(s) * rgamma(s);
    let series = weighted_q_series(s - one, z, &omegas.values(), tol.min(1e-15))?;
    Ok(EvalResult {
        value: pref * series.value,
        err_estimate: pref.norm() * series.tail,
        terms_used: series.terms,
        method: Method::Fourier,
    })
}

/// `ξ_{r+1}(s, z | ω_0; ω)`, through the normalization `α = e^{πi}/ω_0` and
/// the Fourier expansion, or the defining series when that is unavailable.
pub fn xi(req: &BilateralRequest, tol: f64) -> Result<EvalResult> {
    let a0 = req.omega0.argument();
    let alpha = DirectedComplex::new(1.0 / req.omega0.modulus(), PI - a0)?;
    let z = req.z.to_principal().mul(&alpha);
    let omegas = req.omegas.to_principal().scale(&alpha);
    let inside = |d: &DirectedComplex| d.argument() > 0.0 && d.argument() < PI;
    if inside(&z) && omegas.entries().iter().all(inside) {
        let normal = xi_fourier_normal(req.s, z.to_complex(), &omegas, tol)?;
        let scale = cpow(&alpha, req.s);
        return Ok(EvalResult {
            value: scale * normal.value,
            err_estimate: scale.norm() * normal.err_estimate,
            ..normal
        });
    }
    if req.s.re > req.omegas.len() as f64 + 1.5 {
        return xi_series(req, tol);
    }
    Err(Error::Domain("z lies on the edge of the strong one-side sector and Re s is too small for the series".into()))
}

/// `∂ξ_{r+1}/∂s (1-m, z | e^{πi}; ω) = (m-1)!/(2πi)^{m-1} Σ_n e^{2πinz} / (n^m ∏_j (1 - e^{2πinω_j}))`.
pub fn xi_deriv_nonpos(m: u32, z: Complex64, omegas: &ParameterVector, tol: f64) -> Result<Complex64> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    require_upper(z, omegas)?;
    let series = weighted_q_series(Complex64::new(-(m as f64), 0.0), z, &omegas.values(), tol.min(1e-15))?;
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    Ok(series.value * factorial(m - 1) / two_pi_i.powi(m as i32 - 1))
}

// ---------------------------------------------------------------------------
// f_± and F

fn require_ordered(omegas: &ParameterVector) -> Result<()> {
    if omegas.is_empty() {
        return Err(Error::Domain("f_± needs r ≥ 1".into()));
    }
    if !check_orc(omegas) {
        return Err(Error::Domain("f_± needs 0 < arg ω_1 < ... < arg ω_r < π with distinct arguments".into()));
    }
    Ok(())
}

/// Where `z` sits relative to the regions on which `f_±` is defined.
enum Region {
    Cone,
    Sector,
}

fn region(sign: Sign, z: Complex64, omegas: &ParameterVector) -> Result<Region> {
    let sector = match sign {
        Sign::Plus => in_sector_dplus(z, omegas),
        Sign::Minus => in_sector_dminus(z, omegas),
    };
    if sector {
        return Ok(Region::Sector);
    }
    let cone = if omegas.len() == 1 {
        let a = z / omegas.values()[0];
        a.im.abs() <= 1e-12 * a.norm() && a.re > 0.0 && a.re < 1.0
    } else {
        in_cone_d(z, omegas)?
    };
    if cone {
        return Ok(Region::Cone);
    }
    Err(Error::Domain(format!("z = {z} is outside D ∪ D_{}", if sign == Sign::Plus { "+" } else { "-" })))
}

/// `Σ_k ω_k^{e} Σ_n n^p e^{±2πinz_k} ∏_{j≠k} (1 - e^{±2πinω_jk})^{-1}` with
/// `ω_k^{e}` supplied by `weight`.
fn signed_blocks(
    sign: Sign,
    p: Complex64,
    z: Complex64,
    omegas: &ParameterVector,
    weight: impl Fn(&DirectedComplex) -> Complex64,
    tol: f64,
) -> Result<(Complex64, f64, usize)> {
    let zd = DirectedComplex::from_principal(z)?;
    if omegas.len() == 1 {
        let w = omegas.get(1)?;
        let z1 = zd.div(&w).to_complex();
        let u = if sign == Sign::Plus { z1 } else { -z1 };
        let series = if u.im > 0.0 {
            weighted_q_series(p, u, &[], tol)?
        } else {
            let x = Complex64::from_polar(1.0, 2.0 * PI * u.re);
            unimodular_series(x, |n| (p * n.ln()).exp(), tol)?
        };
        let wk = weight(&w);
        return Ok((wk * series.value, wk.norm() * series.tail, series.terms));
    }
    let side = if sign == Sign::Plus { Side::Plus } else { Side::Minus };
    let blocks = fourier_blocks(p, &zd, omegas, side, tol)?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut terms = 0;
    for b in &blocks {
        let wk = weight(&b.omega_k);
        let (v, t) = if sign == Sign::Plus { (b.plus, b.tail_plus) } else { (b.minus, b.tail_minus) };
        value += wk * v;
        err += wk.norm() * t;
        terms += b.terms;
    }
    Ok((value, err, terms))
}

/// `f_±(s, z | ω)` by its Fourier expansion
/// `e^{iπs/2} (2π)^s / Γ(s) Σ_k ω_k^{-s} Σ_n n^{s-1} e^{±2πinz_k} ∏_{j≠k} (1 - e^{±2πinω_jk})^{-1}`.
///
/// `z` must lie in `D ∪ D_+` (plus) or `D ∪ D_-` (minus).  For `r = 1`, the
/// segment `D` is accepted only when `Re s < -0.1`.
pub fn f_pm(sign: Sign, s: Complex64, z: Complex64, omegas: &ParameterVector, tol: f64) -> Result<EvalResult> {
    require_ordered(omegas)?;
    let reg = region(sign, z, omegas)?;
    if omegas.len() == 1 && matches!(reg, Region::Cone) && !(s.re < -0.1) {
        return Err(Error::Domain("rank-one f_± on the segment D needs Re s < -0.1".into()));
    }
    if is_nonpositive_integer(s) {
        return Ok(zero_result());
    }
    let one = Complex64::new(1.0, 0.0);
    let pref = exp_i_pi(s * 0.5) * two_pi_pow(s) * rgamma(s);
    let (sum, err, terms) = signed_blocks(sign, s - one, z, omegas, |w| cpow(w, -s), tol.min(1e-15))?;
    Ok(EvalResult { value: pref * sum, err_estimate: pref.norm() * err, terms_used: terms, method: Method::Fourier })
}

pub fn f_plus(s: Complex64, z: Complex64, omegas: &ParameterVector, tol: f64) -> Result<EvalResult> {
    f_pm(Sign::Plus, s, z, omegas, tol)
}

pub fn f_minus(s: Complex64, z: Complex64, omegas: &ParameterVector, tol: f64) -> Result<EvalResult> {
    f_pm(Sign::Minus, s, z, omegas, tol)
}

/// `∂f_±/∂s (1-m, z | ω) = (-1)^{m-1} (m-1)!/(2πi)^{m-1} Σ_k ω_k^{m-1} Σ_n e^{±2πinz_k} / (n^m ∏_{j≠k} (1 - e^{±2πinω_jk}))`.
pub fn f_deriv_nonpos(sign: Sign, m: u32, z: Complex64, omegas: &ParameterVector, tol: f64) -> Result<Complex64> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    require_ordered(omegas)?;
    region(sign, z, omegas)?;
    let p = Complex64::new(-(m as f64), 0.0);
    let (sum, _, _) = signed_blocks(sign, p, z, omegas, |w| w.to_complex().powi(m as i32 - 1), tol.min(1e-15))?;
    let sgn = if m % 2 == 1 { 1.0 } else { -1.0 };
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    Ok(sum * (sgn * factorial(m - 1)) / two_pi_i.powi(m as i32 - 1))
}

/// `F(s, z | ω) = f_+(s) - e^{-πis} f_-(s) = 2i sin(πs) ζ_r(s, z | ω)` for `z ∈ D`.
pub fn capital_f(s: Complex64, z: Complex64, omegas: &ParameterVector, tol: f64) -> Result<EvalResult> {
    require_ordered(omegas)?;
    if omegas.len() >= 2 && !in_cone_d(z, omegas)? {
        return Err(Error::Domain(format!("F needs z in D, got {z}")));
    }
    let p = f_plus(s, z, omegas, tol)?;
    let m = f_minus(s, z, omegas, tol)?;
    let e = exp_i_pi(-s);
    Ok(EvalResult {
        value: p.value - e * m.value,
        err_estimate: p.err_estimate + e.norm() * m.err_estimate,
        terms_used: p.terms_used + m.terms_used,
        method: Method::Fourier,
    })
}

/// `f_+` from the Barnes zeta functions:
/// `ζ_r(s, e^{-πi}z | e^{-πi}ω) + (-1)^{r-1} ζ_r(s, |ω|⁺ + e^{-πi}z | ω)`.
pub fn f_plus_barnes(s: Complex64, z: &DirectedComplex, omegas: &ParameterVector, tol: f64) -> Result<Complex64> {
    let r = omegas.len();
    let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
    let a = barnes_zeta(&BarnesRequest::new(s, z.rotate(-PI), omegas.rotate(-PI)), tol)?;
    let shifted = DirectedComplex::from_principal(omegas.sum() - z.to_complex())?;
    let b = barnes_zeta(&BarnesRequest::new(s, shifted, omegas.clone()), tol)?;
    Ok(a.value + b.value * sign)
}

/// `f_-` from the Barnes zeta functions:
/// `ζ_r(s, z | ω) + (-1)^{r-1} ζ_r(s, z + e^{-πi}|ω|⁺ | e^{-πi}ω)`.
pub fn f_minus_barnes(s: Complex64, z: &DirectedComplex, omegas: &ParameterVector, tol: f64) -> Result<Complex64> {
    let r = omegas.len();
    let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
    let a = barnes_zeta(&BarnesRequest::new(s, *z, omegas.clone()), tol)?;
    let shifted = DirectedComplex::from_principal(z.to_complex() - omegas.sum())?;
    let b = barnes_zeta(&BarnesRequest::new(s, shifted, omegas.rotate(-PI)), tol)?;
    Ok(a.value + b.value * sign)
}

/// `f_±` as an alternating sum of `r` bilateral zeta functions.
pub fn f_pm_bilateral(sign: Sign, s: Complex64, z: Complex64, omegas: &ParameterVector, tol: f64) -> Result<Complex64> {
    require_ordered(omegas)?;
    let r = omegas.len();
    let mut total = Complex64::new(0.0, 0.0);
    for k in 1..=r {
        let rest = omegas.neg_range(k, r, crate::params::Turn::Down)?.hat(k)?;
        let (point, parity) = match sign {
            Sign::Plus => (omegas.sum_range(1, k - 1)? - z, k - 1),
            Sign::Minus => (z - omegas.sum_range(k + 1, r)?, r - k),
        };
        let req = BilateralRequest::new(s, DirectedComplex::from_principal(point)?, omegas.get(k)?, rest)?;
        let v = xi(&req, tol)?.value;
        total += if parity % 2 == 0 { v } else { -v };
    }
    Ok(total)
}

/// `g(s, τ) = ξ_2(s, τ | e^{πi}; τ) - ξ_2(s, 1 | τ; 1)`.
pub fn g_function(s: Complex64, tau: Complex64, tol: f64) -> Result<EvalResult> {
    if !(tau.im > 0.0) {
        return Err(Error::Domain(format!("τ = {tau} must lie in the upper half-plane")));
    }
    let tau_d = DirectedComplex::from_principal(tau)?;
    let a = xi_fourier_normal(s, tau, &ParameterVector::new(vec![tau_d]), tol)?;
    let one = DirectedComplex::new(1.0, 0.0)?;
    let b = xi(&BilateralRequest::new(s, one, tau_d, ParameterVector::new(vec![one]))?, tol)?;
    Ok(EvalResult {
        value: a.value - b.value,
        err_estimate: a.err_estimate + b.err_estimate,
        terms_used: a.terms_used + b.terms_used,
        method: Method::Fourier,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / a.norm().max(b.norm())
    }

    fn pv(v: &[Complex64]) -> ParameterVector {
        ParameterVector::from_complex(v).unwrap()
    }

    fn d(w: Complex64) -> DirectedComplex {
        DirectedComplex::from_principal(w).unwrap()
    }

    #[test]
    fn lipschitz_rank_zero() {
        let minus_one = DirectedComplex::new(1.0, PI).unwrap();
        let req = BilateralRequest::new(c(3.2, 0.0), d(c(0.3, 0.9)), minus_one, pv(&[])).unwrap();
        let a = xi_series(&req, 1e-14).unwrap().value;
        let b = xi_fourier_normal(c(3.2, 0.0), c(0.3, 0.9), &pv(&[]), 1e-14).unwrap().value;
        assert!(rel(a, b) < 1e-10, "{a} vs {b}");
    }

    #[test]
    fn rank_two_series_vs_fourier() {
        let minus_one = DirectedComplex::new(1.0, PI).unwrap();
        let w = pv(&[c(0.1, 0.8), c(-0.3, 0.6)]);
        let req = BilateralRequest::new(c(4.5, 0.0), d(c(0.2, 0.7)), minus_one, w.clone()).unwrap();
        let a = xi_series(&req, 1e-14).unwrap().value;
        let b = xi_fourier_normal(c(4.5, 0.0), c(0.2, 0.7), &w, 1e-14).unwrap().value;
        assert!(rel(a, b) < 1e-9, "{a} vs {b}");
    }

    #[test]
    fn zeros_at_nonpositive_integers() {
        for m in 1..=5 {
            let v = xi_fourier_normal(c(1.0 - m as f64, 0.0), c(0.2, 0.7), &pv(&[c(0.1, 0.8)]), 1e-14).unwrap();
            assert_eq!(v.value, c(0.0, 0.0));
        }
    }

    #[test]
    fn q_factorial_from_derivative() {
        // exp(-∂ξ_1/∂s(0, z | e^{πi})) = 1 - e^{2πiz}
        let z = c(0.3, 0.4);
        let v = (-xi_deriv_nonpos(1, z, &pv(&[]), 1e-15).unwrap()).exp();
        let x = (c(0.0, 2.0 * PI) * z).exp();
        assert!(rel(v, 1.0 - x) < 1e-13);
    }

    #[test]
    fn normalized_xi_matches_series() {
        let tau = c(0.3, 1.2);
        let one = DirectedComplex::new(1.0, 0.0).unwrap();
        let req = BilateralRequest::new(c(3.1, 0.2), one, d(tau), ParameterVector::new(vec![one])).unwrap();
        let a = xi(&req, 1e-14).unwrap().value;
        let b = xi_series(&req, 1e-14).unwrap().value;
        assert!(rel(a, b) < 1e-9, "{a} vs {b}");
    }

    #[test]
    fn capital_f_matches_barnes() {
        let w = pv(&[Complex64::from_polar(1.0, 0.5), Complex64::from_polar(1.2, 1.6)]);
        let z = w.sum() * 0.4;
        let s = c(2.6, 0.0);
        let f = capital_f(s, z, &w, 1e-14).unwrap().value;
        let zeta = barnes_zeta(&BarnesRequest::new(s, d(z), w.clone()), 1e-14).unwrap().value;
        let two_i_sin = c(0.0, 2.0) * crate::dcx::sin_pi(s);
        assert!(rel(f / two_i_sin, zeta) < 1e-9);
    }

    #[test]
    fn f_plus_three_ways() {
        let w = pv(&[Complex64::from_polar(1.0, 0.5), Complex64::from_polar(1.2, 1.6)]);
        let z = w.sum() * 0.4;
        let s = c(4.1, 0.3);
        for sign in [Sign::Plus, Sign::Minus] {
            let four = f_pm(sign, s, z, &w, 1e-14).unwrap().value;
            let bil = f_pm_bilateral(sign, s, z, &w, 1e-14).unwrap();
            let bar = match sign {
                Sign::Plus => f_plus_barnes(s, &d(z), &w, 1e-14).unwrap(),
                Sign::Minus => f_minus_barnes(s, &d(z), &w, 1e-14).unwrap(),
            };
            assert!(rel(four, bil) < 1e-9, "{sign:?}: {four} vs {bil}");
            assert!(rel(four, bar) < 1e-9, "{sign:?}: {four} vs {bar}");
        }
    }
}
