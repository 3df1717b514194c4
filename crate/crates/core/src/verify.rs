//! Executable identity checks.
//!
//! Each check evaluates the two sides of an identity through different code
//! paths and reports the residual.  Random parameters come from a ChaCha
//! stream seeded by the suite seed and the check name, so a report does not
//! depend on which other checks run or in which order.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::barnes::{
    barnes_fourier_nonpositive, barnes_zeta, barnes_zeta_continued, barnes_zeta_direct, barnes_zeta_fourier,
    barnes_zeta_with, fourier_blocks, log_multiple_gamma, BarnesOptions, BarnesRequest, Route, Side,
};
use crate::bernoulli::{bernoulli_number, multiple_bernoulli, multiple_bernoulli_poly};
use crate::bilateral::{
    f_deriv_nonpos, f_minus_barnes, f_plus_barnes, f_pm, f_pm_bilateral, g_function, xi, xi_deriv_nonpos,
    xi_fourier_normal, xi_series, BilateralRequest,
};
use crate::dcx::{cpow, exp_i_pi, factorial, DirectedComplex};
use crate::error::{Error, Result};
use crate::params::{ParameterVector, Sign};
use crate::qprod::{dedekind_eta, iseki_product, lambert_sum, qpoch_multi, QData};
use crate::qseries::unimodular_series;

/// Evaluation tolerance used inside the checks, independent of the pass threshold.
const EVAL_TOL: f64 = 1e-15;
/// Pass threshold floor for checks that rely on numerical differentiation.
pub const FD_TOL: f64 = 1e-6;
const FD_STEP: f64 = 1e-3;

/// Outcome of one identity evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub params: Value,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub tol: f64,
    pub pass: bool,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl IdentityReport {
    pub fn compare(name: impl Into<String>, params: Value, lhs: Complex64, rhs: Complex64, tol: f64) -> Self {
        let abs_residual = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let rel_residual = if scale == 0.0 { 0.0 } else { abs_residual / scale };
        let pass = rel_residual <= tol || (abs_residual <= tol && scale < 1.0);
        Self {
            name: name.into(),
            params,
            lhs,
            rhs,
            abs_residual,
            rel_residual,
            tol,
            pass,
            elapsed_ms: 0.0,
            error: None,
        }
    }

    pub fn failed(name: impl Into<String>, params: Value, err: &Error, tol: f64) -> Self {
        let nan = Complex64::new(f64::NAN, f64::NAN);
        Self {
            name: name.into(),
            params,
            lhs: nan,
            rhs: nan,
            abs_residual: f64::INFINITY,
            rel_residual: f64::INFINITY,
            tol,
            pass: false,
            elapsed_ms: 0.0,
            error: Some(err.to_string()),
        }
    }
}

/// Names of all checks, in report order.
pub const SUITES: &[&str] = &[
    "lipschitz",
    "fourier_xi",
    "xi_zero",
    "qfact_deriv",
    "reflection",
    "f_pm_forms",
    "eta",
    "ramanujan",
    "eisenstein",
    "double_zeta",
    "g_closed_forms",
    "barnes_fourier",
    "hurwitz_fe",
    "bernoulli_fourier",
    "bernoulli_vanish",
    "iseki",
    "bernoulli_identities",
    "homogeneity_shift",
];

/// Settings shared by the checks of one run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub seed: u64,
    pub tol: f64,
    /// Random samples per parameter family; `None` uses each check's default.
    pub samples: Option<usize>,
    /// Record wall-clock time per check; reports are otherwise reproducible byte for byte.
    pub timing: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { seed: 42, tol: 1e-8, samples: None, timing: false }
    }
}

/// Sampling context handed to each check.
pub struct Ctx {
    rng: ChaCha8Rng,
    tol: f64,
    samples: Option<usize>,
}

impl Ctx {
    fn new(name: &str, opts: &SuiteOptions) -> Self {
        // FNV-1a of the check name, mixed with the seed.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in name.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        Self { rng: ChaCha8Rng::seed_from_u64(opts.seed ^ h), tol: opts.tol, samples: opts.samples }
    }

    fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    fn fd_tol(&self) -> f64 {
        self.tol.max(FD_TOL)
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    /// A point with `Re ∈ [-1, 1]`, `Im ∈ [im_lo, im_hi]`.
    fn upper(&mut self, im_lo: f64, im_hi: f64) -> Complex64 {
        Complex64::new(self.uniform(-1.0, 1.0), self.uniform(im_lo, im_hi))
    }

    /// `τ` with `Re τ ∈ [-0.5, 0.5]`, `Im τ ∈ [0.6, 2.5]`.
    fn tau(&mut self) -> Complex64 {
        Complex64::new(self.uniform(-0.5, 0.5), self.uniform(0.6, 2.5))
    }

    /// Parameters in the upper half-plane with arguments in `[lo, hi]`.
    fn upper_params(&mut self, r: usize, lo: f64, hi: f64) -> Vec<Complex64> {
        (0..r).map(|_| Complex64::from_polar(self.uniform(0.7, 1.4), self.uniform(lo, hi))).collect()
    }

    /// Ordered parameters: arguments increasing in `[0.3, π - 0.3]` with
    /// consecutive gaps of at least 0.2 rad.
    fn ordered(&mut self, r: usize) -> ParameterVector {
        loop {
            let mut args: Vec<f64> = (0..r).map(|_| self.uniform(0.3, PI - 0.3)).collect();
            args.sort_by(f64::total_cmp);
            if args.windows(2).all(|w| w[1] - w[0] >= 0.2) {
                let vals: Vec<Complex64> =
                    args.iter().map(|&a| Complex64::from_polar(self.uniform(0.7, 1.4), a)).collect();
                return ParameterVector::from_complex(&vals).expect("nonzero parameters");
            }
        }
    }

    /// A point of `D` with every coordinate in `[0.1, 0.9]`.
    fn in_d(&mut self, omegas: &ParameterVector) -> Complex64 {
        omegas.values().iter().map(|w| w * self.uniform(0.1, 0.9)).sum()
    }

    fn s(&mut self, re_lo: f64, re_hi: f64) -> Complex64 {
        Complex64::new(self.uniform(re_lo, re_hi), self.uniform(-1.0, 1.0))
    }
}

fn d(w: Complex64) -> Result<DirectedComplex> {
    DirectedComplex::from_principal(w)
}

/// Runs `f`, turning an evaluation error into a failed report.
fn report(name: String, params: Value, tol: f64, f: impl FnOnce() -> Result<(Complex64, Complex64)>) -> IdentityReport {
    match f() {
        Ok((lhs, rhs)) => IdentityReport::compare(name, params, lhs, rhs, tol),
        Err(e) => IdentityReport::failed(name, params, &e, tol),
    }
}

/// Fourth-order central difference.
fn derivative(f: impl Fn(Complex64) -> Result<Complex64>, s0: Complex64) -> Result<Complex64> {
    let h = FD_STEP;
    let d1 = f(s0 + h)? - f(s0 - h)?;
    let d2 = f(s0 + 2.0 * h)? - f(s0 - 2.0 * h)?;
    Ok((d1 * 8.0 - d2) / (12.0 * h))
}

fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    Ok(barnes_zeta(&BarnesRequest::principal(s, Complex64::new(1.0, 0.0), &[Complex64::new(1.0, 0.0)])?, EVAL_TOL)?
        .value)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pv(v: &[Complex64]) -> Result<ParameterVector> {
    ParameterVector::from_complex(v)
}

fn minus_one() -> DirectedComplex {
    DirectedComplex::new(1.0, PI).expect("unit modulus")
}

// ---------------------------------------------------------------------------
// Bilateral zeta

/// `ξ_1(s, z | e^{πi})` from its definition vs the Lipschitz formula.
pub fn check_lipschitz(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    (0..ctx.count(5))
        .map(|i| {
            let s = ctx.s(1.6, 5.0);
            let z = ctx.upper(0.3, 1.5);
            let params = json!({"s": s, "z": z});
            report(format!("lipschitz[{i}]"), params, tol, || {
                let req = BilateralRequest::new(s, d(z)?, minus_one(), pv(&[])?)?;
                Ok((xi_series(&req, EVAL_TOL)?.value, xi_fourier_normal(s, z, &pv(&[])?, EVAL_TOL)?.value))
            })
        })
        .collect()
}

/// Series vs Fourier expansion of `ξ_{r+1}(s, z | e^{πi}; ω)` for `r ≤ 3`.
pub fn check_fourier_xi(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let n = ctx.count(4);
    let mut out = Vec::new();
    for r in 0..=3usize {
        for i in 0..n {
            let s = ctx.s(r as f64 + 1.6, r as f64 + 4.0);
            let z = Complex64::from_polar(ctx.uniform(0.5, 1.5), ctx.uniform(0.7, 2.4));
            let w = ctx.upper_params(r, 0.7, 2.4);
            let params = json!({"r": r, "s": s, "z": z, "omegas": w});
            out.push(report(format!("fourier_xi[r={r},{i}]"), params, tol, || {
                let omegas = pv(&w)?;
                let req = BilateralRequest::new(s, d(z)?, minus_one(), omegas.clone())?;
                Ok((xi_series(&req, EVAL_TOL)?.value, xi_fourier_normal(s, z, &omegas, EVAL_TOL)?.value))
            }));
        }
    }
    out
}

/// `ξ(1-m) = 0` exactly, and the difference quotient at `1-m` against the
/// derivative series.
pub fn check_xi_zero(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let fd = ctx.fd_tol();
    let mut out = Vec::new();
    for m in 1..=5u32 {
        let r = (m as usize - 1) % 3;
        let z = ctx.upper(0.3, 1.2);
        let w = ctx.upper_params(r, 0.4, 2.7);
        let s0 = c(1.0 - m as f64, 0.0);
        let params = json!({"m": m, "z": z, "omegas": w});
        out.push(report(format!("xi_zero[m={m}]"), params.clone(), tol, || {
            Ok((xi_fourier_normal(s0, z, &pv(&w)?, EVAL_TOL)?.value, c(0.0, 0.0)))
        }));
        out.push(report(format!("xi_zero_derivative[m={m}]"), params, fd, || {
            let omegas = pv(&w)?;
            let lhs = derivative(|s| Ok(xi_fourier_normal(s, z, &omegas, EVAL_TOL)?.value), s0)?;
            Ok((lhs, xi_deriv_nonpos(m, z, &omegas, EVAL_TOL)?))
        }));
    }
    out
}

/// `exp(-∂ξ/∂s(0, z | e^{πi}; ω)) = (x; q)_{r,∞}`.
pub fn check_qfact_deriv(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let n = ctx.count(3);
    let mut out = Vec::new();
    for r in 0..=3usize {
        for i in 0..n {
            let z = ctx.upper(0.1, 1.0);
            let w = ctx.upper_params(r, 0.4, 2.7);
            let params = json!({"r": r, "z": z, "omegas": w});
            out.push(report(format!("qfact_deriv[r={r},{i}]"), params, tol, || {
                let lhs = (-xi_deriv_nonpos(1, z, &pv(&w)?, EVAL_TOL)?).exp();
                let e = |u: Complex64| (c(0.0, 2.0 * PI) * u).exp();
                let rhs = qpoch_multi(&QData::new(e(z), w.iter().map(|&u| e(u)).collect()), EVAL_TOL)?;
                Ok((lhs, rhs))
            }));
        }
    }
    out
}

/// `1/(Γ_{r+1}(z|1,ω) Γ_{r+1}(1-z|1,e^{-πi}ω)) = exp{(-1)^{r+1}πi/(r+1)! B_{r+1,r+1}(z|1,ω)} (x;q)_{r,∞}`
/// for real `z ∈ (0, 1)`.
pub fn check_reflection(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let fd = ctx.fd_tol();
    let mut out = Vec::new();
    for r in 1..=2usize {
        for &a in &[0.3, 0.5, 0.71] {
            let w = ctx.upper_params(r, 0.6, 2.5);
            let params = json!({"r": r, "z": a, "omegas": w});
            out.push(report(format!("reflection[r={r},z={a}]"), params, fd, || {
                let one = DirectedComplex::new(1.0, 0.0)?;
                let omegas = pv(&w)?;
                let first = omegas.prepend(one);
                let second = omegas.rotate(-PI).prepend(one);
                let l1 = log_multiple_gamma(&DirectedComplex::new(a, 0.0)?, &first, EVAL_TOL)?;
                let l2 = log_multiple_gamma(&DirectedComplex::new(1.0 - a, 0.0)?, &second, EVAL_TOL)?;
                let lhs = (-(l1 + l2)).exp();
                let mut all = vec![c(1.0, 0.0)];
                all.extend_from_slice(&w);
                let b = multiple_bernoulli(r + 1, c(a, 0.0), &all)?;
                let sign = if (r + 1) % 2 == 0 { 1.0 } else { -1.0 };
                let e = |u: Complex64| (c(0.0, 2.0 * PI) * u).exp();
                let q = qpoch_multi(&QData::new(e(c(a, 0.0)), w.iter().map(|&u| e(u)).collect()), EVAL_TOL)?;
                let rhs = (c(0.0, sign * PI / factorial(r as u32 + 1)) * b).exp() * q;
                Ok((lhs, rhs))
            }));
        }
    }
    out
}

/// `f_±`: Barnes definition, alternating bilateral sum and Fourier form.
pub fn check_f_pm_forms(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let n = ctx.count(3);
    let mut out = Vec::new();
    for r in 2..=3usize {
        for i in 0..n {
            let omegas = ctx.ordered(r);
            let z = ctx.in_d(&omegas);
            let s_big = ctx.s(r as f64 + 1.6, r as f64 + 3.0);
            let s_small = ctx.s(-3.0, r as f64);
            for sign in [Sign::Plus, Sign::Minus] {
                let tag = if sign == Sign::Plus { "+" } else { "-" };
                let params = json!({"r": r, "s": s_big, "z": z, "omegas": omegas.values()});
                let om = omegas.clone();
                out.push(report(format!("f_pm_forms_barnes_fourier[{tag},r={r},{i}]"), params.clone(), tol, || {
                    let bar = match sign {
                        Sign::Plus => f_plus_barnes(s_big, &d(z)?, &om, EVAL_TOL)?,
                        Sign::Minus => f_minus_barnes(s_big, &d(z)?, &om, EVAL_TOL)?,
                    };
                    Ok((bar, f_pm(sign, s_big, z, &om, EVAL_TOL)?.value))
                }));
                out.push(report(format!("f_pm_forms_barnes_bilateral[{tag},r={r},{i}]"), params, tol, || {
                    let bar = match sign {
                        Sign::Plus => f_plus_barnes(s_big, &d(z)?, &omegas, EVAL_TOL)?,
                        Sign::Minus => f_minus_barnes(s_big, &d(z)?, &omegas, EVAL_TOL)?,
                    };
                    Ok((bar, f_pm_bilateral(sign, s_big, z, &omegas, EVAL_TOL)?))
                }));
                let params = json!({"r": r, "s": s_small, "z": z, "omegas": omegas.values()});
                out.push(report(format!("f_pm_forms_bilateral_fourier[{tag},r={r},{i}]"), params, tol, || {
                    Ok((
                        f_pm_bilateral(sign, s_small, z, &omegas, EVAL_TOL)?,
                        f_pm(sign, s_small, z, &omegas, EVAL_TOL)?.value,
                    ))
                }));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Modular identities

const TAUS: [Complex64; 4] = [
    Complex64 { re: 0.0, im: 1.0 },
    Complex64 { re: 0.3, im: 1.2 },
    Complex64 { re: -0.4, im: 0.8 },
    Complex64 { re: 1.7, im: 0.6 },
];

/// `η(-1/τ) = √(τ/i) η(τ)` with the principal square root.
pub fn check_eta_inversion(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let mut taus = TAUS.to_vec();
    for _ in 0..ctx.count(2) {
        taus.push(ctx.tau());
    }
    let mut out: Vec<IdentityReport> = taus
        .iter()
        .enumerate()
        .map(|(i, &tau)| {
            report(format!("eta[{i}]"), json!({"tau": tau}), tol, || {
                let lhs = dedekind_eta(-1.0 / tau, EVAL_TOL)?;
                let rhs = (tau / c(0.0, 1.0)).sqrt() * dedekind_eta(tau, EVAL_TOL)?;
                Ok((lhs, rhs))
            })
        })
        .collect();
    out.push(report("eta_fixed_point".to_string(), json!({"tau": c(0.0, 1.0)}), tol, || {
        let i = c(0.0, 1.0);
        Ok((dedekind_eta(-1.0 / i, EVAL_TOL)?, dedekind_eta(i, EVAL_TOL)?))
    }));
    out
}

fn ramanujan_taus(ctx: &mut Ctx) -> Vec<Complex64> {
    let mut taus = vec![c(0.0, 1.0), c(0.2, 1.1)];
    for _ in 0..ctx.count(1) {
        taus.push(ctx.tau());
    }
    taus
}

/// Ramanujan's formula for `ζ(2N+1)`.
pub fn check_ramanujan(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let taus = ramanujan_taus(ctx);
    let mut out = Vec::new();
    for nn in 1..=2u32 {
        for (i, &tau) in taus.iter().enumerate() {
            out.push(report(format!("ramanujan[N={nn},{i}]"), json!({"N": nn, "tau": tau}), tol, || {
                let k = 2 * nn + 1;
                let zeta = riemann_zeta(c(k as f64, 0.0))?;
                let sum = |t: Complex64| -> Result<Complex64> {
                    let omegas = ParameterVector::new(vec![d(t)?]);
                    // Σ n^{-k} q^n/(1-q^n) = (2πi)^{k-1}/(k-1)! ∂ξ_2/∂s(1-k, t | e^{πi}; t)
                    let dv = xi_deriv_nonpos(k, t, &omegas, EVAL_TOL)?;
                    Ok(dv * c(0.0, 2.0 * PI).powi(k as i32 - 1) / factorial(k - 1))
                };
                let lhs = zeta * 0.5 + sum(tau)?;
                let b = multiple_bernoulli(2 + 2 * nn as usize, c(0.0, 0.0), &[tau, c(1.0, 0.0)])?;
                let rhs = tau.powi(2 * nn as i32) * (zeta * 0.5 + sum(-1.0 / tau)?)
                    + c(0.0, 2.0 * PI).powi(k as i32) * b * (0.5 / factorial(2 * nn + 2));
                Ok((lhs, rhs))
            }));
        }
    }
    out
}

/// Inversion of the Lambert series `Σ n^{2N-1} q^n/(1-q^n)`.
pub fn check_eisenstein(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let taus = ramanujan_taus(ctx);
    let mut out = Vec::new();
    for nn in 1..=3u32 {
        for (i, &tau) in taus.iter().enumerate() {
            out.push(report(format!("eisenstein[N={nn},{i}]"), json!({"N": nn, "tau": tau}), tol, || {
                let shift = bernoulli_number(2 * nn as usize)? / (4.0 * nn as f64);
                let lhs = lambert_sum(nn, -1.0 / tau, EVAL_TOL)? - shift;
                let mut rhs = tau.powi(2 * nn as i32) * (lambert_sum(nn, tau, EVAL_TOL)? - shift);
                if nn == 1 {
                    rhs -= tau / c(0.0, 4.0 * PI);
                }
                Ok((lhs, rhs))
            }));
        }
    }
    out
}

/// Both closed displays of the double zeta function.
pub fn check_double_zeta(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let fd = ctx.fd_tol();
    let mut out = Vec::new();
    for &s_re in &[2.5, 3.2, -0.7] {
        let w = ctx.upper_params(2, 0.4, 2.7);
        let s = c(s_re, 0.0);
        out.push(report(format!("double_zeta_difference[s={s_re}]"), json!({"s": s, "omegas": w}), tol, || {
            let omegas = pv(&w)?;
            let a = barnes_zeta(&BarnesRequest::new(s, omegas.get(1)?, omegas.clone()), EVAL_TOL)?.value;
            let b = barnes_zeta(&BarnesRequest::new(s, omegas.get(2)?, omegas.clone()), EVAL_TOL)?.value;
            let rhs = (cpow(&omegas.get(1)?, -s) - cpow(&omegas.get(2)?, -s)) * riemann_zeta(s)?;
            Ok((a - b, rhs))
        }));
    }
    for nn in 1..=2u32 {
        let w = ctx.upper_params(2, 0.4, 2.7);
        let z = ctx.upper(0.2, 1.0);
        out.push(report(format!("double_zeta_limit[N={nn}]"), json!({"N": nn, "z": z, "omegas": w}), fd, || {
            let omegas = pv(&w)?;
            let s0 = 2.0 * nn as f64;
            let at = |h: f64| -> Result<Complex64> {
                let s = c(s0 + h, 0.0);
                let v = barnes_zeta(&BarnesRequest::new(s, d(z)?, omegas.clone()), EVAL_TOL)?.value;
                Ok((c(1.0, 0.0) - exp_i_pi(s)) * v)
            };
            let sym = |h: f64| -> Result<Complex64> { Ok((at(h)? + at(-h)?) * 0.5) };
            let lhs = (sym(FD_STEP)? * 4.0 - sym(2.0 * FD_STEP)?) / 3.0;
            let rhs = if nn == 1 { c(0.0, -PI) / (w[0] * w[1]) } else { c(0.0, 0.0) };
            Ok((lhs, rhs))
        }));
    }
    out
}

/// Closed forms for `∂g/∂s(0)`, `∂g/∂s(-2N)` and `g(2N)`.
pub fn check_g_closed_forms(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let fd = ctx.fd_tol();
    let taus = ramanujan_taus(ctx);
    let mut out = Vec::new();
    for (i, &tau) in taus.iter().enumerate() {
        let g = move |s: Complex64| -> Result<Complex64> { Ok(g_function(s, tau, EVAL_TOL)?.value) };
        out.push(report(format!("g_closed_forms_eta[{i}]"), json!({"tau": tau}), fd, || {
            let lhs = derivative(g, c(0.0, 0.0))?;
            let ipi = c(0.0, PI);
            let rhs = -ipi / 4.0 + ipi / 12.0 * (tau + 1.0 / tau) + tau.ln() * 0.5;
            Ok((lhs, rhs))
        }));
        for nn in 1..=2u32 {
            out.push(report(format!("g_closed_forms_ramanujan[N={nn},{i}]"), json!({"N": nn, "tau": tau}), fd, || {
                let lhs = derivative(g, c(-2.0 * nn as f64, 0.0))?;
                let k = 2 * nn as usize;
                let b = multiple_bernoulli(2 + k, c(0.0, 0.0), &[c(1.0, 0.0), tau])?;
                let sign = if nn % 2 == 0 { 1.0 } else { -1.0 };
                let rhs = c(0.0, PI) * b / ((k + 2) * (k + 1)) as f64
                    + (tau.powi(k as i32) - 1.0)
                        * riemann_zeta(c(k as f64 + 1.0, 0.0))?
                        * (sign * 0.5 * factorial(k as u32) * (2.0 * PI).powi(-(k as i32)));
                Ok((lhs, rhs))
            }));
        }
        for nn in 1..=3u32 {
            out.push(report(
                format!("g_closed_forms_eisenstein[N={nn},{i}]"),
                json!({"N": nn, "tau": tau}),
                tol,
                || {
                    let k = 2 * nn as usize;
                    let lhs = g(c(k as f64, 0.0))?;
                    let zeta_even =
                        c(0.0, 2.0 * PI).powi(k as i32) * (-0.5 * bernoulli_number(k)? / factorial(k as u32));
                    let mut rhs = (tau.powi(-(k as i32)) - 1.0) * zeta_even;
                    if nn == 1 {
                        rhs += c(0.0, PI) / tau;
                    }
                    Ok((lhs, rhs))
                },
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Barnes zeta

/// Fourier route vs direct sum for `Re s > r`, and the limit of the Fourier
/// expansion at `s = 1-m` vs the Bernoulli special values.
pub fn check_barnes_fourier(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let n = ctx.count(4);
    let mut out = Vec::new();
    let fourier = BarnesOptions { route: Route::Fourier, ..Default::default() };
    for r in 2..=3usize {
        for i in 0..n {
            let omegas = ctx.ordered(r);
            let z = ctx.in_d(&omegas);
            let s = ctx.s(r as f64 + 0.6, r as f64 + 3.0);
            let params = json!({"r": r, "s": s, "z": z, "omegas": omegas.values()});
            out.push(report(format!("barnes_fourier[r={r},{i}]"), params, tol, || {
                let req = BarnesRequest::new(s, d(z)?, omegas.clone());
                Ok((barnes_zeta_with(&req, EVAL_TOL, &fourier)?.value, barnes_zeta_direct(&req, EVAL_TOL)?.value))
            }));
        }
        let omegas = ctx.ordered(r);
        let z = ctx.in_d(&omegas);
        for m in 1..=3u32 {
            let params = json!({"r": r, "m": m, "z": z, "omegas": omegas.values()});
            out.push(report(format!("barnes_special_value[r={r},m={m}]"), params, tol, || {
                let req = BarnesRequest::new(c(1.0 - m as f64, 0.0), d(z)?, omegas.clone());
                let lhs = barnes_zeta_fourier(&req, EVAL_TOL)?.value;
                Ok((lhs, barnes_fourier_nonpositive(m, &d(z)?, &omegas, EVAL_TOL)?))
            }));
        }
    }
    out
}

/// Rank-one Fourier expansion (Hurwitz functional equation) vs the
/// continuation, for `Re s < 0`.
pub fn check_hurwitz_fe(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    (0..ctx.count(5))
        .map(|i| {
            let w = Complex64::from_polar(ctx.uniform(0.7, 1.4), ctx.uniform(0.3, PI - 0.3));
            let a = ctx.uniform(0.1, 0.9);
            let s = ctx.s(-3.0, -0.2);
            let params = json!({"s": s, "a": a, "omega": w});
            report(format!("hurwitz_fe[{i}]"), params, tol, || {
                let req = BarnesRequest::principal(s, w * a, &[w])?;
                Ok((barnes_zeta_fourier(&req, EVAL_TOL)?.value, barnes_zeta_continued(&req, EVAL_TOL)?.value))
            })
        })
        .collect()
}

/// `Σ_k ω_k^{e} Σ_{n≠0} n^p e^{2πinz_k} ∏_{j≠k} (1 - e^{2πinω_jk})^{-1}` for integer `p`.
fn two_sided_sum(p: i32, e: i32, z: Complex64, omegas: &ParameterVector) -> Result<Complex64> {
    let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
    let blocks = fourier_blocks(c(p as f64, 0.0), &d(z)?, omegas, Side::Both, EVAL_TOL)?;
    Ok(blocks.iter().map(|b| b.omega_k.to_complex().powi(e) * (b.plus + b.minus * sign)).sum())
}

/// Fourier series of the multiple Bernoulli polynomials.
pub fn check_bernoulli_fourier(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let mut out = Vec::new();
    // r = 1: B_{1,m}(aω|ω) = -m!/(2πi)^m ω^{m-1} Σ_{n≠0} e^{2πina}/n^m
    let w = Complex64::from_polar(ctx.uniform(0.7, 1.4), ctx.uniform(0.3, PI - 0.3));
    let a = ctx.uniform(0.1, 0.9);
    for m in 1..=3u32 {
        out.push(report(format!("bernoulli_fourier[r=1,m={m}]"), json!({"m": m, "a": a, "omega": w}), tol, || {
            let x = Complex64::from_polar(1.0, 2.0 * PI * a);
            let f = |n: f64| c(n.powi(-(m as i32)), 0.0);
            let sp = unimodular_series(x, f, EVAL_TOL)?.value;
            let sm = unimodular_series(x.conj(), f, EVAL_TOL)?.value;
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let sum = sp + sm * sign;
            let rhs = -sum * w.powi(m as i32 - 1) * factorial(m) / c(0.0, 2.0 * PI).powi(m as i32);
            Ok((multiple_bernoulli(m as usize, w * a, &[w])?, rhs))
        }));
    }
    for r in 2..=3usize {
        let omegas = ctx.ordered(r);
        let z = ctx.in_d(&omegas);
        for m in 0..=4usize {
            let params = json!({"r": r, "m": m, "z": z, "omegas": omegas.values()});
            out.push(report(format!("bernoulli_fourier[r={r},m={m}]"), params, tol, || {
                let p = r as i32 - 1 - m as i32;
                let sum = two_sided_sum(p, m as i32 - r as i32, z, &omegas)?;
                let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
                let rhs = sum * c(0.0, 2.0 * PI).powi(p) * (sign * factorial(m as u32));
                Ok((multiple_bernoulli(m, z, &omegas.values())?, rhs))
            }));
        }
    }
    out
}

/// `Σ_k ω_k^{-(r+m)} Σ_{n≠0} n^{r+m-1} e^{2πinz_k} ∏ (1 - e^{2πinω_jk})^{-1} = 0`.
pub fn check_bernoulli_vanish(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let mut out = Vec::new();
    for r in 2..=3usize {
        let omegas = ctx.ordered(r);
        let z = ctx.in_d(&omegas);
        for m in 1..=2i32 {
            let params = json!({"r": r, "m": m, "z": z, "omegas": omegas.values()});
            out.push(report(format!("bernoulli_vanish[r={r},m={m}]"), params, tol, || {
                let sum = two_sided_sum(r as i32 + m - 1, -(r as i32 + m), z, &omegas)?;
                Ok((sum, c(0.0, 0.0)))
            }));
        }
    }
    out
}

/// The multiple Iseki formula: product forms at `N = 0`, series forms at
/// `N = 1`, each against the other sign and against a difference quotient.
pub fn check_iseki(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let fd = ctx.fd_tol();
    let mut out = Vec::new();
    for r in 2..=3usize {
        let omegas = ctx.ordered(r);
        let z = ctx.in_d(&omegas);
        let params = json!({"r": r, "z": z, "omegas": omegas.values()});
        let sign_r = if r % 2 == 0 { 1.0 } else { -1.0 };
        let f = |s: Complex64| -> Result<Complex64> {
            let a = barnes_zeta(&BarnesRequest::new(s, d(z)?, omegas.clone()), EVAL_TOL)?.value;
            let b = barnes_zeta(&BarnesRequest::new(s, d(omegas.sum() - z)?, omegas.clone()), EVAL_TOL)?.value;
            Ok(a - b * sign_r)
        };
        let brr = |n: usize| multiple_bernoulli(n, z, &omegas.values());
        let product = |sign: Sign| -> Result<Complex64> {
            let e = if sign == Sign::Plus { sign_r } else { -sign_r };
            let pre = (c(0.0, e * PI / factorial(r as u32)) * brr(r)?).exp();
            Ok(pre * iseki_product(sign, &d(z)?, &omegas, EVAL_TOL)?)
        };
        let series = |sign: Sign, nn: u32| -> Result<Complex64> {
            let e = if sign == Sign::Plus { -sign_r } else { sign_r };
            let k = 2 * nn;
            let b = brr(r + k as usize)? * (c(0.0, e * PI) * factorial(k) / factorial(k + r as u32));
            Ok(b + f_deriv_nonpos(sign, k + 1, z, &omegas, EVAL_TOL)?)
        };
        out.push(report(format!("iseki_product[r={r}]"), params.clone(), tol, || {
            Ok((product(Sign::Plus)?, product(Sign::Minus)?))
        }));
        out.push(report(format!("iseki_product_derivative[r={r}]"), params.clone(), fd, || {
            Ok(((-derivative(f, c(0.0, 0.0))?).exp(), product(Sign::Plus)?))
        }));
        out.push(report(format!("iseki_series[r={r},N=1]"), params.clone(), tol, || {
            Ok((series(Sign::Plus, 1)?, series(Sign::Minus, 1)?))
        }));
        out.push(report(format!("iseki_series_derivative[r={r},N=1]"), params, fd, || {
            Ok((derivative(f, c(-2.0, 0.0))?, series(Sign::Plus, 1)?))
        }));
    }
    out
}

/// The six classical identities of the multiple Bernoulli polynomials.
pub fn check_bernoulli_identities(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let mut out = Vec::new();
    for i in 0..ctx.count(2) {
        let r = 1 + i % 3;
        let w: Vec<Complex64> = (0..r).map(|_| ctx.upper(-1.0, 1.0) + c(0.0, 0.0)).collect();
        let w: Vec<Complex64> = w.iter().map(|&u| if u.norm() < 0.3 { u + 0.5 } else { u }).collect();
        let z = c(ctx.uniform(-1.0, 1.0), ctx.uniform(-1.0, 1.0));
        let cc = c(ctx.uniform(-1.5, 1.5), ctx.uniform(-1.5, 1.5));
        let n = 1 + (i * 2 + 3) % 6;
        let j = i % r;
        let params = json!({"r": r, "n": n, "z": z, "omegas": w, "c": cc, "j": j + 1});
        let b = |n: usize, z: Complex64, w: &[Complex64]| multiple_bernoulli(n, z, w);
        let hat: Vec<Complex64> = w.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &u)| u).collect();
        let mut neg = w.clone();
        neg[j] = -neg[j];
        let sum: Complex64 = w.iter().sum();
        let sign_n = if n % 2 == 0 { 1.0 } else { -1.0 };
        let nf = n as f64;
        let scaled: Vec<Complex64> = w.iter().map(|&u| u * cc).collect();
        let cases: Vec<(&str, Box<dyn Fn() -> Result<(Complex64, Complex64)>>)> = vec![
            ("homogeneity", Box::new(|| Ok((b(n, cc * z, &scaled)?, cc.powi(n as i32 - r as i32) * b(n, z, &w)?)))),
            ("reflection", Box::new(|| Ok((b(n, sum - z, &w)?, b(n, z, &w)? * sign_n)))),
            ("difference", Box::new(|| Ok((b(n, z + w[j], &w)? - b(n, z, &w)?, b(n - 1, z, &hat)? * nf)))),
            ("negation", Box::new(|| Ok((b(n, z, &neg)?, -b(n, z + w[j], &w)?)))),
            ("negation_sum", Box::new(|| Ok((b(n, z, &w)? + b(n, z, &neg)?, -b(n - 1, z, &hat)? * nf)))),
            (
                "derivative",
                Box::new(|| {
                    let poly = multiple_bernoulli_poly(n, &w)?;
                    let dz = poly
                        .coeffs()
                        .iter()
                        .enumerate()
                        .skip(1)
                        .rev()
                        .fold(c(0.0, 0.0), |acc, (k, a)| acc * z + a * k as f64);
                    Ok((dz, b(n - 1, z, &w)? * nf))
                }),
            ),
        ];
        for (label, f) in cases {
            out.push(report(format!("bernoulli_identities_{label}[{i}]"), params.clone(), tol, f));
        }
    }
    out
}

/// Homogeneity and shift relations of `ζ_r` and `ξ_{r+1}`.
pub fn check_homogeneity_shift(ctx: &mut Ctx) -> Vec<IdentityReport> {
    let tol = ctx.tol;
    let mut out = Vec::new();
    let cont = BarnesOptions { route: Route::Continuation, ..Default::default() };
    for i in 0..ctx.count(2) {
        let r = 2 + i % 2;
        let w = ctx.upper_params(r, 0.6, 2.4);
        let z = ctx.upper(0.2, 1.0);
        let s = ctx.s(-1.5, r as f64 - 0.2);
        let theta = ctx.uniform(-0.5, 0.5);
        let scale = ctx.uniform(0.6, 1.6);
        let params = json!({"r": r, "s": s, "z": z, "omegas": w, "alpha": [scale, theta]});
        out.push(report(format!("barnes_homogeneity[{i}]"), params.clone(), tol, || {
            let alpha = DirectedComplex::new(scale, theta)?;
            let omegas = pv(&w)?;
            let lhs = barnes_zeta(&BarnesRequest::new(s, d(z)?.mul(&alpha), omegas.scale(&alpha)), EVAL_TOL)?.value;
            let rhs = cpow(&alpha, -s) * barnes_zeta(&BarnesRequest::new(s, d(z)?, omegas), EVAL_TOL)?.value;
            Ok((lhs, rhs))
        }));
        let k = 1 + i % r;
        out.push(report(format!("barnes_shift[{i}]"), params.clone(), tol, || {
            let omegas = pv(&w)?;
            let shifted = d(z + w[k - 1])?;
            let lhs = barnes_zeta_with(&BarnesRequest::new(s, shifted, omegas.clone()), EVAL_TOL, &cont)?.value;
            let a = barnes_zeta_with(&BarnesRequest::new(s, d(z)?, omegas.clone()), EVAL_TOL, &cont)?.value;
            let b = barnes_zeta_with(&BarnesRequest::new(s, d(z)?, omegas.hat(k)?), EVAL_TOL, &cont)?.value;
            Ok((lhs, a - b))
        }));
        // Bilateral relations with a general ω_0, series on one side and the
        // normalized Fourier expansion on the other.
        let rb = r - 1;
        let s_big = ctx.s(rb as f64 + 1.8, rb as f64 + 3.5);
        let omega0 = Complex64::from_polar(ctx.uniform(0.8, 1.3), ctx.uniform(2.2, 2.9));
        let wb = ctx.upper_params(rb, 1.0, 2.0);
        let zb = Complex64::from_polar(ctx.uniform(0.5, 1.2), ctx.uniform(0.9, 2.1));
        let params = json!({"r": rb, "s": s_big, "z": zb, "omega0": omega0, "omegas": wb});
        out.push(report(format!("xi_periodicity[{i}]"), params.clone(), tol, || {
            let req = BilateralRequest::new(s_big, d(zb + omega0)?, d(omega0)?, pv(&wb)?)?;
            let base = BilateralRequest::new(s_big, d(zb)?, d(omega0)?, pv(&wb)?)?;
            Ok((xi_series(&req, EVAL_TOL)?.value, xi(&base, EVAL_TOL)?.value))
        }));
        out.push(report(format!("xi_shift[{i}]"), params.clone(), tol, || {
            let omegas = pv(&wb)?;
            let req = BilateralRequest::new(s_big, d(zb + wb[0])?, d(omega0)?, omegas.clone())?;
            let base = BilateralRequest::new(s_big, d(zb)?, d(omega0)?, omegas.clone())?;
            let lower = BilateralRequest::new(s_big, d(zb)?, d(omega0)?, omegas.hat(1)?)?;
            Ok((xi_series(&req, EVAL_TOL)?.value, xi(&base, EVAL_TOL)?.value - xi(&lower, EVAL_TOL)?.value))
        }));
        out.push(report(format!("xi_multiplication[{i}]"), params, tol, || {
            let alpha = DirectedComplex::new(scale, -theta.abs() * 0.3)?;
            let omegas = pv(&wb)?;
            let req = BilateralRequest::new(s_big, d(zb)?.mul(&alpha), d(omega0)?.mul(&alpha), omegas.scale(&alpha))?;
            let base = BilateralRequest::new(s_big, d(zb)?, d(omega0)?, omegas)?;
            Ok((xi_series(&req, EVAL_TOL)?.value, cpow(&alpha, -s_big) * xi(&base, EVAL_TOL)?.value))
        }));
    }
    out
}

fn dispatch(name: &str, ctx: &mut Ctx) -> Result<Vec<IdentityReport>> {
    Ok(match name {
        "lipschitz" => check_lipschitz(ctx),
        "fourier_xi" => check_fourier_xi(ctx),
        "xi_zero" => check_xi_zero(ctx),
        "qfact_deriv" => check_qfact_deriv(ctx),
        "reflection" => check_reflection(ctx),
        "f_pm_forms" => check_f_pm_forms(ctx),
        "eta" => check_eta_inversion(ctx),
        "ramanujan" => check_ramanujan(ctx),
        "eisenstein" => check_eisenstein(ctx),
        "double_zeta" => check_double_zeta(ctx),
        "g_closed_forms" => check_g_closed_forms(ctx),
        "barnes_fourier" => check_barnes_fourier(ctx),
        "hurwitz_fe" => check_hurwitz_fe(ctx),
        "bernoulli_fourier" => check_bernoulli_fourier(ctx),
        "bernoulli_vanish" => check_bernoulli_vanish(ctx),
        "iseki" => check_iseki(ctx),
        "bernoulli_identities" => check_bernoulli_identities(ctx),
        "homogeneity_shift" => check_homogeneity_shift(ctx),
        other => return Err(Error::Domain(format!("unknown suite '{other}'; known: {}", SUITES.join(", ")))),
    })
}

/// Runs one named check.
pub fn run_check(name: &str, opts: &SuiteOptions) -> Result<Vec<IdentityReport>> {
    let mut ctx = Ctx::new(name, opts);
    let start = Instant::now();
    let mut reports = dispatch(name, &mut ctx)?;
    if opts.timing {
        let ms = start.elapsed().as_secs_f64() * 1e3 / reports.len().max(1) as f64;
        for r in &mut reports {
            r.elapsed_ms = ms;
        }
    }
    Ok(reports)
}

/// Runs the named checks (all of them when `suites` is empty), in parallel,
/// returning reports in catalog order.
pub fn run_suite(suites: &[String], opts: &SuiteOptions) -> Result<Vec<IdentityReport>> {
    let names: Vec<&str> = if suites.is_empty() {
        SUITES.to_vec()
    } else {
        for s in suites {
            if !SUITES.contains(&s.as_str()) {
                return Err(Error::Domain(format!("unknown suite '{s}'; known: {}", SUITES.join(", "))));
            }
        }
        SUITES.iter().copied().filter(|n| suites.iter().any(|s| s == n)).collect()
    };
    let results: Vec<Result<Vec<IdentityReport>>> = names.par_iter().map(|n| run_check(n, opts)).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
