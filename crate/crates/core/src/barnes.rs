//! The Barnes multiple zeta function
//! `ζ_r(s, z | ω) = Σ_{m ∈ N_0^r} (z + m·ω)^{-s}`.
//!
//! Four evaluation paths are provided:
//!
//! * [`barnes_zeta_direct`]: the lattice sum for `Re s > r + 1/2`, with the
//!   tail in each coordinate replaced by an Euler–Maclaurin expansion.
//! * [`barnes_zeta_continued`]: the same nested Euler–Maclaurin recursion used
//!   as an analytic continuation to every non-integer `s`.
//! * [`barnes_zeta_fourier`]: the Fourier expansion valid for `z` in the open
//!   zonotope `D` under the ordered rotation condition.
//! * [`barnes_zeta`]: a dispatcher that rotates the data, shifts `z` into `D`
//!   and picks one of the above.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bernoulli::{bernoulli_number, multiple_bernoulli};
use crate::dcx::{cpow, cpow_principal, exp_i_pi, factorial, gamma, nearest_integer, rising, DirectedComplex};
use crate::error::{Error, Result};
use crate::params::{check_oc, check_orc, in_cone_d, normalize, ParameterVector};
use crate::qseries::{unimodular_series, weighted_q_series};

/// Distance from an integer below which `s` is treated as that integer.
pub const EPS_INT: f64 = 1e-9;

/// The code path that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Direct,
    Fourier,
    SpecialValue,
    Reduction,
    Continuation,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Fourier => "fourier",
            Method::SpecialValue => "special_value",
            Method::Reduction => "reduction",
            Method::Continuation => "continuation",
        }
    }
}

/// A computed value with an error estimate and provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub err_estimate: f64,
    pub terms_used: usize,
    pub method: Method,
}

/// Arguments of `ζ_r(s, z | ω)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BarnesRequest {
    pub s: Complex64,
    pub z: DirectedComplex,
    pub omegas: ParameterVector,
}

impl BarnesRequest {
    pub fn new(s: Complex64, z: DirectedComplex, omegas: ParameterVector) -> Self {
        Self { s, z, omegas }
    }

    /// Convenience constructor with every value on the principal branch.
    pub fn principal(s: Complex64, z: Complex64, omegas: &[Complex64]) -> Result<Self> {
        Ok(Self { s, z: DirectedComplex::from_principal(z)?, omegas: ParameterVector::from_complex(omegas)? })
    }

    pub fn rank(&self) -> usize {
        self.omegas.len()
    }
}

/// Which evaluation path [`barnes_zeta_with`] may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Route {
    /// Direct sum when it converges fast, otherwise Fourier with shift
    /// reduction, falling back to the continuation.
    #[default]
    Auto,
    Direct,
    /// Fourier expansion with rotation and shift reduction, no fallback.
    Fourier,
    Continuation,
}

/// Rule for picking the next shift while moving `z` into `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ReductionOrder {
    /// The move that brings `z` closest to the centre of `D`.
    #[default]
    NearestCentroid,
    /// The lowest-index move that brings `z` closer to the centre of `D`.
    IndexOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BarnesOptions {
    pub route: Route,
    pub order: ReductionOrder,
    pub max_shifts: usize,
}

impl Default for BarnesOptions {
    fn default() -> Self {
        Self { route: Route::Auto, order: ReductionOrder::NearestCentroid, max_shifts: 64 }
    }
}

// ---------------------------------------------------------------------------
// Nested Euler–Maclaurin evaluation

const EM_TARGET: f64 = 1e-17;
const EM_MAX_K: usize = 15;
const EM_MAX_N: usize = 20_000;

struct EmContext {
    /// Cosine of the half-opening of a cone containing every lattice point.
    cos_h: f64,
    leaves: usize,
}

/// Chooses the number `N` of explicit terms and `K` of correction terms.
fn em_plan(s: Complex64, z: Complex64, w1: Complex64, cos_h: f64) -> (usize, usize) {
    let coeffs: Vec<f64> = (1..=EM_MAX_K)
        .map(|k| {
            let b = bernoulli_number(2 * k).unwrap_or(0.0).abs() / factorial(2 * k as u32);
            b * rising(s, 2 * k as u32 - 1).norm()
        })
        .collect();
    let zn = z.norm();
    for n in 1..=EM_MAX_N {
        let wn = (z + w1 * n as f64).norm();
        let d = cos_h * wn;
        let damp = if s.re > 0.0 { (zn / d).powf(s.re).min(1.0) } else { 1.0 };
        let ratio = w1.norm() / d;
        let mut best = (f64::INFINITY, 1);
        for (k, c) in coeffs.iter().enumerate() {
            let t = c * ratio.powi(2 * k as i32 + 1) * damp;
            if t < best.0 {
                best = (t, k + 1);
            }
        }
        if best.0 <= EM_TARGET {
            return (n, best.1);
        }
    }
    (EM_MAX_N, EM_MAX_K)
}

/// `ζ_r(s, z | ws)` by Euler–Maclaurin in the first coordinate, recursively.
/// Every value is on the principal branch; returns `(value, error, magnitude)`
/// where `magnitude` bounds the sum of absolute contributions, for rounding.
fn em_zeta(s: Complex64, z: Complex64, ws: &[Complex64], ctx: &mut EmContext) -> (Complex64, f64, f64) {
    let Some((&w1, rest)) = ws.split_first() else {
        ctx.leaves += 1;
        let v = cpow_principal(z, -s);
        return (v, 0.0, v.norm());
    };
    let (n, k_max) = em_plan(s, z, w1, ctx.cos_h);
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut mag = 0.0;
    for m in 0..n {
        let (v, e, g) = em_zeta(s, z + w1 * m as f64, rest, ctx);
        value += v;
        err += e;
        mag += g;
    }
    let wn = z + w1 * n as f64;
    let one = Complex64::new(1.0, 0.0);
    let (v, e, g) = em_zeta(s - one, wn, rest, ctx);
    let scale = 1.0 / ((s - one) * w1);
    value += v * scale;
    err += e * scale.norm();
    mag += g * scale.norm();
    let (v, e, g) = em_zeta(s, wn, rest, ctx);
    value += v * 0.5;
    err += 0.5 * e;
    mag += 0.5 * g;
    let mut last = 0.0;
    let mut w_pow = w1;
    for k in 1..=k_max {
        let j = 2 * k as u32 - 1;
        let c = rising(s, j) * w_pow * (bernoulli_number(2 * k).unwrap_or(0.0) / factorial(2 * k as u32));
        let (v, e, g) = em_zeta(s + j as f64, wn, rest, ctx);
        let term = c * v;
        value += term;
        err += e * c.norm();
        mag += g * c.norm();
        last = term.norm();
        w_pow *= w1 * w1;
    }
    (value, err + last, mag)
}

/// Directed arguments of `z` and every `ω_j`, with their midpoint.
fn directed_mid(z: &DirectedComplex, omegas: &ParameterVector) -> (f64, f64) {
    let mut args: Vec<f64> = omegas.entries().iter().map(|w| w.argument()).collect();
    args.push(z.argument());
    let max = args.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = args.iter().copied().fold(f64::INFINITY, f64::min);
    (0.5 * (max + min), max - min)
}

fn require_oc(req: &BarnesRequest) -> Result<()> {
    if !check_oc(&req.z, &req.omegas) {
        return Err(Error::Domain("z and ω do not lie in a common open half-plane".into()));
    }
    Ok(())
}

/// Rotates the data onto the positive real axis so that the principal
/// branch of every lattice power agrees with the directed arguments, then
/// restores the factor `e^{-is·mid}`.
fn em_eval(req: &BarnesRequest, method: Method) -> EvalResult {
    let (mid, spread) = directed_mid(&req.z, &req.omegas);
    let mut ctx = EmContext { cos_h: (0.5 * spread).cos(), leaves: 0 };
    let ws = req.omegas.rotate(-mid).values();
    let (value, err, mag) = em_zeta(req.s, req.z.rotate(-mid).to_complex(), &ws, &mut ctx);
    let phase = exp_i_pi(-req.s * (mid / PI));
    let (value, err, mag) = (value * phase, err * phase.norm(), mag * phase.norm());
    let err = err + 4.0 * f64::EPSILON * mag;
    EvalResult { value, err_estimate: err, terms_used: ctx.leaves, method }
}

/// Integer handling shared by all paths: `Some(result)` when `s` is an
/// integer that the caller should not evaluate itself.
fn integer_case(req: &BarnesRequest) -> Option<Result<EvalResult>> {
    let r = req.rank();
    let (n, dist) = nearest_integer(req.s);
    if dist >= EPS_INT {
        return None;
    }
    if n <= 0 {
        let m = (1 - n) as u32;
        return Some(barnes_special_value(m, req.z.to_complex(), &req.omegas).map(|value| EvalResult {
            value,
            err_estimate: 1e-15 * value.norm(),
            terms_used: 0,
            method: Method::SpecialValue,
        }));
    }
    if n as usize <= r {
        return Some(Err(Error::Pole(format!("{n} is a pole of ζ_{r}"))));
    }
    None
}

/// The lattice sum for `Re s > r + 1/2`, tails summed by Euler–Maclaurin.
pub fn barnes_zeta_direct(req: &BarnesRequest, _tol: f64) -> Result<EvalResult> {
    require_oc(req)?;
    let r = req.rank();
    if r == 0 {
        return Ok(EvalResult {
            value: cpow(&req.z, -req.s),
            err_estimate: 0.0,
            terms_used: 1,
            method: Method::Direct,
        });
    }
    if !(req.s.re > r as f64 + 0.5) {
        return Err(Error::Convergence(format!("direct sum needs Re s > {}, got {}", r as f64 + 0.5, req.s.re)));
    }
    Ok(em_eval(req, Method::Direct))
}

/// Analytic continuation by the nested Euler–Maclaurin recursion; valid for
/// every `s` that is not a pole.
pub fn barnes_zeta_continued(req: &BarnesRequest, _tol: f64) -> Result<EvalResult> {
    require_oc(req)?;
    if req.rank() == 0 {
        return Ok(EvalResult {
            value: cpow(&req.z, -req.s),
            err_estimate: 0.0,
            terms_used: 1,
            method: Method::Direct,
        });
    }
    if let Some(res) = integer_case(req) {
        return res;
    }
    Ok(em_eval(req, Method::Continuation))
}

// ---------------------------------------------------------------------------
// Special values and residues

/// `ζ_r(1-m, z | ω) = (-1)^r (m-1)!/(m+r-1)! B_{r, r+m-1}(z | ω)` for `m ≥ 1`.
pub fn barnes_special_value(m: u32, z: Complex64, omegas: &ParameterVector) -> Result<Complex64> {
    if m == 0 {
        return Err(Error::Domain("special values are indexed by m ≥ 1".into()));
    }
    let r = omegas.len();
    let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
    let b = multiple_bernoulli(r + m as usize - 1, z, &omegas.values())?;
    Ok(b * (sign * factorial(m - 1) / factorial(m + r as u32 - 1)))
}

/// `Res_{s=m} ζ_r(s, z | ω) = (-1)^{r-m} B_{r,r-m}(z | ω) / ((m-1)! (r-m)!)`.
pub fn barnes_residue(m: u32, z: Complex64, omegas: &ParameterVector) -> Result<Complex64> {
    let r = omegas.len() as u32;
    if m == 0 || m > r {
        return Err(Error::Domain(format!("ζ_{r} has poles only at s = 1..={r}, not {m}")));
    }
    let sign = if (r - m) % 2 == 0 { 1.0 } else { -1.0 };
    let b = multiple_bernoulli((r - m) as usize, z, &omegas.values())?;
    Ok(b * (sign / (factorial(m - 1) * factorial(r - m))))
}

// ---------------------------------------------------------------------------
// Fourier expansion

/// Per-parameter blocks `Σ_{n≥1} n^p e^{±2πinz_k} ∏_{j≠k} (1 - e^{±2πinω_jk})^{-1}`.
#[derive(Debug, Clone)]
pub(crate) struct FourierBlock {
    pub omega_k: DirectedComplex,
    pub plus: Complex64,
    pub minus: Complex64,
    pub tail_plus: f64,
    pub tail_minus: f64,
    pub terms: usize,
}

pub(crate) enum Side {
    Plus,
    Minus,
    Both,
}

/// Computes the blocks for `r ≥ 2`; a side that is not requested is zero.
pub(crate) fn fourier_blocks(
    p: Complex64,
    z: &DirectedComplex,
    omegas: &ParameterVector,
    side: Side,
    tol: f64,
) -> Result<Vec<FourierBlock>> {
    let r = omegas.len();
    let mut out = Vec::with_capacity(r);
    for k in 1..=r {
        let np = normalize(z, omegas, k)?;
        let zk = np.z_k_value();
        let zero = Complex64::new(0.0, 0.0);
        let (plus, tail_plus, t1) = match side {
            Side::Plus | Side::Both => {
                let s = weighted_q_series(p, zk, &np.omega_jk, tol)?;
                (s.value, s.tail, s.terms)
            }
            Side::Minus => (zero, 0.0, 0),
        };
        let (minus, tail_minus, t2) = match side {
            Side::Minus | Side::Both => {
                let neg: Vec<Complex64> = np.omega_jk.iter().map(|w| -w).collect();
                let s = weighted_q_series(p, -zk, &neg, tol)?;
                (s.value, s.tail, s.terms)
            }
            Side::Plus => (zero, 0.0, 0),
        };
        out.push(FourierBlock { omega_k: omegas.get(k)?, plus, minus, tail_plus, tail_minus, terms: t1 + t2 });
    }
    Ok(out)
}

/// `e^{2πia}` and `a = z/ω_1` for rank one; `a` must be real.
fn rank_one_ratio(z: &DirectedComplex, omegas: &ParameterVector) -> Result<f64> {
    let w = omegas.get(1)?.to_complex();
    let a = z.to_complex() / w;
    if a.im.abs() > 1e-12 * a.norm().max(1.0) || !(a.re > 0.0 && a.re < 1.0) {
        return Err(Error::Domain(format!("rank-one Fourier expansion needs z = a·ω_1 with 0 < a < 1, got a = {a}")));
    }
    Ok(a.re)
}

/// The Fourier expansion without integer screening.
fn fourier_core(s: Complex64, z: &DirectedComplex, omegas: &ParameterVector, tol: f64) -> Result<EvalResult> {
    let one = Complex64::new(1.0, 0.0);
    let pref = ((s - one) * (2.0 * PI).ln()).exp() * gamma(one - s)?;
    let e_plus = exp_i_pi((s - one) * 0.5);
    let e_minus = exp_i_pi(-(s - one) * 0.5);
    let series_tol = tol.min(1e-15);
    if omegas.len() == 1 {
        let a = rank_one_ratio(z, omegas)?;
        let p = s - one;
        let f = |n: f64| (p * n.ln()).exp();
        let xp = Complex64::from_polar(1.0, 2.0 * PI * a);
        let sp = unimodular_series(xp, f, series_tol)?;
        let sm = unimodular_series(xp.conj(), f, series_tol)?;
        let wk = cpow(&omegas.get(1)?, -s);
        let value = pref * wk * (e_plus * sp.value + e_minus * sm.value);
        let err = (pref * wk).norm() * (sp.tail + sm.tail) + 1e-14 * value.norm();
        return Ok(EvalResult { value, err_estimate: err, terms_used: sp.terms + sm.terms, method: Method::Fourier });
    }
    let blocks = fourier_blocks(s - one, z, omegas, Side::Both, series_tol)?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut terms = 0;
    for b in &blocks {
        let wk = cpow(&b.omega_k, -s);
        value += wk * (e_plus * b.plus + e_minus * b.minus);
        err += wk.norm() * (e_plus.norm() * b.tail_plus + e_minus.norm() * b.tail_minus);
        terms += b.terms;
    }
    Ok(EvalResult { value: pref * value, err_estimate: pref.norm() * err, terms_used: terms, method: Method::Fourier })
}

fn require_fourier_geometry(req: &BarnesRequest) -> Result<()> {
    let r = req.rank();
    if r == 0 {
        return Err(Error::Domain("Fourier expansion needs r ≥ 1".into()));
    }
    if !check_orc(&req.omegas) {
        return Err(Error::Domain("Fourier expansion needs 0 < arg ω_1 < ... < arg ω_r < π".into()));
    }
    if r >= 2 {
        match in_cone_d(req.z.to_complex(), &req.omegas) {
            Ok(true) => {}
            Ok(false) => return Err(Error::Domain(format!("z = {} is outside D", req.z.to_complex()))),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

/// The Fourier expansion of `ζ_r`, for `z ∈ D` and ordered parameters in
/// the upper half-plane.
///
/// Nonpositive integers use the special values; integers above `r` fall back
/// to the direct sum since the expansion has a removable singularity there.
pub fn barnes_zeta_fourier(req: &BarnesRequest, tol: f64) -> Result<EvalResult> {
    require_fourier_geometry(req)?;
    if let Some(res) = integer_case(req) {
        return res;
    }
    let (n, dist) = nearest_integer(req.s);
    if dist < EPS_INT && n as usize > req.rank() {
        return barnes_zeta_direct(req, tol);
    }
    fourier_core(req.s, &req.z, &req.omegas, tol)
}

/// `ζ_r(1-m, z | ω)` from the limit of the Fourier expansion:
/// `(m-1)!/(2πi)^m Σ_k ω_k^{m-1} Σ_{n≠0} e^{2πinz_k} n^{-m} ∏_{j≠k} (1 - e^{2πinω_jk})^{-1}`.
pub fn barnes_fourier_nonpositive(
    m: u32,
    z: &DirectedComplex,
    omegas: &ParameterVector,
    tol: f64,
) -> Result<Complex64> {
    let req = BarnesRequest::new(Complex64::new(1.0 - m as f64, 0.0), *z, omegas.clone());
    require_fourier_geometry(&req)?;
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let p = Complex64::new(-(m as f64), 0.0);
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let sum = if omegas.len() == 1 {
        let a = rank_one_ratio(z, omegas)?;
        let xp = Complex64::from_polar(1.0, 2.0 * PI * a);
        let f = |n: f64| Complex64::new(n.powi(-(m as i32)), 0.0);
        let sp = unimodular_series(xp, f, tol)?;
        let sm = unimodular_series(xp.conj(), f, tol)?;
        omegas.get(1)?.to_complex().powi(m as i32 - 1) * (sp.value + sm.value * sign)
    } else {
        fourier_blocks(p, z, omegas, Side::Both, tol)?
            .iter()
            .map(|b| b.omega_k.to_complex().powi(m as i32 - 1) * (b.plus + b.minus * sign))
            .sum()
    };
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    Ok(sum * factorial(m - 1) / two_pi_i.powi(m as i32))
}

// ---------------------------------------------------------------------------
// Dispatcher

struct Reduced {
    value: Complex64,
    err: f64,
    terms: usize,
    shifts: usize,
}

fn centre_distance(z: Complex64, centre: Complex64) -> f64 {
    (z - centre).norm()
}

/// Moves `z` into `D` by lattice shifts and evaluates the Fourier expansion.
fn fourier_reduced(req: &BarnesRequest, tol: f64, opts: &BarnesOptions) -> Result<Reduced> {
    let r = req.rank();
    let (mid, _) = directed_mid(&req.z, &req.omegas);
    let theta = PI / 2.0 - mid;
    let omegas = req.omegas.rotate(theta).sorted_by_arg();
    let sorted = omegas.principal_args();
    if sorted.windows(2).any(|w| w[1] - w[0] < 1e-9) {
        return Err(Error::Domain("Fourier expansion needs pairwise distinct arguments".into()));
    }
    let ws = omegas.values();
    let centre = omegas.sum() * 0.5;
    let mut z = req.z.rotate(theta).to_complex();
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut terms = 0;
    let mut shifts = 0;
    let sub_opts = BarnesOptions { route: Route::Auto, ..*opts };
    loop {
        let inside = if r == 1 {
            rank_one_ratio(&DirectedComplex::from_principal(z)?, &omegas).is_ok()
        } else {
            match in_cone_d(z, &omegas) {
                Ok(b) => b,
                Err(Error::Boundary(_)) => false,
                Err(e) => return Err(e),
            }
        };
        if inside {
            break;
        }
        if shifts >= opts.max_shifts {
            return Err(Error::Reduction(format!("z not in D after {shifts} shifts")));
        }
        let here = centre_distance(z, centre);
        let mut best: Option<(usize, f64, f64)> = None;
        for (k, w) in ws.iter().enumerate() {
            for sign in [1.0, -1.0] {
                let cand = z + w * sign;
                if !(cand.im > 0.0) {
                    continue;
                }
                let d = centre_distance(cand, centre);
                if d >= here * (1.0 - 1e-12) {
                    continue;
                }
                let better = match (opts.order, best) {
                    (_, None) => true,
                    (ReductionOrder::NearestCentroid, Some((_, _, bd))) => d < bd,
                    (ReductionOrder::IndexOrder, Some(_)) => false,
                };
                if better {
                    best = Some((k, sign, d));
                }
            }
        }
        let Some((k, sign, _)) = best else {
            return Err(Error::Reduction(format!("no lattice shift moves z = {z} towards D")));
        };
        let hat = omegas.hat(k + 1)?;
        // ζ_r(z) = ζ_r(z + ω_k) + ζ_{r-1}(z | ω̂_k)  and
        // ζ_r(z) = ζ_r(z - ω_k) - ζ_{r-1}(z - ω_k | ω̂_k).
        let base = if sign > 0.0 { z } else { z - ws[k] };
        let sub = BarnesRequest::new(req.s, DirectedComplex::from_principal(base)?, hat);
        let part = barnes_zeta_with(&sub, tol, &sub_opts)?;
        value += part.value * sign;
        err += part.err_estimate;
        terms += part.terms_used;
        z = base + if sign > 0.0 { ws[k] } else { Complex64::new(0.0, 0.0) };
        shifts += 1;
    }
    let zd = DirectedComplex::from_principal(z)?;
    let f = fourier_core(req.s, &zd, &omegas, tol)?;
    let alpha = DirectedComplex::new(1.0, theta)?;
    let scale = cpow(&alpha, req.s);
    Ok(Reduced {
        value: scale * (value + f.value),
        err: scale.norm() * (err + f.err_estimate),
        terms: terms + f.terms_used,
        shifts,
    })
}

/// Evaluates `ζ_r(s, z | ω)` by the most suitable path.
pub fn barnes_zeta(req: &BarnesRequest, tol: f64) -> Result<EvalResult> {
    barnes_zeta_with(req, tol, &BarnesOptions::default())
}

/// [`barnes_zeta`] with an explicit route and reduction order.
pub fn barnes_zeta_with(req: &BarnesRequest, tol: f64, opts: &BarnesOptions) -> Result<EvalResult> {
    require_oc(req)?;
    let r = req.rank();
    if r == 0 {
        return barnes_zeta_direct(req, tol);
    }
    if let Some(res) = integer_case(req) {
        return res;
    }
    let fourier = |req: &BarnesRequest| {
        fourier_reduced(req, tol, opts).map(|red| EvalResult {
            value: red.value,
            err_estimate: red.err,
            terms_used: red.terms,
            method: if red.shifts > 0 { Method::Reduction } else { Method::Fourier },
        })
    };
    match opts.route {
        Route::Direct => barnes_zeta_direct(req, tol),
        Route::Continuation => barnes_zeta_continued(req, tol),
        Route::Fourier => {
            if nearest_integer(req.s).1 < EPS_INT {
                return barnes_zeta_direct(req, tol);
            }
            fourier(req)
        }
        Route::Auto => {
            if req.s.re > r as f64 + 0.5 {
                return barnes_zeta_direct(req, tol);
            }
            match fourier(req) {
                Ok(v) => Ok(v),
                Err(Error::Reduction(_) | Error::Domain(_) | Error::Boundary(_) | Error::Convergence(_)) => {
                    barnes_zeta_continued(req, tol)
                }
                Err(e) => Err(e),
            }
        }
    }
}

/// `∂ζ_r/∂s (0, z | ω)` by a fourth-order central difference.
pub fn log_multiple_gamma(z: &DirectedComplex, omegas: &ParameterVector, tol: f64) -> Result<Complex64> {
    let h = 1e-3;
    let at = |s: f64| -> Result<Complex64> {
        Ok(barnes_zeta(&BarnesRequest::new(Complex64::new(s, 0.0), *z, omegas.clone()), tol)?.value)
    };
    let d1 = at(h)? - at(-h)?;
    let d2 = at(2.0 * h)? - at(-2.0 * h)?;
    Ok((d1 * 8.0 - d2) / (12.0 * h))
}

/// `Γ_r(z | ω) = exp(∂ζ_r/∂s (0, z | ω))`.
pub fn multiple_gamma(z: &DirectedComplex, omegas: &ParameterVector, tol: f64) -> Result<Complex64> {
    Ok(log_multiple_gamma(z, omegas, tol)?.exp())
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

    #[test]
    fn rank_zero_is_a_power() {
        let req = BarnesRequest::principal(c(0.5, 0.0), c(-1.0, 0.0), &[]).unwrap();
        let v = barnes_zeta(&req, 1e-12).unwrap().value;
        assert!((v - c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn hurwitz_at_two() {
        // ζ(2, 1) = π²/6
        let req = BarnesRequest::principal(c(2.0, 0.0), c(1.0, 0.0), &[c(1.0, 0.0)]).unwrap();
        let v = barnes_zeta_direct(&req, 1e-12).unwrap();
        assert!((v.value.re - PI * PI / 6.0).abs() < 1e-14, "{:?}", v);
        assert_eq!(v.method, Method::Direct);
    }

    #[test]
    fn riemann_continuation() {
        // ζ(-1) = -1/12 through the pole-free continuation at s = -1 ± δ
        let req = BarnesRequest::principal(c(-0.5, 0.0), c(1.0, 0.0), &[c(1.0, 0.0)]).unwrap();
        let v = barnes_zeta_continued(&req, 1e-12).unwrap().value;
        // mpmath: zeta(-0.5) = -0.207886224977354566017306720
        assert!((v.re + 0.207_886_224_977_354_57).abs() < 1e-13, "{v}");
        let req = BarnesRequest::principal(c(-1.0, 0.0), c(1.0, 0.0), &[c(1.0, 0.0)]).unwrap();
        let v = barnes_zeta(&req, 1e-12).unwrap();
        assert_eq!(v.method, Method::SpecialValue);
        assert!((v.value.re + 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn poles_are_reported() {
        let req = BarnesRequest::principal(c(2.0, 0.0), c(0.3, 0.4), &[c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert!(matches!(barnes_zeta(&req, 1e-12), Err(Error::Pole(_))));
    }

    #[test]
    fn residue_and_special_value_rank_one() {
        let w = ParameterVector::from_complex(&[c(1.0, 0.0)]).unwrap();
        assert!((barnes_residue(1, c(0.3, 0.0), &w).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        // ζ(0, a) = 1/2 - a
        assert!((barnes_special_value(1, c(0.3, 0.0), &w).unwrap() - c(0.2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn fourier_matches_direct_rank_two() {
        let w = [Complex64::from_polar(1.0, PI / 6.0), Complex64::from_polar(1.0, PI / 3.0)];
        let z = (w[0] + w[1]) * 0.5;
        let req = BarnesRequest::principal(c(3.3, 0.0), z, &w).unwrap();
        let f = barnes_zeta_fourier(&req, 1e-14).unwrap();
        let d = barnes_zeta_direct(&req, 1e-14).unwrap();
        assert!(rel(f.value, d.value) < 1e-10, "{} vs {}", f.value, d.value);
    }

    #[test]
    fn fourier_rank_one_hurwitz() {
        let w = [c(0.3, 1.0)];
        let z = w[0] * 0.5;
        let req = BarnesRequest::principal(c(2.7, 0.0), z, &w).unwrap();
        let f = barnes_zeta_fourier(&req, 1e-14).unwrap();
        let d = barnes_zeta_direct(&req, 1e-14).unwrap();
        assert!(rel(f.value, d.value) < 1e-10, "{} vs {}", f.value, d.value);
    }

    #[test]
    fn reduction_paths_agree() {
        let w = [c(1.0, 0.3), c(-0.2, 1.0)];
        let z = w[0] * 1.3 + w[1] * 1.6;
        let req = BarnesRequest::principal(c(0.4, 0.7), z, &w).unwrap();
        let a = barnes_zeta(&req, 1e-13).unwrap();
        let opts = BarnesOptions { order: ReductionOrder::IndexOrder, ..Default::default() };
        let b = barnes_zeta_with(&req, 1e-13, &opts).unwrap();
        let c_ = barnes_zeta_continued(&req, 1e-13).unwrap();
        assert_eq!(a.method, Method::Reduction);
        assert!(rel(a.value, b.value) < 1e-10, "{} vs {}", a.value, b.value);
        assert!(rel(a.value, c_.value) < 1e-10, "{} vs {}", a.value, c_.value);
    }
}
