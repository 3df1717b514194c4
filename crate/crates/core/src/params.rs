//! Parameter vectors and the geometric predicates on them.
//!
//! Range operations use 1-based inclusive indices `[m, n]`; an empty range
//! (`m = n + 1`) is allowed everywhere.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dcx::DirectedComplex;
use crate::error::{Error, Result};

/// Relative tolerance for boundary detection in the geometric predicates.
pub const EPS_GEO: f64 = 1e-12;

/// Direction of the half-turn used by [`ParameterVector::neg_range`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Turn {
    /// Multiply by `e^{πi}`.
    Up,
    /// Multiply by `e^{-πi}`.
    Down,
}

impl Turn {
    pub fn angle(self) -> f64 {
        match self {
            Turn::Up => PI,
            Turn::Down => -PI,
        }
    }
}

/// Choice between the `+` and `-` members of a paired formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// An ordered list of directed parameters `ω = (ω_1, ..., ω_r)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParameterVector {
    entries: Vec<DirectedComplex>,
}

impl ParameterVector {
    pub fn new(entries: Vec<DirectedComplex>) -> Self {
        Self { entries }
    }

    /// Builds every entry on the principal branch.
    pub fn from_complex(values: &[Complex64]) -> Result<Self> {
        let entries = values.iter().map(|&w| DirectedComplex::from_principal(w)).collect::<Result<_>>()?;
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[DirectedComplex] {
        &self.entries
    }

    /// The `j`-th entry, 1-based.
    pub fn get(&self, j: usize) -> Result<DirectedComplex> {
        if j == 0 || j > self.len() {
            return Err(Error::Index(format!("index {j} outside 1..={}", self.len())));
        }
        Ok(self.entries[j - 1])
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.entries.iter().map(DirectedComplex::to_complex).collect()
    }

    /// Principal arguments in `(-π, π]`.
    pub fn principal_args(&self) -> Vec<f64> {
        self.entries.iter().map(DirectedComplex::principal_arg).collect()
    }

    fn check_range(&self, m: usize, n: usize) -> Result<()> {
        if m == 0 || m > n + 1 || n > self.len() {
            return Err(Error::Index(format!("range [{m}, {n}] invalid for length {}", self.len())));
        }
        Ok(())
    }

    /// Removes the `j`-th entry (1-based).
    pub fn hat(&self, j: usize) -> Result<Self> {
        self.get(j)?;
        let mut entries = self.entries.clone();
        entries.remove(j - 1);
        Ok(Self { entries })
    }

    /// Rotates entries `m..=n` by a half-turn in the given direction.
    pub fn neg_range(&self, m: usize, n: usize, turn: Turn) -> Result<Self> {
        self.check_range(m, n)?;
        let mut entries = self.entries.clone();
        for e in &mut entries[m - 1..n] {
            *e = e.rotate(turn.angle());
        }
        Ok(Self { entries })
    }

    /// Half-turn applied to every entry.
    pub fn neg_all(&self, turn: Turn) -> Self {
        Self { entries: self.entries.iter().map(|e| e.rotate(turn.angle())).collect() }
    }

    /// `ω_m + ... + ω_n`.
    pub fn sum_range(&self, m: usize, n: usize) -> Result<Complex64> {
        self.check_range(m, n)?;
        Ok(self.entries[m - 1..n].iter().map(DirectedComplex::to_complex).sum())
    }

    /// `ω_m ⋯ ω_n`, with arguments added.
    pub fn prod_range(&self, m: usize, n: usize) -> Result<DirectedComplex> {
        self.check_range(m, n)?;
        let one = DirectedComplex::new(1.0, 0.0)?;
        Ok(self.entries[m - 1..n].iter().fold(one, |acc, e| acc.mul(e)))
    }

    /// `|ω|⁺ = ω_1 + ... + ω_r`.
    pub fn sum(&self) -> Complex64 {
        self.entries.iter().map(DirectedComplex::to_complex).sum()
    }

    /// `|ω|^× = ω_1 ⋯ ω_r` as a plain complex number.
    pub fn product(&self) -> Complex64 {
        self.entries.iter().map(DirectedComplex::to_complex).product()
    }

    /// Multiplies every entry by `alpha`.
    pub fn scale(&self, alpha: &DirectedComplex) -> Self {
        Self { entries: self.entries.iter().map(|e| e.mul(alpha)).collect() }
    }

    /// Every entry with its argument reduced to `(-π, π]`.
    pub fn to_principal(&self) -> Self {
        Self { entries: self.entries.iter().map(DirectedComplex::to_principal).collect() }
    }

    /// Rotates every entry by `theta`.
    pub fn rotate(&self, theta: f64) -> Self {
        Self { entries: self.entries.iter().map(|e| e.rotate(theta)).collect() }
    }

    /// Entries sorted by increasing principal argument (stable).
    pub fn sorted_by_arg(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.sort_by(|a, b| a.principal_arg().total_cmp(&b.principal_arg()));
        Self { entries }
    }

    pub fn push(&mut self, w: DirectedComplex) {
        self.entries.push(w);
    }

    pub fn prepend(&self, w: DirectedComplex) -> Self {
        let mut entries = Vec::with_capacity(self.len() + 1);
        entries.push(w);
        entries.extend_from_slice(&self.entries);
        Self { entries }
    }
}

fn spread(args: &[f64]) -> f64 {
    let max = args.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = args.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

/// Opening condition: the directed arguments of `z` and all `ω_j` span
/// less than `π`.
pub fn check_oc(z: &DirectedComplex, omegas: &ParameterVector) -> bool {
    let mut args: Vec<f64> = omegas.entries().iter().map(|w| w.argument()).collect();
    args.push(z.argument());
    spread(&args) < PI
}

/// Same as [`check_oc`] without the point `z`.
pub fn check_oc_params(omegas: &ParameterVector) -> bool {
    let args: Vec<f64> = omegas.entries().iter().map(|w| w.argument()).collect();
    omegas.is_empty() || spread(&args) < PI
}

/// Strong opening condition for the bilateral zeta data `(z, ω_0, ω)`.
pub fn check_soc(z: &DirectedComplex, omega0: &DirectedComplex, omegas: &ParameterVector) -> Result<bool> {
    let a0 = omega0.argument();
    if !(a0 > 0.0 && a0 <= PI) {
        return Err(Error::Domain(format!("arg ω_0 = {a0} outside (0, π]")));
    }
    let lower = a0 - PI;
    let az = z.principal_arg();
    let z_ok = az >= lower && az <= a0;
    Ok(z_ok && omegas.principal_args().iter().all(|&a| a > lower && a < a0))
}

/// Ordered rotation condition: `0 < arg ω_1 < ... < arg ω_r < π`.
pub fn check_orc(omegas: &ParameterVector) -> bool {
    let args = omegas.principal_args();
    args.iter().all(|&a| a > 0.0 && a < PI) && args.windows(2).all(|w| w[0] < w[1])
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Membership in the open zonotope `D = {Σ a_k ω_k : 0 < a_k < 1}`.
///
/// Every `ω_k` must lie in the upper half-plane.  Points within
/// `EPS_GEO` (relative to `Σ|ω_k|`) of the boundary give a `Boundary` error.
pub fn in_cone_d(z: Complex64, omegas: &ParameterVector) -> Result<bool> {
    in_cone_d_with(z, omegas, EPS_GEO)
}

pub fn in_cone_d_with(z: Complex64, omegas: &ParameterVector, eps: f64) -> Result<bool> {
    if omegas.is_empty() {
        return Err(Error::Domain("D is undefined for r = 0".into()));
    }
    let gens = omegas.values();
    if gens.iter().any(|g| !(g.im > 0.0)) {
        return Err(Error::Domain("D needs every ω_k in the upper half-plane".into()));
    }
    let scale: f64 = gens.iter().map(|g| g.norm()).sum();
    let tol = eps * scale;
    let total: Complex64 = gens.iter().sum();

    let mut sorted = gens.clone();
    sorted.sort_by(|a, b| a.arg().total_cmp(&b.arg()));
    let collinear = sorted.iter().all(|g| cross(sorted[0], *g).abs() <= tol * g.norm());
    if collinear {
        // D degenerates to the open segment (0, Σ ω_k).
        let len = total.norm();
        let perp = cross(total, z) / len;
        if perp.abs() > tol {
            return Ok(false);
        }
        let t = (z * total.conj()).re / len;
        if t < -tol || t > len + tol {
            return Ok(false);
        }
        if t <= tol || t >= len - tol {
            return Err(Error::Boundary(format!("{z} is an endpoint of D")));
        }
        return Ok(true);
    }

    let mut verts = Vec::with_capacity(2 * sorted.len() + 1);
    let mut p = Complex64::new(0.0, 0.0);
    verts.push(p);
    for g in &sorted {
        p += g;
        verts.push(p);
    }
    for g in &sorted {
        p -= g;
        verts.push(p);
    }
    let mut min_dist = f64::INFINITY;
    for w in verts.windows(2) {
        let edge = w[1] - w[0];
        let len = edge.norm();
        if len == 0.0 {
            continue;
        }
        min_dist = min_dist.min(cross(edge, z - w[0]) / len);
    }
    if min_dist > tol {
        Ok(true)
    } else if min_dist < -tol {
        Ok(false)
    } else {
        Err(Error::Boundary(format!("{z} lies on the boundary of D")))
    }
}

/// `arg ω_r < arg z < π`, using principal arguments.
pub fn in_sector_dplus(z: Complex64, omegas: &ParameterVector) -> bool {
    let Some(last) = omegas.entries().last() else { return false };
    if z == Complex64::new(0.0, 0.0) {
        return false;
    }
    let a = z.arg();
    a > last.principal_arg() && a < PI
}

/// `0 < arg z < arg ω_1`, using principal arguments.
pub fn in_sector_dminus(z: Complex64, omegas: &ParameterVector) -> bool {
    let Some(first) = omegas.entries().first() else { return false };
    if z == Complex64::new(0.0, 0.0) {
        return false;
    }
    let a = z.arg();
    a > 0.0 && a < first.principal_arg()
}

/// Data normalized with respect to the `k`-th parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedParams {
    /// 1-based index of the pivot parameter.
    pub k: usize,
    /// `z / ω_k` with argument `arg z - arg ω_k`.
    pub z_k: DirectedComplex,
    /// `ω_j / ω_k` for `j ≠ k`, in the original order.
    pub omega_jk: Vec<Complex64>,
    /// `e^{2πi z_k}`.
    pub x_k: Complex64,
    /// `e^{2πi ω_jk}` for `j ≠ k`.
    pub q_jk: Vec<Complex64>,
}

impl NormalizedParams {
    pub fn z_k_value(&self) -> Complex64 {
        self.z_k.to_complex()
    }
}

fn e2pi(w: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * w).exp()
}

/// Divides `z` and the remaining parameters by `ω_k` (1-based `k`).
pub fn normalize(z: &DirectedComplex, omegas: &ParameterVector, k: usize) -> Result<NormalizedParams> {
    let wk = omegas.get(k)?;
    let z_k = z.div(&wk);
    let omega_jk: Vec<Complex64> =
        omegas.entries().iter().enumerate().filter(|(j, _)| j + 1 != k).map(|(_, w)| w.div(&wk).to_complex()).collect();
    let q_jk = omega_jk.iter().map(|&w| e2pi(w)).collect();
    Ok(NormalizedParams { k, z_k, omega_jk, x_k: e2pi(z_k.to_complex()), q_jk })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pv(v: &[Complex64]) -> ParameterVector {
        ParameterVector::from_complex(v).unwrap()
    }

    #[test]
    fn range_operations() {
        let w = pv(&[c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 1.0)]);
        let h = w.hat(2).unwrap().values();
        assert_eq!(h.len(), 2);
        assert!((h[1] - c(-1.0, 1.0)).norm() < 1e-15);
        assert!(w.hat(0).is_err());
        assert!(w.hat(4).is_err());
        assert_eq!(w.neg_range(4, 3, Turn::Up).unwrap(), w);
        assert_eq!(w.sum_range(2, 1).unwrap(), c(0.0, 0.0));
        assert_eq!(w.sum(), c(0.0, 2.0));
        let n = w.neg_range(1, 2, Turn::Down).unwrap();
        assert!((n.entries()[1].argument() + PI / 2.0).abs() < 1e-15);
        assert_eq!(w.prod_range(3, 2).unwrap().to_complex(), c(1.0, 0.0));
    }

    #[test]
    fn cone_d_examples() {
        assert!(matches!(in_cone_d(c(0.5, 0.5), &pv(&[c(1.0, 0.0), c(0.0, 1.0)])), Err(Error::Domain(_))));
        let w = pv(&[c(1.0, 0.2), c(0.0, 1.0)]);
        assert!(in_cone_d(c(0.5, 0.6), &w).unwrap());
        assert!(!in_cone_d(c(1.5, 0.5), &w).unwrap());
        assert!(matches!(in_cone_d(c(0.5, 0.1), &w), Err(Error::Boundary(_))));
        assert!(in_cone_d(w.sum() * 0.5, &w).unwrap());
        assert!(matches!(in_cone_d(c(1.0, 0.2), &w), Err(Error::Boundary(_))));
        let w1 = pv(&[c(0.0, 2.0)]);
        assert!(in_cone_d(c(0.0, 1.0), &w1).unwrap());
        assert!(!in_cone_d(c(0.1, 1.0), &w1).unwrap());
        assert!(matches!(in_cone_d(c(0.0, 2.0), &w1), Err(Error::Boundary(_))));
    }

    #[test]
    fn sectors() {
        let w = pv(&[c(1.0, 0.5), c(0.2, 1.0)]);
        assert!(in_sector_dplus(c(-1.0, 0.5), &w));
        assert!(in_sector_dminus(c(1.0, 0.1), &w));
        assert!(!in_sector_dplus(c(1.0, 0.0), &w));
        assert!(!in_sector_dminus(c(1.0, 0.0), &w));
    }

    #[test]
    fn conditions() {
        let one = DirectedComplex::new(1.0, 0.0).unwrap();
        let w = pv(&[c(1.0, 1.0), c(-1.0, 1.0)]);
        assert!(check_oc(&one.rotate(PI / 2.0), &w));
        assert!(!check_oc(&one.rotate(-PI / 2.0), &w));
        assert!(check_orc(&w));
        assert!(!check_orc(&pv(&[c(-1.0, 1.0), c(1.0, 1.0)])));
        let tau = DirectedComplex::from_principal(c(0.3, 1.2)).unwrap();
        let z = DirectedComplex::from_principal(c(1.0, 0.0)).unwrap();
        assert!(check_soc(&z, &tau, &pv(&[c(1.0, 0.0)])).unwrap());
        assert!(check_soc(&z, &one.rotate(-0.1), &w).is_err());
    }

    #[test]
    fn normalize_tracks_argument() {
        let z = DirectedComplex::from_principal(c(-1.0, 0.1)).unwrap();
        let w = pv(&[c(1.0, 0.0), c(0.0, 1.0)]);
        let n = normalize(&z, &w, 2).unwrap();
        assert!((n.z_k.argument() - (z.argument() - PI / 2.0)).abs() < 1e-15);
        assert!((n.omega_jk[0] - c(0.0, -1.0)).norm() < 1e-15);
    }

    proptest! {
        #[test]
        fn zonotope_matches_coordinates(a in 0.02f64..0.98, b in 0.02f64..0.98,
                                        t1 in 0.2f64..1.3, t2 in 1.5f64..2.9) {
            let w1 = Complex64::from_polar(1.0, t1);
            let w2 = Complex64::from_polar(1.3, t2);
            let w = pv(&[w1, w2]);
            let z = w1 * a + w2 * b;
            prop_assert!(in_cone_d(z, &w).unwrap());
            let out = w1 * (a + 1.1) + w2 * b;
            prop_assert!(!in_cone_d(out, &w).unwrap());
        }

        #[test]
        fn hat_then_len(r in 1usize..6, j in 1usize..6) {
            let v: Vec<Complex64> = (0..r).map(|k| c(1.0, k as f64 + 1.0)).collect();
            let w = pv(&v);
            if j <= r {
                prop_assert_eq!(w.hat(j).unwrap().len(), r - 1);
            } else {
                prop_assert!(w.hat(j).is_err());
            }
        }
    }
}
