//! Bernoulli numbers and multiple Bernoulli polynomials `B_{r,n}(z | ω)`.
//!
//! The generating function is
//! `t^r e^{zt} / ∏_j (e^{ω_j t} - 1) = Σ_n B_{r,n}(z|ω) t^{n-r} / n!`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::dcx::factorial;
use crate::error::{Error, Result};

/// Largest index served by [`bernoulli_number`].
pub const MAX_BERNOULLI_INDEX: usize = 64;

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // B_m = -1/(m+1) Σ_{k<m} C(m+1, k) B_k, exact in rationals.
        let mut exact: Vec<BigRational> = Vec::with_capacity(MAX_BERNOULLI_INDEX + 1);
        exact.push(BigRational::from_integer(BigInt::from(1)));
        for m in 1..=MAX_BERNOULLI_INDEX {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::from(1);
            for (k, b) in exact.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * b;
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            exact.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        exact.iter().map(|b| b.to_f64().unwrap_or(f64::NAN)).collect()
    })
}

/// The Bernoulli number `B_m` with the convention `B_1 = -1/2`.
pub fn bernoulli_number(m: usize) -> Result<f64> {
    table().get(m).copied().ok_or_else(|| Error::Range(format!("B_{m} exceeds the table limit {MAX_BERNOULLI_INDEX}")))
}

/// Power series in `t` truncated after the `t^{len-1}` term.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn one(len: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); len];
        if len > 0 {
            coeffs[0] = Complex64::new(1.0, 0.0);
        }
        Self { coeffs }
    }

    /// `t / (e^{ωt} - 1) = Σ_m B_m ω^{m-1} t^m / m!`, times `ω` so that the
    /// series starts at 1.
    pub fn bernoulli_factor(omega: Complex64, len: usize) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(len);
        let mut pow = Complex64::new(1.0, 0.0);
        for m in 0..len {
            coeffs.push(pow * bernoulli_number(m)? / factorial(m as u32));
            pow *= omega;
        }
        Ok(Self { coeffs })
    }

    /// `e^{zt}`.
    pub fn exponential(z: Complex64, len: usize) -> Self {
        let mut coeffs = Vec::with_capacity(len);
        let mut term = Complex64::new(1.0, 0.0);
        for m in 0..len {
            coeffs.push(term);
            term = term * z / (m + 1) as f64;
        }
        Self { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        let mut out = vec![Complex64::new(0.0, 0.0); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }
}

/// `B_{r,n}(z | ω)` as a polynomial in `z` of degree `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliPoly {
    /// Coefficient of `z^j` at index `j`.
    coeffs: Vec<Complex64>,
}

impl BernoulliPoly {
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

/// Builds `B_{r,n}(· | ω)` with `r = ω.len()`.
pub fn multiple_bernoulli_poly(n: usize, omegas: &[Complex64]) -> Result<BernoulliPoly> {
    if n > MAX_BERNOULLI_INDEX {
        return Err(Error::Range(format!("order {n} exceeds {MAX_BERNOULLI_INDEX}")));
    }
    if omegas.iter().any(|w| w.norm() == 0.0) {
        return Err(Error::Domain("multiple Bernoulli polynomial needs nonzero ω_j".into()));
    }
    let len = n + 1;
    let mut p = TruncatedSeries::one(len);
    for &w in omegas {
        p = p.mul(&TruncatedSeries::bernoulli_factor(w, len)?);
    }
    let norm: Complex64 = omegas.iter().product();
    let nfact = factorial(n as u32);
    // [t^n] p(t) e^{zt}: the z^j coefficient is p_{n-j} / j!.
    let coeffs = (0..=n).map(|j| p.coeffs()[n - j] * nfact / (factorial(j as u32) * norm)).collect();
    Ok(BernoulliPoly { coeffs })
}

/// `B_{r,n}(z | ω)` with `r = ω.len()`.
pub fn multiple_bernoulli(n: usize, z: Complex64, omegas: &[Complex64]) -> Result<Complex64> {
    Ok(multiple_bernoulli_poly(n, omegas)?.eval(z))
}

/// The classical Bernoulli polynomial `B_n(z)`.
pub fn bernoulli_poly(n: usize, z: Complex64) -> Result<Complex64> {
    multiple_bernoulli(n, z, &[Complex64::new(1.0, 0.0)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli_number(0).unwrap(), 1.0);
        assert_eq!(bernoulli_number(1).unwrap(), -0.5);
        assert!((bernoulli_number(2).unwrap() - 1.0 / 6.0).abs() < 1e-16);
        assert_eq!(bernoulli_number(3).unwrap(), 0.0);
        assert!((bernoulli_number(12).unwrap() + 691.0 / 2730.0).abs() < 1e-15);
        // B_60 = -1215233140483755572040304994079820246041491 / 56786730
        let b60 = -1215233140483755572040304994079820246041491.0 / 56786730.0;
        assert!((bernoulli_number(60).unwrap() / b60 - 1.0).abs() < 1e-14);
        assert!(matches!(bernoulli_number(65), Err(Error::Range(_))));
    }

    #[test]
    fn classical_polynomials() {
        let z = c(0.3, -0.7);
        let b2 = z * z - z + 1.0 / 6.0;
        assert!(close(bernoulli_poly(2, z).unwrap(), b2, 1e-15));
        let b3 = z * z * z - 1.5 * z * z + 0.5 * z;
        assert!(close(bernoulli_poly(3, z).unwrap(), b3, 1e-15));
    }

    #[test]
    fn rank_two_closed_form() {
        // B_{2,2}(z|ω1,ω2) = z²/(ω1ω2) - (ω1+ω2)z/(ω1ω2) + (ω1²+ω2²+3ω1ω2)/(6ω1ω2)
        let (w1, w2, z) = (c(1.0, 0.3), c(-0.4, 1.1), c(0.7, 0.2));
        let p = w1 * w2;
        let want = z * z / p - (w1 + w2) * z / p + (w1 * w1 + w2 * w2 + 3.0 * p) / (6.0 * p);
        assert!(close(multiple_bernoulli(2, z, &[w1, w2]).unwrap(), want, 1e-14));
    }

    #[test]
    fn order_zero_is_inverse_product() {
        let w = [c(1.0, 0.3), c(-0.4, 1.1), c(0.2, 2.0)];
        let want = 1.0 / (w[0] * w[1] * w[2]);
        assert!(close(multiple_bernoulli(0, c(5.0, 1.0), &w).unwrap(), want, 1e-15));
    }

    #[test]
    fn rank_zero_is_monomial() {
        let z = c(0.4, 0.9);
        assert!(close(multiple_bernoulli(3, z, &[]).unwrap(), z * z * z, 1e-15));
    }

    proptest! {
        #[test]
        fn difference_equation(zr in -2.0f64..2.0, zi in -2.0f64..2.0,
                               a in 0.2f64..2.0, b in -1.0f64..1.0, n in 1usize..9) {
            // B_{r,n}(z + ω_1 | ω) - B_{r,n}(z | ω) = n B_{r-1,n-1}(z | ω without ω_1)
            let z = c(zr, zi);
            let w = [c(a, b), c(0.3, 1.0)];
            let lhs = multiple_bernoulli(n, z + w[0], &w).unwrap() - multiple_bernoulli(n, z, &w).unwrap();
            let rhs = multiple_bernoulli(n - 1, z, &w[1..]).unwrap() * n as f64;
            prop_assert!(close(lhs, rhs, 1e-11));
        }

        #[test]
        fn symmetric_in_parameters(zr in -2.0f64..2.0, n in 0usize..8) {
            let z = c(zr, 0.4);
            let w = [c(1.0, 0.3), c(-0.4, 1.1), c(0.2, 2.0)];
            let v = [w[2], w[0], w[1]];
            prop_assert!(close(multiple_bernoulli(n, z, &w).unwrap(), multiple_bernoulli(n, z, &v).unwrap(), 1e-12));
        }
    }
}
