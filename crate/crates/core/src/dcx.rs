//! Complex numbers with a tracked argument, plus the gamma function.
//!
//! A [`DirectedComplex`] stores a modulus and a real argument that is not
//! reduced modulo `2π`.  Powers `w^s` are taken along that argument, so the
//! branch used for a parameter is decided once, when the value is built.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const TWO_PI: f64 = 2.0 * PI;

/// A nonzero complex number `modulus * e^{i argument}` with an explicit argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DirectedComplex {
    modulus: f64,
    argument: f64,
}

impl DirectedComplex {
    pub fn new(modulus: f64, argument: f64) -> Result<Self> {
        if !(modulus > 0.0) || !modulus.is_finite() || !argument.is_finite() {
            return Err(Error::Domain(format!(
                "directed complex needs a positive finite modulus, got {modulus} at arg {argument}"
            )));
        }
        Ok(Self { modulus, argument })
    }

    /// Builds the value on the principal branch, `arg ∈ (-π, π]`.
    pub fn from_principal(w: Complex64) -> Result<Self> {
        if w.re == 0.0 && w.im == 0.0 {
            return Err(Error::Domain("zero has no argument".into()));
        }
        if !w.re.is_finite() || !w.im.is_finite() {
            return Err(Error::Domain(format!("non-finite value {w}")));
        }
        let (modulus, argument) = w.to_polar();
        // atan2 returns -π for (-x, -0.0); fold it onto the principal interval.
        let argument = if argument == -PI { PI } else { argument };
        Ok(Self { modulus, argument })
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    pub fn argument(&self) -> f64 {
        self.argument
    }

    /// The argument reduced to `(-π, π]`.
    pub fn principal_arg(&self) -> f64 {
        principal_angle(self.argument)
    }

    /// Same point, argument reduced to `(-π, π]`.
    pub fn to_principal(&self) -> Self {
        Self { modulus: self.modulus, argument: self.principal_arg() }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(self.modulus, self.argument)
    }

    /// Multiplies by `e^{iθ}`.
    pub fn rotate(&self, theta: f64) -> Self {
        Self { modulus: self.modulus, argument: self.argument + theta }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { modulus: self.modulus * other.modulus, argument: self.argument + other.argument }
    }

    pub fn div(&self, other: &Self) -> Self {
        Self { modulus: self.modulus / other.modulus, argument: self.argument - other.argument }
    }

    pub fn inv(&self) -> Self {
        Self { modulus: 1.0 / self.modulus, argument: -self.argument }
    }

    /// `log w = ln|w| + i·arg w` along the stored argument.
    pub fn ln(&self) -> Complex64 {
        Complex64::new(self.modulus.ln(), self.argument)
    }

    /// `w^s = exp(s log w)` along the stored argument.
    pub fn powc(&self, s: Complex64) -> Complex64 {
        (s * self.ln()).exp()
    }
}

/// `w^s` for a directed base.
pub fn cpow(w: &DirectedComplex, s: Complex64) -> Complex64 {
    w.powc(s)
}

/// `w^s` on the principal branch; `w` must be nonzero.
pub(crate) fn cpow_principal(w: Complex64, s: Complex64) -> Complex64 {
    (s * w.ln()).exp()
}

/// Reduces an angle to `(-π, π]`.
pub fn principal_angle(theta: f64) -> f64 {
    let mut t = theta % TWO_PI;
    if t > PI {
        t -= TWO_PI;
    } else if t <= -PI {
        t += TWO_PI;
    }
    t
}

/// Distance from `s` to the nearest integer, and that integer.
pub fn nearest_integer(s: Complex64) -> (i64, f64) {
    let n = s.re.round();
    ((n as i64), Complex64::new(s.re - n, s.im).norm())
}

/// `(sin πx, cos πx)` with exact zeros at integers and half-integers.
fn sincos_pi_real(x: f64) -> (f64, f64) {
    let r = x - 2.0 * (0.5 * x).round();
    if r == 0.0 {
        return (0.0, 1.0);
    }
    if r.abs() == 1.0 {
        return (0.0, -1.0);
    }
    if r == 0.5 {
        return (1.0, 0.0);
    }
    if r == -0.5 {
        return (-1.0, 0.0);
    }
    let a = PI * r;
    (a.sin(), a.cos())
}

/// `sin(πz)`, exact at integer real parts.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let (s, c) = sincos_pi_real(z.re);
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

/// `e^{iπs}`, exact at integer and half-integer real parts.
pub fn exp_i_pi(s: Complex64) -> Complex64 {
    let (sn, cs) = sincos_pi_real(s.re);
    Complex64::new(cs, sn) * (-PI * s.im).exp()
}

// Lanczos approximation, g = 671/128, fourteen coefficients.
const LANCZOS_G: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
const LANCZOS_COEF: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// `log Γ(x)` for `Re x ≥ 1/2`, on some branch (only `exp` of it is used).
fn ln_gamma_right(x: Complex64) -> Complex64 {
    let mut y = x;
    let mut ser = Complex64::new(LANCZOS_C0, 0.0);
    for c in LANCZOS_COEF {
        y += 1.0;
        ser += c / y;
    }
    let t = x + LANCZOS_G;
    (x + 0.5) * t.ln() - t + (ser * SQRT_TWO_PI / x).ln()
}

/// The gamma function; nonpositive integers are poles.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    if s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 {
        return Err(Error::Pole(format!("{}", s.re)));
    }
    if s.im == 0.0 && s.re > 0.0 && s.re.fract() == 0.0 && s.re <= 171.0 {
        let mut f = 1.0;
        for k in 2..(s.re as u64) {
            f *= k as f64;
        }
        return Ok(Complex64::new(f, 0.0));
    }
    if s.re < 0.5 {
        // Γ(s) Γ(1-s) = π / sin(πs)
        let g = ln_gamma_right(Complex64::new(1.0, 0.0) - s).exp();
        Ok(PI / (sin_pi(s) * g))
    } else {
        Ok(ln_gamma_right(s).exp())
    }
}

/// `1/Γ(s)`, entire; exactly zero at nonpositive integers.
pub fn rgamma(s: Complex64) -> Complex64 {
    if s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if s.re < 0.5 {
        let g = ln_gamma_right(Complex64::new(1.0, 0.0) - s).exp();
        sin_pi(s) * g / PI
    } else {
        match gamma(s) {
            Ok(g) => 1.0 / g,
            Err(_) => Complex64::new(0.0, 0.0),
        }
    }
}

/// `n!` as a float.
pub fn factorial(n: u32) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Rising factorial `(s)_j = s (s+1) ... (s+j-1)`.
pub fn rising(s: Complex64, j: u32) -> Complex64 {
    (0..j).fold(Complex64::new(1.0, 0.0), |acc, k| acc * (s + k as f64))
}
