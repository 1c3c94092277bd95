//! Coefficient fields shared by the exact and floating backends.
//!
//! Every construction in this crate is generic over [`Scalar`], so the same
//! code path produces exact rational results (ground truth) and complex
//! binary64 results (everything else).

use std::fmt::{self, Debug};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Gaussian rational: a complex number with exact rational parts.
pub type ExactComplex = Complex<BigRational>;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    /// `true` when arithmetic is exact and comparisons against zero are sharp.
    const EXACT: bool;

    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
    /// Modulus as binary64, used for scaling and residual reporting.
    fn magnitude(&self) -> f64;
    fn to_complex64(&self) -> Complex64;
    /// Embeds a real rational into the field.
    fn from_rational(r: &BigRational) -> Self;
    /// `re,im` label for reports, exact where the field is exact.
    fn label(&self) -> String;
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn to_complex64(&self) -> Complex64 {
        *self
    }
    fn from_rational(r: &BigRational) -> Self {
        Complex64::new(rational_to_f64(r), 0.0)
    }
    fn label(&self) -> String {
        format!("{},{}", fmt_sig17(self.re), fmt_sig17(self.im))
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn label(&self) -> String {
        format!("{},0", self)
    }
}

impl Scalar for ExactComplex {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(BigRational::from_ratio(num, den), Zero::zero())
    }
    fn magnitude(&self) -> f64 {
        self.to_complex64().norm()
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
    fn from_rational(r: &BigRational) -> Self {
        Complex::new(r.clone(), Zero::zero())
    }
    fn label(&self) -> String {
        format!("{},{}", self.re, self.im)
    }
}

/// Nearest binary64 to a rational, without overflowing on huge numerators
/// and denominators.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Fall back to scaling both parts down by a common power of two.
    let num_bits = r.numer().bits() as i64;
    let den_bits = r.denom().bits() as i64;
    let shift_n = (num_bits - 900).max(0) as u64;
    let shift_d = (den_bits - 900).max(0) as u64;
    let n = (r.numer() >> shift_n).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift_d).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

/// Exact rational value of a finite binary64.
pub fn f64_to_rational(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Exact Gaussian rational from a finite complex binary64.
pub fn complex64_to_exact(z: Complex64) -> Option<ExactComplex> {
    Some(Complex::new(f64_to_rational(z.re)?, f64_to_rational(z.im)?))
}

/// Formats a binary64 with 17 significant digits in scientific notation.
/// Non-finite values render as `nan`, `inf` or `-inf`.
pub fn fmt_sig17(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{:.16e}", x)
    }
}

/// Display adapter for [`fmt_sig17`].
pub struct Sig17(pub f64);

impl fmt::Display for Sig17 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_sig17(self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_to_f64_handles_huge_parts() {
        let big = BigInt::from(10).pow(400);
        let r = BigRational::new(big.clone() * 3, big);
        assert_eq!(rational_to_f64(&r), 3.0);
    }

    #[test]
    fn exact_roundtrip_of_binary64() {
        for x in [0.1, -2.5, 1e-300, 7.0 / 5.0] {
            let r = f64_to_rational(x).unwrap();
            assert_eq!(rational_to_f64(&r), x);
        }
        assert!(f64_to_rational(f64::NAN).is_none());
    }

    #[test]
    fn sig17_has_seventeen_digits() {
        let s = fmt_sig17(1.0 / 3.0);
        let mantissa: String = s
            .split('e')
            .next()
            .unwrap()
            .chars()
            .filter(|c| c.is_ascii_digit())
            .collect();
        assert_eq!(mantissa.len(), 17);
        assert_eq!(s.parse::<f64>().unwrap(), 1.0 / 3.0);
    }
}
