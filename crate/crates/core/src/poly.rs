//! Dense polynomials over a [`Scalar`] field.
//!
//! Coefficients are stored ascending by power. The zero polynomial is the
//! empty coefficient vector, and its degree is `None`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;

use crate::scalar::{f64_to_rational, ExactComplex, Scalar};

/// Relative threshold below which trailing float coefficients are dropped.
pub const FLOAT_TRIM: f64 = 1e-14;

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type ComplexPolynomial = Polynomial<Complex64>;
pub type RationalPolynomial = Polynomial<BigRational>;
pub type ExactComplexPolynomial = Polynomial<ExactComplex>;

impl<T: Scalar> Polynomial<T> {
    /// Builds a polynomial from ascending coefficients, dropping trailing
    /// exact zeros.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = T::one();
        Polynomial { coeffs }
    }

    /// The linear polynomial `z - r`.
    pub fn linear(r: T) -> Self {
        Self::new(vec![-r, T::one()])
    }

    /// Drops trailing coefficients with `|c| < rel * max|c|`.
    pub fn trim_relative(mut self, rel: f64) -> Self {
        let floor = rel * self.max_abs();
        while self
            .coeffs
            .last()
            .is_some_and(|c| c.is_zero() || c.magnitude() < floor)
        {
            self.coeffs.pop();
        }
        self
    }

    /// Removes float dust from the top (`|c| < 1e-14 * max|c|`); exact
    /// fields only lose exact zeros.
    pub fn normalized(self) -> Self {
        if T::EXACT {
            self
        } else {
            self.trim_relative(FLOAT_TRIM)
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        match self.leading() {
            Some(c) if T::EXACT => *c == T::one(),
            Some(c) => (c.clone() - T::one()).magnitude() <= 1e-12,
            None => false,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs
            .iter()
            .map(Scalar::magnitude)
            .fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_int(k as i64))
                .collect(),
        )
    }

    /// Antiderivative that vanishes at `pin`.
    pub fn antiderivative(&self, pin: &T) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / T::from_int(k as i64 + 1));
        }
        let raw = Polynomial { coeffs };
        let shift = raw.eval(pin);
        let mut coeffs = raw.coeffs;
        coeffs[0] = coeffs[0].clone() - shift;
        Self::new(coeffs)
    }

    /// Synthetic division by `z - r`: returns `(q, p(r))` with
    /// `p = q * (z - r) + p(r)`.
    pub fn divide_linear(&self, r: &T) -> (Self, T) {
        let n = self.coeffs.len();
        if n == 0 {
            return (Self::zero(), T::zero());
        }
        let mut quotient = vec![T::zero(); n - 1];
        let mut carry = T::zero();
        for k in (0..n).rev() {
            let value = self.coeffs[k].clone() + carry * r.clone();
            if k == 0 {
                return (Self::new(quotient), value);
            }
            quotient[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Multiplies by `z - r`.
    pub fn mul_linear(&self, r: &T) -> Self {
        self * &Self::linear(r.clone())
    }

    /// `∫_{-1}^{1} p(x) dx`: only even powers contribute `2/(k+1)`.
    pub fn integrate_symmetric(&self) -> T {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(k, _)| k % 2 == 0)
            .fold(T::zero(), |acc, (k, c)| {
                acc + c.clone() * T::from_ratio(2, k as i64 + 1)
            })
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Sup-norm of the coefficient difference.
    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).magnitude())
            .fold(0.0, f64::max)
    }

    /// Exact coefficient-wise equality after trimming.
    pub fn exactly_equals(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_complex64(&self) -> ComplexPolynomial {
        self.map(Scalar::to_complex64)
    }
}

impl RationalPolynomial {
    /// Converts a float polynomial with real coefficients to exact rationals.
    /// Returns `None` if any coefficient is non-finite or has an imaginary
    /// part.
    pub fn from_real_complex(p: &ComplexPolynomial) -> Option<Self> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                if c.im != 0.0 {
                    None
                } else {
                    f64_to_rational(c.re)
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::new(coeffs))
    }

    pub fn to_exact_complex(&self) -> ExactComplexPolynomial {
        self.map(ExactComplex::from_rational)
    }
}

impl ComplexPolynomial {
    /// Ascending real parts, for reporting.
    pub fn real_parts(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }
}

impl<'a, T: Scalar> Add<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    fn rp(c: &[(i64, i64)]) -> RationalPolynomial {
        Polynomial::new(c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn cp(c: &[f64]) -> ComplexPolynomial {
        Polynomial::new(c.iter().map(|&x| C::new(x, 0.0)).collect())
    }

    #[test]
    fn eval_examples() {
        let l2 = rp(&[(-1, 3), (0, 1), (1, 1)]);
        assert_eq!(l2.eval(&q(2, 1)), q(11, 3));
        let zero = ComplexPolynomial::zero();
        assert_eq!(zero.eval(&C::new(7.0, 1.0)), C::new(0.0, 0.0));
        let c = ComplexPolynomial::constant(C::new(1.5, -2.0));
        assert_eq!(c.eval(&C::new(-3.0, 9.0)), C::new(1.5, -2.0));
    }

    #[test]
    fn zero_polynomial_conventions() {
        let z = RationalPolynomial::new(vec![q(0, 1), q(0, 1)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.integrate_symmetric(), q(0, 1));
    }

    #[test]
    fn derivative_and_antiderivative_examples() {
        assert_eq!(
            rp(&[(0, 1), (0, 1), (1, 1)]).derivative(),
            rp(&[(0, 1), (2, 1)])
        );
        assert_eq!(
            rp(&[(1, 1)]).antiderivative(&q(3, 1)),
            rp(&[(-3, 1), (1, 1)])
        );
        // L_3 = x^3 - 3/5 x
        let l3 = rp(&[(0, 1), (-3, 5), (0, 1), (1, 1)]);
        let pin = q(-7, 4);
        let rebuilt =
            &l3.derivative().antiderivative(&pin) + &RationalPolynomial::constant(l3.eval(&pin));
        assert_eq!(rebuilt, l3);
    }

    #[test]
    fn divide_linear_examples() {
        let (qt, r) = rp(&[(-4, 1), (0, 1), (1, 1)]).divide_linear(&q(2, 1));
        assert_eq!(qt, rp(&[(2, 1), (1, 1)]));
        assert_eq!(r, q(0, 1));

        let (qt, r) = rp(&[(-6, 1), (-1, 1), (0, 1), (1, 1)]).divide_linear(&q(2, 1));
        assert_eq!(qt, rp(&[(3, 1), (2, 1), (1, 1)]));
        assert_eq!(r, q(0, 1));

        let (qt, r) = rp(&[(0, 1), (0, 1), (1, 1)]).divide_linear(&q(1, 1));
        assert_eq!(qt, rp(&[(1, 1), (1, 1)]));
        assert_eq!(r, q(1, 1));
    }

    #[test]
    fn integrate_symmetric_examples() {
        assert_eq!(rp(&[(0, 1), (1, 1)]).integrate_symmetric(), q(0, 1));
        assert_eq!(rp(&[(0, 1), (0, 1), (1, 1)]).integrate_symmetric(), q(2, 3));
        assert_eq!(
            rp(&[(-6, 1), (-1, 1), (0, 1), (1, 1)]).integrate_symmetric(),
            q(-12, 1)
        );
    }

    #[test]
    fn float_trim_drops_dust() {
        let p = cp(&[1.0, 2.0, 1e-16]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.normalized().degree(), Some(1));
        let p = cp(&[1.0, 1e-30]).normalized();
        assert_eq!(p.degree(), Some(0));
        // a dominant constant must not eat a genuine leading coefficient
        let p = cp(&[6e15, 0.0, 51.0]);
        assert_eq!(p.clone().degree(), Some(2));
    }

    #[test]
    fn rational_roundtrip_through_float() {
        let p = rp(&[(1, 2), (-3, 4), (5, 8), (1, 1)]);
        let back = RationalPolynomial::from_real_complex(&p.to_complex64()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn reflect_flips_odd_powers() {
        let p = rp(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(p.reflect(), rp(&[(1, 1), (-2, 1), (3, 1), (-4, 1)]));
    }
}
