//! Monic Legendre polynomials.
//!
//! The monic family satisfies
//!
//! ```text
//! L_0 = 1, L_1 = z, L_{k+1} = z L_k - c_k L_{k-1},  c_k = k^2 / (4k^2 - 1)
//! ```
//!
//! and `‖L_n‖² = ∫_{-1}^{1} L_n² dx = 2 ∏_{k=1}^{n} c_k`. Values are always
//! produced by the recurrence; explicit coefficients are only used for
//! exact identities at modest degree, where the expansion cannot cancel.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RationalPolynomial};
use crate::scalar::Scalar;

/// Largest degree for which exact rational coefficients are built by default.
pub const EXACT_DEGREE_BOUND: usize = 64;

const BRACKET_MAX_ITER: usize = 200;

/// Three-term constant `c_k = k²/(4k²−1)` of the monic recurrence.
pub fn recurrence_constant<T: Scalar>(k: usize) -> T {
    let k = k as i64;
    T::from_ratio(k * k, 4 * k * k - 1)
}

/// Values and derivatives of `L_0..L_{n_max}` at one point.
#[derive(Clone, Debug)]
pub struct LegendreTable<T> {
    pub values: Vec<T>,
    pub derivs: Vec<T>,
}

impl<T: Scalar> LegendreTable<T> {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> &T {
        &self.values[n]
    }

    pub fn deriv(&self, n: usize) -> &T {
        &self.derivs[n]
    }
}

/// Runs the value recurrence and its derivative
/// `L'_{k+1} = L_k + z L'_k − c_k L'_{k−1}` up to `n_max`.
pub fn legendre_values<T: Scalar>(n_max: usize, z: &T) -> LegendreTable<T> {
    let mut values = Vec::with_capacity(n_max + 1);
    let mut derivs = Vec::with_capacity(n_max + 1);
    values.push(T::one());
    derivs.push(T::zero());
    if n_max >= 1 {
        values.push(z.clone());
        derivs.push(T::one());
    }
    for k in 1..n_max {
        let c: T = recurrence_constant(k);
        let next = z.clone() * values[k].clone() - c.clone() * values[k - 1].clone();
        let next_d = values[k].clone() + z.clone() * derivs[k].clone() - c * derivs[k - 1].clone();
        values.push(next);
        derivs.push(next_d);
    }
    LegendreTable { values, derivs }
}

/// `(L_n(z), L'_n(z))` without keeping the table.
pub fn legendre_pair<T: Scalar>(n: usize, z: &T) -> (T, T) {
    if n == 0 {
        return (T::one(), T::zero());
    }
    let (mut p0, mut p1) = (T::one(), z.clone());
    let (mut d0, mut d1) = (T::zero(), T::one());
    for k in 1..n {
        let c: T = recurrence_constant(k);
        let p2 = z.clone() * p1.clone() - c.clone() * p0.clone();
        let d2 = p1.clone() + z.clone() * d1.clone() - c * d0;
        p0 = std::mem::replace(&mut p1, p2);
        d0 = std::mem::replace(&mut d1, d2);
    }
    (p1, d1)
}

/// `(L_n(z), L'_n(z), L''_n(z))` from the recurrence and its first two
/// derivatives.
pub fn legendre_triple<T: Scalar>(n: usize, z: &T) -> (T, T, T) {
    if n == 0 {
        return (T::one(), T::zero(), T::zero());
    }
    let (mut p0, mut p1) = (T::one(), z.clone());
    let (mut d0, mut d1) = (T::zero(), T::one());
    let (mut s0, mut s1) = (T::zero(), T::zero());
    for k in 1..n {
        let c: T = recurrence_constant(k);
        let p2 = z.clone() * p1.clone() - c.clone() * p0.clone();
        let d2 = p1.clone() + z.clone() * d1.clone() - c.clone() * d0.clone();
        let s2 = d1.clone() + d1.clone() + z.clone() * s1.clone() - c * s0;
        p0 = std::mem::replace(&mut p1, p2);
        d0 = std::mem::replace(&mut d1, d2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (p1, d1, s1)
}

/// `ln |L'_n(z)|`, renormalizing the recurrence so large `n` or `|z|` do
/// not overflow.
pub fn log_abs_deriv(n: usize, z: Complex64) -> f64 {
    if n == 0 {
        return f64::NEG_INFINITY;
    }
    let (mut p0, mut p1) = (Complex64::new(1.0, 0.0), z);
    let (mut d0, mut d1) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    let mut log_scale = 0.0;
    for k in 1..n {
        let c: f64 = (k * k) as f64 / (4 * k * k - 1) as f64;
        let p2 = z * p1 - p0 * c;
        let d2 = p1 + z * d1 - d0 * c;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
        let m = p1.norm().max(d1.norm());
        if m > 1e100 {
            p0 /= m;
            p1 /= m;
            d0 /= m;
            d1 /= m;
            log_scale += m.ln();
        }
    }
    d1.norm().ln() + log_scale
}

/// Coefficients of `L_0..L_{n_max}` over any field via the recurrence.
pub fn legendre_polys<T: Scalar>(n_max: usize) -> Vec<Polynomial<T>> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Polynomial::one());
    if n_max >= 1 {
        out.push(Polynomial::monomial(1));
    }
    let x = Polynomial::<T>::monomial(1);
    for k in 1..n_max {
        let c: T = recurrence_constant(k);
        let next = &(&x * &out[k]) - &out[k - 1].scale(&c);
        out.push(next);
    }
    out
}

pub fn legendre_poly<T: Scalar>(n: usize) -> Polynomial<T> {
    legendre_polys(n).pop().expect("nonempty")
}

/// Exact monic `L_n`; refuses degrees above [`EXACT_DEGREE_BOUND`].
pub fn legendre_coeffs(n: usize) -> Result<RationalPolynomial> {
    if n > EXACT_DEGREE_BOUND {
        return Err(Error::ExactBoundExceeded {
            n,
            bound: EXACT_DEGREE_BOUND,
        });
    }
    Ok(legendre_poly(n))
}

/// `‖L_n‖² = 2 ∏_{k=1}^{n} c_k`.
pub fn norm_sq(n: usize) -> BigRational {
    (1..=n).fold(BigRational::from_ratio(2, 1), |acc, k| {
        acc * recurrence_constant::<BigRational>(k)
    })
}

/// `‖L_0‖², …, ‖L_{n_max}‖²`.
pub fn norms_sq(n_max: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(BigRational::from_ratio(2, 1));
    for k in 1..=n_max {
        let next = out[k - 1].clone() * recurrence_constant::<BigRational>(k);
        out.push(next);
    }
    out
}

/// Standard-normalized `(P_n(x), P'_n(x))` on the real line. Same zeros as the
/// monic family, but values stay O(1) on [-1, 1] for any degree.
fn standard_pair(n: usize, x: f64) -> (f64, f64, f64) {
    // returns (P_n, P_{n-1}, P'_n)
    if n == 0 {
        return (1.0, 0.0, 0.0);
    }
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    let d = if (1.0 - x * x).abs() > 1e-300 {
        nf * (p0 - x * p1) / (1.0 - x * x)
    } else {
        // P'_n(±1) = (±1)^{n-1} n(n+1)/2
        let s = if x > 0.0 || n % 2 == 1 { 1.0 } else { -1.0 };
        s * nf * (nf + 1.0) / 2.0
    };
    (p1, p0, d)
}

/// Safeguarded Newton on a sign-changing bracket.
fn bracketed_newton(
    n: usize,
    mut lo: f64,
    mut hi: f64,
    f: impl Fn(f64) -> (f64, f64),
) -> Result<f64> {
    let (flo, _) = f(lo);
    let (fhi, _) = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::BracketNonConvergence {
            n,
            lo,
            hi,
            iterations: 0,
        });
    }
    // orient so that f(lo) < 0
    let flip = flo > 0.0;
    let mut x = 0.5 * (lo + hi);
    for it in 0..BRACKET_MAX_ITER {
        let (mut fx, mut dfx) = f(x);
        if flip {
            fx = -fx;
            dfx = -dfx;
        }
        if fx == 0.0 {
            return Ok(x);
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - fx / dfx;
        let next = if dfx != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - x).abs();
        x = next;
        if step <= 4.0 * f64::EPSILON * x.abs().max(1e-3) || hi - lo <= 4.0 * f64::EPSILON {
            return Ok(x);
        }
        if it + 1 == BRACKET_MAX_ITER {
            break;
        }
    }
    Err(Error::BracketNonConvergence {
        n,
        lo,
        hi,
        iterations: BRACKET_MAX_ITER,
    })
}

/// Zeros of `L_n`, ascending. Each zero `cos θ_k` is bracketed by
/// `(k − ½)π/(n + ½) < θ_k < kπ/(n + ½)` and polished by safeguarded Newton.
pub fn legendre_zeros(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("legendre_zeros needs n >= 1".into()));
    }
    let h = n as f64 + 0.5;
    let mut zeros = Vec::with_capacity(n);
    for k in 1..=n / 2 {
        let kf = k as f64;
        let lo = (kf * std::f64::consts::PI / h).cos();
        let hi = ((kf - 0.5) * std::f64::consts::PI / h).cos();
        let x = bracketed_newton(n, lo, hi, |x| {
            let (p, _, d) = standard_pair(n, x);
            (p, d)
        })?;
        zeros.push(x);
    }
    // Symmetry: x_{n+1-k} = -x_k.
    let mut out: Vec<f64> = zeros.iter().map(|x| -x).collect();
    if n % 2 == 1 {
        out.push(0.0);
    }
    out.extend(zeros.iter().rev());
    Ok(out)
}

/// Zeros of `L'_n`, ascending; one lies strictly between each pair of
/// consecutive zeros of `L_n`.
pub fn critical_points(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "critical_points needs n >= 2".into(),
        ));
    }
    let zeros = legendre_zeros(n)?;
    let nn = (n * (n + 1)) as f64;
    let m = n - 1;
    let mut upper = Vec::with_capacity(m / 2 + 1);
    // Positive half, then mirror.
    for w in zeros.windows(2).rev().take(m / 2) {
        let x = bracketed_newton(n, w[0], w[1], |x| {
            let (p, _, d) = standard_pair(n, x);
            let dd = (2.0 * x * d - nn * p) / (1.0 - x * x);
            (d, dd)
        })?;
        upper.push(x);
    }
    let mut out: Vec<f64> = upper.iter().map(|x| -x).collect();
    if m % 2 == 1 {
        out.push(0.0);
    }
    out.extend(upper.iter().rev());
    Ok(out)
}

/// `true` when every element of `inner` lies strictly between consecutive
/// elements of `outer` (both ascending, `inner.len() + 1 == outer.len()`).
pub fn strictly_interlaces(outer: &[f64], inner: &[f64]) -> bool {
    inner.len() + 1 == outer.len()
        && inner
            .iter()
            .zip(outer.windows(2))
            .all(|(c, w)| w[0] < *c && *c < w[1])
}

/// Gauss–Legendre nodes and weights on [-1, 1].
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<T: std::ops::Mul<f64, Output = T> + std::iter::Sum>(
        &self,
        f: impl Fn(f64) -> T,
    ) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| f(x) * w)
            .sum()
    }
}

/// `m`-point Gauss–Legendre rule, exact through degree `2m − 1`.
pub fn gauss_rule(m: usize) -> Result<QuadratureRule> {
    if m == 0 {
        return Err(Error::InvalidArgument("gauss_rule needs m >= 1".into()));
    }
    let nodes = legendre_zeros(m)?;
    let weights = nodes
        .iter()
        .map(|&x| {
            let (_, _, d) = standard_pair(m, x);
            2.0 / ((1.0 - x * x) * d * d)
        })
        .collect();
    Ok(QuadratureRule { nodes, weights })
}

/// Node count used to integrate a degree-`d` polynomial: `⌈(d+1)/2⌉ + 2`.
pub fn nodes_for_degree(d: usize) -> usize {
    (d + 2) / 2 + 2
}

/// `|∫_{-1}^{1} L'_{n+1}(x) x^k (1 − x²) dx|`, exact.
pub fn check_derivative_orthogonality(n: usize, k: usize) -> Result<BigRational> {
    if k >= n {
        return Err(Error::InvalidArgument(format!(
            "need k < n, got n={n}, k={k}"
        )));
    }
    let dl = legendre_coeffs(n + 1)?.derivative();
    let weight = RationalPolynomial::new(vec![
        BigRational::from_ratio(1, 1),
        BigRational::zero(),
        BigRational::from_ratio(-1, 1),
    ]);
    let integrand = &(&dl * &RationalPolynomial::monomial(k)) * &weight;
    Ok(integrand.integrate_symmetric().abs())
}

/// Outcome of comparing `F_n = ∫ L_{n−1}` (pinned so `F_n(1) = 0`) with
/// `(x² − 1) L'_{n−1} / (n(n − 1))`.
#[derive(Clone, Debug)]
pub struct AntiderivativeIdentity {
    pub primitive: RationalPolynomial,
    /// Largest absolute coefficient difference between the two forms.
    pub residual: BigRational,
    pub at_minus_one: BigRational,
    pub at_plus_one: BigRational,
}

pub fn antiderivative_identity(n: usize) -> Result<AntiderivativeIdentity> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "antiderivative identity needs n >= 2".into(),
        ));
    }
    let l = legendre_coeffs(n - 1)?;
    let one = BigRational::from_ratio(1, 1);
    let primitive = l.antiderivative(&one);
    let factor = RationalPolynomial::new(vec![-one.clone(), BigRational::zero(), one.clone()]);
    let scale = BigRational::from_ratio(1, (n * (n - 1)) as i64);
    let closed = (&factor * &l.derivative()).scale(&scale);
    let diff = &primitive - &closed;
    let residual = diff
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    Ok(AntiderivativeIdentity {
        at_minus_one: primitive.eval(&-one.clone()),
        at_plus_one: primitive.eval(&one),
        primitive,
        residual,
    })
}
