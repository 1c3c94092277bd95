//! Polar Legendre polynomials `P_n` and primitives `Π_{ζ,n+1} = (z − ζ) P_n`.
//!
//! `P_n` is built three ways, all generic over the coefficient field:
//!
//! * [`polar_fundamental`]: divide `(1 − ζ²) L'_n(ζ) − (1 − z²) L'_n(z)` by
//!   `n (z − ζ)`.
//! * [`polar_integral`]: divide `(n + 1) ∫_ζ^z L_n` by `z − ζ`.
//! * [`polar_recurrence`]: `P_{n+1} = z P_n + a_n P_{n−1} + b_n`.
//!
//! The recurrence constant `b_n` comes in two variants. The printed form
//! `(2/n)(ζ² − 1) L'_n(ζ)` does not reproduce the defining identity; the
//! corrected form `(1/n)(ζ² − 1) L'_n(ζ)` does. Both are exposed so the
//! discrepancy can be measured.

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::legendre::{legendre_pair, legendre_polys, norm_sq};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Relative tolerance on the division remainder in binary64.
pub const FLOAT_REMAINDER_TOL: f64 = 1e-10;

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `b_n = (2/n)(ζ² − 1) L'_n(ζ)`, applied for `n > 1` only.
    Printed,
    /// `b_n = (1/n)(ζ² − 1) L'_n(ζ)`, valid from `n = 1`.
    #[default]
    Corrected,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Printed => "printed",
            Variant::Corrected => "corrected",
        }
    }
}

/// Quotient with the remainder left by the last synthetic division.
#[derive(Clone, Debug)]
pub struct Division<T> {
    pub quotient: Polynomial<T>,
    pub remainder: T,
    /// Horner condition scale `Σ|a_k||ζ|^k` of the dividend at the pole.
    pub scale: f64,
}

impl<T: Scalar> Division<T> {
    /// Exact zero for exact fields, relative tolerance otherwise.
    pub fn remainder_ok(&self) -> bool {
        if T::EXACT {
            self.remainder.is_zero()
        } else {
            self.remainder.magnitude() <= FLOAT_REMAINDER_TOL * self.scale.max(f64::MIN_POSITIVE)
        }
    }

    fn into_checked(self, what: &str, n: usize) -> Result<Polynomial<T>> {
        if self.remainder_ok() {
            Ok(self.quotient)
        } else {
            Err(Error::Consistency(format!(
                "{what} division for n={n} left remainder {:e} (scale {:e})",
                self.remainder.magnitude(),
                self.scale
            )))
        }
    }
}

fn divide_at_pole<T: Scalar>(p: &Polynomial<T>, zeta: &T) -> Division<T> {
    let r = zeta.magnitude();
    let scale = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c.magnitude() * r.powi(k as i32))
        .sum();
    let (quotient, remainder) = p.divide_linear(zeta);
    Division {
        quotient,
        remainder,
        scale,
    }
}

/// Numerator `(1 − ζ²) L'_n(ζ) − (1 − z²) L'_n(z)` divided by `z − ζ`, then
/// by `n`.
pub fn fundamental_division<T: Scalar>(n: usize, zeta: &T) -> Result<Division<T>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "fundamental formula needs n >= 1".into(),
        ));
    }
    let l = legendre_polys::<T>(n).pop().expect("nonempty");
    let (_, dl_zeta) = legendre_pair(n, zeta);
    let one_minus_zeta_sq = T::one() - zeta.clone() * zeta.clone();
    let constant = one_minus_zeta_sq * dl_zeta;
    let weight = Polynomial::new(vec![T::one(), T::zero(), -T::one()]);
    let numerator = &Polynomial::constant(constant) - &(&weight * &l.derivative());
    let mut div = divide_at_pole(&numerator, zeta);
    div.quotient = div.quotient.scale(&(T::one() / T::from_int(n as i64)));
    Ok(div)
}

/// `P_n` from the fundamental formula. `P_0 = 1` is returned for `n = 0`.
pub fn polar_fundamental<T: Scalar>(n: usize, zeta: &T) -> Result<Polynomial<T>> {
    if n == 0 {
        return Ok(Polynomial::one());
    }
    fundamental_division(n, zeta)?.into_checked("fundamental", n)
}

/// `Π_{ζ,n+1} = (n + 1) ∫_ζ^z L_n(t) dt`.
pub fn primitive_poly<T: Scalar>(n: usize, zeta: &T) -> Polynomial<T> {
    let l = legendre_polys::<T>(n).pop().expect("nonempty");
    l.antiderivative(zeta).scale(&T::from_int(n as i64 + 1))
}

pub fn integral_division<T: Scalar>(n: usize, zeta: &T) -> Division<T> {
    divide_at_pole(&primitive_poly(n, zeta), zeta)
}

/// `P_n = Π_{ζ,n+1} / (z − ζ)`.
pub fn polar_integral<T: Scalar>(n: usize, zeta: &T) -> Result<Polynomial<T>> {
    integral_division(n, zeta).into_checked("integral", n)
}

/// Coefficients of the three-term recurrence at step `n`.
#[derive(Clone, Debug)]
pub struct RecurrenceCoeffs<T> {
    pub n: usize,
    /// `a_n = (1 − n²)/n² · ‖L_n‖²/‖L_{n−1}‖²`.
    pub a: BigRational,
    pub b_printed: T,
    pub b_corrected: T,
}

impl<T: Scalar> RecurrenceCoeffs<T> {
    pub fn b(&self, variant: Variant) -> &T {
        match variant {
            Variant::Printed => &self.b_printed,
            Variant::Corrected => &self.b_corrected,
        }
    }
}

pub fn recurrence_coeffs<T: Scalar>(n: usize, zeta: &T) -> Result<RecurrenceCoeffs<T>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "recurrence coefficients need n >= 1".into(),
        ));
    }
    let nn = n as i64;
    let a = BigRational::from_ratio(1 - nn * nn, nn * nn) * norm_sq(n) / norm_sq(n - 1);
    let (_, dl) = legendre_pair(n, zeta);
    let b_corrected = (zeta.clone() * zeta.clone() - T::one()) * dl / T::from_int(nn);
    let b_printed = b_corrected.clone() * T::from_int(2);
    Ok(RecurrenceCoeffs {
        n,
        a,
        b_printed,
        b_corrected,
    })
}

/// One recurrence step `z P_n + a_n P_{n−1} + b_n`.
pub fn recurrence_step<T: Scalar>(
    coeffs: &RecurrenceCoeffs<T>,
    variant: Variant,
    p_n: &Polynomial<T>,
    p_prev: &Polynomial<T>,
) -> Polynomial<T> {
    let x = Polynomial::<T>::monomial(1);
    let a = T::from_rational(&coeffs.a);
    let sum = &(&x * p_n) + &p_prev.scale(&a);
    &sum + &Polynomial::constant(coeffs.b(variant).clone())
}

/// `P_0..P_{n_max}` from the recurrence. With [`Variant::Printed`] the
/// iteration begins at `n = 2` from the fundamental-formula `P_2`.
pub fn polar_recurrence_family<T: Scalar>(
    n_max: usize,
    zeta: &T,
    variant: Variant,
) -> Result<Vec<Polynomial<T>>> {
    let mut out = vec![Polynomial::one()];
    if n_max == 0 {
        return Ok(out);
    }
    out.push(Polynomial::new(vec![zeta.clone(), T::one()]));
    let start = match variant {
        Variant::Corrected => 1,
        Variant::Printed => {
            if n_max >= 2 {
                out.push(polar_fundamental(2, zeta)?);
            }
            2
        }
    };
    for k in start..n_max {
        let c = recurrence_coeffs(k, zeta)?;
        let next = recurrence_step(&c, variant, &out[k], &out[k - 1]);
        out.push(next);
    }
    Ok(out)
}

pub fn polar_recurrence<T: Scalar>(n: usize, zeta: &T, variant: Variant) -> Result<Polynomial<T>> {
    Ok(polar_recurrence_family(n, zeta, variant)?
        .pop()
        .expect("nonempty"))
}

/// `P_k + (z − ζ) P'_k − (k + 1) L_k`; identically zero for a valid `P_k`.
pub fn defining_identity_defect<T: Scalar>(
    p: &Polynomial<T>,
    k: usize,
    zeta: &T,
    l_k: &Polynomial<T>,
) -> Polynomial<T> {
    let lhs = p + &p.derivative().mul_linear(zeta);
    &lhs - &l_k.scale(&T::from_int(k as i64 + 1))
}

/// The pole together with `P_0..P_{n_max}` (fundamental route), `L_0..L_{n_max+1}`
/// and the Legendre norms.
#[derive(Clone, Debug)]
pub struct PolarFamily<T> {
    pole: T,
    polys: Vec<Polynomial<T>>,
    legendre: Vec<Polynomial<T>>,
    norms: Vec<BigRational>,
}

impl<T: Scalar> PolarFamily<T> {
    pub fn new(pole: T, n_max: usize) -> Result<Self> {
        let polys = (0..=n_max)
            .map(|k| polar_fundamental(k, &pole))
            .collect::<Result<Vec<_>>>()?;
        let legendre = legendre_polys::<T>(n_max + 1);
        let norms = crate::legendre::norms_sq(n_max + 1);
        let family = PolarFamily {
            pole,
            polys,
            legendre,
            norms,
        };
        for k in 0..=n_max {
            if !family.polys[k].is_monic() || family.polys[k].degree() != Some(k) {
                return Err(Error::Consistency(format!(
                    "P_{k} is not monic of degree {k}"
                )));
            }
        }
        Ok(family)
    }

    pub fn pole(&self) -> &T {
        &self.pole
    }

    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn p(&self, k: usize) -> &Polynomial<T> {
        &self.polys[k]
    }

    pub fn polys(&self) -> &[Polynomial<T>] {
        &self.polys
    }

    /// `L_k` for `k ≤ n_max + 1`.
    pub fn legendre(&self, k: usize) -> &Polynomial<T> {
        &self.legendre[k]
    }

    pub fn norm_sq(&self, k: usize) -> &BigRational {
        &self.norms[k]
    }

    pub fn primitive(&self, k: usize) -> Polynomial<T> {
        self.polys[k].mul_linear(&self.pole)
    }

    pub fn defining_defect(&self, k: usize) -> Polynomial<T> {
        defining_identity_defect(&self.polys[k], k, &self.pole, &self.legendre[k])
    }

    /// Expansion of `(x − ζ) P_n` in `P_0..P_{n+1}` by back-substitution
    /// from the top degree. Needs `n + 1 ≤ n_max`.
    pub fn connection_coeffs(&self, n: usize) -> Result<ConnectionCoeffs<T>> {
        if n + 1 > self.n_max() {
            return Err(Error::InvalidArgument(format!(
                "connection coefficients for n={n} need the family up to degree {}",
                n + 1
            )));
        }
        let target = self.primitive(n);
        let mut rest: Vec<T> = (0..=n + 1).map(|k| target.coeff(k)).collect();
        let mut alpha = vec![T::zero(); n + 2];
        for k in (0..=n + 1).rev() {
            let a = rest[k].clone();
            for (j, c) in self.polys[k].coeffs().iter().enumerate() {
                rest[j] = rest[j].clone() - a.clone() * c.clone();
            }
            alpha[k] = a;
        }
        Ok(ConnectionCoeffs { n, alpha })
    }
}

/// `α_{n,0..n+1}` with `(x − ζ) P_n = Σ α_{n,k} P_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionCoeffs<T> {
    pub n: usize,
    pub alpha: Vec<T>,
}

pub fn connection_coeffs<T: Scalar>(n: usize, zeta: &T) -> Result<ConnectionCoeffs<T>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "connection coefficients need n >= 1".into(),
        ));
    }
    PolarFamily::new(zeta.clone(), n + 1)?.connection_coeffs(n)
}

/// `⟨p, q⟩ = p(ζ) q(ζ) + ∫_{-1}^{1} p'(x) q'(x) dx`.
pub fn sobolev_inner<T: Scalar>(p: &Polynomial<T>, q: &Polynomial<T>, zeta: &T) -> T {
    p.eval(zeta) * q.eval(zeta) + (&p.derivative() * &q.derivative()).integrate_symmetric()
}

/// Distance from the pole below which evaluation switches to the Taylor
/// form at `ζ`: `1e-8 (1 + |ζ|)`.
pub fn near_pole_radius(zeta: Complex64) -> f64 {
    1e-8 * (1.0 + zeta.norm())
}

/// Coefficient-free evaluator for `P_n` and `P'_n`, built on the Legendre
/// value recurrence.
#[derive(Clone, Debug)]
pub struct PolarEvaluator {
    n: usize,
    zeta: Complex64,
    /// `(1 − ζ²) L'_n(ζ)`
    pole_term: Complex64,
    /// `P_n(ζ) = (n + 1) L_n(ζ)`
    value_at_pole: Complex64,
    /// `P'_n(ζ) = (n + 1) L'_n(ζ) / 2`
    deriv_at_pole: Complex64,
    switch_radius: f64,
}

impl PolarEvaluator {
    pub fn new(n: usize, zeta: Complex64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "polar evaluation needs n >= 1".into(),
            ));
        }
        let (l, dl) = legendre_pair(n, &zeta);
        let np1 = (n + 1) as f64;
        Ok(PolarEvaluator {
            n,
            zeta,
            pole_term: (1.0 - zeta * zeta) * dl,
            value_at_pole: l * np1,
            deriv_at_pole: dl * (np1 / 2.0),
            switch_radius: near_pole_radius(zeta),
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn pole(&self) -> Complex64 {
        self.zeta
    }

    /// `(P_n(z), P'_n(z))`.
    pub fn eval_pair(&self, z: Complex64) -> (Complex64, Complex64) {
        let h = z - self.zeta;
        if h.norm() < self.switch_radius {
            return (
                self.value_at_pole + self.deriv_at_pole * h,
                self.deriv_at_pole,
            );
        }
        let (l, dl) = legendre_pair(self.n, &z);
        let p = (self.pole_term - (1.0 - z * z) * dl) / (h * self.n as f64);
        let dp = (l * (self.n + 1) as f64 - p) / h;
        (p, dp)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.eval_pair(z).0
    }
}

pub fn polar_eval(n: usize, zeta: Complex64, z: Complex64) -> Result<Complex64> {
    Ok(PolarEvaluator::new(n, zeta)?.eval(z))
}

pub fn polar_derivative_eval(n: usize, zeta: Complex64, z: Complex64) -> Result<Complex64> {
    Ok(PolarEvaluator::new(n, zeta)?.eval_pair(z).1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactComplex;
    use num_complex::Complex;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    fn rp(c: &[(i64, i64)]) -> Polynomial<BigRational> {
        Polynomial::new(c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn fundamental_low_degree_examples() {
        for zeta in [q(0, 1), q(2, 1), q(-7, 5), q(1, 3), q(5, 1)] {
            let p1 = polar_fundamental(1, &zeta).unwrap();
            assert_eq!(p1, Polynomial::new(vec![zeta.clone(), q(1, 1)]));
            // symbolic: P_2 = z² + ζz + (ζ² − 1)
            let p2 = polar_fundamental(2, &zeta).unwrap();
            let expect = Polynomial::new(vec![
                zeta.clone() * zeta.clone() - q(1, 1),
                zeta.clone(),
                q(1, 1),
            ]);
            assert_eq!(p2, expect);
        }
        let s = 2.0 * 3f64.sqrt() / 3.0;
        let p2 = polar_fundamental(2, &c(s, 0.0)).unwrap();
        let expect = [1.0 / 3.0, s, 1.0];
        for (k, e) in expect.iter().enumerate() {
            assert!((p2.coeff(k) - c(*e, 0.0)).norm() < 1e-15, "k={k}");
        }
    }

    #[test]
    fn integral_route_examples() {
        let pi = primitive_poly(2, &q(2, 1));
        assert_eq!(pi, rp(&[(-6, 1), (-1, 1), (0, 1), (1, 1)]));
        assert_eq!(
            polar_integral(2, &q(2, 1)).unwrap(),
            rp(&[(3, 1), (2, 1), (1, 1)])
        );

        let z = q(7, 3);
        assert_eq!(primitive_poly(0, &z), rp(&[(-7, 3), (1, 1)]));
        assert_eq!(polar_integral(0, &z).unwrap(), Polynomial::one());

        let zeta: ExactComplex = Complex::new(q(1, 1), q(1, 1));
        assert!(primitive_poly(5, &zeta).eval(&zeta).is_zero());
    }

    #[test]
    fn recurrence_examples() {
        let c2 = recurrence_coeffs(2, &q(2, 1)).unwrap();
        assert_eq!(c2.a, q(-1, 5));
        let c1 = recurrence_coeffs(1, &q(2, 1)).unwrap();
        assert_eq!(c1.a, q(0, 1));
        assert_eq!(c1.b_corrected, q(3, 1));
        assert_eq!(c1.b_printed, q(6, 1));

        let p2 = polar_recurrence(2, &q(2, 1), Variant::Corrected).unwrap();
        assert_eq!(p2, rp(&[(3, 1), (2, 1), (1, 1)]));
        // printed b_1 gives z² + 2z + 6, which breaks the defining identity
        let p1 = Polynomial::new(vec![q(2, 1), q(1, 1)]);
        let wrong = recurrence_step(&c1, Variant::Printed, &p1, &Polynomial::one());
        assert_eq!(wrong, rp(&[(6, 1), (2, 1), (1, 1)]));
        let l2 = crate::legendre::legendre_poly::<BigRational>(2);
        assert!(!defining_identity_defect(&wrong, 2, &q(2, 1), &l2).is_zero());
    }

    #[test]
    fn symbolic_p3_at_rational_samples() {
        for zeta in [q(2, 1), q(-1, 2), q(7, 5), q(0, 1), q(3, 7)] {
            let z = zeta.clone();
            let six5 = q(6, 5);
            let expect = Polynomial::new(vec![
                z.clone() * z.clone() * z.clone() - six5.clone() * z.clone(),
                z.clone() * z.clone() - six5,
                z.clone(),
                q(1, 1),
            ]);
            assert_eq!(
                polar_recurrence(3, &zeta, Variant::Corrected).unwrap(),
                expect
            );
            assert_eq!(polar_fundamental(3, &zeta).unwrap(), expect);
            // printed variant starts from the fundamental P_2 and uses 2·b_2
            let printed = polar_recurrence(3, &zeta, Variant::Printed).unwrap();
            let gap = (&printed - &expect).coeff(0);
            assert_eq!(gap, z.clone() * z.clone() * z.clone() - z.clone());
        }
    }

    #[test]
    fn three_routes_agree_exactly() {
        let grid: Vec<ExactComplex> = vec![
            Complex::new(q(0, 1), q(0, 1)),
            Complex::new(q(1, 1), q(0, 1)),
            Complex::new(q(-1, 1), q(0, 1)),
            Complex::new(q(2, 1), q(0, 1)),
            Complex::new(q(0, 1), q(2, 1)),
            Complex::new(q(1, 1), q(1, 1)),
            Complex::new(q(3, 10), q(0, 1)),
        ];
        for zeta in &grid {
            let rec = polar_recurrence_family(15, zeta, Variant::Corrected).unwrap();
            for n in 0..=15 {
                let f = polar_fundamental(n, zeta).unwrap();
                let i = polar_integral(n, zeta).unwrap();
                assert_eq!(f, i, "n={n}");
                assert_eq!(f, rec[n], "n={n}");
            }
        }
    }

    #[test]
    fn family_invariants() {
        let fam = PolarFamily::new(q(2, 1), 8).unwrap();
        assert_eq!(fam.p(0), &Polynomial::one());
        assert_eq!(fam.p(1), &rp(&[(2, 1), (1, 1)]));
        for k in 0..=8 {
            assert!(fam.defining_defect(k).is_zero());
            assert_eq!(fam.p(k).degree(), Some(k));
        }
    }

    #[test]
    fn connection_coeff_examples() {
        let zeta = q(3, 2);
        let a = connection_coeffs(2, &zeta).unwrap();
        let z = zeta.clone();
        assert_eq!(a.alpha[3], q(1, 1));
        assert_eq!(a.alpha[2], -z.clone());
        assert_eq!(a.alpha[1], q(1, 5));
        assert_eq!(a.alpha[0], z.clone() * (q(1, 1) - z.clone() * z.clone()));

        let a = connection_coeffs(1, &zeta).unwrap();
        assert_eq!(
            a.alpha,
            vec![q(1, 1) - z.clone() * z.clone(), -z.clone(), q(1, 1)]
        );

        let a = connection_coeffs(2, &q(0, 1)).unwrap();
        assert!(a.alpha[0].is_zero());

        for n in 3..=10 {
            let a = connection_coeffs(n, &q(-7, 5)).unwrap();
            assert_eq!(a.alpha[n + 1], q(1, 1));
            assert_eq!(a.alpha[n], q(7, 5));
            for m in 1..n - 1 {
                assert!(a.alpha[m].is_zero(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        let two = c(2.0, 0.0);
        assert!((polar_eval(2, two, two).unwrap() - c(11.0, 0.0)).norm() < 1e-14);
        assert!((polar_eval(2, two, c(0.0, 1.0)).unwrap() - c(2.0, 2.0)).norm() < 1e-14);
        assert!((polar_derivative_eval(2, two, two).unwrap() - c(6.0, 0.0)).norm() < 1e-14);
        // just outside the switch radius the two forms agree
        let z = two + c(2e-8, 1e-8);
        let e = PolarEvaluator::new(2, two).unwrap();
        let (p, dp) = e.eval_pair(z);
        let exact = z * z + 2.0 * z + 3.0;
        assert!((p - exact).norm() < 1e-7);
        assert!((dp - (2.0 * z + 2.0)).norm() < 1e-6);
    }

    #[test]
    fn evaluation_matches_coefficients() {
        for zeta in [c(2.0, 0.0), c(0.0, 2.0), c(1.0, 1.0), c(0.3, 0.0)] {
            for n in 1..=30 {
                let p = polar_fundamental(n, &zeta).unwrap();
                let e = PolarEvaluator::new(n, zeta).unwrap();
                for z in [c(0.5, 0.5), c(-1.3, 0.2), c(2.5, -1.0)] {
                    let (v, d) = e.eval_pair(z);
                    let vc = p.eval(&z);
                    let dc = p.derivative().eval(&z);
                    assert!((v - vc).norm() <= 1e-9 * (1.0 + vc.norm()), "n={n}");
                    assert!((d - dc).norm() <= 1e-8 * (1.0 + dc.norm()), "n={n}");
                }
            }
        }
    }

    #[test]
    fn sobolev_examples() {
        let zeta = q(2, 1);
        let pi = primitive_poly(2, &zeta);
        assert!(sobolev_inner(&pi, &rp(&[(0, 1), (1, 1)]), &zeta).is_zero());
        assert!(sobolev_inner(&pi, &rp(&[(0, 1), (0, 1), (1, 1)]), &zeta).is_zero());
        let one = Polynomial::<BigRational>::one();
        assert_eq!(sobolev_inner(&one, &one, &q(-9, 4)), q(1, 1));
    }

    #[test]
    fn remainder_is_reported_for_bad_division() {
        let p = rp(&[(1, 1), (0, 1), (1, 1)]);
        let d = divide_at_pole(&p, &q(1, 1));
        assert!(!d.remainder_ok());
        assert!(d.into_checked("test", 2).is_err());
    }
}
