use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use polar_legendre::legendre::{legendre_pair, legendre_polys, norm_sq};
use polar_legendre::polar::{
    defining_identity_defect, polar_fundamental, polar_integral, polar_recurrence, sobolev_inner,
    Variant,
};
use polar_legendre::scalar::{complex64_to_exact, f64_to_rational, rational_to_f64};
use polar_legendre::{ComplexPolynomial, ExactComplex, Polynomial, RationalPolynomial, Scalar};

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn qc(re: BigRational, im: BigRational) -> ExactComplex {
    ExactComplex::new(re, im)
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, d)| q(p, d))
}

fn gaussian_rational() -> impl Strategy<Value = ExactComplex> {
    (small_rational(), small_rational()).prop_map(|(a, b)| qc(a, b))
}

fn rational_poly(max_deg: usize) -> impl Strategy<Value = RationalPolynomial> {
    prop::collection::vec(small_rational(), 1..=max_deg + 1).prop_map(Polynomial::new)
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(a, b)| Complex64::new(a, b))
}

fn unit_disk() -> impl Strategy<Value = Complex64> {
    (0.0f64..=1.0, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn complex_poly(max_deg: usize) -> impl Strategy<Value = ComplexPolynomial> {
    prop::collection::vec(complex(), 1..=max_deg + 1).prop_map(Polynomial::new)
}

fn rel_gap(a: &ComplexPolynomial, b: &ComplexPolynomial) -> f64 {
    a.max_coeff_diff(b) / a.max_abs().max(b.max_abs()).max(f64::MIN_POSITIVE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_rule_exact(p in rational_poly(10), r in rational_poly(10)) {
        let lhs = (&p * &r).derivative();
        let rhs = &(&p.derivative() * &r) + &(&p * &r.derivative());
        prop_assert!(lhs.exactly_equals(&rhs));
    }

    #[test]
    fn product_rule_float(p in complex_poly(10), r in complex_poly(10)) {
        let lhs = (&p * &r).derivative();
        let rhs = &(&p.derivative() * &r) + &(&p * &r.derivative());
        prop_assert!(rel_gap(&lhs, &rhs) <= 1e-12);
    }

    #[test]
    fn division_identity_float(p in complex_poly(50), root in unit_disk()) {
        let (quot, rem) = p.divide_linear(&root);
        let back = &quot.mul_linear(&root) + &Polynomial::constant(rem);
        prop_assert!(rel_gap(&back, &p) <= 1e-13, "gap {:e}", rel_gap(&back, &p));
    }

    #[test]
    fn division_identity_float_outside_disk(p in complex_poly(50), root in complex()) {
        let (quot, rem) = p.divide_linear(&root);
        let back = &quot.mul_linear(&root) + &Polynomial::constant(rem);
        // the terms r q_k that cancel in the reconstruction
        let scale = quot.max_abs() * root.norm().max(1.0) + p.max_abs();
        prop_assert!(back.max_coeff_diff(&p) <= 1e-13 * scale);
    }

    #[test]
    fn division_identity_exact(p in rational_poly(30), root in small_rational()) {
        let (quot, rem) = p.divide_linear(&root);
        let back = &quot.mul_linear(&root) + &Polynomial::constant(rem.clone());
        prop_assert!(back.exactly_equals(&p));
        prop_assert_eq!(rem, p.eval(&root));
    }

    #[test]
    fn odd_polynomials_integrate_to_zero(c in prop::collection::vec(small_rational(), 1..20)) {
        let mut coeffs = vec![BigRational::zero(); 2 * c.len()];
        for (k, v) in c.into_iter().enumerate() {
            coeffs[2 * k + 1] = v;
        }
        prop_assert!(Polynomial::new(coeffs).integrate_symmetric().is_zero());
    }

    #[test]
    fn binary64_round_trips_through_rationals(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
        let r = f64_to_rational(x).unwrap();
        prop_assert_eq!(rational_to_f64(&r).to_bits(), (x + 0.0).to_bits());
    }

    #[test]
    fn routes_agree_exactly(zeta in gaussian_rational(), n in 0usize..=14) {
        let f = polar_fundamental(n, &zeta).unwrap();
        prop_assert!(f.exactly_equals(&polar_integral(n, &zeta).unwrap()));
        prop_assert!(f.exactly_equals(&polar_recurrence(n, &zeta, Variant::Corrected).unwrap()));
        prop_assert!(f.is_monic() && f.degree() == Some(n));
        let ls = legendre_polys::<ExactComplex>(n);
        prop_assert!(defining_identity_defect(&f, n, &zeta, &ls[n]).is_zero());
    }

    #[test]
    fn routes_agree_in_float(zeta in complex(), n in 0usize..=40) {
        let f = polar_fundamental(n, &zeta).unwrap();
        prop_assert!(rel_gap(&f, &polar_integral(n, &zeta).unwrap()) < 1e-10);
        prop_assert!(rel_gap(&f, &polar_recurrence(n, &zeta, Variant::Corrected).unwrap()) < 1e-10);
    }

    #[test]
    fn integral_table_exact(zeta in gaussian_rational(), n in 1usize..=8) {
        let p = polar_fundamental(n, &zeta).unwrap();
        let primitive = p.mul_linear(&zeta);
        let ls = legendre_polys::<ExactComplex>(n + 3);
        let (_, dl) = legendre_pair(n, &zeta);
        let one = ExactComplex::one();
        for (m, l) in ls.iter().enumerate() {
            let got = (&primitive * l).integrate_symmetric();
            let mut want = ExactComplex::zero();
            if m == 0 {
                want += ExactComplex::from_ratio(2, n as i64) * (one.clone() - zeta.clone() * zeta.clone()) * dl.clone();
            }
            if m + 1 == n {
                want -= ExactComplex::from_rational(&(q(n as i64 + 1, n as i64) * norm_sq(n)));
            }
            if m == n + 1 {
                want += ExactComplex::from_rational(&norm_sq(n + 1));
            }
            prop_assert_eq!(got, want, "n={} m={}", n, m);
        }
    }

    #[test]
    fn sobolev_orthogonality(zeta in gaussian_rational(), n in 0usize..=15) {
        let primitive = polar_fundamental(n, &zeta).unwrap().mul_linear(&zeta);
        for k in 0..=n {
            prop_assert!(sobolev_inner(&primitive, &Polynomial::monomial(k), &zeta).is_zero(), "k={}", k);
        }
    }

    #[test]
    fn parity(zeta in small_rational(), n in 0usize..=16) {
        let p = polar_fundamental(n, &zeta).unwrap();
        let mirrored = polar_fundamental(n, &-zeta.clone()).unwrap().reflect();
        let expected = if n % 2 == 0 { p.clone() } else { -&p };
        prop_assert!(mirrored.exactly_equals(&expected));
        if n % 2 == 1 {
            prop_assert!(p.eval(&-zeta).is_zero());
        }
    }
}

#[test]
fn integral_table_spot_values() {
    let zeta = q(2, 1);
    let primitive = polar_fundamental(2, &zeta).unwrap().mul_linear(&zeta);
    let ls = legendre_polys::<BigRational>(3);
    let got: Vec<BigRational> = ls
        .iter()
        .map(|l| (&primitive * l).integrate_symmetric())
        .collect();
    assert_eq!(got, vec![q(-12, 1), q(-4, 15), q(0, 1), q(8, 175)]);
}

#[test]
fn derivative_form_is_orthogonal_to_lower_powers() {
    for zeta in [q(0, 1), q(1, 2), q(2, 1), q(-7, 5)] {
        for n in 1..=10 {
            let p = polar_fundamental(n, &zeta).unwrap();
            let form = &p + &p.derivative().mul_linear(&zeta);
            for k in 0..n {
                let v = (&form * &Polynomial::monomial(k)).integrate_symmetric();
                assert!(v.is_zero(), "ζ={zeta} n={n} k={k}");
            }
            let ln = &legendre_polys::<BigRational>(n)[n];
            assert_eq!(
                (&form * ln).integrate_symmetric(),
                norm_sq(n) * q(n as i64 + 1, 1)
            );
        }
    }
}

#[test]
fn monic_product_of_roots_reproduces_coefficients() {
    let s = 2.0 * 3f64.sqrt() / 3.0;
    let poles = [
        Complex64::new(2.0, 0.0),
        Complex64::new(0.0, 2.0),
        Complex64::new(1.0, 1.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(s, 0.0),
    ];
    let degrees: Vec<usize> = (1..=20).chain([25, 30, 40, 50, 60]).collect();
    for zeta in poles {
        let ze = complex64_to_exact(zeta).unwrap();
        for &n in &degrees {
            let roots = polar_legendre::roots::polar_roots(n, zeta).unwrap();
            assert!(roots.converged, "ζ={zeta} n={n}");
            let mut prod = Polynomial::<ExactComplex>::one();
            for (r, &m) in roots.roots.iter().zip(&roots.multiplicities) {
                let re = complex64_to_exact(*r).unwrap();
                for _ in 0..m {
                    prod = prod.mul_linear(&re);
                }
            }
            let want = polar_fundamental(n, &ze).unwrap();
            let gap = prod.max_coeff_diff(&want) / want.max_abs();
            assert!(gap <= 1e-8, "ζ={zeta} n={n}: {gap:e}");
        }
    }
}
