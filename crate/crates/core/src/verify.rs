//! Identity, zero-geometry and asymptotic checks.
//!
//! Each check returns [`CheckRecord`] rows. Exact fields are judged on exact
//! zeros; binary64 rows carry a relative residual and the tolerance used.
//! [`run_suite`] fans the checks out with rayon and merges them into a
//! sorted [`VerificationReport`].

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    ellipse_bound_checks, joukowski_phi, joukowski_sqrt, lemniscate, pole_geometry,
};
use crate::legendre::{
    antiderivative_identity, check_derivative_orthogonality, gauss_rule, legendre_pair,
    legendre_polys, legendre_triple, legendre_values, legendre_zeros, log_abs_deriv,
    nodes_for_degree, norm_sq, EXACT_DEGREE_BOUND,
};
use crate::polar::{
    defining_identity_defect, polar_fundamental, polar_integral, polar_recurrence_family,
    recurrence_coeffs, recurrence_step, sobolev_inner, Variant,
};
use crate::poly::Polynomial;
use crate::report::{CheckRecord, Params, VerificationReport};
use crate::roots::{default_cluster_radius, polar_roots_converged};
use crate::scalar::{complex64_to_exact, ExactComplex, Scalar};

/// Default tolerances.
pub mod tol {
    /// Relative residual of the integral table in binary64.
    pub const INTEGRAL_TABLE_FLOAT: f64 = 1e-11;
    /// Relative coefficient gap for identities in binary64.
    pub const FLOAT_IDENTITY: f64 = 1e-10;
    pub const LEMNISCATE: f64 = 1e-8;
    pub const SYMMETRIC_ZERO: f64 = 1e-10;
    pub const SPECIAL_POLE: f64 = 1e-9;
    pub const EQUILIBRIUM: f64 = 1e-9;
    pub const RATIO1_AT_200: f64 = 1e-6;
    pub const RATIO2_AT_200: f64 = 1e-2;
    pub const NTH_ROOT_AT_200: f64 = 0.05;
    pub const DEVIATION_SLACK: f64 = 1.1;
    /// Relative size below which `P_n(x_j)` counts as a collision.
    pub const COLLISION: f64 = 1e-12;
}

/// Tolerance recorded on rows that only require a finite value.
pub const UNBOUNDED: f64 = f64::MAX;

fn mode_label<T: Scalar>() -> &'static str {
    if T::EXACT {
        "exact"
    } else {
        "float"
    }
}

fn params<T: Scalar>(zeta: &T) -> Params {
    Params::default().zeta(zeta.label()).mode(mode_label::<T>())
}

fn float_params(zeta: Complex64) -> Params {
    params(&zeta)
}

/// Exact zero in exact fields, `|defect| / scale ≤ tol` otherwise.
fn judge<T: Scalar>(id: &str, p: Params, defect: &T, scale: f64, tol: f64) -> CheckRecord {
    if T::EXACT {
        CheckRecord::exact(id, p, defect.is_zero(), defect.magnitude())
    } else {
        CheckRecord::measured(
            id,
            p,
            defect.magnitude() / scale.max(f64::MIN_POSITIVE),
            tol,
        )
    }
}

fn poly_gap<T: Scalar>(a: &Polynomial<T>, b: &Polynomial<T>) -> (bool, f64) {
    let diff = a.max_coeff_diff(b);
    if T::EXACT {
        (a.exactly_equals(b), diff)
    } else {
        (
            false,
            diff / a.max_abs().max(b.max_abs()).max(f64::MIN_POSITIVE),
        )
    }
}

fn judge_poly<T: Scalar>(
    id: &str,
    p: Params,
    a: &Polynomial<T>,
    b: &Polynomial<T>,
    tol: f64,
) -> CheckRecord {
    let (equal, gap) = poly_gap(a, b);
    if T::EXACT {
        CheckRecord::exact(id, p, equal, gap)
    } else {
        CheckRecord::measured(id, p, gap, tol)
    }
}

/// `Σ |c_k| ∫|x^k|`, the natural size of `∫_{-1}^{1} p`.
fn l1_scale<T: Scalar>(p: &Polynomial<T>) -> f64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c.magnitude() * 2.0 / (k as f64 + 1.0))
        .sum()
}

/// `Σ |c_k| r^k`, the condition scale of Horner evaluation at `|z| = r`.
fn horner_scale<T: Scalar>(p: &Polynomial<T>, r: f64) -> f64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c.magnitude() * r.powi(k as i32))
        .sum()
}

/// Expected `∫ (x − ζ) P_n L_m` and the table cases that contributed.
fn table_expected<T: Scalar>(n: usize, m: usize, zeta: &T, dl_zeta: &T) -> (T, String) {
    let mut value = T::zero();
    let mut cases = Vec::new();
    if m == 0 {
        let one_minus = T::one() - zeta.clone() * zeta.clone();
        value = value + T::from_ratio(2, n as i64) * one_minus * dl_zeta.clone();
        cases.push("m=0");
    }
    if m + 1 == n {
        let r = BigRational::from_ratio(n as i64 + 1, n as i64) * norm_sq(n);
        value = value - T::from_rational(&r);
        cases.push("m=n-1");
    }
    if m == n + 1 {
        value = value + T::from_rational(&norm_sq(n + 1));
        cases.push("m=n+1");
    }
    let note = if cases.is_empty() {
        "vanishing case".to_string()
    } else {
        cases.join(" + ")
    };
    (value, note)
}

fn delta1_expected<T: Scalar>(n: usize, m: usize) -> T {
    if m == n {
        T::from_rational(&(norm_sq(n) * BigRational::from_integer((n as i64 + 1).into())))
    } else {
        T::zero()
    }
}

/// Integral table `∫ (x − ζ) P_n L_m` for `m ≤ n + 2` and the companion
/// identity `∫ [P_n + (x − ζ) P'_n] L_m = (n + 1)‖L_n‖² δ_{nm}` for
/// `m ≤ n + 1`.
///
/// Exact fields integrate coefficients. Binary64 evaluates `(x − ζ) P_n`
/// without coefficients and integrates by Gauss–Legendre quadrature;
/// residuals are relative to `∫|integrand|`.
pub fn check_integral_table<T: Scalar>(
    n: usize,
    zeta: &T,
    float_tol: f64,
) -> Result<Vec<CheckRecord>> {
    if n == 0 {
        return Err(Error::InvalidArgument("integral table needs n >= 1".into()));
    }
    if T::EXACT {
        table_exact(n, zeta)
    } else {
        table_float(n, zeta.to_complex64(), float_tol)
    }
}

fn table_exact<T: Scalar>(n: usize, zeta: &T) -> Result<Vec<CheckRecord>> {
    let p = polar_fundamental(n, zeta)?;
    let primitive = p.mul_linear(zeta);
    let companion = &p + &p.derivative().mul_linear(zeta);
    let ls = legendre_polys::<T>(n + 2);
    let (_, dl_zeta) = legendre_pair(n, zeta);
    let mut rows = Vec::with_capacity(2 * n + 5);
    for (m, l) in ls.iter().enumerate() {
        let value = (&primitive * l).integrate_symmetric();
        let (expected, note) = table_expected(n, m, zeta, &dl_zeta);
        let defect = value - expected;
        rows.push(judge("integral.table", params(zeta).n(n).m(m), &defect, 1.0, 0.0).note(note));
    }
    for (m, l) in ls.iter().enumerate().take(n + 2) {
        let defect = (&companion * l).integrate_symmetric() - delta1_expected::<T>(n, m);
        rows.push(judge(
            "integral.derivative_form",
            params(zeta).n(n).m(m),
            &defect,
            1.0,
            0.0,
        ));
    }
    Ok(rows)
}

/// Quadrature weight, `(x − ζ) P_n`, its derivative, and `L_0..L_{n+2}` at a node.
type Sample = (f64, Complex64, Complex64, Vec<Complex64>);

fn table_float(n: usize, zeta: Complex64, tol: f64) -> Result<Vec<CheckRecord>> {
    let rule = gauss_rule(nodes_for_degree(2 * n + 3))?;
    let (_, dl_zeta) = legendre_pair(n, &zeta);
    let pole_term = (1.0 - zeta * zeta) * dl_zeta;
    let nf = n as f64;
    // (x − ζ) P_n and its derivative from the fundamental formula, with
    // L''_n from its own recurrence.
    let samples: Vec<_> = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&x, &w)| {
            let xc = Complex64::new(x, 0.0);
            let (_, d, s) = legendre_triple(n, &xc);
            let primitive = (pole_term - (1.0 - x * x) * d) / nf;
            let companion = (2.0 * x * d - (1.0 - x * x) * s) / nf;
            (w, primitive, companion, legendre_values(n + 2, &xc).values)
        })
        .collect();
    let integrate = |m: usize, pick: &dyn Fn(&Sample) -> Complex64| {
        let (mut value, mut scale) = (Complex64::new(0.0, 0.0), 0.0);
        for s in &samples {
            let f = pick(s) * s.3[m];
            value += f * s.0;
            scale += s.0 * f.norm();
        }
        (value, scale)
    };
    let mut rows = Vec::with_capacity(2 * n + 5);
    for m in 0..=n + 2 {
        let (value, scale) = integrate(m, &|s| s.1);
        let (expected, note) = table_expected(n, m, &zeta, &dl_zeta);
        let scale = scale.max(expected.norm());
        rows.push(
            judge(
                "integral.table",
                float_params(zeta).n(n).m(m),
                &(value - expected),
                scale,
                tol,
            )
            .note(note),
        );
    }
    for m in 0..=n + 1 {
        let (value, scale) = integrate(m, &|s| s.2);
        let expected = delta1_expected::<Complex64>(n, m);
        let scale = scale.max(expected.norm());
        rows.push(judge(
            "integral.derivative_form",
            float_params(zeta).n(n).m(m),
            &(value - expected),
            scale,
            tol,
        ));
    }
    Ok(rows)
}

/// Adjudicates the two recurrence constants.
///
/// For each step `n` both variants are applied to the reference `P_n`,
/// `P_{n−1}` and compared with the reference `P_{n+1}`; the row passes when
/// the corrected constant reproduces it and the printed one does not. Steps
/// with `b_n = 0` cannot separate the variants and are inconclusive. A
/// summary row compares the iterated families.
pub fn check_recurrence<T: Scalar>(
    n_max: usize,
    zeta: &T,
    float_tol: f64,
) -> Result<Vec<CheckRecord>> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(
            "recurrence adjudication needs n_max >= 2".into(),
        ));
    }
    let reference = (0..=n_max)
        .map(|k| polar_fundamental(k, zeta))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut decisive = 0;
    for n in 1..n_max {
        let coeffs = recurrence_coeffs(n, zeta)?;
        let target = &reference[n + 1];
        let corrected = recurrence_step(
            &coeffs,
            Variant::Corrected,
            &reference[n],
            &reference[n - 1],
        );
        let printed = recurrence_step(&coeffs, Variant::Printed, &reference[n], &reference[n - 1]);
        let (c_equal, c_gap) = poly_gap(&corrected, target);
        let (p_equal, p_gap) = poly_gap(&printed, target);
        let b = &coeffs.b_corrected;
        let (c_ok, p_ok, degenerate) = if T::EXACT {
            (c_equal, !p_equal, b.is_zero())
        } else {
            let rel_b = b.magnitude() / target.max_abs();
            (c_gap <= float_tol, p_gap > float_tol, rel_b <= float_tol)
        };
        let p = params(zeta).n(n);
        let tol = if T::EXACT { 0.0 } else { float_tol };
        let row = CheckRecord::with_status("recurrence.step", p, c_gap, tol, c_ok && p_ok)
            .residuals(vec![c_gap, p_gap]);
        let row = if degenerate {
            row.inconclusive()
                .note("b_n = 0: the two variants coincide at this step")
        } else {
            decisive += 1;
            let gap_label = if T::EXACT {
                b.label()
            } else {
                format!("{:e}", b.magnitude())
            };
            let verdict = match (c_ok, p_ok) {
                (true, true) => "corrected variant consistent",
                (true, false) => "both variants consistent",
                (false, true) => "corrected variant inconsistent",
                (false, false) => "neither variant consistent",
            };
            row.note(format!(
                "{verdict}; printed constant differs by {gap_label} in the constant coefficient of P_{}",
                n + 1
            ))
        };
        rows.push(row);
    }

    let corrected = polar_recurrence_family(n_max, zeta, Variant::Corrected)?;
    let printed = polar_recurrence_family(n_max, zeta, Variant::Printed)?;
    let mut c_worst: f64 = 0.0;
    let mut c_all = true;
    let mut printed_gaps = Vec::with_capacity(n_max + 1);
    let mut first_printed_gap = None;
    for k in 0..=n_max {
        let (ce, cg) = poly_gap(&corrected[k], &reference[k]);
        let (pe, pg) = poly_gap(&printed[k], &reference[k]);
        c_worst = c_worst.max(cg);
        c_all &= if T::EXACT { ce } else { cg <= float_tol };
        let differs = if T::EXACT { !pe } else { pg > float_tol };
        if differs && first_printed_gap.is_none() {
            first_printed_gap = Some(k);
        }
        printed_gaps.push(pg);
    }
    let tol = if T::EXACT { 0.0 } else { float_tol };
    let row = CheckRecord::with_status(
        "recurrence.family",
        params(zeta).n(n_max),
        c_worst,
        tol,
        c_all,
    )
    .residuals(printed_gaps);
    let row = if decisive == 0 {
        row.inconclusive()
            .note("b_n = 0 at every step: the variants cannot be separated")
    } else {
        let printed_note = match first_printed_gap {
            Some(k) => format!("printed-constant family first departs at degree {k}"),
            None => "printed-constant family matches at every degree".to_string(),
        };
        let head = if c_all {
            "corrected variant consistent"
        } else {
            "corrected variant inconsistent"
        };
        row.note(format!("{head}; {printed_note}"))
    };
    rows.push(row);
    Ok(rows)
}

/// Fundamental, integral and corrected-recurrence constructions agree, each
/// `P_n` satisfies its defining identity, and the reflection symmetry
/// `P_n(−x; −ζ) = (−1)^n P_n(x; ζ)` holds.
pub fn check_routes<T: Scalar>(n_max: usize, zeta: &T, float_tol: f64) -> Result<Vec<CheckRecord>> {
    let recurrence = polar_recurrence_family(n_max, zeta, Variant::Corrected)?;
    let ls = legendre_polys::<T>(n_max);
    let neg_zeta = -zeta.clone();
    let mut rows = Vec::with_capacity(3 * (n_max + 1));
    for n in 0..=n_max {
        let p = params(zeta).n(n);
        let fundamental = polar_fundamental(n, zeta)?;
        let integral = polar_integral(n, zeta)?;
        let (e1, g1) = poly_gap(&fundamental, &integral);
        let (e2, g2) = poly_gap(&fundamental, &recurrence[n]);
        let row = if T::EXACT {
            CheckRecord::exact("polar.routes", p.clone(), e1 && e2, g1.max(g2))
        } else {
            CheckRecord::measured("polar.routes", p.clone(), g1.max(g2), float_tol)
        };
        rows.push(row.residuals(vec![g1, g2]));

        let defect = defining_identity_defect(&fundamental, n, zeta, &ls[n]);
        // size of the terms cancelling in P + (x − ζ)P'
        let scale = (n as f64 + 1.0) * (1.0 + zeta.magnitude()) * fundamental.max_abs();
        let row = if T::EXACT {
            CheckRecord::exact(
                "polar.defining_identity",
                p.clone(),
                defect.is_zero(),
                defect.max_abs(),
            )
        } else {
            CheckRecord::measured(
                "polar.defining_identity",
                p.clone(),
                defect.max_abs() / scale,
                float_tol,
            )
        };
        rows.push(row);

        let mirrored = polar_fundamental(n, &neg_zeta)?.reflect();
        let expected = if n % 2 == 0 {
            fundamental
        } else {
            -&fundamental
        };
        rows.push(judge_poly(
            "polar.reflection",
            p,
            &mirrored,
            &expected,
            float_tol,
        ));
    }
    Ok(rows)
}

/// `⟨Π_{ζ,n+1}, x^k⟩ = 0` for `0 ≤ k ≤ n` in the product
/// `⟨p, q⟩ = p(ζ) q(ζ) + ∫ p' q'`. One row per `n` with the worst `k`.
pub fn check_sobolev<T: Scalar>(
    n_max: usize,
    zeta: &T,
    float_tol: f64,
) -> Result<Vec<CheckRecord>> {
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let primitive = polar_fundamental(n, zeta)?.mul_linear(zeta);
        let dprim = primitive.derivative();
        let mut all_zero = true;
        let mut worst: f64 = 0.0;
        let mut worst_k = 0;
        for k in 0..=n {
            let mono = Polynomial::<T>::monomial(k);
            let value = sobolev_inner(&primitive, &mono, zeta);
            let r = zeta.magnitude();
            let scale = horner_scale(&primitive, r) * r.powi(k as i32)
                + l1_scale(&(&dprim * &mono.derivative()));
            all_zero &= value.is_zero();
            let r = if T::EXACT {
                value.magnitude()
            } else {
                value.magnitude() / scale.max(1.0)
            };
            if r > worst || k == 0 {
                worst = worst.max(r);
                worst_k = k;
            }
        }
        let p = params(zeta).n(n).k(worst_k);
        rows.push(if T::EXACT {
            CheckRecord::exact("polar.sobolev", p, all_zero, worst)
        } else {
            CheckRecord::measured("polar.sobolev", p, worst, float_tol)
        });
    }
    Ok(rows)
}

/// Exact identities of the Legendre family up to `n_max`: orthogonality,
/// orthogonality of `L'_{n+1}` against `x^k (1 − x²)` for `k < n`, and the
/// closed antiderivative `∫ L_{n−1} = (x² − 1) L'_{n−1} / (n(n − 1))`.
pub fn check_legendre(n_max: usize) -> Result<Vec<CheckRecord>> {
    let n_max = n_max.min(EXACT_DEGREE_BOUND - 1);
    let ls = legendre_polys::<BigRational>(n_max);
    let base = || Params::default().mode("exact");
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let mut ok = true;
        let mut worst: f64 = 0.0;
        for m in 0..=n {
            let value = (&ls[n] * &ls[m]).integrate_symmetric();
            let expected = if m == n {
                norm_sq(n)
            } else {
                BigRational::from_integer(0.into())
            };
            let d = value - expected;
            ok &= d.is_zero();
            worst = worst.max(d.magnitude());
        }
        rows.push(CheckRecord::exact(
            "legendre.orthogonality",
            base().n(n),
            ok,
            worst,
        ));

        if n >= 1 {
            let mut ok = true;
            let mut worst: f64 = 0.0;
            for k in 0..n {
                let v = check_derivative_orthogonality(n, k)?;
                ok &= v.is_zero();
                worst = worst.max(v.magnitude());
            }
            rows.push(CheckRecord::exact(
                "legendre.derivative_orthogonality",
                base().n(n),
                ok,
                worst,
            ));
        }
        if n >= 2 {
            let id = antiderivative_identity(n)?;
            let ok = id.residual.is_zero() && id.at_minus_one.is_zero() && id.at_plus_one.is_zero();
            let worst = id
                .residual
                .magnitude()
                .max(id.at_minus_one.magnitude())
                .max(id.at_plus_one.magnitude());
            rows.push(CheckRecord::exact(
                "legendre.antiderivative",
                base().n(n),
                ok,
                worst,
            ));
        }
    }
    Ok(rows)
}

/// `true` when `ζ = ±1` or `L'_n(ζ) = 0`, the poles whose zeros are the
/// lemniscate nodes.
fn is_special_pole(n: usize, zeta: Complex64, nodes: &[f64]) -> bool {
    if zeta.im != 0.0 {
        return false;
    }
    let (_, dl) = legendre_pair(n, &zeta);
    dl.norm() == 0.0
        || nodes
            .iter()
            .any(|&x| (x - zeta.re).abs() <= 4.0 * f64::EPSILON)
}

/// Zero geometry of `P_n`: multiplicities, the lemniscate, the disk and
/// ellipse bounds, the zero at `−ζ` for odd `n` and real `ζ ≠ 0`, and the
/// node structure for the special poles.
pub fn check_zero_geometry(n: usize, zeta: Complex64) -> Result<Vec<CheckRecord>> {
    if n == 0 {
        return Err(Error::InvalidArgument("zero geometry needs n >= 1".into()));
    }
    let roots = polar_roots_converged(n, zeta)?;
    let p = || float_params(zeta).n(n);
    let radius = default_cluster_radius(zeta);
    let mut rows = Vec::new();

    let doubles: Vec<Complex64> = roots
        .roots
        .iter()
        .zip(&roots.multiplicities)
        .filter(|(_, &m)| m == 2)
        .map(|(r, _)| *r)
        .collect();
    let off_segment = doubles
        .iter()
        .map(|r| r.im.abs().max(r.re.abs() - 1.0).max(0.0))
        .fold(0.0, f64::max);
    let count_ok = roots.total_multiplicity() == n;
    rows.push(
        CheckRecord::with_status(
            "zeros.multiplicity",
            p(),
            off_segment,
            radius,
            count_ok && off_segment <= radius,
        )
        .note(format!(
            "{} distinct, {} double",
            roots.len(),
            doubles.len()
        )),
    );

    let lem = lemniscate(n, zeta)?;
    let lem_res: Vec<f64> = roots.roots.iter().map(|r| lem.residual(*r)).collect();
    let worst = lem_res.iter().copied().fold(0.0, f64::max);
    rows.push(CheckRecord::measured(
        "zeros.lemniscate",
        p(),
        worst,
        tol::LEMNISCATE,
    ));

    let bounds = ellipse_bound_checks(zeta, &roots, 1e-12 * (1.0 + zeta.norm()));
    let excess = (bounds.max_modulus - bounds.disk_radius).max(0.0);
    rows.push(
        CheckRecord::with_status(
            "zeros.disk",
            p(),
            excess,
            0.0,
            bounds.disk_violations.is_empty(),
        )
        .note(format!(
            "max |z| = {:.12}, radius {:.12}",
            bounds.max_modulus, bounds.disk_radius
        )),
    );
    if let Some(e) = &bounds.ellipse {
        let gap = (2.0 * e.alpha - e.min_focal_sum).max(0.0);
        rows.push(
            CheckRecord::with_status(
                "zeros.ellipse",
                p(),
                gap,
                0.0,
                e.violations.is_empty() && e.all_simple,
            )
            .note(format!(
                "alpha = {:.12}, min |z+1|+|z-1| = {:.12}",
                e.alpha, e.min_focal_sum
            )),
        );
    }

    if n % 2 == 1 && zeta.im == 0.0 && zeta.re != 0.0 {
        let d = roots
            .roots
            .iter()
            .map(|r| (r + zeta).norm())
            .fold(f64::INFINITY, f64::min);
        rows.push(CheckRecord::measured(
            "zeros.reflected_pole",
            p(),
            d,
            tol::SYMMETRIC_ZERO,
        ));
    }

    if is_special_pole(n, zeta, &lem.nodes) {
        let dist = |r: &Complex64| {
            lem.nodes
                .iter()
                .map(|&x| (r - x).norm())
                .fold(f64::INFINITY, f64::min)
        };
        let worst = roots.roots.iter().map(dist).fold(0.0, f64::max);
        let excluded: Vec<f64> = lem
            .nodes
            .iter()
            .copied()
            .filter(|&x| {
                roots
                    .roots
                    .iter()
                    .all(|r| (r - x).norm() > tol::SPECIAL_POLE)
            })
            .collect();
        let ok = worst <= tol::SPECIAL_POLE && excluded.len() == 1 && roots.len() == n;
        let note = match excluded.as_slice() {
            [x] => format!("zeros are the nodes except x = {x:.16}"),
            _ => format!("{} nodes unmatched", excluded.len()),
        };
        rows.push(
            CheckRecord::with_status("zeros.special_pole", p(), worst, tol::SPECIAL_POLE, ok)
                .note(note),
        );
    }
    Ok(rows)
}

fn check_ascending(n_list: &[usize]) -> Result<()> {
    if n_list.is_empty() || n_list[0] == 0 || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "n list must be nonempty, positive and strictly ascending".into(),
        ));
    }
    Ok(())
}

/// Zeros approach `|φ(z)| = |φ(ζ)|`: the deviation
/// `max |ln(|φ(root)| / ρ(ζ))|` must not grow by more than 10% from one
/// entry of `n_list` to the next, and every root has `|φ(root)| > 1`.
pub fn check_accumulation(zeta: Complex64, n_list: &[usize]) -> Result<Vec<CheckRecord>> {
    check_ascending(n_list)?;
    let g = pole_geometry(zeta);
    if g.delta_min <= 1.0 {
        return Err(Error::Precondition(format!(
            "accumulation check needs dist(ζ, [-1, 1]) > 1, got {}",
            g.delta_min
        )));
    }
    let rho = g.rho_acc.expect("ζ is off the segment");
    let runs = n_list
        .par_iter()
        .map(|&n| {
            let roots = polar_roots_converged(n, zeta)?;
            let mut dev: f64 = 0.0;
            let mut min_phi = f64::INFINITY;
            for r in &roots.roots {
                let m = joukowski_phi(*r)?.norm();
                dev = dev.max((m / rho).ln().abs());
                min_phi = min_phi.min(m);
            }
            Ok((n, dev, min_phi))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(runs.len());
    let mut prev: Option<f64> = None;
    for (n, dev, min_phi) in runs {
        let limit = prev.map_or(UNBOUNDED, |d| tol::DEVIATION_SLACK * d);
        let ok = dev.is_finite() && dev <= limit && min_phi > 1.0;
        rows.push(
            CheckRecord::with_status(
                "accumulation.deviation",
                float_params(zeta).n(n),
                dev,
                limit,
                ok,
            )
            .residuals(vec![dev, min_phi])
            .note(format!("rho = {rho:.16}, min |phi(root)| = {min_phi:.16}")),
        );
        prev = Some(dev);
    }
    Ok(rows)
}

/// One term of a convergence sequence.
#[derive(Clone, Debug, Serialize)]
pub struct AsymPoint {
    pub n: usize,
    pub value: Complex64,
    pub target: Complex64,
    pub abs_err: f64,
}

/// Which limit to tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Limit {
    /// `|L'_n(z)|^{1/n} → |φ(z)|/2`
    NthRoot,
    /// `n P_n(z) / L'_n(z) → (z² − 1)/(z − ζ)`
    Ratio1,
    /// `P_n(z) / L_n(z) → √(z² − 1)/(z − ζ)`
    Ratio2,
}

/// `|L'_n(z)|^{1/n}` against `|φ(z)|/2`.
pub fn nth_root_sequence(z: Complex64, n_list: &[usize]) -> Result<Vec<AsymPoint>> {
    check_ascending(n_list)?;
    let phi = joukowski_phi(z).map_err(|_| {
        Error::Precondition(format!(
            "nth-root limit needs z off [-1, 1], got {},{}",
            z.re, z.im
        ))
    })?;
    let target = phi.norm() / 2.0;
    Ok(n_list
        .iter()
        .map(|&n| {
            let value = (log_abs_deriv(n, z) / n as f64).exp();
            AsymPoint {
                n,
                value: Complex64::new(value, 0.0),
                target: Complex64::new(target, 0.0),
                abs_err: (value - target).abs(),
            }
        })
        .collect())
}

/// Both ratio limits, evaluated in exact Gaussian-rational arithmetic at
/// the binary64 inputs. `ratio1` errors are exact differences rounded once.
pub fn ratio_sequences(
    zeta: Complex64,
    z: Complex64,
    n_list: &[usize],
) -> Result<(Vec<AsymPoint>, Vec<AsymPoint>)> {
    check_ascending(n_list)?;
    let bound = pole_geometry(zeta).disk_radius();
    if z.norm() <= bound {
        return Err(Error::Precondition(format!(
            "ratio limits need |z| > Δ_ζ + 1 = {bound}, got |z| = {}",
            z.norm()
        )));
    }
    let to_exact = |w: Complex64| {
        complex64_to_exact(w).ok_or_else(|| Error::InvalidArgument("non-finite input".into()))
    };
    let (ze, we) = (to_exact(zeta)?, to_exact(z)?);
    let n_top = *n_list.last().expect("nonempty");
    let at_z = legendre_values(n_top, &we);
    let at_zeta = legendre_values(n_top, &ze);
    let one = ExactComplex::from_int(1);
    let target1 = (we.clone() * we.clone() - one.clone()) / (we.clone() - ze.clone());
    let target2 = joukowski_sqrt(z)? / (z - zeta);

    let mut r1 = Vec::with_capacity(n_list.len());
    let mut r2 = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let nn = ExactComplex::from_int(n as i64);
        let pole_term = (one.clone() - ze.clone() * ze.clone()) * at_zeta.deriv(n).clone();
        let z_term = (one.clone() - we.clone() * we.clone()) * at_z.deriv(n).clone();
        let p = (pole_term - z_term) / (nn.clone() * (we.clone() - ze.clone()));
        let ratio1 = nn * p.clone() / at_z.deriv(n).clone();
        r1.push(AsymPoint {
            n,
            value: ratio1.to_complex64(),
            target: target1.to_complex64(),
            abs_err: (ratio1 - target1.clone()).magnitude(),
        });
        let ratio2 = (p / at_z.value(n).clone()).to_complex64();
        r2.push(AsymPoint {
            n,
            value: ratio2,
            target: target2,
            abs_err: (ratio2 - target2).norm(),
        });
    }
    Ok((r1, r2))
}

/// Relative asymptotics at `z` with `|z| > Δ_ζ + 1`: `ratio1` errors must
/// decrease strictly along `n_list` (an exact zero is accepted and skipped)
/// and be below `1e-6` from `n = 200`; `ratio2` errors below `1e-2` from
/// `n = 200`.
pub fn check_ratio_limits(
    zeta: Complex64,
    z: Complex64,
    n_list: &[usize],
) -> Result<Vec<CheckRecord>> {
    let (r1, r2) = ratio_sequences(zeta, z, n_list)?;
    let p = |n: usize| float_params(zeta).n(n).z(z.label());
    let mut rows = Vec::with_capacity(2 * n_list.len());
    let mut prev: Option<f64> = None;
    for pt in &r1 {
        let mut limit = prev.unwrap_or(UNBOUNDED);
        if pt.n >= 200 {
            limit = limit.min(tol::RATIO1_AT_200);
        }
        let exact_hit = pt.abs_err == 0.0;
        let ok = exact_hit || (pt.abs_err.is_finite() && pt.abs_err < limit);
        let row = CheckRecord::with_status("ratio1.error", p(pt.n), pt.abs_err, limit, ok);
        rows.push(if exact_hit {
            row.note("L'_n(ζ) = 0: ratio equals the limit exactly")
        } else {
            row
        });
        if !exact_hit {
            prev = Some(pt.abs_err);
        }
    }
    for pt in &r2 {
        let limit = if pt.n >= 200 {
            tol::RATIO2_AT_200
        } else {
            UNBOUNDED
        };
        rows.push(CheckRecord::measured(
            "ratio2.error",
            p(pt.n),
            pt.abs_err,
            limit,
        ));
    }
    Ok(rows)
}

/// `|L'_n(z)|^{1/n} → |φ(z)|/2`: relative error below 5% from `n = 200` and
/// strictly decreasing over the entries with `n ≥ 50`.
pub fn check_nth_root_asymptotic(z: Complex64, n_list: &[usize]) -> Result<Vec<CheckRecord>> {
    let pts = nth_root_sequence(z, n_list)?;
    let mut rows = Vec::with_capacity(pts.len());
    let mut prev: Option<f64> = None;
    for pt in pts {
        let rel = pt.abs_err / pt.target.re;
        let mut limit = if pt.n >= 200 {
            tol::NTH_ROOT_AT_200
        } else {
            UNBOUNDED
        };
        if let Some(q) = prev {
            limit = limit.min(q);
        }
        let ok = rel.is_finite() && (rel < limit || (prev.is_none() && rel <= limit));
        rows.push(
            CheckRecord::with_status(
                "nthroot.relative_error",
                Params::default().n(pt.n).z(z.label()).mode("float"),
                rel,
                limit,
                ok,
            )
            .residuals(vec![pt.value.re, pt.target.re, pt.abs_err]),
        );
        if pt.n >= 50 {
            prev = Some(rel);
        }
    }
    Ok(rows)
}

/// Equilibrium of the Legendre zeros in the field of unit masses at `ζ` and
/// at the zeros of `P_n`: the scaled residual
/// `|1/(x_j − ζ) + P'_n(x_j)/P_n(x_j)| · |x_j − ζ|` at each zero `x_j` of
/// `L_n`. `P_n` and `P'_n` come from the fundamental formula and its
/// derivative, with `L''_n` from its own recurrence. Zeros where `P_n(x_j)`
/// vanishes are skipped and counted.
pub fn check_equilibrium(n: usize, zeta: Complex64) -> Result<Vec<CheckRecord>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "equilibrium check needs n >= 1".into(),
        ));
    }
    let xs = legendre_zeros(n)?;
    if let Some(x) = xs
        .iter()
        .find(|&&x| (Complex64::new(x, 0.0) - zeta).norm() <= 4.0 * f64::EPSILON)
    {
        return Err(Error::Precondition(format!(
            "ζ coincides with the zero {x} of L_{n}"
        )));
    }
    let (_, dl_zeta) = legendre_pair(n, &zeta);
    let pole_term = (1.0 - zeta * zeta) * dl_zeta;
    let nf = n as f64;
    let mut residuals = Vec::with_capacity(n);
    let mut skipped = 0;
    for &x in &xs {
        let xc = Complex64::new(x, 0.0);
        let h = xc - zeta;
        let (_, d, s) = legendre_triple(n, &xc);
        let z_term = (1.0 - x * x) * d;
        let pv = (pole_term - z_term) / (nf * h);
        let scale = (pole_term.norm() + z_term.norm()) / (nf * h.norm());
        if pv.norm() <= tol::COLLISION * scale {
            skipped += 1;
            residuals.push(f64::NAN);
            continue;
        }
        // n [(x − ζ) P_n]' = 2x L'_n − (1 − x²) L''_n
        let dpv = ((2.0 * x * d - (1.0 - x * x) * s) / nf - pv) / h;
        residuals.push(((1.0 / h + dpv / pv) * h).norm());
    }
    let worst = residuals
        .iter()
        .copied()
        .filter(|r| r.is_finite())
        .fold(0.0, f64::max);
    let row = CheckRecord::measured(
        "equilibrium.residual",
        float_params(zeta).n(n),
        worst,
        tol::EQUILIBRIUM,
    )
    .residuals(residuals);
    Ok(vec![if skipped > 0 {
        row.note(format!(
            "{skipped} zero(s) of L_n collide with zeros of P_n and were skipped"
        ))
    } else {
        row
    }])
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    #[default]
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Legendre,
    IntegralTable,
    Recurrence,
    Routes,
    Sobolev,
    Zeros,
    Equilibrium,
    Accumulation,
    RatioLimits,
    NthRoot,
}

impl CheckKind {
    pub const DEFAULT: [CheckKind; 7] = [
        CheckKind::Legendre,
        CheckKind::IntegralTable,
        CheckKind::Recurrence,
        CheckKind::Routes,
        CheckKind::Sobolev,
        CheckKind::Zeros,
        CheckKind::Equilibrium,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Legendre => "legendre",
            CheckKind::IntegralTable => "integral",
            CheckKind::Recurrence => "recurrence",
            CheckKind::Routes => "polar",
            CheckKind::Sobolev => "sobolev",
            CheckKind::Zeros => "zeros",
            CheckKind::Equilibrium => "equilibrium",
            CheckKind::Accumulation => "accumulation",
            CheckKind::RatioLimits => "ratio",
            CheckKind::NthRoot => "nthroot",
        }
    }

    /// Accepts the selectors `1`–`6` and the names from [`Self::as_str`].
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s.trim().to_ascii_lowercase().as_str() {
            "legendre" => CheckKind::Legendre,
            "1" | "integral" => CheckKind::IntegralTable,
            "2" | "recurrence" => CheckKind::Recurrence,
            "polar" | "routes" => CheckKind::Routes,
            "sobolev" => CheckKind::Sobolev,
            "3" | "4" | "zeros" => CheckKind::Zeros,
            "equilibrium" => CheckKind::Equilibrium,
            "5" | "accumulation" => CheckKind::Accumulation,
            "6" | "ratio" => CheckKind::RatioLimits,
            "nthroot" => CheckKind::NthRoot,
            _ => return None,
        })
    }
}

/// Pole value with an exact representation when one was supplied.
#[derive(Clone, Debug)]
pub struct Pole {
    pub value: Complex64,
    pub exact: Option<ExactComplex>,
}

impl Pole {
    pub fn float(value: Complex64) -> Self {
        Pole {
            value,
            exact: complex64_to_exact(value),
        }
    }

    pub fn exact(exact: ExactComplex) -> Self {
        Pole {
            value: exact.to_complex64(),
            exact: Some(exact),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub pole: Pole,
    pub n_max: usize,
    pub mode: Mode,
    pub checks: Vec<CheckKind>,
    pub z: Option<Complex64>,
    pub n_list: Option<Vec<usize>>,
    /// Overrides the binary64 identity tolerances.
    pub tol: Option<f64>,
}

impl SuiteConfig {
    pub fn new(pole: Pole, n_max: usize, mode: Mode) -> Self {
        SuiteConfig {
            pole,
            n_max,
            mode,
            checks: CheckKind::DEFAULT.to_vec(),
            z: None,
            n_list: None,
            tol: None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let zeta = match (&self.pole.exact, self.mode) {
            (Some(e), Mode::Exact) => e.label(),
            _ => self.pole.value.label(),
        };
        let mut checks = self.checks.clone();
        checks.sort();
        checks.dedup();
        serde_json::json!({
            "pole": zeta,
            "n_max": self.n_max,
            "mode": self.mode,
            "checks": checks.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
            "z": self.z.map(|z| z.label()),
            "n_list": self.n_list,
            "tol": self.tol.map(crate::scalar::fmt_sig17),
        })
    }
}

#[derive(Clone, Copy, Debug)]
enum Task {
    Legendre,
    IntegralTable(usize),
    Recurrence,
    Routes,
    Sobolev,
    Zeros(usize),
    Equilibrium(usize),
    Accumulation,
    RatioLimits,
    NthRoot,
}

impl Task {
    fn kind(self) -> CheckKind {
        match self {
            Task::Legendre => CheckKind::Legendre,
            Task::IntegralTable(_) => CheckKind::IntegralTable,
            Task::Recurrence => CheckKind::Recurrence,
            Task::Routes => CheckKind::Routes,
            Task::Sobolev => CheckKind::Sobolev,
            Task::Zeros(_) => CheckKind::Zeros,
            Task::Equilibrium(_) => CheckKind::Equilibrium,
            Task::Accumulation => CheckKind::Accumulation,
            Task::RatioLimits => CheckKind::RatioLimits,
            Task::NthRoot => CheckKind::NthRoot,
        }
    }

    fn n(self) -> Option<usize> {
        match self {
            Task::IntegralTable(n) | Task::Zeros(n) | Task::Equilibrium(n) => Some(n),
            _ => None,
        }
    }
}

const DEFAULT_ASYM_LIST: [usize; 4] = [25, 50, 100, 200];
const DEFAULT_ACCUMULATION_LIST: [usize; 3] = [25, 50, 100];

fn run_generic<T: Scalar>(task: Task, cfg: &SuiteConfig, zeta: &T) -> Result<Vec<CheckRecord>> {
    let ftol = |d: f64| cfg.tol.unwrap_or(d);
    let z = cfg.pole.value;
    match task {
        Task::Legendre => check_legendre(cfg.n_max),
        Task::IntegralTable(n) => check_integral_table(n, zeta, ftol(tol::INTEGRAL_TABLE_FLOAT)),
        Task::Recurrence => check_recurrence(cfg.n_max, zeta, ftol(tol::FLOAT_IDENTITY)),
        Task::Routes => check_routes(cfg.n_max, zeta, ftol(tol::FLOAT_IDENTITY)),
        Task::Sobolev => check_sobolev(cfg.n_max, zeta, ftol(tol::FLOAT_IDENTITY)),
        Task::Zeros(n) => check_zero_geometry(n, z),
        Task::Equilibrium(n) => check_equilibrium(n, z),
        Task::Accumulation => {
            let list = cfg
                .n_list
                .clone()
                .unwrap_or_else(|| DEFAULT_ACCUMULATION_LIST.to_vec());
            check_accumulation(z, &list)
        }
        Task::RatioLimits => {
            let list = cfg
                .n_list
                .clone()
                .unwrap_or_else(|| DEFAULT_ASYM_LIST.to_vec());
            check_ratio_limits(z, cfg.z.expect("validated"), &list)
        }
        Task::NthRoot => {
            let list = cfg
                .n_list
                .clone()
                .unwrap_or_else(|| DEFAULT_ASYM_LIST.to_vec());
            check_nth_root_asymptotic(cfg.z.expect("validated"), &list)
        }
    }
}

fn error_record(task: Task, cfg: &SuiteConfig, e: &Error) -> CheckRecord {
    let mut p = float_params(cfg.pole.value);
    if let Some(n) = task.n() {
        p = p.n(n);
    }
    let id = format!("{}.error", task.kind().as_str());
    let row = CheckRecord::with_status(&id, p, f64::NAN, 0.0, false).note(e.to_string());
    if matches!(e, Error::Precondition(_)) {
        row.inconclusive()
    } else {
        row
    }
}

/// Runs the selected checks concurrently and returns the sorted report.
/// Failures inside a check become failing rows; only invalid
/// configurations are returned as errors.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let exact =
        match cfg.mode {
            Mode::Exact => Some(cfg.pole.exact.clone().ok_or_else(|| {
                Error::InvalidArgument("exact mode needs a rational pole".into())
            })?),
            Mode::Float => None,
        };
    let mut kinds = cfg.checks.clone();
    kinds.sort();
    kinds.dedup();
    let mut tasks = Vec::new();
    for kind in kinds {
        match kind {
            CheckKind::Legendre => tasks.push(Task::Legendre),
            CheckKind::IntegralTable => tasks.extend((1..=cfg.n_max).map(Task::IntegralTable)),
            CheckKind::Recurrence if cfg.n_max >= 2 => tasks.push(Task::Recurrence),
            CheckKind::Recurrence => {}
            CheckKind::Routes => tasks.push(Task::Routes),
            CheckKind::Sobolev => tasks.push(Task::Sobolev),
            CheckKind::Zeros => tasks.extend((1..=cfg.n_max).map(Task::Zeros)),
            CheckKind::Equilibrium => tasks.extend((1..=cfg.n_max).map(Task::Equilibrium)),
            CheckKind::Accumulation => tasks.push(Task::Accumulation),
            CheckKind::RatioLimits | CheckKind::NthRoot if cfg.z.is_none() => {
                return Err(Error::InvalidArgument(format!(
                    "check {} needs a point z",
                    kind.as_str()
                )));
            }
            CheckKind::RatioLimits => tasks.push(Task::RatioLimits),
            CheckKind::NthRoot => tasks.push(Task::NthRoot),
        }
    }
    let rows: Vec<CheckRecord> = tasks
        .par_iter()
        .flat_map_iter(|&task| {
            let out = match &exact {
                Some(e) => run_generic(task, cfg, e),
                None => run_generic(task, cfg, &cfg.pole.value),
            };
            out.unwrap_or_else(|e| vec![error_record(task, cfg, &e)])
        })
        .collect();
    Ok(VerificationReport::new(cfg.to_json(), rows))
}
