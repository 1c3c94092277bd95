use num_complex::Complex64;
use num_rational::BigRational;

use polar_legendre::legendre::{critical_points, legendre_pair};
use polar_legendre::report::Status;
use polar_legendre::roots::polar_roots;
use polar_legendre::verify::{run_suite, CheckKind, Mode, Pole, SuiteConfig};
use polar_legendre::{Error, ExactComplex};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn exact(p: i64, q: i64) -> ExactComplex {
    ExactComplex::new(
        BigRational::new(p.into(), q.into()),
        BigRational::new(0.into(), 1.into()),
    )
}

#[test]
fn reports_are_byte_identical() {
    let cfg = SuiteConfig::new(Pole::float(c(1.0, 1.0)), 12, Mode::Float);
    let a = run_suite(&cfg).unwrap().to_json();
    let b = run_suite(&cfg).unwrap().to_json();
    assert_eq!(a, b);
    assert!(!a.contains('\r'));
}

#[test]
fn exact_suite_passes_with_zero_tolerances() {
    for pole in [exact(2, 1), exact(1, 2), exact(-7, 5)] {
        let report =
            run_suite(&SuiteConfig::new(Pole::exact(pole.clone()), 8, Mode::Exact)).unwrap();
        assert!(
            report.all_passed(),
            "{pole}: {:?}",
            report.failures().next()
        );
        for r in report
            .checks
            .iter()
            .filter(|r| r.params.mode.as_deref() == Some("exact"))
        {
            assert_eq!(r.tolerance, 0.0, "{}", r.check_id);
        }
    }
}

#[test]
fn adjudication_is_uniform_over_the_grid() {
    let s = 2.0 * 3f64.sqrt() / 3.0;
    for zeta in [
        c(0.0, 0.0),
        c(2.0, 0.0),
        c(0.0, 2.0),
        c(1.0, 1.0),
        c(s, 0.0),
        c(0.3, 0.0),
    ] {
        let mut cfg = SuiteConfig::new(Pole::float(zeta), 20, Mode::Float);
        cfg.checks = vec![CheckKind::Recurrence];
        let report = run_suite(&cfg).unwrap();
        for r in report
            .checks
            .iter()
            .filter(|r| r.check_id == "recurrence.step")
        {
            let n = r.params.n.unwrap();
            let (_, dl) = legendre_pair(n, &zeta);
            if (zeta * zeta - 1.0).norm() * dl.norm() > 1e-12 {
                assert_eq!(r.status, Status::Pass, "ζ={zeta} n={n}");
            }
        }
    }
}

#[test]
fn special_poles_exclude_one_node() {
    for n in 2..=20 {
        let cps = critical_points(n).unwrap();
        let mut nodes = vec![-1.0, 1.0];
        nodes.extend(&cps);
        let mut poles = vec![1.0, -1.0];
        poles.extend(&cps);
        for zeta in poles {
            let roots = polar_roots(n, c(zeta, 0.0)).unwrap();
            assert!(roots.converged);
            assert_eq!(roots.len(), n, "ζ={zeta} n={n}");
            let matched: Vec<bool> = nodes
                .iter()
                .map(|&x| roots.roots.iter().any(|r| (r - c(x, 0.0)).norm() <= 1e-9))
                .collect();
            assert_eq!(matched.iter().filter(|&&m| !m).count(), 1, "ζ={zeta} n={n}");
            for r in &roots.roots {
                assert!(
                    nodes.iter().any(|&x| (r - c(x, 0.0)).norm() <= 1e-9),
                    "stray root {r} at ζ={zeta} n={n}"
                );
            }
        }
    }
}

#[test]
fn configuration_errors() {
    let mut cfg = SuiteConfig::new(Pole::float(c(0.0, 1.0)), 5, Mode::Float);
    cfg.checks = vec![CheckKind::RatioLimits];
    assert!(matches!(run_suite(&cfg), Err(Error::InvalidArgument(_))));

    let cfg = SuiteConfig::new(
        Pole {
            value: c(0.1, 0.0),
            exact: None,
        },
        5,
        Mode::Exact,
    );
    assert!(run_suite(&cfg).is_err());

    // pole inside the region: the asymptotic rows report a precondition
    let mut cfg = SuiteConfig::new(Pole::float(c(0.0, 1.0)), 5, Mode::Float);
    cfg.checks = vec![CheckKind::RatioLimits];
    cfg.z = Some(c(1.5, 0.0));
    let report = run_suite(&cfg).unwrap();
    assert!(report
        .checks
        .iter()
        .all(|r| r.status == Status::Inconclusive));
}

#[test]
fn reported_config_round_trips() {
    let mut cfg = SuiteConfig::new(Pole::exact(exact(7, 5)), 6, Mode::Exact);
    cfg.checks = vec![CheckKind::Routes, CheckKind::Legendre, CheckKind::Routes];
    let report = run_suite(&cfg).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(v["config"]["pole"], "7/5,0");
    assert_eq!(
        v["config"]["checks"],
        serde_json::json!(["legendre", "polar"])
    );
    assert_eq!(
        v["summary"]["total"].as_u64().unwrap() as usize,
        report.checks.len()
    );
}
