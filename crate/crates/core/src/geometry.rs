//! Pole geometry relative to the segment [-1, 1].

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::legendre::critical_points;
use crate::roots::RootSet;

/// Points closer than this to [-1, 1] have no well-defined outward branch.
pub const SEGMENT_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PoleGeometry {
    pub zeta: Complex64,
    /// `Δ_ζ = sup_{x∈[-1,1]} |ζ − x|`
    pub delta_max: f64,
    /// `δ_ζ = inf_{x∈[-1,1]} |ζ − x|`
    pub delta_min: f64,
    /// `ρ(ζ) = |φ(ζ)|`, defined off the segment.
    pub rho_acc: Option<f64>,
}

impl PoleGeometry {
    /// Radius of the disk that holds every zero of every `P_n`.
    pub fn disk_radius(&self) -> f64 {
        self.delta_max + 1.0
    }
}

/// Distance from `z` to the segment [-1, 1].
pub fn segment_distance(z: Complex64) -> f64 {
    if z.re.abs() <= 1.0 {
        z.im.abs()
    } else {
        (z - 1.0).norm().min((z + 1.0).norm())
    }
}

pub fn pole_geometry(zeta: Complex64) -> PoleGeometry {
    // |ζ − x|² is convex in x, so the sup sits at an endpoint.
    let delta_max = (zeta - 1.0).norm().max((zeta + 1.0).norm());
    let delta_min = segment_distance(zeta);
    let rho_acc = joukowski_phi(zeta).ok().map(|w| w.norm());
    PoleGeometry {
        zeta,
        delta_max,
        delta_min,
        rho_acc,
    }
}

/// `φ(z) = z + √(z² − 1)` on the branch with `|φ(z)| > 1`.
pub fn joukowski_phi(z: Complex64) -> Result<Complex64> {
    if segment_distance(z) <= SEGMENT_EPS {
        return Err(Error::BranchUndefined { re: z.re, im: z.im });
    }
    let s = (z * z - 1.0).sqrt();
    let (a, b) = (z + s, z - s);
    Ok(if a.norm() >= b.norm() { a } else { b })
}

/// `√(z² − 1)` consistent with [`joukowski_phi`]: `φ(z) − z`.
pub fn joukowski_sqrt(z: Complex64) -> Result<Complex64> {
    Ok(joukowski_phi(z)? - z)
}

/// Point of the confocal ellipse `|φ(z)| = ρ` at parameter `θ`.
pub fn ellipse_point(rho: f64, theta: f64) -> Complex64 {
    Complex64::new(
        (rho * rho + 1.0) / (2.0 * rho) * theta.cos(),
        (rho * rho - 1.0) / (2.0 * rho) * theta.sin(),
    )
}

/// Point of the accumulation ellipse `|φ(z)| = |φ(ζ)|`.
pub fn accumulation_ellipse_point(zeta: Complex64, theta: f64) -> Result<Complex64> {
    let rho = joukowski_phi(zeta)
        .map_err(|_| Error::Precondition("accumulation ellipse needs ζ off [-1, 1]".into()))?
        .norm();
    Ok(ellipse_point(rho, theta))
}

/// Level curve `∏_k |z − x_{n,k}| = ρ_n(ζ)` through the endpoints and the
/// critical points of `L_n`.
#[derive(Clone, Debug, Serialize)]
pub struct Lemniscate {
    pub n: usize,
    pub nodes: Vec<f64>,
    pub rho_n: f64,
    /// `ln ρ_n`, `-inf` when the pole is a node.
    pub log_rho_n: f64,
}

fn log_node_product(nodes: &[f64], z: Complex64) -> f64 {
    nodes.iter().map(|x| (z - x).norm().ln()).sum()
}

pub fn lemniscate(n: usize, zeta: Complex64) -> Result<Lemniscate> {
    if n == 0 {
        return Err(Error::InvalidArgument("lemniscate needs n >= 1".into()));
    }
    let mut nodes = vec![-1.0];
    if n >= 2 {
        nodes.extend(critical_points(n)?);
    }
    nodes.push(1.0);
    let log_rho_n = log_node_product(&nodes, zeta);
    Ok(Lemniscate {
        n,
        nodes,
        rho_n: log_rho_n.exp(),
        log_rho_n,
    })
}

impl Lemniscate {
    /// `|∏|z − x_k| − ρ_n| / ρ_n`, or the bare product when `ρ_n = 0`.
    pub fn residual(&self, z: Complex64) -> f64 {
        let log_p = log_node_product(&self.nodes, z);
        if self.log_rho_n == f64::NEG_INFINITY {
            log_p.exp()
        } else {
            (log_p - self.log_rho_n).exp_m1().abs()
        }
    }
}

pub fn lemniscate_residual(l: &Lemniscate, z: Complex64) -> f64 {
    l.residual(z)
}

#[derive(Clone, Debug, Serialize)]
pub struct EllipseCheck {
    pub alpha: f64,
    /// Smallest `|z + 1| + |z − 1|` over the roots.
    pub min_focal_sum: f64,
    pub violations: Vec<usize>,
    pub all_simple: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub disk_radius: f64,
    pub max_modulus: f64,
    pub disk_violations: Vec<usize>,
    /// Present only when `δ_ζ > 1`.
    pub ellipse: Option<EllipseCheck>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.disk_violations.is_empty()
            && self
                .ellipse
                .as_ref()
                .is_none_or(|e| e.violations.is_empty() && e.all_simple)
    }
}

/// Disk bound `|z| ≤ Δ_ζ + 1`, and when `δ_ζ > 1` the exclusion ellipse
/// `|z + 1| + |z − 1| > 2α` with `α = (1 + δ_ζ)/2` plus simplicity.
pub fn ellipse_bound_checks(zeta: Complex64, roots: &RootSet, tol: f64) -> BoundReport {
    let g = pole_geometry(zeta);
    let disk_radius = g.disk_radius();
    let max_modulus = roots.roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let disk_violations = roots
        .roots
        .iter()
        .enumerate()
        .filter(|(_, r)| r.norm() > disk_radius + tol)
        .map(|(i, _)| i)
        .collect();
    let ellipse = (g.delta_min > 1.0).then(|| {
        let alpha = 0.5 * (1.0 + g.delta_min);
        let focal: Vec<f64> = roots
            .roots
            .iter()
            .map(|r| (r + 1.0).norm() + (r - 1.0).norm())
            .collect();
        EllipseCheck {
            alpha,
            min_focal_sum: focal.iter().copied().fold(f64::INFINITY, f64::min),
            violations: focal
                .iter()
                .enumerate()
                .filter(|(_, s)| **s <= 2.0 * alpha)
                .map(|(i, _)| i)
                .collect(),
            all_simple: roots.multiplicities.iter().all(|&m| m == 1),
        }
    });
    BoundReport {
        disk_radius,
        max_modulus,
        disk_violations,
        ellipse,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pole_geometry_examples() {
        let g = pole_geometry(c(0.0, 2.0));
        assert!((g.delta_max - 5f64.sqrt()).abs() < 1e-15);
        assert!((g.delta_min - 2.0).abs() < 1e-15);
        let g = pole_geometry(c(0.0, 0.0));
        assert_eq!((g.delta_max, g.delta_min), (1.0, 0.0));
        assert!(g.rho_acc.is_none());
        let g = pole_geometry(c(3.0, 0.0));
        assert_eq!((g.delta_max, g.delta_min), (4.0, 2.0));
    }

    #[test]
    fn delta_matches_brute_force() {
        for zeta in [
            c(0.3, 0.7),
            c(-2.0, 0.5),
            c(1.5, -3.0),
            c(0.0, 0.0),
            c(-0.9, 0.0),
        ] {
            let g = pole_geometry(zeta);
            let samples = (0..=20000).map(|i| -1.0 + 2.0 * i as f64 / 20000.0);
            let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
            for x in samples {
                let d = (zeta - x).norm();
                lo = lo.min(d);
                hi = hi.max(d);
            }
            assert!((g.delta_max - hi).abs() < 1e-12);
            assert!(g.delta_min <= lo && lo - g.delta_min < 1e-4);
            assert!(g.delta_min <= g.delta_max);
        }
    }

    #[test]
    fn joukowski_examples() {
        let w = joukowski_phi(c(2.0, 0.0)).unwrap();
        assert!((w - c(2.0 + 3f64.sqrt(), 0.0)).norm() < 1e-15);
        let w = joukowski_phi(c(-2.0, 0.0)).unwrap();
        assert!((w - c(-2.0 - 3f64.sqrt(), 0.0)).norm() < 1e-15);
        let w = joukowski_phi(c(0.0, 1.0)).unwrap();
        assert!((w - c(0.0, 1.0 + 2f64.sqrt())).norm() < 1e-15);
        assert!(matches!(
            joukowski_phi(c(0.5, 0.0)),
            Err(Error::BranchUndefined { .. })
        ));
        assert!(joukowski_phi(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn joukowski_branch_product_is_one() {
        for i in -8..=8 {
            for j in -8..=8 {
                let z = c(i as f64 * 0.37, j as f64 * 0.29);
                if segment_distance(z) <= 1e-3 {
                    continue;
                }
                let w = joukowski_phi(z).unwrap();
                assert!(w.norm() > 1.0);
                assert!(
                    (w.norm() * (2.0 * z - w).norm() - 1.0).abs() < 1e-12,
                    "z={z}"
                );
            }
        }
    }

    #[test]
    fn accumulation_ellipse_examples() {
        let z = accumulation_ellipse_point(c(2.0, 0.0), 0.0).unwrap();
        assert!((z - c(2.0, 0.0)).norm() < 1e-14);
        let z = accumulation_ellipse_point(c(2.0, 0.0), PI / 2.0).unwrap();
        assert!((z - c(0.0, 3f64.sqrt())).norm() < 1e-14);
        for zeta in [c(0.0, 3.0), c(1.0, 1.0), c(2.5, 0.0)] {
            let rho = pole_geometry(zeta).rho_acc.unwrap();
            for k in 0..64 {
                let th = 2.0 * PI * k as f64 / 64.0;
                let a = accumulation_ellipse_point(zeta, th).unwrap();
                let b = accumulation_ellipse_point(zeta, th + PI).unwrap();
                assert!((a + b).norm() < 1e-14);
                let m = joukowski_phi(a).unwrap().norm();
                assert!((m - rho).abs() < 1e-12 * rho, "θ={th}");
            }
        }
        assert!(accumulation_ellipse_point(c(0.2, 0.0), 0.0).is_err());
    }

    #[test]
    fn lemniscate_examples() {
        let l = lemniscate(2, c(2.0, 0.0)).unwrap();
        assert_eq!(l.nodes, vec![-1.0, 0.0, 1.0]);
        assert!((l.rho_n - 6.0).abs() < 1e-14);
        assert!(l.residual(c(-1.0, 2f64.sqrt())) < 1e-14);

        let l = lemniscate(2, c(1.0, 0.0)).unwrap();
        assert_eq!(l.rho_n, 0.0);
        assert_eq!(l.residual(c(0.0, 0.0)), 0.0);

        let l = lemniscate(1, c(0.0, 2.0)).unwrap();
        assert_eq!(l.nodes, vec![-1.0, 1.0]);
        assert!((l.rho_n - 5.0).abs() < 1e-14);
        assert!(lemniscate_residual(&l, c(0.0, -2.0)) < 1e-14);
    }
}
