//! Simultaneous root finding for `P_n`.
//!
//! The Aberth–Ehrlich iteration only needs `(p(z), p'(z))`, so it runs on
//! the coefficient-free [`PolarEvaluator`] and stays accurate at degrees
//! where the explicit coefficients of `P_n` are useless.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::pole_geometry;
use crate::polar::PolarEvaluator;

#[derive(Clone, Debug, Serialize)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub multiplicities: Vec<u8>,
    /// `|p(r)| / |p'(r)|` at each root (just `|p(r)|` where `p'(r) = 0`).
    pub residuals: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// Largest relative correction in the final sweep.
    pub max_step: f64,
}

impl RootSet {
    pub fn total_multiplicity(&self) -> usize {
        self.multiplicities.iter().map(|&m| m as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Roots repeated by multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(r, &m)| std::iter::repeat_n(*r, m as usize))
            .collect()
    }

    /// Roots sorted by real part, then imaginary part, for stable output.
    pub fn sorted(mut self) -> Self {
        let mut idx: Vec<usize> = (0..self.roots.len()).collect();
        idx.sort_by(|&a, &b| {
            let (ra, rb) = (self.roots[a], self.roots[b]);
            ra.re.total_cmp(&rb.re).then(ra.im.total_cmp(&rb.im))
        });
        self.roots = idx.iter().map(|&i| self.roots[i]).collect();
        self.multiplicities = idx.iter().map(|&i| self.multiplicities[i]).collect();
        self.residuals = idx.iter().map(|&i| self.residuals[i]).collect();
        self
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AberthConfig {
    pub max_iterations: usize,
    /// Converged when every correction is below `tol (1 + |root|)`.
    pub tol: f64,
    /// Radius of the starting circle.
    pub radius: f64,
    /// Angular offset of the starting points, in radians.
    pub twist: f64,
    /// A root whose correction stops shrinking for this many sweeps while
    /// below `stall_floor (1 + |root|)` is treated as settled at the
    /// evaluation noise floor (typical near a double zero).
    pub stall_sweeps: usize,
    pub stall_floor: f64,
}

impl Default for AberthConfig {
    fn default() -> Self {
        AberthConfig {
            max_iterations: 500,
            tol: 1e-13,
            radius: 1.0,
            // fractional part of the golden ratio, times 2π
            twist: 2.0 * PI * 0.618_033_988_749_894_9,
            stall_sweeps: 8,
            stall_floor: 1e-6,
        }
    }
}

/// Aberth–Ehrlich iteration with Gauss–Seidel updates, followed by a
/// guarded Newton polish of every root.
pub fn aberth_find<F>(eval: F, degree: usize, config: &AberthConfig) -> RootSet
where
    F: Fn(Complex64) -> (Complex64, Complex64),
{
    let n = degree;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            Complex64::from_polar(config.radius, 2.0 * PI * k as f64 / n as f64 + config.twist)
        })
        .collect();
    let mut done = vec![false; n];
    let mut last_step = vec![f64::INFINITY; n];
    let mut stall = vec![0usize; n];
    let mut iterations = 0;
    let mut max_step = f64::INFINITY;

    while iterations < config.max_iterations && done.iter().any(|d| !d) {
        iterations += 1;
        max_step = 0.0f64;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = eval(z[k]);
            let step = if p == Complex64::new(0.0, 0.0) {
                Complex64::new(0.0, 0.0)
            } else {
                let repulsion: Complex64 = (0..n)
                    .filter(|&j| j != k)
                    .map(|j| 1.0 / (z[k] - z[j]))
                    .sum();
                let denom = dp / p - repulsion;
                if denom.norm() == 0.0 || !denom.is_finite() {
                    // nudge off a degenerate configuration
                    Complex64::new(1e-8 * (1.0 + z[k].norm()), 0.0)
                } else {
                    1.0 / denom
                }
            };
            z[k] -= step;
            let rel = step.norm() / (1.0 + z[k].norm());
            max_step = max_step.max(rel);
            if rel < config.tol {
                done[k] = true;
            } else if rel < config.stall_floor && rel >= 0.5 * last_step[k] {
                stall[k] += 1;
                if stall[k] >= config.stall_sweeps {
                    done[k] = true;
                }
            } else {
                stall[k] = 0;
            }
            last_step[k] = rel;
        }
    }
    let converged = done.iter().all(|&d| d);

    for r in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(*r);
            if dp.norm() == 0.0 || p.norm() == 0.0 {
                break;
            }
            let cand = *r - p / dp;
            if eval(cand).0.norm() < p.norm() {
                *r = cand;
            } else {
                break;
            }
        }
    }

    let residuals = z.iter().map(|&r| scaled_residual(&eval, r)).collect();
    RootSet {
        multiplicities: vec![1; n],
        roots: z,
        residuals,
        iterations,
        converged,
        max_step,
    }
}

fn scaled_residual<F: Fn(Complex64) -> (Complex64, Complex64)>(eval: &F, r: Complex64) -> f64 {
    let (p, dp) = eval(r);
    if dp.norm() > 0.0 {
        p.norm() / dp.norm()
    } else {
        p.norm()
    }
}

/// Merges pairs of roots closer than `radius` into one double root at their
/// mean. A group of three or more is an error: zeros of `P_n` have
/// multiplicity at most two.
pub fn cluster_multiplicities(set: RootSet, radius: f64) -> Result<RootSet> {
    let roots = set.expanded();
    let expanded_residuals: Vec<f64> = set
        .residuals
        .iter()
        .zip(&set.multiplicities)
        .flat_map(|(r, &m)| std::iter::repeat_n(*r, m as usize))
        .collect();
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() < radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }
    let mut out_roots = Vec::with_capacity(groups.len());
    let mut mults = Vec::with_capacity(groups.len());
    let mut residuals = Vec::with_capacity(groups.len());
    for g in &groups {
        let mean = g.iter().map(|&i| roots[i]).sum::<Complex64>() / g.len() as f64;
        if g.len() > 2 {
            return Err(Error::ClusterTooLarge {
                count: g.len(),
                radius,
                re: mean.re,
                im: mean.im,
            });
        }
        out_roots.push(mean);
        mults.push(g.len() as u8);
        residuals.push(g.iter().map(|&i| expanded_residuals[i]).fold(0.0, f64::max));
    }
    Ok(RootSet {
        roots: out_roots,
        multiplicities: mults,
        residuals,
        iterations: set.iterations,
        converged: set.converged,
        max_step: set.max_step,
    })
}

/// Default cluster radius `1e-6 (1 + Δ_ζ)`.
pub fn default_cluster_radius(zeta: Complex64) -> f64 {
    1e-6 * (1.0 + pole_geometry(zeta).delta_max)
}

/// All zeros of `P_n` with multiplicities, starting from the circle
/// `|z| = Δ_ζ + 1` that encloses them.
pub fn polar_roots(n: usize, zeta: Complex64) -> Result<RootSet> {
    polar_roots_with_radius(n, zeta, default_cluster_radius(zeta))
}

/// [`polar_roots`] with an explicit cluster radius.
pub fn polar_roots_with_radius(n: usize, zeta: Complex64, cluster_radius: f64) -> Result<RootSet> {
    if !(cluster_radius.is_finite() && cluster_radius >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "cluster radius must be finite and >= 0, got {cluster_radius}"
        )));
    }
    let eval = PolarEvaluator::new(n, zeta)?;
    let config = AberthConfig {
        radius: pole_geometry(zeta).disk_radius(),
        ..AberthConfig::default()
    };
    let raw = aberth_find(|z| eval.eval_pair(z), n, &config);
    Ok(cluster_multiplicities(raw, cluster_radius)?.sorted())
}

/// Like [`polar_roots`] but fails when the iteration did not converge.
pub fn polar_roots_converged(n: usize, zeta: Complex64) -> Result<RootSet> {
    let set = polar_roots(n, zeta)?;
    if !set.converged {
        return Err(Error::RootNonConvergence {
            iterations: set.iterations,
            max_step: set.max_step,
        });
    }
    Ok(set)
}
