//! Hand-written SVG scatter of the zeros of `P_n`.

use std::f64::consts::PI;
use std::fmt::Write;

use num_complex::Complex64;

use polar_legendre::geometry::{accumulation_ellipse_point, pole_geometry};
use polar_legendre::roots::RootSet;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const ELLIPSE_SAMPLES: usize = 256;

struct View {
    scale: f64,
}

impl View {
    fn x(&self, re: f64) -> f64 {
        WIDTH / 2.0 + self.scale * re
    }
    fn y(&self, im: f64) -> f64 {
        HEIGHT / 2.0 - self.scale * im
    }
}

/// Segment [-1, 1], the disk `|z| = Δ_ζ + 1`, the accumulation ellipse when
/// `dist(ζ, [-1, 1]) > 1`, the pole, and one marker per distinct root.
pub fn render(zeta: Complex64, roots: &RootSet) -> String {
    let g = pole_geometry(zeta);
    let radius = g.disk_radius();
    let extent = roots
        .roots
        .iter()
        .map(|r| r.norm())
        .fold(radius.max(zeta.norm()), f64::max)
        * 1.1;
    let v = View {
        scale: (HEIGHT / 2.0) / extent,
    };
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600" viewBox="0 0 800 600">"#
    );
    let _ = writeln!(
        s,
        r##"<rect x="0" y="0" width="800" height="600" fill="#ffffff"/>"##
    );
    let _ = writeln!(
        s,
        r##"<line class="axis" x1="0" y1="{:.3}" x2="800" y2="{:.3}" stroke="#bbbbbb" stroke-width="1"/>"##,
        v.y(0.0),
        v.y(0.0)
    );
    let _ = writeln!(
        s,
        r##"<line class="axis" x1="{:.3}" y1="0" x2="{:.3}" y2="600" stroke="#bbbbbb" stroke-width="1"/>"##,
        v.x(0.0),
        v.x(0.0)
    );
    let _ = writeln!(
        s,
        r##"<line class="segment" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#000000" stroke-width="3"/>"##,
        v.x(-1.0),
        v.y(0.0),
        v.x(1.0),
        v.y(0.0)
    );
    let _ = writeln!(
        s,
        r##"<circle class="disk" cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="#3366cc" stroke-dasharray="6 4"/>"##,
        v.x(0.0),
        v.y(0.0),
        v.scale * radius
    );
    if g.delta_min > 1.0 {
        let mut d = String::new();
        for k in 0..ELLIPSE_SAMPLES {
            let theta = 2.0 * PI * k as f64 / ELLIPSE_SAMPLES as f64;
            if let Ok(p) = accumulation_ellipse_point(zeta, theta) {
                let cmd = if k == 0 { 'M' } else { 'L' };
                let _ = write!(d, "{cmd}{:.3},{:.3} ", v.x(p.re), v.y(p.im));
            }
        }
        d.push('Z');
        let _ = writeln!(
            s,
            r##"<path class="ellipse" d="{d}" fill="none" stroke="#cc6633" stroke-width="1.5"/>"##
        );
    }
    let (px, py) = (v.x(zeta.re), v.y(zeta.im));
    let _ = writeln!(
        s,
        r##"<path class="pole" d="M{:.3},{:.3} L{:.3},{:.3} M{:.3},{:.3} L{:.3},{:.3}" stroke="#009900" stroke-width="2"/>"##,
        px - 6.0,
        py - 6.0,
        px + 6.0,
        py + 6.0,
        px - 6.0,
        py + 6.0,
        px + 6.0,
        py - 6.0
    );
    for (r, &m) in roots.roots.iter().zip(&roots.multiplicities) {
        let (class, size, fill) = if m >= 2 {
            ("root double", 6.0, "#cc0000")
        } else {
            ("root", 4.0, "#000000")
        };
        let _ = writeln!(
            s,
            r#"<circle class="{class}" cx="{:.3}" cy="{:.3}" r="{size}" fill="{fill}"/>"#,
            v.x(r.re),
            v.y(r.im)
        );
    }
    s.push_str("</svg>\n");
    s
}
