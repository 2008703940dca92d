// SPDX-License-Identifier: MIT OR Apache-2.0

//! Deterministic SVG figures.
//!
//! Plane figures draw the exact polylines used for counting. Annulus
//! figures map each lifted curve from the universal cover: the cover is
//! identified with the upper half-plane, where a lift is the half-circle
//! between its two ends, and then wrapped onto the annulus by log-polar
//! coordinates. Half-circles cross exactly when their ends alternate, so
//! the crossing markers match the counted crossings.

use std::f64::consts::PI;
use std::fmt::Write;

use atilde_core::annulus::{arc_lift, build_gamma, Edge, StripChord, StripPoint};
use atilde_core::geom_oracle::{
    crossing_points, realize_plane_family, self_crossing_points, PlaneLayout, Point,
};
use atilde_core::word_builder::build_f;
use atilde_core::{Root, Q};

use crate::CliError;

/// Which picture to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Surface {
    /// Half-plane with rays.
    Plane,
    /// Annulus with its triangulation.
    Annulus,
}

const CURVE_COLORS: [&str; 2] = ["#c0392b", "#2471a3"];

fn q2f(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

struct Doc {
    body: String,
    width: f64,
    height: f64,
}

impl Doc {
    fn new(width: f64, height: f64) -> Self {
        Doc { body: String::new(), width, height }
    }

    fn line(&mut self, class: &str, a: (f64, f64), b: (f64, f64), extra: &str) {
        let _ = writeln!(
            self.body,
            r#"  <line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {extra}/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    fn dot(&mut self, class: &str, p: (f64, f64), r: f64, extra: &str) {
        let _ = writeln!(
            self.body,
            r#"  <circle class="{class}" cx="{:.2}" cy="{:.2}" r="{r}" {extra}/>"#,
            p.0, p.1
        );
    }

    fn label(&mut self, p: (f64, f64), text: &str) {
        let _ = writeln!(
            self.body,
            r#"  <text x="{:.2}" y="{:.2}" font-size="12" font-family="sans-serif">{text}</text>"#,
            p.0, p.1
        );
    }

    fn path(&mut self, class: &str, pts: &[(f64, f64)], extra: &str) {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let _ = write!(d, "{}{:.2} {:.2}", if i == 0 { "M" } else { " L" }, p.0, p.1);
        }
        let _ = writeln!(self.body, r#"  <path class="{class}" d="{d}" fill="none" {extra}/>"#);
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" \
             viewBox=\"0 0 {w:.0} {h:.0}\">\n  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body,
            w = self.width,
            h = self.height
        )
    }
}

/// Draws one or two canonical curves.
pub fn render(a: &Root, b: Option<&Root>, surface: Surface) -> Result<String, CliError> {
    if let Some(b) = b {
        if a.n() != b.n() {
            return Err(atilde_core::Error::RankMismatch(a.n(), b.n()).into());
        }
    }
    let roots: Vec<&Root> = std::iter::once(a).chain(b).collect();
    match surface {
        Surface::Plane => plane(&roots),
        Surface::Annulus => annulus(&roots),
    }
}

fn plane(roots: &[&Root]) -> Result<String, CliError> {
    let n = roots[0].n();
    let layout = PlaneLayout::standard(n);
    let curves = roots.iter().map(|r| build_f(r)).collect::<Result<Vec<_>, _>>()?;
    let lines = realize_plane_family(&curves, &layout)?;
    let marks: Vec<Point> = if lines.len() == 2 {
        crossing_points(&lines[0], &lines[1])?
    } else {
        self_crossing_points(&lines[0])?
    };

    let xmin = q2f(layout.ray_x[0] - layout.outer_width);
    let xmax = q2f(layout.ray_x[n - 1] + layout.outer_width);
    let top = lines
        .iter()
        .flat_map(|l| l.vertices.iter().map(|v| q2f(v.y)))
        .fold(q2f(layout.marked_y), f64::max)
        + 2.0 * q2f(layout.height_step);
    let (scale, margin) = (4.0, 24.0);
    let tr = |x: f64, y: f64| ((x - xmin) * scale + margin, (top - y) * scale + margin);
    let trp = |p: &Point| tr(q2f(p.x), q2f(p.y));
    let mut doc = Doc::new((xmax - xmin) * scale + 2.0 * margin, top * scale + 2.0 * margin);

    let y0 = q2f(layout.marked_y);
    for (i, x) in layout.ray_x.iter().enumerate() {
        let x = q2f(*x);
        doc.line("ray", tr(x, y0), tr(x, top), r##"stroke="#888" stroke-dasharray="4 3""##);
        let p = tr(x, y0);
        doc.dot("marked", p, 3.0, r##"fill="#000""##);
        doc.label((p.0 + 5.0, p.1 + 14.0), &format!("p{}", i + 1));
    }
    let bp = trp(&layout.base_point());
    doc.dot("base", bp, 3.0, r##"fill="#000""##);
    doc.label((bp.0 + 5.0, bp.1 - 5.0), "B");
    for (i, l) in lines.iter().enumerate() {
        let pts: Vec<_> = l.vertices.iter().map(trp).collect();
        let style = format!(r#"stroke="{}" stroke-width="1.5""#, CURVE_COLORS[i % 2]);
        doc.path("curve", &pts, &style);
    }
    for m in &marks {
        doc.dot("crossing", trp(m), 4.0, r##"fill="none" stroke="#117a65" stroke-width="1.5""##);
    }
    Ok(doc.finish())
}

/// Scale of the exponential map from the strip to the half-plane.
const KAPPA: f64 = 0.3;

/// Position of a strip point on the real axis of the half-plane.
fn ideal(p: StripPoint) -> f64 {
    let r = (KAPPA * p.pos as f64).exp();
    match p.edge {
        Edge::Top => -r,
        Edge::Bottom => r,
    }
}

struct Annulus {
    n: usize,
    center: (f64, f64),
    outer: f64,
    inner: f64,
}

impl Annulus {
    /// Maps a point of the upper half-plane to the picture.
    fn map(&self, u: f64, v: f64) -> (f64, f64) {
        let x = (u.hypot(v)).ln() / KAPPA;
        let y = v.max(0.0).atan2(u) / PI;
        let theta = 2.0 * PI * x / self.n as f64;
        let rho = self.inner + (self.outer - self.inner) * y;
        (self.center.0 + rho * theta.sin(), self.center.1 - rho * theta.cos())
    }

    fn boundary(&self, p: StripPoint) -> (f64, f64) {
        self.map(ideal(p), 0.0)
    }

    /// Samples the image of the half-circle over `[w1, w2]`.
    fn chord(&self, c: &StripChord) -> Vec<(f64, f64)> {
        let (w1, w2) = (ideal(c.from), ideal(c.to));
        let (mid, rad) = ((w1 + w2) / 2.0, (w2 - w1).abs() / 2.0);
        // phi = 0 is the right end of the half-circle.
        let (f0, f1) = if w1 > w2 { (0.0, PI) } else { (PI, 0.0) };
        let at = |phi: f64| {
            if phi == 0.0 || phi == PI {
                self.boundary(if phi == f0 { c.from } else { c.to })
            } else {
                self.map(mid + rad * phi.cos(), rad * phi.sin())
            }
        };
        let mut pts = vec![at(f0)];
        self.refine(&at, f0, f1, 0, &mut pts);
        pts
    }

    fn refine(
        &self,
        at: &dyn Fn(f64) -> (f64, f64),
        a: f64,
        b: f64,
        depth: u32,
        out: &mut Vec<(f64, f64)>,
    ) {
        let (pa, pb) = (at(a), at(b));
        let far = (pa.0 - pb.0).hypot(pa.1 - pb.1) > 3.0;
        if depth < 6 || (far && depth < 22) {
            let m = (a + b) / 2.0;
            self.refine(at, a, m, depth + 1, out);
            self.refine(at, m, b, depth + 1, out);
        } else {
            out.push(pb);
        }
    }
}

/// Crossing point of the half-circles over two chords whose ends alternate.
fn meet(c1: &StripChord, c2: &StripChord) -> Option<(f64, f64)> {
    let e1 = [ideal(c1.from), ideal(c1.to)];
    let e2 = [ideal(c2.from), ideal(c2.to)];
    if e1.iter().any(|a| e2.contains(a)) {
        return None;
    }
    let (lo, hi) = (e1[0].min(e1[1]), e1[0].max(e1[1]));
    let inside = |w: f64| lo < w && w < hi;
    if inside(e2[0]) == inside(e2[1]) {
        return None;
    }
    let (m1, r1) = ((e1[0] + e1[1]) / 2.0, (e1[1] - e1[0]).abs() / 2.0);
    let (m2, r2) = ((e2[0] + e2[1]) / 2.0, (e2[1] - e2[0]).abs() / 2.0);
    let u = (r1 * r1 - r2 * r2 - m1 * m1 + m2 * m2) / (2.0 * (m2 - m1));
    let v = (r1 * r1 - (u - m1) * (u - m1)).max(0.0).sqrt();
    Some((u, v))
}

fn translates(a: &StripChord, b: &StripChord, n: usize) -> std::ops::RangeInclusive<i64> {
    let ps = [a.from.pos, a.to.pos, b.from.pos, b.to.pos];
    let span = ps.iter().max().unwrap() - ps.iter().min().unwrap();
    let k = span / n as i64 + 2;
    -k..=k
}

fn annulus(roots: &[&Root]) -> Result<String, CliError> {
    let n = roots[0].n();
    let gammas = roots.iter().map(|r| build_gamma(r)).collect::<Result<Vec<_>, _>>()?;
    let size = 480.0;
    let an = Annulus { n, center: (size / 2.0, size / 2.0), outer: 200.0, inner: 60.0 };
    let mut doc = Doc::new(size, size);
    for r in [an.outer, an.inner] {
        let _ = writeln!(
            doc.body,
            r##"  <circle class="boundary" cx="{:.2}" cy="{:.2}" r="{r}" fill="none" stroke="#000"/>"##,
            an.center.0, an.center.1
        );
    }
    for i in 1..=n {
        let arc = arc_lift(n, i)?;
        doc.path("arc", &an.chord(&arc), r##"stroke="#999" stroke-dasharray="3 3""##);
    }
    for i in 1..n {
        let p = an.boundary(StripPoint { edge: Edge::Top, pos: i as i64 });
        doc.dot("marked", p, 3.5, r##"fill="#000""##);
        let (dx, dy) = (p.0 - an.center.0, p.1 - an.center.1);
        let s = 1.0 + 14.0 / dx.hypot(dy);
        doc.label((an.center.0 + dx * s - 6.0, an.center.1 + dy * s + 4.0), &format!("M{i}"));
    }
    let inner = an.boundary(StripPoint { edge: Edge::Bottom, pos: 0 });
    doc.dot("marked", inner, 3.5, r##"fill="#000""##);
    doc.label((inner.0 + 6.0, inner.1 + 14.0), &format!("M{n}"));

    let lifts: Vec<StripChord> = gammas.iter().map(|g| g.lift()).collect();
    for (i, l) in lifts.iter().enumerate() {
        let style = format!(r#"stroke="{}" stroke-width="1.5""#, CURVE_COLORS[i % 2]);
        doc.path("curve", &an.chord(l), &style);
    }
    let mut marks = Vec::new();
    let (a, b) = (lifts[0], *lifts.last().unwrap());
    let single = lifts.len() == 1;
    for k in translates(&a, &b, n) {
        if single && k <= 0 {
            continue;
        }
        if let Some((u, v)) = meet(&a, &b.translate(k * n as i64)) {
            marks.push(an.map(u, v));
        }
    }
    for m in marks {
        doc.dot("crossing", m, 4.0, r##"fill="none" stroke="#117a65" stroke-width="1.5""##);
    }
    Ok(doc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_root;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!(r#"class="{class}""#)).count()
    }

    #[test]
    fn plane_figure_structure() {
        let svg = render(&parse_root("1,2,2,1").unwrap(), None, Surface::Plane).unwrap();
        assert_eq!(count(&svg, "ray"), 4);
        assert_eq!(count(&svg, "marked"), 4);
        assert_eq!(count(&svg, "curve"), 1);
        assert_eq!(count(&svg, "crossing"), 1);
        assert!(svg.starts_with("<svg"));
    }

    #[test]
    fn annulus_pair_figure() {
        let a = parse_root("1,2,1").unwrap();
        let b = parse_root("3,4,3").unwrap();
        let svg = render(&a, Some(&b), Surface::Annulus).unwrap();
        assert_eq!(count(&svg, "curve"), 2);
        assert_eq!(count(&svg, "crossing"), 2);
        assert_eq!(count(&svg, "arc"), 3);
    }

    #[test]
    fn plane_pair_markers_match_count() {
        let a = parse_root("1,2,1").unwrap();
        let b = parse_root("2,3,2").unwrap();
        let svg = render(&a, Some(&b), Surface::Plane).unwrap();
        assert_eq!(count(&svg, "crossing"), 2);
    }

    #[test]
    fn output_is_deterministic() {
        let a = parse_root("2,2,1").unwrap();
        for s in [Surface::Plane, Surface::Annulus] {
            assert_eq!(render(&a, None, s).unwrap(), render(&a, None, s).unwrap());
        }
    }
}
