// SPDX-License-Identifier: MIT OR Apache-2.0

//! Annulus curves as straight chords in the universal cover.
//!
//! The universal cover of the annulus is a strip whose upper edge covers the
//! outer boundary and whose lower edge covers the inner one. Marked points
//! lift to integer positions on the two edges, with period `n`. Every curve
//! and every arc of the triangulation lifts to a chord between two boundary
//! points, and two chords in a disk cross exactly when their endpoints
//! alternate around the boundary.
//!
//! To realize this with exact arithmetic the boundary of the strip is laid
//! out on the parabola `y = x²`: upper-edge positions in decreasing order,
//! then lower-edge positions in increasing order. The parabola is strictly
//! convex, so straight chords cross at most once, never overlap, and cross
//! precisely when their endpoints alternate.

use alloc::vec;
use alloc::vec::Vec;

use crate::annulus::{AnnulusCurve, Edge, StripChord, StripPoint};
use crate::error::Result;
use crate::geom_oracle::{count_crossings, Point, Polyline};
use crate::Q;

/// Placement of strip positions on the parabola.
///
/// A position `p` on an edge sits at abscissa `scale·p + wobble[p mod len]`
/// (negated for the upper edge), shifted apart so that every upper-edge
/// point precedes every lower-edge point. Wobble values must lie in
/// `[0, scale)` so the order of positions is preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripLayout {
    /// Distance between consecutive positions.
    pub scale: Q,
    /// Periodic perturbation of upper-edge positions.
    pub top_wobble: Vec<Q>,
    /// Periodic perturbation of lower-edge positions.
    pub bottom_wobble: Vec<Q>,
    /// Extra separation between the two edges.
    pub gap: Q,
}

impl Default for StripLayout {
    fn default() -> Self {
        StripLayout {
            scale: Q::from_integer(1),
            top_wobble: vec![],
            bottom_wobble: vec![],
            gap: Q::from_integer(1),
        }
    }
}

impl StripLayout {
    fn valid(&self) -> bool {
        let zero = Q::from_integer(0);
        self.scale > zero
            && self.gap >= zero
            && self
                .top_wobble
                .iter()
                .chain(&self.bottom_wobble)
                .all(|w| *w >= zero && *w < self.scale)
    }

    fn wobble(table: &[Q], p: i64) -> Q {
        if table.is_empty() {
            Q::from_integer(0)
        } else {
            table[p.rem_euclid(table.len() as i64) as usize]
        }
    }

    /// Places strip points for a family whose positions lie in `[lo, hi]`.
    fn place(&self, p: StripPoint, lo: i64) -> Point {
        // Shift both edges so every abscissa is at least `gap` away from 0.
        let base = |q: i64| self.scale * Q::from_integer((q - lo) as i128) + self.gap;
        let u = match p.edge {
            Edge::Top => -(base(p.pos) + Self::wobble(&self.top_wobble, p.pos)),
            Edge::Bottom => base(p.pos) + Self::wobble(&self.bottom_wobble, p.pos),
        };
        Point::new(u, u * u)
    }
}

fn span(chords: &[StripChord]) -> (i64, i64) {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for c in chords {
        for p in [c.from, c.to] {
            lo = lo.min(p.pos);
            hi = hi.max(p.pos);
        }
    }
    (lo, hi)
}

/// Realizes a family of chords in one common layout.
pub fn realize_chords(chords: &[StripChord], layout: &StripLayout) -> Result<Vec<Polyline>> {
    if !layout.valid() {
        return Err(crate::Error::LayoutTooTight("strip layout out of range"));
    }
    let (lo, _) = span(chords);
    Ok(chords
        .iter()
        .map(|c| Polyline::new(vec![layout.place(c.from, lo), layout.place(c.to, lo)]))
        .collect())
}

/// Fundamental lift of an annulus curve as a polyline in the default layout.
pub fn realize_annulus(gamma: &AnnulusCurve, layout: &StripLayout) -> Result<Polyline> {
    Ok(realize_chords(&[gamma.lift()], layout)?.remove(0))
}

/// Translates `k` with `kn` in the range where a translate of `b` can
/// interleave with `a`.
fn translate_range(a: &StripChord, b: &StripChord, n: usize) -> core::ops::RangeInclusive<i64> {
    let (lo1, hi1) = span(core::slice::from_ref(a));
    let (lo2, hi2) = span(core::slice::from_ref(b));
    let n = n as i64;
    ((lo1 - hi2).div_euclid(n) - 1)..=((hi1 - lo2).div_euclid(n) + 1)
}

/// Crossings of `a` with all translates of `b`, skipping translate `skip`.
fn crossings_with_translates(
    a: &StripChord,
    b: &StripChord,
    n: usize,
    skip: Option<i64>,
    layout: &StripLayout,
) -> Result<usize> {
    let ks: Vec<i64> = translate_range(a, b, n).filter(|k| Some(*k) != skip).collect();
    let mut family = vec![*a];
    family.extend(ks.iter().map(|&k| b.translate(k * n as i64)));
    let lines = realize_chords(&family, layout)?;
    let mut total = 0;
    for other in &lines[1..] {
        total += count_crossings(&lines[0], other)?;
    }
    Ok(total)
}

/// Geometric intersection number of two annulus curves: crossings of one
/// lift of the first with every lift of the second.
///
/// When both curves are the same, the second is read as a homotopic copy:
/// the coinciding lift is skipped and the result is twice the
/// self-intersection number.
pub fn annulus_pair_count(
    g1: &AnnulusCurve,
    g2: &AnnulusCurve,
    layout: &StripLayout,
) -> Result<usize> {
    crate::annulus::same_rank(g1, g2)?;
    let (a, b) = (g1.lift(), g2.lift());
    let skip = if a == b { Some(0) } else { None };
    crossings_with_translates(&a, &b, g1.n, skip, layout)
}

/// Geometric self-intersection number: crossings of one lift with the other
/// lifts of the same curve, halved since each crossing is seen twice.
pub fn annulus_self_count(g: &AnnulusCurve, layout: &StripLayout) -> Result<usize> {
    let lift = g.lift();
    Ok(crossings_with_translates(&lift, &lift, g.n, Some(0), layout)? / 2)
}

/// Crossings of a curve with every lift of the arc `l_i`.
pub fn arc_crossings(g: &AnnulusCurve, i: usize, layout: &StripLayout) -> Result<usize> {
    let arc = crate::annulus::arc_lift(g.n, i)?;
    crossings_with_translates(&g.lift(), &arc, g.n, None, layout)
}

/// Indices of the arcs crossed by the fundamental lift, in order from its
/// start.
pub fn arc_sequence(g: &AnnulusCurve, layout: &StripLayout) -> Result<Vec<usize>> {
    let lift = g.lift();
    let n = g.n;
    let mut family = vec![lift];
    let mut labels = Vec::new();
    for i in 1..=n {
        let arc = crate::annulus::arc_lift(n, i)?;
        for k in translate_range(&lift, &arc, n) {
            family.push(arc.translate(k * n as i64));
            labels.push(i);
        }
    }
    let lines = realize_chords(&family, layout)?;
    let (a, b) = (lines[0].vertices[0], lines[0].vertices[1]);
    let mut hits: Vec<(Q, usize)> = Vec::new();
    for (line, &label) in lines[1..].iter().zip(&labels) {
        if count_crossings(&lines[0], line)? == 1 {
            let (c, d) = (line.vertices[0], line.vertices[1]);
            hits.push((param(a, b, c, d), label));
        }
    }
    hits.sort();
    Ok(hits.into_iter().map(|h| h.1).collect())
}

/// Parameter along `ab` of its intersection with the line `cd`.
fn param(a: Point, b: Point, c: Point, d: Point) -> Q {
    let cross = |ux: Q, uy: Q, vx: Q, vy: Q| ux * vy - uy * vx;
    let num = cross(c.x - a.x, c.y - a.y, d.x - c.x, d.y - c.y);
    let den = cross(b.x - a.x, b.y - a.y, d.x - c.x, d.y - c.y);
    num / den
}
