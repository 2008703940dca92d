// SPDX-License-Identifier: MIT OR Apache-2.0

//! Plane curves drawn as exact polylines.
//!
//! The marked points `p_1..p_n` sit on the horizontal line `y = Y` with
//! vertical rays going up from them, and `B` lies on the real axis. Every
//! piece of a curve (see [`super::ordering`]) is drawn in three parts:
//!
//! * above `Y`, a straight segment from the passage on a ray down to a slot
//!   on the line `y = Y` in the pocket between two rays;
//! * below `Y`, a V-shaped arch joining two slots, whose depth grows with
//!   its width so that nested arches stay nested;
//! * for the last piece, a drop from the slot to a floor line and then a
//!   segment to `B`.
//!
//! Slots appear along `y = Y` in the same order as the corresponding points
//! on the boundary of the cut-open disk, with `B` beyond the left end, so
//! two pieces cross exactly when their ends interleave and then exactly
//! once. Pieces starting at a marked point use separate sub-slots just
//! below it so that they leave the point in distinct directions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_traits::{Signed, Zero};

use super::ordering::{chords, stack, BoundaryPoint, Chord, Side};
use super::{count_crossings, count_self, Point, Polyline};
use crate::error::{Error, Result};
use crate::word_builder::PlaneCurve;
use crate::Q;

/// Coordinates of the plane picture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneLayout {
    /// Abscissae of the rays `r_1..r_n`, strictly increasing.
    pub ray_x: Vec<Q>,
    /// Common height `Y` of the marked points.
    pub marked_y: Q,
    /// Abscissa of `B` on the real axis.
    pub base_x: Q,
    /// Width of the pockets left of `r_1` and right of `r_n`.
    pub outer_width: Q,
    /// Vertical distance between consecutive passages on a ray.
    pub height_step: Q,
}

impl PlaneLayout {
    /// Evenly spaced rays with `B` centered below them.
    pub fn standard(n: usize) -> Self {
        let q = |v: i128| Q::from_integer(v);
        PlaneLayout {
            ray_x: (1..=n as i128).map(|i| q(16 * i)).collect(),
            marked_y: q(64),
            base_x: q(8 * (n as i128 + 1)),
            outer_width: q(16),
            height_step: q(4),
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        let zero = Q::zero();
        if self.ray_x.len() != n {
            return Err(Error::RankMismatch(self.ray_x.len(), n));
        }
        if self.ray_x.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::LayoutTooTight("rays must be strictly increasing"));
        }
        if self.marked_y <= zero || self.outer_width <= zero || self.height_step <= zero {
            return Err(Error::LayoutTooTight("non-positive dimension"));
        }
        Ok(())
    }

    /// Position of `p_k`.
    pub fn marked_point(&self, k: usize) -> Point {
        Point::new(self.ray_x[k - 1], self.marked_y)
    }

    /// Position of `B`.
    pub fn base_point(&self) -> Point {
        Point::new(self.base_x, Q::zero())
    }

    /// Bounds of pocket `c`, the gap right of ray `c` (0 is left of `r_1`).
    fn pocket(&self, c: usize) -> (Q, Q) {
        let n = self.ray_x.len();
        let lo = if c == 0 { self.ray_x[0] - self.outer_width } else { self.ray_x[c - 1] };
        let hi = if c == n { self.ray_x[n - 1] + self.outer_width } else { self.ray_x[c] };
        (lo, hi)
    }

    /// Height of the passage at stacking position `rank`.
    pub fn passage_height(&self, rank: usize) -> Q {
        self.marked_y + self.height_step * Q::from_integer(rank as i128 + 1)
    }
}

/// Sort key of a piece leaving a marked point: group, far end, curve.
type LeaveKey = (u8, Reverse<(i64, u8, i64)>, usize);

/// One end of a piece: the vertices outside the lower strip, then the
/// point where the piece meets the strip.
struct End {
    outer: Option<Point>,
    top: Point,
}

/// Draws a family of curves in one picture so that every pair is in
/// minimal position.
pub fn realize_plane_family(curves: &[PlaneCurve], layout: &PlaneLayout) -> Result<Vec<Polyline>> {
    let n = match curves.first() {
        Some(c) => c.n,
        None => return Ok(Vec::new()),
    };
    if let Some(c) = curves.iter().find(|c| c.n != n) {
        return Err(Error::RankMismatch(n, c.n));
    }
    layout.check(n)?;
    let stacking = stack(curves);
    let pieces = chords(curves, &stacking);
    let y = layout.marked_y;
    let q = |v: i128| Q::from_integer(v);

    // Slots for passages, pocket by pocket, in boundary order.
    let mut pockets: Vec<Vec<BoundaryPoint>> = vec![Vec::new(); n + 1];
    for p in pieces.iter().flatten().flat_map(|c| [c.from, c.to]) {
        if let BoundaryPoint::Wall { ray, side, .. } = p {
            let c = if side == Side::Left { ray - 1 } else { ray };
            pockets[c].push(p);
        }
    }
    let k_max = pockets.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let mut slot_x: BTreeMap<BoundaryPoint, Q> = BTreeMap::new();
    let mut min_width = layout.outer_width;
    for (c, walls) in pockets.iter_mut().enumerate() {
        let (lo, hi) = layout.pocket(c);
        min_width = min_width.min(hi - lo);
        let spacing = (hi - lo) / q(k_max as i128 + 1);
        let offset = Q::new((k_max - walls.len()) as i128, 2);
        walls.sort_by_key(|p| p.key(n));
        for (t, p) in walls.iter().enumerate() {
            slot_x.insert(*p, hi - spacing * (offset + q(t as i128 + 1)));
        }
    }
    let gap = min_width / q(k_max as i128 + 1);
    let g = gap / q(2);

    // Sub-slots for pieces leaving a marked point, ordered so that pieces
    // heading right leave to the right and nested pieces stay nested.
    let mut leaving: BTreeMap<usize, Vec<LeaveKey>> = BTreeMap::new();
    for (c, list) in pieces.iter().enumerate() {
        let first = list[0];
        if let BoundaryPoint::Marked(k) = first.from {
            let other = first.to.key(n);
            let group = u8::from(other >= first.from.key(n));
            leaving.entry(k).or_default().push((group, Reverse(other), c));
        }
    }
    let q_max = leaving.values().map(Vec::len).max().unwrap_or(1);
    let wtot = layout.pocket(n).1 - layout.pocket(0).0;
    let s = y / (q(2) * wtot);
    let eta = s * g / q(8 * (q_max as i128 + 1));
    let mut sub_x: BTreeMap<usize, Q> = BTreeMap::new();
    for (k, list) in leaving.iter_mut() {
        list.sort();
        let m = q(list.len() as i128 + 1);
        for (t, entry) in list.iter().enumerate() {
            let x = layout.ray_x[k - 1] + g / q(2) - g * q(t as i128 + 1) / m;
            sub_x.insert(entry.2, x);
        }
    }

    let end_of = |p: BoundaryPoint, curve: usize| -> End {
        match p {
            BoundaryPoint::Wall { ray, rank, .. } => End {
                outer: Some(Point::new(layout.ray_x[ray - 1], layout.passage_height(rank))),
                top: Point::new(slot_x[&p], y),
            },
            BoundaryPoint::Marked(k) => {
                End { outer: Some(layout.marked_point(k)), top: Point::new(sub_x[&curve], y - eta) }
            }
            BoundaryPoint::Base => unreachable!("pieces never start at B"),
        }
    };

    // Arches first; drops to B are fitted around them afterwards.
    let mut drawn: Vec<Vec<Vec<Point>>> = Vec::with_capacity(curves.len());
    let mut drops: Vec<(usize, usize, Point)> = Vec::new();
    let mut obstacles: Vec<Point> = Vec::new();
    for (c, list) in pieces.iter().enumerate() {
        let mut out = Vec::with_capacity(list.len());
        for (i, ch) in list.iter().enumerate() {
            let a = end_of(ch.from, c);
            let mut v: Vec<Point> = a.outer.into_iter().collect();
            v.push(a.top);
            if ch.to == BoundaryPoint::Base {
                drops.push((c, i, a.top));
            } else {
                let b = end_of(ch.to, c);
                let apex =
                    Point::new((a.top.x + b.top.x) / q(2), y - s * (b.top.x - a.top.x).abs());
                v.extend([apex, b.top]);
                v.extend(b.outer);
                obstacles.extend([a.top, apex, b.top]);
            }
            out.push(v);
        }
        drawn.push(out);
    }

    let floor = y / q(4);
    let mut min_dx = gap;
    let mut tops: Vec<Q> = slot_x.values().chain(sub_x.values()).copied().collect();
    tops.sort();
    for w in tops.windows(2) {
        min_dx = min_dx.min(w[1] - w[0]);
    }
    obstacles.extend(drops.iter().map(|d| d.2));
    let tries = obstacles.len() + drops.len() + 1;
    let e = min_dx / q(4 * (tries as i128 + 1));
    let mut bottoms: Vec<Point> = Vec::new();
    for &(c, i, top) in &drops {
        let bottom = (0..=2 * tries as i128)
            .map(|t| {
                let k = (t + 1) / 2;
                let d = if t % 2 == 1 { e * q(k) } else { -e * q(k) };
                Point::new(top.x + d, floor)
            })
            .find(|b| {
                !bottoms.contains(b)
                    && !obstacles.iter().any(|o| *o != top && on_segment(top, *b, *o))
            })
            .ok_or(Error::LayoutTooTight("no room for a drop to B"))?;
        bottoms.push(bottom);
        drawn[c][i].extend([bottom, layout.base_point()]);
    }

    Ok(drawn
        .into_iter()
        .map(|pieces| Polyline::new(pieces.into_iter().flatten().collect()))
        .collect())
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    let cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    cross.is_zero()
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Draws a single curve.
pub fn realize_plane(curve: &PlaneCurve, layout: &PlaneLayout) -> Result<Polyline> {
    Ok(realize_plane_family(core::slice::from_ref(curve), layout)?.remove(0))
}

/// The ray `r_i`, cut off just above the highest passage of the drawing.
pub fn ray_segment(layout: &PlaneLayout, i: usize, top: Q) -> (Point, Point) {
    let x = layout.ray_x[i - 1];
    (Point::new(x, layout.marked_y), Point::new(x, top))
}

/// Intersection number of two plane curves, counted on their drawing.
pub fn plane_pair_count(c1: &PlaneCurve, c2: &PlaneCurve, layout: &PlaneLayout) -> Result<usize> {
    let lines = realize_plane_family(&[c1.clone(), c2.clone()], layout)?;
    count_crossings(&lines[0], &lines[1])
}

/// Self-intersection number of a plane curve, counted on its drawing.
pub fn plane_self_count(c: &PlaneCurve, layout: &PlaneLayout) -> Result<usize> {
    count_self(&realize_plane(c, layout)?)
}

/// Pieces of the curves in a family, for callers that want the
/// combinatorial picture alongside the drawing.
pub fn pieces(curves: &[PlaneCurve]) -> Vec<Vec<Chord>> {
    chords(curves, &stack(curves))
}

#[cfg(test)]
mod tests {
    use super::super::count_ray_passes;
    use super::super::ordering::{forced_crossings, forced_self_crossings};
    use super::*;
    use crate::root_system::{enumerate_positive_real, Root};
    use crate::word_builder::build_f;

    fn f(v: &[i64]) -> PlaneCurve {
        build_f(&Root::new(v.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn endpoints_and_ray_passes() {
        let c = f(&[2, 3, 2, 2]);
        let layout = PlaneLayout::standard(4);
        let line = realize_plane(&c, &layout).unwrap();
        assert_eq!(line.start(), Some(layout.marked_point(c.start)));
        assert_eq!(line.end(), Some(layout.base_point()));
        for i in 1..=4 {
            let want = c.crossings.iter().filter(|x| x.ray == i).count();
            let got = count_ray_passes(&line, layout.ray_x[i - 1], layout.marked_y);
            assert_eq!(got, want, "ray {i}");
        }
    }

    #[test]
    fn drawing_matches_forced_counts() {
        for n in 3..6 {
            let layout = PlaneLayout::standard(n);
            let roots = enumerate_positive_real(n, 2).unwrap();
            for (a, _) in &roots {
                let c1 = build_f(a).unwrap();
                let ch = pieces(core::slice::from_ref(&c1));
                assert_eq!(
                    plane_self_count(&c1, &layout).unwrap(),
                    forced_self_crossings(&ch[0], n),
                    "{a}"
                );
                for lam in 0..3 {
                    let c2 = build_f(&a.shift(lam)).unwrap();
                    let fam = [c1.clone(), c2.clone()];
                    let ch = pieces(&fam);
                    assert_eq!(
                        plane_pair_count(&c1, &c2, &layout).unwrap(),
                        forced_crossings(&ch[0], &ch[1], n),
                        "{a} + {lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn known_values() {
        let layout = PlaneLayout::standard(3);
        assert_eq!(plane_pair_count(&f(&[1, 2, 1]), &f(&[3, 4, 3]), &layout), Ok(2));
        assert_eq!(plane_self_count(&f(&[1, 2, 1]), &layout), Ok(1));
        assert_eq!(plane_self_count(&f(&[3, 2, 2]), &layout), Ok(0));
        assert_eq!(plane_pair_count(&f(&[1, 1, 0]), &f(&[3, 3, 2]), &layout), Ok(1));
        assert_eq!(plane_pair_count(&f(&[1, 0, 0]), &f(&[1, 0, 0]), &layout), Ok(0));
    }

    #[test]
    fn layout_checks() {
        let mut layout = PlaneLayout::standard(3);
        assert!(realize_plane(&f(&[1, 2, 1, 1]), &layout).is_err());
        layout.ray_x.swap(0, 1);
        assert!(realize_plane(&f(&[1, 2, 1]), &layout).is_err());
        assert_eq!(realize_plane_family(&[], &layout), Ok(vec![]));
    }
}
