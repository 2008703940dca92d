// SPDX-License-Identifier: MIT OR Apache-2.0

//! Exact polylines and transverse crossing counts.
//!
//! Curves from both surfaces are realized as polylines with rational
//! vertices and compared segment by segment. Nothing here uses a tolerance:
//! a touching or overlapping pair of segments is reported as
//! [`Error::Degenerate`] instead of being guessed at.
//!
//! * [`plane`] draws plane curves in the half-plane with rays.
//! * [`strip`] draws annulus curves as chords in the universal cover.
//! * [`ordering`] computes how curves stack along each ray so that the
//!   plane drawings are in minimal position.

pub mod ordering;
pub mod plane;
pub mod strip;

use alloc::vec::Vec;
use core::ops::{Mul, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Q;

pub use plane::{realize_plane, realize_plane_family, PlaneLayout};
pub use strip::{realize_annulus, StripLayout};

/// A point with exact rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    /// Abscissa.
    pub x: Q,
    /// Ordinate.
    pub y: Q,
}

impl Point {
    /// Builds a point.
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    /// Builds a point from integers.
    pub fn int(x: i128, y: i128) -> Self {
        Point { x: Q::from_integer(x), y: Q::from_integer(y) }
    }
}

/// An open polygonal curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyline {
    /// Vertices in order.
    pub vertices: Vec<Point>,
}

impl Polyline {
    /// Wraps a vertex list, dropping repeated consecutive vertices.
    pub fn new(mut vertices: Vec<Point>) -> Self {
        vertices.dedup();
        Polyline { vertices }
    }

    /// First vertex.
    pub fn start(&self) -> Option<Point> {
        self.vertices.first().copied()
    }

    /// Last vertex.
    pub fn end(&self) -> Option<Point> {
        self.vertices.last().copied()
    }

    /// Number of segments.
    pub fn segment_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

/// Number of transverse crossings between two polylines.
///
/// Endpoints shared by both curves (first or last vertices that coincide)
/// are never counted. Any other contact that is not a proper crossing is an
/// error.
pub fn count_crossings(p: &Polyline, q: &Polyline) -> Result<usize> {
    let ends = |l: &Polyline| [l.start(), l.end()];
    let shared: Vec<Point> =
        ends(p).into_iter().flatten().filter(|a| ends(q).contains(&Some(*a))).collect();
    match grid(&[p, q]) {
        Some(g) => {
            let sh: Vec<_> = shared.iter().map(|a| g.map(a)).collect();
            let ps = g.segments(p);
            let qs = g.segments(q);
            cross_count(&ps, &qs, &sh)
        }
        None => {
            let ps = rational_segments(p);
            let qs = rational_segments(q);
            let sh: Vec<_> = shared.iter().map(|a| (a.x, a.y)).collect();
            cross_count(&ps, &qs, &sh)
        }
    }
}

/// Number of self-crossings of a polyline, over pairs of non-adjacent
/// segments. Adjacent segments must not fold back onto each other.
pub fn count_self(p: &Polyline) -> Result<usize> {
    match grid(&[p]) {
        Some(g) => self_count(&g.segments(p)),
        None => self_count(&rational_segments(p)),
    }
}

/// Locations of the transverse crossings counted by [`count_crossings`].
pub fn crossing_points(p: &Polyline, q: &Polyline) -> Result<Vec<Point>> {
    count_crossings(p, q)?;
    let qs = rational_segments(q);
    let mut out = Vec::new();
    for s in rational_segments(p) {
        for t in &qs {
            if contact(&s, t) == Contact::Proper {
                out.push(meet(&s, t));
            }
        }
    }
    Ok(out)
}

/// Locations of the self-crossings counted by [`count_self`].
pub fn self_crossing_points(p: &Polyline) -> Result<Vec<Point>> {
    count_self(p)?;
    let segs = rational_segments(p);
    let mut out = Vec::new();
    for i in 0..segs.len() {
        for t in &segs[i + 1..] {
            if contact(&segs[i], t) == Contact::Proper {
                out.push(meet(&segs[i], t));
            }
        }
    }
    Ok(out)
}

/// Intersection point of two properly crossing segments.
fn meet(s: &Seg<Q>, t: &Seg<Q>) -> Point {
    let (dx, dy) = (s.b.0 - s.a.0, s.b.1 - s.a.1);
    let (ex, ey) = (t.b.0 - t.a.0, t.b.1 - t.a.1);
    let u = ((t.a.0 - s.a.0) * ey - (t.a.1 - s.a.1) * ex) / (dx * ey - dy * ex);
    Point::new(s.a.0 + dx * u, s.a.1 + dy * u)
}

/// Common integer grid for a set of polylines, when one fits comfortably
/// in `i128` arithmetic.
struct Grid {
    scale: i128,
}

const GRID_LIMIT: i128 = 1 << 50;

fn grid(lines: &[&Polyline]) -> Option<Grid> {
    let mut scale: i128 = 1;
    for l in lines {
        for v in &l.vertices {
            for c in [v.x, v.y] {
                scale = scale.lcm(c.denom());
                if scale > GRID_LIMIT {
                    return None;
                }
            }
        }
    }
    for l in lines {
        for v in &l.vertices {
            for c in [v.x, v.y] {
                let big = c.numer().checked_mul(scale / c.denom())?;
                if big.abs() > GRID_LIMIT {
                    return None;
                }
            }
        }
    }
    Some(Grid { scale })
}

impl Grid {
    fn map(&self, a: &Point) -> (i128, i128) {
        let f = |c: Q| c.numer() * (self.scale / c.denom());
        (f(a.x), f(a.y))
    }

    fn segments(&self, l: &Polyline) -> Vec<Seg<i128>> {
        l.vertices.windows(2).map(|w| Seg::new(self.map(&w[0]), self.map(&w[1]))).collect()
    }
}

fn rational_segments(l: &Polyline) -> Vec<Seg<Q>> {
    l.vertices.windows(2).map(|w| Seg::new((w[0].x, w[0].y), (w[1].x, w[1].y))).collect()
}

trait Coord: Copy + Ord + Zero + Sub<Output = Self> + Mul<Output = Self> {}
impl<T: Copy + Ord + Zero + Sub<Output = T> + Mul<Output = T>> Coord for T {}

#[derive(Clone, Copy)]
struct Seg<T> {
    a: (T, T),
    b: (T, T),
    lo: (T, T),
    hi: (T, T),
}

impl<T: Coord> Seg<T> {
    fn new(a: (T, T), b: (T, T)) -> Self {
        Seg { a, b, lo: (a.0.min(b.0), a.1.min(b.1)), hi: (a.0.max(b.0), a.1.max(b.1)) }
    }

    fn boxes_meet(&self, o: &Seg<T>) -> bool {
        self.lo.0 <= o.hi.0 && o.lo.0 <= self.hi.0 && self.lo.1 <= o.hi.1 && o.lo.1 <= self.hi.1
    }
}

fn orient<T: Coord>(a: (T, T), b: (T, T), c: (T, T)) -> core::cmp::Ordering {
    let l = (b.0 - a.0) * (c.1 - a.1);
    let r = (b.1 - a.1) * (c.0 - a.0);
    l.cmp(&r)
}

fn on_segment<T: Coord>(s: &Seg<T>, p: (T, T)) -> bool {
    s.lo.0 <= p.0 && p.0 <= s.hi.0 && s.lo.1 <= p.1 && p.1 <= s.hi.1
}

/// How two closed segments meet.
#[derive(Debug, PartialEq, Eq)]
enum Contact<T> {
    None,
    Proper,
    Touch(Vec<(T, T)>),
    Overlap,
}

fn contact<T: Coord>(s: &Seg<T>, t: &Seg<T>) -> Contact<T> {
    use core::cmp::Ordering::Equal;
    if !s.boxes_meet(t) {
        return Contact::None;
    }
    let d1 = orient(s.a, s.b, t.a);
    let d2 = orient(s.a, s.b, t.b);
    let d3 = orient(t.a, t.b, s.a);
    let d4 = orient(t.a, t.b, s.b);
    if d1 != Equal && d2 != Equal && d3 != Equal && d4 != Equal {
        return if d1 != d2 && d3 != d4 { Contact::Proper } else { Contact::None };
    }
    if d1 == Equal && d2 == Equal {
        // Collinear: overlap unless they meet in at most one shared endpoint.
        let mut pts = Vec::new();
        for p in [t.a, t.b] {
            if on_segment(s, p) {
                pts.push(p);
            }
        }
        for p in [s.a, s.b] {
            if on_segment(t, p) && !pts.contains(&p) {
                pts.push(p);
            }
        }
        return match pts.len() {
            0 => Contact::None,
            1 => Contact::Touch(pts),
            _ => Contact::Overlap,
        };
    }
    let mut pts = Vec::new();
    if d1 == Equal && on_segment(s, t.a) {
        pts.push(t.a);
    }
    if d2 == Equal && on_segment(s, t.b) {
        pts.push(t.b);
    }
    if d3 == Equal && on_segment(t, s.a) && !pts.contains(&s.a) {
        pts.push(s.a);
    }
    if d4 == Equal && on_segment(t, s.b) && !pts.contains(&s.b) {
        pts.push(s.b);
    }
    if pts.is_empty() {
        Contact::None
    } else {
        Contact::Touch(pts)
    }
}

fn cross_count<T: Coord>(ps: &[Seg<T>], qs: &[Seg<T>], shared: &[(T, T)]) -> Result<usize> {
    // Sort the second curve by left edge so each query scans a prefix.
    let mut order: Vec<usize> = (0..qs.len()).collect();
    order.sort_by(|&i, &j| qs[i].lo.0.cmp(&qs[j].lo.0));
    let mut total = 0;
    for s in ps {
        let end = order.partition_point(|&j| qs[j].lo.0 <= s.hi.0);
        for &j in &order[..end] {
            match contact(s, &qs[j]) {
                Contact::None => {}
                Contact::Proper => total += 1,
                Contact::Touch(pts) => {
                    if !pts.iter().all(|p| shared.contains(p)) {
                        return Err(Error::Degenerate("curves touch without crossing"));
                    }
                }
                Contact::Overlap => return Err(Error::Degenerate("collinear overlap")),
            }
        }
    }
    Ok(total)
}

fn self_count<T: Coord>(segs: &[Seg<T>]) -> Result<usize> {
    let mut total = 0;
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            match contact(&segs[i], &segs[j]) {
                Contact::None => {}
                Contact::Proper => total += 1,
                Contact::Touch(pts) if j == i + 1 && pts == [segs[j].a] => {}
                Contact::Touch(_) => return Err(Error::Degenerate("curve touches itself")),
                Contact::Overlap => return Err(Error::Degenerate("curve folds onto itself")),
            }
        }
    }
    Ok(total)
}

/// Number of times a polyline passes from one side of a vertical ray
/// `{x = x0, y > y0}` to the other.
///
/// Passages through a vertex lying on the ray are counted when the curve
/// really changes sides there; the ray's own endpoint is never counted.
pub fn count_ray_passes(p: &Polyline, x0: Q, y0: Q) -> usize {
    let side = |v: &Point| (v.x - x0).signum();
    let mut passes = 0;
    let mut last_side = Q::zero();
    let mut pending_on_ray = false;
    for v in &p.vertices {
        let s = side(v);
        if s.is_zero() {
            pending_on_ray = v.y > y0;
            continue;
        }
        if pending_on_ray && !last_side.is_zero() && s != last_side {
            passes += 1;
        }
        pending_on_ray = false;
        last_side = s;
    }
    for w in p.vertices.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (sa, sb) = (side(&a), side(&b));
        if !sa.is_zero() && !sb.is_zero() && sa != sb {
            // Proper crossing of the vertical line: check the height.
            let t = (x0 - a.x) / (b.x - a.x);
            if a.y + (b.y - a.y) * t > y0 {
                passes += 1;
            }
        }
    }
    passes
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pl(v: &[(i128, i128)]) -> Polyline {
        Polyline::new(v.iter().map(|&(x, y)| Point::int(x, y)).collect())
    }

    #[test]
    fn basic_crossings() {
        let a = pl(&[(0, 0), (2, 2)]);
        let b = pl(&[(0, 2), (2, 0)]);
        assert_eq!(count_crossings(&a, &b), Ok(1));
        assert_eq!(crossing_points(&a, &b), Ok(vec![Point::int(1, 1)]));
        let c = pl(&[(5, 5), (6, 6)]);
        assert_eq!(count_crossings(&a, &c), Ok(0));
        assert_eq!(count_self(&a), Ok(0));
    }

    #[test]
    fn shared_endpoint_not_counted() {
        let a = pl(&[(0, 0), (2, 2)]);
        let b = pl(&[(0, 0), (2, -1)]);
        assert_eq!(count_crossings(&a, &b), Ok(0));
        let c = pl(&[(3, 0), (0, 2), (0, 0)]);
        assert_eq!(count_crossings(&a, &c), Ok(1));
    }

    #[test]
    fn degeneracies_are_errors() {
        let a = pl(&[(0, 0), (4, 0)]);
        let b = pl(&[(2, 0), (6, 0)]);
        assert!(matches!(count_crossings(&a, &b), Err(Error::Degenerate(_))));
        let t = pl(&[(2, -1), (2, 0), (3, 1)]);
        assert!(matches!(count_crossings(&a, &t), Err(Error::Degenerate(_))));
        assert!(count_crossings(&a, &a).is_err());
    }

    #[test]
    fn figure_eight() {
        let f = pl(&[(0, 0), (2, 2), (2, 0), (0, 2)]);
        assert_eq!(count_self(&f), Ok(1));
        assert_eq!(self_crossing_points(&f), Ok(vec![Point::int(1, 1)]));
        let back = pl(&[(0, 0), (2, 0), (1, 0)]);
        assert!(count_self(&back).is_err());
    }

    #[test]
    fn rational_path_agrees() {
        // Denominators too large for the integer grid.
        let big = Q::new(1, (1i128 << 40) + 1);
        let small = Q::new(1, (1i128 << 40) + 3);
        let a = Polyline::new(vec![
            Point::new(Q::zero(), Q::zero()),
            Point::new(Q::from_integer(2) + big, Q::from_integer(2)),
        ]);
        let b = Polyline::new(vec![
            Point::new(Q::zero(), Q::from_integer(2) + small),
            Point::new(Q::from_integer(2), Q::zero()),
        ]);
        assert!(grid(&[&a, &b]).is_none());
        assert_eq!(count_crossings(&a, &b), Ok(1));
    }

    #[test]
    fn ray_passes() {
        let z = Q::from_integer;
        let p = pl(&[(0, 3), (2, 3), (2, 5), (0, 5)]);
        assert_eq!(count_ray_passes(&p, z(1), z(1)), 2);
        let through_vertex = pl(&[(0, 2), (1, 3), (2, 2)]);
        assert_eq!(count_ray_passes(&through_vertex, z(1), z(1)), 1);
        let bounce = pl(&[(0, 2), (1, 3), (0, 4)]);
        assert_eq!(count_ray_passes(&bounce, z(1), z(1)), 0);
        let below = pl(&[(0, 0), (2, 0)]);
        assert_eq!(count_ray_passes(&below, z(1), z(1)), 0);
    }
}
