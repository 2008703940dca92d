// SPDX-License-Identifier: MIT OR Apache-2.0

//! Stacking order of curve passages along each ray.
//!
//! Cutting the half-plane along the rays leaves a disk `D` whose boundary
//! runs down the right side of `r_n`, through `p_n`, up its left side, on to
//! `r_{n−1}` and so on, ending at `B`. A curve given by its crossing word is
//! a chain of chords of `D`, one between consecutive passages. Once the
//! height of every passage on its ray is fixed the chords are determined up
//! to isotopy, and two chords cross exactly when their ends interleave
//! along the boundary.
//!
//! Heights are chosen by following two passages along their curves until
//! they separate, then picking the order at the shared ray that lets the
//! two strands part without crossing. This yields minimal position for the
//! canonical curves.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::word_builder::{Direction, PlaneCurve};

/// Side of a ray, as seen looking up along it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Left side.
    Left,
    /// Right side.
    Right,
}

/// A point on the boundary of the cut-open disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryPoint {
    /// The marked point `p_k`.
    Marked(usize),
    /// A passage through ray `ray` at stacking position `rank`, seen from
    /// side `side`.
    Wall {
        /// Ray index.
        ray: usize,
        /// Side of the ray.
        side: Side,
        /// Position on the ray, 0 lowest.
        rank: usize,
    },
    /// The end point `B`.
    Base,
}

type Key = (i64, u8, i64);

fn wall_key(n: usize, ray: usize, side: Side, h: i64) -> Key {
    let r = (n - ray) as i64;
    match side {
        Side::Right => (r, 0, -h),
        Side::Left => (r, 2, h),
    }
}

impl BoundaryPoint {
    /// Sort key along the boundary of `D`.
    pub fn key(&self, n: usize) -> (i64, u8, i64) {
        match *self {
            BoundaryPoint::Marked(k) => ((n - k) as i64, 1, 0),
            BoundaryPoint::Wall { ray, side, rank } => wall_key(n, ray, side, rank as i64),
            BoundaryPoint::Base => (n as i64 + 1, 0, 0),
        }
    }
}

/// Side through which a curve enters a ray it crosses in direction `d`.
pub fn entry_side(d: Direction) -> Side {
    match d {
        Direction::Right => Side::Left,
        Direction::Left => Side::Right,
    }
}

/// Side through which it leaves.
pub fn exit_side(d: Direction) -> Side {
    match d {
        Direction::Right => Side::Right,
        Direction::Left => Side::Left,
    }
}

/// One piece of a curve between consecutive boundary points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chord {
    /// Start of the piece.
    pub from: BoundaryPoint,
    /// End of the piece.
    pub to: BoundaryPoint,
}

fn keys_interleave(a: (Key, Key), b: (Key, Key)) -> bool {
    let pts = [a.0, a.1, b.0, b.1];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return false;
            }
        }
    }
    let (lo, hi) = if a.0 < a.1 { (a.0, a.1) } else { (a.1, a.0) };
    let inside = |k: Key| lo < k && k < hi;
    inside(b.0) != inside(b.1)
}

/// True when the two chords must cross. Chords sharing an end never count.
pub fn chords_cross(a: &Chord, b: &Chord, n: usize) -> bool {
    keys_interleave((a.from.key(n), a.to.key(n)), (b.from.key(n), b.to.key(n)))
}

fn sign(d: Direction) -> i8 {
    match d {
        Direction::Right => 1,
        Direction::Left => -1,
    }
}

/// What a curve meets a given number of steps away from a passage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Strand {
    /// A passage through `ray`, with direction sign relative to the walk.
    Event(usize, i8),
    /// The start point, with a tag separating otherwise equal copies.
    Marked(usize, i64),
    /// The end point, with a tag.
    Base(i64),
}

fn strand(curve: &PlaneCurve, j: usize, t: i8, s: i64) -> Strand {
    let idx = j as i64 + t as i64 * s;
    if idx < 1 {
        return Strand::Marked(curve.start, 0);
    }
    if idx as usize > curve.crossings.len() {
        return Strand::Base(0);
    }
    let c = curve.crossings[idx as usize - 1];
    Strand::Event(c.ray, sign(c.dir) * t)
}

fn tagged(s: Strand, tag: usize) -> Strand {
    let t = tag as i64 + 1;
    match s {
        Strand::Marked(k, _) => Strand::Marked(k, t),
        Strand::Base(_) => Strand::Base(t),
        e => e,
    }
}

fn strand_key(s: Strand, h: i64, inward: bool, n: usize) -> Key {
    match s {
        Strand::Event(ray, d) => {
            let side = match (inward, d > 0) {
                (true, true) | (false, false) => Side::Left,
                _ => Side::Right,
            };
            wall_key(n, ray, side, h)
        }
        Strand::Marked(k, sub) => ((n - k) as i64, 1, sub),
        Strand::Base(sub) => (n as i64 + 1, 0, sub),
    }
}

type Tag = [(i64, usize); 2];

/// Decides the order of the passages `e = (c, j)` and `f = (c2, j2)`, which
/// lie on the same ray. `j` is 1-based. `Greater` puts `e` above `f`.
fn compare(curves: &[PlaneCurve], n: usize, e: (usize, usize), f: (usize, usize)) -> Ordering {
    let (c, j) = e;
    let (c2, j2) = f;
    let first = curves[c].crossings[j - 1];
    let d_f = curves[c2].crossings[j2 - 1].dir;
    let t_e: i8 = 1;
    let t_f: i8 = if first.dir == d_f { 1 } else { -1 };
    let identical = c != c2 && curves[c] == curves[c2] && j == j2;

    let mut res: [(Option<i8>, Option<Tag>); 2] = [(None, None); 2];
    for (slot, back) in [true, false].into_iter().enumerate() {
        let sgn: i64 = if back { -1 } else { 1 };
        let mut seq: Vec<(Strand, Strand)> = Vec::new();
        let mut s: i64 = 1;
        loop {
            let mut x = strand(&curves[c], j, t_e, sgn * s);
            let mut y = strand(&curves[c2], j2, t_f, sgn * s);
            if x == y {
                if let Strand::Event(..) = x {
                    seq.push((x, y));
                    s += 1;
                    continue;
                }
                if !(identical && back) {
                    break;
                }
                x = tagged(x, c);
                y = tagged(y, c2);
            }
            seq.push((x, y));
            let mut tag =
                [(j as i64 + t_e as i64 * sgn * s, c), (j2 as i64 + t_f as i64 * sgn * s, c2)];
            tag.sort();
            let x0 = Strand::Event(first.ray, sign(first.dir));
            let mut chain = vec![(x0, x0)];
            chain.extend(seq);
            res[slot] = (separate(&chain, back, n), Some(tag));
            break;
        }
    }
    let [(sb, tb), (sf, tf)] = res;
    let s = match (sb, sf) {
        (None, s) | (s, None) => s,
        (Some(b), Some(fw)) => Some(if tb <= tf { b } else { fw }),
    };
    match s {
        Some(v) if v > 0 => Ordering::Greater,
        Some(_) => Ordering::Less,
        None => (c, j).cmp(&(c2, j2)),
    }
}

/// Works back from the point where two strands separate to the order they
/// must have at the first level of `chain`.
fn separate(chain: &[(Strand, Strand)], back: bool, n: usize) -> Option<i8> {
    let last = chain.len() - 1;
    let piece = |a: Strand, ha: i64, b: Strand, hb: i64| {
        if back {
            (strand_key(b, hb, false, n), strand_key(a, ha, true, n))
        } else {
            (strand_key(a, ha, false, n), strand_key(b, hb, true, n))
        }
    };
    let heights = |sig: i8| if sig > 0 { (2, 1) } else { (1, 2) };
    let ok = |r: usize, sig_r: i8, sig_next: Option<i8>| {
        let (xb, yb) = chain[r + 1];
        let (hx, hy) = heights(sig_r);
        let (hbx, hby) = match sig_next {
            None => (50, 60),
            Some(s) => heights(s),
        };
        !keys_interleave(piece(chain[r].0, hx, xb, hbx), piece(chain[r].1, hy, yb, hby))
    };
    let mut sig = [1, -1].into_iter().find(|&cand| ok(last - 1, cand, None));
    for r in (0..last.saturating_sub(1)).rev() {
        let next = sig?;
        sig = [1, -1].into_iter().find(|&cand| ok(r, cand, Some(next)));
    }
    sig
}

/// Stacking positions of all passages of a family of curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stacking {
    /// `ranks[c][j]` is the position of crossing `j` of curve `c` on its
    /// ray, 0 lowest.
    pub ranks: Vec<Vec<usize>>,
    /// Number of passages on each ray, indexed `1..=n` (slot 0 unused).
    pub per_ray: Vec<usize>,
}

/// Orders the passages of a family of curves of equal rank.
pub fn stack(curves: &[PlaneCurve]) -> Stacking {
    let n = curves.first().map_or(0, |c| c.n);
    let mut on_ray: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    for (c, curve) in curves.iter().enumerate() {
        for (j, x) in curve.crossings.iter().enumerate() {
            on_ray[x.ray].push((c, j + 1));
        }
    }
    let mut ranks: Vec<Vec<usize>> = curves.iter().map(|c| vec![0; c.crossings.len()]).collect();
    let mut per_ray = vec![0; n + 1];
    for (ray, events) in on_ray.into_iter().enumerate() {
        // Insertion sort: never panics, whatever the comparator does.
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(events.len());
        for e in events {
            let mut pos = sorted.len();
            while pos > 0 && compare(curves, n, sorted[pos - 1], e) == Ordering::Greater {
                pos -= 1;
            }
            sorted.insert(pos, e);
        }
        per_ray[ray] = sorted.len();
        for (h, (c, j)) in sorted.into_iter().enumerate() {
            ranks[c][j - 1] = h;
        }
    }
    Stacking { ranks, per_ray }
}

/// Cuts each curve into chords of the disk, using the given stacking.
pub fn chords(curves: &[PlaneCurve], stacking: &Stacking) -> Vec<Vec<Chord>> {
    curves
        .iter()
        .enumerate()
        .map(|(c, curve)| {
            let mut prev = BoundaryPoint::Marked(curve.start);
            let mut out = Vec::with_capacity(curve.crossings.len() + 1);
            for (j, x) in curve.crossings.iter().enumerate() {
                let rank = stacking.ranks[c][j];
                let wall = |side| BoundaryPoint::Wall { ray: x.ray, side, rank };
                out.push(Chord { from: prev, to: wall(entry_side(x.dir)) });
                prev = wall(exit_side(x.dir));
            }
            out.push(Chord { from: prev, to: BoundaryPoint::Base });
            out
        })
        .collect()
}

/// Crossings between two chord lists forced by the boundary order.
pub fn forced_crossings(a: &[Chord], b: &[Chord], n: usize) -> usize {
    a.iter().map(|p| b.iter().filter(|q| chords_cross(p, q, n)).count()).sum()
}

/// Crossings of a chord list with itself.
pub fn forced_self_crossings(a: &[Chord], n: usize) -> usize {
    (0..a.len()).map(|i| a[i + 1..].iter().filter(|q| chords_cross(&a[i], q, n)).count()).sum()
}
