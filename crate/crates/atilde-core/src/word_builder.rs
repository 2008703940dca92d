// SPDX-License-Identifier: MIT OR Apache-2.0

//! Canonical plane curves `F(α)` and the maps `R` and `S`.
//!
//! The plane carries marked points `p_1..p_n` on a horizontal line, a
//! vertical ray `r_i` going up from each `p_i`, and a basepoint `B` below
//! them. A curve starts at some `p_k`, crosses rays, and ends at `B`. Its
//! homotopy class is fixed by the ordered list of ray crossings together
//! with their directions.
//!
//! Reading the crossings backwards gives a reflection word over the base
//! `α_k` (the map `S`), and evaluating it gives a root (the map `R`).

use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::root_system::{apply_word, classify, ReflectionWord, Root, RootClass};

/// Horizontal direction in which a curve passes through a ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Direction {
    /// From the left side of the ray to the right side.
    Right,
    /// From the right side of the ray to the left side.
    Left,
}

impl Direction {
    /// The other direction.
    pub fn flip(self) -> Direction {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }

    /// `'R'` or `'L'`.
    pub fn as_char(self) -> char {
        match self {
            Direction::Right => 'R',
            Direction::Left => 'L',
        }
    }
}

/// One passage of a curve through a ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Crossing {
    /// Ray index in `1..=n`.
    pub ray: usize,
    /// Direction of travel.
    pub dir: Direction,
}

impl Crossing {
    fn new(ray: usize, dir: Direction) -> Self {
        Crossing { ray, dir }
    }
}

/// A curve from `p_start` to `B`, stored as its ordered ray crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PlaneCurve {
    /// Rank.
    pub n: usize,
    /// Index of the starting marked point.
    pub start: usize,
    /// Ray crossings, first crossing first.
    pub crossings: Vec<Crossing>,
}

impl PlaneCurve {
    /// Builds a curve after checking indices and that no crossing is
    /// immediately undone by the next one.
    pub fn new(n: usize, start: usize, crossings: Vec<Crossing>) -> Result<Self> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        let bad = |i: usize| i == 0 || i > n;
        if bad(start) {
            return Err(Error::IndexOutOfRange { index: start, n });
        }
        if let Some(c) = crossings.iter().find(|c| bad(c.ray)) {
            return Err(Error::IndexOutOfRange { index: c.ray, n });
        }
        let backtracks = crossings.windows(2).any(|w| w[0].ray == w[1].ray && w[0].dir != w[1].dir);
        if backtracks {
            return Err(Error::InvalidParameters("crossing immediately undone"));
        }
        Ok(PlaneCurve { n, start, crossings })
    }

    /// Ray indices in crossing order.
    pub fn rays(&self) -> Vec<usize> {
        self.crossings.iter().map(|c| c.ray).collect()
    }

    /// The map `S`: crossings read right to left, over the base `α_start`.
    pub fn word(&self) -> ReflectionWord {
        ReflectionWord {
            n: self.n,
            base: self.start,
            letters: self.crossings.iter().rev().map(|c| c.ray).collect(),
        }
    }

    /// The map `R = apply_word ∘ S`.
    pub fn root(&self) -> Root {
        // Indices were validated on construction.
        apply_word(&self.word()).expect("validated curve")
    }

    /// Reflection in the vertical line through `B`: index `k` becomes
    /// `n + 1 − k` and every direction flips.
    pub fn mirror(&self) -> PlaneCurve {
        let n = self.n;
        PlaneCurve {
            n,
            start: n + 1 - self.start,
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing::new(n + 1 - c.ray, c.dir.flip()))
                .collect(),
        }
    }
}

struct Pen {
    out: Vec<Crossing>,
}

impl Pen {
    fn right(&mut self, rays: impl Iterator<Item = usize>) {
        self.out.extend(rays.map(|r| Crossing::new(r, Direction::Right)));
    }
    fn left(&mut self, rays: impl Iterator<Item = usize>) {
        self.out.extend(rays.map(|r| Crossing::new(r, Direction::Left)));
    }
}

fn check_three_runs(n: usize, a: usize, b: usize, c: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    if a == 0 || b == 0 || c == 0 || a + b + c != n {
        return Err(Error::InvalidParameters("need a, b, c >= 1 with a + b + c = n"));
    }
    Ok(())
}

fn check_schur(n: usize, a: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    if a == 0 || a >= n {
        return Err(Error::InvalidParameters("need 1 <= a < n"));
    }
    Ok(())
}

/// The curve for `(m^a, (m+1)^b, m^c)`.
///
/// Starting at `p_{a+b}`, each of the `m` turns crosses rays `a+b+1..n−1`
/// rightward, all rays `n..1` leftward, then rays `2..a+b` rightward. A final
/// leftward pass over `a+b−1..a+1` closes the curve when `b >= 2`.
pub fn build_type1(n: usize, m: usize, a: usize, b: usize, c: usize) -> Result<PlaneCurve> {
    check_three_runs(n, a, b, c)?;
    let mut pen = Pen { out: Vec::new() };
    for _ in 0..m {
        pen.right(a + b + 1..n);
        pen.left((1..=n).rev());
        pen.right(2..=a + b);
    }
    pen.left((a + 1..a + b).rev());
    PlaneCurve::new(n, a + b, pen.out)
}

/// The curve for `((m+1)^a, m^b, (m+1)^c)`.
///
/// Starting at `p_1`, the hook crosses `2..a` and `a+b+1..n` rightward and
/// returns leftward over `n−1..a+b+1`. Each of the `m` turns then crosses
/// `1..a+b` rightward, `a+b−1..1` leftward, `a+b+1..n` rightward and
/// `n−1..a+b+1` leftward.
pub fn build_type2(n: usize, m: usize, a: usize, b: usize, c: usize) -> Result<PlaneCurve> {
    check_three_runs(n, a, b, c)?;
    let mut pen = Pen { out: Vec::new() };
    pen.right(2..=a);
    pen.right(a + b + 1..=n);
    pen.left((a + b + 1..n).rev());
    for _ in 0..m {
        pen.right(1..=a + b);
        pen.left((1..a + b).rev());
        pen.right(a + b + 1..=n);
        pen.left((a + b + 1..n).rev());
    }
    PlaneCurve::new(n, 1, pen.out)
}

/// Index stream of the unshifted Schur word: `a, a−1, …, 1, n, …, 1, …`
/// with `a + m·n` entries, the base counted first.
fn schur_stream(n: usize, m: usize, a: usize) -> impl Iterator<Item = usize> {
    (0..a + m * n).map(move |k| cyclic(a as i64 - k as i64, n))
}

fn cyclic(i: i64, n: usize) -> usize {
    (i - 1).rem_euclid(n as i64) as usize + 1
}

/// The curve for `((m+1)^a, m^b)`.
///
/// The unshifted curve starts at `p_a` and turns counter-clockwise, crossing
/// rays `a−1..1` and then `m` full rounds `n..1`, all leftward. Dropping the
/// first `m` entries of its index stream moves the start `m` places to the
/// left, which yields the canonical curve.
pub fn build_schur(n: usize, m: usize, a: usize) -> Result<PlaneCurve> {
    check_schur(n, a)?;
    let mut stream = schur_stream(n, m, a).skip(m);
    let start = stream.next().expect("stream has a + m(n-1) >= 1 entries left");
    let crossings = stream.map(|r| Crossing::new(r, Direction::Left)).collect();
    PlaneCurve::new(n, start, crossings)
}

/// The mirror image of [`build_schur`], the curve for `(m^b, (m+1)^a)`.
pub fn build_schur_mirror(n: usize, m: usize, a: usize) -> Result<PlaneCurve> {
    Ok(build_schur(n, m, a)?.mirror())
}

/// Builds the curve of a class.
pub fn build_for_class(n: usize, class: &RootClass) -> Result<PlaneCurve> {
    match *class {
        RootClass::Type1 { m, a, b, c } => build_type1(n, m, a, b, c),
        RootClass::Type2 { m, a, b, c } => build_type2(n, m, a, b, c),
        RootClass::SchurLeft { m, a, b } if a + b == n => build_schur(n, m, a),
        RootClass::SchurRight { m, a, b } if a + b == n => build_schur_mirror(n, m, a),
        _ => Err(Error::NotPositiveReal),
    }
}

/// `F(α)` for a positive real root.
pub fn build_f(alpha: &Root) -> Result<PlaneCurve> {
    build_for_class(alpha.n(), &classify(alpha))
}

/// Which canonical shape a curve has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SpiralKind {
    /// A spiral from the start point followed by a hook to `B`.
    SpiralThenHook,
    /// A hook from the start point followed by a spiral ending at `B`.
    HookThenSpiral,
}

/// Split of a canonical curve into a spiral with `m` turns and a hook.
///
/// Ranges index into the crossing list; the split point `w` sits on the
/// ray crossed at `split` (or is the start point or `B` when a part is empty).
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpiralDecomposition {
    /// Class of the curve's root.
    pub class: RootClass,
    /// Number of turns.
    pub m: usize,
    /// Order of the two parts.
    pub kind: SpiralKind,
    /// Crossings of the spiral part.
    pub spiral: Range<usize>,
    /// Crossings of the hook part.
    pub hook: Range<usize>,
}

/// Recognises a canonical curve and splits it into spiral and hook.
pub fn spiral_decompose(c: &PlaneCurve) -> Result<SpiralDecomposition> {
    let class = classify(&c.root());
    let canonical = build_for_class(c.n, &class).map_err(|_| Error::UnrecognizedCurve)?;
    if &canonical != c {
        return Err(Error::UnrecognizedCurve);
    }
    let n = c.n;
    let len = c.crossings.len();
    let (m, kind, split) = match class {
        // Each turn has (n − a − b − 1) + n + (a + b − 1) crossings.
        RootClass::Type1 { m, .. } => (m, SpiralKind::SpiralThenHook, m * (2 * n - 2)),
        RootClass::Type2 { m, a, b, .. } => {
            let hook = (a - 1) + (n - a - b) + (n - a - b - 1);
            (m, SpiralKind::HookThenSpiral, hook)
        }
        RootClass::SchurLeft { m, .. } | RootClass::SchurRight { m, .. } => {
            // The hook runs up to and including the first crossing of the
            // outermost ray on the side the curve turns towards.
            let edge = if matches!(class, RootClass::SchurLeft { .. }) { 1 } else { n };
            let hook = c.crossings.iter().position(|x| x.ray == edge).map_or(len, |i| i + 1);
            (m, SpiralKind::HookThenSpiral, if m == 0 { len } else { hook })
        }
        _ => return Err(Error::UnrecognizedCurve),
    };
    let (spiral, hook) = match kind {
        SpiralKind::SpiralThenHook => (0..split, split..len),
        SpiralKind::HookThenSpiral => (split..len, 0..split),
    };
    Ok(SpiralDecomposition { class, m, kind, spiral, hook })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn root(v: &[i64]) -> Root {
        Root::new(v.to_vec()).unwrap()
    }

    #[test]
    fn type1_examples() {
        let c = build_type1(4, 1, 1, 2, 1).unwrap();
        assert_eq!(c.word().letters, vec![2, 3, 2, 1, 2, 3, 4]);
        assert_eq!(c.word().base, 3);
        assert_eq!(c.root(), root(&[1, 2, 2, 1]));
        let c = build_type1(5, 0, 2, 1, 2).unwrap();
        assert!(c.crossings.is_empty());
        assert_eq!(c.root(), root(&[0, 0, 1, 0, 0]));
        assert_eq!(build_type1(5, 1, 2, 1, 2).unwrap().root(), root(&[1, 1, 2, 1, 1]));
        assert!(build_type1(4, 1, 0, 2, 2).is_err());
    }

    #[test]
    fn type2_examples() {
        assert_eq!(build_type2(4, 1, 1, 2, 1).unwrap().root(), root(&[2, 1, 1, 2]));
        assert_eq!(build_type2(3, 0, 1, 1, 1).unwrap().root(), root(&[1, 0, 1]));
        assert_eq!(build_type2(6, 0, 2, 2, 2).unwrap().root(), root(&[1, 1, 0, 0, 1, 1]));
    }

    #[test]
    fn type2_after_first_turn_half() {
        // After the hook and the first rightward and leftward passes of a turn
        // the root is (1, …, 1) + α_1 + … + α_a.
        let (n, a, b, c) = (6, 2, 1, 3);
        let curve = build_type2(n, 1, a, b, c).unwrap();
        let hook = (a - 1) + (n - a - b) + (n - a - b - 1);
        let prefix =
            PlaneCurve::new(n, 1, curve.crossings[..hook + 2 * (a + b) - 1].to_vec()).unwrap();
        assert_eq!(prefix.root(), root(&[2, 2, 1, 1, 1, 1]));
    }

    #[test]
    fn schur_word_table() {
        let table: [(usize, &[usize], usize, &[i64]); 4] = [
            (0, &[1], 2, &[1, 1, 0, 0]),
            (1, &[1, 2, 3, 4], 1, &[2, 2, 1, 1]),
            (2, &[1, 2, 3, 4, 1, 2, 3], 4, &[3, 3, 2, 2]),
            (3, &[1, 2, 3, 4, 1, 2, 3, 4, 1, 2], 3, &[4, 4, 3, 3]),
        ];
        for (m, letters, base, v) in table {
            let w = build_schur(4, m, 2).unwrap().word();
            assert_eq!(w.letters, letters);
            assert_eq!(w.base, base);
            assert_eq!(apply_word(&w).unwrap(), root(v));
        }
    }

    #[test]
    fn schur_mirror_examples() {
        let w = build_schur_mirror(4, 1, 2).unwrap().word();
        assert_eq!((w.base, w.letters.clone()), (4, vec![4, 3, 2, 1]));
        assert_eq!(apply_word(&w).unwrap(), root(&[1, 1, 2, 2]));
        let w = build_schur_mirror(4, 0, 2).unwrap().word();
        assert_eq!((w.base, w.letters.clone()), (3, vec![4]));
        let c = build_schur(5, 3, 2).unwrap();
        assert_eq!(c.mirror().mirror(), c);
    }

    #[test]
    fn schur_term_count() {
        // The stream keeps a + m·n − m terms, the base included.
        let w = build_schur(4, 2, 2).unwrap().word();
        assert_eq!(w.letters.len() + 1, 8);
        for (n, m, a) in [(3, 0, 1), (5, 4, 3), (6, 7, 5)] {
            let w = build_schur(n, m, a).unwrap().word();
            assert_eq!(w.letters.len() + 1, a + m * n - m);
            assert_eq!(w.base, cyclic(a as i64 - m as i64, n));
        }
    }

    #[test]
    fn build_f_dispatch() {
        let c = build_f(&root(&[1, 2, 1])).unwrap();
        assert_eq!(
            spiral_decompose(&c).unwrap().class,
            RootClass::Type1 { m: 1, a: 1, b: 1, c: 1 }
        );
        let d = spiral_decompose(&build_f(&root(&[2, 1, 2])).unwrap()).unwrap();
        assert_eq!(d.class, RootClass::Type2 { m: 1, a: 1, b: 1, c: 1 });
        let d = spiral_decompose(&build_f(&root(&[2, 2, 1])).unwrap()).unwrap();
        assert_eq!(d.class, RootClass::SchurLeft { m: 1, a: 2, b: 1 });
        assert!(build_f(&root(&[1, 1, 1])).is_err());
        assert!(build_f(&root(&[1, 0, 2])).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = spiral_decompose(&build_f(&root(&[1, 2, 1])).unwrap()).unwrap();
        assert_eq!((d.m, d.kind), (1, SpiralKind::SpiralThenHook));
        let c = build_f(&root(&[2, 1, 1, 2])).unwrap();
        let d = spiral_decompose(&c).unwrap();
        assert_eq!((d.m, d.kind), (1, SpiralKind::HookThenSpiral));
        assert_eq!(d.hook, 0..1);
        assert_eq!(d.spiral.end, c.crossings.len());
        let d = spiral_decompose(&build_f(&root(&[1, 1, 0, 0])).unwrap()).unwrap();
        assert_eq!(d.m, 0);
        assert!(d.spiral.is_empty());
        let odd = PlaneCurve::new(3, 1, vec![Crossing::new(2, Direction::Left)]).unwrap();
        assert_eq!(spiral_decompose(&odd), Err(Error::UnrecognizedCurve));
    }

    #[test]
    fn empty_curve_is_simple_root() {
        let c = PlaneCurve::new(5, 3, vec![]).unwrap();
        assert_eq!(c.root(), Root::simple(5, 3).unwrap());
    }

    #[test]
    fn rejects_backtracking() {
        let x = vec![Crossing::new(2, Direction::Left), Crossing::new(2, Direction::Right)];
        assert!(PlaneCurve::new(3, 1, x).is_err());
    }
}
