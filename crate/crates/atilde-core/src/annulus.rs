// SPDX-License-Identifier: MIT OR Apache-2.0

//! Curves `γ_α` on the annulus with `n − 1` outer marked points
//! `M_1..M_{n−1}` and one inner marked point `M_n`.
//!
//! The annulus is triangulated by arcs `l_1..l_n`, all of which join the
//! inner point `M_n` to an outer point: `l_i` ends at `M_i` for `i < n`, and
//! `l_n` ends at `M_1` after going once around the other side of the hole.
//! The number of times a curve crosses `l_i` is the i-th component of its
//! dimension vector.
//!
//! In the universal cover (see [`crate::geom_oracle::strip`]) outer point
//! `M_i` lifts to upper-edge positions `i + kn` and `M_n` lifts to lower-edge
//! positions `kn`. Position `n + 1` on the upper edge is the lift of `M_1`
//! reached by winding once around; upper positions `≡ 0 (mod n)` are unused.

use crate::error::{Error, Result};
use crate::geom_oracle::strip::{annulus_self_count, arc_crossings, StripLayout};
use crate::root_system::{classify, Root, RootClass};

/// Edge of the universal-cover strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    /// Covers the outer boundary.
    Top,
    /// Covers the inner boundary.
    Bottom,
}

/// A lifted marked point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StripPoint {
    /// Which edge.
    pub edge: Edge,
    /// Integer position along the edge.
    pub pos: i64,
}

impl StripPoint {
    fn top(pos: i64) -> Self {
        StripPoint { edge: Edge::Top, pos }
    }
    fn bottom(pos: i64) -> Self {
        StripPoint { edge: Edge::Bottom, pos }
    }
}

/// A lifted curve or arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StripChord {
    /// Lift of the starting point.
    pub from: StripPoint,
    /// Lift of the end point.
    pub to: StripPoint,
}

impl StripChord {
    /// Deck translation by `shift` positions.
    pub fn translate(&self, shift: i64) -> StripChord {
        let t = |p: StripPoint| StripPoint { pos: p.pos + shift, ..p };
        StripChord { from: t(self.from), to: t(self.to) }
    }
}

/// Upper-edge slot of the outer point `M_i`, with `M_n` read as the next
/// lift of `M_1`.
fn outer(i: usize, n: usize) -> i64 {
    if i == n {
        n as i64 + 1
    } else {
        i as i64
    }
}

/// Lift of the arc `l_i` starting at the inner point lifted to position 0.
pub fn arc_lift(n: usize, i: usize) -> Result<StripChord> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(StripChord { from: StripPoint::bottom(0), to: StripPoint::top(outer(i, n)) })
}

/// The canonical annulus curve of a positive real root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AnnulusCurve {
    /// Rank.
    pub n: usize,
    /// Class of the root.
    pub class: RootClass,
    /// Index `s` of the starting marked point `M_s`.
    pub start: usize,
    /// Index of the end point.
    pub end: usize,
    /// Number of turns around the hole.
    pub winding: usize,
    /// Arc met by each turn of the spiral.
    pub spiral_arc: usize,
    /// True when the curve turns clockwise.
    pub clockwise: bool,
}

/// Reduces an index to `1..=n`.
fn wrap(i: usize, n: usize) -> usize {
    (i - 1) % n + 1
}

/// Builds `γ_α`.
pub fn build_gamma(alpha: &Root) -> Result<AnnulusCurve> {
    let n = alpha.n();
    let class = classify(alpha);
    // Outer points run M_1..M_{n−1}; index n wraps to M_1.
    let outer_point = |i: usize| if i == n { 1 } else { i };
    let (start, end, spiral_arc, clockwise, m) = match class {
        RootClass::Type1 { m, a, b, .. } => (a, outer_point(a + b + 1), a, false, m),
        RootClass::Type2 { m, a, b, .. } => (a + b, a + 1, a + b, false, m),
        RootClass::SchurLeft { m, a, .. } => (n, outer_point(a + 1), n, false, m),
        RootClass::SchurRight { m, b, .. } => (n, b, 1, true, m),
        _ => return Err(Error::NotPositiveReal),
    };
    Ok(AnnulusCurve { n, class, start: wrap(start, n), end, winding: m, spiral_arc, clockwise })
}

impl AnnulusCurve {
    /// The lift starting from the fundamental copy of the start point.
    pub fn lift(&self) -> StripChord {
        let n = self.n;
        let ni = n as i64;
        let (from, to) = match self.class {
            RootClass::Type1 { m, a, b, .. } => {
                (StripPoint::top(a as i64), StripPoint::top(outer(a + b + 1, n) + m as i64 * ni))
            }
            RootClass::Type2 { m, a, b, .. } => (
                StripPoint::top((a + b) as i64),
                StripPoint::top((a + 1) as i64 + (m as i64 + 1) * ni),
            ),
            RootClass::SchurLeft { m, a, .. } => {
                (StripPoint::bottom(0), StripPoint::top(outer(a + 1, n) + (m as i64 + 1) * ni))
            }
            RootClass::SchurRight { m, b, .. } => {
                (StripPoint::bottom(0), StripPoint::top(b as i64 - (m as i64 + 1) * ni))
            }
            _ => unreachable!("built from a positive real root"),
        };
        StripChord { from, to }
    }

    /// Root this curve was built from.
    pub fn root(&self) -> Root {
        self.class.root(self.n).expect("positive real class")
    }
}

pub(crate) fn same_rank(g1: &AnnulusCurve, g2: &AnnulusCurve) -> Result<()> {
    if g1.n != g2.n {
        return Err(Error::RankMismatch(g1.n, g2.n));
    }
    Ok(())
}

/// Crossings with each arc `l_1..l_n`, counted on the realized curve.
pub fn dimension_vector(gamma: &AnnulusCurve) -> Result<Root> {
    dimension_vector_in(gamma, &StripLayout::default())
}

/// [`dimension_vector`] in a chosen layout.
pub fn dimension_vector_in(gamma: &AnnulusCurve, layout: &StripLayout) -> Result<Root> {
    let v = (1..=gamma.n)
        .map(|i| arc_crossings(gamma, i, layout).map(|c| c as i64))
        .collect::<Result<_>>()?;
    Root::new(v)
}

/// Value of an intersection number that may fall outside the covered family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Intersection {
    /// The pair is covered and this is its intersection number.
    Count(usize),
    /// The pair is not of the covered form.
    Unsupported,
}

impl Intersection {
    /// The count, if supported.
    pub fn count(self) -> Option<usize> {
        match self {
            Intersection::Count(c) => Some(c),
            Intersection::Unsupported => None,
        }
    }
}

/// Intersection number of two canonical curves whose roots differ by a
/// constant vector.
///
/// For the same Type1 or Type2 shape with `β = α + λ(1, …, 1)`, `λ >= 0`,
/// the answer is `2m` where `m` is the smaller plateau level. For the same
/// Schur shape with `0 <= λ < n` it is `λ − 1`, or 0 when `λ = 0`. Every
/// other pair is [`Intersection::Unsupported`].
pub fn int_annulus(g1: &AnnulusCurve, g2: &AnnulusCurve) -> Result<Intersection> {
    same_rank(g1, g2)?;
    let (lo, hi) = if g1.winding <= g2.winding { (g1, g2) } else { (g2, g1) };
    if !lo.class.same_shape(&hi.class) {
        return Ok(Intersection::Unsupported);
    }
    let lambda = hi.winding - lo.winding;
    Ok(if lo.class.is_schur() {
        if lambda < lo.n {
            Intersection::Count(lambda.saturating_sub(1))
        } else {
            Intersection::Unsupported
        }
    } else {
        Intersection::Count(2 * lo.winding)
    })
}

/// Self-intersection number of a canonical curve: the winding for Type1
/// and Type2 curves, 0 for Schur curves, whose spiral never meets itself.
pub fn self_int_annulus(gamma: &AnnulusCurve) -> usize {
    if gamma.class.is_schur() {
        0
    } else {
        gamma.winding
    }
}

/// Self-intersection counted on the realized curve.
pub fn self_int_geometric(gamma: &AnnulusCurve) -> Result<usize> {
    annulus_self_count(gamma, &StripLayout::default())
}
