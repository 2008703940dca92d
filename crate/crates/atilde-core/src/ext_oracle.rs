// SPDX-License-Identifier: MIT OR Apache-2.0

//! Dimensions of `Ext¹` between string modules, computed from scratch.
//!
//! The quiver has vertices `1..n`, arrows `i → i+1` for `i < n` and one
//! extra arrow `1 → n`. For a positive real root `α` the indecomposable
//! module `M_α` is the string module of the walk that starts at the first
//! vertex of the raised run of `α` and steps `i → i+1` around the cycle,
//! visiting vertex `i` exactly `α_i` times. The same walk is read off the
//! annulus curve as the order in which it crosses the arcs `l_i`.
//!
//! `Hom(M, N)` is the solution space of a linear system with one equation
//! per arrow and per matrix entry. It is solved over the integers, and
//! `dim Ext¹(M, N) = dim Hom(M, N) − ⟨α, β⟩` with the Euler form
//! `⟨α, β⟩ = Σ α_i β_i − Σ_{arrows s→t} α_s β_t`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::annulus::build_gamma;
use crate::error::{Error, Result};
use crate::geom_oracle::strip::{arc_sequence, StripLayout};
use crate::root_system::{classify, Root, RootClass};

/// A walk in the quiver, given by the vertices it visits (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StringWord {
    /// Rank of the quiver.
    pub n: usize,
    /// Visited vertices in order.
    pub walk: Vec<usize>,
}

impl StringWord {
    /// Builds a walk, checking that consecutive vertices are joined by an
    /// arrow.
    pub fn new(n: usize, walk: Vec<usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        if let Some(&v) = walk.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::IndexOutOfRange { index: v, n });
        }
        if walk.is_empty() || walk.windows(2).any(|w| arrow_between(n, w[0], w[1]).is_none()) {
            return Err(Error::InvalidString("consecutive vertices must be adjacent"));
        }
        Ok(StringWord { n, walk })
    }

    /// Dimension vector of the string module.
    pub fn dimension_vector(&self) -> Root {
        let mut d = vec![0i64; self.n];
        for &v in &self.walk {
            d[v - 1] += 1;
        }
        Root::new(d).expect("rank checked")
    }
}

impl fmt::Display for StringWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.walk[0])?;
        for w in self.walk.windows(2) {
            let forward = arrow_between(self.n, w[0], w[1]) == Some((w[0], w[1]));
            write!(f, " {} {}", if forward { "->" } else { "<-" }, w[1])?;
        }
        Ok(())
    }
}

/// Arrows as (source, target), 1-based.
pub fn arrows(n: usize) -> Vec<(usize, usize)> {
    let mut a: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    a.push((1, n));
    a
}

fn arrow_between(n: usize, u: usize, v: usize) -> Option<(usize, usize)> {
    arrows(n).into_iter().find(|&(s, t)| (s, t) == (u, v) || (s, t) == (v, u))
}

/// The walk of `M_α`, built directly from the root.
pub fn string_word(alpha: &Root) -> Result<StringWord> {
    let n = alpha.n();
    let start = match classify(alpha) {
        RootClass::Type1 { a, .. } => a + 1,
        RootClass::Type2 { a, b, .. } => a + b + 1,
        RootClass::SchurLeft { .. } => 1,
        RootClass::SchurRight { b, .. } => b + 1,
        _ => return Err(Error::NotPositiveReal),
    };
    let len = alpha.height() as usize;
    let walk = (0..len).map(|k| (start - 1 + k) % n + 1).collect();
    StringWord::new(n, walk)
}

/// The walk of `M_α`, read off the arcs crossed by the annulus curve.
pub fn string_word_from_curve(alpha: &Root) -> Result<StringWord> {
    let gamma = build_gamma(alpha)?;
    StringWord::new(alpha.n(), arc_sequence(&gamma, &StripLayout::default())?)
}

/// A representation given by dimensions and one matrix per arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    /// Dimension at each vertex.
    pub dims: Vec<usize>,
    /// Matrix of each arrow, in the order of [`arrows`], as `dims[t]` rows
    /// of `dims[s]` entries.
    pub maps: Vec<Vec<Vec<i64>>>,
}

/// The string module of a walk.
pub fn rep_from_string(w: &StringWord) -> QuiverRep {
    let n = w.n;
    let arr = arrows(n);
    let mut dims = vec![0usize; n];
    let local: Vec<usize> = w
        .walk
        .iter()
        .map(|&v| {
            dims[v - 1] += 1;
            dims[v - 1] - 1
        })
        .collect();
    let mut maps: Vec<Vec<Vec<i64>>> =
        arr.iter().map(|&(s, t)| vec![vec![0; dims[s - 1]]; dims[t - 1]]).collect();
    for p in 0..w.walk.len() - 1 {
        let (u, v) = (w.walk[p], w.walk[p + 1]);
        let (lu, lv) = (local[p], local[p + 1]);
        if let Some(i) = arr.iter().position(|&a| a == (u, v)) {
            maps[i][lv][lu] = 1;
        } else {
            let i = arr.iter().position(|&a| a == (v, u)).expect("adjacent");
            maps[i][lu][lv] = 1;
        }
    }
    QuiverRep { dims, maps }
}

/// Rank of an integer matrix by fraction-free elimination.
fn rank(mut rows: Vec<Vec<i128>>, cols: usize) -> Result<usize> {
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot = &head[r];
        for row in tail.iter_mut().filter(|row| row[c] != 0) {
            let (a, b) = (pivot[c], row[c]);
            let mut g = 0i128;
            for k in c..cols {
                let v = row[k]
                    .checked_mul(a)
                    .and_then(|x| pivot[k].checked_mul(b).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                row[k] = v;
                g = g.gcd(&v);
            }
            if g > 1 {
                row[c..].iter_mut().for_each(|v| *v /= g);
            }
        }
        r += 1;
    }
    Ok(r)
}

/// Dimension of the space of morphisms between two representations.
pub fn hom_dim(m: &QuiverRep, nrep: &QuiverRep) -> Result<usize> {
    if m.dims.len() != nrep.dims.len() {
        return Err(Error::RankMismatch(m.dims.len(), nrep.dims.len()));
    }
    let k = m.dims.len();
    let mut off = vec![0usize; k + 1];
    for i in 0..k {
        off[i + 1] = off[i] + m.dims[i] * nrep.dims[i];
    }
    let unknowns = off[k];
    // f_i is a dims_N[i] × dims_M[i] matrix stored row-major at off[i].
    let var = |i: usize, r: usize, c: usize| off[i] + r * m.dims[i] + c;
    let mut rows = Vec::new();
    for (idx, &(s, t)) in arrows(k).iter().enumerate() {
        let (s, t) = (s - 1, t - 1);
        let ma = &m.maps[idx];
        let nb = &nrep.maps[idx];
        // f_t · M_a − N_a · f_s = 0, entry by entry.
        for r in 0..nrep.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![0i128; unknowns];
                for q in 0..m.dims[t] {
                    row[var(t, r, q)] += ma[q][c] as i128;
                }
                for q in 0..nrep.dims[s] {
                    row[var(s, q, c)] -= nb[r][q] as i128;
                }
                rows.push(row);
            }
        }
    }
    Ok(unknowns - rank(rows, unknowns)?)
}

/// The Euler form `⟨α, β⟩`.
pub fn euler_form(alpha: &Root, beta: &Root) -> Result<i64> {
    let n = alpha.n();
    if n != beta.n() {
        return Err(Error::RankMismatch(n, beta.n()));
    }
    let a = alpha.components();
    let b = beta.components();
    let diag: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let off: i64 = arrows(n).iter().map(|&(s, t)| a[s - 1] * b[t - 1]).sum();
    Ok(diag - off)
}

/// `dim Ext¹(M_α, M_β)` over the path algebra.
pub fn ext_dim_kq(alpha: &Root, beta: &Root) -> Result<usize> {
    let e = euler_form(alpha, beta)?;
    let h = hom_dim(&rep_from_string(&string_word(alpha)?), &rep_from_string(&string_word(beta)?))?;
    usize::try_from(h as i64 - e).map_err(|_| Error::InvalidParameters("negative Ext dimension"))
}

/// Symmetrized dimension `dim Ext¹(M_α, M_β) + dim Ext¹(M_β, M_α)`, as in
/// the cluster category.
pub fn ext_dim_cluster(alpha: &Root, beta: &Root) -> Result<usize> {
    Ok(ext_dim_kq(alpha, beta)? + ext_dim_kq(beta, alpha)?)
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;

    use super::*;
    use crate::root_system::enumerate_positive_real;

    fn r(v: &[i64]) -> Root {
        Root::new(v.to_vec()).unwrap()
    }

    #[test]
    fn walks() {
        assert_eq!(string_word(&r(&[1, 2, 1])).unwrap().walk, vec![2, 3, 1, 2]);
        assert_eq!(string_word(&r(&[1, 0, 0])).unwrap().walk, vec![1]);
        let w = string_word(&r(&[2, 1, 1, 2])).unwrap();
        assert_eq!(w.walk, vec![4, 1, 2, 3, 4, 1]);
        assert_eq!(w.to_string(), "4 <- 1 -> 2 -> 3 -> 4 <- 1");
        assert!(string_word(&r(&[1, 1, 1])).is_err());
        assert!(StringWord::new(4, vec![1, 3]).is_err());
    }

    #[test]
    fn curve_walks_agree() {
        for n in 3..6 {
            for (root, _) in enumerate_positive_real(n, 2).unwrap() {
                let a = string_word(&root).unwrap();
                let b = string_word_from_curve(&root).unwrap();
                let rev: Vec<usize> = b.walk.iter().rev().copied().collect();
                assert!(a.walk == b.walk || a.walk == rev, "{root}: {a} vs {b}");
                assert_eq!(a.dimension_vector(), root);
            }
        }
    }

    #[test]
    fn simple_modules() {
        let s1 = rep_from_string(&string_word(&r(&[1, 0, 0])).unwrap());
        let s2 = rep_from_string(&string_word(&r(&[0, 1, 0])).unwrap());
        assert_eq!(hom_dim(&s1, &s1), Ok(1));
        assert_eq!(hom_dim(&s1, &s2), Ok(0));
        assert_eq!(ext_dim_kq(&r(&[1, 0, 0]), &r(&[0, 1, 0])), Ok(1));
        assert_eq!(ext_dim_kq(&r(&[0, 1, 0]), &r(&[1, 0, 0])), Ok(0));
    }

    #[test]
    fn euler_of_imaginary_root_vanishes() {
        for n in 3..7 {
            let d = Root::constant(n, 1).unwrap();
            assert_eq!(euler_form(&d, &d), Ok(0));
        }
    }

    #[test]
    fn self_extensions_follow_plateau() {
        for (root, class) in enumerate_positive_real(4, 2).unwrap() {
            let want = if class.is_schur() { 0 } else { class.plateau().unwrap() };
            assert_eq!(ext_dim_kq(&root, &root), Ok(want), "{root}");
            assert_eq!(euler_form(&root, &root), Ok(1));
        }
    }

    #[test]
    fn rank_overflow_is_reported() {
        let big = i128::MAX / 2;
        let rows = vec![vec![3, big], vec![2, big - 1]];
        assert_eq!(rank(rows, 2), Err(Error::Overflow));
    }
}
