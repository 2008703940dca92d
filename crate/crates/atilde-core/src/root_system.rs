// SPDX-License-Identifier: MIT OR Apache-2.0

//! Roots of Ã(n−1,1), simple reflections and the classification of
//! positive real roots.
//!
//! Vertices are numbered `1..=n` around a cycle, so vertex `0` means `n` and
//! vertex `n + 1` means `1`. The simple reflection `s_i` replaces the i-th
//! component by the sum of its two cyclic neighbours minus itself.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An integer vector of length `n >= 3` indexed cyclically from 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "Vec<i64>", into = "Vec<i64>"))]
pub struct Root(Vec<i64>);

impl Root {
    /// Wraps a component vector, rejecting ranks below 3.
    pub fn new(components: Vec<i64>) -> Result<Self> {
        if components.len() < 3 {
            return Err(Error::RankTooSmall(components.len()));
        }
        Ok(Root(components))
    }

    /// The zero vector of rank `n`.
    pub fn zero(n: usize) -> Result<Self> {
        Root::new(vec![0; n])
    }

    /// The simple root `α_k`.
    pub fn simple(n: usize, k: usize) -> Result<Self> {
        let mut r = Root::zero(n)?;
        check_index(k, n)?;
        r.0[k - 1] = 1;
        Ok(r)
    }

    /// The constant vector `(λ, …, λ)`.
    pub fn constant(n: usize, lambda: i64) -> Result<Self> {
        Root::new(vec![lambda; n])
    }

    /// Rank of the ambient root system.
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Component `i`, with cyclic indexing (`0` is `n`, `n + 1` is `1`).
    pub fn get(&self, i: usize) -> i64 {
        let n = self.n();
        self.0[(i + n - 1) % n]
    }

    /// Components as a slice, vertex 1 first.
    pub fn components(&self) -> &[i64] {
        &self.0
    }

    /// Smallest component; for positive real roots this is the plateau level m.
    pub fn plateau(&self) -> i64 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    /// Sum of the components.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Root) -> Result<Root> {
        same_rank(self.n(), other.n())?;
        Ok(Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// `self + λ·(1, …, 1)`.
    pub fn shift(&self, lambda: i64) -> Root {
        Root(self.0.iter().map(|a| a + lambda).collect())
    }

    /// Componentwise negation.
    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }

    /// If `other − self` is a constant vector, returns the constant.
    pub fn constant_offset(&self, other: &Root) -> Option<i64> {
        if self.n() != other.n() {
            return None;
        }
        let d = other.0[0] - self.0[0];
        self.0.iter().zip(&other.0).all(|(a, b)| b - a == d).then_some(d)
    }
}

impl TryFrom<Vec<i64>> for Root {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Root::new(v)
    }
}

impl From<Root> for Vec<i64> {
    fn from(r: Root) -> Vec<i64> {
        r.0
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Classification of an integer vector.
///
/// Positive real roots come in four shapes, each a cyclic run of entries
/// `m + 1` inside a background of entries `m`:
///
/// | variant      | vector                       |
/// |--------------|------------------------------|
/// | `Type1`      | `(m^a, (m+1)^b, m^c)`        |
/// | `Type2`      | `((m+1)^a, m^b, (m+1)^c)`    |
/// | `SchurLeft`  | `((m+1)^a, m^b)`             |
/// | `SchurRight` | `(m^b, (m+1)^a)`             |
///
/// with `a, b, c >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "tag", rename_all = "snake_case"))]
pub enum RootClass {
    /// `(m^a, (m+1)^b, m^c)`.
    Type1 {
        /// Plateau level.
        m: usize,
        /// Length of the leading run of `m`.
        a: usize,
        /// Length of the raised run.
        b: usize,
        /// Length of the trailing run of `m`.
        c: usize,
    },
    /// `((m+1)^a, m^b, (m+1)^c)`.
    Type2 {
        /// Plateau level.
        m: usize,
        /// Length of the leading raised run.
        a: usize,
        /// Length of the run of `m`.
        b: usize,
        /// Length of the trailing raised run.
        c: usize,
    },
    /// `((m+1)^a, m^b)`.
    SchurLeft {
        /// Plateau level.
        m: usize,
        /// Length of the raised prefix.
        a: usize,
        /// Length of the suffix.
        b: usize,
    },
    /// `(m^b, (m+1)^a)`.
    SchurRight {
        /// Plateau level.
        m: usize,
        /// Length of the raised suffix.
        a: usize,
        /// Length of the prefix.
        b: usize,
    },
    /// `(λ, …, λ)` with `λ >= 1`.
    Imaginary {
        /// The constant value.
        lambda: usize,
    },
    /// The negative of a positive real root.
    NegativeReal,
    /// Anything else, including zero and negative constant vectors.
    NotARoot,
}

impl RootClass {
    /// Plateau level for the four positive real shapes.
    pub fn plateau(&self) -> Option<usize> {
        match *self {
            RootClass::Type1 { m, .. }
            | RootClass::Type2 { m, .. }
            | RootClass::SchurLeft { m, .. }
            | RootClass::SchurRight { m, .. } => Some(m),
            _ => None,
        }
    }

    /// True for the four positive real shapes.
    pub fn is_positive_real(&self) -> bool {
        self.plateau().is_some()
    }

    /// True for `SchurLeft` and `SchurRight`.
    pub fn is_schur(&self) -> bool {
        matches!(self, RootClass::SchurLeft { .. } | RootClass::SchurRight { .. })
    }

    /// Same variant and run lengths, ignoring the plateau level.
    pub fn same_shape(&self, other: &RootClass) -> bool {
        self.with_plateau(0) == other.with_plateau(0)
    }

    /// The same shape at plateau level `m`.
    pub fn with_plateau(&self, m: usize) -> RootClass {
        let mut c = *self;
        match &mut c {
            RootClass::Type1 { m: x, .. }
            | RootClass::Type2 { m: x, .. }
            | RootClass::SchurLeft { m: x, .. }
            | RootClass::SchurRight { m: x, .. } => *x = m,
            _ => {}
        }
        c
    }

    /// Short lowercase name of the variant.
    pub fn tag(&self) -> &'static str {
        match self {
            RootClass::Type1 { .. } => "type1",
            RootClass::Type2 { .. } => "type2",
            RootClass::SchurLeft { .. } => "schur_left",
            RootClass::SchurRight { .. } => "schur_right",
            RootClass::Imaginary { .. } => "imaginary",
            RootClass::NegativeReal => "negative_real",
            RootClass::NotARoot => "not_a_root",
        }
    }

    /// Rebuilds the vector described by a positive real or imaginary class.
    pub fn root(&self, n: usize) -> Result<Root> {
        let run = |parts: &[(usize, usize)]| -> Result<Root> {
            let len: usize = parts.iter().map(|p| p.1).sum();
            if len != n {
                return Err(Error::InvalidParameters("run lengths must add up to n"));
            }
            let mut v = Vec::with_capacity(n);
            for &(value, count) in parts {
                v.extend(core::iter::repeat(value as i64).take(count));
            }
            Root::new(v)
        };
        match *self {
            RootClass::Type1 { m, a, b, c } => {
                check_runs(&[a, b, c])?;
                run(&[(m, a), (m + 1, b), (m, c)])
            }
            RootClass::Type2 { m, a, b, c } => {
                check_runs(&[a, b, c])?;
                run(&[(m + 1, a), (m, b), (m + 1, c)])
            }
            RootClass::SchurLeft { m, a, b } => {
                check_runs(&[a, b])?;
                run(&[(m + 1, a), (m, b)])
            }
            RootClass::SchurRight { m, a, b } => {
                check_runs(&[a, b])?;
                run(&[(m, b), (m + 1, a)])
            }
            RootClass::Imaginary { lambda } if lambda >= 1 => Root::constant(n, lambda as i64),
            _ => Err(Error::InvalidParameters("class has no canonical vector")),
        }
    }
}

fn check_runs(runs: &[usize]) -> Result<()> {
    if runs.contains(&0) {
        return Err(Error::InvalidParameters("every run must be non-empty"));
    }
    Ok(())
}

/// `s_{i_1} ⋯ s_{i_j}(α_base)`: the leftmost letter is applied last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReflectionWord {
    /// Rank.
    pub n: usize,
    /// Index of the simple root the word acts on.
    pub base: usize,
    /// Reflection indices, leftmost first.
    pub letters: Vec<usize>,
}

impl ReflectionWord {
    /// Builds a word after checking every index.
    pub fn new(n: usize, base: usize, letters: Vec<usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        check_index(base, n)?;
        for &l in &letters {
            check_index(l, n)?;
        }
        Ok(ReflectionWord { n, base, letters })
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

fn same_rank(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::RankMismatch(a, b));
    }
    Ok(())
}

/// Applies the simple reflection `s_i`.
pub fn simple_reflect(i: usize, v: &Root) -> Result<Root> {
    let n = v.n();
    check_index(i, n)?;
    let mut out = v.clone();
    out.0[i - 1] = v.get(i - 1) + v.get(i + 1) - v.get(i);
    Ok(out)
}

/// Evaluates a reflection word, applying letters from right to left.
pub fn apply_word(w: &ReflectionWord) -> Result<Root> {
    let mut v = Root::simple(w.n, w.base)?;
    for &i in w.letters.iter().rev() {
        v = simple_reflect(i, &v)?;
    }
    Ok(v)
}

/// Classifies a vector; see [`RootClass`] for the shapes.
///
/// When a vector fits several shapes the precedence is
/// Imaginary, SchurLeft, SchurRight, Type1, Type2. In practice only the
/// constant vectors could be ambiguous, since a raised run touching one end
/// of `1..=n` is always reported as a Schur shape.
pub fn classify(v: &Root) -> RootClass {
    if let Some(c) = classify_positive(v) {
        return c;
    }
    if classify_positive(&v.neg()).is_some_and(|c| c.is_positive_real()) {
        return RootClass::NegativeReal;
    }
    RootClass::NotARoot
}

fn classify_positive(v: &Root) -> Option<RootClass> {
    let n = v.n();
    let m = v.plateau();
    if m < 0 {
        return None;
    }
    let c = v.components();
    if c.iter().all(|&x| x == m) {
        return (m >= 1).then_some(RootClass::Imaginary { lambda: m as usize });
    }
    if c.iter().any(|&x| x != m && x != m + 1) {
        return None;
    }
    // The raised entries must form a single cyclic run: count rising edges.
    let raised = |i: usize| c[i % n] == m + 1;
    let rises = (0..n).filter(|&i| !raised(i) && raised(i + 1)).count();
    if rises != 1 {
        return None;
    }
    let mu = m as usize;
    let first_low = c.iter().position(|&x| x == m)?;
    let first_high = c.iter().position(|&x| x == m + 1)?;
    let class = if first_high == 0 && !raised(n - 1) {
        RootClass::SchurLeft { m: mu, a: first_low, b: n - first_low }
    } else if first_low == 0 && raised(n - 1) {
        RootClass::SchurRight { m: mu, a: n - first_high, b: first_high }
    } else if first_low == 0 {
        let b = c[first_high..].iter().take_while(|&&x| x == m + 1).count();
        RootClass::Type1 { m: mu, a: first_high, b, c: n - first_high - b }
    } else {
        let b = c[first_low..].iter().take_while(|&&x| x == m).count();
        RootClass::Type2 { m: mu, a: first_low, b, c: n - first_low - b }
    };
    Some(class)
}

/// Every positive real root with plateau level at most `m_max`, in a fixed
/// order: by level, then Type1, Type2, SchurLeft, SchurRight, then by run
/// lengths.
pub fn enumerate_positive_real(n: usize, m_max: usize) -> Result<Vec<(Root, RootClass)>> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    let mut out = Vec::new();
    for m in 0..=m_max {
        let mut classes = Vec::new();
        for a in 1..n {
            for c in 1..n - a {
                let b = n - a - c;
                classes.push(RootClass::Type1 { m, a, b, c });
            }
        }
        for a in 1..n {
            for c in 1..n - a {
                let b = n - a - c;
                classes.push(RootClass::Type2 { m, a, b, c });
            }
        }
        for a in 1..n {
            classes.push(RootClass::SchurLeft { m, a, b: n - a });
        }
        for a in 1..n {
            classes.push(RootClass::SchurRight { m, a, b: n - a });
        }
        for class in classes {
            out.push((class.root(n)?, class));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Root {
        Root::new(v.to_vec()).unwrap()
    }

    #[test]
    fn reflections_match_small_examples() {
        let w = ReflectionWord::new(3, 3, vec![2, 1, 2]).unwrap();
        assert_eq!(apply_word(&w).unwrap(), r(&[2, 2, 1]));
        let w = ReflectionWord::new(3, 1, vec![1, 2, 3]).unwrap();
        assert_eq!(apply_word(&w).unwrap(), r(&[2, 2, 1]));
        let w = ReflectionWord::new(4, 1, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(apply_word(&w).unwrap(), r(&[2, 2, 1, 1]));
        for n in 3..7 {
            for i in 1..=n {
                let a = Root::simple(n, i).unwrap();
                assert_eq!(simple_reflect(i, &a).unwrap(), a.neg());
            }
            let z = Root::zero(n).unwrap();
            assert_eq!(simple_reflect(1, &z).unwrap(), z);
        }
        assert!(simple_reflect(4, &r(&[1, 0, 0])).is_err());
        assert!(simple_reflect(0, &r(&[1, 0, 0])).is_err());
    }

    #[test]
    fn empty_word_is_simple_root() {
        let w = ReflectionWord::new(5, 4, vec![]).unwrap();
        assert_eq!(apply_word(&w).unwrap(), Root::simple(5, 4).unwrap());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&r(&[2, 2, 1, 2])), RootClass::Type2 { m: 1, a: 2, b: 1, c: 1 });
        assert_eq!(classify(&r(&[1, 1, 1])), RootClass::Imaginary { lambda: 1 });
        assert_eq!(classify(&r(&[2, 2, 1])), RootClass::SchurLeft { m: 1, a: 2, b: 1 });
        assert_eq!(classify(&r(&[1, 0, 2])), RootClass::NotARoot);
        assert_eq!(classify(&r(&[1, 2, 1])), RootClass::Type1 { m: 1, a: 1, b: 1, c: 1 });
        assert_eq!(classify(&r(&[1, 1, 2])), RootClass::SchurRight { m: 1, a: 1, b: 2 });
        assert_eq!(classify(&r(&[-1, 0, 0])), RootClass::NegativeReal);
        assert_eq!(classify(&r(&[0, 0, 0])), RootClass::NotARoot);
        assert_eq!(classify(&r(&[-1, -1, -1])), RootClass::NotARoot);
        assert_eq!(classify(&r(&[1, 2, 1, 2])), RootClass::NotARoot);
        assert_eq!(classify(&r(&[1, 0, 0])), RootClass::SchurLeft { m: 0, a: 1, b: 2 });
        assert_eq!(classify(&r(&[0, 0, 1])), RootClass::SchurRight { m: 0, a: 1, b: 2 });
        assert_eq!(classify(&r(&[0, 1, 0])), RootClass::Type1 { m: 0, a: 1, b: 1, c: 1 });
    }

    #[test]
    fn enumeration_small_rank() {
        let all = enumerate_positive_real(3, 0).unwrap();
        let mut roots: Vec<_> = all.iter().map(|(v, _)| v.components().to_vec()).collect();
        roots.sort();
        assert_eq!(
            roots,
            vec![
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![1, 0, 0],
                vec![1, 0, 1],
                vec![1, 1, 0]
            ]
        );
        assert!(all.contains(&(r(&[1, 0, 1]), RootClass::Type2 { m: 0, a: 1, b: 1, c: 1 })));
        for n in 3..8 {
            for (v, c) in enumerate_positive_real(n, 3).unwrap() {
                assert_eq!(classify(&v), c);
            }
        }
        assert!(enumerate_positive_real(2, 1).is_err());
    }

    #[test]
    fn helpers() {
        let a = r(&[1, 2, 1]);
        assert_eq!(a.constant_offset(&r(&[3, 4, 3])), Some(2));
        assert_eq!(a.constant_offset(&r(&[3, 4, 4])), None);
        assert_eq!(a.get(0), 1);
        assert_eq!(a.get(4), 1);
        assert_eq!(alloc::format!("{a}"), "1,2,1");
        assert!(Root::new(vec![1, 2]).is_err());
    }
}
