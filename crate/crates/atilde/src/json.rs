// SPDX-License-Identifier: MIT OR Apache-2.0

//! JSON views of roots, curves and query results.

use atilde_core::annulus::{build_gamma, int_annulus, self_int_annulus, Intersection};
use atilde_core::ext_oracle::{ext_dim_cluster, ext_dim_kq};
use atilde_core::geom_oracle::plane::{plane_pair_count, plane_self_count};
use atilde_core::geom_oracle::strip::{annulus_pair_count, annulus_self_count};
use atilde_core::geom_oracle::{PlaneLayout, StripLayout};
use atilde_core::root_system::{classify, enumerate_positive_real};
use atilde_core::word_builder::{build_f, spiral_decompose, SpiralKind};
use atilde_core::{Crossing, Root, RootClass};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A root with its class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    /// The root.
    pub root: Root,
    /// Its class.
    pub class: RootClass,
}

/// Class filter for `roots`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ClassFilter {
    /// Every class.
    All,
    /// `(m^a, (m+1)^b, m^c)`.
    Type1,
    /// `((m+1)^a, m^b, (m+1)^c)`.
    Type2,
    /// Both Schur shapes.
    Schur,
}

impl ClassFilter {
    fn keeps(self, c: &RootClass) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::Type1 => matches!(c, RootClass::Type1 { .. }),
            ClassFilter::Type2 => matches!(c, RootClass::Type2 { .. }),
            ClassFilter::Schur => c.is_schur(),
        }
    }
}

/// Positive real roots up to a plateau level.
pub fn roots(n: usize, max_m: usize, filter: ClassFilter) -> Result<Vec<RootEntry>, CliError> {
    Ok(enumerate_positive_real(n, max_m)?
        .into_iter()
        .filter(|(_, c)| filter.keeps(c))
        .map(|(root, class)| RootEntry { root, class })
        .collect())
}

/// A reflection word without its rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    /// Index of the simple root acted on.
    pub base: usize,
    /// Reflection indices, leftmost first.
    pub letters: Vec<usize>,
}

/// Spiral and hook split of a curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    /// Order of the two parts.
    pub kind: SpiralKind,
    /// Number of turns.
    pub m: usize,
    /// Crossing indices `[start, end)` of the spiral.
    pub spiral: [usize; 2],
    /// Crossing indices `[start, end)` of the hook.
    pub hook: [usize; 2],
}

/// Everything known about the canonical plane curve of a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    /// The root.
    pub root: Root,
    /// Its class.
    pub class: RootClass,
    /// The reflection word read off the curve.
    pub word: WordJson,
    /// Ray crossings in order.
    pub crossings: Vec<Crossing>,
    /// Directions as a string of `R` and `L`.
    pub directions: String,
    /// Spiral and hook split.
    pub decomposition: DecompositionJson,
}

/// Builds the JSON view of `F(α)`.
pub fn curve(alpha: &Root) -> Result<CurveJson, CliError> {
    let c = build_f(alpha)?;
    let word = c.word();
    let d = spiral_decompose(&c)?;
    Ok(CurveJson {
        root: alpha.clone(),
        class: classify(alpha),
        word: WordJson { base: word.base, letters: word.letters },
        directions: c.crossings.iter().map(|x| x.dir.as_char()).collect(),
        crossings: c.crossings,
        decomposition: DecompositionJson {
            kind: d.kind,
            m: d.m,
            spiral: [d.spiral.start, d.spiral.end],
            hook: [d.hook.start, d.hook.end],
        },
    })
}

/// Which counts `intersect` reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Model {
    /// Closed formula.
    Formula,
    /// Drawing in the plane.
    Plane,
    /// Drawing on the annulus.
    Annulus,
    /// All three.
    All,
}

/// Marker for a pair the formula does not cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unsupported {
    /// Printed as `"unsupported"`.
    Unsupported,
}

/// A formula value or the `"unsupported"` marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormulaValue {
    /// A count.
    Count(usize),
    /// Not covered.
    Unsupported(Unsupported),
}

impl From<Intersection> for FormulaValue {
    fn from(i: Intersection) -> Self {
        match i {
            Intersection::Count(c) => FormulaValue::Count(c),
            Intersection::Unsupported => FormulaValue::Unsupported(Unsupported::Unsupported),
        }
    }
}

/// Self-intersection numbers of one curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCounts {
    /// Closed formula.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub formula: Option<usize>,
    /// On the plane drawing.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub plane: Option<usize>,
    /// On the annulus drawing.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub annulus: Option<usize>,
}

/// Result of `intersect`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectJson {
    /// First root.
    pub a: Root,
    /// Second root.
    pub b: Root,
    /// Closed formula.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub formula: Option<FormulaValue>,
    /// On the plane drawing.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub plane: Option<usize>,
    /// On the annulus drawing.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub annulus: Option<usize>,
    /// Self-intersection numbers, when both roots are equal.
    #[serde(rename = "self", skip_serializing_if = "Option::is_none", default)]
    pub self_counts: Option<SelfCounts>,
}

/// Intersection numbers of `F(α)` and `F(β)`, or of `γ_α` and `γ_β`.
pub fn intersect(a: &Root, b: &Root, model: Model) -> Result<IntersectJson, CliError> {
    if a.n() != b.n() {
        return Err(atilde_core::Error::RankMismatch(a.n(), b.n()).into());
    }
    let n = a.n();
    let want = |m: Model| model == Model::All || model == m;
    let (ga, gb) = (build_gamma(a)?, build_gamma(b)?);
    let (fa, fb) = (build_f(a)?, build_f(b)?);
    let plane_layout = PlaneLayout::standard(n);
    let strip = StripLayout::default();
    let mut out = IntersectJson {
        a: a.clone(),
        b: b.clone(),
        formula: None,
        plane: None,
        annulus: None,
        self_counts: None,
    };
    let mut own = SelfCounts { formula: None, plane: None, annulus: None };
    if want(Model::Formula) {
        out.formula = Some(int_annulus(&ga, &gb)?.into());
        own.formula = Some(self_int_annulus(&ga));
    }
    if want(Model::Plane) {
        out.plane = Some(plane_pair_count(&fa, &fb, &plane_layout)?);
        own.plane = Some(plane_self_count(&fa, &plane_layout)?);
    }
    if want(Model::Annulus) {
        out.annulus = Some(annulus_pair_count(&ga, &gb, &strip)?);
        own.annulus = Some(annulus_self_count(&ga, &strip)?);
    }
    if a == b {
        out.self_counts = Some(own);
    }
    Ok(out)
}

/// Category for `ext`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    /// Modules over the path algebra.
    Module,
    /// The cluster category.
    Cluster,
}

/// Result of `ext`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtJson {
    /// First root.
    pub a: Root,
    /// Second root.
    pub b: Root,
    /// Category.
    pub category: Category,
    /// `dim Ext¹`.
    pub dimension: usize,
}

/// `dim Ext¹(M_α, M_β)` in the chosen category.
pub fn ext(a: &Root, b: &Root, category: Category) -> Result<ExtJson, CliError> {
    let dimension = match category {
        Category::Module => ext_dim_kq(a, b)?,
        Category::Cluster => ext_dim_cluster(a, b)?,
    };
    Ok(ExtJson { a: a.clone(), b: b.clone(), category, dimension })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_root;

    #[test]
    fn curve_json_shape() {
        let c = curve(&parse_root("2,2,1,1").unwrap()).unwrap();
        assert_eq!(c.word, WordJson { base: 1, letters: vec![1, 2, 3, 4] });
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.starts_with(
            r#"{"root":[2,2,1,1],"class":{"tag":"schur_left","m":1,"a":2,"b":2},"word":"#
        ));
        assert_eq!(serde_json::from_str::<CurveJson>(&text).unwrap(), c);
    }

    #[test]
    fn unsupported_prints_as_string() {
        let r = intersect(&parse_root("1,2,1").unwrap(), &parse_root("2,1,2").unwrap(), Model::All)
            .unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["formula"], "unsupported");
        assert!(v["plane"].is_number());
    }
}
