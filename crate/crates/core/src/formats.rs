//! JSON file formats.
//!
//! Writers produce canonical output: ids ascending, rationals as reduced
//! `"p/q"` strings, fixed key order. Readers reject unknown keys.
//!
//! Set-based data:
//!
//! * category: `{"objects", "morphisms": [{"id","src","tgt"}], "identity",
//!   "compose": [[f, g, f∘g]]}`, optionally with a product `"tagging":
//!   [[c, u, g, f]]` or object `"labels": [[x, y, u]]`;
//! * twisting system: `{"entries": [[f, g, u, g', f']]}`;
//! * matched pair: `{"bracket": [[x, y, z, u]], "left": [[f, g, f▷g]],
//!   "right": [[f, g, f◁g]]}`;
//! * bracket function: `{"T": [[x, y, z]], "values": [[x, y, z, u]]}`;
//! * monoid action: `{"action": [[m, g, m▷g]]}`.
//!
//! Linear data is a single document with a `"kind"` key and the header
//! `"kronecker": "first-slow"`; see [`LinearDocument`].

use std::collections::{BTreeMap, BTreeSet};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::category::{FiniteCategory, Morphism, MorphismId};
use crate::error::{malformed, Error, Result};
use crate::linear::{
    format_rational, parse_rational, FinDimAlgebra, FinDimBialgebra, FinDimCoalgebra, HModuleAction,
    LinearCategory, LinearMap, LinearSimpleTwisting, Rational,
};
use crate::product::TensorProduct;
use crate::thin::{BracketFunction, CstCategory};
use crate::twisting::{Factored, MatchedPair, TwistingSystem};

/// Value of the `"kronecker"` header: the first tensor factor is the slow
/// index.
pub const KRONECKER: &str = "first-slow";

/// Parses JSON, mapping syntax and schema errors to [`Error::Malformed`].
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub objects: usize,
    pub morphisms: Vec<Morphism>,
    pub identity: Vec<MorphismId>,
    pub compose: Vec<[MorphismId; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tagging: Option<Vec<[usize; 4]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<[usize; 3]>>,
}

impl CategoryFile {
    pub fn from_category(c: &FiniteCategory) -> Self {
        Self {
            objects: c.num_objects(),
            morphisms: c.morphisms().to_vec(),
            identity: c.identities().to_vec(),
            compose: c.compose_entries().into_iter().map(|(f, g, h)| [f, g, h]).collect(),
            tagging: None,
            labels: None,
        }
    }

    pub fn from_product(p: &TensorProduct) -> Self {
        let mut out = Self::from_category(&p.category);
        out.tagging = Some(p.tagging.iter().enumerate().map(|(c, t)| [c, t.u, t.a, t.b]).collect());
        out
    }

    pub fn from_cst(c: &CstCategory) -> Self {
        let mut out = Self::from_category(&c.category);
        out.labels = Some(c.labels.iter().map(|&(x, y, u)| [x, y, u]).collect());
        out
    }

    pub fn to_category(&self) -> Result<FiniteCategory> {
        FiniteCategory::new(
            self.objects,
            self.morphisms.clone(),
            self.identity.clone(),
            self.compose.iter().map(|&[f, g, h]| (f, g, h)).collect::<Vec<_>>(),
        )
    }

    /// The tagging as `(u, g, f)` per product morphism, if present.
    pub fn tags(&self) -> Result<Option<Vec<Factored>>> {
        let Some(tagging) = &self.tagging else { return Ok(None) };
        let mut out = vec![None; self.morphisms.len()];
        for &[c, u, g, f] in tagging {
            match out.get_mut(c) {
                Some(slot @ None) => *slot = Some(Factored::new(u, g, f)),
                Some(Some(_)) => return malformed(format!("morphism {c} tagged twice")),
                None => return malformed(format!("tagged morphism {c} out of range")),
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(c, t)| t.ok_or_else(|| Error::Malformed(format!("morphism {c} has no tag"))))
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistingFile {
    pub entries: Vec<[usize; 5]>,
}

impl TwistingFile {
    pub fn from_twisting(r: &TwistingSystem) -> Self {
        Self {
            entries: r.entries().map(|((f, g), t)| [f, g, t.u, t.a, t.b]).collect(),
        }
    }

    pub fn to_twisting(&self) -> Result<TwistingSystem> {
        let mut r = TwistingSystem::default();
        for &[f, g, u, a, b] in &self.entries {
            if r.set(f, g, Factored::new(u, a, b)).is_some() {
                return malformed(format!("duplicate twisting entry for ({f}, {g})"));
            }
        }
        Ok(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedPairFile {
    pub bracket: Vec<[usize; 4]>,
    pub left: Vec<[usize; 3]>,
    pub right: Vec<[usize; 3]>,
}

fn unique_map<K: Ord + std::fmt::Debug, V>(items: impl IntoIterator<Item = (K, V)>, what: &str) -> Result<BTreeMap<K, V>> {
    let mut out = BTreeMap::new();
    for (k, v) in items {
        if out.contains_key(&k) {
            return malformed(format!("duplicate {what} entry for {k:?}"));
        }
        out.insert(k, v);
    }
    Ok(out)
}

impl MatchedPairFile {
    pub fn from_matched_pair(mp: &MatchedPair) -> Self {
        Self {
            bracket: mp.bracket.iter().map(|(&(x, y, z), &u)| [x, y, z, u]).collect(),
            left: mp.left.iter().map(|(&(f, g), &h)| [f, g, h]).collect(),
            right: mp.right.iter().map(|(&(f, g), &h)| [f, g, h]).collect(),
        }
    }

    pub fn to_matched_pair(&self) -> Result<MatchedPair> {
        Ok(MatchedPair {
            bracket: unique_map(self.bracket.iter().map(|&[x, y, z, u]| ((x, y, z), u)), "bracket")?,
            left: unique_map(self.left.iter().map(|&[f, g, h]| ((f, g), h)), "left action")?,
            right: unique_map(self.right.iter().map(|&[f, g, h]| ((f, g), h)), "right action")?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketFile {
    #[serde(rename = "T")]
    pub t: Vec<[usize; 3]>,
    pub values: Vec<[usize; 4]>,
}

impl BracketFile {
    pub fn from_bracket(bf: &BracketFunction) -> Self {
        Self {
            t: bf.t.iter().map(|&(x, y, z)| [x, y, z]).collect(),
            values: bf.values.iter().map(|(&(x, y, z), &u)| [x, y, z, u]).collect(),
        }
    }

    pub fn to_bracket(&self) -> Result<BracketFunction> {
        let t: BTreeSet<_> = self.t.iter().map(|&[x, y, z]| (x, y, z)).collect();
        if t.len() != self.t.len() {
            return malformed("duplicate triple in T");
        }
        Ok(BracketFunction {
            t,
            values: unique_map(self.values.iter().map(|&[x, y, z, u]| ((x, y, z), u)), "bracket")?,
        })
    }
}

/// `act[m][g] = m ▷ g` for a monoid acting on a category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub action: Vec<[usize; 3]>,
}

impl ActionFile {
    pub fn to_table(&self, monoid_size: usize, morphisms: usize) -> Result<Vec<Vec<MorphismId>>> {
        let mut table = vec![vec![None; morphisms]; monoid_size];
        for &[m, g, h] in &self.action {
            if m >= monoid_size || g >= morphisms {
                return malformed(format!("action entry ({m}, {g}) out of range"));
            }
            if table[m][g].replace(h).is_some() {
                return malformed(format!("duplicate action entry ({m}, {g})"));
            }
        }
        table
            .into_iter()
            .enumerate()
            .map(|(m, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(g, h)| h.ok_or_else(|| Error::Malformed(format!("missing action entry ({m}, {g})"))))
                    .collect()
            })
            .collect()
    }
}

fn q(s: &str) -> Result<Rational> {
    parse_rational(s)
}

fn qs(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| q(s)).collect()
}

fn fmt_all<'a>(v: impl IntoIterator<Item = &'a Rational>) -> Vec<String> {
    v.into_iter().map(format_rational).collect()
}

fn mismatch<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::DimensionMismatch(msg.into()))
}

/// A dense matrix: `matrix[r][c]` is the coefficient of basis vector `r`
/// in the image of basis vector `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub matrix: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_map(m: &LinearMap) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            matrix: m.to_rows().iter().map(|r| fmt_all(r)).collect(),
        }
    }

    pub fn to_map(&self) -> Result<LinearMap> {
        if self.matrix.len() != self.rows {
            return mismatch(format!("matrix has {} rows, expected {}", self.matrix.len(), self.rows));
        }
        let rows = self.matrix.iter().map(|r| qs(r)).collect::<Result<Vec<_>>>()?;
        LinearMap::from_rows(rows, self.cols)
    }
}

fn sparse3(m: &LinearMap, split: impl Fn(usize, usize) -> (usize, usize, usize)) -> Vec<(usize, usize, usize, String)> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if *v != Rational::default() {
                let (i, j, k) = split(r, c);
                out.push((i, j, k, format_rational(v)));
            }
        }
    }
    out.sort();
    out
}

/// `mult` entries `[i, j, k, c]` mean `e_i · e_j` has coefficient `c` at `e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &FinDimAlgebra) -> Self {
        let n = a.dim();
        Self {
            dim: n,
            mult: sparse3(a.mult(), |k, c| (c / n, c % n, k)),
            unit: fmt_all((0..n).map(|i| a.unit().get(i, 0))),
        }
    }

    pub fn to_algebra(&self) -> Result<FinDimAlgebra> {
        let constants = self.mult.iter().map(|(i, j, k, c)| Ok((*i, *j, *k, q(c)?))).collect::<Result<Vec<_>>>()?;
        FinDimAlgebra::from_constants(self.dim, &constants, qs(&self.unit)?)
    }
}

/// `comult` entries `[k, i, j, c]` mean `Δ(e_k)` has coefficient `c` at
/// `e_i ⊗ e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraJson {
    pub dim: usize,
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
}

impl CoalgebraJson {
    pub fn from_coalgebra(c: &FinDimCoalgebra) -> Self {
        let n = c.dim();
        Self {
            dim: n,
            comult: sparse3(c.comult(), |r, k| (k, r / n, r % n)),
            counit: fmt_all((0..n).map(|i| c.counit().get(0, i))),
        }
    }

    pub fn to_coalgebra(&self) -> Result<FinDimCoalgebra> {
        let constants = self.comult.iter().map(|(k, i, j, c)| Ok((*k, *i, *j, q(c)?))).collect::<Result<Vec<_>>>()?;
        FinDimCoalgebra::from_constants(self.dim, &constants, qs(&self.counit)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraJson {
    pub dim: usize,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
}

impl BialgebraJson {
    pub fn from_bialgebra(h: &FinDimBialgebra) -> Self {
        let a = AlgebraJson::from_algebra(h.algebra());
        let c = CoalgebraJson::from_coalgebra(h.coalgebra());
        Self { dim: a.dim, mult: a.mult, unit: a.unit, comult: c.comult, counit: c.counit }
    }

    pub fn to_bialgebra(&self) -> Result<FinDimBialgebra> {
        let a = AlgebraJson { dim: self.dim, mult: self.mult.clone(), unit: self.unit.clone() }.to_algebra()?;
        let c = CoalgebraJson { dim: self.dim, comult: self.comult.clone(), counit: self.counit.clone() }.to_coalgebra()?;
        FinDimBialgebra::new(a, c)
    }
}

/// Five indices and a coefficient.
pub type Entry = (usize, usize, usize, usize, usize, String);

/// `compose` entries `[x, y, z, col, k, c]`: for basis vectors `e_i` of
/// `hom(x, y)` and `e_j` of `hom(y, z)` with `col = i * dim hom(y, z) + j`,
/// the composite `e_i ∘ e_j` has coefficient `c` at `e_k` of `hom(x, z)`.
/// `identity[x]` lists the coordinates of `1_x` in `hom(x, x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearCategoryJson {
    pub objects: usize,
    pub dims: Vec<Vec<usize>>,
    pub compose: Vec<Entry>,
    pub identity: Vec<Vec<String>>,
}

/// Sparse entries `[x, y, z, col, row, c]` of a family of maps indexed by
/// triples of objects.
fn sparse_family(n: usize, map: impl Fn(usize, usize, usize) -> LinearMap) -> Vec<Entry> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let m = map(x, y, z);
                for c in 0..m.cols() {
                    for r in 0..m.rows() {
                        let v = m.get(r, c);
                        if *v != Rational::default() {
                            out.push((x, y, z, c, r, format_rational(v)));
                        }
                    }
                }
            }
        }
    }
    out
}

fn fill_family(
    n: usize,
    entries: &[Entry],
    shape: impl Fn(usize, usize, usize) -> (usize, usize),
) -> Result<Vec<LinearMap>> {
    let mut maps = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (rows, cols) = shape(x, y, z);
                maps.push(LinearMap::zero(rows, cols));
            }
        }
    }
    for (x, y, z, c, r, v) in entries {
        if *x >= n || *y >= n || *z >= n {
            return malformed(format!("objects ({x}, {y}, {z}) out of range"));
        }
        let m = &mut maps[(x * n + y) * n + z];
        if *r >= m.rows() || *c >= m.cols() {
            return mismatch(format!("entry ({r}, {c}) outside the {}x{} map at ({x}, {y}, {z})", m.rows(), m.cols()));
        }
        m.add_at(*r, *c, &q(v)?);
    }
    Ok(maps)
}

impl LinearCategoryJson {
    pub fn from_category(c: &LinearCategory) -> Self {
        let n = c.num_objects();
        Self {
            objects: n,
            dims: c.dims(),
            compose: sparse_family(n, |x, y, z| c.compose(x, y, z).clone()),
            identity: (0..n).map(|x| fmt_all((0..c.dim(x, x)).map(|i| c.identity(x).get(i, 0)))).collect(),
        }
    }

    pub fn to_category(&self) -> Result<LinearCategory> {
        let n = self.objects;
        if self.dims.len() != n || self.dims.iter().any(|r| r.len() != n) || self.identity.len() != n {
            return mismatch(format!("dims and identity must cover {n} objects"));
        }
        let d = |x: usize, y: usize| self.dims[x][y];
        let compose = fill_family(n, &self.compose, |x, y, z| (d(x, z), d(x, y) * d(y, z)))?;
        let identity = self
            .identity
            .iter()
            .map(|v| Ok(LinearMap::column(qs(v)?)))
            .collect::<Result<Vec<_>>>()?;
        LinearCategory::new(self.dims.clone(), compose, identity)
    }
}

/// `action` entries `[x, y, h, i, k, c]`: `e_h · e_i` has coefficient `c`
/// at `e_k` in `hom(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleCategoryJson {
    pub bialgebra: BialgebraJson,
    pub category: LinearCategoryJson,
    pub action: Vec<Entry>,
}

impl ModuleCategoryJson {
    pub fn from_action(m: &HModuleAction) -> Self {
        let n = m.category.num_objects();
        let mut action = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let a = m.action(x, y);
                let d = m.category.dim(x, y);
                for col in 0..a.cols() {
                    for k in 0..a.rows() {
                        let v = a.get(k, col);
                        if *v != Rational::default() {
                            action.push((x, y, col / d, col % d, k, format_rational(v)));
                        }
                    }
                }
            }
        }
        Self {
            bialgebra: BialgebraJson::from_bialgebra(&m.h),
            category: LinearCategoryJson::from_category(&m.category),
            action,
        }
    }

    pub fn to_action(&self) -> Result<HModuleAction> {
        let h = self.bialgebra.to_bialgebra()?;
        let category = self.category.to_category()?;
        let n = category.num_objects();
        let nh = h.dim();
        let mut action: Vec<LinearMap> = (0..n * n)
            .map(|i| {
                let d = category.dim(i / n, i % n);
                LinearMap::zero(d, nh * d)
            })
            .collect();
        for (x, y, hi, i, k, v) in &self.action {
            if *x >= n || *y >= n {
                return malformed(format!("objects ({x}, {y}) out of range"));
            }
            let d = category.dim(*x, *y);
            if *hi >= nh || *i >= d || *k >= d {
                return mismatch(format!("action entry ({hi}, {i}, {k}) out of range on hom({x}, {y})"));
            }
            action[x * n + y].add_at(*k, hi * d + i, &q(v)?);
        }
        Ok(HModuleAction { h, category, action })
    }
}

/// `R: B ⊗ A -> A ⊗ B` between two algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistingMapJson {
    pub a: AlgebraJson,
    pub b: AlgebraJson,
    pub r: MatrixJson,
}

/// `tilde` entries `[x, y, z, col, row, c]` of the maps
/// `hom_B(x, y) ⊗ hom_A(y, z) -> hom_A(x, u) ⊗ hom_B(u, z)`;
/// `bracket` lists `[x, y, z, u]` for every triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearSimpleTwistingJson {
    pub a: LinearCategoryJson,
    pub b: LinearCategoryJson,
    pub bracket: Vec<[usize; 4]>,
    pub tilde: Vec<Entry>,
}

impl LinearSimpleTwistingJson {
    pub fn from_parts(a: &LinearCategory, b: &LinearCategory, st: &LinearSimpleTwisting) -> Self {
        let n = a.num_objects();
        let mut bracket = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    bracket.push([x, y, z, st.bracket[(x * n + y) * n + z]]);
                }
            }
        }
        Self {
            a: LinearCategoryJson::from_category(a),
            b: LinearCategoryJson::from_category(b),
            bracket,
            tilde: sparse_family(n, |x, y, z| st.tilde[(x * n + y) * n + z].clone()),
        }
    }

    pub fn to_parts(&self) -> Result<(LinearCategory, LinearCategory, LinearSimpleTwisting)> {
        let a = self.a.to_category()?;
        let b = self.b.to_category()?;
        let n = a.num_objects();
        if b.num_objects() != n {
            return mismatch("the two categories must have the same objects");
        }
        let mut bracket = vec![None; n * n * n];
        for &[x, y, z, u] in &self.bracket {
            if x >= n || y >= n || z >= n || u >= n {
                return malformed(format!("bracket entry ({x}, {y}, {z}, {u}) out of range"));
            }
            if bracket[(x * n + y) * n + z].replace(u).is_some() {
                return malformed(format!("duplicate bracket entry for ({x}, {y}, {z})"));
            }
        }
        let bracket = bracket
            .into_iter()
            .enumerate()
            .map(|(i, u)| u.ok_or_else(|| Error::Malformed(format!("bracket missing for triple {:?}", (i / (n * n), i / n % n, i % n)))))
            .collect::<Result<Vec<_>>>()?;
        let tilde = fill_family(n, &self.tilde, |x, y, z| {
            let u = bracket[(x * n + y) * n + z];
            (a.dim(x, u) * b.dim(u, z), b.dim(x, y) * a.dim(y, z))
        })?;
        Ok((a, b, LinearSimpleTwisting { bracket, tilde }))
    }
}

/// Left action `B ⊗ A -> A` and right action `B ⊗ A -> B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraMatchedPairJson {
    pub a: BialgebraJson,
    pub b: BialgebraJson,
    pub left: MatrixJson,
    pub right: MatrixJson,
}

/// A linear map `C -> D₁ ⊗ D₂`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraMapJson {
    pub source: CoalgebraJson,
    pub first: CoalgebraJson,
    pub second: CoalgebraJson,
    pub map: MatrixJson,
}

/// Maps `C -> D₁` and `C -> D₂`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraMapPairJson {
    pub source: CoalgebraJson,
    pub first: CoalgebraJson,
    pub second: CoalgebraJson,
    pub first_map: MatrixJson,
    pub second_map: MatrixJson,
}

/// Body of a linear document, selected by its `"kind"` key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LinearBody {
    Algebra(AlgebraJson),
    Coalgebra(CoalgebraJson),
    Bialgebra(BialgebraJson),
    LinearCategory(LinearCategoryJson),
    ModuleCategory(ModuleCategoryJson),
    TwistingMap(TwistingMapJson),
    LinearSimpleTwisting(LinearSimpleTwistingJson),
    BialgebraMatchedPair(BialgebraMatchedPairJson),
    CoalgebraMap(CoalgebraMapJson),
    CoalgebraMapPair(CoalgebraMapPairJson),
}

impl LinearBody {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Algebra(_) => "algebra",
            Self::Coalgebra(_) => "coalgebra",
            Self::Bialgebra(_) => "bialgebra",
            Self::LinearCategory(_) => "linear-category",
            Self::ModuleCategory(_) => "module-category",
            Self::TwistingMap(_) => "twisting-map",
            Self::LinearSimpleTwisting(_) => "linear-simple-twisting",
            Self::BialgebraMatchedPair(_) => "bialgebra-matched-pair",
            Self::CoalgebraMap(_) => "coalgebra-map",
            Self::CoalgebraMapPair(_) => "coalgebra-map-pair",
        }
    }
}

/// A linear document: a [`LinearBody`] plus the `"kronecker"` header.
/// The header is optional on input but must read `"first-slow"` when
/// present; it is always written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearDocument(pub LinearBody);

impl LinearDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut value: serde_json::Value = from_json(text)?;
        let obj = value
            .as_object_mut()
            .ok_or_else(|| Error::Malformed("linear document must be a JSON object".into()))?;
        if let Some(k) = obj.remove("kronecker") {
            if k != serde_json::Value::String(KRONECKER.into()) {
                return malformed(format!("unsupported kronecker convention {k}"));
            }
        }
        serde_json::from_value(value).map(Self).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(&self.0).expect("serializable");
        value
            .as_object_mut()
            .expect("tagged enum serializes to an object")
            .insert("kronecker".into(), KRONECKER.into());
        to_json(&value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational;
    use crate::samples::{cyclic_table, two_object_groupoid};

    #[test]
    fn category_round_trip() {
        let g = two_object_groupoid();
        let file = CategoryFile::from_category(&g);
        let text = to_json(&file);
        let back: CategoryFile = from_json(&text).unwrap();
        assert_eq!(back.to_category().unwrap(), g);
        assert!(!text.contains("tagging"));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = r#"{"objects":1,"morphisms":[{"id":0,"src":0,"tgt":0}],"identity":[0],"compose":[[0,0,0]],"extra":1}"#;
        assert!(matches!(from_json::<CategoryFile>(text), Err(Error::Malformed(_))));
        let text = r#"{"kind":"algebra","dim":1,"mult":[[0,0,0,"1/1"]],"unit":["1"],"extra":0}"#;
        assert!(LinearDocument::parse(text).is_err());
        let text = r#"{"kind":"algebra","kronecker":"last-slow","dim":1,"mult":[],"unit":["1"]}"#;
        assert!(LinearDocument::parse(text).is_err());
    }

    #[test]
    fn linear_documents_round_trip() {
        let h = FinDimBialgebra::group_algebra(&cyclic_table(3), 0).unwrap();
        let doc = LinearDocument(LinearBody::Bialgebra(BialgebraJson::from_bialgebra(&h)));
        let text = doc.to_json();
        assert!(text.contains("\"kronecker\": \"first-slow\""));
        let back = LinearDocument::parse(&text).unwrap();
        assert_eq!(back, doc);
        let LinearBody::Bialgebra(b) = back.0 else { panic!() };
        assert_eq!(b.to_bialgebra().unwrap(), h);

        let a = FinDimAlgebra::truncated_polynomial(2);
        let mut act = LinearMap::zero(2, 4);
        act.set(0, 0, rational(1, 1));
        act.set(1, 1, rational(1, 1));
        act.set(0, 2, rational(1, 1));
        act.set(1, 3, rational(-1, 1));
        let h2 = FinDimBialgebra::group_algebra(&cyclic_table(2), 0).unwrap();
        let m = HModuleAction { h: h2, category: LinearCategory::from_algebra(&a), action: vec![act] };
        let json = ModuleCategoryJson::from_action(&m);
        assert_eq!(json.to_action().unwrap(), m);
        let (hcat, st) = crate::linear::smash_twisting(&m).unwrap();
        let json = LinearSimpleTwistingJson::from_parts(&m.category, &hcat, &st);
        let (a2, b2, st2) = json.to_parts().unwrap();
        assert_eq!((a2, b2, st2), (m.category.clone(), hcat, st));
    }

    #[test]
    fn rationals_are_canonical() {
        let m = MatrixJson { rows: 1, cols: 2, matrix: vec![vec!["2/4".into(), "-3".into()]] };
        let back = MatrixJson::from_map(&m.to_map().unwrap());
        assert_eq!(back.matrix, vec![vec!["1/2".to_string(), "-3/1".to_string()]]);
        let bad = MatrixJson { rows: 1, cols: 1, matrix: vec![vec!["1/0".into()]] };
        assert!(matches!(bad.to_map(), Err(Error::Malformed(_))));
    }
}
