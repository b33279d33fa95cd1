//! Twisting systems between thin categories, described by a bracket
//! function `|xyz|` on the set `T` of triples `(x, y, z)` with
//! `B(x, y) × A(y, z)` nonempty.
//!
//! Between thin categories every twisting system is simple and is
//! determined by its bracket on `T`; values off `T` are never stored.

use std::collections::{BTreeMap, BTreeSet};

use crate::category::{FiniteCategory, Functor, Morphism, ObjectId};
use crate::error::{malformed, Error, Result};
use crate::product::{twisted_tensor_product, TensorProduct};
use crate::report::ValidationReport;
use crate::twisting::{nonempty_triples, Factored, Triple, TwistingSystem};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct BracketFunction {
    pub t: BTreeSet<Triple>,
    pub values: BTreeMap<Triple, ObjectId>,
}

impl BracketFunction {
    pub fn get(&self, x: ObjectId, y: ObjectId, z: ObjectId) -> Option<ObjectId> {
        self.values.get(&(x, y, z)).copied()
    }
}

fn require_thin(a: &FiniteCategory, b: &FiniteCategory) -> Result<()> {
    if a.num_objects() != b.num_objects() {
        return malformed("the two categories must share their object set");
    }
    if !a.is_thin() || !b.is_thin() {
        return Err(Error::NotThin);
    }
    Ok(())
}

/// Triples `(x, y, z)` with `B(x, y)` and `A(y, z)` both nonempty.
pub fn compute_t(a: &FiniteCategory, b: &FiniteCategory) -> Result<BTreeSet<Triple>> {
    require_thin(a, b)?;
    Ok(nonempty_triples(a, b))
}

/// Checks the bracket conditions on `T`:
///
/// * `nonempty`: `A(x, |xyz|) × B(|xyz|, z)` is nonempty;
/// * `bracket |xy|yzt||=|xzt|` whenever `(y, z, t)` and `(x, y, |yzt|)` are in `T`;
/// * `bracket ||xyz|zt|=|xyt|` whenever `(x, y, z)` and `(|xyz|, z, t)` are in `T`;
/// * `bracket |xxy|=y` and `bracket |xyy|=x` on `T`.
///
/// A value map that is not defined exactly on `T`, or a `T` that differs
/// from [`compute_t`], is malformed.
pub fn validate_bracket(
    a: &FiniteCategory,
    b: &FiniteCategory,
    bf: &BracketFunction,
) -> Result<ValidationReport> {
    let t = compute_t(a, b)?;
    if bf.t != t {
        return malformed("T does not match the triples with nonempty B(x, y) × A(y, z)");
    }
    if let Some(k) = bf.values.keys().find(|k| !t.contains(k)) {
        return malformed(format!("bracket value given outside T at {k:?}"));
    }
    if let Some(k) = t.iter().find(|k| !bf.values.contains_key(k)) {
        return malformed(format!("bracket undefined at {k:?}"));
    }
    let n = a.num_objects();
    if let Some((k, u)) = bf.values.iter().find(|(_, &u)| u >= n) {
        return malformed(format!("bracket value {u} at {k:?} out of range"));
    }

    let mut report = ValidationReport::new();
    let br = |x, y, z| bf.values[&(x, y, z)];
    for (&(x, y, z), &u) in &bf.values {
        if a.hom(x, u).is_empty() || b.hom(u, z).is_empty() {
            report.push("nonempty", vec![x, y, z], format!("A({x}, {u}) × B({u}, {z}) is empty"));
        }
    }
    for &(y, z, tt) in &t {
        let v = br(y, z, tt);
        for x in 0..n {
            if t.contains(&(x, y, v)) && br(x, y, v) != br(x, z, tt) {
                report.push(
                    "bracket |xy|yzt||=|xzt|",
                    vec![x, y, z, tt],
                    format!("|{x}{y}|{y}{z}{tt}|| = {} but |{x}{z}{tt}| = {}", br(x, y, v), br(x, z, tt)),
                );
            }
        }
    }
    for &(x, y, z) in &t {
        let w = br(x, y, z);
        for tt in 0..n {
            if t.contains(&(w, z, tt)) && br(w, z, tt) != br(x, y, tt) {
                report.push(
                    "bracket ||xyz|zt|=|xyt|",
                    vec![x, y, z, tt],
                    format!("||{x}{y}{z}|{z}{tt}| = {} but |{x}{y}{tt}| = {}", br(w, z, tt), br(x, y, tt)),
                );
            }
        }
    }
    for &(x, y, z) in &t {
        if x == y && br(x, y, z) != z {
            report.push("bracket |xxy|=y", vec![x, z], format!("|{x}{x}{z}| = {}", br(x, y, z)));
        }
        if y == z && br(x, y, z) != x {
            report.push("bracket |xyy|=x", vec![x, y], format!("|{x}{y}{y}| = {}", br(x, y, z)));
        }
    }
    Ok(report)
}

struct BracketProblem {
    triples: Vec<Triple>,
    index: BTreeMap<Triple, usize>,
    candidates: Vec<Vec<ObjectId>>,
    n: usize,
}

impl BracketProblem {
    fn new(a: &FiniteCategory, b: &FiniteCategory, t: &BTreeSet<Triple>) -> Self {
        let n = a.num_objects();
        let triples: Vec<Triple> = t.iter().copied().collect();
        let index = triples.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let candidates = triples
            .iter()
            .map(|&(x, _, z)| (0..n).filter(|&u| !a.hom(x, u).is_empty() && !b.hom(u, z).is_empty()).collect())
            .collect();
        Self { triples, index, candidates, n }
    }

    /// Values fixed by `|xxy| = y` and `|xyy| = x`; `None` if they clash or
    /// violate nonemptiness.
    fn forced(&self) -> Option<Vec<Option<ObjectId>>> {
        let mut out = vec![None; self.triples.len()];
        for (i, &(x, y, z)) in self.triples.iter().enumerate() {
            let mut value = None;
            if x == y {
                value = Some(z);
            }
            if y == z {
                if value.is_some_and(|v| v != x) {
                    return None;
                }
                value = Some(x);
            }
            if let Some(v) = value {
                if !self.candidates[i].contains(&v) {
                    return None;
                }
                out[i] = Some(v);
            }
        }
        Some(out)
    }

    fn bound(&self, assignment: &[Option<ObjectId>]) -> u128 {
        assignment
            .iter()
            .zip(&self.candidates)
            .filter(|(v, _)| v.is_none())
            .fold(1u128, |acc, (_, c)| acc.saturating_mul(c.len() as u128))
    }

    fn unify(&self, assignment: &mut [Option<ObjectId>], i: usize, j: usize, changed: &mut bool) -> bool {
        match (assignment[i], assignment[j]) {
            (Some(p), Some(q)) => p == q,
            (Some(p), None) => {
                if !self.candidates[j].contains(&p) {
                    return false;
                }
                assignment[j] = Some(p);
                *changed = true;
                true
            }
            (None, Some(q)) => {
                if !self.candidates[i].contains(&q) {
                    return false;
                }
                assignment[i] = Some(q);
                *changed = true;
                true
            }
            (None, None) => true,
        }
    }

    /// Equalities from the two composition conditions, to a fixpoint.
    fn propagate(&self, assignment: &mut [Option<ObjectId>]) -> bool {
        loop {
            let mut changed = false;
            for (i, &(y, z, t)) in self.triples.iter().enumerate() {
                let Some(v) = assignment[i] else { continue };
                for x in 0..self.n {
                    if let Some(&lhs) = self.index.get(&(x, y, v)) {
                        let rhs = self.index[&(x, z, t)];
                        if !self.unify(assignment, lhs, rhs, &mut changed) {
                            return false;
                        }
                    }
                }
            }
            for (i, &(x, y, z)) in self.triples.iter().enumerate() {
                let Some(w) = assignment[i] else { continue };
                for t in 0..self.n {
                    if let Some(&lhs) = self.index.get(&(w, z, t)) {
                        let rhs = self.index[&(x, y, t)];
                        if !self.unify(assignment, lhs, rhs, &mut changed) {
                            return false;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&self, mut assignment: Vec<Option<ObjectId>>, t: &BTreeSet<Triple>, out: &mut Vec<BracketFunction>) {
        if !self.propagate(&mut assignment) {
            return;
        }
        match assignment.iter().position(Option::is_none) {
            None => out.push(BracketFunction {
                t: t.clone(),
                values: self
                    .triples
                    .iter()
                    .zip(&assignment)
                    .map(|(&k, v)| (k, v.expect("complete")))
                    .collect(),
            }),
            Some(next) => {
                for &u in &self.candidates[next] {
                    let mut branch = assignment.clone();
                    branch[next] = Some(u);
                    self.search(branch, t, out);
                }
            }
        }
    }
}

/// Product of candidate-set sizes over the triples of `T` not fixed by
/// `|xxy| = y` and `|xyy| = x`.
pub fn bracket_space_bound(a: &FiniteCategory, b: &FiniteCategory) -> Result<u128> {
    let t = compute_t(a, b)?;
    let problem = BracketProblem::new(a, b, &t);
    Ok(problem.forced().map_or(0, |start| problem.bound(&start)))
}

/// Every valid bracket function on `T`, ordered by its value vector.
pub fn enumerate_brackets(a: &FiniteCategory, b: &FiniteCategory, limit: u128) -> Result<Vec<BracketFunction>> {
    let t = compute_t(a, b)?;
    let problem = BracketProblem::new(a, b, &t);
    let Some(start) = problem.forced() else {
        return Ok(Vec::new());
    };
    let bound = problem.bound(&start);
    if bound > limit {
        return Err(Error::SpaceTooLarge { bound, limit });
    }
    let mut out = Vec::new();
    problem.search(start, &t, &mut out);
    out.sort();
    Ok(out)
}

/// `R(f, g) = (|xyz|, g', f')` with `g'`, `f'` the unique morphisms of
/// `A(x, |xyz|)` and `B(|xyz|, z)`.
pub fn bracket_to_twisting(a: &FiniteCategory, b: &FiniteCategory, bf: &BracketFunction) -> Result<TwistingSystem> {
    require_thin(a, b)?;
    let mut entries = Vec::new();
    for (f, g) in crate::twisting::composable_pairs(a, b) {
        let key = (b.tgt(f), b.src(f), a.src(g));
        let Some(u) = bf.get(key.0, key.1, key.2) else {
            return malformed(format!("bracket undefined at {key:?}"));
        };
        let (Some(&ga), Some(&fb)) = (a.hom(key.0, u).first(), b.hom(u, key.2).first()) else {
            return malformed(format!("bracket value {u} at {key:?} leaves an empty hom-set"));
        };
        entries.push(((f, g), Factored::new(u, ga, fb)));
    }
    Ok(TwistingSystem::new(entries))
}

/// Reads the bracket off the summands of `R`.
pub fn twisting_to_bracket(a: &FiniteCategory, b: &FiniteCategory, r: &TwistingSystem) -> Result<BracketFunction> {
    let t = compute_t(a, b)?;
    let mut values = BTreeMap::new();
    for ((f, g), e) in r.entries() {
        if f >= b.num_morphisms() || g >= a.num_morphisms() {
            return malformed(format!("entry ({f}, {g}) out of range"));
        }
        values.insert((b.tgt(f), b.src(f), a.src(g)), e.u);
    }
    if values.keys().ne(t.iter()) {
        return malformed("twisting system is not defined on exactly the composable pairs");
    }
    Ok(BracketFunction { t, values })
}

/// `C(S, T, |···|)` and its isomorphism onto `A ⊗_R B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CstCategory {
    pub category: FiniteCategory,
    /// `labels[id] = (x, y, u)`: the morphism `u ∈ hom(x, y)`
    pub labels: Vec<(ObjectId, ObjectId, ObjectId)>,
    pub product: TensorProduct,
    /// from `category` to `product.category`
    pub iso: Functor,
}

/// The category with `hom(x, y) = {u | A(x, u), B(u, y) nonempty}`,
/// identity `x ∈ hom(x, x)` and composition `u ∘ v = |uyv|`.
///
/// The bracket is validated first. The isomorphism to the twisted tensor
/// product of the corresponding system is built and checked.
pub fn construct_cst(a: &FiniteCategory, b: &FiniteCategory, bf: &BracketFunction) -> Result<CstCategory> {
    validate_bracket(a, b, bf)?.into_result()?;
    let n = a.num_objects();
    let mut labels = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for u in 0..n {
                if !a.hom(x, u).is_empty() && !b.hom(u, y).is_empty() {
                    labels.push((x, y, u));
                }
            }
        }
    }
    let id_of = |label: (ObjectId, ObjectId, ObjectId)| labels.binary_search(&label).expect("label");
    let morphisms = labels
        .iter()
        .enumerate()
        .map(|(id, &(x, y, _))| Morphism { id, src: y, tgt: x })
        .collect();
    let identity = (0..n).map(|x| id_of((x, x, x))).collect();
    let mut compose = Vec::new();
    for (i, &(x, y, u)) in labels.iter().enumerate() {
        for (j, &(y2, z, v)) in labels.iter().enumerate() {
            if y2 == y {
                let w = bf.get(u, y, v).expect("(u, y, v) lies in T");
                compose.push((i, j, id_of((x, z, w))));
            }
        }
    }
    let category = FiniteCategory::new(n, morphisms, identity, compose)?;
    category.validate().into_result()?;

    let product = twisted_tensor_product(a, b, &bracket_to_twisting(a, b, bf)?)?;
    let iso = Functor {
        objects: (0..n).collect(),
        morphisms: labels
            .iter()
            .map(|&(x, y, u)| {
                let tag = Factored::new(u, a.hom(x, u)[0], b.hom(u, y)[0]);
                product.id_of(tag).expect("product morphism")
            })
            .collect(),
    };
    let report = iso.validate(&category, &product.category);
    if !iso.is_isomorphism(&category, &product.category) {
        return Err(Error::Invalid(report));
    }
    Ok(CstCategory { category, labels, product, iso })
}

/// Poset form of the default bracket for two equal orders: `|xyz| = z`
/// if `y ≠ z`, else `x`. Restricted to `T`.
pub fn default_poset_bracket(a: &FiniteCategory, b: &FiniteCategory) -> Result<BracketFunction> {
    let t = compute_t(a, b)?;
    let values = t.iter().map(|&(x, y, z)| ((x, y, z), if y != z { z } else { x })).collect();
    Ok(BracketFunction { t, values })
}
