//! Twisting systems between two finite categories `B` and `A` on the same
//! object set, stored element by element.
//!
//! For `f` in `B(x, y)` and `g` in `A(y, z)` an entry `R(f, g)` is a triple
//! `(u, g', f')` with `g'` in `A(x, u)` and `f'` in `B(u, z)`. Each entry
//! picks its own summand `u`, so systems that are not simple are
//! representable; simplicity is a checked property.

mod enumerate;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::category::{FiniteCategory, MorphismId, ObjectId};
use crate::error::{malformed, Result};
use crate::report::ValidationReport;

pub use enumerate::{enumerate_twisting_systems, search_space_bound, DEFAULT_LIMIT};

/// A morphism written as `a ∘ b` through the object `u`, with `a` taken from
/// the first factor `A` (so `a ∈ A(x, u)`) and `b` from the second factor
/// `B` (so `b ∈ B(u, z)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factored {
    pub u: ObjectId,
    pub a: MorphismId,
    pub b: MorphismId,
}

impl Factored {
    pub fn new(u: ObjectId, a: MorphismId, b: MorphismId) -> Self {
        Self { u, a, b }
    }
}

/// Key `(f, g)` with `f ∈ B`, `g ∈ A`, `src(f) = tgt(g)`.
pub type Pair = (MorphismId, MorphismId);
/// Object triple `(x, y, z)`.
pub type Triple = (ObjectId, ObjectId, ObjectId);

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistingSystem {
    entries: BTreeMap<Pair, Factored>,
}

impl TwistingSystem {
    pub fn new(entries: impl IntoIterator<Item = (Pair, Factored)>) -> Self {
        Self {
            entries: entries.into_iter().collect(),
        }
    }

    pub fn get(&self, f: MorphismId, g: MorphismId) -> Option<Factored> {
        self.entries.get(&(f, g)).copied()
    }

    /// Entries in ascending `(f, g)` order.
    pub fn entries(&self) -> impl Iterator<Item = (Pair, Factored)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Replaces one entry, returning the old value. Used to build corrupted
    /// systems in tests and by callers that patch data.
    pub fn set(&mut self, f: MorphismId, g: MorphismId, value: Factored) -> Option<Factored> {
        self.entries.insert((f, g), value)
    }
}

/// All triples `(x, y, z)` with `B(x, y) × A(y, z)` nonempty, ascending.
pub fn nonempty_triples(a: &FiniteCategory, b: &FiniteCategory) -> BTreeSet<Triple> {
    let n = a.num_objects();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            if b.hom(x, y).is_empty() {
                continue;
            }
            for z in 0..n {
                if !a.hom(y, z).is_empty() {
                    out.insert((x, y, z));
                }
            }
        }
    }
    out
}

/// Composable pairs `(f, g)`, `f ∈ B`, `g ∈ A`, ascending.
pub fn composable_pairs(a: &FiniteCategory, b: &FiniteCategory) -> Vec<Pair> {
    let mut out = Vec::new();
    for f in 0..b.num_morphisms() {
        for g in 0..a.num_morphisms() {
            if b.src(f) == a.tgt(g) {
                out.push((f, g));
            }
        }
    }
    out
}

fn object_counts_match(a: &FiniteCategory, b: &FiniteCategory, report: &mut ValidationReport) -> bool {
    if a.num_objects() != b.num_objects() {
        report.push(
            "object-count",
            vec![a.num_objects(), b.num_objects()],
            "the two categories must share their object set",
        );
        return false;
    }
    true
}

/// Checks the four defining laws of a twisting system element by element.
///
/// * `compose-b`: `R(f ∘ f', g) = (v, g₂, f₂ ∘ f₁)` where
///   `(u, g₁, f₁) = R(f', g)` and `(v, g₂, f₂) = R(f, g₁)`;
/// * `compose-a`: `R(f, g ∘ g') = (w, g₁ ∘ g₂, f₂)` where
///   `(u, g₁, f₁) = R(f, g)` and `(w, g₂, f₂) = R(f₁, g')`;
/// * `unit-b`: `R(1_x, g) = (y, g, 1_y)` for `g ∈ A(x, y)`;
/// * `unit-a`: `R(f, 1_y) = (x, 1_x, f)` for `f ∈ B(x, y)`.
///
/// Entry typing is checked first; if it fails only the typing violations
/// are returned.
pub fn validate_twisting_system(
    a: &FiniteCategory,
    b: &FiniteCategory,
    r: &TwistingSystem,
) -> ValidationReport {
    let mut report = ValidationReport::new();
    if !object_counts_match(a, b, &mut report) {
        return report;
    }
    let n = a.num_objects();

    for ((f, g), e) in r.entries() {
        if f >= b.num_morphisms() || g >= a.num_morphisms() || b.src(f) != a.tgt(g) {
            report.push("entry-typing", vec![f, g], format!("entry for non-composable pair ({f}, {g})"));
            continue;
        }
        let (x, z) = (b.tgt(f), a.src(g));
        let typed = e.u < n
            && e.a < a.num_morphisms()
            && e.b < b.num_morphisms()
            && a.tgt(e.a) == x
            && a.src(e.a) == e.u
            && b.tgt(e.b) == e.u
            && b.src(e.b) == z;
        if !typed {
            report.push(
                "entry-typing",
                vec![f, g],
                format!("R({f}, {g}) = ({}, {}, {}) does not lie in A({x}, u) × B(u, {z})", e.u, e.a, e.b),
            );
        }
    }
    for (f, g) in composable_pairs(a, b) {
        if r.get(f, g).is_none() {
            report.push("missing-entry", vec![f, g], format!("R({f}, {g}) undefined"));
        }
    }
    if !report.is_valid() {
        return report;
    }
    let at = |f, g| r.get(f, g).expect("typed and total");

    for f in 0..b.num_morphisms() {
        for &f2 in b_into(b, b.src(f)) {
            let ff2 = b.compose(f, f2).expect("composable");
            for g in a_into(a, b.src(f2)) {
                let inner = at(f2, g);
                let outer = at(f, inner.a);
                let expected = Factored::new(outer.u, outer.a, b.compose(outer.b, inner.b).expect("typed"));
                let actual = at(ff2, g);
                if actual != expected {
                    report.push(
                        "compose-b",
                        vec![f, f2, g],
                        format!("R({f} ∘ {f2}, {g}) = {actual:?}, diagram gives {expected:?}"),
                    );
                }
            }
        }
    }

    for f in 0..b.num_morphisms() {
        for g in a_into(a, b.src(f)) {
            let first = at(f, g);
            for g2 in a_into(a, a.src(g)) {
                let second = at(first.b, g2);
                let expected = Factored::new(second.u, a.compose(first.a, second.a).expect("typed"), second.b);
                let actual = at(f, a.compose(g, g2).expect("composable"));
                if actual != expected {
                    report.push(
                        "compose-a",
                        vec![f, g, g2],
                        format!("R({f}, {g} ∘ {g2}) = {actual:?}, diagram gives {expected:?}"),
                    );
                }
            }
        }
    }

    for g in 0..a.num_morphisms() {
        let (x, y) = (a.tgt(g), a.src(g));
        let expected = Factored::new(y, g, b.identity(y));
        let actual = at(b.identity(x), g);
        if actual != expected {
            report.push("unit-b", vec![g], format!("R(1_{x}, {g}) = {actual:?}, expected {expected:?}"));
        }
    }
    for f in 0..b.num_morphisms() {
        let (x, y) = (b.tgt(f), b.src(f));
        let expected = Factored::new(x, a.identity(x), f);
        let actual = at(f, a.identity(y));
        if actual != expected {
            report.push("unit-a", vec![f], format!("R({f}, 1_{y}) = {actual:?}, expected {expected:?}"));
        }
    }
    report
}

fn b_into(b: &FiniteCategory, x: ObjectId) -> impl Iterator<Item = &MorphismId> {
    (0..b.num_objects()).flat_map(move |y| b.hom(x, y).iter())
}

fn a_into(a: &FiniteCategory, x: ObjectId) -> impl Iterator<Item = MorphismId> + '_ {
    (0..a.num_objects()).flat_map(move |y| a.hom(x, y).iter().copied())
}

/// A twisting system whose entries over each triple `(x, y, z)` all land
/// in the single summand `bracket(x, y, z)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimpleTwisting {
    pub bracket: BTreeMap<Triple, ObjectId>,
    /// `(f, g) ↦ (g', f')`
    pub tilde: BTreeMap<Pair, (MorphismId, MorphismId)>,
}

impl SimpleTwisting {
    /// Forgets simplicity: every entry becomes `(bracket(x, y, z), g', f')`.
    pub fn to_twisting(&self, a: &FiniteCategory, b: &FiniteCategory) -> Result<TwistingSystem> {
        let mut entries = Vec::with_capacity(self.tilde.len());
        for (&(f, g), &(ga, fb)) in &self.tilde {
            if f >= b.num_morphisms() || g >= a.num_morphisms() {
                return malformed(format!("tilde entry ({f}, {g}) out of range"));
            }
            let key = (b.tgt(f), b.src(f), a.src(g));
            let Some(&u) = self.bracket.get(&key) else {
                return malformed(format!("bracket undefined on {key:?}"));
            };
            entries.push(((f, g), Factored::new(u, ga, fb)));
        }
        Ok(TwistingSystem::new(entries))
    }

    pub fn from_matched_pair(mp: &MatchedPair) -> Result<Self> {
        if !mp.left.keys().eq(mp.right.keys()) {
            return malformed("left and right actions are defined on different pairs");
        }
        let tilde = mp
            .left
            .iter()
            .zip(mp.right.values())
            .map(|((&k, &ga), &fb)| (k, (ga, fb)))
            .collect();
        Ok(Self {
            bracket: mp.bracket.clone(),
            tilde,
        })
    }

    pub fn to_matched_pair(&self) -> MatchedPair {
        MatchedPair {
            bracket: self.bracket.clone(),
            left: self.tilde.iter().map(|(&k, &(ga, _))| (k, ga)).collect(),
            right: self.tilde.iter().map(|(&k, &(_, fb))| (k, fb)).collect(),
        }
    }
}

/// Returns the simple form of `r` if every triple's entries share a summand
/// and that summand's hom-product is nonempty.
pub fn extract_simple(
    a: &FiniteCategory,
    b: &FiniteCategory,
    r: &TwistingSystem,
) -> Option<SimpleTwisting> {
    let mut bracket = BTreeMap::new();
    let mut tilde = BTreeMap::new();
    for ((f, g), e) in r.entries() {
        let key = (b.tgt(f), b.src(f), a.src(g));
        if *bracket.entry(key).or_insert(e.u) != e.u {
            return None;
        }
        tilde.insert((f, g), (e.a, e.b));
    }
    for (&(x, _, z), &u) in &bracket {
        if a.hom(x, u).is_empty() || b.hom(u, z).is_empty() {
            return None;
        }
    }
    Some(SimpleTwisting { bracket, tilde })
}

/// Left action `f ▷ g ∈ A(x, |xyz|)` and right action `f ◁ g ∈ B(|xyz|, z)`
/// with their bracket function.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatchedPair {
    pub bracket: BTreeMap<Triple, ObjectId>,
    pub left: BTreeMap<Pair, MorphismId>,
    pub right: BTreeMap<Pair, MorphismId>,
}

impl MatchedPair {
    pub fn act_left(&self, f: MorphismId, g: MorphismId) -> Option<MorphismId> {
        self.left.get(&(f, g)).copied()
    }

    pub fn act_right(&self, f: MorphismId, g: MorphismId) -> Option<MorphismId> {
        self.right.get(&(f, g)).copied()
    }

    pub fn bracket(&self, x: ObjectId, y: ObjectId, z: ObjectId) -> Option<ObjectId> {
        self.bracket.get(&(x, y, z)).copied()
    }
}

pub fn matched_pair_to_twisting(mp: &MatchedPair) -> Result<SimpleTwisting> {
    SimpleTwisting::from_matched_pair(mp)
}

pub fn twisting_to_matched_pair(st: &SimpleTwisting) -> MatchedPair {
    st.to_matched_pair()
}

/// Checks the five matched-pair conditions over `Set`:
///
/// * `nonempty`: `A(x, |xyz|) × B(|xyz|, z)` is nonempty on every triple
///   where `B(x, y) × A(y, z)` is;
/// * `b-composition`: `(f∘f')▷g = f▷(f'▷g)` and
///   `(f∘f')◁g = [f◁(f'▷g)] ∘ (f'◁g)`, with `|xy|yzt|| = |xzt|`;
/// * `a-composition`: `f◁(g∘g') = (f◁g)◁g'` and
///   `f▷(g∘g') = (f▷g) ∘ [(f◁g)▷g']`, with `||xyz|zt| = |xyt|`;
/// * `b-unit`: `1▷g = g`, `1◁g = 1`, with `|xxy| = y`;
/// * `a-unit`: `f▷1 = 1`, `f◁1 = f`, with `|xyy| = x`.
///
/// Bracket failures carry the tag `bracket <equation>`.
pub fn validate_matched_pair(
    a: &FiniteCategory,
    b: &FiniteCategory,
    mp: &MatchedPair,
) -> ValidationReport {
    let mut report = ValidationReport::new();
    if !object_counts_match(a, b, &mut report) {
        return report;
    }
    let n = a.num_objects();
    let triples = nonempty_triples(a, b);

    for (&t, &u) in &mp.bracket {
        if !triples.contains(&t) {
            report.push("typing", vec![t.0, t.1, t.2], format!("bracket given off the domain at {t:?}"));
        } else if u >= n {
            report.push("typing", vec![t.0, t.1, t.2], format!("bracket value {u} out of range"));
        }
    }
    for t in &triples {
        if !mp.bracket.contains_key(t) {
            report.push("typing", vec![t.0, t.1, t.2], format!("bracket undefined at {t:?}"));
        }
    }
    if !report.is_valid() {
        return report;
    }
    for (&(x, _, z), &u) in &mp.bracket {
        if a.hom(x, u).is_empty() || b.hom(u, z).is_empty() {
            report.push("nonempty", vec![x, u, z], format!("A({x}, {u}) × B({u}, {z}) is empty"));
        }
    }

    let pairs: BTreeSet<Pair> = composable_pairs(a, b).into_iter().collect();
    for (name, map) in [("left", &mp.left), ("right", &mp.right)] {
        for &(f, g) in map.keys() {
            if !pairs.contains(&(f, g)) {
                report.push("typing", vec![f, g], format!("{name} action given on non-composable ({f}, {g})"));
            }
        }
        for &(f, g) in &pairs {
            if !map.contains_key(&(f, g)) {
                report.push("typing", vec![f, g], format!("{name} action undefined on ({f}, {g})"));
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    let br = |x, y, z| mp.bracket[&(x, y, z)];
    for &(f, g) in &pairs {
        let (x, y, z) = (b.tgt(f), b.src(f), a.src(g));
        let u = br(x, y, z);
        let l = mp.left[&(f, g)];
        let r = mp.right[&(f, g)];
        if l >= a.num_morphisms() || a.tgt(l) != x || a.src(l) != u {
            report.push("typing", vec![f, g], format!("{f} ▷ {g} = {l} not in A({x}, {u})"));
        }
        if r >= b.num_morphisms() || b.tgt(r) != u || b.src(r) != z {
            report.push("typing", vec![f, g], format!("{f} ◁ {g} = {r} not in B({u}, {z})"));
        }
    }
    if !report.is_valid() {
        return report;
    }
    let left = |f, g| mp.left[&(f, g)];
    let right = |f, g| mp.right[&(f, g)];

    // (f, f', g) ∈ B(x, y) × B(y, z) × A(z, t)
    for f in 0..b.num_morphisms() {
        let (x, y) = (b.tgt(f), b.src(f));
        for &f2 in b_into(b, y) {
            let z = b.src(f2);
            let ff2 = b.compose(f, f2).expect("composable");
            for g in a_into(a, z) {
                let t = a.src(g);
                let yzt = br(y, z, t);
                if br(x, y, yzt) != br(x, z, t) {
                    report.push(
                        "bracket |xy|yzt||=|xzt|",
                        vec![x, y, z, t],
                        format!("|{x}{y}|{y}{z}{t}|| = {} but |{x}{z}{t}| = {}", br(x, y, yzt), br(x, z, t)),
                    );
                }
                let lhs = left(ff2, g);
                let rhs = left(f, left(f2, g));
                if lhs != rhs {
                    report.push(
                        "b-composition",
                        vec![f, f2, g],
                        format!("({f}∘{f2})▷{g} = {lhs} but {f}▷({f2}▷{g}) = {rhs}"),
                    );
                }
                let lhs = right(ff2, g);
                let rhs = b.compose(right(f, left(f2, g)), right(f2, g));
                if Some(lhs) != rhs {
                    report.push(
                        "b-composition",
                        vec![f, f2, g],
                        format!("({f}∘{f2})◁{g} = {lhs} but [{f}◁({f2}▷{g})]∘({f2}◁{g}) = {rhs:?}"),
                    );
                }
            }
        }
    }

    // (f, g, g') ∈ B(x, y) × A(y, z) × A(z, t)
    for f in 0..b.num_morphisms() {
        let (x, y) = (b.tgt(f), b.src(f));
        for g in a_into(a, y) {
            let z = a.src(g);
            for g2 in a_into(a, z) {
                let t = a.src(g2);
                let gg2 = a.compose(g, g2).expect("composable");
                let xyz = br(x, y, z);
                if br(xyz, z, t) != br(x, y, t) {
                    report.push(
                        "bracket ||xyz|zt|=|xyt|",
                        vec![x, y, z, t],
                        format!("||{x}{y}{z}|{z}{t}| = {} but |{x}{y}{t}| = {}", br(xyz, z, t), br(x, y, t)),
                    );
                }
                let lhs = right(f, gg2);
                let rhs = right(right(f, g), g2);
                if lhs != rhs {
                    report.push(
                        "a-composition",
                        vec![f, g, g2],
                        format!("{f}◁({g}∘{g2}) = {lhs} but ({f}◁{g})◁{g2} = {rhs}"),
                    );
                }
                let lhs = left(f, gg2);
                let rhs = a.compose(left(f, g), left(right(f, g), g2));
                if Some(lhs) != rhs {
                    report.push(
                        "a-composition",
                        vec![f, g, g2],
                        format!("{f}▷({g}∘{g2}) = {lhs} but ({f}▷{g})∘[({f}◁{g})▷{g2}] = {rhs:?}"),
                    );
                }
            }
        }
    }

    for g in 0..a.num_morphisms() {
        let (x, y) = (a.tgt(g), a.src(g));
        let one = b.identity(x);
        if br(x, x, y) != y {
            report.push("bracket |xxy|=y", vec![x, y], format!("|{x}{x}{y}| = {}", br(x, x, y)));
        }
        if left(one, g) != g {
            report.push("b-unit", vec![g], format!("1_{x} ▷ {g} = {}", left(one, g)));
        }
        if right(one, g) != b.identity(y) {
            report.push("b-unit", vec![g], format!("1_{x} ◁ {g} = {}", right(one, g)));
        }
    }
    for f in 0..b.num_morphisms() {
        let (x, y) = (b.tgt(f), b.src(f));
        let one = a.identity(y);
        if br(x, y, y) != x {
            report.push("bracket |xyy|=x", vec![x, y], format!("|{x}{y}{y}| = {}", br(x, y, y)));
        }
        if left(f, one) != a.identity(x) {
            report.push("a-unit", vec![f], format!("{f} ▷ 1_{y} = {}", left(f, one)));
        }
        if right(f, one) != f {
            report.push("a-unit", vec![f], format!("{f} ◁ 1_{y} = {}", right(f, one)));
        }
    }
    report
}
