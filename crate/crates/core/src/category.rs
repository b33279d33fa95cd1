//! Finite categories stored as explicit tables.
//!
//! Direction convention: a morphism in the hom-set `C(x, y)` (written
//! `hom(x, y)` below) is an arrow `y -> x`, i.e. its target is `x` and its
//! source is `y`. Composition `compose(f, g)` is `f ∘ g` and is defined when
//! `src(f) == tgt(g)`. This matches the usual "apply `g` first" reading but
//! is the reverse of the `hom(source, target)` indexing used by some
//! libraries.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{malformed, Error, Result};
use crate::report::ValidationReport;

pub type ObjectId = usize;
pub type MorphismId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Morphism {
    pub id: MorphismId,
    pub src: ObjectId,
    pub tgt: ObjectId,
}

/// A finite category with dense object and morphism ids.
///
/// Construction only checks that the tables are well-formed (ids in range,
/// composition defined on exactly the composable pairs). Whether the tables
/// satisfy the category axioms is answered by [`FiniteCategory::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: usize,
    morphisms: Vec<Morphism>,
    identity: Vec<MorphismId>,
    compose: Vec<Option<MorphismId>>,
    homs: Vec<Vec<MorphismId>>,
}

impl FiniteCategory {
    /// Builds a category from raw tables.
    ///
    /// `compose` lists triples `(f, g, h)` meaning `f ∘ g = h`; it must
    /// contain every composable pair exactly once and nothing else.
    pub fn new(
        objects: usize,
        morphisms: Vec<Morphism>,
        identity: Vec<MorphismId>,
        compose: impl IntoIterator<Item = (MorphismId, MorphismId, MorphismId)>,
    ) -> Result<Self> {
        let m = morphisms.len();
        let mut sorted = morphisms;
        sorted.sort_by_key(|mor| mor.id);
        for (i, mor) in sorted.iter().enumerate() {
            if mor.id != i {
                return malformed(format!(
                    "morphism ids must be exactly 0..{m}; found id {} at position {i}",
                    mor.id
                ));
            }
            if mor.src >= objects || mor.tgt >= objects {
                return malformed(format!(
                    "morphism {} has endpoint out of range ({} -> {}) with {objects} objects",
                    mor.id, mor.src, mor.tgt
                ));
            }
        }
        if identity.len() != objects {
            return malformed(format!(
                "identity table has {} entries for {objects} objects",
                identity.len()
            ));
        }
        if let Some(&bad) = identity.iter().find(|&&i| i >= m) {
            return malformed(format!("identity morphism {bad} out of range"));
        }

        let mut table = vec![None; m * m];
        for (f, g, h) in compose {
            if f >= m || g >= m || h >= m {
                return malformed(format!("composition entry ({f}, {g}, {h}) out of range"));
            }
            if sorted[f].src != sorted[g].tgt {
                return malformed(format!(
                    "composition entry ({f}, {g}, {h}) given for a non-composable pair"
                ));
            }
            if table[f * m + g].replace(h).is_some() {
                return malformed(format!("duplicate composition entry for ({f}, {g})"));
            }
        }
        for f in 0..m {
            for g in 0..m {
                if sorted[f].src == sorted[g].tgt && table[f * m + g].is_none() {
                    return malformed(format!("missing composition entry for ({f}, {g})"));
                }
            }
        }

        let mut homs = vec![Vec::new(); objects * objects];
        for mor in &sorted {
            homs[mor.tgt * objects + mor.src].push(mor.id);
        }
        Ok(Self {
            objects,
            morphisms: sorted,
            identity,
            compose: table,
            homs,
        })
    }

    /// The category with `n` objects and only identity morphisms.
    pub fn discrete(n: usize) -> Self {
        let morphisms = (0..n).map(|x| Morphism { id: x, src: x, tgt: x }).collect();
        Self::new(n, morphisms, (0..n).collect(), (0..n).map(|x| (x, x, x)))
            .expect("discrete tables are well-formed")
    }

    /// One-object category of a monoid given by its multiplication table
    /// (`table[a][b] = a·b`, and `a ∘ b` is `a·b`). Unit and associativity
    /// are checked; failures are returned as [`Error::Invalid`].
    pub fn from_monoid(table: &[Vec<usize>], unit: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return malformed("monoid table is empty");
        }
        if let Some(row) = table.iter().position(|r| r.len() != n) {
            return malformed(format!("row {row} of the {n}x{n} table has wrong length"));
        }
        if unit >= n {
            return malformed(format!("unit {unit} out of range"));
        }
        if let Some(&bad) = table.iter().flatten().find(|&&v| v >= n) {
            return malformed(format!("table entry {bad} out of range"));
        }

        let mut report = ValidationReport::new();
        for a in 0..n {
            if table[unit][a] != a || table[a][unit] != a {
                report.push("unit", vec![a], format!("{unit} is not a two-sided unit for {a}"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = table[table[a][b]][c];
                    let right = table[a][table[b][c]];
                    if left != right {
                        report.push(
                            "associativity",
                            vec![a, b, c],
                            format!("({a}·{b})·{c} = {left} but {a}·({b}·{c}) = {right}"),
                        );
                    }
                }
            }
        }
        report.into_result()?;

        let morphisms = (0..n).map(|a| Morphism { id: a, src: 0, tgt: 0 }).collect();
        let compose = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, table[a][b])));
        Self::new(1, morphisms, vec![unit], compose)
    }

    /// Like [`FiniteCategory::from_monoid`], additionally requiring the table
    /// to be a Latin square.
    pub fn from_group(table: &[Vec<usize>], unit: usize) -> Result<Self> {
        let category = Self::from_monoid(table, unit)?;
        let n = table.len();
        let mut report = ValidationReport::new();
        for a in 0..n {
            let row: BTreeSet<_> = table[a].iter().collect();
            if row.len() != n {
                report.push("latin", vec![a], format!("row {a} repeats an element"));
            }
            let col: BTreeSet<_> = table.iter().map(|r| r[a]).collect();
            if col.len() != n {
                report.push("latin", vec![a], format!("column {a} repeats an element"));
            }
        }
        report.into_result()?;
        Ok(category)
    }

    /// The cyclic group `Z_n` as a one-object category; element `k` is `k mod n`.
    pub fn cyclic_group(n: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_group(&table, 0).expect("cyclic group table is a group")
    }

    /// Thin category of a preorder. A pair `(x, y)` in `relation` produces
    /// the unique morphism of `hom(x, y)`, an arrow `y -> x`.
    ///
    /// Morphism ids follow ascending `(x, y)` order.
    pub fn from_preorder(n: usize, relation: &[(ObjectId, ObjectId)]) -> Result<Self> {
        if let Some(&(x, y)) = relation.iter().find(|&&(x, y)| x >= n || y >= n) {
            return malformed(format!("pair ({x}, {y}) out of range for {n} objects"));
        }
        let pairs: BTreeSet<(ObjectId, ObjectId)> = relation.iter().copied().collect();

        let mut report = ValidationReport::new();
        for x in 0..n {
            if !pairs.contains(&(x, x)) {
                report.push("reflexivity", vec![x, x], format!("({x}, {x}) missing"));
            }
        }
        for &(x, y) in &pairs {
            for &(_, z) in pairs.range((y, 0)..(y + 1, 0)) {
                if !pairs.contains(&(x, z)) {
                    report.push(
                        "transitivity",
                        vec![x, y, z],
                        format!("({x}, {y}) and ({y}, {z}) present but ({x}, {z}) missing"),
                    );
                }
            }
        }
        report.into_result()?;

        let ids: Vec<(ObjectId, ObjectId)> = pairs.into_iter().collect();
        let id_of = |x: ObjectId, y: ObjectId| ids.binary_search(&(x, y)).ok();
        let morphisms = ids
            .iter()
            .enumerate()
            .map(|(id, &(x, y))| Morphism { id, src: y, tgt: x })
            .collect();
        let identity = (0..n).map(|x| id_of(x, x).expect("reflexive")).collect();
        let mut compose = Vec::new();
        for (f, &(x, y)) in ids.iter().enumerate() {
            for (g, &(y2, z)) in ids.iter().enumerate() {
                if y == y2 {
                    compose.push((f, g, id_of(x, z).expect("transitive")));
                }
            }
        }
        Self::new(n, morphisms, identity, compose)
    }

    pub fn num_objects(&self) -> usize {
        self.objects
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn src(&self, f: MorphismId) -> ObjectId {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: MorphismId) -> ObjectId {
        self.morphisms[f].tgt
    }

    pub fn identity(&self, x: ObjectId) -> MorphismId {
        self.identity[x]
    }

    pub fn identities(&self) -> &[MorphismId] {
        &self.identity
    }

    pub fn is_identity(&self, f: MorphismId) -> bool {
        self.identity[self.tgt(f)] == f
    }

    /// Morphisms `y -> x`, ascending by id.
    pub fn hom(&self, x: ObjectId, y: ObjectId) -> &[MorphismId] {
        &self.homs[x * self.objects + y]
    }

    /// `f ∘ g`, or `None` when `src(f) != tgt(g)`.
    pub fn compose(&self, f: MorphismId, g: MorphismId) -> Option<MorphismId> {
        self.compose[f * self.morphisms.len() + g]
    }

    /// Every `(f, g, f ∘ g)` in ascending `(f, g)` order.
    pub fn compose_entries(&self) -> Vec<(MorphismId, MorphismId, MorphismId)> {
        let m = self.morphisms.len();
        (0..m)
            .flat_map(|f| (0..m).map(move |g| (f, g)))
            .filter_map(|(f, g)| self.compose(f, g).map(|h| (f, g, h)))
            .collect()
    }

    /// Checks identity typing, composition typing, unit laws and
    /// associativity by exhaustive enumeration.
    ///
    /// Laws whose evaluation would pass through an ill-typed composite are
    /// skipped; the typing violation is reported instead.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let m = self.morphisms.len();

        let mut identity_ok = vec![true; self.objects];
        for x in 0..self.objects {
            let i = self.identity[x];
            if self.src(i) != x || self.tgt(i) != x {
                identity_ok[x] = false;
                report.push(
                    "identity-typing",
                    vec![x, i],
                    format!("identity {i} of object {x} is {} -> {}", self.src(i), self.tgt(i)),
                );
            }
        }

        let mut well_typed = vec![false; m * m];
        for (f, g, h) in self.compose_entries() {
            if self.tgt(h) == self.tgt(f) && self.src(h) == self.src(g) {
                well_typed[f * m + g] = true;
            } else {
                report.push(
                    "typing",
                    vec![f, g],
                    format!(
                        "{f} ∘ {g} = {h} is {} -> {}, expected {} -> {}",
                        self.src(h),
                        self.tgt(h),
                        self.src(g),
                        self.tgt(f)
                    ),
                );
            }
        }

        for f in 0..m {
            let (x, y) = (self.tgt(f), self.src(f));
            if identity_ok[x] {
                let i = self.identity[x];
                if self.compose(i, f) != Some(f) {
                    report.push("left-unit", vec![f], format!("1_{x} ∘ {f} != {f}"));
                }
            }
            if identity_ok[y] {
                let i = self.identity[y];
                if self.compose(f, i) != Some(f) {
                    report.push("right-unit", vec![f], format!("{f} ∘ 1_{y} != {f}"));
                }
            }
        }

        for f in 0..m {
            for &g in self.homs_into(self.src(f)) {
                if !well_typed[f * m + g] {
                    continue;
                }
                let fg = self.compose(f, g).expect("composable");
                for &h in self.homs_into(self.src(g)) {
                    if !well_typed[g * m + h] {
                        continue;
                    }
                    let gh = self.compose(g, h).expect("composable");
                    let left = self.compose(fg, h);
                    let right = self.compose(f, gh);
                    if left != right {
                        report.push(
                            "associativity",
                            vec![f, g, h],
                            format!("({f} ∘ {g}) ∘ {h} = {left:?} but {f} ∘ ({g} ∘ {h}) = {right:?}"),
                        );
                    }
                }
            }
        }
        report
    }

    /// All morphisms with target `x`, ascending.
    fn homs_into(&self, x: ObjectId) -> impl Iterator<Item = &MorphismId> {
        (0..self.objects).flat_map(move |y| self.hom(x, y).iter())
    }

    /// Two-sided inverses of every morphism, or `None` if some morphism is
    /// not invertible.
    pub fn inverse_table(&self) -> Option<Vec<MorphismId>> {
        (0..self.num_morphisms())
            .map(|f| {
                let (x, y) = (self.tgt(f), self.src(f));
                self.hom(y, x).iter().copied().find(|&g| {
                    self.compose(f, g) == Some(self.identity(x))
                        && self.compose(g, f) == Some(self.identity(y))
                })
            })
            .collect()
    }

    pub fn is_groupoid(&self) -> bool {
        self.inverse_table().is_some()
    }

    /// At most one morphism in every hom-set.
    pub fn is_thin(&self) -> bool {
        self.homs.iter().all(|h| h.len() <= 1)
    }

    /// Checks whether `subset` spans a wide subcategory (all identities,
    /// closed under composition). The subcategory numbers its morphisms by
    /// position in `subset`, so the returned inclusion sends id `i` to
    /// `subset[i]`.
    pub fn wide_subcategory(&self, subset: &[MorphismId]) -> Result<Option<WideSubcategory>> {
        let m = self.num_morphisms();
        let mut position = vec![None; m];
        for (i, &f) in subset.iter().enumerate() {
            if f >= m {
                return malformed(format!("subset morphism {f} out of range"));
            }
            if position[f].replace(i).is_some() {
                return malformed(format!("subset lists morphism {f} twice"));
            }
        }
        if self.identity.iter().any(|&i| position[i].is_none()) {
            return Ok(None);
        }
        let mut compose = Vec::new();
        for (i, &f) in subset.iter().enumerate() {
            for (j, &g) in subset.iter().enumerate() {
                if let Some(h) = self.compose(f, g) {
                    match position[h] {
                        Some(k) => compose.push((i, j, k)),
                        None => return Ok(None),
                    }
                }
            }
        }
        let morphisms = subset
            .iter()
            .enumerate()
            .map(|(i, &f)| Morphism { id: i, src: self.src(f), tgt: self.tgt(f) })
            .collect();
        let identity = self.identity.iter().map(|&i| position[i].expect("checked")).collect();
        let category = Self::new(self.objects, morphisms, identity, compose)?;
        let inclusion = Functor {
            objects: (0..self.objects).collect(),
            morphisms: subset.to_vec(),
        };
        Ok(Some(WideSubcategory { category, inclusion }))
    }
}

/// A wide subcategory together with its inclusion functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WideSubcategory {
    pub category: FiniteCategory,
    pub inclusion: Functor,
}

/// A functor between finite categories, given by its object and morphism maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Functor {
    pub objects: Vec<ObjectId>,
    pub morphisms: Vec<MorphismId>,
}

impl Functor {
    pub fn identity(c: &FiniteCategory) -> Self {
        Self {
            objects: (0..c.num_objects()).collect(),
            morphisms: (0..c.num_morphisms()).collect(),
        }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Functor) -> Functor {
        Functor {
            objects: first.objects.iter().map(|&x| self.objects[x]).collect(),
            morphisms: first.morphisms.iter().map(|&f| self.morphisms[f]).collect(),
        }
    }

    pub fn validate(&self, domain: &FiniteCategory, codomain: &FiniteCategory) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.objects.len() != domain.num_objects()
            || self.morphisms.len() != domain.num_morphisms()
        {
            report.push(
                "shape",
                vec![self.objects.len(), self.morphisms.len()],
                "map sizes do not match the domain",
            );
            return report;
        }
        if self.objects.iter().any(|&x| x >= codomain.num_objects())
            || self.morphisms.iter().any(|&f| f >= codomain.num_morphisms())
        {
            report.push("shape", vec![], "map values out of range for the codomain");
            return report;
        }
        for f in 0..domain.num_morphisms() {
            let image = self.morphisms[f];
            if codomain.src(image) != self.objects[domain.src(f)]
                || codomain.tgt(image) != self.objects[domain.tgt(f)]
            {
                report.push("endpoints", vec![f], format!("image of {f} has the wrong endpoints"));
            }
        }
        for x in 0..domain.num_objects() {
            if self.morphisms[domain.identity(x)] != codomain.identity(self.objects[x]) {
                report.push("identity", vec![x], format!("identity of {x} not preserved"));
            }
        }
        for (f, g, h) in domain.compose_entries() {
            if codomain.compose(self.morphisms[f], self.morphisms[g]) != Some(self.morphisms[h]) {
                report.push("composition", vec![f, g], format!("{f} ∘ {g} not preserved"));
            }
        }
        report
    }

    pub fn is_injective(&self) -> bool {
        let objs: BTreeSet<_> = self.objects.iter().collect();
        let mors: BTreeSet<_> = self.morphisms.iter().collect();
        objs.len() == self.objects.len() && mors.len() == self.morphisms.len()
    }

    /// A valid functor that is bijective on objects and on morphisms.
    pub fn is_isomorphism(&self, domain: &FiniteCategory, codomain: &FiniteCategory) -> bool {
        self.validate(domain, codomain).is_valid()
            && self.is_injective()
            && domain.num_objects() == codomain.num_objects()
            && domain.num_morphisms() == codomain.num_morphisms()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self, domain: &FiniteCategory, codomain: &FiniteCategory) -> Result<Functor> {
        if !self.is_isomorphism(domain, codomain) {
            return Err(Error::Invalid(self.validate(domain, codomain)));
        }
        let mut objects = vec![0; codomain.num_objects()];
        for (x, &y) in self.objects.iter().enumerate() {
            objects[y] = x;
        }
        let mut morphisms = vec![0; codomain.num_morphisms()];
        for (f, &g) in self.morphisms.iter().enumerate() {
            morphisms[g] = f;
        }
        Ok(Functor { objects, morphisms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The two-object groupoid: 0 = Id₁, 1 = Id₂, 2 = u: 2→1, 3 = u⁻¹: 1→2
    /// (objects 1, 2 become 0, 1).
    fn groupoid() -> FiniteCategory {
        let morphisms = vec![
            Morphism { id: 0, src: 0, tgt: 0 },
            Morphism { id: 1, src: 1, tgt: 1 },
            Morphism { id: 2, src: 1, tgt: 0 },
            Morphism { id: 3, src: 0, tgt: 1 },
        ];
        let compose = vec![
            (0, 0, 0),
            (1, 1, 1),
            (0, 2, 2),
            (2, 1, 2),
            (1, 3, 3),
            (3, 0, 3),
            (2, 3, 0),
            (3, 2, 1),
        ];
        FiniteCategory::new(2, morphisms, vec![0, 1], compose).unwrap()
    }

    #[test]
    fn terminal_category_is_valid() {
        assert!(FiniteCategory::discrete(1).validate().is_valid());
    }

    #[test]
    fn groupoid_is_valid_thin_groupoid() {
        let c = groupoid();
        assert!(c.validate().is_valid());
        assert!(c.is_thin());
        assert_eq!(c.inverse_table(), Some(vec![0, 1, 3, 2]));
        assert_eq!(c.hom(0, 1), &[2]);
        assert_eq!(c.hom(1, 0), &[3]);
    }

    #[test]
    fn mistyped_composite_is_single_typing_violation() {
        let morphisms = groupoid().morphisms().to_vec();
        let compose = vec![
            (0, 0, 0),
            (1, 1, 1),
            (0, 2, 2),
            (2, 1, 2),
            (1, 3, 3),
            (3, 0, 3),
            (2, 3, 1),
            (3, 2, 1),
        ];
        let c = FiniteCategory::new(2, morphisms, vec![0, 1], compose).unwrap();
        let report = c.validate();
        assert_eq!(report.len(), 1, "{report}");
        assert_eq!(report.violations[0].axiom, "typing");
        assert_eq!(report.violations[0].witness, vec![2, 3]);
    }

    #[test]
    fn malformed_tables_are_errors_not_violations() {
        let one = vec![Morphism { id: 0, src: 0, tgt: 0 }];
        assert!(matches!(
            FiniteCategory::new(1, one.clone(), vec![0], vec![]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            FiniteCategory::new(1, one.clone(), vec![0], vec![(0, 0, 5)]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            FiniteCategory::new(1, one, vec![1], vec![(0, 0, 0)]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn idempotent_monoid_is_not_groupoid() {
        let c = FiniteCategory::from_monoid(&[vec![0, 1], vec![1, 1]], 0).unwrap();
        assert!(c.validate().is_valid());
        assert_eq!(c.inverse_table(), None);
    }

    #[test]
    fn discrete_inverse_table_is_identity() {
        let c = FiniteCategory::discrete(3);
        assert_eq!(c.inverse_table(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn z2_is_not_thin() {
        assert!(!FiniteCategory::cyclic_group(2).is_thin());
    }

    #[test]
    fn cyclic_groups() {
        let z2 = FiniteCategory::cyclic_group(2);
        assert_eq!(z2.num_objects(), 1);
        assert_eq!(z2.num_morphisms(), 2);
        assert!(z2.validate().is_valid());
        let z3 = FiniteCategory::cyclic_group(3);
        assert_eq!(z3.inverse_table(), Some(vec![0, 2, 1]));
    }

    #[test]
    fn broken_associativity_is_rejected_with_witness() {
        // unit 0; 1·1 = 2, 1·2 = 0, 2·1 = 2 breaks (1·1)·1 = 2 vs 1·(1·1) = 0
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 2, 1]];
        match FiniteCategory::from_group(&table, 0) {
            Err(Error::Invalid(report)) => {
                assert!(report.cites("associativity"));
                assert!(report
                    .iter()
                    .any(|v| v.axiom == "associativity" && v.witness == vec![1, 1, 1]));
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn non_unital_table_is_rejected() {
        let table = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(FiniteCategory::from_monoid(&table, 0), Err(Error::Invalid(_))));
    }

    #[test]
    fn preorders() {
        let chain = FiniteCategory::from_preorder(2, &[(0, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(chain.num_morphisms(), 3);
        assert!(chain.validate().is_valid());
        assert!(chain.is_thin());
        assert_eq!(chain.hom(0, 1).len(), 1);
        assert!(chain.hom(1, 0).is_empty());

        let antichain = FiniteCategory::from_preorder(2, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(antichain.num_morphisms(), 2);

        let err = FiniteCategory::from_preorder(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]);
        match err {
            Err(Error::Invalid(r)) => {
                assert!(r.iter().any(|v| v.axiom == "transitivity" && v.witness == vec![0, 1, 2]))
            }
            other => panic!("expected rejection, got {other:?}"),
        }
        assert!(matches!(
            FiniteCategory::from_preorder(2, &[(0, 0)]),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn wide_subcategories() {
        let c = groupoid();
        let discrete = c.wide_subcategory(&[0, 1]).unwrap().unwrap();
        assert_eq!(discrete.category.num_morphisms(), 2);
        assert!(discrete.inclusion.validate(&discrete.category, &c).is_valid());

        let all = c.wide_subcategory(&[0, 1, 2, 3]).unwrap().unwrap();
        assert_eq!(all.inclusion, Functor::identity(&c));
        assert_eq!(all.category, c);

        let with_u = c.wide_subcategory(&[0, 1, 2]).unwrap().unwrap();
        assert!(with_u.inclusion.validate(&with_u.category, &c).is_valid());
        assert!(with_u.category.validate().is_valid());

        assert!(c.wide_subcategory(&[0, 2, 3]).unwrap().is_none());
        assert!(matches!(c.wide_subcategory(&[0, 0]), Err(Error::Malformed(_))));
    }

    #[test]
    fn subset_order_defines_subcategory_ids() {
        let c = groupoid();
        let sub = c.wide_subcategory(&[3, 1, 0, 2]).unwrap().unwrap();
        assert_eq!(sub.category.identity(0), 2);
        assert!(sub.inclusion.is_isomorphism(&sub.category, &c));
        let inv = sub.inclusion.inverse(&sub.category, &c).unwrap();
        assert_eq!(inv.after(&sub.inclusion), Functor::identity(&sub.category));
    }
}
