//! Twisted tensor products `A ⊗_R B` of finite categories, factorization of
//! a category through two wide subcategories, and the constructions built
//! on top of them (groupoid inverses, semidirect products).
//!
//! A morphism of `A ⊗_R B` in `hom(x, y)` is a triple `(u, g, f)` with
//! `g ∈ A(x, u)` and `f ∈ B(u, y)`. Ids are assigned in ascending
//! `(u, g, f)` order and the tagging table maps each id back to its triple.

use crate::category::{FiniteCategory, Functor, Morphism, MorphismId, ObjectId, WideSubcategory};
use crate::error::{malformed, Error, Result};
use crate::report::ValidationReport;
use crate::twisting::{validate_matched_pair, validate_twisting_system, Factored, MatchedPair, TwistingSystem};

/// Output of [`twisted_tensor_product`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorProduct {
    pub category: FiniteCategory,
    /// `g ↦ (src g, g, 1)`
    pub alpha: Functor,
    /// `f ↦ (tgt f, 1, f)`
    pub beta: Functor,
    /// `tagging[id] = (u, g, f)`
    pub tagging: Vec<Factored>,
}

impl TensorProduct {
    /// Id of the product morphism `(u, g, f)`, if it exists.
    pub fn id_of(&self, tag: Factored) -> Option<MorphismId> {
        self.tagging.binary_search(&tag).ok()
    }
}

/// Builds `A ⊗_R B`. Composition is
/// `(u, g, f) ∘ (v, g', f') = (w, g ∘ g₁, f₁ ∘ f')` where `(w, g₁, f₁) = R(f, g')`.
///
/// `R` is validated first. The result is validated as a category before it
/// is returned; a failure there is reported as [`Error::Invalid`].
pub fn twisted_tensor_product(
    a: &FiniteCategory,
    b: &FiniteCategory,
    r: &TwistingSystem,
) -> Result<TensorProduct> {
    validate_twisting_system(a, b, r).into_result()?;
    let n = a.num_objects();
    let (na, nb) = (a.num_morphisms(), b.num_morphisms());

    let mut tagging = Vec::new();
    for u in 0..n {
        for g in 0..na {
            if a.src(g) != u {
                continue;
            }
            for f in 0..nb {
                if b.tgt(f) == u {
                    tagging.push(Factored::new(u, g, f));
                }
            }
        }
    }
    // u is determined by g, so (g, f) alone indexes a product morphism
    let mut index = vec![usize::MAX; na * nb];
    for (id, t) in tagging.iter().enumerate() {
        index[t.a * nb + t.b] = id;
    }
    let id = |g: MorphismId, f: MorphismId| index[g * nb + f];

    let morphisms: Vec<Morphism> = tagging
        .iter()
        .enumerate()
        .map(|(i, t)| Morphism { id: i, src: b.src(t.b), tgt: a.tgt(t.a) })
        .collect();
    let identity: Vec<MorphismId> = (0..n).map(|x| id(a.identity(x), b.identity(x))).collect();

    let mut compose = Vec::new();
    for (i, left) in tagging.iter().enumerate() {
        let y = b.src(left.b);
        for (j, right) in tagging.iter().enumerate() {
            if a.tgt(right.a) != y {
                continue;
            }
            let twisted = r.get(left.b, right.a).expect("validated");
            let g = a.compose(left.a, twisted.a).expect("validated");
            let f = b.compose(twisted.b, right.b).expect("validated");
            compose.push((i, j, id(g, f)));
        }
    }
    let category = FiniteCategory::new(n, morphisms, identity, compose)?;
    category.validate().into_result()?;

    let alpha = Functor {
        objects: (0..n).collect(),
        morphisms: (0..na).map(|g| id(g, b.identity(a.src(g)))).collect(),
    };
    let beta = Functor {
        objects: (0..n).collect(),
        morphisms: (0..nb).map(|f| id(a.identity(b.tgt(f)), f)).collect(),
    };
    Ok(TensorProduct { category, alpha, beta, tagging })
}

/// Result of a successful [`check_factorization`].
///
/// The subcategories number their morphisms by position in the subsets
/// they were built from; `phi` and `psi` use those ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub a: WideSubcategory,
    pub b: WideSubcategory,
    /// `(u, g, f) ↦ g ∘ f`, ascending in `(u, g, f)`
    pub phi: Vec<(Factored, MorphismId)>,
    /// inverse of `phi`, indexed by morphism of `C`
    pub psi: Vec<Factored>,
}

fn subcategory(c: &FiniteCategory, subset: &[MorphismId], which: &str) -> Result<WideSubcategory> {
    match c.wide_subcategory(subset)? {
        Some(sub) => Ok(sub),
        None => malformed(format!("{which} subset is not a wide subcategory")),
    }
}

/// Decides whether composition `(g, f) ↦ g ∘ f` is a bijection from
/// `⊔_u A(x, u) × B(u, y)` onto `C(x, y)` for every `(x, y)`.
///
/// Fails with [`Error::Malformed`] if a subset is not a wide subcategory;
/// returns `Ok(None)` if some `phi` is not bijective.
pub fn check_factorization(
    c: &FiniteCategory,
    a_subset: &[MorphismId],
    b_subset: &[MorphismId],
) -> Result<Option<Factorization>> {
    let a = subcategory(c, a_subset, "first")?;
    let b = subcategory(c, b_subset, "second")?;
    let mut phi = Vec::new();
    let mut psi: Vec<Option<Factored>> = vec![None; c.num_morphisms()];
    for (g, &cg) in a_subset.iter().enumerate() {
        let u = c.src(cg);
        for (f, &cf) in b_subset.iter().enumerate() {
            if c.tgt(cf) != u {
                continue;
            }
            let h = c.compose(cg, cf).expect("composable");
            let tag = Factored::new(u, g, f);
            if psi[h].replace(tag).is_some() {
                return Ok(None);
            }
            phi.push((tag, h));
        }
    }
    let Some(psi) = psi.into_iter().collect::<Option<Vec<_>>>() else {
        return Ok(None);
    };
    phi.sort();
    Ok(Some(Factorization { a, b, phi, psi }))
}

/// The twisting system of a factorizable category together with the two
/// factors it relates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedTwisting {
    pub a: WideSubcategory,
    pub b: WideSubcategory,
    pub twisting: TwistingSystem,
}

/// `R(f, g) = ψ(f ∘ g)` for `f` in the second subcategory and `g` in the
/// first. The result is validated before it is returned.
pub fn derive_twisting(
    c: &FiniteCategory,
    a_subset: &[MorphismId],
    b_subset: &[MorphismId],
) -> Result<DerivedTwisting> {
    let fact = check_factorization(c, a_subset, b_subset)?.ok_or(Error::FactorizationFailed)?;
    let mut entries = Vec::new();
    for (f, &cf) in b_subset.iter().enumerate() {
        for (g, &cg) in a_subset.iter().enumerate() {
            if c.src(cf) == c.tgt(cg) {
                let h = c.compose(cf, cg).expect("composable");
                entries.push(((f, g), fact.psi[h]));
            }
        }
    }
    let twisting = TwistingSystem::new(entries);
    validate_twisting_system(&fact.a.category, &fact.b.category, &twisting).into_result()?;
    Ok(DerivedTwisting { a: fact.a, b: fact.b, twisting })
}

/// Inverse of the bicrossed-product morphism `(g, f)` of two groupoids,
/// computed from the actions alone:
/// `g' = f⁻¹ ▷ g⁻¹` and `f' = [f ◁ g']⁻¹`.
pub fn bicrossed_groupoid_inverse(
    a: &FiniteCategory,
    b: &FiniteCategory,
    mp: &MatchedPair,
    g: MorphismId,
    f: MorphismId,
) -> Result<Factored> {
    let inv_a = a.inverse_table().ok_or(Error::NotGroupoid)?;
    let inv_b = b.inverse_table().ok_or(Error::NotGroupoid)?;
    validate_matched_pair(a, b, mp).into_result()?;
    if g >= a.num_morphisms() || f >= b.num_morphisms() || a.src(g) != b.tgt(f) {
        return malformed(format!("({g}, {f}) is not a morphism of the product"));
    }
    let g2 = mp.act_left(inv_b[f], inv_a[g]).expect("validated");
    let f2 = inv_b[mp.act_right(f, g2).expect("validated")];
    Ok(Factored::new(a.src(g2), g2, f2))
}

/// A monoid placed at every object of an `n`-object category: the
/// morphism `(x, m)` has id `x * |M| + m` and lives in `hom(x, x)`.
pub fn monoid_at_each_object(n: usize, monoid: &FiniteCategory) -> Result<FiniteCategory> {
    if monoid.num_objects() != 1 {
        return malformed("expected a one-object category");
    }
    let k = monoid.num_morphisms();
    let morphisms = (0..n * k).map(|id| Morphism { id, src: id / k, tgt: id / k }).collect();
    let identity = (0..n).map(|x| x * k + monoid.identity(0)).collect();
    let compose = (0..n).flat_map(|x| {
        monoid
            .compose_entries()
            .into_iter()
            .map(move |(p, q, r)| (x * k + p, x * k + q, x * k + r))
    });
    FiniteCategory::new(n, morphisms, identity, compose.collect::<Vec<_>>())
}

/// Checks that `act[m][g] = m ▷ g` is a monoid action of `monoid` on `A`
/// by endpoint-preserving functors:
///
/// * `action-endpoints`: `m ▷ g` has the endpoints of `g`;
/// * `action-composition`: `(m ∘ m') ▷ g = m ▷ (m' ▷ g)`;
/// * `action-unit`: `1 ▷ g = g`;
/// * `action-distributes`: `m ▷ (g ∘ g') = (m ▷ g) ∘ (m ▷ g')`;
/// * `action-identity`: `m ▷ 1_x = 1_x`.
pub fn validate_action(
    a: &FiniteCategory,
    monoid: &FiniteCategory,
    act: &[Vec<MorphismId>],
) -> Result<ValidationReport> {
    let (na, k) = (a.num_morphisms(), monoid.num_morphisms());
    if monoid.num_objects() != 1 {
        return malformed("the acting category must have exactly one object");
    }
    if act.len() != k || act.iter().any(|row| row.len() != na) {
        return malformed(format!("action table must be {k} x {na}"));
    }
    if act.iter().flatten().any(|&g| g >= na) {
        return malformed("action table value out of range");
    }
    let mut report = ValidationReport::new();
    for (m, row) in act.iter().enumerate() {
        for (g, &h) in row.iter().enumerate() {
            if a.src(h) != a.src(g) || a.tgt(h) != a.tgt(g) {
                report.push("action-endpoints", vec![m, g], format!("{m} ▷ {g} = {h} moves endpoints"));
            }
        }
    }
    if !report.is_valid() {
        return Ok(report);
    }
    for (m, m2, mm2) in monoid.compose_entries() {
        for g in 0..na {
            if act[mm2][g] != act[m][act[m2][g]] {
                report.push(
                    "action-composition",
                    vec![m, m2, g],
                    format!("({m} ∘ {m2}) ▷ {g} ≠ {m} ▷ ({m2} ▷ {g})"),
                );
            }
        }
    }
    let one = monoid.identity(0);
    for g in 0..na {
        if act[one][g] != g {
            report.push("action-unit", vec![g], format!("1 ▷ {g} = {}", act[one][g]));
        }
    }
    for (m, row) in act.iter().enumerate() {
        for (g, g2, gg2) in a.compose_entries() {
            if a.compose(row[g], row[g2]) != Some(row[gg2]) {
                report.push(
                    "action-distributes",
                    vec![m, g, g2],
                    format!("{m} ▷ ({g} ∘ {g2}) ≠ ({m} ▷ {g}) ∘ ({m} ▷ {g2})"),
                );
            }
        }
        for x in 0..a.num_objects() {
            let i = a.identity(x);
            if row[i] != i {
                report.push("action-identity", vec![m, x], format!("{m} ▷ 1_{x} = {}", row[i]));
            }
        }
    }
    Ok(report)
}

/// The matched pair of a semidirect datum over `monoid_at_each_object`:
/// `|xyz| = z`, `(x, m) ▷ g = m ▷ g` and `(x, m) ◁ g = (z, m)`.
pub fn semidirect_matched_pair(
    a: &FiniteCategory,
    monoid: &FiniteCategory,
    act: &[Vec<MorphismId>],
) -> Result<(FiniteCategory, MatchedPair)> {
    validate_action(a, monoid, act)?.into_result()?;
    let n = a.num_objects();
    let k = monoid.num_morphisms();
    let b = monoid_at_each_object(n, monoid)?;
    let mut mp = MatchedPair::default();
    for x in 0..n {
        for g in 0..a.num_morphisms() {
            if a.tgt(g) != x {
                continue;
            }
            let z = a.src(g);
            mp.bracket.insert((x, x, z), z);
            for m in 0..k {
                mp.left.insert((x * k + m, g), act[m][g]);
                mp.right.insert((x * k + m, g), z * k + m);
            }
        }
    }
    Ok((b, mp))
}

/// `A ⋊ M`: the monoid acts on `A` through `act[m][g] = m ▷ g`, the right
/// action is trivial, and composition is
/// `(g, m) ∘ (g', m') = (g ∘ (m ▷ g'), m ∘ m')`.
///
/// The monoid is spread over the objects of `A` with
/// [`monoid_at_each_object`]; that category is the second factor of the
/// returned product.
pub fn semidirect_product(
    a: &FiniteCategory,
    monoid: &FiniteCategory,
    act: &[Vec<MorphismId>],
) -> Result<TensorProduct> {
    let (b, mp) = semidirect_matched_pair(a, monoid, act)?;
    let st = crate::twisting::matched_pair_to_twisting(&mp)?;
    twisted_tensor_product(a, &b, &st.to_twisting(a, &b)?)
}

/// Number of product morphisms in `hom(x, y)` predicted by the factors:
/// `Σ_u |A(x, u)| · |B(u, y)|`.
pub fn expected_hom_size(a: &FiniteCategory, b: &FiniteCategory, x: ObjectId, y: ObjectId) -> usize {
    (0..a.num_objects()).map(|u| a.hom(x, u).len() * b.hom(u, y).len()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{groupoid_ids::*, symmetric_table, two_object_groupoid};
    use crate::twisting::{enumerate_twisting_systems, DEFAULT_LIMIT};

    fn groupoid_product() -> (FiniteCategory, TwistingSystem, TensorProduct) {
        let c = two_object_groupoid();
        let r = enumerate_twisting_systems(&c, &c, DEFAULT_LIMIT).unwrap().remove(0);
        let p = twisted_tensor_product(&c, &c, &r).unwrap();
        (c, r, p)
    }

    #[test]
    fn groupoid_product_has_two_morphisms_per_hom() {
        let (c, _, p) = groupoid_product();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(p.category.hom(x, y).len(), 2);
                assert_eq!(expected_hom_size(&c, &c, x, y), 2);
            }
        }
        let f = p.id_of(Factored::new(1, U, U_INV)).unwrap();
        assert_eq!(p.category.compose(f, f), Some(p.category.identity(0)));
        assert!(p.category.is_groupoid());
        assert!(p.alpha.validate(&c, &p.category).is_valid() && p.alpha.is_injective());
        assert!(p.beta.validate(&c, &p.category).is_valid() && p.beta.is_injective());
    }

    #[test]
    fn derive_recovers_the_groupoid_system() {
        let (_, r, p) = groupoid_product();
        let fact = check_factorization(&p.category, &p.alpha.morphisms, &p.beta.morphisms)
            .unwrap()
            .unwrap();
        assert_eq!(fact.psi, p.tagging);
        let d = derive_twisting(&p.category, &p.alpha.morphisms, &p.beta.morphisms).unwrap();
        assert_eq!(d.twisting, r);
    }

    #[test]
    fn discrete_second_factor_gives_back_the_first() {
        let a = FiniteCategory::cyclic_group(3);
        let b = FiniteCategory::discrete(1);
        let r = enumerate_twisting_systems(&a, &b, DEFAULT_LIMIT).unwrap().remove(0);
        let p = twisted_tensor_product(&a, &b, &r).unwrap();
        assert!(p.alpha.is_isomorphism(&a, &p.category));
    }

    #[test]
    fn z4_does_not_factor_through_its_subgroup_twice() {
        let z4 = FiniteCategory::cyclic_group(4);
        assert!(check_factorization(&z4, &[0, 2], &[0, 2]).unwrap().is_none());
    }

    #[test]
    fn s3_factors_through_rotations_and_a_reflection() {
        let s3 = FiniteCategory::from_group(&symmetric_table(3), 0).unwrap();
        // lexicographic permutations: 3 = [1,2,0], 4 = [2,0,1] are the 3-cycles,
        // 2 = [1,0,2] swaps the first two letters
        let fact = check_factorization(&s3, &[0, 3, 4], &[0, 2]).unwrap().unwrap();
        assert_eq!(fact.phi.len(), 6);
        let d = derive_twisting(&s3, &[0, 3, 4], &[0, 2]).unwrap();
        // the reflection conjugates a rotation into its inverse
        assert_eq!(d.twisting.get(1, 1).unwrap(), Factored::new(0, 2, 1));
        assert_eq!(d.twisting.get(1, 2).unwrap(), Factored::new(0, 1, 1));
    }

    #[test]
    fn non_subcategory_subset_is_rejected() {
        let z4 = FiniteCategory::cyclic_group(4);
        assert!(matches!(check_factorization(&z4, &[0, 1], &[0]), Err(Error::Malformed(_))));
        assert!(matches!(derive_twisting(&z4, &[0, 2], &[0, 2]), Err(Error::FactorizationFailed)));
    }

    #[test]
    fn groupoid_inverse_formula() {
        let (c, r, p) = groupoid_product();
        let mp = crate::twisting::extract_simple(&c, &c, &r).unwrap().to_matched_pair();
        assert_eq!(bicrossed_groupoid_inverse(&c, &c, &mp, U, U_INV).unwrap(), Factored::new(1, U, U_INV));
        assert_eq!(bicrossed_groupoid_inverse(&c, &c, &mp, ID1, ID1).unwrap(), Factored::new(0, ID1, ID1));
        let table = p.category.inverse_table().unwrap();
        for (id, t) in p.tagging.iter().enumerate() {
            let inv = bicrossed_groupoid_inverse(&c, &c, &mp, t.a, t.b).unwrap();
            assert_eq!(p.id_of(inv), Some(table[id]));
        }
    }

    #[test]
    fn inverse_needs_groupoids() {
        let chain = crate::samples::chain(2);
        let r = enumerate_twisting_systems(&chain, &chain, DEFAULT_LIMIT).unwrap().remove(0);
        let mp = crate::twisting::extract_simple(&chain, &chain, &r).unwrap().to_matched_pair();
        assert!(matches!(
            bicrossed_groupoid_inverse(&chain, &chain, &mp, 0, 0),
            Err(Error::NotGroupoid)
        ));
    }

    #[test]
    fn semidirect_by_inversion_is_s3() {
        let z3 = FiniteCategory::cyclic_group(3);
        let z2 = FiniteCategory::cyclic_group(2);
        let act = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let p = semidirect_product(&z3, &z2, &act).unwrap();
        assert_eq!(p.category.num_morphisms(), 6);
        // non-abelian
        let c = &p.category;
        assert!((0..6).any(|x| (0..6).any(|y| c.compose(x, y) != c.compose(y, x))));
    }

    #[test]
    fn trivial_action_is_componentwise() {
        let z3 = FiniteCategory::cyclic_group(3);
        let z2 = FiniteCategory::cyclic_group(2);
        let act = vec![vec![0, 1, 2]; 2];
        let p = semidirect_product(&z3, &z2, &act).unwrap();
        let c = &p.category;
        for (i, s) in p.tagging.iter().enumerate() {
            for (j, t) in p.tagging.iter().enumerate() {
                let expected = Factored::new(0, (s.a + t.a) % 3, (s.b + t.b) % 2);
                assert_eq!(p.tagging[c.compose(i, j).unwrap()], expected);
            }
        }
    }

    #[test]
    fn semidirect_over_the_groupoid_has_eight_morphisms() {
        let g = two_object_groupoid();
        let z2 = FiniteCategory::cyclic_group(2);
        let act = vec![vec![0, 1, 2, 3]; 2];
        let p = semidirect_product(&g, &z2, &act).unwrap();
        assert_eq!(p.category.num_morphisms(), 8);
        assert!(p.category.validate().is_valid());
    }

    #[test]
    fn bad_actions_are_reported() {
        let z3 = FiniteCategory::cyclic_group(3);
        let z2 = FiniteCategory::cyclic_group(2);
        let not_action = vec![vec![0, 1, 2], vec![0, 1, 1]];
        let report = validate_action(&z3, &z2, &not_action).unwrap();
        assert!(report.cites("action-composition") || report.cites("action-distributes"));
        let no_unit = vec![vec![0, 2, 1], vec![0, 2, 1]];
        assert!(validate_action(&z3, &z2, &no_unit).unwrap().cites("action-unit"));
        let moves_identity = vec![vec![0, 1, 2], vec![1, 1, 2]];
        assert!(validate_action(&z3, &z2, &moves_identity).unwrap().cites("action-identity"));
        assert!(matches!(semidirect_product(&z3, &z2, &not_action), Err(Error::Invalid(_))));
    }
}
