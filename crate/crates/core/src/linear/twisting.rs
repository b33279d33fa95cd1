//! Twisting maps between algebras, twisted tensor algebras and the double
//! cross product of a matched pair of bialgebras.

use super::matrix::{flip, LinearMap};
use super::structures::{tensor_comult, validate_algebra, validate_bialgebra, validate_coalgebra_map};
use super::{compare, FinDimAlgebra, FinDimBialgebra, FinDimCoalgebra};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

fn id(n: usize) -> LinearMap {
    LinearMap::identity(n)
}

/// Checks a linear map `R: B ⊗ A -> A ⊗ B` against the four twisting-map
/// identities:
///
/// * `compose-b`: `R(b ⊗ I) = (I ⊗ b)(R ⊗ I)(I ⊗ R)` on `B ⊗ B ⊗ A`;
/// * `compose-a`: `R(I ⊗ a) = (a ⊗ I)(I ⊗ R)(R ⊗ I)` on `B ⊗ A ⊗ A`;
/// * `unit-b`: `R(1 ⊗ a) = a ⊗ 1`;
/// * `unit-a`: `R(b ⊗ 1) = 1 ⊗ b`.
pub fn validate_twisting_map(a: &FinDimAlgebra, b: &FinDimAlgebra, r: &LinearMap) -> Result<ValidationReport> {
    let (na, nb) = (a.dim(), b.dim());
    if !r.has_shape(na * nb, nb * na) {
        return Err(Error::DimensionMismatch(format!(
            "twisting map must be {0}x{0}, got {1}x{2}",
            na * nb,
            r.rows(),
            r.cols()
        )));
    }
    let mut report = ValidationReport::new();
    let lhs = r.compose(&b.mult().tensor(&id(na)));
    let rhs = id(na)
        .tensor(b.mult())
        .compose(&r.tensor(&id(nb)))
        .compose(&id(nb).tensor(r));
    compare(&mut report, "compose-b", &lhs, &rhs, &[nb, nb, na], &[], "R(b ⊗ I) = (I ⊗ b)(R ⊗ I)(I ⊗ R)");

    let lhs = r.compose(&id(nb).tensor(a.mult()));
    let rhs = a
        .mult()
        .tensor(&id(nb))
        .compose(&id(na).tensor(r))
        .compose(&r.tensor(&id(na)));
    compare(&mut report, "compose-a", &lhs, &rhs, &[nb, na, na], &[], "R(I ⊗ a) = (a ⊗ I)(I ⊗ R)(R ⊗ I)");

    let lhs = r.compose(&b.unit().tensor(&id(na)));
    let rhs = id(na).tensor(b.unit());
    compare(&mut report, "unit-b", &lhs, &rhs, &[na], &[], "R(1 ⊗ a) = a ⊗ 1");

    let lhs = r.compose(&id(nb).tensor(a.unit()));
    let rhs = a.unit().tensor(&id(nb));
    compare(&mut report, "unit-a", &lhs, &rhs, &[nb], &[], "R(b ⊗ 1) = 1 ⊗ b");
    Ok(report)
}

/// `A ⊗_R B` with `m = (a ⊗ b)(I ⊗ R ⊗ I)` and unit `1 ⊗ 1`.
///
/// `R` is validated first; the result is validated independently as an
/// algebra.
pub fn twisted_tensor_algebra(a: &FinDimAlgebra, b: &FinDimAlgebra, r: &LinearMap) -> Result<FinDimAlgebra> {
    validate_twisting_map(a, b, r)?.into_result()?;
    let (na, nb) = (a.dim(), b.dim());
    let mult = a
        .mult()
        .tensor(b.mult())
        .compose(&LinearMap::tensor_all(&[&id(na), r, &id(nb)]));
    let out = FinDimAlgebra::new(mult, a.unit().tensor(b.unit()))?;
    validate_algebra(&out).into_result()?;
    Ok(out)
}

/// `Δ_{B⊗A} = (I ⊗ τ ⊗ I)(Δ_B ⊗ Δ_A)`
fn comult_ba(a: &FinDimBialgebra, b: &FinDimBialgebra) -> LinearMap {
    tensor_comult(b.coalgebra(), a.coalgebra())
}

/// Checks that `left: B ⊗ A -> A` and `right: B ⊗ A -> B` form a matched
/// pair of bialgebras:
///
/// * `left-coalgebra-map`, `right-coalgebra-map`: both are coalgebra maps
///   from the tensor coalgebra `B ⊗ A`;
/// * `symmetry`: `τ(▷ ⊗ ◁)Δ = (◁ ⊗ ▷)Δ`;
/// * `left-module`: `A` is a left `B`-module under `▷`;
/// * `right-module`: `B` is a right `A`-module under `◁`;
/// * `right-compose-b`: `◁(b ⊗ I) = b(◁ ⊗ I)(I ⊗ ▷ ⊗ ◁)(I ⊗ Δ)`;
/// * `left-compose-a`: `▷(I ⊗ a) = a(I ⊗ ▷)(▷ ⊗ ◁ ⊗ I)(Δ ⊗ I)`;
/// * `right-unit-b`: `◁(1 ⊗ I) = ε ⊗ 1`;
/// * `left-unit-a`: `▷(I ⊗ 1) = 1 ⊗ ε`.
///
/// The factors themselves are checked as bialgebras first.
pub fn validate_matched_pair_of_bialgebras(
    a: &FinDimBialgebra,
    b: &FinDimBialgebra,
    left: &LinearMap,
    right: &LinearMap,
) -> Result<ValidationReport> {
    let (na, nb) = (a.dim(), b.dim());
    if !left.has_shape(na, nb * na) || !right.has_shape(nb, nb * na) {
        return Err(Error::DimensionMismatch(format!(
            "actions must be {na}x{0} and {nb}x{0}",
            nb * na
        )));
    }
    let mut report = ValidationReport::new();
    for (name, h) in [("first factor", a), ("second factor", b)] {
        for v in validate_bialgebra(h).violations {
            report.push(&format!("{name}: {}", v.axiom), v.witness, v.message);
        }
    }
    if !report.is_valid() {
        return Ok(report);
    }
    let ba = b.coalgebra().tensor(a.coalgebra());
    for v in validate_coalgebra_map(left, &ba, a.coalgebra())?.violations {
        report.push("left-coalgebra-map", v.witness, v.message);
    }
    for v in validate_coalgebra_map(right, &ba, b.coalgebra())?.violations {
        report.push("right-coalgebra-map", v.witness, v.message);
    }

    let delta = comult_ba(a, b);
    let lhs = flip(na, nb).compose(&left.tensor(right)).compose(&delta);
    let rhs = right.tensor(left).compose(&delta);
    compare(&mut report, "symmetry", &lhs, &rhs, &[nb, na], &[], "τ(▷ ⊗ ◁)Δ = (◁ ⊗ ▷)Δ");

    let (ma, mb) = (a.algebra().mult(), b.algebra().mult());
    let (ua, ub) = (a.algebra().unit(), b.algebra().unit());
    let (ea, eb) = (a.coalgebra().counit(), b.coalgebra().counit());

    let lhs = left.compose(&mb.tensor(&id(na)));
    let rhs = left.compose(&id(nb).tensor(left));
    compare(&mut report, "left-module", &lhs, &rhs, &[nb, nb, na], &[], "(hk) ▷ a = h ▷ (k ▷ a)");
    let lhs = left.compose(&ub.tensor(&id(na)));
    compare(&mut report, "left-module", &lhs, &id(na), &[na], &[], "1 ▷ a = a");

    let lhs = right.compose(&id(nb).tensor(ma));
    let rhs = right.compose(&right.tensor(&id(na)));
    compare(&mut report, "right-module", &lhs, &rhs, &[nb, na, na], &[], "h ◁ (ac) = (h ◁ a) ◁ c");
    let lhs = right.compose(&id(nb).tensor(ua));
    compare(&mut report, "right-module", &lhs, &id(nb), &[nb], &[], "h ◁ 1 = h");

    let lhs = right.compose(&mb.tensor(&id(na)));
    let rhs = mb
        .compose(&right.tensor(&id(nb)))
        .compose(&LinearMap::tensor_all(&[&id(nb), left, right]))
        .compose(&id(nb).tensor(&delta));
    compare(&mut report, "right-compose-b", &lhs, &rhs, &[nb, nb, na], &[], "◁(b ⊗ I) = b(◁ ⊗ I)(I ⊗ ▷ ⊗ ◁)(I ⊗ Δ)");

    let lhs = left.compose(&id(nb).tensor(ma));
    let rhs = ma
        .compose(&id(na).tensor(left))
        .compose(&LinearMap::tensor_all(&[left, right, &id(na)]))
        .compose(&delta.tensor(&id(na)));
    compare(&mut report, "left-compose-a", &lhs, &rhs, &[nb, na, na], &[], "▷(I ⊗ a) = a(I ⊗ ▷)(▷ ⊗ ◁ ⊗ I)(Δ ⊗ I)");

    let lhs = right.compose(&ub.tensor(&id(na)));
    let rhs = ea.tensor(ub);
    compare(&mut report, "right-unit-b", &lhs, &rhs, &[na], &[], "1 ◁ a = ε(a) 1");

    let lhs = left.compose(&id(nb).tensor(ua));
    let rhs = ua.tensor(eb);
    compare(&mut report, "left-unit-a", &lhs, &rhs, &[nb], &[], "h ▷ 1 = ε(h) 1");
    Ok(report)
}

/// The twisting map `R = (▷ ⊗ ◁) Δ_{B⊗A}` of a matched pair of bialgebras.
pub fn double_cross_twisting(
    a: &FinDimBialgebra,
    b: &FinDimBialgebra,
    left: &LinearMap,
    right: &LinearMap,
) -> Result<LinearMap> {
    validate_matched_pair_of_bialgebras(a, b, left, right)?.into_result()?;
    Ok(left.tensor(right).compose(&comult_ba(a, b)))
}

/// `A ⋈ B`: the twisted tensor algebra of `R = (▷ ⊗ ◁) Δ_{B⊗A}` with the
/// tensor product coalgebra. The matched pair is validated first and the
/// result is validated as a bialgebra.
pub fn double_cross_product(
    a: &FinDimBialgebra,
    b: &FinDimBialgebra,
    left: &LinearMap,
    right: &LinearMap,
) -> Result<FinDimBialgebra> {
    let r = double_cross_twisting(a, b, left, right)?;
    let algebra = twisted_tensor_algebra(a.algebra(), b.algebra(), &r)?;
    let coalgebra: FinDimCoalgebra = a.coalgebra().tensor(b.coalgebra());
    let out = FinDimBialgebra::new(algebra, coalgebra)?;
    validate_bialgebra(&out).into_result()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational::{rational, Rational};
    use crate::samples::cyclic_table;
    use num_traits::{One, Zero};

    /// `R(yⁱ ⊗ xʲ) = q^{ij} xʲ ⊗ yⁱ` on `Q[x]/(x²)`, `Q[y]/(y²)`.
    fn quantum_plane(q: i64) -> LinearMap {
        let mut r = LinearMap::zero(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                r.set(j * 2 + i, i * 2 + j, rational(q.pow((i * j) as u32), 1));
            }
        }
        r
    }

    #[test]
    fn flip_is_a_twisting_map_and_gives_the_tensor_algebra() {
        let a = FinDimAlgebra::truncated_polynomial(3);
        let b = FinDimAlgebra::monoid_algebra(&cyclic_table(2), 0).unwrap();
        let r = flip(b.dim(), a.dim());
        assert!(validate_twisting_map(&a, &b, &r).unwrap().is_valid());
        let t = twisted_tensor_algebra(&a, &b, &r).unwrap();
        for (i, j, k, l) in basis_quads(3, 2) {
            for p in 0..3 {
                for s in 0..2 {
                    let expected = a.constant(i, k, p) * b.constant(j, l, s);
                    assert_eq!(t.constant(i * 2 + j, k * 2 + l, p * 2 + s), &expected);
                }
            }
        }
    }

    fn basis_quads(na: usize, nb: usize) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..na {
            for j in 0..nb {
                for k in 0..na {
                    for l in 0..nb {
                        out.push((i, j, k, l));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn quantum_plane_truncation() {
        let a = FinDimAlgebra::truncated_polynomial(2);
        let b = FinDimAlgebra::truncated_polynomial(2);
        let r = quantum_plane(2);
        assert!(validate_twisting_map(&a, &b, &r).unwrap().is_valid());
        let t = twisted_tensor_algebra(&a, &b, &r).unwrap();
        // (1 ⊗ y)(x ⊗ 1) = 2 x ⊗ y
        assert_eq!(t.product(1, 2), vec![Rational::zero(), Rational::zero(), Rational::zero(), rational(2, 1)]);
        assert_eq!(t.product(2, 1), vec![Rational::zero(), Rational::zero(), Rational::zero(), Rational::one()]);
    }

    #[test]
    fn broken_unit_condition_is_reported() {
        let a = FinDimAlgebra::truncated_polynomial(2);
        let b = FinDimAlgebra::truncated_polynomial(2);
        let mut r = quantum_plane(2);
        // R(1 ⊗ x) = 2 x ⊗ 1
        r.set(2, 1, rational(2, 1));
        let report = validate_twisting_map(&a, &b, &r).unwrap();
        assert!(report.cites("unit-b"), "{report}");
        assert!(validate_twisting_map(&a, &b, &LinearMap::zero(3, 4)).is_err());
    }

    fn group_actions(left: impl Fn(usize, usize) -> usize, right: impl Fn(usize, usize) -> usize) -> (LinearMap, LinearMap) {
        let (na, nb) = (3, 2);
        let mut l = LinearMap::zero(na, nb * na);
        let mut r = LinearMap::zero(nb, nb * na);
        for f in 0..nb {
            for g in 0..na {
                l.set(left(f, g), f * na + g, Rational::one());
                r.set(right(f, g), f * na + g, Rational::one());
            }
        }
        (l, r)
    }

    #[test]
    fn trivial_actions_give_the_tensor_bialgebra() {
        let a = FinDimBialgebra::group_algebra(&cyclic_table(3), 0).unwrap();
        let b = FinDimBialgebra::group_algebra(&cyclic_table(2), 0).unwrap();
        let (l, r) = group_actions(|_, g| g, |f, _| f);
        let p = double_cross_product(&a, &b, &l, &r).unwrap();
        // Z6 via k ↦ (k mod 3, k mod 2)
        let z6 = FinDimBialgebra::group_algebra(&cyclic_table(6), 0).unwrap();
        let idx = |k: usize| (k % 3) * 2 + k % 2;
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    assert_eq!(p.algebra().constant(idx(i), idx(j), idx(k)), z6.algebra().constant(i, j, k));
                }
            }
        }
    }

    #[test]
    fn non_action_is_reported() {
        let a = FinDimBialgebra::group_algebra(&cyclic_table(3), 0).unwrap();
        let b = FinDimBialgebra::group_algebra(&cyclic_table(2), 0).unwrap();
        // the generator of Z2 acting by a rotation is not a module map
        let (l, r) = group_actions(|f, g| (g + f) % 3, |f, _| f);
        let report = validate_matched_pair_of_bialgebras(&a, &b, &l, &r).unwrap();
        assert!(report.cites("left-module") || report.cites("left-unit-a"), "{report}");
        assert!(matches!(double_cross_product(&a, &b, &l, &r), Err(Error::Invalid(_))));
    }
}
