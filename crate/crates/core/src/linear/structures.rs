//! Algebras, coalgebras and bialgebras given by structure constants, and
//! coalgebra maps into tensor products.

use num_traits::{One, Zero};

use super::matrix::{flip, LinearMap};
use super::rational::Rational;
use super::{compare, HModuleAction, LinearCategory};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

fn mismatch<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::DimensionMismatch(msg.into()))
}

/// `e_i · e_j = Σ_k m_{ij}^k e_k`, stored as the map `A ⊗ A -> A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimAlgebra {
    dim: usize,
    mult: LinearMap,
    unit: LinearMap,
}

impl FinDimAlgebra {
    /// `mult` is `dim × dim²`, `unit` is `dim × 1`.
    pub fn new(mult: LinearMap, unit: LinearMap) -> Result<Self> {
        let dim = unit.rows();
        if !unit.has_shape(dim, 1) || !mult.has_shape(dim, dim * dim) {
            return mismatch(format!(
                "algebra of dimension {dim} needs a {dim}x{} multiplication and a {dim}x1 unit",
                dim * dim
            ));
        }
        Ok(Self { dim, mult, unit })
    }

    /// From constants `(i, j, k, m_{ij}^k)`; unlisted constants are zero
    /// and repeated ones are added.
    pub fn from_constants(dim: usize, constants: &[(usize, usize, usize, Rational)], unit: Vec<Rational>) -> Result<Self> {
        let mut mult = LinearMap::zero(dim, dim * dim);
        for (i, j, k, c) in constants {
            if *i >= dim || *j >= dim || *k >= dim {
                return mismatch(format!("constant ({i}, {j}, {k}) out of range for dimension {dim}"));
            }
            mult.add_at(*k, i * dim + j, c);
        }
        if unit.len() != dim {
            return mismatch(format!("unit has {} entries for dimension {dim}", unit.len()));
        }
        Self::new(mult, LinearMap::column(unit))
    }

    /// The monoid algebra of a multiplication table.
    pub fn monoid_algebra(table: &[Vec<usize>], unit: usize) -> Result<Self> {
        let n = table.len();
        let constants: Vec<_> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, table[i][j], Rational::one()))
            .collect();
        Self::from_constants(n, &constants, basis_vector(n, unit))
    }

    /// `Q[x]/(x^n)` on the basis `1, x, …, x^{n-1}`.
    pub fn truncated_polynomial(n: usize) -> Self {
        let constants: Vec<_> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i + j < n)
            .map(|(i, j)| (i, j, i + j, Rational::one()))
            .collect();
        Self::from_constants(n, &constants, basis_vector(n, 0)).expect("shapes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinearMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinearMap {
        &self.unit
    }

    /// `m_{ij}^k`
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.mult.get(k, i * self.dim + j)
    }

    /// Product of basis vectors as a coordinate vector.
    pub fn product(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.constant(i, j, k).clone()).collect()
    }
}

pub(crate) fn basis_vector(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|k| if k == i { Rational::one() } else { Rational::zero() }).collect()
}

/// `Δ(e_k) = Σ c_k^{ij} e_i ⊗ e_j`, stored as the map `C -> C ⊗ C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimCoalgebra {
    dim: usize,
    comult: LinearMap,
    counit: LinearMap,
}

impl FinDimCoalgebra {
    /// `comult` is `dim² × dim`, `counit` is `1 × dim`.
    pub fn new(comult: LinearMap, counit: LinearMap) -> Result<Self> {
        let dim = counit.cols();
        if !counit.has_shape(1, dim) || !comult.has_shape(dim * dim, dim) {
            return mismatch(format!(
                "coalgebra of dimension {dim} needs a {}x{dim} comultiplication and a 1x{dim} counit",
                dim * dim
            ));
        }
        Ok(Self { dim, comult, counit })
    }

    /// From constants `(k, i, j, c_k^{ij})`.
    pub fn from_constants(dim: usize, constants: &[(usize, usize, usize, Rational)], counit: Vec<Rational>) -> Result<Self> {
        let mut comult = LinearMap::zero(dim * dim, dim);
        for (k, i, j, c) in constants {
            if *i >= dim || *j >= dim || *k >= dim {
                return mismatch(format!("constant ({k}, {i}, {j}) out of range for dimension {dim}"));
            }
            comult.add_at(i * dim + j, *k, c);
        }
        if counit.len() != dim {
            return mismatch(format!("counit has {} entries for dimension {dim}", counit.len()));
        }
        Self::new(comult, LinearMap::row(counit))
    }

    /// Every basis vector group-like: `Δ(e) = e ⊗ e`, `ε(e) = 1`.
    pub fn group_like(n: usize) -> Self {
        let constants: Vec<_> = (0..n).map(|k| (k, k, k, Rational::one())).collect();
        Self::from_constants(n, &constants, vec![Rational::one(); n]).expect("shapes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &LinearMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    /// `c_k^{ij}`
    pub fn constant(&self, k: usize, i: usize, j: usize) -> &Rational {
        self.comult.get(i * self.dim + j, k)
    }

    /// `C ⊗ D` with `Δ = (C ⊗ τ ⊗ D)(Δ_C ⊗ Δ_D)` and `ε = ε_C ⊗ ε_D`.
    pub fn tensor(&self, other: &FinDimCoalgebra) -> FinDimCoalgebra {
        FinDimCoalgebra {
            dim: self.dim * other.dim,
            comult: tensor_comult(self, other),
            counit: self.counit.tensor(&other.counit),
        }
    }
}

pub(crate) fn tensor_comult(c: &FinDimCoalgebra, d: &FinDimCoalgebra) -> LinearMap {
    let middle = LinearMap::tensor_all(&[
        &LinearMap::identity(c.dim),
        &flip(c.dim, d.dim),
        &LinearMap::identity(d.dim),
    ]);
    middle.compose(&c.comult.tensor(&d.comult))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimBialgebra {
    algebra: FinDimAlgebra,
    coalgebra: FinDimCoalgebra,
}

impl FinDimBialgebra {
    pub fn new(algebra: FinDimAlgebra, coalgebra: FinDimCoalgebra) -> Result<Self> {
        if algebra.dim != coalgebra.dim {
            return mismatch(format!(
                "algebra has dimension {} but coalgebra has dimension {}",
                algebra.dim, coalgebra.dim
            ));
        }
        Ok(Self { algebra, coalgebra })
    }

    /// The group algebra of a Cayley table, with group-like basis.
    pub fn group_algebra(table: &[Vec<usize>], unit: usize) -> Result<Self> {
        let algebra = FinDimAlgebra::monoid_algebra(table, unit)?;
        let coalgebra = FinDimCoalgebra::group_like(table.len());
        Self::new(algebra, coalgebra)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &FinDimCoalgebra {
        &self.coalgebra
    }
}

/// `associativity`, `left-unit`, `right-unit`.
pub fn validate_algebra(a: &FinDimAlgebra) -> ValidationReport {
    let n = a.dim;
    let id = LinearMap::identity(n);
    let mut report = ValidationReport::new();
    let lhs = a.mult.compose(&a.mult.tensor(&id));
    let rhs = a.mult.compose(&id.tensor(&a.mult));
    compare(&mut report, "associativity", &lhs, &rhs, &[n, n, n], &[], "(ab)c = a(bc)");
    let left = a.mult.compose(&a.unit.tensor(&id));
    compare(&mut report, "left-unit", &left, &id, &[n], &[], "1a = a");
    let right = a.mult.compose(&id.tensor(&a.unit));
    compare(&mut report, "right-unit", &right, &id, &[n], &[], "a1 = a");
    report
}

/// `coassociativity`, `left-counit`, `right-counit`.
pub fn validate_coalgebra(c: &FinDimCoalgebra) -> ValidationReport {
    let n = c.dim;
    let id = LinearMap::identity(n);
    let mut report = ValidationReport::new();
    let lhs = c.comult.tensor(&id).compose(&c.comult);
    let rhs = id.tensor(&c.comult).compose(&c.comult);
    compare(&mut report, "coassociativity", &lhs, &rhs, &[n], &[], "(Δ ⊗ I)Δ = (I ⊗ Δ)Δ");
    let left = c.counit.tensor(&id).compose(&c.comult);
    compare(&mut report, "left-counit", &left, &id, &[n], &[], "(ε ⊗ I)Δ = I");
    let right = id.tensor(&c.counit).compose(&c.comult);
    compare(&mut report, "right-counit", &right, &id, &[n], &[], "(I ⊗ ε)Δ = I");
    report
}

/// Algebra and coalgebra laws plus compatibility: `comult-multiplicative`
/// (`Δ(ab) = Δ(a)Δ(b)`), `counit-multiplicative`, `comult-unit`
/// (`Δ(1) = 1 ⊗ 1`) and `counit-unit`.
pub fn validate_bialgebra(h: &FinDimBialgebra) -> ValidationReport {
    let (a, c) = (&h.algebra, &h.coalgebra);
    let n = a.dim;
    let mut report = validate_algebra(a);
    report.extend(validate_coalgebra(c));
    let lhs = c.comult.compose(&a.mult);
    let rhs = a.mult.tensor(&a.mult).compose(&tensor_comult(c, c));
    compare(&mut report, "comult-multiplicative", &lhs, &rhs, &[n, n], &[], "Δ(ab) = Δ(a)Δ(b)");
    let lhs = c.counit.compose(&a.mult);
    let rhs = c.counit.tensor(&c.counit);
    compare(&mut report, "counit-multiplicative", &lhs, &rhs, &[n, n], &[], "ε(ab) = ε(a)ε(b)");
    let lhs = c.comult.compose(&a.unit);
    let rhs = a.unit.tensor(&a.unit);
    compare(&mut report, "comult-unit", &lhs, &rhs, &[1], &[], "Δ(1) = 1 ⊗ 1");
    let lhs = c.counit.compose(&a.unit);
    compare(&mut report, "counit-unit", &lhs, &LinearMap::identity(1), &[1], &[], "ε(1) = 1");
    report
}

/// Any of the structures that [`validate_linear_structure`] accepts.
#[derive(Debug, Clone)]
pub enum LinearStructure {
    Algebra(FinDimAlgebra),
    Coalgebra(FinDimCoalgebra),
    Bialgebra(FinDimBialgebra),
    Category(LinearCategory),
    ModuleCategory(HModuleAction),
}

pub fn validate_linear_structure(s: &LinearStructure) -> Result<ValidationReport> {
    Ok(match s {
        LinearStructure::Algebra(a) => validate_algebra(a),
        LinearStructure::Coalgebra(c) => validate_coalgebra(c),
        LinearStructure::Bialgebra(h) => validate_bialgebra(h),
        LinearStructure::Category(c) => super::validate_linear_category(c),
        LinearStructure::ModuleCategory(m) => super::validate_module_category(m)?,
    })
}

/// `comult-preserved`: `Δ_D f = (f ⊗ f) Δ_C`; `counit-preserved`: `ε_D f = ε_C`.
pub fn validate_coalgebra_map(f: &LinearMap, c: &FinDimCoalgebra, d: &FinDimCoalgebra) -> Result<ValidationReport> {
    if !f.has_shape(d.dim, c.dim) {
        return mismatch(format!(
            "map is {}x{} but the coalgebras need {}x{}",
            f.rows(),
            f.cols(),
            d.dim,
            c.dim
        ));
    }
    let mut report = ValidationReport::new();
    let lhs = d.comult.compose(f);
    let rhs = f.tensor(f).compose(&c.comult);
    compare(&mut report, "comult-preserved", &lhs, &rhs, &[c.dim], &[], "Δ f = (f ⊗ f) Δ");
    let lhs = d.counit.compose(f);
    compare(&mut report, "counit-preserved", &lhs, &c.counit, &[c.dim], &[], "ε f = ε");
    Ok(report)
}

fn require_valid(report: ValidationReport, context: &str) -> Result<()> {
    if report.is_valid() {
        return Ok(());
    }
    let mut tagged = ValidationReport::new();
    for v in report.violations {
        tagged.push(&format!("{context}: {}", v.axiom), v.witness, v.message);
    }
    Err(Error::Invalid(tagged))
}

/// Splits a coalgebra map `f: C -> D₁ ⊗ D₂` into
/// `f₁ = (I ⊗ ε) f` and `f₂ = (ε ⊗ I) f`.
///
/// The inputs are validated first; afterwards `(f₁ ⊗ f₂) Δ_C = f` is
/// checked (tag `reassembly`).
pub fn split_coalgebra_map(
    f: &LinearMap,
    c: &FinDimCoalgebra,
    d1: &FinDimCoalgebra,
    d2: &FinDimCoalgebra,
) -> Result<(LinearMap, LinearMap)> {
    require_valid(validate_coalgebra(c), "source")?;
    require_valid(validate_coalgebra(d1), "first target")?;
    require_valid(validate_coalgebra(d2), "second target")?;
    let d = d1.tensor(d2);
    validate_coalgebra_map(f, c, &d)?.into_result()?;
    let f1 = LinearMap::identity(d1.dim).tensor(&d2.counit).compose(f);
    let f2 = d1.counit.tensor(&LinearMap::identity(d2.dim)).compose(f);
    let mut report = ValidationReport::new();
    let back = f1.tensor(&f2).compose(&c.comult);
    compare(&mut report, "reassembly", &back, f, &[c.dim], &[], "(f₁ ⊗ f₂)Δ = f");
    report.into_result()?;
    Ok((f1, f2))
}

/// Inverse of [`split_coalgebra_map`]: `f = (f₁ ⊗ f₂) Δ_C`.
///
/// Requires `f₁`, `f₂` to be coalgebra maps and
/// `(f₂ ⊗ f₁) Δ_C = τ (f₁ ⊗ f₂) Δ_C` (tag `compatibility`). The result
/// is checked to be a coalgebra map with `(I ⊗ ε) f = f₁`.
pub fn assemble_coalgebra_map(
    f1: &LinearMap,
    f2: &LinearMap,
    c: &FinDimCoalgebra,
    d1: &FinDimCoalgebra,
    d2: &FinDimCoalgebra,
) -> Result<LinearMap> {
    require_valid(validate_coalgebra(c), "source")?;
    require_valid(validate_coalgebra(d1), "first target")?;
    require_valid(validate_coalgebra(d2), "second target")?;
    let mut report = validate_coalgebra_map(f1, c, d1)?;
    report.extend(validate_coalgebra_map(f2, c, d2)?);
    report.into_result()?;
    let mut report = ValidationReport::new();
    let lhs = f2.tensor(f1).compose(&c.comult);
    let rhs = flip(d1.dim, d2.dim).compose(&f1.tensor(f2)).compose(&c.comult);
    compare(&mut report, "compatibility", &lhs, &rhs, &[c.dim], &[], "(f₂ ⊗ f₁)Δ = τ(f₁ ⊗ f₂)Δ");
    report.into_result()?;

    let f = f1.tensor(f2).compose(&c.comult);
    let d = d1.tensor(d2);
    let mut report = validate_coalgebra_map(&f, c, &d)?;
    let first = LinearMap::identity(d1.dim).tensor(&d2.counit).compose(&f);
    compare(&mut report, "first-leg", &first, f1, &[c.dim], &[], "(I ⊗ ε)f = f₁");
    report.into_result()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational::rational;
    use crate::samples::cyclic_table;

    #[test]
    fn group_algebra_of_z2_is_a_bialgebra() {
        let h = FinDimBialgebra::group_algebra(&cyclic_table(2), 0).unwrap();
        assert!(validate_bialgebra(&h).is_valid());
    }

    #[test]
    fn truncated_polynomials_are_algebras() {
        for n in 1..5 {
            assert!(validate_algebra(&FinDimAlgebra::truncated_polynomial(n)).is_valid());
        }
        let a = FinDimAlgebra::truncated_polynomial(2);
        assert_eq!(a.constant(1, 1, 0), &rational(0, 1));
        assert_eq!(a.constant(0, 1, 1), &rational(1, 1));
    }

    #[test]
    fn zero_counit_on_t_breaks_the_counit_law() {
        let one = rational(1, 1);
        let algebra = FinDimAlgebra::monoid_algebra(&cyclic_table(2), 0).unwrap();
        let coalgebra = FinDimCoalgebra::from_constants(
            2,
            &[(0, 0, 0, one.clone()), (1, 1, 1, one.clone())],
            vec![one, rational(0, 1)],
        )
        .unwrap();
        let h = FinDimBialgebra::new(algebra, coalgebra).unwrap();
        let report = validate_bialgebra(&h);
        assert!(report.cites("left-counit") && report.cites("right-counit"), "{report}");
    }

    #[test]
    fn broken_constants_are_reported() {
        // e1 · e1 = 2 e1 with unit e0 is an algebra; dropping e0 · e_i breaks the unit
        let one = rational(1, 1);
        let a = FinDimAlgebra::from_constants(
            2,
            &[
                (0, 0, 0, one.clone()),
                (0, 1, 1, one.clone()),
                (1, 0, 1, one.clone()),
                (1, 1, 1, rational(2, 1)),
            ],
            vec![one.clone(), rational(0, 1)],
        )
        .unwrap();
        assert!(validate_algebra(&a).is_valid());
        let b = FinDimAlgebra::from_constants(2, &[(1, 1, 0, one.clone())], vec![one, rational(0, 1)]).unwrap();
        let report = validate_algebra(&b);
        assert!(report.cites("left-unit") && report.cites("right-unit"), "{report}");
    }

    #[test]
    fn shapes_are_checked() {
        assert!(matches!(
            FinDimAlgebra::new(LinearMap::zero(2, 3), LinearMap::zero(2, 1)),
            Err(Error::DimensionMismatch(_))
        ));
        let a = FinDimAlgebra::truncated_polynomial(2);
        let c = FinDimCoalgebra::group_like(3);
        assert!(matches!(FinDimBialgebra::new(a, c), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn group_like_split_and_assemble() {
        let c = FinDimCoalgebra::group_like(3);
        let d1 = FinDimCoalgebra::group_like(2);
        let d2 = FinDimCoalgebra::group_like(2);
        let targets = [(0, 1), (1, 1), (1, 0)];
        let f = LinearMap::from_fn(4, 3, |r, k| {
            if r == targets[k].0 * 2 + targets[k].1 { rational(1, 1) } else { rational(0, 1) }
        });
        let (f1, f2) = split_coalgebra_map(&f, &c, &d1, &d2).unwrap();
        for (k, &(p, q)) in targets.iter().enumerate() {
            assert_eq!(f1.get(p, k), &rational(1, 1));
            assert_eq!(f2.get(q, k), &rational(1, 1));
        }
        assert_eq!(assemble_coalgebra_map(&f1, &f2, &c, &d1, &d2).unwrap(), f);
    }

    #[test]
    fn trivial_second_factor() {
        let c = FinDimCoalgebra::group_like(2);
        let k = FinDimCoalgebra::group_like(1);
        // c ↦ c ⊗ 1
        let f = LinearMap::identity(2);
        let (f1, f2) = split_coalgebra_map(&f, &c, &c, &k).unwrap();
        assert_eq!(f1, LinearMap::identity(2));
        assert_eq!(&f2, c.counit());
    }

    /// `Δ1 = 1 ⊗ 1`, `Δx = x ⊗ 1 + 1 ⊗ x`.
    fn dual_numbers() -> FinDimCoalgebra {
        let one = rational(1, 1);
        FinDimCoalgebra::from_constants(
            2,
            &[(0, 0, 0, one.clone()), (1, 1, 0, one.clone()), (1, 0, 1, one.clone())],
            vec![one, rational(0, 1)],
        )
        .unwrap()
    }

    #[test]
    fn primitive_split_and_assemble() {
        let c = dual_numbers();
        assert!(validate_coalgebra(&c).is_valid());
        let (l, m) = (rational(3, 2), rational(-5, 7));
        // 1 ↦ 1 ⊗ 1, x ↦ λ x ⊗ 1 + μ 1 ⊗ x
        let mut f = LinearMap::zero(4, 2);
        f.set(0, 0, rational(1, 1));
        f.set(2, 1, l.clone());
        f.set(1, 1, m.clone());
        let (f1, f2) = split_coalgebra_map(&f, &c, &c, &c).unwrap();
        assert_eq!(f1.get(1, 1), &l);
        assert_eq!(f2.get(1, 1), &m);
        assert_eq!(assemble_coalgebra_map(&f1, &f2, &c, &c, &c).unwrap(), f);
    }

    #[test]
    fn non_coalgebra_map_is_refused() {
        let c = FinDimCoalgebra::group_like(2);
        let k = FinDimCoalgebra::group_like(1);
        let f = LinearMap::identity(2).scale(&rational(2, 1));
        assert!(matches!(split_coalgebra_map(&f, &c, &c, &k), Err(Error::Invalid(_))));
    }
}
