//! Linear categories, module categories over a bialgebra, smash products
//! and simple twisting systems between linear categories.

use super::matrix::{flip, LinearMap};
use super::structures::validate_bialgebra;
use super::{compare, FinDimAlgebra, FinDimBialgebra};
use crate::category::ObjectId;
use crate::error::{Error, Result};
use crate::report::ValidationReport;

fn mismatch<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::DimensionMismatch(msg.into()))
}

fn id(n: usize) -> LinearMap {
    LinearMap::identity(n)
}

/// A category enriched in finite-dimensional rational vector spaces.
///
/// `compose(x, y, z)` is the map `hom(x, y) ⊗ hom(y, z) -> hom(x, z)` and
/// `identity(x)` the map `K -> hom(x, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCategory {
    objects: usize,
    dims: Vec<usize>,
    compose: Vec<LinearMap>,
    identity: Vec<LinearMap>,
}

impl LinearCategory {
    /// `dims[x][y] = dim hom(x, y)`; `compose` is indexed by
    /// `(x * n + y) * n + z`.
    pub fn new(dims: Vec<Vec<usize>>, compose: Vec<LinearMap>, identity: Vec<LinearMap>) -> Result<Self> {
        let n = dims.len();
        if dims.iter().any(|row| row.len() != n) {
            return mismatch("hom dimension table must be square");
        }
        let dims: Vec<usize> = dims.into_iter().flatten().collect();
        if compose.len() != n * n * n || identity.len() != n {
            return mismatch(format!("need {} composition maps and {n} identities", n * n * n));
        }
        let d = |x: usize, y: usize| dims[x * n + y];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let m = &compose[(x * n + y) * n + z];
                    if !m.has_shape(d(x, z), d(x, y) * d(y, z)) {
                        return mismatch(format!(
                            "composition ({x}, {y}, {z}) is {}x{}, expected {}x{}",
                            m.rows(),
                            m.cols(),
                            d(x, z),
                            d(x, y) * d(y, z)
                        ));
                    }
                }
            }
            if !identity[x].has_shape(d(x, x), 1) {
                return mismatch(format!("identity of {x} must be {}x1", d(x, x)));
            }
        }
        Ok(Self { objects: n, dims, compose, identity })
    }

    /// An algebra as a linear category with one object.
    pub fn from_algebra(a: &FinDimAlgebra) -> Self {
        Self {
            objects: 1,
            dims: vec![a.dim()],
            compose: vec![a.mult().clone()],
            identity: vec![a.unit().clone()],
        }
    }

    /// The algebra placed at every object: `hom(x, x) = A` and all other
    /// hom-spaces are zero.
    pub fn diagonal(n: usize, a: &FinDimAlgebra) -> Self {
        let d = a.dim();
        let dims = (0..n).map(|x| (0..n).map(|y| if x == y { d } else { 0 }).collect()).collect();
        let mut compose = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    compose.push(if x == y && y == z {
                        a.mult().clone()
                    } else {
                        let dd = |p: usize, q: usize| if p == q { d } else { 0 };
                        LinearMap::zero(dd(x, z), dd(x, y) * dd(y, z))
                    });
                }
            }
        }
        Self::new(dims, compose, vec![a.unit().clone(); n]).expect("shapes")
    }

    pub fn num_objects(&self) -> usize {
        self.objects
    }

    pub fn dim(&self, x: ObjectId, y: ObjectId) -> usize {
        self.dims[x * self.objects + y]
    }

    pub fn compose(&self, x: ObjectId, y: ObjectId, z: ObjectId) -> &LinearMap {
        &self.compose[(x * self.objects + y) * self.objects + z]
    }

    pub fn identity(&self, x: ObjectId) -> &LinearMap {
        &self.identity[x]
    }

    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.dims.chunks(self.objects.max(1)).take(self.objects).map(<[_]>::to_vec).collect()
    }
}

/// `associativity`, `left-unit` and `right-unit` for every tuple of objects.
pub fn validate_linear_category(c: &LinearCategory) -> ValidationReport {
    let n = c.objects;
    let mut report = ValidationReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for t in 0..n {
                    let lhs = c.compose(x, z, t).compose(&c.compose(x, y, z).tensor(&id(c.dim(z, t))));
                    let rhs = c.compose(x, y, t).compose(&id(c.dim(x, y)).tensor(c.compose(y, z, t)));
                    let dims = [c.dim(x, y), c.dim(y, z), c.dim(z, t)];
                    compare(&mut report, "associativity", &lhs, &rhs, &dims, &[x, y, z, t], "(fg)h = f(gh)");
                }
            }
            let dxy = c.dim(x, y);
            let left = c.compose(x, x, y).compose(&c.identity(x).tensor(&id(dxy)));
            compare(&mut report, "left-unit", &left, &id(dxy), &[dxy], &[x, y], "1 ∘ f = f");
            let right = c.compose(x, y, y).compose(&id(dxy).tensor(c.identity(y)));
            compare(&mut report, "right-unit", &right, &id(dxy), &[dxy], &[x, y], "f ∘ 1 = f");
        }
    }
    report
}

/// A bialgebra `H` acting on every hom-space of a linear category.
/// `action[x * n + y]` is the map `H ⊗ hom(x, y) -> hom(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HModuleAction {
    pub h: FinDimBialgebra,
    pub category: LinearCategory,
    pub action: Vec<LinearMap>,
}

impl HModuleAction {
    pub fn action(&self, x: ObjectId, y: ObjectId) -> &LinearMap {
        &self.action[x * self.category.objects + y]
    }

    /// `h · f = ε(h) f` on every hom-space.
    pub fn trivial(h: FinDimBialgebra, category: LinearCategory) -> Self {
        let n = category.objects;
        let action = (0..n * n)
            .map(|i| h.coalgebra().counit().tensor(&id(category.dims[i])))
            .collect();
        Self { h, category, action }
    }

    fn check_shapes(&self) -> Result<()> {
        let n = self.category.objects;
        let nh = self.h.dim();
        if self.action.len() != n * n {
            return mismatch(format!("need {} action maps", n * n));
        }
        for x in 0..n {
            for y in 0..n {
                let d = self.category.dim(x, y);
                if !self.action(x, y).has_shape(d, nh * d) {
                    return mismatch(format!("action on hom({x}, {y}) must be {d}x{}", nh * d));
                }
            }
        }
        Ok(())
    }
}

/// Checks that every hom-space is an `H`-module and that composition and
/// identities are `H`-linear:
///
/// * `module-associativity`: `(hk) · f = h · (k · f)`;
/// * `module-unit`: `1 · f = f`;
/// * `composition-linear`: `h · (f ∘ g) = Σ (h₍₁₎ · f) ∘ (h₍₂₎ · g)`;
/// * `identity-linear`: `h · 1_x = ε(h) 1_x`.
///
/// `H` and the category are validated too, with their tags prefixed.
pub fn validate_module_category(m: &HModuleAction) -> Result<ValidationReport> {
    m.check_shapes()?;
    let mut report = ValidationReport::new();
    for v in validate_bialgebra(&m.h).violations {
        report.push(&format!("bialgebra: {}", v.axiom), v.witness, v.message);
    }
    for v in validate_linear_category(&m.category).violations {
        report.push(&format!("category: {}", v.axiom), v.witness, v.message);
    }
    if !report.is_valid() {
        return Ok(report);
    }
    let c = &m.category;
    let n = c.objects;
    let nh = m.h.dim();
    let (mh, uh) = (m.h.algebra().mult(), m.h.algebra().unit());
    let (dh, eh) = (m.h.coalgebra().comult(), m.h.coalgebra().counit());
    for x in 0..n {
        for y in 0..n {
            let d = c.dim(x, y);
            let act = m.action(x, y);
            let lhs = act.compose(&mh.tensor(&id(d)));
            let rhs = act.compose(&id(nh).tensor(act));
            compare(&mut report, "module-associativity", &lhs, &rhs, &[nh, nh, d], &[x, y], "(hk) · f = h · (k · f)");
            let lhs = act.compose(&uh.tensor(&id(d)));
            compare(&mut report, "module-unit", &lhs, &id(d), &[d], &[x, y], "1 · f = f");
            for z in 0..n {
                let (dyz, dxz) = (c.dim(y, z), c.dim(x, z));
                let lhs = m.action(x, z).compose(&id(nh).tensor(c.compose(x, y, z)));
                let rhs = c
                    .compose(x, y, z)
                    .compose(&act.tensor(m.action(y, z)))
                    .compose(&LinearMap::tensor_all(&[&id(nh), &flip(nh, d), &id(dyz)]))
                    .compose(&LinearMap::tensor_all(&[dh, &id(d), &id(dyz)]));
                debug_assert_eq!(lhs.rows(), dxz);
                compare(&mut report, "composition-linear", &lhs, &rhs, &[nh, d, dyz], &[x, y, z], "h · (f ∘ g) = Σ (h₍₁₎ · f) ∘ (h₍₂₎ · g)");
            }
        }
        let dxx = c.dim(x, x);
        let lhs = m.action(x, x).compose(&id(nh).tensor(c.identity(x)));
        let rhs = c.identity(x).compose(eh);
        compare(&mut report, "identity-linear", &lhs, &rhs, &[nh], &[x], "h · 1 = ε(h) 1");
        debug_assert_eq!(lhs.rows(), dxx);
    }
    Ok(report)
}

/// `A # H`: `hom(x, y) = hom_A(x, y) ⊗ H` with
/// `(f ⊗ h) ∘ (f' ⊗ h') = Σ f ∘ (h₍₁₎ · f') ⊗ h₍₂₎ h'`.
///
/// The module category is validated first; the result is validated as a
/// linear category.
pub fn smash_product(m: &HModuleAction) -> Result<LinearCategory> {
    validate_module_category(m)?.into_result()?;
    let c = &m.category;
    let n = c.objects;
    let nh = m.h.dim();
    let (mh, uh, dh) = (m.h.algebra().mult(), m.h.algebra().unit(), m.h.coalgebra().comult());
    let dims: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| c.dim(x, y) * nh).collect()).collect();
    let mut compose = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (dxy, dyz) = (c.dim(x, y), c.dim(y, z));
                // A_xy ⊗ H ⊗ A_yz ⊗ H -> A_xy ⊗ H ⊗ H ⊗ A_yz ⊗ H -> A_xy ⊗ H ⊗ A_yz ⊗ H ⊗ H
                // -> A_xy ⊗ A_yz ⊗ H ⊗ H -> A_xz ⊗ H
                let split = LinearMap::tensor_all(&[&id(dxy), dh, &id(dyz), &id(nh)]);
                let swap = LinearMap::tensor_all(&[&id(dxy), &id(nh), &flip(nh, dyz), &id(nh)]);
                let act = LinearMap::tensor_all(&[&id(dxy), m.action(y, z), &id(nh), &id(nh)]);
                let mult = c.compose(x, y, z).tensor(mh);
                compose.push(mult.compose(&act).compose(&swap).compose(&split));
            }
        }
    }
    let identity = (0..n).map(|x| c.identity(x).tensor(uh)).collect();
    let out = LinearCategory::new(dims, compose, identity)?;
    validate_linear_category(&out).into_result()?;
    Ok(out)
}

/// A simple twisting system between linear categories: a bracket `|xyz|`
/// and maps `hom_B(x, y) ⊗ hom_A(y, z) -> hom_A(x, |xyz|) ⊗ hom_B(|xyz|, z)`,
/// both indexed by `(x * n + y) * n + z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSimpleTwisting {
    pub bracket: Vec<ObjectId>,
    pub tilde: Vec<LinearMap>,
}

impl LinearSimpleTwisting {
    fn at(&self, n: usize, x: ObjectId, y: ObjectId, z: ObjectId) -> (ObjectId, &LinearMap) {
        let i = (x * n + y) * n + z;
        (self.bracket[i], &self.tilde[i])
    }
}

fn check_twisting_shapes(a: &LinearCategory, b: &LinearCategory, st: &LinearSimpleTwisting) -> Result<()> {
    let n = a.objects;
    if b.objects != n {
        return mismatch("the two categories must have the same objects");
    }
    if st.bracket.len() != n * n * n || st.tilde.len() != n * n * n {
        return mismatch(format!("bracket and tilde need {} entries", n * n * n));
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (u, t) = st.at(n, x, y, z);
                if u >= n {
                    return mismatch(format!("bracket value {u} out of range"));
                }
                let (rows, cols) = (a.dim(x, u) * b.dim(u, z), b.dim(x, y) * a.dim(y, z));
                if !t.has_shape(rows, cols) {
                    return mismatch(format!(
                        "tilde ({x}, {y}, {z}) is {}x{}, expected {rows}x{cols}",
                        t.rows(),
                        t.cols()
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Either the bracket equation holds and the two sides agree, or it fails
/// and both sides vanish.
#[allow(clippy::too_many_arguments)]
fn compare_or_vanish(
    report: &mut ValidationReport,
    tag: &str,
    holds: bool,
    lhs: &LinearMap,
    rhs: &LinearMap,
    dims: &[usize],
    witness: &[usize],
    what: &str,
) {
    if holds {
        compare(report, tag, lhs, rhs, dims, witness, what);
    } else if !lhs.is_zero() || !rhs.is_zero() {
        report.push(
            tag,
            witness.to_vec(),
            format!("bracket equation for {what} fails at {witness:?}, so both sides must be zero"),
        );
    }
}

/// Checks the linear simple-twisting conditions for every tuple of objects:
///
/// * `compose-b`: if `|xy|yzt|| = |xzt|` then
///   `(I ⊗ b)(R̃ ⊗ I)(I ⊗ R̃) = R̃(b ⊗ I)` on `B_xy ⊗ B_yz ⊗ A_zt`,
///   otherwise both sides are zero;
/// * `compose-a`: if `||xyz|zt| = |xyt|` then
///   `(a ⊗ I)(I ⊗ R̃)(R̃ ⊗ I) = R̃(I ⊗ a)` on `B_xy ⊗ A_yz ⊗ A_zt`,
///   otherwise both sides are zero;
/// * `unit-b`: if `|xxy| = y` then `R̃(1 ⊗ I) = I ⊗ 1`, otherwise both zero;
/// * `unit-a`: if `|xyy| = x` then `R̃(I ⊗ 1) = 1 ⊗ I`, otherwise both zero.
pub fn validate_linear_simple_twisting(
    a: &LinearCategory,
    b: &LinearCategory,
    st: &LinearSimpleTwisting,
) -> Result<ValidationReport> {
    check_twisting_shapes(a, b, st)?;
    let n = a.objects;
    let mut report = ValidationReport::new();
    let br = |x, y, z| st.at(n, x, y, z).0;
    let tl = |x, y, z| st.at(n, x, y, z).1;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for t in 0..n {
                    // B_xy ⊗ B_yz ⊗ A_zt
                    let v = br(y, z, t);
                    let (w1, w2) = (br(x, y, v), br(x, z, t));
                    let lhs = id(a.dim(x, w1))
                        .tensor(b.compose(w1, v, t))
                        .compose(&tl(x, y, v).tensor(&id(b.dim(v, t))))
                        .compose(&id(b.dim(x, y)).tensor(tl(y, z, t)));
                    let rhs = tl(x, z, t).compose(&b.compose(x, y, z).tensor(&id(a.dim(z, t))));
                    let dims = [b.dim(x, y), b.dim(y, z), a.dim(z, t)];
                    compare_or_vanish(&mut report, "compose-b", w1 == w2, &lhs, &rhs, &dims, &[x, y, z, t], "|xy|yzt|| = |xzt|");

                    // B_xy ⊗ A_yz ⊗ A_zt
                    let w = br(x, y, z);
                    let (s1, s2) = (br(w, z, t), br(x, y, t));
                    let lhs = a
                        .compose(x, w, s1)
                        .tensor(&id(b.dim(s1, t)))
                        .compose(&id(a.dim(x, w)).tensor(tl(w, z, t)))
                        .compose(&tl(x, y, z).tensor(&id(a.dim(z, t))));
                    let rhs = tl(x, y, t).compose(&id(b.dim(x, y)).tensor(a.compose(y, z, t)));
                    let dims = [b.dim(x, y), a.dim(y, z), a.dim(z, t)];
                    compare_or_vanish(&mut report, "compose-a", s1 == s2, &lhs, &rhs, &dims, &[x, y, z, t], "||xyz|zt| = |xyt|");
                }
            }
            let u = br(x, x, y);
            let lhs = tl(x, x, y).compose(&b.identity(x).tensor(&id(a.dim(x, y))));
            let rhs = id(a.dim(x, y)).tensor(b.identity(y));
            compare_or_vanish(&mut report, "unit-b", u == y, &lhs, &rhs, &[a.dim(x, y)], &[x, y], "|xxy| = y");

            let u = br(x, y, y);
            let lhs = tl(x, y, y).compose(&id(b.dim(x, y)).tensor(a.identity(y)));
            let rhs = a.identity(x).tensor(&id(b.dim(x, y)));
            compare_or_vanish(&mut report, "unit-a", u == x, &lhs, &rhs, &[b.dim(x, y)], &[x, y], "|xyy| = x");
        }
    }
    Ok(report)
}

/// The twisted tensor product of a linear simple twisting system:
/// `hom(x, y) = ⊕_u A_xu ⊗ B_uy` with summands in ascending `u`, and
/// composition of the `(u, v)` block through `R̃(u, y, v)` into summand
/// `|uyv|`.
///
/// The system is validated first; the result is validated as a linear
/// category.
pub fn simple_twisting_product(
    a: &LinearCategory,
    b: &LinearCategory,
    st: &LinearSimpleTwisting,
) -> Result<LinearCategory> {
    validate_linear_simple_twisting(a, b, st)?.into_result()?;
    let n = a.objects;
    let summand = |x: usize, u: usize, y: usize| a.dim(x, u) * b.dim(u, y);
    let offset = |x: usize, u: usize, y: usize| (0..u).map(|w| summand(x, w, y)).sum::<usize>();
    let total = |x: usize, y: usize| offset(x, n, y);

    let dims: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| total(x, y)).collect()).collect();
    let mut compose = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut m = LinearMap::zero(total(x, z), total(x, y) * total(y, z));
                for u in 0..n {
                    for v in 0..n {
                        let (left, right) = (summand(x, u, y), summand(y, v, z));
                        if left == 0 || right == 0 {
                            continue;
                        }
                        let (w, t) = st.at(n, u, y, v);
                        let block = a
                            .compose(x, u, w)
                            .tensor(b.compose(w, v, z))
                            .compose(&LinearMap::tensor_all(&[&id(a.dim(x, u)), t, &id(b.dim(v, z))]));
                        let row0 = offset(x, w, z);
                        let (lo, ro) = (offset(x, u, y), offset(y, v, z));
                        for r in 0..block.rows() {
                            for c in 0..block.cols() {
                                let value = block.get(r, c);
                                let (p, q) = (c / right, c % right);
                                let col = (lo + p) * total(y, z) + ro + q;
                                m.add_at(row0 + r, col, value);
                            }
                        }
                    }
                }
                compose.push(m);
            }
        }
    }
    let identity = (0..n)
        .map(|x| {
            let mut e = LinearMap::zero(total(x, x), 1);
            let unit = a.identity(x).tensor(b.identity(x));
            let o = offset(x, x, x);
            for r in 0..unit.rows() {
                e.set(o + r, 0, unit.get(r, 0).clone());
            }
            e
        })
        .collect();
    let out = LinearCategory::new(dims, compose, identity)?;
    validate_linear_category(&out).into_result()?;
    Ok(out)
}

/// The simple twisting system behind the smash product: `H` at every
/// object, `|xyz| = z`, `R̃(h ⊗ f) = Σ (h₍₁₎ · f) ⊗ h₍₂₎` when `x = y`
/// and zero otherwise. Returns the category of `H` and the system.
pub fn smash_twisting(m: &HModuleAction) -> Result<(LinearCategory, LinearSimpleTwisting)> {
    m.check_shapes()?;
    let c = &m.category;
    let n = c.objects;
    let nh = m.h.dim();
    let hcat = LinearCategory::diagonal(n, m.h.algebra());
    let dh = m.h.coalgebra().comult();
    let mut bracket = Vec::with_capacity(n * n * n);
    let mut tilde = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                bracket.push(z);
                let d = c.dim(x, z);
                let t = if x == y {
                    m.action(x, z)
                        .tensor(&id(nh))
                        .compose(&id(nh).tensor(&flip(nh, d)))
                        .compose(&dh.tensor(&id(d)))
                } else {
                    LinearMap::zero(c.dim(x, z) * hcat.dim(z, z), hcat.dim(x, y) * c.dim(y, z))
                };
                tilde.push(t);
            }
        }
    }
    Ok((hcat, LinearSimpleTwisting { bracket, tilde }))
}
