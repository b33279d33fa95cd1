//! Finite-dimensional linear structures over the rationals, with exact
//! arithmetic throughout.
//!
//! Every space comes with a fixed basis and every map is a dense matrix
//! whose columns are images of domain basis vectors. In a tensor product
//! `X ⊗ Y` the basis vector `e_i ⊗ e_j` has index `i * dim(Y) + j`, so the
//! first factor is the slow index. The braiding is the flip
//! `x ⊗ y ↦ y ⊗ x`.

mod category;
mod matrix;
mod rational;
mod structures;
mod twisting;

pub use category::{
    simple_twisting_product, smash_product, smash_twisting, validate_linear_category,
    validate_linear_simple_twisting, validate_module_category, HModuleAction, LinearCategory,
    LinearSimpleTwisting,
};
pub use matrix::{flip, split_index, LinearMap};
pub use rational::{format_rational, parse_rational, rational, Rational};
pub use structures::{
    assemble_coalgebra_map, split_coalgebra_map, validate_algebra, validate_bialgebra,
    validate_coalgebra, validate_coalgebra_map, validate_linear_structure, FinDimAlgebra,
    FinDimBialgebra, FinDimCoalgebra, LinearStructure,
};
pub use twisting::{
    double_cross_product, double_cross_twisting, twisted_tensor_algebra, validate_matched_pair_of_bialgebras,
    validate_twisting_map,
};

use crate::report::ValidationReport;

/// Compares two maps with the same shape and records one violation per
/// differing domain basis vector. `dims` are the factor dimensions of the
/// domain; the witness is `prefix` followed by the decoded basis index.
pub(crate) fn compare(
    report: &mut ValidationReport,
    tag: &str,
    lhs: &LinearMap,
    rhs: &LinearMap,
    dims: &[usize],
    prefix: &[usize],
    what: &str,
) {
    for col in lhs.differing_columns(rhs) {
        let mut witness = prefix.to_vec();
        witness.extend(split_index(col, dims));
        report.push(tag, witness.clone(), format!("{what} fails on basis vector {witness:?}"));
    }
}
