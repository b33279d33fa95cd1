//! Finite categories, twisting systems and matched pairs between them, and
//! the twisted tensor (bicrossed) products they produce.
//!
//! Two realizations are provided:
//!
//! * set-based categories given by explicit composition tables
//!   ([`category`], [`twisting`], [`product`], [`thin`]);
//! * finite-dimensional algebras, coalgebras, bialgebras and linear
//!   categories over the rationals, with exact arithmetic ([`linear`]).
//!
//! Throughout, a morphism in `hom(x, y)` is an arrow `y -> x`.

pub mod category;
pub mod error;
pub mod formats;
pub mod linear;
pub mod product;
pub mod report;
pub mod samples;
pub mod thin;
pub mod twisting;

pub use category::{FiniteCategory, Functor, Morphism, MorphismId, ObjectId, WideSubcategory};
pub use error::{Error, Result};
pub use product::{
    bicrossed_groupoid_inverse, check_factorization, derive_twisting, semidirect_product,
    twisted_tensor_product, DerivedTwisting, Factorization, TensorProduct,
};
pub use report::{ValidationReport, Violation};
pub use thin::{
    bracket_to_twisting, compute_t, construct_cst, enumerate_brackets, twisting_to_bracket,
    validate_bracket, BracketFunction, CstCategory,
};
pub use twisting::{
    enumerate_twisting_systems, extract_simple, matched_pair_to_twisting,
    twisting_to_matched_pair, validate_matched_pair, validate_twisting_system, Factored,
    MatchedPair, SimpleTwisting, TwistingSystem,
};
