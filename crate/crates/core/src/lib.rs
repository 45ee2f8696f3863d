//! Exact and floating-point kernels for Cl(n,0) and its eight-dimensional
//! even subalgebra in four dimensions, plus a deterministic harness that
//! checks the algebra's identities.
//!
//! - [`clifford`]: dense Cl(n,0), n ≤ 5, positive signature.
//! - [`kappa`]: the even subalgebra of Cl(4,0): table-driven product,
//!   dual-quaternion view, split-complex quadratic form, both norms, the
//!   orthogonality constraint and a constrained sampler.
//! - [`harness`]: named verification suites with JSON reports.

pub mod clifford;
pub mod error;
pub mod field;
pub mod harness;
pub mod kappa;

pub use clifford::{blade_product, even_basis, Blade, Multivector};
pub use error::{CliffordError, ElementParseError, KappaError, ParseCoeffError, SplitResidual};
pub use field::{Field, FieldMode, Rational};
pub use kappa::{
    derive_table, qform, sample_s7, split_mul, to_dual_quaternion, DualQuatView, KElement, Orientation, Quaternion,
    SplitScalar, StructureTable, TableEntry,
};
