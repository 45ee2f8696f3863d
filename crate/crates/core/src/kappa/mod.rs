//! The eight-dimensional even subalgebra of Cl(4,0) with orientation λ.
//!
//! Elements are stored as eight coefficients against the λ-weighted basis
//! `1, λe_xe_y, λe_ze_x, λe_ye_z, λe_xe_∞, λe_ye_∞, λe_ze_∞, λI₃e_∞`.
//! Products are table driven; [`derive_table`] and [`KElement::embed_to_cl40`]
//! tie every table cell back to the generic Clifford kernel.

mod basis;
mod dual;
mod element;
mod json;
mod sample;
mod split;
mod table;

pub use basis::{
    bare_basis, bare_blade, lambda_weight, weighted_basis, weighted_label, Orientation, BASIS_LABELS, BASIS_WORDS, DIM, PSEUDO,
};
pub use dual::{compose_in_cl40, from_dual_quaternion, qconj, qmul, qnormsq, to_dual_quaternion, DualQuatView, Quaternion};
pub use element::KElement;
pub use json::ElementJson;
pub use sample::{sample_s7, sample_s7_with, SAMPLE_TOL};
pub use split::{
    default_tolerance, epsilon, epsilon_from_pseudo_coeff, norm_b, norm_b_sq, pseudo_coeff_from_epsilon, qform,
    qform_with_tol, split_mul, NormError, SplitScalar,
};
pub use table::{
    compare_tables, derive_table, transcribed_entries, CellMismatch, StructureTable, TableComparison, TableEntry,
    TRANSCRIBED_CELLS,
};
