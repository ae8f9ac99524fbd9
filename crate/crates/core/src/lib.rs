//! Exact algorithms for graded ideals of finite colength in `k[x, y]` over the
//! rationals: Hilbert-Samuel sequences, the finite-type table, normal forms and
//! isomorphism testing under linear changes of variables.

pub mod catalog;
pub mod forms;
pub mod ideal;
pub mod invariants;
pub mod iso;
pub mod linalg;
pub mod sample;
pub mod sequence;
pub mod text;
mod univariate;

pub use catalog::{
    normal_forms, verify_catalog, CatalogEntry, CatalogError, CatalogReport, EntryCheck,
    PairVerdict,
};
pub use forms::{gcd_all, gcd_forms, BinaryForm, FormError, LinearChange, MultiplicityPartition};
pub use ideal::{substitute_ideal, GradedComponent, GradedIdeal, IdealError};
pub use invariants::{
    pencil_discriminant, structural_invariant, InvariantError, RunData, StructuralInvariant,
};
pub use iso::{are_isomorphic, IsoVerdict};
pub use linalg::{rref, spaces_equal, LinalgError, RowBasis, Scalar};
pub use sample::{sample_ideal, sample_ideal_with_retries, SAMPLE_RETRIES};
pub use sequence::{
    enumerate_sequences, HsSequence, JumpIndices, SequenceError, TableRow, TypeLabel,
};
pub use text::{
    format_ideal, format_sequence, parse_form, parse_ideal, parse_sequence, ParseError,
};
