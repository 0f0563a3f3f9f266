//! Generalized Haah codes (ₓ𝕏_Z codes) over finite groups.
//!
//! A code is fixed by a finite group `G`, subsets `A, B ∈ F₂[G]^q` and a set
//! of pairwise commuting `q × q` matrices. Each matrix contributes one Z-type
//! and one X-type stabilizer per group element, acting on `2q|G|` qubits.
//! The crate builds the stabilizers, checks commutation, computes logical
//! dimensions by rank over F₂ (or F_p for qudits) and cross-checks small
//! cases against a dense-state oracle.

pub mod algebra;
pub mod analysis;
pub mod bits;
pub mod cli;
pub mod group;
pub mod linalg;
pub mod metric;
pub mod oracle;
pub mod pauli;
pub mod presets;
pub mod spec_file;

pub use algebra::{AlgebraElement, AlgebraMatrix, BinaryMatrix, CodeMatrix, WeightedAlgebraElement, ZdMatrix};
pub use analysis::{
    degeneracy_sweep, locality_check, logical_qubit_count, logical_qudit_count, matrices_commute_check, verify_commutation, AnySpec,
    CommutationReport, DegeneracyResult, SweepFamily,
};
pub use group::{FiniteGroup, GroupElement};
pub use metric::{ball, metric_sets_from_spec, word_metric, MetricSpec};
pub use oracle::{commute_dense, ground_space_dim_dense};
pub use pauli::{
    build_all_stabilizers, build_qudit_stabilizers, build_stabilizer_pair, overlap_count, symplectic_product, CodeSpec, PauliOperator,
    QuditCodeSpec, StabilizerSet,
};
