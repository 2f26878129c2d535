//! Exact verification of block-matrix identities for unitary similitude
//! groups over imaginary quadratic fields.
//!
//! A pair of unitary groups embeds into one doubled group by interleaving
//! coordinates, and three models of the doubled group (standard, mixed,
//! diagonal) are connected by explicit change-of-basis matrices. This crate
//! builds all of those matrices exactly and checks the identities the rest
//! of the workspace relies on:
//!
//! - membership and similitude scalars for the groups attached to the
//!   standard skew forms ([`forms`]),
//! - transport of one form to another under conjugation, and the
//!   factorization of the main transition matrix ([`doubling`]),
//! - the product record expressing a conjugated pair embedding in closed
//!   form, with the determinant factorization of its automorphy factor
//!   ([`record`]),
//! - compatibility of point-frame matrices with the domain embedding
//!   ([`rl`]),
//! - the block moves induced by the coordinate-interchange Weyl element
//!   ([`weyl`]),
//! - the automorphy-factor cocycle ([`automorphy`]) and big-cell membership
//!   with local integrality ([`bruhat`]).
//!
//! Scalars are exact ([`IQElement`]); identities with free parameters are
//! checked symbolically over polynomial rings, never numerically. Checks
//! return booleans or reports; [`UmatError`] is reserved for malformed
//! inputs, so a failing identity is a result, not an error.

pub mod automorphy;
pub mod bruhat;
pub mod doubling;
pub mod forms;
pub mod iq;
pub mod record;
pub mod rl;
pub mod weyl;

use thiserror::Error;

pub use automorphy::{automorphy_factor, cocycle_check, moebius_action};
pub use bruhat::{bruhat_cell_report, bruhat_cell_test, BruhatReport};
pub use doubling::{
    canonical_zeta, diagonal_doubled_form, diagonal_transition, main_transition,
    main_transition_factors_check, main_transition_plain, mixed_doubled_form,
    mixed_transition, root2_transport_check, unit_tau, unit_zeta, DoublingArrangement,
};
pub use forms::{
    conjugation_transport_check, group_membership, signature_form,
    standard_doubled_form, GroupCheckReport,
};
pub use iq::{IQElement, IQMatrixData};
pub use record::{automorphy_factorization_check, record_product_check};
pub use rl::{rl_base_point_check, rl_identity_check};
pub use weyl::{interchange_weyl, weyl_block_identity_check};

/// Errors for malformed inputs. A check that runs but fails reports the
/// failure through its return value instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UmatError {
    /// The discriminant of an imaginary quadratic field must be square-free
    /// and positive.
    #[error("bad discriminant: {0}")]
    Discriminant(String),
    /// Mismatched sizes or block shapes.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// A matrix that must define a form, or satisfy a structural condition
    /// such as being Hermitian, does not.
    #[error("invalid form data: {0}")]
    Form(String),
    /// The tested matrix does not lie in the similitude group of the form.
    #[error("not a member of the similitude group")]
    NotInGroup,
    /// Inversion was required but the matrix is singular.
    #[error("singular matrix: {0}")]
    Singular(String),
}
