//! Positivity certificates for tensor squares and the verification harness
//! for the staircase, chopped-square and caret families.
//!
//! For `μ = μ'`, any `λ` with `χ^λ[μ̂] ≠ 0` is a constituent of
//! `χ^μ ⊗ χ^μ`, where `μ̂` is the class given by the principal hooks of `μ`.

mod cert;
mod closed;
mod families;
mod near;
mod verify;

pub use cert::{certified_phi, certify, certify_all, CertVerdict, Certificate};
pub use closed::{check_closed_form, closed_form_hook, closed_form_two_row, ClosedFormCheck, ClosedFormMismatch, ShapeKind};
pub use families::{exp_family, exp_family_weight, hook_chain, vanishing_family, vanishing_sizes};
pub use near::{near_hook, near_shape_char, near_two_row, NearProfile, NearShapeValue, NearTerm};
pub use verify::{verify_conjecture, VerificationReport, VerifyMode};
