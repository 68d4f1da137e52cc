//! Constructions and identity checks for the basis candidates of the
//! logarithmic derivation module of `Cat(B2, m)`.
//!
//! Every check returns a [`CheckReport`] instead of failing fast, so a sweep
//! can report all failures with witnesses. Checks that depend on the
//! coefficients `c_{m,i,k}` are methods of [`Model`]; the free functions of
//! the same name run them on [`Model::exact`].

mod checks;
mod family;
mod halfint;
mod recurrence;
mod report;

pub use checks::{
    membership_check, parity_check, parity_report, prop3_check, saito_check, saito_constant,
    saito_constant_integral, theorem_check,
};
pub use family::{
    f_integral, f_term, hyperplane_families, phi, s_partial, Derivation, Model, Perturbation,
};
pub use halfint::{g_term, lemma2_check, lemma3_check, n_closed, n_combo, prop2_check, u_partial};
pub use recurrence::{
    lemma1_check, m_closed, m_combo, recurrence_check, theorem_v_recurrence_check,
};
pub use report::CheckReport;

use crate::error::Result;
use crate::poly::BiPoly;
use crate::rational::{FamilyIndex, Rat};

/// `c_{m,i,k}`.
pub fn c_coeff(idx: FamilyIndex, k: u32) -> Result<Rat> {
    Model::exact().c_coeff(idx, k)
}

pub fn f_from_coeffs(idx: FamilyIndex) -> BiPoly {
    Model::exact().f_from_coeffs(idx)
}

/// The deformed polynomial `f~_i^m`.
pub fn f_tilde(idx: FamilyIndex) -> BiPoly {
    Model::exact().f_tilde(idx)
}
