//! Braid-group computation engine for twisted torus knots.
//!
//! The crate decides braid-word equality through Garside left normal form,
//! realizes twisted torus knots as braid words, classifies them by their
//! primitive/Seifert data, and cross-checks isotopy claims with an exact
//! Alexander-polynomial oracle built on the reduced Burau representation.

pub mod braid;
pub mod error;
pub mod families;
pub mod garside;
pub mod invariants;
pub mod laurent;
pub mod perm;
pub mod twisted_torus;

pub use braid::{BraidLetter, BraidWord};
pub use error::Error;
pub use families::{FamilyPair, LemmaCheck, VerificationReport, VerifyStatus};
pub use garside::{Conjugacy, NormalForm, PermutationBraid};
pub use laurent::LaurentPoly;
pub use perm::Permutation;
pub use twisted_torus::{Classification, SurgeryResult, TwistedTorusKnot, Verdict};
