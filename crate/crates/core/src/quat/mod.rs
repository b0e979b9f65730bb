//! Exact arithmetic for elements of SU(2) and SO(3).
//!
//! Three representations live here: symbolic elements of the discrete
//! 2-toral groups ([`SElement`], [`SbarElement`]), cyclotomic quaternions
//! ([`CycQuaternion`]) and rotations up to sign ([`ProjQuaternion`]).

mod angle;
mod cyclotomic;
pub mod linear;
mod quaternion;

use thiserror::Error;

pub use angle::{DyadicAngle, SElement, SbarElement, ToralElement, MAX_LEVEL};
pub use cyclotomic::{CycNumber, Rational, MAX_MODULUS};
pub use quaternion::{
    binary_octahedral_generators, commutant_class, finite_closure, s_to_quaternion,
    sbar_to_rotation, CommutantClass, CycQuaternion, ProjQuaternion,
};

/// Default cyclotomic modulus: ζ₁₆ covers the binary octahedral group and the
/// torus up to level 4.
pub const DEFAULT_MODULUS: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuatError {
    #[error("angle of level {needed} does not fit in Q(ζ_2^{modulus})")]
    Precision { needed: u32, modulus: u32 },
    #[error("closure is not finite at cap {cap}")]
    NotFinite { cap: usize },
}
