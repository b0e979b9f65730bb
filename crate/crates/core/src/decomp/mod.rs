//! Category layer: the centric-radical transporter category, its subdivision,
//! the Grothendieck construction over the pushout poset, and the resulting
//! normalizer decomposition diagram.

pub mod category;
pub mod diagram;
pub mod grothendieck;
pub mod hypotheses;
pub mod model;
pub mod subdivision;

use thiserror::Error;

use crate::fingroup::GroupError;
use crate::fusion::FusionError;
use crate::quat::QuatError;
use crate::storal::StoralError;

pub use category::{Arrow, CatObject, FiniteCategory, GroupArrow, TorsorInfo};
pub use diagram::{decompose, DecompositionDiagram, OutputFormat};
pub use grothendieck::{grothendieck, witness_functor, PosetDiagram, WitnessReport};
pub use hypotheses::{verify_hypotheses, HypothesisCheck};
pub use model::{build_transporter, Carrier, TransporterModel};
pub use subdivision::{subdivide, Chain, SubArrow, Subdivision};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("category axiom violated: {0}")]
    Category(String),
    #[error("hypothesis check failed: {0}")]
    Hypothesis(String),
    #[error("diagram of groups is not functorial: {0}")]
    NotFunctorial(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Storal(#[from] StoralError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quat(#[from] QuatError),
}
