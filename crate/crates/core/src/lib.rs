//! Additive group actions on complete toric varieties.
//!
//! Fans and lattice polytopes are handled with exact integer arithmetic. The
//! main entry points are [`additive_actions`] for fans and
//! [`inscribed_in_rectangle`] for polytopes; [`atlas`] runs the same test over
//! whole collections of smooth Fano polytopes.

pub mod error;
pub mod linalg;
pub mod cone;
pub mod fan;
pub mod faces;
pub mod polytope;
pub mod roots;
pub mod additivity;
pub mod families;
pub mod invariants;
pub mod formats;
pub mod atlas;

pub use error::{Error, Result};
pub use fan::{Fan, Violation};
pub use linalg::{IntMatrix, LatticeVector, RationalVector};
pub use polytope::{Facet, Polytope, Side};
pub use additivity::{
    additive_actions, classify_polytope, inscribed_in_rectangle, picard2_additive_fast_path, AdditiveOptions,
    AdditivityReport,
};
pub use roots::{all_roots, roots_for_ray, RootSet};
