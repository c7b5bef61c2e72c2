//! Exact computer algebra for smooth isotopy classes of neat disks in
//! 4-manifolds whose boundary carries a dual sphere.
//!
//! The crate is organised bottom-up:
//!
//! * [`groups`]: normal forms for the supported fundamental groups,
//! * [`groupring`]: exact arithmetic in `Z[π]`, the involutions and the norm map,
//! * [`gamma`]: Whitehead's quadratic functor on free abelian groups,
//! * [`span`]: subgroup spans in `Z[π∖1]`, lattice normal forms and membership,
//! * [`manifold`]: declarative manifold data and the Dax homomorphism formulas,
//! * [`diskgroup`]: the 2-step nilpotent group of disk isotopy classes,
//! * [`cli`]: the manifold-spec text format and the JSON command layer.

pub mod cli;
pub mod diskgroup;
pub mod error;
pub mod gamma;
pub mod groupring;
pub mod groups;
pub mod manifold;
pub mod span;

pub use diskgroup::{DiskClass, DiskGroup};
pub use error::{Error, Result};
pub use groupring::{F2TorsionElement, RingElement};
pub use groups::{GroupDescription, GroupElement};
pub use manifold::{ManifoldData, Pi2Class};
pub use span::{Membership, SubgroupSpan};
