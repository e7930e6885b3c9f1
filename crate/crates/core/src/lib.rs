//! Numerical sets, their atom monoids, and the admissible-set counts behind
//! the proportion of numerical sets with small atoms.

pub mod admissible;
pub mod bits;
pub mod error;
pub mod limits;
pub mod par;
pub mod sequence;
pub mod sets;
pub mod structure;
pub mod suites;

pub use admissible::{Family, SubsetMask};
pub use error::{Error, Result};
pub use limits::Limits;
pub use par::Strategy;
pub use sets::{NumericalMonoid, NumericalSet, SymmetryClass};
