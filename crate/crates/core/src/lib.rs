//! Integer partitions under gap, part-count and residue constraints, their
//! statistics and weights, exact truncated q-series, and a registry of
//! partition identities checked coefficient by coefficient.
//!
//! ```
//! use qpart::{ConstraintSpec, StatisticId, WeightId};
//! use qpart::census::weighted_series;
//!
//! let s = weighted_series(&ConstraintSpec::distinct(), StatisticId::OddIndexSum, WeightId::Unit, 6).unwrap();
//! assert_eq!(s.coeffs(), &[1, 1, 2, 3, 5, 7, 11]);
//! ```

pub mod census;
pub mod constraint;
pub mod enumerate;
pub mod error;
pub mod identities;
pub mod partition;
pub mod qseries;
pub mod statistics;
pub mod weights;

pub use constraint::{ConstraintSpec, Parity, PresetParams, Residues};
pub use error::{Error, Result};
pub use partition::Partition;
pub use statistics::{Relation, StatisticId};
pub use weights::WeightId;
