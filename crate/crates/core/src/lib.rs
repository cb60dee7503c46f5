//! Set partitions, restricted growth functions, pattern avoidance, the
//! left/right bigger/smaller statistics and their generating polynomials,
//! together with a registry of closed forms and a sweep that checks each of
//! them against exhaustive enumeration.

pub mod error;
pub mod formulas;
pub mod genfun;
pub mod partition;
pub mod pattern;
pub mod poly;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{RgfWord, SetPartition};
pub use pattern::PatternSet;
pub use poly::{MultiPoly, Var};
pub use stats::{StatName, StatVector};
