//! Plinths, pedestals and pedestal matrices over Z[q].
//!
//! Exact arithmetic throughout: tableau statistics, the volume-preserving
//! bijections behind the product formulas for semistandard tableaux and
//! X-partitions, and certified polynomial eigenvalues of pedestal matrices.

pub mod cli;
pub mod error;
pub mod pedestal;
pub mod polyq;
pub mod poset;
pub mod rsk;
pub mod shapes;
pub mod specmat;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use polyq::{IntPoly, TruncatedSeries};
pub use poset::{Filter, LinearExtension, Poset, XPartition};
pub use shapes::{Cell, Partition, SkewShape};
pub use tableaux::{SemistandardTableau, StandardTableau};
