//! Littlewood decomposition of integer partitions through (colored) Frobenius
//! symbols and Wright's bijection, plus an exact truncated q-series engine used
//! to check the accompanying generating-function identities against brute-force
//! enumeration.
//!
//! - [`partition`]: partitions, conjugation, Durfee square, hook lengths, rim-hook stripping
//! - [`frobenius`]: Frobenius symbols, t-colored Frobenius symbols, t-core predicates
//! - [`wright`]: Wright's map between two-rowed arrays and (staircase, partition) pairs
//! - [`littlewood`]: the decomposition into t-core, t-quotient and characteristic vector
//! - [`special`]: self-conjugate and doubled distinct partitions
//! - [`enumeration`]: exhaustive generators and counting oracles
//! - [`qseries`]: truncated integer power series, Laurent blocks, identity checks
//! - [`sweep`]: exhaustive verification sweeps
//! - [`cli`]: the command-line front end

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod frobenius;
pub mod littlewood;
pub mod partition;
pub mod qseries;
pub mod special;
pub mod sweep;
pub mod wright;

pub use enumeration::{PartitionClass, PartitionStream};
pub use error::{Error, Result};
pub use frobenius::{ColoredFrobeniusSymbol, ColoredInteger, FrobeniusSymbol};
pub use littlewood::Decomposition;
pub use partition::{HookClassification, HookKind, Partition};
pub use qseries::{IdentityReport, LaurentBlock, QSeries};
pub use special::{DistinctPartition, Report};
pub use sweep::{Sweep, SweepReport};
pub use wright::{TwoRowedArray, WrightImage};
