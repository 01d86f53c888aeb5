pub mod chain;
pub mod closed_forms;
pub mod error;
pub mod extended;
pub mod half;
pub mod maya;
pub mod partition;
pub mod render;
pub mod series;
pub mod steep;
pub mod verify;
pub mod vertex;

pub use error::{Error, Result};
pub use half::Half;
pub use maya::MayaDiagram;
pub use partition::{interlaced, partitions_up_to, strip_extensions, Partition, StripRelation};
pub use series::{Coefficient, MultiPowerSeries, PowerSeries, SeriesRing, VarSpace};

/// Exact coefficients.
pub type Integer = num_bigint::BigInt;
pub type UniSeries = PowerSeries<Integer>;
pub type MultiSeries = MultiPowerSeries<Integer>;
