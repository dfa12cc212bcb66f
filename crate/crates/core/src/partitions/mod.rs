//! Combinatorial indexing sets of the strata and their statistics.

pub mod bounded;
pub mod diagonal;
pub mod vertical;

pub use bounded::bounded_partitions_series;
pub use diagonal::{Kind, Layer, Link, StratumStats, WeakDiagonalPartition};
pub use vertical::VerticalStratum;
