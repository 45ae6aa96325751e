//! Integer partitions, set partitions and Littlewood–Richardson coefficients.

mod lr;
mod partition;
mod set_partition;

pub use lr::lr_coefficient;
pub use partition::{
    centralizer_order, factorial, horizontal_strip_removals, pad_partition, partitions_of, CycleType,
    IntPartition,
};
pub use set_partition::{restricted_growth_strings, SetPartition};
