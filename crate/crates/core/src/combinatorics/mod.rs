//! Partitions, multipartitions, hook parameters and tableaux.

mod multipartition;
mod params;
mod partition;
mod tableau;

pub use multipartition::{Cell, Multipartition};
pub use params::{HookParams, Parity, Symbol};
pub use partition::Partition;
pub use tableau::{
    first_hook_tableau, hook_tableaux, standard_tableaux, superstandard, HookTableau, RowSegment, StandardTableau,
    SuperstandardTableau, Tableau,
};
