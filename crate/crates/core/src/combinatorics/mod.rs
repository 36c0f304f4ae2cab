//! Partitions, double partitions and their standard tableaux.

mod partition;
mod tableau;
mod text;

pub use partition::{
    double_partitions, embed_double, one_box_successors, partitions, split_embedded,
    DoublePartition, Partition,
};
pub(crate) use tableau::{ascending, TableauIndex};
pub use tableau::{
    axial_parameter, standard_tableaux, BoxStat, Cell, Component, DoubleTableau,
};
pub use text::{parse_double_partition, parse_partition};

/// `sum (i-1) * alpha_i`.
pub fn n_stat(alpha: &Partition) -> usize {
    alpha.n_stat()
}

/// The box statistics of `entry` in `t`.
pub fn box_stat(t: &DoubleTableau, entry: usize) -> crate::Result<BoxStat> {
    t.box_stat(entry)
}

pub fn apply_transposition(t: &DoubleTableau, i: usize) -> Option<DoubleTableau> {
    t.apply_transposition(i)
}
