//! Compositions, descent/peak/valley sets, strict partitions and
//! permutations grouped by descent set.

mod composition;
mod index_set;
mod partition;
mod permutation;

pub use composition::{
    compositions, fibonacci, odd_compositions, peak_composition, peak_compositions, peak_sets,
    validate_peak_set, Composition,
};
pub use index_set::{IndexSet, MAX_INDEX_N};
pub use partition::{odd_partitions, strict_partitions, StrictPartition};
pub use permutation::{all_permutations, permutations_with_descents, Permutation};
