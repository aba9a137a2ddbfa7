//! Exact rationals and the combinatorial primitives every formula consumes.

mod combinat;
mod enumerate;
mod rational;

pub use combinat::{
    binom, factorial, falling, multinomial, rising, shifted_product, stirling1_row,
    stirling1_unsigned,
};
pub use enumerate::{
    composition_sums, enumerate_compositions, enumerate_partition_vectors, CompositionSpec,
    Compositions, PartitionVector, PartitionVectors,
};
pub use rational::Rational;
