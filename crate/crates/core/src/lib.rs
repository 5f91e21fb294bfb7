//! Exact enumeration of permutation pairs `(s, t)` in `S_n x S_n` whose
//! commutator `s t s^-1 t^-1` is a 3-cycle.
//!
//! The crate computes the closed-form counts of several families of such
//! pairs (all pairs, pairs generating the alternating or symmetric group,
//! and the restrictions where `s` is a single cycle), together with the
//! number-theoretic, group-theoretic and geometric machinery the formulas
//! rest on. Every formula has an independent brute-force check in
//! [`oracle`].

pub mod arith;
pub mod census;
pub mod characters;
pub mod groups;
pub mod oracle;
pub mod origami;
pub mod partitions;
pub mod perm;

/// Arbitrary-precision integer used for every count.
pub type ExactInt = num_bigint::BigInt;
/// Exact rational used for probabilities and intermediate sums.
pub type ExactRatio = num_rational::BigRational;

pub type RatioSeq = arith::ArithSeq<ExactRatio>;
pub type IntSeq = arith::ArithSeq<ExactInt>;
pub type WideSeq = arith::ArithSeq<i128>;
pub type FloatSeq = arith::ArithSeq<f64>;

pub use census::CensusRow;
pub use groups::{GeneratedGroup, GenerationClass};
pub use origami::{OneCylParams, Origami, OrigamiParams, TwoCylParams};
pub use perm::{CycleStructure, ExtDist, Permutation};
