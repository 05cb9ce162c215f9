//! Finite groups, finite groupoids, functors, and homotopy pullbacks.

pub mod constructions;
pub mod equivalence;
pub mod group;
pub mod groupoid;
pub mod map;
pub mod pullback;

pub use constructions::*;
pub use equivalence::{equivalence_check, equivalence_check_bounded};
pub use group::{group_from_permutations, Elem, FiniteGroup, PermutationGroup, DEFAULT_ISO_BOUND};
pub use groupoid::{cardinality, skeletize, FiniteGroupoid, MorId, Skeleton, SkeletonComponent};
pub use map::GroupoidMap;
pub use pullback::{homotopy_fiber, homotopy_pullback, HomotopyPullback};
