//! Rational local systems on finite groupoids: pullback, pushforwards,
//! adjunction data, Beck–Chevalley maps and norm maps.

pub mod adjunction;
pub mod norm;
pub mod pushforward;
pub mod system;

pub use adjunction::*;
pub use norm::*;
pub use pushforward::{
    pushforward, pushforward_left, pushforward_map, pushforward_right, FiberPresentation, PushKind,
    PushforwardResult,
};
pub use system::{pullback_map, pullback_system, LinearMapOfSystems, LocalSystem};
