//! Weil–Deligne points with finite inertia.

mod inertia;
mod point;
mod sample;

pub use inertia::{GalGroup, InertialData};
pub use point::{Constraint, UniformExtension, Validation, Violation, WDPoint};
pub use sample::sample_fiber;
