//! Tangent-obstruction cohomology of Weil–Deligne points and its duality.

mod complex;
mod verysmooth;

pub use complex::{
    cohomology_dims, cohomology_n0, complex_of, dual_h0_twisted, is_smooth, pairing_matrix, report,
    CohomologyReport, WDComplex,
};
pub use verysmooth::{is_very_smooth, power_test_h2, unity_factor, very_smooth_report, VerySmoothReport};

#[cfg(test)]
mod tests;
