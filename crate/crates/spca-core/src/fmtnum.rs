//! Shared numeric text formatting for CSV emitters.

/// Formats a float with 17 significant digits so a round trip through text
/// reproduces the exact `f64` bit pattern.
pub(crate) fn float17(x: f64) -> String {
    format!("{x:.16e}")
}
