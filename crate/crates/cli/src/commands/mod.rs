pub mod exponent;
pub mod mc;
pub mod sweep;
pub mod verify;

/// Fixed-width scientific formatting with nine significant digits.
pub fn sci(v: f64) -> String {
    format!("{v:.8e}")
}
