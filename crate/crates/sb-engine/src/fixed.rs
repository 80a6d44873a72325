//! Q3.12 fixed-point helpers.
//!
//! Positions and momenta are signed 16-bit values with 12 fractional bits,
//! covering [-8.0, +8.0). State write-backs saturate; the wide MM
//! accumulator never does.

/// Fractional bits of the Q3.12 format.
pub const FRAC_BITS: u32 = 12;

/// Raw integer value of 1.0.
pub const FIXED_ONE: i32 = 1 << FRAC_BITS;

/// Round a real value to the nearest Q3.12 grid point (ties to even),
/// without saturating. Used for increments that feed saturating adds.
#[inline]
pub fn quantize_round_even(v: f64) -> i64 {
    (v * FIXED_ONE as f64).round_ties_even() as i64
}

/// Round to the Q3.12 grid and saturate into the 16-bit range.
#[inline]
pub fn fixed_from_f64(v: f64) -> i16 {
    saturate(quantize_round_even(v))
}

#[inline]
pub fn fixed_to_f64(raw: i16) -> f64 {
    raw as f64 / FIXED_ONE as f64
}

/// Clamp a wide raw value into i16; this is the state write-back saturation.
#[inline]
pub fn saturate(raw: i64) -> i16 {
    raw.clamp(i16::MIN as i64, i16::MAX as i64) as i16
}

/// Saturating add of a raw increment onto a 16-bit state value.
#[inline]
pub fn sat_add(state: i16, raw_increment: i64) -> i16 {
    saturate(state as i64 + raw_increment)
}
