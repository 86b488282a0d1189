//! Named numeric checks and the rounding conventions shared by the table
//! verifier and the certificates.

use serde::Serialize;

/// One verified inequality: `lhs`, `rhs`, the margin separating them, and
/// whether the check passed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub description: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs` for one-sided checks, `tol − |lhs − rhs|` for equalities.
    pub margin: f64,
    pub pass: bool,
}

impl Check {
    /// Strict `lhs < rhs`; when `min_margin > 0` the gap must reach it.
    pub fn upper(description: impl Into<String>, lhs: f64, rhs: f64, min_margin: f64) -> Self {
        let margin = rhs - lhs;
        let pass = if min_margin > 0.0 {
            margin >= min_margin
        } else {
            margin > 0.0
        };
        Check {
            description: description.into(),
            lhs,
            rhs,
            margin,
            pass,
        }
    }

    /// Non-strict `lhs ≤ rhs`.
    pub fn upper_or_equal(description: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let margin = rhs - lhs;
        Check {
            description: description.into(),
            lhs,
            rhs,
            margin,
            pass: margin >= 0.0,
        }
    }

    /// `|actual − expected| ≤ tol`.
    pub fn equals(description: impl Into<String>, actual: f64, expected: f64, tol: f64) -> Self {
        let margin = tol - (actual - expected).abs();
        Check {
            description: description.into(),
            lhs: actual,
            rhs: expected,
            margin,
            pass: margin >= 0.0,
        }
    }
}

/// Rounds up at `decimals` decimal places; upper-bound constants always
/// round up (a computed 1.48825 reports as 1.4883).
pub fn round_up_decimals(x: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (x * scale).ceil() / scale
}

/// Rounds to `digits` significant decimal digits; serialized numbers go
/// through this so reports diff cleanly across implementations.
pub fn sig_digits(x: f64, digits: u32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let exp = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits as i32 - 1 - exp);
    if !scale.is_finite() || scale == 0.0 {
        return x;
    }
    let rounded = (x * scale).round() / scale;
    if rounded.is_finite() {
        rounded
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_goes_up() {
        assert_eq!(round_up_decimals(1.48825, 4), 1.4883);
        assert_eq!(round_up_decimals(35.7189, 1), 35.8);
        assert_eq!(round_up_decimals(6.527_864_045, 4), 6.5279);
        assert_eq!(round_up_decimals(1.116_506_944, 4), 1.1166);
        assert_eq!(round_up_decimals(2.0, 1), 2.0);
    }

    #[test]
    fn significant_digit_rounding() {
        assert_eq!(sig_digits(1.489_774_431_641_2, 12), 1.489_774_431_64);
        assert_eq!(sig_digits(0.1, 12), 0.1);
        assert_eq!(sig_digits(-35.718_884_482_748_12, 12), -35.718_884_482_7);
        assert_eq!(sig_digits(0.0, 12), 0.0);
        assert_eq!(sig_digits(1234.0, 12), 1234.0);
    }

    #[test]
    fn check_constructors() {
        assert!(Check::upper("x", 1.0, 2.0, 0.0).pass);
        assert!(!Check::upper("x", 2.0, 2.0, 0.0).pass);
        assert!(Check::upper_or_equal("x", 2.0, 2.0).pass);
        assert!(!Check::upper("x", 1.0, 2.0, 1.5).pass);
        assert!(Check::equals("x", 1.0 + 1e-13, 1.0, 1e-12).pass);
        assert!(!Check::equals("x", 1.01, 1.0, 1e-3).pass);
    }
}
