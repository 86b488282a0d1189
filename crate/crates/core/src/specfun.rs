//! Digamma-based archimedean quantities Δ, G₁, G₂ and the trigamma sums
//! W₁, W₂.
//!
//! These control the gamma-factor contribution to every zero-sum bound in
//! [`crate::repulsion`]:
//!
//! * `Δ(x, y) = Re ψ((x+iy)/2)`,
//! * `G₁(α; t) = (Δ(α+1,0) + Δ(α+1,t))/2 − log π` (per real embedding),
//! * `G₂(α; t) = (Δ(α+1,0) + Δ(α+2,0) + Δ(α+1,t) + Δ(α+2,t))/4 − log π`
//!   (per conjugate pair of complex embeddings),
//! * `W₁(α) = Σ_{k≥0} (α+1+2k)⁻² = ψ′((α+1)/2)/4`,
//! * `W₂(α) = Σ_{k≥0} (α+1+k)⁻² = ψ′(α+1)` (tails over trivial zeros).
//!
//! ψ is evaluated by upward recurrence into `Re z ≥ 10` followed by the
//! Stirling series with Bernoulli coefficients through B₁₄. Arguments with
//! imaginary part up to ~13000 stay well inside the series' validity.

use num_complex::Complex;
use serde::Serialize;
use thiserror::Error;

use crate::FloatScalar;

/// Errors from the special-function layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    /// `delta` is only defined on the right half plane the bounds use.
    #[error("delta requires x > 0, got x = {x}")]
    NonpositiveReal { x: f64 },
}

/// B₂ₖ/(2k) for k = 1..7, the digamma Stirling coefficients:
/// ψ(z) ~ ln z − 1/(2z) − Σₖ B₂ₖ/(2k·z²ᵏ).
const DIGAMMA_STIRLING: [f64; 7] = [
    1.0 / 12.0,        // B2/2
    -1.0 / 120.0,      // B4/4
    1.0 / 252.0,       // B6/6
    -1.0 / 240.0,      // B8/8
    1.0 / 132.0,       // B10/10
    -691.0 / 32760.0,  // B12/12
    1.0 / 12.0,        // B14/14
];

/// B₂ₖ for k = 1..7, the trigamma Stirling coefficients:
/// ψ′(x) ~ 1/x + 1/(2x²) + Σₖ B₂ₖ/x²ᵏ⁺¹.
const TRIGAMMA_STIRLING: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

/// Recurrence target: Stirling through B₁₄ at `Re z ≥ RECURRENCE_LIFT` keeps
/// the truncation remainder below 1e−12 (see `stirling_remainder_bound`).
const RECURRENCE_LIFT: f64 = 10.0;

/// Upper bound for the magnitude of the first omitted Stirling term,
/// |B₁₆/16|·sec¹⁸(arg z / 2)·|z|⁻¹⁶ ≤ 0.4433·2⁹·|z|⁻¹⁶ for |arg z| < π/2.
///
/// At |z| = 10 this is 2.3e−14; it decays like |z|⁻¹⁶ beyond.
fn stirling_remainder_bound(norm_sqr: f64) -> f64 {
    0.4433 * 512.0 / norm_sqr.powi(8)
}

/// ψ(z) for `Re z > 0` by upward recurrence and the Stirling series.
fn digamma<F: FloatScalar>(mut z: Complex<F>) -> Complex<F> {
    debug_assert!(z.re > F::zero());
    let one = F::one();
    let lift = F::c(RECURRENCE_LIFT);
    // ψ(z) = ψ(z+1) − 1/z
    let mut shift = Complex::new(F::zero(), F::zero());
    while z.re < lift {
        shift = shift - z.inv();
        z = z + Complex::new(one, F::zero());
    }
    let remainder = stirling_remainder_bound(z.norm_sqr().to_f64().unwrap_or(f64::INFINITY));
    assert!(
        remainder < 1e-12,
        "Stirling remainder {remainder:e} escapes the documented bound"
    );
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut sum = z.ln() - inv * F::c(0.5);
    let mut pow = inv2;
    for &coeff in &DIGAMMA_STIRLING {
        sum = sum - pow * F::c(coeff);
        pow = pow * inv2;
    }
    sum + shift
}

/// ψ′(x) for real x > 0 by upward recurrence and the Stirling series.
///
/// The first omitted term is B₁₆/x¹⁷ ≤ 7.1e−17 once x ≥ 10.
fn trigamma<F: FloatScalar>(mut x: F) -> F {
    debug_assert!(x > F::zero());
    let one = F::one();
    let lift = F::c(RECURRENCE_LIFT);
    // ψ′(x) = ψ′(x+1) + 1/x²
    let mut shift = F::zero();
    while x < lift {
        shift = shift + (x * x).recip();
        x = x + one;
    }
    let inv = x.recip();
    let inv2 = inv * inv;
    let mut sum = inv + inv2 * F::c(0.5);
    let mut pow = inv * inv2;
    for &coeff in &TRIGAMMA_STIRLING {
        sum = sum + pow * F::c(coeff);
        pow = pow * inv2;
    }
    sum + shift
}

/// `Δ(x, y) = Re ψ((x+iy)/2)`, the building block of the gamma-factor terms.
///
/// Symmetric in `y`; absolute error ≤ 1e−10 for f64 (observed ≲ 1e−13).
/// Rejects `x ≤ 0`: the bounds only evaluate at x = α+1, α+2 ≥ 2, so the
/// pole region of ψ stays outside the trusted surface.
pub fn delta<F: FloatScalar>(x: F, y: F) -> Result<F, SpecfunError> {
    if x <= F::zero() {
        return Err(SpecfunError::NonpositiveReal {
            x: x.to_f64().unwrap_or(f64::NAN),
        });
    }
    let half = F::c(0.5);
    Ok(digamma(Complex::new(x * half, y * half)).re)
}

/// `G₁(α; t)`, the archimedean term per real embedding.
///
/// Increasing in `t ≥ 0`, which the zero-sum bounds use to replace |γ′| by
/// the height cutoff T.
pub fn g1<F: FloatScalar>(alpha: F, t: F) -> F {
    assert!(alpha >= F::one(), "g1 requires alpha >= 1");
    assert!(t >= F::zero(), "g1 requires t >= 0");
    let one = F::one();
    let d0 = delta(alpha + one, F::zero()).expect("alpha + 1 > 0");
    let dt = delta(alpha + one, t).expect("alpha + 1 > 0");
    (d0 + dt) * F::c(0.5) - F::PI().ln()
}

/// `G₂(α; t)`, the archimedean term per conjugate pair of complex embeddings.
pub fn g2<F: FloatScalar>(alpha: F, t: F) -> F {
    assert!(alpha >= F::one(), "g2 requires alpha >= 1");
    assert!(t >= F::zero(), "g2 requires t >= 0");
    let one = F::one();
    let two = F::c(2.0);
    let sum = delta(alpha + one, F::zero()).expect("alpha + 1 > 0")
        + delta(alpha + two, F::zero()).expect("alpha + 2 > 0")
        + delta(alpha + one, t).expect("alpha + 1 > 0")
        + delta(alpha + two, t).expect("alpha + 2 > 0");
    sum * F::c(0.25) - F::PI().ln()
}

/// `W₁(α) = Σ_{k≥0} (α+1+2k)⁻² = ψ′((α+1)/2)/4`.
pub fn w1<F: FloatScalar>(alpha: F) -> F {
    assert!(alpha >= F::one(), "w1 requires alpha >= 1");
    trigamma((alpha + F::one()) * F::c(0.5)) * F::c(0.25)
}

/// `W₂(α) = Σ_{k≥0} (α+1+k)⁻² = ψ′(α+1)`.
pub fn w2<F: FloatScalar>(alpha: F) -> F {
    assert!(alpha >= F::one(), "w2 requires alpha >= 1");
    trigamma(alpha + F::one())
}

/// Archimedean data of a number field as it enters the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldSignature<F> {
    /// Real embeddings.
    pub r1: u32,
    /// Conjugate pairs of complex embeddings.
    pub r2: u32,
    /// Degree, always `r1 + 2·r2`.
    pub n: u32,
    /// Log-discriminant 𝓛 = log d_L (dimensionless, > 0).
    pub logd: F,
}

/// Errors constructing a [`FieldSignature`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SignatureError {
    #[error("log-discriminant must be positive, got {logd}")]
    NonpositiveLogDisc { logd: f64 },
}

impl<F: FloatScalar> FieldSignature<F> {
    /// Builds a signature from embedding counts; the degree is derived so the
    /// `n = r1 + 2·r2` invariant holds by construction.
    pub fn new(r1: u32, r2: u32, logd: F) -> Result<Self, SignatureError> {
        if !(logd > F::zero()) {
            return Err(SignatureError::NonpositiveLogDisc {
                logd: logd.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            r1,
            r2,
            n: r1 + 2 * r2,
            logd,
        })
    }

    /// Discriminant lower-bound admissibility:
    /// `(log 60)·r1 + (log 22)·2·r2 ≤ 𝓛`.
    ///
    /// Holds for d_L sufficiently large; small fields legitimately fail it.
    pub fn odlyzko_admissible(&self) -> bool {
        let r1 = F::from_u32(self.r1).unwrap();
        let r2 = F::from_u32(self.r2).unwrap();
        F::c(60.0).ln() * r1 + F::c(22.0).ln() * F::c(2.0) * r2 <= self.logd
    }

    /// Right-hand side of the zero-sum bound: for `α ≥ 1` and real `t`,
    /// `Σ_ω (|α+1−ω|⁻² + |α+1+it−ω|⁻²)` over all zeros ω is at most
    ///
    /// `𝓛/α + (G₁(α;|t|)/α + 2W₁(α))·r1 + (G₂(α;|t|)/α + W₂(α))·2r2
    ///  + 2/α² + 2/(α+α²)`.
    pub fn zero_pair_sum_bound(&self, alpha: F, t: F) -> F {
        assert!(alpha >= F::one(), "zero_pair_sum_bound requires alpha >= 1");
        let t = t.abs();
        let r1 = F::from_u32(self.r1).unwrap();
        let r2 = F::from_u32(self.r2).unwrap();
        let two = F::c(2.0);
        self.logd / alpha
            + (g1(alpha, t) / alpha + two * w1(alpha)) * r1
            + (g2(alpha, t) / alpha + w2(alpha)) * two * r2
            + two / (alpha * alpha)
            + two / (alpha + alpha * alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn delta_at_psi_one_is_minus_gamma() {
        // ψ(1) = −γ, cross-checked against the series oracle in tests/oracles.rs
        assert!(close(delta(2.0, 0.0).unwrap(), -EULER_GAMMA, 1e-13));
    }

    #[test]
    fn delta_at_psi_two() {
        // ψ(2) = 1 − γ by the recurrence ψ(x+1) = ψ(x) + 1/x
        assert!(close(delta(4.0, 0.0).unwrap(), 1.0 - EULER_GAMMA, 1e-13));
    }

    #[test]
    fn delta_reference_values() {
        // Re ψ(2.035 + 0.5i), Re ψ(0.5 + 0.5i), Re ψ(8.5 + 6323i); 40-digit
        // reference evaluations frozen to f64.
        assert!(close(delta(4.07, 1.0).unwrap(), 0.491_514_278_099_920_4, 1e-12));
        assert!(close(delta(1.0, 1.0).unwrap(), -0.868_107_362_645_477_3, 1e-12));
        assert!(close(delta(17.0, 12646.0).unwrap(), 8.751_949_857_409_412, 1e-11));
    }

    #[test]
    fn delta_rejects_nonpositive_x() {
        assert!(delta(0.0, 1.0).is_err());
        assert!(delta(-3.0, 0.0).is_err());
    }

    #[test]
    fn g1_collapses_at_t_zero() {
        for alpha in [1.0, 2.5, 7.0, 15.5] {
            let expect = delta(alpha + 1.0, 0.0).unwrap() - std::f64::consts::PI.ln();
            assert!(close(g1(alpha, 0.0), expect, 1e-14));
        }
    }

    #[test]
    fn g1_at_one_is_minus_gamma_minus_log_pi() {
        let expect = -EULER_GAMMA - std::f64::consts::PI.ln();
        assert!(close(g1(1.0, 0.0), expect, 1e-13));
        assert!(close(expect, -1.721_945_550_750_933, 1e-14));
    }

    #[test]
    fn g1_regression_value_inside_table_row_one() {
        assert!(close(g1(3.07, 1.0), -0.676_416_255_388_681_4, 1e-12));
    }

    #[test]
    fn g2_collapses_at_t_zero() {
        for alpha in [1.0, 3.07, 5.8] {
            let expect = (delta(alpha + 1.0, 0.0).unwrap() + delta(alpha + 2.0, 0.0).unwrap())
                / 2.0
                - std::f64::consts::PI.ln();
            assert!(close(g2(alpha, 0.0), expect, 1e-14));
        }
    }

    #[test]
    fn g2_at_one_uses_half_integer_digamma() {
        // ψ(3/2) = 2 − γ − 2 log 2
        let psi_3_2 = 2.0 - EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        let expect = (-EULER_GAMMA + psi_3_2) / 2.0 - std::f64::consts::PI.ln();
        assert!(close(g2(1.0, 0.0), expect, 1e-13));
    }

    #[test]
    fn g2_regression_value_inside_real_zero_row() {
        assert!(close(g2(5.8, 0.0), 0.003_717_800_756_552_47, 1e-12));
    }

    #[test]
    fn trigamma_sums_at_one() {
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        assert!(close(w1(1.0), pi2 / 24.0, 1e-13));
        assert!(close(w2(1.0), pi2 / 6.0 - 1.0, 1e-13));
    }

    #[test]
    fn trigamma_sums_reference_values() {
        assert!(close(w1(3.07), 0.157_771_603_987_108_2, 1e-13));
        assert!(close(w2(3.07), 0.278_327_991_533_315_76, 1e-13));
    }

    #[test]
    fn signature_invariants() {
        let sig = FieldSignature::new(2, 1, 10.0).unwrap();
        assert_eq!(sig.n, 4);
        assert!(FieldSignature::new(1, 0, 0.0).is_err());
        // (log 60)·2 = 8.19 ≤ 10 but adding a complex pair needs 2·log 22 more
        assert!(FieldSignature::new(2, 0, 10.0).unwrap().odlyzko_admissible());
        assert!(!sig.odlyzko_admissible());
    }

    #[test]
    fn zero_pair_sum_bound_matches_components() {
        let sig = FieldSignature::new(1, 2, 25.0).unwrap();
        let (alpha, t) = (2.0, 3.5);
        let expect = 25.0 / alpha
            + (g1(alpha, t) / alpha + 2.0 * w1(alpha)) * 1.0
            + (g2(alpha, t) / alpha + w2(alpha)) * 4.0
            + 2.0 / (alpha * alpha)
            + 2.0 / (alpha + alpha * alpha);
        assert!(close(sig.zero_pair_sum_bound(alpha, t), expect, 1e-12));
    }

    #[test]
    fn float32_instantiation_reaches_single_precision() {
        let got: f32 = delta(2.0f32, 0.0f32).unwrap();
        assert!((got + EULER_GAMMA as f32).abs() < 1e-5);
    }

    proptest! {
        #[test]
        fn delta_symmetric_in_y(x in 0.05f64..40.0, y in -2e4f64..2e4) {
            let a = delta(x, y).unwrap();
            let b = delta(x, -y).unwrap();
            prop_assert!((a - b).abs() <= 1e-12);
        }

        #[test]
        fn delta_recurrence(x in 0.1f64..30.0, y in -100.0f64..100.0) {
            // ψ(z+1) = ψ(z) + 1/z with z = (x+iy)/2 reads
            // Δ(x+2, y) = Δ(x, y) + Re(2/(x+iy)).
            let lhs = delta(x + 2.0, y).unwrap();
            let rhs = delta(x, y).unwrap() + 2.0 * x / (x * x + y * y);
            prop_assert!((lhs - rhs).abs() <= 1e-10);
        }

        #[test]
        fn trigamma_recurrence(alpha in 1.0f64..50.0) {
            // W₂(α) − W₂(α+1) = (α+1)⁻²
            let lhs = w2(alpha) - w2(alpha + 1.0);
            let rhs = (alpha + 1.0).powi(-2);
            prop_assert!((lhs - rhs).abs() <= 1e-12);
        }
    }
}
