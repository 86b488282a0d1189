//! Coefficient of log d_L in the zero-repulsion bounds, its optimization
//! over α, the (T, α, C) certification table, and the low-lying-zero sum
//! bound used by the endgame cases.
//!
//! For the pair-sum over all zeros at height cutoff T the bound reads
//! `M/α ≤ K·𝓛 + correction` with
//!
//! ```text
//! K = ((α+½)²/α)·(1/α + max{(G₁(α;T) + 2αW₁(α))/(α log 60),
//!                           (G₂(α;T) + αW₂(α))/(α log 22), 0})
//! ```
//!
//! and `correction = ((α+½)²/α)·(2/α² + 2/(α+α²))`, the 𝓛-independent part
//! that drops out for d_L large. The real-zeros variant replaces the leading
//! factor by `(α+1)²/(2α)` and evaluates the G's at t = 0 with no trigamma
//! tails; the no-archimedean variant keeps only the `1/α` term. A constant C
//! is certified by the strict inequality `24·K < C`.

use serde::Serialize;
use thiserror::Error;

use crate::checks::round_up_decimals;
use crate::specfun::{g1, g2, w1, w2};
use crate::FloatScalar;

/// Which family of zeros the repulsion bound covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// All zeros with |γ′| ≤ T.
    AllZeros,
    /// Real zeros only (t = 0, trivial zeros discarded).
    RealZeros,
    /// Archimedean coefficients dropped (degree o(log d_L) regime).
    NoArchimedean,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::AllZeros => "all-zeros",
            Variant::RealZeros => "real-zeros",
            Variant::NoArchimedean => "no-archimedean",
        })
    }
}

/// K and the dropped 𝓛-independent term of one coefficient evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients<F> {
    /// Coefficient of 𝓛 in the M/α bound.
    pub k: F,
    /// Additive 𝓛-independent remainder.
    pub correction: F,
}

impl<F: FloatScalar> Coefficients<F> {
    /// Least 𝓛 beyond which `correction < 1e−3·K·𝓛`, i.e. the scale at
    /// which the dropped term is within a tenth of a percent of the kept one.
    pub fn negligible_scale(&self) -> F {
        self.correction / (F::c(1e-3) * self.k)
    }
}

/// The M/α coefficient for all zeros with |γ′| ≤ T.
pub fn coeff_all_zeros<F: FloatScalar>(alpha: F, t: F) -> Coefficients<F> {
    assert!(alpha >= F::one(), "coeff_all_zeros requires alpha >= 1");
    assert!(t >= F::one(), "coeff_all_zeros requires T >= 1");
    let two = F::c(2.0);
    let lead = alpha + F::c(0.5);
    let prefactor = lead * lead / alpha;
    let arch_real = (g1(alpha, t) + two * alpha * w1(alpha)) / (alpha * F::c(60.0).ln());
    let arch_complex = (g2(alpha, t) + alpha * w2(alpha)) / (alpha * F::c(22.0).ln());
    let max_term = arch_real.max(arch_complex).max(F::zero());
    Coefficients {
        k: prefactor * (alpha.recip() + max_term),
        correction: prefactor * (two / (alpha * alpha) + two / (alpha + alpha * alpha)),
    }
}

/// The M/α coefficient for real zeros only.
pub fn coeff_real_zeros<F: FloatScalar>(alpha: F) -> Coefficients<F> {
    assert!(alpha >= F::one(), "coeff_real_zeros requires alpha >= 1");
    let two = F::c(2.0);
    let lead = alpha + F::one();
    let prefactor = lead * lead / (two * alpha);
    let arch_real = g1(alpha, F::zero()) / (alpha * F::c(60.0).ln());
    let arch_complex = g2(alpha, F::zero()) / (alpha * F::c(22.0).ln());
    let max_term = arch_real.max(arch_complex).max(F::zero());
    Coefficients {
        k: prefactor * (alpha.recip() + max_term),
        correction: prefactor * (two / (alpha * alpha) + two / (alpha + alpha * alpha)),
    }
}

/// The coefficient with archimedean terms dropped entirely.
///
/// `family` selects the leading factor: [`Variant::AllZeros`] gives
/// `((α+½)/α)²` (↘ 1 as α → ∞), [`Variant::RealZeros`] gives `(α+1)²/(2α²)`
/// (↘ 1/2). Panics on [`Variant::NoArchimedean`], which names the regime,
/// not a zero family.
pub fn coeff_no_archimedean<F: FloatScalar>(alpha: F, family: Variant) -> F {
    assert!(alpha >= F::one(), "coeff_no_archimedean requires alpha >= 1");
    match family {
        Variant::AllZeros => {
            let lead = alpha + F::c(0.5);
            lead * lead / (alpha * alpha)
        }
        Variant::RealZeros => {
            let lead = alpha + F::one();
            lead * lead / (F::c(2.0) * alpha * alpha)
        }
        Variant::NoArchimedean => panic!("family must be all-zeros or real-zeros"),
    }
}

fn coeff_for(variant: Variant, alpha: f64, t: f64) -> f64 {
    match variant {
        Variant::AllZeros => coeff_all_zeros(alpha, t).k,
        Variant::RealZeros => coeff_real_zeros(alpha).k,
        Variant::NoArchimedean => coeff_no_archimedean(alpha, Variant::AllZeros),
    }
}

/// One certified row: at (T, α) the coefficient K yields the constant C.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RepulsionBound {
    /// Height cutoff (1 for variants that never leave the real axis).
    pub t: f64,
    pub alpha: f64,
    pub k: f64,
    /// Certified constant, strict upper bound for 24·K.
    pub c: f64,
    pub variant: Variant,
    /// 𝓛-independent additive remainder at this α.
    pub correction: f64,
}

impl RepulsionBound {
    /// The certification condition `24·K < C`.
    pub fn certifies(&self) -> bool {
        24.0 * self.k < self.c
    }
}

/// Search floor, ceiling and default step for [`optimize_alpha`]. The ceiling
/// accommodates the no-archimedean variant, whose optimum drifts to large α.
pub const ALPHA_RANGE: (f64, f64) = (1.0, 2500.0);
pub const DEFAULT_GRID_STEP: f64 = 0.01;

/// Minimizes K over α ∈ [1, 2500]: grid scan (ties toward smaller α), then
/// ternary refinement of the bracketing interval down to width 1e−4.
///
/// The reported constant is `C = roundup(24·K, 1 decimal)`, nudged up a step
/// in the measure-zero event that 24·K already sits on a tenth.
pub fn optimize_alpha(t: f64, variant: Variant, grid_step: f64) -> RepulsionBound {
    assert!(t >= 1.0, "optimize_alpha requires T >= 1");
    assert!(grid_step > 0.0);
    let (lo, hi) = ALPHA_RANGE;
    let steps = ((hi - lo) / grid_step).round() as u64;
    let mut best_alpha = lo;
    let mut best_k = coeff_for(variant, lo, t);
    for i in 1..=steps {
        let alpha = (lo + i as f64 * grid_step).min(hi);
        let k = coeff_for(variant, alpha, t);
        if k < best_k {
            best_k = k;
            best_alpha = alpha;
        }
    }
    // ternary refinement inside the bracketing grid cell
    let mut a = (best_alpha - grid_step).max(lo);
    let mut b = (best_alpha + grid_step).min(hi);
    while b - a > 1e-4 {
        let m1 = a + (b - a) / 3.0;
        let m2 = b - (b - a) / 3.0;
        if coeff_for(variant, m1, t) <= coeff_for(variant, m2, t) {
            b = m2;
        } else {
            a = m1;
        }
    }
    let refined = 0.5 * (a + b);
    let refined_k = coeff_for(variant, refined, t);
    if refined_k < best_k {
        best_alpha = refined;
        best_k = refined_k;
    }
    let correction = match variant {
        Variant::AllZeros => coeff_all_zeros(best_alpha, t).correction,
        Variant::RealZeros => coeff_real_zeros(best_alpha).correction,
        Variant::NoArchimedean => 0.0,
    };
    let mut c = round_up_decimals(24.0 * best_k, 1);
    if c <= 24.0 * best_k {
        c += 0.1;
    }
    RepulsionBound {
        t,
        alpha: best_alpha,
        k: best_k,
        c,
        variant,
        correction,
    }
}

/// The eleven tabled (T, α, C) rows of the all-zeros repulsion theorem.
pub const DH_TABLE: [(f64, f64, f64); 11] = [
    (1.0, 3.07, 35.8),
    (3.5, 4.06, 37.0),
    (8.7, 5.68, 39.3),
    (22.0, 7.73, 42.5),
    (54.0, 9.43, 46.1),
    (134.0, 10.7, 50.0),
    (332.0, 11.7, 53.8),
    (825.0, 12.7, 57.6),
    (2048.0, 13.7, 61.4),
    (5089.0, 14.7, 65.2),
    (12646.0, 15.7, 69.0),
];

/// Additional (T, C) rows quoted for the tower-of-normal-extensions case;
/// no α is tabled for these, the optimizer supplies it.
pub const REMARK_ROWS: [(f64, f64); 2] = [(12.2, 40.3), (149.0, 50.4)];

/// One verified table row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub t: f64,
    pub alpha: f64,
    pub k: f64,
    pub c: f64,
    /// `C − 24·K`; positive iff the row certifies.
    pub margin: f64,
    pub pass: bool,
    pub variant: Variant,
}

fn check_row(t: f64, alpha: f64, k: f64, c: f64, variant: Variant) -> TableRow {
    let margin = c - 24.0 * k;
    TableRow {
        t,
        alpha,
        k,
        c,
        margin,
        pass: margin > 0.0,
        variant,
    }
}

/// Verifies `24·K < C` for every tabled row (tabled α) and for the two
/// remark rows (optimizer-chosen α). A failing row is a falsification event.
pub fn verify_dh_table() -> Vec<TableRow> {
    let mut rows = Vec::with_capacity(DH_TABLE.len() + REMARK_ROWS.len());
    for (t, alpha, c) in DH_TABLE {
        let k = coeff_all_zeros(alpha, t).k;
        rows.push(check_row(t, alpha, k, c, Variant::AllZeros));
    }
    for (t, c) in REMARK_ROWS {
        let best = optimize_alpha(t, Variant::AllZeros, DEFAULT_GRID_STEP);
        rows.push(check_row(t, best.alpha, best.k, c, Variant::AllZeros));
    }
    rows
}

/// Rows for the real-zeros variant (α = 5.8, C = 16.6, certifying the
/// exceptional-zero corollary) and the no-archimedean regime (C = 24.01 for
/// all zeros, C = 12.01 for real zeros, at the optimizer's α).
pub fn verify_variant_rows(variant: Variant) -> Vec<TableRow> {
    match variant {
        Variant::AllZeros => verify_dh_table(),
        Variant::RealZeros => {
            let k = coeff_real_zeros(5.8).k;
            vec![check_row(1.0, 5.8, k, 16.6, Variant::RealZeros)]
        }
        Variant::NoArchimedean => {
            let all = optimize_alpha(1.0, Variant::NoArchimedean, DEFAULT_GRID_STEP);
            let real_k = coeff_no_archimedean(all.alpha, Variant::RealZeros);
            vec![
                check_row(1.0, all.alpha, all.k, 24.01, Variant::NoArchimedean),
                check_row(1.0, all.alpha, real_k, 12.01, Variant::NoArchimedean),
            ]
        }
    }
}

/// φ = (1 − 1/√5)/2, the zero-density constant of the low-lying bound.
pub const PHI: f64 = 0.276_393_202_250_021_03;

/// Errors from [`low_lying_bound`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("lambda must lie in [0, 10], got {lambda}")]
    LambdaOutOfRange { lambda: f64 },
    #[error("A must be positive, got {a}")]
    NonpositiveA { a: f64 },
}

/// Upper bound for the restricted sum `Σ′ |F̃_ℓ((1−ρ)𝓛)|` over low-lying
/// zeros, given a zero-free width λ ∈ [0, 10]:
///
/// ```text
/// ((1−e^{−Aλ})/(Aλ))^{2(ℓ−1)} · { φ(1−e^{−2Aλ})/(A²λ)
///                                 + (2Aλ−1+e^{−2Aλ})/(2A²λ²) + η }
/// ```
///
/// with the λ → 0 limit `2φ/A + 1 + η` taken for λ < 1e−6 (the direct form
/// cancels there). All three factors are evaluated via expm1.
pub fn low_lying_bound<F: FloatScalar>(
    lambda: F,
    a: F,
    ell: u32,
    eta: F,
) -> Result<F, BoundError> {
    assert!(ell >= 1, "low_lying_bound requires ell >= 1");
    assert!(eta >= F::zero(), "low_lying_bound requires eta >= 0");
    if !(a > F::zero()) {
        return Err(BoundError::NonpositiveA {
            a: a.to_f64().unwrap_or(f64::NAN),
        });
    }
    if lambda < F::zero() || lambda > F::c(10.0) {
        return Err(BoundError::LambdaOutOfRange {
            lambda: lambda.to_f64().unwrap_or(f64::NAN),
        });
    }
    let phi = F::c(PHI);
    let one = F::one();
    let two = F::c(2.0);
    if lambda < F::c(1e-6) {
        return Ok(two * phi / a + one + eta);
    }
    let w = a * lambda;
    let ratio = -(-w).exp_m1() / w; // (1 − e^{−w})/w
    let prefactor = ratio.powi(2 * (ell as i32 - 1));
    let density = phi * (-(-two * w).exp_m1()) / (a * a * lambda);
    // 2w − 1 + e^{−2w} cancels; expm1 keeps the relative error at eps/w
    let tail = ((-two * w).exp_m1() + two * w) / (two * w * w);
    Ok(prefactor * (density + tail + eta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn table_row_one_coefficient() {
        // 40-digit reference evaluation frozen to f64
        let c = coeff_all_zeros(3.07, 1.0);
        assert!(close(c.k, 1.488_286_853_445_205, 1e-11));
        assert!(close(c.correction, 1.545_450_516_436_410_3, 1e-11));
        assert!(c.k >= 1.4878 && c.k <= 1.4883);
        assert!(24.0 * c.k < 35.8);
    }

    #[test]
    fn coefficient_monotone_in_height() {
        for alpha in [1.0, 3.07, 9.43, 15.7] {
            let mut last = coeff_all_zeros(alpha, 1.0).k;
            for t in [2.0, 5.0, 22.0, 300.0, 12646.0] {
                let k = coeff_all_zeros(alpha, t).k;
                assert!(k >= last - 1e-13, "K not nondecreasing at alpha={alpha}, T={t}");
                last = k;
            }
        }
    }

    #[test]
    fn real_zero_coefficient() {
        let c = coeff_real_zeros(5.8);
        assert!(close(c.k, 0.688_103_684_596_862_2, 1e-12));
        assert!(c.k >= 0.6877 && c.k <= 0.6882);
        assert!(24.0 * c.k < 16.6);
    }

    #[test]
    fn real_zero_coefficient_clamps_for_small_alpha() {
        // both archimedean terms are negative at small α, so the max clamps
        // at zero and K reduces to (α+1)²/(2α²)
        for alpha in [1.0, 1.5] {
            let k = coeff_real_zeros(alpha).k;
            let bare = (alpha + 1.0) * (alpha + 1.0) / (2.0 * alpha * alpha);
            assert!(close(k, bare, 1e-14));
        }
    }

    #[test]
    fn no_archimedean_limits() {
        let mut last = f64::INFINITY;
        for alpha in [1.0, 10.0, 100.0, 1000.0, 2500.0] {
            let v = coeff_no_archimedean(alpha, Variant::AllZeros);
            let expect = ((alpha + 0.5) / alpha).powi(2);
            assert!(close(v, expect, 1e-14));
            assert!(v < last && v > 1.0);
            last = v;
        }
        assert!(24.0 * coeff_no_archimedean(2500.0, Variant::AllZeros) < 24.01);
        assert!(24.0 * coeff_no_archimedean(2500.0, Variant::RealZeros) < 12.01);
    }

    #[test]
    fn optimizer_matches_tabled_choice() {
        let best = optimize_alpha(1.0, Variant::AllZeros, DEFAULT_GRID_STEP);
        assert!((best.alpha - 3.07).abs() <= 0.25);
        assert!(best.c <= 35.8);
        assert!(best.certifies());
        let wide = optimize_alpha(22.0, Variant::AllZeros, DEFAULT_GRID_STEP);
        assert!(wide.c <= 42.5);
    }

    #[test]
    fn optimizer_minimality_on_grid_samples() {
        let best = optimize_alpha(8.7, Variant::AllZeros, DEFAULT_GRID_STEP);
        for alpha in [1.0, 2.0, 5.68, 5.7, 9.0, 40.0, 400.0] {
            assert!(best.k <= coeff_all_zeros(alpha, 8.7).k + 1e-12);
        }
    }

    #[test]
    fn tabled_alpha_near_optimal() {
        // the direct sweep of this is acceptance criterion 4; spot-check two
        for (t, alpha, _) in [DH_TABLE[0], DH_TABLE[5]] {
            let best = optimize_alpha(t, Variant::AllZeros, DEFAULT_GRID_STEP);
            assert!((best.alpha - alpha).abs() <= 0.25);
            assert!(coeff_all_zeros(alpha, t).k <= best.k + 2e-3);
        }
    }

    #[test]
    fn full_table_certifies() {
        let rows = verify_dh_table();
        assert_eq!(rows.len(), 13);
        for row in &rows {
            assert!(row.pass, "row T = {} failed with margin {}", row.t, row.margin);
            assert!(row.margin > 0.0);
            assert!(row.k > 1.0, "all-zeros K must exceed 1");
        }
        // frozen reference margins for the tightest and the first row
        assert!(close(rows[0].margin, 0.081_115_517, 1e-6));
        let remark = &rows[11];
        assert!((remark.t - 12.2).abs() < 1e-12);
        assert!(remark.margin > 1e-4, "remark row (12.2, 40.3) margin {}", remark.margin);
    }

    #[test]
    fn variant_rows_certify() {
        let real = verify_variant_rows(Variant::RealZeros);
        assert_eq!(real.len(), 1);
        assert!(real[0].pass && real[0].c == 16.6);
        let noarch = verify_variant_rows(Variant::NoArchimedean);
        assert_eq!(noarch.len(), 2);
        assert!(noarch.iter().all(|r| r.pass));
    }

    #[test]
    fn correction_negligible_at_large_scale() {
        // correction/𝓛 < 1e−3·K needs 𝓛 ≈ 1039 at the tightest row (T = 1);
        // certify the documented scale 1050 for every tabled row.
        let mut worst = 0.0f64;
        for (t, alpha, _) in DH_TABLE {
            let c = coeff_all_zeros(alpha, t);
            let scale = c.negligible_scale();
            worst = worst.max(scale);
            assert!(scale <= 1050.0, "T = {t}: negligibility scale {scale}");
            assert!(c.correction / 1050.0 < 1e-3 * c.k);
        }
        assert!(worst > 1000.0, "threshold sanity: worst scale {worst}");
    }

    #[test]
    fn low_lying_reference_values() {
        let nonexc: f64 = low_lying_bound(0.0784, 1.5, 2, 0.0).unwrap();
        assert!(close(nonexc, 1.116_506_944_840_837, 1e-12));
        assert!(close(nonexc, 1.1166, 1e-3));
        let small: f64 = low_lying_bound(0.0, 0.1, 2, 0.0).unwrap();
        assert!(close(small, 6.527_864_045_000_421, 1e-12));
        assert!(close(small, 6.5279, 1e-4));
    }

    #[test]
    fn low_lying_zero_limit_formula() {
        for (a, ell, eta) in [(0.1, 1, 0.0), (1.5, 2, 0.25), (0.004, 5, 1.0)] {
            let v: f64 = low_lying_bound(0.0, a, ell, eta).unwrap();
            assert!(close(v, 2.0 * PHI / a + 1.0 + eta, 1e-15));
        }
    }

    #[test]
    fn low_lying_continuous_at_zero() {
        for a in [0.1, 1.5] {
            for ell in [1u32, 2] {
                let at_zero: f64 = low_lying_bound(0.0, a, ell, 0.0).unwrap();
                let tiny: f64 = low_lying_bound(1e-7, a, ell, 0.0).unwrap();
                assert!((tiny - at_zero).abs() < 1e-5);
                // just above the series switch, the direct form must agree too
                let above: f64 = low_lying_bound(2e-6, a, ell, 0.0).unwrap();
                assert!((above - at_zero).abs() < 1e-4);
            }
        }
    }

    #[test]
    fn low_lying_domain_errors() {
        assert!(low_lying_bound(10.5, 1.0, 2, 0.0).is_err());
        assert!(low_lying_bound(-0.1, 1.0, 2, 0.0).is_err());
        assert!(low_lying_bound(1.0, 0.0, 2, 0.0).is_err());
        assert!(low_lying_bound(10.0, 1.0, 2, 0.0).is_ok());
    }
}
