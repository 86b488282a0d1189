//! Numerical laboratory for the explicit constants behind a least-prime-ideal
//! bound in the Chebotarev density theorem.
//!
//! The crate recomputes, optimizes and certifies the constants that appear in
//! the zero-repulsion (Deuring–Heilbronn) estimates for Dedekind zeta
//! functions, and empirically searches for least primes realizing Artin
//! classes in computable abelian cases.
//!
//! Module map:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`specfun`] | digamma/trigamma quantities Δ, G₁, G₂, W₁, W₂ |
//! | [`powersum`] | Turán power-sum kernel and randomized witness finder |
//! | [`weights`] | box-convolution weight f_ℓ and its Laplace transform |
//! | [`repulsion`] | coefficient of log d_L, α-optimization, (T, C) table |
//! | [`certifier`] | inequality-chain certificates for the endgame cases |
//! | [`chebsearch`] | Kronecker symbols, least-prime scans, survey |
//!
//! All floating-point kernels are generic over [`FloatScalar`]; the search,
//! certificate and reporting layers work with the concrete [`Scalar`] alias.

use core::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

pub mod certifier;
pub mod chebsearch;
pub mod checks;
pub mod powersum;
pub mod repulsion;
pub mod specfun;
pub mod weights;

/// Floating-point scalar the numeric kernels are generic over (f32 or f64).
///
/// Tolerances quoted on individual operations assume at least 15 significant
/// decimal digits, i.e. `f64`; `f32` instantiations compile and run but only
/// reach single precision.
pub trait FloatScalar: Float + FloatConst + FromPrimitive + Debug + Display + 'static {
    /// Shorthand for lossy conversion from an `f64` constant.
    #[inline]
    fn c(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant converts to any float scalar")
    }
}

impl<T> FloatScalar for T where T: Float + FloatConst + FromPrimitive + Debug + Display + 'static {}

/// Default scalar for the command-line tools, certificates and tests.
pub type Scalar = f64;

/// Complex number over the default scalar.
pub type ComplexScalar = num_complex::Complex<Scalar>;
