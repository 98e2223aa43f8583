//! Numerical toolkit for the Steklov spectrum of symbols on the unit circle.
//!
//! A smooth positive function `a` on the circle determines the operator aΛ,
//! where Λ is the Dirichlet-to-Neumann operator of the unit disk; its
//! eigenvalues form the Steklov spectrum of `a`. This crate computes that
//! spectrum, the zeta-invariants Z_m(a) = Tr[(aΛ)^{2m} - (aD)^{2m}], the
//! lower-bound machinery certifying Z_m ≥ c_m Σ n^{2m+1}|(a^m)^_n|², the
//! conformal gauge normalization b̂_1 = 0, and the reconstruction of a planar
//! domain boundary from its boundary symbol.
//!
//! Modules:
//! - [`fourier`]: coefficient arithmetic and the multipliers Λ, D, H, Λ^{1/2};
//! - [`wordtrace`]: exact traces of words in {L, H} against (LH)^{2m}, the
//!   zeta-invariants, Edward's Z_1 formula and the function φ(ℓ);
//! - [`bounds`]: f_s recurrence, g_n coefficients, Gram matrices F_j and the
//!   constant c_m with the full inequality chain;
//! - [`gauge`]: Möbius pullbacks of symbols and the b̂_1 = 0 normalization;
//! - [`spectral`]: truncated symmetric Steklov eigenproblems;
//! - [`geometry`]: symbol ↔ boundary-map pipeline and curve export;
//! - [`oplab`]: the exactly solvable finite-rank operator family;
//! - [`verify`]: the acceptance suite behind `steklov verify`.

pub mod bounds;
pub mod error;
pub mod fourier;
pub mod gauge;
pub mod geometry;
pub mod io;
pub mod oplab;
pub mod spectral;
pub mod verify;
pub mod wordtrace;

pub use error::{Error, Result};
pub use fourier::{FourierSeries, Multiplier, SobolevIndex};
