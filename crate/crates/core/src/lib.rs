//! Locally Lorentz invariant polynomial entanglement indicators for the
//! spinor degrees of freedom of two and three Dirac particles.
//!
//! The crate provides the Dirac gamma algebra, the spinor representation of
//! the proper orthochronous Lorentz group, the four invariant bilinear and
//! sesquilinear forms, a tensor sandwich contraction engine with a small
//! pattern language, the full catalog of named invariant polynomials, their
//! non-relativistic reduction oracles, weight-polytope balancedness analysis,
//! and momentum-eigenstate Dirac time evolution.
//!
//! The numerical core is generic over the real scalar type (f32 or f64)
//! through [`scalar::Real`]; the concrete aliases below fix f64, which is what
//! the catalog, analysis and dynamics layers use throughout.

pub mod analysis;
pub mod catalog;
pub mod checks;
pub mod dynamics;
pub mod engine;
pub mod forms;
pub mod gamma;
pub mod lorentz;
pub mod mat4;
pub mod nr;
pub mod scalar;
pub mod spinor;
pub mod state;

/// 4x4 complex matrix over f64.
pub type Mat4 = mat4::Mat4<f64>;
/// 4-component complex spinor over f64.
pub type Spinor = spinor::Spinor<f64>;
/// n-particle state tensor over f64.
pub type StateTensor = state::StateTensor<f64>;
/// Complex scalar over f64.
pub type C64 = num_complex::Complex64;
