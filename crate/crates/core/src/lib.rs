//! Decision procedures for transverse contact structures and transverse
//! foliations on oriented Seifert fibered 3-manifolds.
//!
//! Everything is exact. The numeric core is generic over the integer type
//! through [`Int`]; rationals are [`num_rational::Ratio`] over that integer.
//! Arbitrary precision ([`BigInt`]) is the default instantiation, and `i64`
//! is available for fast bounded sweeps.
//!
//! Layout:
//!
//! - [`exact_cf`]: negative and positive continued fractions, the duality
//!   `1/ρ + 1/ρ' = 1`, point diagrams and the lexicographic order.
//! - [`seifert`]: Seifert invariants, normalization, orientation reversal and
//!   the derived invariants `e`, `e₀`, `Γ`, `χ`.
//! - [`realizability`]: the brute-force realizability search and its
//!   certificate checker.
//! - [`plumbing`]: star-shaped plumbing graphs, blow-downs, the adjunction
//!   check and the intersection form.
//! - [`blowdown_route`]: the blow-down / adjunction decision route for the
//!   `g = 0`, `e₀ = -1`, `r ≥ 3` subcase.
//! - [`decide`]: top-level decisions for contact structures, foliations and
//!   circle-invariant contact structures.
//! - [`enumeration`] and [`consistency`]: finite families and the sweeps
//!   that cross-check the modules above against each other.

pub mod blowdown_route;
pub mod consistency;
pub mod decide;
pub mod enumeration;
pub mod error;
pub mod exact_cf;
pub mod plumbing;
pub mod realizability;
pub mod scalar;
pub mod seifert;

pub use error::{Error, Result};
pub use scalar::Int;

pub use num_bigint::BigInt;

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::Ratio<BigInt>;
/// Exact rational over `i64`, for bounded enumerations.
pub type Rational64 = num_rational::Ratio<i64>;

pub type NegCF = exact_cf::NegCF<BigInt>;
pub type PosCF = exact_cf::PosCF<BigInt>;
pub type SeifertData = seifert::SeifertData<BigInt>;
pub type NormalizedSeifert = seifert::NormalizedSeifert<BigInt>;
pub type GammaVector = seifert::GammaVector<BigInt>;
pub type RealizabilityCertificate = realizability::RealizabilityCertificate<BigInt>;
pub type PlumbingGraph = plumbing::PlumbingGraph<BigInt>;
pub type SurfaceClass = plumbing::SurfaceClass<BigInt>;
pub type IterationInput = blowdown_route::IterationInput<BigInt>;
pub type BlowdownState = blowdown_route::BlowdownState<BigInt>;
pub type RouteVerdict = blowdown_route::RouteVerdict<BigInt>;
pub type Decision = decide::Decision<BigInt>;

pub type SeifertData64 = seifert::SeifertData<i64>;
pub type GammaVector64 = seifert::GammaVector<i64>;
