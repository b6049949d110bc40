//! Symbolic engine for Lefschetz profiles, chessboard regions and the
//! mutation bookkeeping behind projective dual pairs.

pub mod chessboard;
pub mod io;
pub mod profile;
pub mod prover;
pub mod render;
pub mod scalar;
pub mod synthesis;
pub mod symbols;

pub use chessboard::{BoxOracle, BoxRule, BoxSymbol, ChessError, ChessboardSpec, Region};
pub use profile::{LefschetzProfile, Orientation, PrimitiveBlock, ProfileError, ValidationReport};
pub use scalar::{BigRational, EulerInt, Rational};
pub use symbols::{FactorKind, FactorOracle, FactorSymbol, Side, SymbolError, TriState};

/// Profile over machine integers.
pub type Profile = LefschetzProfile<i64>;
/// Profile over arbitrary-precision integers.
pub type BigProfile = LefschetzProfile<num_bigint::BigInt>;
