//! Exact symbolic computation for the queer Lie superalgebra Q(n), its
//! finite W-algebras, and the associated super-Yangian.
//!
//! Everything is computed over exact rationals in PBW normal form: no
//! floating point, no Groebner bases, no randomness in the results. The
//! crate provides
//!
//! - the enveloping algebra of Q(n) with straightening-based arithmetic
//!   and an independent matrix-representation oracle,
//! - the principal-nilpotent W-algebra setup for equal block sizes l | n:
//!   quotient projection, invariance testing, distinguished generators,
//!   top symbols, and the Harish-Chandra style projection onto the
//!   weight-zero subalgebra,
//! - the super-Yangian of Q(n/l): free generator words, coproducts,
//!   the antipode, and the evaluation/composite maps into tensor powers
//!   of the enveloping algebra, and
//! - a suite of identity checks tying the two sides together, exposed for
//!   the `verify` command-line tool.

// Exponent parities decide signs everywhere below; the `% 2` spelling
// keeps those branches aligned with the (-1)^k notation they implement.
#![allow(clippy::manual_is_multiple_of)]

pub mod checks;
pub mod context;
pub mod element;
pub mod generator;
pub mod matrix;
pub mod monomial;
pub mod scalar;
pub mod tensor;
pub mod walgebra;
pub mod yangian;

pub use checks::{CheckKind, CheckResult, CheckStatus, Report, SuiteConfig, Summary, Witness};
pub use context::{AlgebraError, Context};
pub use element::UElement;
pub use generator::{GenKind, Generator};
pub use monomial::Monomial;
pub use scalar::Scalar;
pub use tensor::TensorElement;
pub use walgebra::{SymbolElement, WSetup};
pub use yangian::{TSymbol, YElement, YTensorElement, YWord};
