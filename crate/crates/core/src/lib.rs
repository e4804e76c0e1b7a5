//! Signatures of invariant hermitian forms on finite-dimensional irreducible
//! representations of real reductive Lie groups, in exact arithmetic.

pub mod error;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod realform;
pub mod rootsys;
pub mod sigformula;

pub use error::{Error, ErrorClass, Result};
pub use rational::Rational;
pub use realform::{parse_group, RealFormData, VoganDiagram};
pub use rootsys::{build_root_system, CartanType, RootSystem, Weight, WeylElement};
pub use sigformula::{signature, SignatureReport, W1Row};
