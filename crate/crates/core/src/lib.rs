//! Web diagrams, web worlds, and their exact colouring and mixing matrices.
//!
//! A web diagram is a set of edges `(x, y, a, b)` joining peg `x` at height `a` to peg `y`
//! at height `b`. Its web world is the orbit under independent height permutations on every
//! peg. For each world this crate computes the polynomial colouring matrix `M(x)` and the
//! rational mixing matrix `R`, checks their structure, and evaluates the closed forms for
//! the poset description of diagonal entries, the counting of worlds, and three families of
//! worlds with explicit answers.

pub mod cases;
pub mod colouring;
pub mod diagram;
pub mod enumeration;
pub mod error;
pub mod json;
pub mod matrices;
pub mod numbers;
pub mod poly;
pub mod posets;
pub mod transitive;
pub mod verify;
pub mod world;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use cases::{Minimal, SignCode, Variant};
pub use colouring::{Colouring, Reconstructor, SurjectiveColourings};
pub use diagram::{Edge, WebDiagram};
pub use enumeration::{RepresentMatrix, WDMatrix, WebGraph};
pub use error::{Error, Result};
pub use matrices::WorldMatrix;
pub use poly::IntPolynomial;
pub use posets::{Block, DecompositionPoset, LinearExtension, Poset};
pub use transitive::CoreMatrix;
pub use world::{Limits, PegPermutationFamily, WebWorld};
