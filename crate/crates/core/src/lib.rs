//! Stabilizer dimension of multiqubit graph states.
//!
//! The local-unitary stabilizer of a connected graph state is generated by
//! three kinds of vertex pairs in its graph:
//!
//! - **twin**: non-adjacent vertices with equal neighbourhoods, giving `X(a) - X(b)`;
//! - **leaf**: a degree-one vertex `a` with its neighbour `b`, giving `X(a) - Z(b)`;
//! - **closed twin**: adjacent vertices with equal closed neighbourhoods, giving `Y(a) - Y(b)`.
//!
//! [`config`] detects these pairs and ranks the generators they induce.
//! [`stabilizer`] independently enumerates the stabilizer elements of support
//! at most two and computes the GF(2) rank of their exponent vectors (`g2`).
//! [`oracle`] builds the graph state exactly over the Gaussian integers and
//! solves the local Lie-algebra annihilation system with fraction-free integer
//! elimination, and [`theorem`] ties the three together.
//!
//! ```
//! use stabdim::{config, graph::{generate, Family}, oracle, stabilizer};
//!
//! let star = generate(Family::Star, 7, 0.0, 0).unwrap();
//! assert_eq!(config::stabilizer_dimension(&star).unwrap(), 6);
//! assert_eq!(oracle::local_algebra_nullity(&star).unwrap(), 6);
//!
//! let elems = stabilizer::low_weight_elements(&star, stabilizer::Mode::Brute).unwrap();
//! assert_eq!(stabilizer::g2_rank(elems.iter().map(|e| &e.exponents)), 6);
//! ```

pub mod bits;
pub mod config;
pub mod error;
pub mod exact;
pub mod gf2;
pub mod graph;
pub mod oracle;
pub mod par;
pub mod pauli;
pub mod rng;
pub mod stabilizer;
pub mod theorem;

pub use bits::BitRow;
pub use config::{Configuration, ConfigurationKind, Slot, SlotPair};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use oracle::{CoefficientVector, ExactStateVector};
pub use par::Strategy;
pub use pauli::{Axis, PauliString};
pub use stabilizer::{ExponentVector, LowWeightElement};
pub use theorem::EquivalenceReport;
