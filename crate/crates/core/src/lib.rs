//! Exact-arithmetic double bialgebras of graphs and oriented graphs.
//!
//! The algebra is the free commutative algebra on connected graphs, with two
//! coproducts: a bipartition coproduct Δ (over vertex subsets, or over ideals
//! in the oriented case) and a contraction-extraction coproduct δ (over set
//! partitions whose blocks induce connected subgraphs). Characters carry two
//! convolutions, one per coproduct, and the Hopf antipode of Δ has a closed
//! form as a signed sum over totally acyclic partial orientations.
//!
//! On top of that sit the classical polynomial invariants: chromatic,
//! Fortuin-Kasteleyn, rank-generating and Tutte, with exact `BigRational`
//! coefficients throughout, plus coloring- and orientation-counting oracles
//! used by the verification suites in [`verify`].
//!
//! Everything is sized for exhaustive checks over all isomorphism classes of
//! small graphs (seven vertices and below); vertex sets are machine-word
//! bitmasks and isomorphism classes are identified by canonical keys.

#![forbid(unsafe_code)]

pub mod canon;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod hopf;
pub mod invariants;
pub mod poly;
pub mod verify;

pub use canon::CanonicalKey;
pub use error::{Error, Result};
pub use graph::{MixedGraph, Multigraph, OrientedGraph, SetPartition, SimpleGraph};
pub use hopf::{Character, GraphSum, PolyMorphism, TensorSum};
pub use poly::{BiPoly, UniPoly};
