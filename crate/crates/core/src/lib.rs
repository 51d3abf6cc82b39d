//! Algorithms for even-hole-free graphs and the wider class of
//! (C4, theta, prism, even wheel)-free graphs: structure detection, vertex
//! connectivity, tree decompositions and solvers on them.

pub mod connectivity;
pub mod error;
pub mod graph;
pub mod hubpart;
pub mod io;
pub mod search;
pub mod solvers;
pub mod structures;
pub mod treedec;
pub mod weights;

pub use error::{Error, Result};
pub use graph::{Graph, Path, VertexSet};
pub use search::{Budget, Outcome};
pub use treedec::TreeDecomposition;
pub use weights::{Rational, WeightFunction};
