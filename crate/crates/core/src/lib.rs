//! Cut ideals of graphs and the machinery around them.

pub mod arith;
pub mod binomial;
pub mod clique_sum;
pub mod cut;
pub mod error;
pub mod graph;
pub mod partition;
pub mod polytope;
pub mod registry;
pub mod stat;
pub mod table1;
pub mod toric;

pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::Partition;
pub use binomial::Binomial;
pub use cut::{exponent_matrix, ExponentMatrix, VariableSet};
