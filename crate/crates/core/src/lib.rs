//! Toric posets: flip classes of acyclic orientations and their combinatorics.

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod filters;
pub mod fixtures;
pub mod flipclass;
pub mod geom;
pub mod graph;
pub mod io;
pub mod morph;
pub mod poset;
pub mod toric;
pub mod vset;

pub use error::{Error, Result};
pub use flipclass::{flip_class, torically_equivalent, FlipClass};
pub use graph::{Graph, Orientation, SetPartition};
pub use poset::Poset;
pub use toric::{CyclicWord, ToricPoset};
pub use vset::VertexSet;
