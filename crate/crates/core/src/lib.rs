//! Exact packing chromatic numbers, packing-chromatic criticality, and
//! structural checks for small graphs and cactus families.

pub mod bits;
pub mod blocks;
pub mod canon;
pub mod classify;
pub mod criticality;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod independence;
pub mod io;
pub mod iso;
pub mod metric;
pub mod packing;
pub mod verify;

pub use error::{GraphError, Result};
pub use graph::Graph;
pub use metric::DistanceMatrix;
