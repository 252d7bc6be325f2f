//! Acyclic b-colorings of cubic graphs: exact solvers, explicit
//! constructions, graph families and a graph6 codec.

pub mod coloring;
pub mod constructions;
pub mod families;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod solver;

pub use coloring::{Color, Coloring, ColoringError};
pub use families::{FamilyError, NamedGraph};
pub use graph::{Girth, Graph, GraphError, Vertex};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use solver::{SearchBudget, SolveError};
