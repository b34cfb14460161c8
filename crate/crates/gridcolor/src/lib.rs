//! Complete colorings of grid graphs.
//!
//! A coloring of a graph with colors `1..=k` is *complete* if every pair of
//! distinct colors appears on the endpoints of at least one edge. This crate
//! works with rectangular grids and their d-dimensional generalizations:
//! vertices are integer lattice cells, edges join cells at L1 distance 1.
//!
//! The pieces fit together like this:
//!
//! * [`grid`] / [`coloring`] / [`pairs`] / [`verify`]: the graph model,
//!   partial colorings, realized pair sets, and the verifier that everything
//!   else is judged against.
//! * [`bounds`]: exact counting upper bounds for the largest complete
//!   coloring a grid can carry.
//! * [`paths`]: optimal complete proper colorings of paths, built from
//!   Eulerian circuits of complete graphs, plus the extension-path gadget.
//! * [`blocks`]: long rectangular building blocks (Roichman rectangles and
//!   their modified form, two-ribbons) with many-color complete colorings.
//! * [`assembly`]: copy-and-paste of blocks into larger grids, and the full
//!   pipeline that colors the n×n grid with 2n−O(1) colors.
//! * [`search`]: exhaustive backtracking with certificates, plus simulated
//!   annealing for witnesses beyond exhaustive reach.
//! * [`interchange`] / [`render`]: the JSON file format and ascii/svg output.

pub mod assembly;
pub mod blocks;
pub mod bounds;
pub mod coloring;
pub mod error;
pub mod grid;
pub mod interchange;
pub mod pairs;
pub mod paths;
pub mod render;
pub mod search;
pub mod verify;

pub use coloring::PartialColoring;
pub use error::Error;
pub use grid::GridGraph;
pub use pairs::PairSet;
pub use verify::{verify, VerificationReport};

pub type Result<T> = std::result::Result<T, Error>;
