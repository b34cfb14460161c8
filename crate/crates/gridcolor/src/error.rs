use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("grid needs at least one dimension")]
    EmptyDims,
    #[error("dimension {axis} is zero; every side must be at least 1")]
    ZeroDim { axis: usize },
    #[error("coordinate has {got} components, grid has {expected} dimensions")]
    CoordLength { expected: usize, got: usize },
    #[error("coordinate component {axis} is {got}, valid range is 1..={max}")]
    CoordRange { axis: usize, got: usize, max: usize },
    #[error("cell count {got} does not match grid size {expected}")]
    CellCount { expected: usize, got: usize },
    #[error("color 0 is not a color; empty cells are represented as absent")]
    ZeroColor,
    #[error("{name} must be at least {min}, got {got}")]
    TooSmall {
        name: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{name} must be {expected}, got {got}")]
    ParityMismatch {
        name: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("start vertex {start} is not in 1..={q}")]
    StartOutOfRange { start: u32, q: u32 },
    #[error("max degree must be at least 1")]
    ZeroDegree,
    #[error("remainder pair set is over {got} colors, expected {expected}")]
    RemainderMismatch { expected: u32, got: u32 },
    #[error("pair ({a},{b}) is not a pair of distinct colors in 1..={k}")]
    BadPair { a: u32, b: u32, k: u32 },
    #[error("operation requires a 2-dimensional coloring, got {got} dimensions")]
    NotTwoDimensional { got: usize },
    #[error("strip pasting violates k*m1 <= m2: {strips}*{source_rows} > {target_rows}")]
    PasteRows {
        strips: usize,
        source_rows: usize,
        target_rows: usize,
    },
    #[error(
        "strip pasting violates n1+(k-1) <= k*n2: {source_cols}+{strips}-1 > {strips}*{target_cols}"
    )]
    PasteCols {
        strips: usize,
        source_cols: usize,
        target_cols: usize,
    },
    #[error("embedding exceeds host bounds on axis {axis}: {end} > {max}")]
    EmbedOutOfBounds { axis: usize, end: usize, max: usize },
    #[error("embedding writes color {new} over different color {existing} at cell {cell:?}")]
    EmbedConflict {
        cell: Vec<usize>,
        existing: u32,
        new: u32,
    },
    #[error("path with {vertices} vertices does not fit region of {capacity} cells")]
    PathTooLong { vertices: usize, capacity: usize },
    #[error("no {k}-complete proper coloring of a path with {n} edges exists")]
    PathColorsInfeasible { k: u32, n: usize },
    #[error("paste pipeline requires n >= 20, got {n}; use the search method below that")]
    PipelineTooSmall { n: usize },
    #[error("cannot render a {got}-dimensional coloring as {format}; pick a layer with --slice")]
    NotRenderable { got: usize, format: &'static str },
    #[error("slice layer {layer} is not in 1..={max}")]
    SliceOutOfRange { layer: usize, max: usize },
    // the serde source carries the line/column location
    #[error("coloring file is malformed")]
    Malformed(#[from] serde_json::Error),
}
